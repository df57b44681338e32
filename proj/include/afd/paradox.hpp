#pragma once

// Paradoxical pairs on graph windows: two bounded-displacement injections
// phi_1, phi_2 with disjoint images, found by deterministic augmenting-path
// bipartite matching (two tagged copies of the window interior against the
// window vertices, edges where d_G <= K). The 0/1 matrices A, B with
// A(x,y) = 1 iff x = phi_1(y) satisfy, exactly and on the matched region,
//   A^T A = I,  B^T B = I,  A A^T + B B^T = I,  A^T B = B^T A = 0,
// and assemble into the non-IBN witness W = [A, B], U = [A^T; B^T] with
// W U = I_1 and U W = I_2.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "afd/carrier.hpp"
#include "afd/exactlin.hpp"
#include "afd/graph.hpp"

namespace afd::graphlab {

struct ParadoxicalPair {
  GraphPtr graph;
  int displacement_bound = 1;  // K
  std::vector<int> interior;   // interior(K), the doubled region
  // phi maps: -1 where undefined; defined exactly on `domain`
  std::vector<int> phi1, phi2;
  std::vector<int> domain;  // vertices with both copies matched, sorted
  std::vector<int> v1, v2;  // images of phi1 / phi2, sorted, disjoint
  // unmatched left nodes as (copy, vertex), copy in {1, 2}
  std::vector<std::pair<int, int>> unmatched;
  bool success = false;  // every interior copy matched
  mpq_class normalized_deficiency;  // deficiency / |interior|

  std::size_t deficiency() const { return unmatched.size(); }
  std::vector<int> matched_region() const;  // v1 union v2, sorted

  // 0/1 matrices over the window, A(x,y) = 1 iff x = phi1(y).
  exactlin::Mat matrix_a(const exactlin::Field& f) const;
  exactlin::Mat matrix_b(const exactlin::Field& f) const;
  // The same matrices as translation-algebra elements.
  carrier::AlgebraElement element_a(const carrier::Carrier& c) const;
  carrier::AlgebraElement element_b(const carrier::Carrier& c) const;
};

// Solves the doubling matching at displacement bound K >= 1. Left nodes are
// processed center-first, so unmatched nodes concentrate at the window
// boundary whenever a doubling of the interior exists. Throws on an empty
// graph; an amenable window simply yields success = false with a positive
// deficiency.
ParadoxicalPair paradoxical_pair(const GraphPtr& g, int K);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::vector<std::pair<int, int>> violations;  // offending index pairs
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool empty_region = false;
  // which transposition convention the identities hold under: "AtA=I" for
  // A^T A = I / A A^T + B B^T = I, "AAt=I" for A A^T = I / A^T A + B^T B = I,
  // "both", or "neither"
  std::string orientation;
  bool all_pass() const;
};

// Exact identity checks restricted to the matched region.
IdentityReport verify_pair(const ParadoxicalPair& p, const exactlin::Field& f);

struct NonIbnWitness {
  carrier::ElementMatrix u;  // 2 x 1: [A^T; B^T]
  carrier::ElementMatrix w;  // 1 x 2: [A, B]
  bool wu_is_identity = false;  // W U = 1 restricted to the matched region
  bool uw_is_identity = false;  // U W = I_2 restricted to the domain
  std::size_t domain_size = 0;
  std::size_t matched_region_size = 0;
};

// Builds the Cohn class I witness (m = 1, n = 2) over the translation
// algebra of the window; requires a successful pair whose identities verify,
// otherwise throws.
NonIbnWitness non_ibn_witness(const ParadoxicalPair& p, const exactlin::Field& f);

}  // namespace afd::graphlab
