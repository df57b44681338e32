#pragma once

// Desk-scale audits of the classical finiteness conditions: the witness
// subspace spanned by 1, the entries of A and B and their cross products;
// the counting argument m * dim core > n * dim V against split identities
// A B = I with m > n; stable finiteness of matrices over a field; and the
// commutator rank bound rank(TS - ST) <= 2 (l - dim Fix(TS)).

#include <cstddef>
#include <optional>

#include <gmpxx.h>

#include "afd/almostrep.hpp"
#include "afd/carrier.hpp"
#include "afd/exactlin.hpp"
#include "afd/folner.hpp"

namespace afd::pathology {

// Span of {1} + entries(A) + entries(B) + {x*y : x entry of A, y entry of B};
// A must be m x n and B n x m.
folner::FinSubspace witness_subspace(const carrier::Carrier& c,
                                     const carrier::ElementMatrix& a,
                                     const carrier::ElementMatrix& b);

struct RankAudit {
  std::size_t m = 0, n = 0;
  std::size_t v_dim = 0, core_dim = 0;
  std::size_t lhs = 0;  // m * core_dim
  std::size_t rhs = 0;  // n * v_dim
  bool contradiction = false;  // lhs > rhs: no exact AB = I is compatible
  std::size_t rank_psi_a = 0, rank_psi_b = 0, rank_product = 0;
  bool range_bound_ok = false;  // rank(psi(A) psi(B)) <= n * v_dim, always true
  // engaged when AB = I holds in the carrier and all entry products are
  // certified by the table: dim Fix(psi(A) psi(B)) >= m * core_dim
  std::optional<std::size_t> fixed_dim;
  bool ab_identity_in_carrier = false;
};

// The counting audit; requires m > n >= 1 and entries inside the
// representation's L.
RankAudit rank_condition_audit(const almostrep::AlmostRep& rep,
                               const carrier::ElementMatrix& a,
                               const carrier::ElementMatrix& b);

struct StableCheckReport {
  bool ab_identity = false;
  bool ba_identity = false;
  std::size_t rank_commutator = 0;  // rank(AB - BA)
  bool implication_ok = false;      // AB = I implies BA = I (fields)
};

StableCheckReport finite_stable_check(const exactlin::Mat& a, const exactlin::Mat& b);

struct CommutatorReport {
  std::size_t l = 0;
  std::size_t fixed_dim = 0;   // dim {v : TS v = v}
  std::size_t epsilon_l = 0;   // l - fixed_dim
  std::size_t rank_commutator = 0;
  std::size_t bound = 0;       // 2 * epsilon_l
  bool pass = false;
};

// rank(TS - ST) <= 2 (l - dim Fix(TS)); an unconditional lemma, so pass is
// always expected.
CommutatorReport commutator_bound_check(const exactlin::Mat& t, const exactlin::Mat& s);

struct RrIdealReport {
  std::size_t rank_p = 0, v_dim = 0, rank_ap = 0;
  mpq_class eps;
  mpq_class bound;  // rank_p + eps * v_dim
  bool pass = false;
};

// rank(psi(ap)) <= rank(psi(p)) + eps * dim V, the mechanism behind the
// ideal property of the rank radical.
RrIdealReport rr_ideal_bound(std::size_t rank_p, std::size_t v_dim, const mpq_class& eps,
                             std::size_t rank_ap);

}  // namespace afd::pathology
