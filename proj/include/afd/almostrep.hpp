#pragma once

// Almost-representations: unital linear maps from a finite-dimensional
// subspace L (1 in L) into End(V) that are exactly multiplicative on a
// certified core subspace of V. Built from Foelner subspaces, amplified to
// n x n matrix levels, tensored, and applied to matrices over L.
//
// Multiplicativity is certified over the multiplication table of L's echelon
// basis: all ordered basis pairs whose product falls back into L. Amplified
// and tensored representations live over Mat_n(L) and L (x) L', which are not
// subspaces of the original carrier; such representations keep the table,
// images and core but have no carrier-backed domain, so apply_matrix and
// element reduction are only available on carrier-backed representations.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "afd/carrier.hpp"
#include "afd/exactlin.hpp"
#include "afd/folner.hpp"

namespace afd::almostrep {

struct MultTriple {
  std::size_t i, j;                     // echelon-basis indices of the factors
  std::vector<exactlin::Scalar> coeffs;  // expansion of basis_i * basis_j in L
};
using MultTable = std::vector<MultTriple>;

// All ordered basis pairs (i, j) with basis_i * basis_j in L; requires 1 in L.
MultTable mult_table(const folner::FinSubspace& L);

struct AlmostRep {
  std::optional<folner::FinSubspace> domain;  // engaged iff L is a carrier subspace
  std::vector<std::string> basis_labels;      // one per L-basis element
  std::vector<exactlin::Scalar> unit_coeffs;  // expansion of 1 in the L-basis
  std::size_t v_dim = 0;
  std::vector<exactlin::Mat> images;  // one V x V matrix per L-basis element
  // columns span the multiplicative core
  exactlin::Mat core = exactlin::Mat(exactlin::Field::gfp(exactlin::kDefaultPrime), 0, 0);
  mpq_class defect;                   // (dim V - dim core) / dim V, exact
  MultTable table;
  exactlin::Field field = exactlin::Field::gfp(exactlin::kDefaultPrime);

  std::size_t l_dim() const { return images.size(); }
  std::size_t core_dim() const { return core.cols(); }

  // Linear extension of the basis images.
  exactlin::Mat image_of(const std::vector<exactlin::Scalar>& coeffs) const;
  // psi(a) for a in L; requires a carrier-backed domain and a in L.
  exactlin::Mat psi(const carrier::AlgebraElement& a) const;
};

// Per-build diagnostics: the ambient space LQ, the coordinate projection onto
// Q along the canonical complement, and the multiplication operators
// m_x : Q -> LQ, all in echelon coordinates.
struct FolnerRepBuild {
  std::optional<folner::FinSubspace> ambient_space;  // LQ
  // (dim LQ) x (dim LQ), idempotent
  exactlin::Mat projection = exactlin::Mat(exactlin::Field::gfp(exactlin::kDefaultPrime), 0, 0);
  std::vector<exactlin::Mat> mult_ops;  // one (dim LQ) x (dim Q) per L-basis element

  const folner::FinSubspace& ambient() const { return *ambient_space; }
};

// The Foelner construction: V = Q, psi(x) = P o m_x, core = the intersection
// over L's basis of Ker(m_x - P m_x) computed inside Q.
AlmostRep build_from_folner(const folner::FinSubspace& L, const folner::FinSubspace& Q,
                            FolnerRepBuild* build_out = nullptr);

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckEntry> checks;
  std::size_t maximal_core_dim = 0;  // dim of V* = the largest table-multiplicative subspace
  mpq_class maximal_defect;
  bool all_pass() const;
};

// Recomputes the maximal multiplicative core V* from the table and reports
// the unit condition, core independence and stored-core containment.
VerificationReport verify(const AlmostRep& rep);

// Mat_n amplification: basis (row, col, L-basis element) in row-major order,
// block images, core = core^n stacked blockwise; the defect ratio is
// preserved.
AlmostRep amplify(const AlmostRep& rep, std::size_t n);

// Tensor product: basis pairs, Kronecker images, core = core_A (x) core_B;
// 1 - defect' = (1 - defect_A)(1 - defect_B).
AlmostRep tensor(const AlmostRep& a, const AlmostRep& b);

// Blockwise psi of a matrix over L: block (i, j) = psi(M_ij). Every entry
// must reduce into L.
exactlin::Mat apply_matrix(const AlmostRep& rep, const carrier::ElementMatrix& m);

}  // namespace afd::almostrep
