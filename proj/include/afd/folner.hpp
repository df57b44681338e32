#pragma once

// Finite-dimensional subspaces of a carrier kept in fully reduced echelon
// form (strictly decreasing distinct leading words), product spaces BQ, and
// exact Foelner ratios (dim BQ - dim Q) / dim Q along canonical exhaustions.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "afd/carrier.hpp"

namespace afd::folner {

struct Reduction {
  carrier::AlgebraElement remainder;
  std::vector<exactlin::Scalar> coeffs;  // aligned with the echelon basis
  bool in_span() const { return remainder.is_zero(); }
};

class FinSubspace {
 public:
  static FinSubspace span(const carrier::Carrier& c,
                          const std::vector<carrier::AlgebraElement>& gens);
  static FinSubspace span_words(const carrier::Carrier& c,
                                const std::vector<carrier::BasisWord>& words);

  const carrier::Carrier& carrier() const { return carrier_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<carrier::AlgebraElement>& basis() const { return basis_; }
  bool contains_one() const { return contains_one_; }

  // Full reduction against the echelon basis, with expansion coefficients;
  // membership holds iff the remainder is zero.
  Reduction reduce(const carrier::AlgebraElement& a) const;
  bool contains(const carrier::AlgebraElement& a) const { return reduce(a).in_span(); }

  bool same_space(const FinSubspace& o) const;

 private:
  explicit FinSubspace(const carrier::Carrier& c) : carrier_(c) {}
  void insert(carrier::AlgebraElement a);

  carrier::Carrier carrier_;
  std::vector<carrier::AlgebraElement> basis_;  // decreasing leading words
  bool contains_one_ = false;
};

// Span of all pairwise products basis(B) x basis(Q); contains Q when 1 is
// in B.
FinSubspace product_space(const FinSubspace& B, const FinSubspace& Q);

struct FolnerCertificate {
  int n = 0;  // exhaustion index when produced by a scan
  std::size_t dim_B = 0;
  std::size_t dim_Q = 0;
  std::size_t dim_BQ = 0;
  mpq_class ratio;  // (dim BQ - dim Q) / dim Q, exact
};

// Exact Foelner ratio; requires dim Q >= 1 and 1 in B.
FolnerCertificate folner_ratio(const FinSubspace& B, const FinSubspace& Q);

struct ExhaustionSpec {
  enum class Type { Ball, Box, Length };
  Type type = Type::Ball;
  std::optional<std::string> center;  // element literal for group/free kinds,
                                      // vertex id for translation carriers

  static ExhaustionSpec ball() { return {}; }
  static ExhaustionSpec parse(const std::string& text);  // "ball" | "box" | "length"
  std::string to_string() const;
  bool operator==(const ExhaustionSpec& o) const = default;
};

// Q_n of the canonical exhaustion: word-metric balls for group algebras, the
// length filtration for the free algebra, BFS-ball column spaces for
// translation algebras, boxes {0..n-1}^d for Z^d.
FinSubspace exhaustion_subspace(const carrier::Carrier& c, const ExhaustionSpec& spec, int n);

std::vector<FolnerCertificate> folner_scan(const carrier::Carrier& c, const FinSubspace& B,
                                           const ExhaustionSpec& spec, int n_max);

}  // namespace afd::folner
