#pragma once

// Finitely supported elements of the algebras the library works in, over a
// canonical basis with an effective multiplication oracle per carrier kind:
//   - group algebra k[Z^d]        (basis: exponent vectors)
//   - free group algebra k[F_r]   (basis: reduced words)
//   - free associative algebra    (basis: words over the alphabet)
//   - translation algebra of a finite graph window (basis: matrix units
//     E[x,y] over vertex pairs)
// Basis words carry a total order (shortlex, ties by generator index; vertex
// pairs lexicographic) used everywhere leading terms are needed.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "afd/exactlin.hpp"
#include "afd/graph.hpp"

namespace afd::carrier {

enum class CarrierKind { GroupZd, FreeGroup, FreeAlgebra, Translation };

std::string kind_name(CarrierKind k);

class BasisWord {
 public:
  // exponent vector, e.g. t1^2 * t2^-1 -> {2, -1}
  static BasisWord zd(std::vector<long long> exponents);
  // signed letters, +g for generator g (1-based), -g for its inverse;
  // must be freely reduced
  static BasisWord free_group(std::vector<int> letters);
  // letters in [0, rank)
  static BasisWord free_algebra(std::vector<int> letters);
  // matrix unit E[x,y]
  static BasisWord unit_pair(int x, int y);

  CarrierKind kind() const { return kind_; }
  const std::vector<long long>& data() const { return data_; }
  bool is_identity_word() const;  // empty word / zero exponent vector
  long long length() const;      // shortlex length (l1 norm for Z^d)
  int pair_x() const;
  int pair_y() const;

  bool operator==(const BasisWord& o) const = default;
  bool operator<(const BasisWord& o) const;  // the canonical total order

 private:
  BasisWord(CarrierKind k, std::vector<long long> d) : kind_(k), data_(std::move(d)) {}
  CarrierKind kind_;
  std::vector<long long> data_;
};

// Finite linear combination of basis words; no zero coefficients stored,
// equality is support equality.
class AlgebraElement {
 public:
  explicit AlgebraElement(const exactlin::Field& f) : field_(f) {}

  const exactlin::Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  const std::map<BasisWord, exactlin::Scalar>& terms() const { return terms_; }

  exactlin::Scalar coeff(const BasisWord& w) const;
  void add_term(const BasisWord& w, const exactlin::Scalar& c);

  const BasisWord& leading_word() const;  // max in the basis order
  const exactlin::Scalar& leading_coeff() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement scaled(const exactlin::Scalar& c) const;
  AlgebraElement operator-() const;

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

 private:
  exactlin::Field field_;
  std::map<BasisWord, exactlin::Scalar> terms_;
};

class Carrier {
 public:
  static Carrier group_zd(int d, const exactlin::Field& f);
  static Carrier free_group(int rank, const exactlin::Field& f);
  static Carrier free_algebra(int rank, const exactlin::Field& f);
  static Carrier translation(graphlab::GraphPtr graph, const exactlin::Field& f);

  CarrierKind kind() const { return kind_; }
  const exactlin::Field& field() const { return field_; }
  int generators() const { return gens_; }  // d for Z^d, rank otherwise
  const graphlab::GraphPtr& graph() const { return graph_; }

  bool same_carrier(const Carrier& o) const;

  bool valid_word(const BasisWord& w) const;
  void check_word(const BasisWord& w) const;  // throws on invalid words

  // Multiplication oracle. Group/free kinds give a single word; translation
  // matrix units multiply by E[x,y] E[z,w] = [y==z] E[x,w].
  AlgebraElement mul_basis(const BasisWord& u, const BasisWord& v) const;
  // Bilinear extension of mul_basis in canonical (no-zero) form.
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  // Two-sided unit: empty word, or sum of E[x,x] over the window.
  AlgebraElement one() const;

  AlgebraElement zero() const { return AlgebraElement(field_); }
  AlgebraElement from_word(const BasisWord& w) const;
  AlgebraElement from_int(long long v) const;  // v * 1

  // Largest d_G(x, y) over the support; translation carriers only.
  int propagation(const AlgebraElement& a) const;
  // E[x,y] -> E[y,x] extended linearly; translation carriers only.
  AlgebraElement transpose(const AlgebraElement& a) const;

  // Element literal grammar, e.g. "1 + 2*t - t^-1", "a*b^-1*a", "E[3,7]".
  AlgebraElement parse(const std::string& text) const;
  std::string to_string(const AlgebraElement& a) const;
  std::string word_to_string(const BasisWord& w) const;

  // Canonical exhaustion families (sorted word lists):
  //   ball n:  words of length <= n (l1 ball for Z^d, reduced-word ball for
  //            free groups, length filtration for the free algebra); for
  //            translation carriers the column words E[x, c] over the BFS
  //            ball of radius n around the center vertex c.
  //   box n:   Z^d only, exponent vectors in {0..n-1}^d.
  std::vector<BasisWord> ball_words(int n, const BasisWord* center = nullptr) const;
  std::vector<BasisWord> box_words(int n) const;

 private:
  Carrier(CarrierKind k, int gens, const exactlin::Field& f, graphlab::GraphPtr g)
      : kind_(k), gens_(gens), field_(f), graph_(std::move(g)) {}

  CarrierKind kind_;
  int gens_;
  exactlin::Field field_;
  graphlab::GraphPtr graph_;
};

// Rectangular matrix with entries in a carrier; the shape algebra behind
// witness subspaces, rank audits and the non-IBN certificates.
class ElementMatrix {
 public:
  ElementMatrix(const Carrier& c, std::size_t rows, std::size_t cols);
  static ElementMatrix identity(const Carrier& c, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Carrier& carrier() const { return carrier_; }

  const AlgebraElement& operator()(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, AlgebraElement v);

  ElementMatrix operator*(const ElementMatrix& o) const;
  ElementMatrix operator+(const ElementMatrix& o) const;
  ElementMatrix operator-(const ElementMatrix& o) const;
  bool operator==(const ElementMatrix& o) const;
  bool is_identity() const;

 private:
  Carrier carrier_;
  std::size_t rows_, cols_;
  std::vector<AlgebraElement> e_;
};

}  // namespace afd::carrier
