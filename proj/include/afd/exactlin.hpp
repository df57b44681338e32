#pragma once

// Exact dense linear algebra over a prime field GF(p) or the rationals.
// Every rank, kernel and intersection below is exact; no floating point.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace afd::exactlin {

inline constexpr std::uint32_t kDefaultPrime = 32003;

class Field {
 public:
  enum class Kind { Gfp, Rational };

  static Field gfp(std::uint32_t p);
  static Field rational();

  Kind kind() const { return kind_; }
  bool is_gfp() const { return kind_ == Kind::Gfp; }
  std::uint32_t prime() const;

  bool operator==(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

  std::string to_string() const;  // "gfp:32003" or "rational"
  static Field parse(const std::string& text);

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

// A field element in canonical form: least nonnegative residue for GF(p),
// reduced fraction with positive denominator for the rationals.
class Scalar {
 public:
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_mpq(const Field& f, const mpq_class& q);
  // Accepts "17", "-3", "2/5".
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;  // throws on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::uint64_t residue() const;   // GF(p) only
  const mpq_class& rat() const;    // rational only

  std::string to_string() const;

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  Field field_ = Field::gfp(kDefaultPrime);
  std::uint64_t res_ = 0;
  std::optional<mpq_class> rat_;
};

// Dense row-major matrix over a fixed field. Values are immutable-friendly:
// all operations return new matrices.
class Mat {
 public:
  Mat(const Field& f, std::size_t rows, std::size_t cols);
  static Mat identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  Mat block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& m);
  Mat column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form with deterministic leftmost-pivot selection
// (topmost nonzero row wins; no pivoting heuristics).
RrefResult rref(Mat m);

std::size_t rank(const Mat& m);

// Columns form a basis of the null space; column count = cols - rank.
Mat kernel_basis(const Mat& m);

// Canonical basis of the column span (RREF of the transpose, transposed back).
Mat column_space_basis(const Mat& m);

// Basis of the intersection of the column spans. Throws on an empty list
// (ambient dimension unknown) or mismatched row counts.
Mat intersect(const std::vector<Mat>& spaces);

// Kronecker product; rank(kron(a, b)) = rank(a) * rank(b).
Mat kron(const Mat& a, const Mat& b);

// Basis of {v : m v = v}; throws unless m is square.
Mat fixed_subspace(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

// True iff every column of vecs lies in the column span of space.
bool in_column_span(const Mat& space, const Mat& vecs);
bool same_column_span(const Mat& a, const Mat& b);

}  // namespace afd::exactlin
