#include "afd/exactlin.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace afd::exactlin {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; requires 0 < a < p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::gfp(std::uint32_t p) {
  if (p >= (1u << 31)) throw std::invalid_argument("prime too large (must be < 2^31)");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  return Field(Kind::Gfp, p);
}

Field Field::rational() { return Field(Kind::Rational, 0); }

std::uint32_t Field::prime() const {
  if (kind_ != Kind::Gfp) throw std::logic_error("prime() on rational field");
  return p_;
}

std::string Field::to_string() const {
  if (kind_ == Kind::Rational) return "rational";
  return "gfp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
  if (text == "rational") return rational();
  if (text.rfind("gfp:", 0) == 0) {
    return gfp(static_cast<std::uint32_t>(std::stoul(text.substr(4))));
  }
  throw std::invalid_argument("bad field descriptor: " + text);
}

Scalar Scalar::zero(const Field& f) {
  Scalar s(f);
  if (!f.is_gfp()) s.rat_ = mpq_class(0);
  return s;
}

Scalar Scalar::one(const Field& f) {
  Scalar s(f);
  if (f.is_gfp()) {
    s.res_ = 1 % f.prime();
  } else {
    s.rat_ = mpq_class(1);
  }
  return s;
}

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s(f);
  if (f.is_gfp()) {
    long long p = f.prime();
    long long r = v % p;
    if (r < 0) r += p;
    s.res_ = static_cast<std::uint64_t>(r);
  } else {
    s.rat_ = mpq_class(static_cast<long>(v));
  }
  return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
  Scalar s(f);
  if (f.is_gfp()) {
    mpz_class p(static_cast<unsigned long>(f.prime()));
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = q.get_den() % p;
    std::uint64_t d = den.get_ui();
    if (d == 0) throw std::domain_error("denominator divisible by p");
    s.res_ = num.get_ui() * mod_inverse(d, f.prime()) % f.prime();
  } else {
    mpq_class c = q;
    c.canonicalize();
    s.rat_ = c;
  }
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return from_mpq(f, mpq_class(mpz_class(text), 1));
  }
  mpz_class num(text.substr(0, slash));
  mpz_class den(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(f, q);
}

bool Scalar::is_zero() const {
  return field_.is_gfp() ? res_ == 0 : *rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_gfp() ? res_ == 1 % field_.prime() : *rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_gfp()) {
    res_ = (res_ + o.res_) % field_.prime();
  } else {
    *rat_ += *o.rat_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_gfp()) {
    res_ = (res_ + field_.prime() - o.res_) % field_.prime();
  } else {
    *rat_ -= *o.rat_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_gfp()) {
    res_ = res_ * o.res_ % field_.prime();
  } else {
    *rat_ *= *o.rat_;
  }
  return *this;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_gfp()) {
    r.res_ = res_ == 0 ? 0 : field_.prime() - res_;
  } else {
    r.rat_ = -*rat_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (field_.is_gfp()) {
    r.res_ = mod_inverse(res_, field_.prime());
  } else {
    r.rat_ = 1 / *rat_;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_gfp() ? res_ == o.res_ : *rat_ == *o.rat_;
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_gfp()) throw std::logic_error("residue() on rational scalar");
  return res_;
}

const mpq_class& Scalar::rat() const {
  if (field_.is_gfp()) throw std::logic_error("rat() on GF(p) scalar");
  return *rat_;
}

std::string Scalar::to_string() const {
  if (field_.is_gfp()) return std::to_string(res_);
  return rat_->get_str();
}

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

const Scalar& Mat::operator()(std::size_t r, std::size_t c) const {
  assert(r < rows_ && c < cols_);
  return e_[r * cols_ + c];
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
  assert(r < rows_ && c < cols_);
  if (v.field() != field_) throw std::invalid_argument("matrix entry field mismatch");
  e_[r * cols_ + c] = v;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw std::invalid_argument("matrix shape/field mismatch in +");
  Mat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw std::invalid_argument("matrix shape/field mismatch in -");
  Mat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw std::invalid_argument("matrix shape/field mismatch in *");
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        r.e_[i * o.cols_ + j] += a * b;
      }
    }
  }
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j];
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    }
  return true;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  assert(r0 + rows <= rows_ && c0 + cols <= cols_);
  Mat r(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.e_[i * cols + j] = (*this)(r0 + i, c0 + j);
  return r;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
  assert(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) e_[(r0 + i) * cols_ + (c0 + j)] = m(i, j);
}

Mat Mat::column(std::size_t c) const { return block(0, c, rows_, 1); }

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.field() != b.field())
    throw std::invalid_argument("hstack shape/field mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("vstack shape/field mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

RrefResult rref(Mat m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t sel = m.rows();
    for (std::size_t r = rank; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == m.rows()) continue;
    m.swap_rows(sel, rank);
    Scalar inv = m(rank, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.set(rank, j, m(rank, j) * inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.set(r, j, m(r, j) - factor * m(rank, j));
    }
    pivots.push_back(col);
    ++rank;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Mat kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  const std::size_t r = rr.rank();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  Mat ker(m.field(), n, n - r);
  std::size_t out = 0;
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    ker.set(fcol, out, Scalar::one(m.field()));
    for (std::size_t t = 0; t < r; ++t)
      ker.set(rr.pivot_cols[t], out, -rr.reduced(t, fcol));
    ++out;
  }
  return ker;
}

Mat column_space_basis(const Mat& m) {
  RrefResult rr = rref(m.transpose());
  const std::size_t r = rr.rank();
  Mat basis(m.field(), m.rows(), r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) basis.set(j, i, rr.reduced(i, j));
  return basis;
}

Mat intersect(const std::vector<Mat>& spaces) {
  if (spaces.empty())
    throw std::invalid_argument("intersect: empty list (ambient dimension unknown)");
  const std::size_t d = spaces[0].rows();
  for (const Mat& s : spaces) {
    if (s.rows() != d || s.field() != spaces[0].field())
      throw std::invalid_argument("intersect: mismatched ambient spaces");
  }
  Mat current = column_space_basis(spaces[0]);
  for (std::size_t i = 1; i < spaces.size() && current.cols() > 0; ++i) {
    Mat other = column_space_basis(spaces[i]);
    if (other.cols() == 0) {
      current = Mat(current.field(), d, 0);
      break;
    }
    // Solve current*x + other*y = 0; intersection vectors are current*x.
    Mat ker = kernel_basis(hstack(current, other));
    Mat xpart = ker.block(0, 0, current.cols(), ker.cols());
    current = column_space_basis(current * xpart);
  }
  return current;
}

Mat kron(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw std::invalid_argument("kron field mismatch");
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          r.set(i * b.rows() + k, j * b.cols() + l, aij * b(k, l));
        }
    }
  return r;
}

Mat fixed_subspace(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("fixed_subspace: non-square input");
  return kernel_basis(m - Mat::identity(m.field(), m.rows()));
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RrefResult rr = rref(hstack(m, Mat::identity(m.field(), n)));
  if (rr.rank() < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

bool in_column_span(const Mat& space, const Mat& vecs) {
  if (space.rows() != vecs.rows()) throw std::invalid_argument("ambient mismatch");
  return rank(hstack(space, vecs)) == rank(space);
}

bool same_column_span(const Mat& a, const Mat& b) {
  return in_column_span(a, b) && in_column_span(b, a);
}

}  // namespace afd::exactlin
