#include "afd/carrier.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace afd::carrier {

using exactlin::Field;
using exactlin::Scalar;

std::string kind_name(CarrierKind k) {
  switch (k) {
    case CarrierKind::GroupZd: return "group-zd";
    case CarrierKind::FreeGroup: return "free-group";
    case CarrierKind::FreeAlgebra: return "free-algebra";
    case CarrierKind::Translation: return "translation";
  }
  return "?";
}

BasisWord BasisWord::zd(std::vector<long long> exponents) {
  return BasisWord(CarrierKind::GroupZd, std::move(exponents));
}

BasisWord BasisWord::free_group(std::vector<int> letters) {
  std::vector<long long> d(letters.begin(), letters.end());
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] == -d[i + 1]) throw std::invalid_argument("free-group word not reduced");
  return BasisWord(CarrierKind::FreeGroup, std::move(d));
}

BasisWord BasisWord::free_algebra(std::vector<int> letters) {
  return BasisWord(CarrierKind::FreeAlgebra, {letters.begin(), letters.end()});
}

BasisWord BasisWord::unit_pair(int x, int y) {
  return BasisWord(CarrierKind::Translation, {x, y});
}

bool BasisWord::is_identity_word() const {
  if (kind_ == CarrierKind::Translation) return false;
  return length() == 0;
}

long long BasisWord::length() const {
  if (kind_ == CarrierKind::GroupZd) {
    long long n = 0;
    for (long long e : data_) n += e < 0 ? -e : e;
    return n;
  }
  return static_cast<long long>(data_.size());
}

int BasisWord::pair_x() const {
  assert(kind_ == CarrierKind::Translation);
  return static_cast<int>(data_[0]);
}

int BasisWord::pair_y() const {
  assert(kind_ == CarrierKind::Translation);
  return static_cast<int>(data_[1]);
}

namespace {
// letter order a < a^-1 < b < b^-1 < ...
long long letter_key(long long l) { return 2 * (std::llabs(l) - 1) + (l < 0 ? 1 : 0); }
}  // namespace

bool BasisWord::operator<(const BasisWord& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  switch (kind_) {
    case CarrierKind::GroupZd: {
      long long la = length(), lb = o.length();
      if (la != lb) return la < lb;
      return data_ < o.data_;
    }
    case CarrierKind::FreeGroup: {
      if (data_.size() != o.data_.size()) return data_.size() < o.data_.size();
      for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return letter_key(data_[i]) < letter_key(o.data_[i]);
      return false;
    }
    case CarrierKind::FreeAlgebra: {
      if (data_.size() != o.data_.size()) return data_.size() < o.data_.size();
      return data_ < o.data_;
    }
    case CarrierKind::Translation:
      return data_ < o.data_;
  }
  return false;
}

Scalar AlgebraElement::coeff(const BasisWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(const BasisWord& w, const Scalar& c) {
  if (c.field() != field_) throw std::invalid_argument("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const BasisWord& AlgebraElement::leading_word() const {
  if (terms_.empty()) throw std::logic_error("leading_word of zero element");
  return terms_.rbegin()->first;
}

const Scalar& AlgebraElement::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero element");
  return terms_.rbegin()->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r -= o;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement r(field_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.add_term(w, x * c);
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(field_);
  for (const auto& [w, x] : terms_) r.add_term(w, -x);
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return field_ == o.field_ && terms_ == o.terms_;
}

Carrier Carrier::group_zd(int d, const Field& f) {
  if (d < 1) throw std::invalid_argument("Z^d needs d >= 1");
  return Carrier(CarrierKind::GroupZd, d, f, nullptr);
}

Carrier Carrier::free_group(int rank, const Field& f) {
  if (rank < 1 || rank > 26) throw std::invalid_argument("free group rank must be in 1..26");
  return Carrier(CarrierKind::FreeGroup, rank, f, nullptr);
}

Carrier Carrier::free_algebra(int rank, const Field& f) {
  if (rank < 1 || rank > 26) throw std::invalid_argument("free algebra rank must be in 1..26");
  return Carrier(CarrierKind::FreeAlgebra, rank, f, nullptr);
}

Carrier Carrier::translation(graphlab::GraphPtr graph, const Field& f) {
  if (!graph || graph->size() == 0)
    throw std::invalid_argument("translation algebra needs a nonempty graph window");
  return Carrier(CarrierKind::Translation, 0, f, std::move(graph));
}

bool Carrier::same_carrier(const Carrier& o) const {
  return kind_ == o.kind_ && gens_ == o.gens_ && field_ == o.field_ && graph_ == o.graph_;
}

bool Carrier::valid_word(const BasisWord& w) const {
  if (w.kind() != kind_) return false;
  switch (kind_) {
    case CarrierKind::GroupZd:
      return static_cast<int>(w.data().size()) == gens_;
    case CarrierKind::FreeGroup: {
      for (std::size_t i = 0; i < w.data().size(); ++i) {
        long long l = w.data()[i];
        if (l == 0 || std::llabs(l) > gens_) return false;
        if (i + 1 < w.data().size() && l == -w.data()[i + 1]) return false;
      }
      return true;
    }
    case CarrierKind::FreeAlgebra: {
      for (long long l : w.data())
        if (l < 0 || l >= gens_) return false;
      return true;
    }
    case CarrierKind::Translation: {
      long long n = static_cast<long long>(graph_->size());
      return w.data().size() == 2 && w.data()[0] >= 0 && w.data()[0] < n && w.data()[1] >= 0 &&
             w.data()[1] < n;
    }
  }
  return false;
}

void Carrier::check_word(const BasisWord& w) const {
  if (!valid_word(w)) throw std::invalid_argument("basis word not valid for this carrier");
}

AlgebraElement Carrier::mul_basis(const BasisWord& u, const BasisWord& v) const {
  check_word(u);
  check_word(v);
  AlgebraElement out(field_);
  switch (kind_) {
    case CarrierKind::GroupZd: {
      std::vector<long long> e(gens_);
      for (int i = 0; i < gens_; ++i) e[i] = u.data()[i] + v.data()[i];
      out.add_term(BasisWord::zd(std::move(e)), Scalar::one(field_));
      break;
    }
    case CarrierKind::FreeGroup: {
      std::vector<long long> w = u.data();
      for (long long l : v.data()) {
        if (!w.empty() && w.back() == -l) {
          w.pop_back();
        } else {
          w.push_back(l);
        }
      }
      std::vector<int> letters(w.begin(), w.end());
      out.add_term(BasisWord::free_group(std::move(letters)), Scalar::one(field_));
      break;
    }
    case CarrierKind::FreeAlgebra: {
      std::vector<int> w(u.data().begin(), u.data().end());
      w.insert(w.end(), v.data().begin(), v.data().end());
      out.add_term(BasisWord::free_algebra(std::move(w)), Scalar::one(field_));
      break;
    }
    case CarrierKind::Translation: {
      if (u.pair_y() == v.pair_x())
        out.add_term(BasisWord::unit_pair(u.pair_x(), v.pair_y()), Scalar::one(field_));
      break;
    }
  }
  return out;
}

AlgebraElement Carrier::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  if (a.field() != field_ || b.field() != field_)
    throw std::invalid_argument("element/carrier field mismatch");
  AlgebraElement out(field_);
  for (const auto& [wu, cu] : a.terms()) {
    for (const auto& [wv, cv] : b.terms()) {
      AlgebraElement p = mul_basis(wu, wv);
      Scalar c = cu * cv;
      for (const auto& [w, pc] : p.terms()) out.add_term(w, pc * c);
    }
  }
  return out;
}

AlgebraElement Carrier::one() const {
  AlgebraElement out(field_);
  Scalar unit = Scalar::one(field_);
  switch (kind_) {
    case CarrierKind::GroupZd:
      out.add_term(BasisWord::zd(std::vector<long long>(gens_, 0)), unit);
      break;
    case CarrierKind::FreeGroup:
      out.add_term(BasisWord::free_group({}), unit);
      break;
    case CarrierKind::FreeAlgebra:
      out.add_term(BasisWord::free_algebra({}), unit);
      break;
    case CarrierKind::Translation:
      for (int x = 0; x < static_cast<int>(graph_->size()); ++x)
        out.add_term(BasisWord::unit_pair(x, x), unit);
      break;
  }
  return out;
}

AlgebraElement Carrier::from_word(const BasisWord& w) const {
  check_word(w);
  AlgebraElement out(field_);
  out.add_term(w, Scalar::one(field_));
  return out;
}

AlgebraElement Carrier::from_int(long long v) const {
  return one().scaled(Scalar::from_int(field_, v));
}

int Carrier::propagation(const AlgebraElement& a) const {
  if (kind_ != CarrierKind::Translation)
    throw std::logic_error("propagation is defined for translation carriers only");
  int prop = 0;
  for (const auto& [w, c] : a.terms())
    prop = std::max(prop, graph_->distance(w.pair_x(), w.pair_y()));
  return prop;
}

AlgebraElement Carrier::transpose(const AlgebraElement& a) const {
  if (kind_ != CarrierKind::Translation)
    throw std::logic_error("transpose is defined for translation carriers only");
  AlgebraElement out(field_);
  for (const auto& [w, c] : a.terms()) out.add_term(BasisWord::unit_pair(w.pair_y(), w.pair_x()), c);
  return out;
}

// ---------------------------------------------------------------------------
// literal parser

namespace {

struct Lexer {
  std::string s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument(std::string("expected '") + c + "' in element literal");
  }
  std::string read_int() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("expected integer in element literal");
    return s.substr(start, i - start);
  }
  std::string read_ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) ++i;
    if (i == start) throw std::invalid_argument("expected identifier in element literal");
    return s.substr(start, i - start);
  }
};

}  // namespace

AlgebraElement Carrier::parse(const std::string& text) const {
  Lexer lx{text};
  AlgebraElement result(field_);

  auto parse_generator = [&](const std::string& name) -> int {
    // returns the 0-based generator index
    if (kind_ == CarrierKind::GroupZd) {
      if (name == "t" && gens_ == 1) return 0;
      if (name.size() >= 2 && name[0] == 't') {
        int idx = std::stoi(name.substr(1));
        if (idx >= 1 && idx <= gens_) return idx - 1;
      }
      throw std::invalid_argument("unknown generator '" + name + "' for " + kind_name(kind_));
    }
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z') {
      int idx = name[0] - 'a';
      if (idx < gens_) return idx;
    }
    throw std::invalid_argument("unknown generator '" + name + "' for " + kind_name(kind_));
  };

  auto generator_power = [&](int gen, long long exp) -> AlgebraElement {
    switch (kind_) {
      case CarrierKind::GroupZd: {
        std::vector<long long> e(gens_, 0);
        e[gen] = exp;
        return from_word(BasisWord::zd(std::move(e)));
      }
      case CarrierKind::FreeGroup: {
        std::vector<int> w(static_cast<std::size_t>(std::llabs(exp)), exp >= 0 ? gen + 1 : -(gen + 1));
        return from_word(BasisWord::free_group(std::move(w)));
      }
      case CarrierKind::FreeAlgebra: {
        if (exp < 0) throw std::invalid_argument("negative powers are not free-algebra words");
        std::vector<int> w(static_cast<std::size_t>(exp), gen);
        return from_word(BasisWord::free_algebra(std::move(w)));
      }
      default:
        throw std::invalid_argument("named generators are not translation-algebra words");
    }
  };

  bool first_term = true;
  while (!lx.done()) {
    Scalar sign = Scalar::one(field_);
    if (lx.eat('+')) {
      // explicit plus
    } else if (lx.eat('-')) {
      sign = -sign;
    } else if (!first_term) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first_term = false;

    Scalar coeff = sign;
    AlgebraElement word_part = one();
    bool expect_factor = true;
    while (expect_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lx.read_int();
        std::string lit = num;
        if (lx.eat('/')) lit += "/" + lx.read_int();
        coeff *= Scalar::parse(field_, lit);
      } else if (c == 'E' && kind_ == CarrierKind::Translation) {
        lx.expect('E');
        lx.expect('[');
        int x = std::stoi(lx.read_int());
        lx.expect(',');
        int y = std::stoi(lx.read_int());
        lx.expect(']');
        AlgebraElement atom = from_word(BasisWord::unit_pair(x, y));
        if (lx.eat('^')) {
          long long e = std::stoll(lx.read_int());
          if (e < 0) throw std::invalid_argument("negative powers of matrix units");
          AlgebraElement p = one();
          for (long long k = 0; k < e; ++k) p = mul(p, atom);
          atom = p;
        }
        word_part = mul(word_part, atom);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name = lx.read_ident();
        long long e = 1;
        if (lx.eat('^')) e = std::stoll(lx.read_int());
        word_part = mul(word_part, generator_power(parse_generator(name), e));
      } else {
        throw std::invalid_argument("unexpected character in element literal: " + text);
      }
      expect_factor = lx.eat('*');
    }
    result += word_part.scaled(coeff);
  }
  return result;
}

std::string Carrier::word_to_string(const BasisWord& w) const {
  std::ostringstream os;
  switch (kind_) {
    case CarrierKind::GroupZd: {
      bool any = false;
      for (int i = 0; i < gens_; ++i) {
        long long e = w.data()[i];
        if (e == 0) continue;
        if (any) os << "*";
        os << (gens_ == 1 ? std::string("t") : "t" + std::to_string(i + 1));
        if (e != 1) os << "^" << e;
        any = true;
      }
      if (!any) os << "1";
      break;
    }
    case CarrierKind::FreeGroup:
    case CarrierKind::FreeAlgebra: {
      if (w.data().empty()) {
        os << "1";
        break;
      }
      std::size_t i = 0;
      bool first = true;
      while (i < w.data().size()) {
        long long l = w.data()[i];
        std::size_t j = i;
        while (j < w.data().size() && w.data()[j] == l) ++j;
        long long run = static_cast<long long>(j - i);
        char name = kind_ == CarrierKind::FreeGroup ? static_cast<char>('a' + std::llabs(l) - 1)
                                                    : static_cast<char>('a' + l);
        if (!first) os << "*";
        os << name;
        long long e = (kind_ == CarrierKind::FreeGroup && l < 0) ? -run : run;
        if (e != 1) os << "^" << e;
        first = false;
        i = j;
      }
      break;
    }
    case CarrierKind::Translation:
      os << "E[" << w.pair_x() << "," << w.pair_y() << "]";
      break;
  }
  return os.str();
}

std::string Carrier::to_string(const AlgebraElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // leading term first
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    std::string abs = negative ? cs.substr(1) : cs;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    bool unit_word = w.is_identity_word();
    if (abs != "1" || unit_word) {
      os << abs;
      if (!unit_word) os << "*";
    }
    if (!unit_word) os << word_to_string(w);
    first = false;
  }
  return os.str();
}

std::vector<BasisWord> Carrier::ball_words(int n, const BasisWord* center) const {
  if (n < 0) throw std::invalid_argument("ball radius must be >= 0");
  std::vector<BasisWord> out;
  switch (kind_) {
    case CarrierKind::GroupZd: {
      // exponent vectors of l1 norm <= n
      std::vector<long long> e(gens_, 0);
      std::vector<std::vector<long long>> acc;
      auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == gens_) {
          acc.push_back(e);
          return;
        }
        for (long long v = -budget; v <= budget; ++v) {
          e[pos] = v;
          self(self, pos + 1, budget - static_cast<int>(std::llabs(v)));
        }
        e[pos] = 0;
      };
      rec(rec, 0, n);
      for (auto& v : acc) out.push_back(BasisWord::zd(std::move(v)));
      break;
    }
    case CarrierKind::FreeGroup: {
      out.push_back(BasisWord::free_group({}));
      std::size_t head = 0;
      std::vector<std::vector<long long>> words = {{}};
      while (head < words.size()) {
        auto w = words[head++];
        if (static_cast<int>(w.size()) == n) continue;
        for (int g = 1; g <= gens_; ++g) {
          for (int l : {g, -g}) {
            if (!w.empty() && w.back() == -l) continue;
            auto nw = w;
            nw.push_back(l);
            words.push_back(nw);
            out.push_back(BasisWord::free_group(std::vector<int>(nw.begin(), nw.end())));
          }
        }
      }
      break;
    }
    case CarrierKind::FreeAlgebra: {
      std::vector<std::vector<int>> level = {{}};
      out.push_back(BasisWord::free_algebra({}));
      for (int len = 1; len <= n; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : level)
          for (int g = 0; g < gens_; ++g) {
            auto nw = w;
            nw.push_back(g);
            out.push_back(BasisWord::free_algebra(nw));
            next.push_back(std::move(nw));
          }
        level = std::move(next);
      }
      break;
    }
    case CarrierKind::Translation: {
      int c = center ? center->pair_y() : graph_->center_vertex();
      if (c < 0 || static_cast<std::size_t>(c) >= graph_->size())
        throw std::invalid_argument("center vertex out of range");
      std::vector<int> F = {c};
      for (int x : graphlab::ball(*graph_, F, n)) out.push_back(BasisWord::unit_pair(x, c));
      break;
    }
  }
  if (center && kind_ != CarrierKind::Translation) {
    std::vector<BasisWord> shifted;
    for (const auto& w : out) {
      AlgebraElement p = mul_basis(w, *center);
      shifted.push_back(p.leading_word());
    }
    out = std::move(shifted);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisWord> Carrier::box_words(int n) const {
  if (kind_ != CarrierKind::GroupZd)
    throw std::invalid_argument("box exhaustion is defined for Z^d carriers only");
  if (n < 1) throw std::invalid_argument("box side must be >= 1");
  std::vector<BasisWord> out;
  std::vector<long long> e(gens_, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == gens_) {
      out.push_back(BasisWord::zd(e));
      return;
    }
    for (long long v = 0; v < n; ++v) {
      e[pos] = v;
      self(self, pos + 1);
    }
    e[pos] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ElementMatrix::ElementMatrix(const Carrier& c, std::size_t rows, std::size_t cols)
    : carrier_(c), rows_(rows), cols_(cols), e_(rows * cols, c.zero()) {}

ElementMatrix ElementMatrix::identity(const Carrier& c, std::size_t n) {
  ElementMatrix m(c, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c.one());
  return m;
}

const AlgebraElement& ElementMatrix::operator()(std::size_t r, std::size_t c) const {
  assert(r < rows_ && c < cols_);
  return e_[r * cols_ + c];
}

void ElementMatrix::set(std::size_t r, std::size_t c, AlgebraElement v) {
  assert(r < rows_ && c < cols_);
  if (v.field() != carrier_.field()) throw std::invalid_argument("entry field mismatch");
  e_[r * cols_ + c] = std::move(v);
}

ElementMatrix ElementMatrix::operator*(const ElementMatrix& o) const {
  if (cols_ != o.rows_ || !carrier_.same_carrier(o.carrier_))
    throw std::invalid_argument("element-matrix shape/carrier mismatch");
  ElementMatrix r(carrier_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const AlgebraElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o(k, j).is_zero()) continue;
        r.e_[i * o.cols_ + j] += carrier_.mul(a, o(k, j));
      }
    }
  return r;
}

ElementMatrix ElementMatrix::operator+(const ElementMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !carrier_.same_carrier(o.carrier_))
    throw std::invalid_argument("element-matrix shape/carrier mismatch");
  ElementMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

ElementMatrix ElementMatrix::operator-(const ElementMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !carrier_.same_carrier(o.carrier_))
    throw std::invalid_argument("element-matrix shape/carrier mismatch");
  ElementMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

bool ElementMatrix::operator==(const ElementMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool ElementMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  AlgebraElement unit = carrier_.one();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? (*this)(i, j) != unit : !(*this)(i, j).is_zero()) return false;
    }
  return true;
}

}  // namespace afd::carrier
