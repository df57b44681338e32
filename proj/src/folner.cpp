#include "afd/folner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace afd::folner {

using carrier::AlgebraElement;
using carrier::BasisWord;
using carrier::Carrier;
using exactlin::Scalar;

FinSubspace FinSubspace::span(const Carrier& c, const std::vector<AlgebraElement>& gens) {
  FinSubspace s(c);
  // spans of single words need no elimination: the distinct words, monic,
  // already form the canonical fully reduced echelon basis
  bool words_only = true;
  for (const AlgebraElement& g : gens) {
    if (g.field() != c.field()) throw std::invalid_argument("generator field mismatch");
    if (g.support_size() > 1) {
      words_only = false;
      break;
    }
  }
  if (words_only) {
    std::set<BasisWord> words;
    for (const AlgebraElement& g : gens)
      if (!g.is_zero()) words.insert(g.leading_word());
    for (auto it = words.rbegin(); it != words.rend(); ++it) s.basis_.push_back(c.from_word(*it));
  } else {
    for (const AlgebraElement& g : gens) s.insert(g);
  }
  s.contains_one_ = s.contains(c.one());
  return s;
}

FinSubspace FinSubspace::span_words(const Carrier& c, const std::vector<BasisWord>& words) {
  std::vector<AlgebraElement> gens;
  gens.reserve(words.size());
  for (const BasisWord& w : words) gens.push_back(c.from_word(w));
  return span(c, gens);
}

void FinSubspace::insert(AlgebraElement a) {
  // reduce against the existing echelon basis, leading words descending
  for (const AlgebraElement& b : basis_) {
    if (a.is_zero()) return;
    Scalar c = a.coeff(b.leading_word());
    if (!c.is_zero()) a -= b.scaled(c);
  }
  if (a.is_zero()) return;
  AlgebraElement monic = a.scaled(a.leading_coeff().inverse());
  const BasisWord lead = monic.leading_word();
  // keep the basis fully reduced: clear the new leading word everywhere
  for (AlgebraElement& b : basis_) {
    Scalar c = b.coeff(lead);
    if (!c.is_zero()) b -= monic.scaled(c);
  }
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), monic,
                              [](const AlgebraElement& x, const AlgebraElement& y) {
                                return y.leading_word() < x.leading_word();
                              });
  basis_.insert(pos, std::move(monic));
}

Reduction FinSubspace::reduce(const AlgebraElement& a) const {
  if (a.field() != carrier_.field()) throw std::invalid_argument("element field mismatch");
  Reduction r{a, std::vector<Scalar>(basis_.size(), Scalar::zero(carrier_.field()))};
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r.remainder.coeff(basis_[i].leading_word());
    if (c.is_zero()) continue;
    r.coeffs[i] = c;
    r.remainder -= basis_[i].scaled(c);
  }
  return r;
}

bool FinSubspace::same_space(const FinSubspace& o) const {
  if (!carrier_.same_carrier(o.carrier_) || dim() != o.dim()) return false;
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

FinSubspace product_space(const FinSubspace& B, const FinSubspace& Q) {
  if (!B.carrier().same_carrier(Q.carrier()))
    throw std::invalid_argument("product_space: mixed carriers");
  const Carrier& c = B.carrier();
  std::vector<AlgebraElement> prods;
  prods.reserve(B.dim() * Q.dim());
  for (const auto& b : B.basis())
    for (const auto& q : Q.basis()) prods.push_back(c.mul(b, q));
  return FinSubspace::span(c, prods);
}

FolnerCertificate folner_ratio(const FinSubspace& B, const FinSubspace& Q) {
  if (Q.dim() == 0) throw std::invalid_argument("folner_ratio: dim Q = 0");
  if (!B.contains_one()) throw std::invalid_argument("folner_ratio: 1 not in B");
  FinSubspace BQ = product_space(B, Q);
  FolnerCertificate cert;
  cert.dim_B = B.dim();
  cert.dim_Q = Q.dim();
  cert.dim_BQ = BQ.dim();
  cert.ratio = mpq_class(static_cast<long>(BQ.dim() - Q.dim()), static_cast<long>(Q.dim()));
  cert.ratio.canonicalize();
  return cert;
}

ExhaustionSpec ExhaustionSpec::parse(const std::string& text) {
  ExhaustionSpec s;
  if (text == "ball") {
    s.type = Type::Ball;
  } else if (text == "box") {
    s.type = Type::Box;
  } else if (text == "length") {
    s.type = Type::Length;
  } else {
    throw std::invalid_argument("unknown exhaustion type: " + text);
  }
  return s;
}

std::string ExhaustionSpec::to_string() const {
  switch (type) {
    case Type::Ball: return "ball";
    case Type::Box: return "box";
    case Type::Length: return "length";
  }
  return "?";
}

FinSubspace exhaustion_subspace(const Carrier& c, const ExhaustionSpec& spec, int n) {
  using carrier::CarrierKind;
  switch (spec.type) {
    case ExhaustionSpec::Type::Ball: {
      std::optional<BasisWord> center;
      if (spec.center) {
        if (c.kind() == CarrierKind::Translation) {
          int v = std::stoi(*spec.center);
          center = BasisWord::unit_pair(v, v);
        } else {
          AlgebraElement e = c.parse(*spec.center);
          if (e.support_size() != 1 || !e.leading_coeff().is_one())
            throw std::invalid_argument("exhaustion center must be a single basis word");
          center = e.leading_word();
        }
      }
      return FinSubspace::span_words(c, c.ball_words(n, center ? &*center : nullptr));
    }
    case ExhaustionSpec::Type::Box:
      return FinSubspace::span_words(c, c.box_words(n));
    case ExhaustionSpec::Type::Length:
      if (c.kind() != CarrierKind::FreeAlgebra && c.kind() != CarrierKind::FreeGroup)
        throw std::invalid_argument("length exhaustion needs a free carrier");
      return FinSubspace::span_words(c, c.ball_words(n, nullptr));
  }
  throw std::invalid_argument("unsupported exhaustion");
}

std::vector<FolnerCertificate> folner_scan(const Carrier& c, const FinSubspace& B,
                                           const ExhaustionSpec& spec, int n_max) {
  if (!B.carrier().same_carrier(c)) throw std::invalid_argument("folner_scan: mixed carriers");
  std::vector<FolnerCertificate> out;
  for (int n = 1; n <= n_max; ++n) {
    FinSubspace Q = exhaustion_subspace(c, spec, n);
    FolnerCertificate cert = folner_ratio(B, Q);
    cert.n = n;
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace afd::folner
