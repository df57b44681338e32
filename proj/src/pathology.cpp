#include "afd/pathology.hpp"

#include <stdexcept>

namespace afd::pathology {

using carrier::AlgebraElement;
using carrier::Carrier;
using carrier::ElementMatrix;
using exactlin::Mat;

folner::FinSubspace witness_subspace(const Carrier& c, const ElementMatrix& a,
                                     const ElementMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw std::invalid_argument("witness_subspace: shapes must be m x n and n x m");
  std::vector<AlgebraElement> gens = {c.one()};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) gens.push_back(a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) gens.push_back(b(i, j));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          gens.push_back(c.mul(a(i, j), b(k, l)));
  return folner::FinSubspace::span(c, gens);
}

RankAudit rank_condition_audit(const almostrep::AlmostRep& rep, const ElementMatrix& a,
                               const ElementMatrix& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.rows() != n || b.cols() != m)
    throw std::invalid_argument("rank_condition_audit: B must be n x m");
  if (!(m > n && n >= 1)) throw std::invalid_argument("rank_condition_audit: need m > n >= 1");
  if (!rep.domain) throw std::logic_error("rank_condition_audit: representation has no domain");

  RankAudit audit;
  audit.m = m;
  audit.n = n;
  audit.v_dim = rep.v_dim;
  audit.core_dim = rep.core_dim();
  audit.lhs = m * audit.core_dim;
  audit.rhs = n * audit.v_dim;
  audit.contradiction = audit.lhs > audit.rhs;

  Mat psi_a = almostrep::apply_matrix(rep, a);
  Mat psi_b = almostrep::apply_matrix(rep, b);
  Mat product = psi_a * psi_b;
  audit.rank_psi_a = exactlin::rank(psi_a);
  audit.rank_psi_b = exactlin::rank(psi_b);
  audit.rank_product = exactlin::rank(product);
  // the product factors through V^n
  audit.range_bound_ok = audit.rank_product <= audit.rhs;
  if (!audit.range_bound_ok)
    throw std::logic_error("rank_condition_audit: range bound violated (internal error)");

  // When AB = I holds in the carrier and every entry product is certified by
  // the table, psi(A) psi(B) fixes core^m.
  audit.ab_identity_in_carrier = (a * b).is_identity();
  if (audit.ab_identity_in_carrier) {
    const auto& L = *rep.domain;
    std::vector<std::vector<char>> in_table(L.dim(), std::vector<char>(L.dim(), 0));
    for (const auto& t : rep.table) in_table[t.i][t.j] = 1;
    auto pair_certified = [&](const AlgebraElement& x, const AlgebraElement& y) {
      folner::Reduction rx = L.reduce(x), ry = L.reduce(y);
      if (!rx.in_span() || !ry.in_span()) return false;
      for (std::size_t i = 0; i < L.dim(); ++i) {
        if (rx.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < L.dim(); ++j)
          if (!ry.coeffs[j].is_zero() && !in_table[i][j]) return false;
      }
      return true;
    };
    bool all_products_certified = true;
    for (std::size_t i = 0; i < m && all_products_certified; ++i)
      for (std::size_t k = 0; k < n && all_products_certified; ++k)
        for (std::size_t j = 0; j < m && all_products_certified; ++j)
          all_products_certified = pair_certified(a(i, k), b(k, j));
    if (all_products_certified) audit.fixed_dim = exactlin::fixed_subspace(product).cols();
  }
  return audit;
}

StableCheckReport finite_stable_check(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("finite_stable_check: matrices must be square, same size");
  StableCheckReport r;
  Mat ab = a * b;
  Mat ba = b * a;
  r.ab_identity = ab.is_identity();
  r.ba_identity = ba.is_identity();
  r.rank_commutator = exactlin::rank(ab - ba);
  r.implication_ok = !r.ab_identity || r.ba_identity;
  return r;
}

CommutatorReport commutator_bound_check(const Mat& t, const Mat& s) {
  if (t.rows() != t.cols() || s.rows() != s.cols() || t.rows() != s.rows())
    throw std::invalid_argument("commutator_bound_check: matrices must be square, same size");
  CommutatorReport r;
  r.l = t.rows();
  Mat ts = t * s;
  r.fixed_dim = exactlin::fixed_subspace(ts).cols();
  r.epsilon_l = r.l - r.fixed_dim;
  r.rank_commutator = exactlin::rank(ts - s * t);
  r.bound = 2 * r.epsilon_l;
  r.pass = r.rank_commutator <= r.bound;
  return r;
}

RrIdealReport rr_ideal_bound(std::size_t rank_p, std::size_t v_dim, const mpq_class& eps,
                             std::size_t rank_ap) {
  RrIdealReport r;
  r.rank_p = rank_p;
  r.v_dim = v_dim;
  r.rank_ap = rank_ap;
  r.eps = eps;
  r.bound = mpq_class(static_cast<long>(rank_p)) + eps * static_cast<long>(v_dim);
  r.pass = mpq_class(static_cast<long>(rank_ap)) <= r.bound;
  return r;
}

}  // namespace afd::pathology
