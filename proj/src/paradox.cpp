#include "afd/paradox.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace afd::graphlab {

using carrier::AlgebraElement;
using carrier::BasisWord;
using carrier::Carrier;
using carrier::ElementMatrix;
using exactlin::Field;
using exactlin::Mat;
using exactlin::Scalar;

std::vector<int> ParadoxicalPair::matched_region() const {
  std::vector<int> m = v1;
  m.insert(m.end(), v2.begin(), v2.end());
  std::sort(m.begin(), m.end());
  return m;
}

namespace {

Mat phi_matrix(const GraphPtr& g, const std::vector<int>& phi, const Field& f) {
  const std::size_t n = g->size();
  Mat a(f, n, n);
  Scalar one = Scalar::one(f);
  for (std::size_t y = 0; y < n; ++y)
    if (phi[y] >= 0) a.set(phi[y], y, one);
  return a;
}

AlgebraElement phi_element(const GraphPtr& g, const std::vector<int>& phi, const Carrier& c) {
  AlgebraElement e(c.field());
  Scalar one = Scalar::one(c.field());
  for (std::size_t y = 0; y < g->size(); ++y)
    if (phi[y] >= 0) e.add_term(BasisWord::unit_pair(phi[y], static_cast<int>(y)), one);
  return e;
}

AlgebraElement restricted_identity(const Carrier& c, const std::vector<int>& region) {
  AlgebraElement e(c.field());
  Scalar one = Scalar::one(c.field());
  for (int x : region) e.add_term(BasisWord::unit_pair(x, x), one);
  return e;
}

}  // namespace

Mat ParadoxicalPair::matrix_a(const Field& f) const { return phi_matrix(graph, phi1, f); }
Mat ParadoxicalPair::matrix_b(const Field& f) const { return phi_matrix(graph, phi2, f); }

AlgebraElement ParadoxicalPair::element_a(const Carrier& c) const {
  return phi_element(graph, phi1, c);
}
AlgebraElement ParadoxicalPair::element_b(const Carrier& c) const {
  return phi_element(graph, phi2, c);
}

ParadoxicalPair paradoxical_pair(const GraphPtr& g, int K) {
  if (!g || g->size() == 0) throw std::invalid_argument("paradoxical_pair: empty graph");
  if (K < 1) throw std::invalid_argument("paradoxical_pair: K must be >= 1");

  ParadoxicalPair pair;
  pair.graph = g;
  pair.displacement_bound = K;
  pair.interior = g->interior(K);

  const int n = static_cast<int>(g->size());
  const int center = g->center_vertex();
  const auto& center_dist = g->distances_from(center);

  // Left nodes: (copy, vertex) for both copies of every interior vertex,
  // processed center-first (then copy, then id) for a deterministic matching
  // in which failures concentrate at the window boundary.
  std::vector<std::pair<int, int>> left;
  for (int copy : {1, 2})
    for (int v : pair.interior) left.emplace_back(copy, v);
  std::stable_sort(left.begin(), left.end(), [&](const auto& a, const auto& b) {
    if (center_dist[a.second] != center_dist[b.second])
      return center_dist[a.second] < center_dist[b.second];
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  // candidate targets per interior vertex: the K-ball, ascending ids
  std::vector<std::vector<int>> targets(n);
  for (int v : pair.interior) targets[v] = ball(*g, {v}, K);

  std::vector<int> right_match(n, -1);            // right vertex -> left index
  std::vector<int> left_match(left.size(), -1);   // left index -> right vertex

  // Kuhn's augmenting-path matching over the fixed left order.
  std::vector<char> visited(n, 0);
  auto augment = [&](auto&& self, int li) -> bool {
    for (int t : targets[left[li].second]) {
      if (visited[t]) continue;
      visited[t] = 1;
      if (right_match[t] < 0 || self(self, right_match[t])) {
        right_match[t] = li;
        left_match[li] = t;
        return true;
      }
    }
    return false;
  };
  for (std::size_t li = 0; li < left.size(); ++li) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, static_cast<int>(li));
  }

  pair.phi1.assign(n, -1);
  pair.phi2.assign(n, -1);
  std::vector<int> m1(n, -1), m2(n, -1);
  for (std::size_t li = 0; li < left.size(); ++li) {
    auto [copy, v] = left[li];
    if (left_match[li] < 0) {
      pair.unmatched.emplace_back(copy, v);
    } else {
      (copy == 1 ? m1 : m2)[v] = left_match[li];
    }
  }
  std::sort(pair.unmatched.begin(), pair.unmatched.end());

  // phi maps live on the common domain where both copies matched.
  for (int v : pair.interior) {
    if (m1[v] >= 0 && m2[v] >= 0) {
      pair.domain.push_back(v);
      pair.phi1[v] = m1[v];
      pair.phi2[v] = m2[v];
      pair.v1.push_back(m1[v]);
      pair.v2.push_back(m2[v]);
    }
  }
  std::sort(pair.v1.begin(), pair.v1.end());
  std::sort(pair.v2.begin(), pair.v2.end());

  pair.success = pair.unmatched.empty();
  pair.normalized_deficiency =
      pair.interior.empty()
          ? mpq_class(0)
          : mpq_class(static_cast<long>(pair.unmatched.size()),
                      static_cast<long>(pair.interior.size()));
  pair.normalized_deficiency.canonicalize();
  return pair;
}

namespace {

// checks m restricted to region x region against the identity
IdentityCheck check_restricted_identity(const std::string& name, const Mat& m,
                                        const std::vector<int>& region) {
  IdentityCheck ch;
  ch.name = name;
  ch.pass = true;
  for (int i : region)
    for (int j : region) {
      bool ok = (i == j) ? m(i, j).is_one() : m(i, j).is_zero();
      if (!ok) {
        ch.pass = false;
        ch.violations.emplace_back(i, j);
      }
    }
  return ch;
}

IdentityCheck check_zero(const std::string& name, const Mat& m) {
  IdentityCheck ch;
  ch.name = name;
  ch.pass = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        ch.pass = false;
        ch.violations.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
  return ch;
}

}  // namespace

bool IdentityReport::all_pass() const {
  for (const auto& ch : checks)
    if (!ch.pass) return false;
  return true;
}

IdentityReport verify_pair(const ParadoxicalPair& p, const Field& f) {
  IdentityReport report;
  std::vector<int> region = p.matched_region();
  report.empty_region = p.domain.empty();

  Mat a = p.matrix_a(f);
  Mat b = p.matrix_b(f);
  Mat at = a.transpose();
  Mat bt = b.transpose();

  report.checks.push_back(check_restricted_identity("AtA_on_domain", at * a, p.domain));
  report.checks.push_back(check_restricted_identity("BtB_on_domain", bt * b, p.domain));
  report.checks.push_back(
      check_restricted_identity("AAt_plus_BBt_on_matched", a * at + b * bt, region));
  report.checks.push_back(check_zero("AtB_zero", at * b));
  report.checks.push_back(check_zero("BtA_zero", bt * a));

  bool ata_ok = report.all_pass();
  // the opposite transposition convention
  bool aat_ok = check_restricted_identity("", a * at, region).pass &&
                check_restricted_identity("", b * bt, region).pass &&
                check_restricted_identity("", at * a + bt * b, p.domain).pass;
  if (ata_ok && aat_ok) {
    report.orientation = "both";
  } else if (ata_ok) {
    report.orientation = "AtA=I";
  } else if (aat_ok) {
    report.orientation = "AAt=I";
  } else {
    report.orientation = "neither";
  }
  return report;
}

NonIbnWitness non_ibn_witness(const ParadoxicalPair& p, const Field& f) {
  if (!p.success) throw std::invalid_argument("non_ibn_witness: pair has unmatched interior");
  IdentityReport rep = verify_pair(p, f);
  if (!rep.all_pass() || rep.empty_region)
    throw std::invalid_argument("non_ibn_witness: pair identities do not hold");

  Carrier c = Carrier::translation(p.graph, f);
  AlgebraElement a = p.element_a(c);
  AlgebraElement b = p.element_b(c);

  NonIbnWitness w{ElementMatrix(c, 2, 1), ElementMatrix(c, 1, 2), false, false,
                  p.domain.size(), p.matched_region().size()};
  w.u.set(0, 0, c.transpose(a));
  w.u.set(1, 0, c.transpose(b));
  w.w.set(0, 0, a);
  w.w.set(0, 1, b);

  ElementMatrix wu = w.w * w.u;  // 1 x 1: A A^T + B B^T
  ElementMatrix uw = w.u * w.w;  // 2 x 2: [[A^T A, A^T B], [B^T A, B^T B]]

  AlgebraElement id_region = restricted_identity(c, p.matched_region());
  AlgebraElement id_domain = restricted_identity(c, p.domain);

  w.wu_is_identity = wu(0, 0) == id_region;
  w.uw_is_identity = uw(0, 0) == id_domain && uw(1, 1) == id_domain && uw(0, 1).is_zero() &&
                     uw(1, 0).is_zero();
  if (!w.wu_is_identity || !w.uw_is_identity)
    throw std::invalid_argument("non_ibn_witness: witness products fail the identity check");
  return w;
}

}  // namespace afd::graphlab
