// Acceptance suite: one criterion per entry, each checked exactly at desk
// scale against an independent oracle where one exists. Prints one pass/fail
// line per criterion; exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "afd/cli.hpp"
#include "afd/io.hpp"
#include "afd/pathology.hpp"
#include "afd/rankradical.hpp"

using namespace afd;
using carrier::AlgebraElement;
using carrier::Carrier;
using carrier::ElementMatrix;
using exactlin::Field;
using exactlin::Mat;
using exactlin::Scalar;
using folner::ExhaustionSpec;
using folner::FinSubspace;

namespace {

const Field F = Field::gfp(exactlin::kDefaultPrime);

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::ostream&)> check;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Carrier kz() { return Carrier::group_zd(1, F); }

FinSubspace kz_L(const Carrier& c) {
  return FinSubspace::span(c, {c.parse("1"), c.parse("t"), c.parse("t^-1")});
}

almostrep::AlmostRep kz_rep(const Carrier& c, int n) {
  return almostrep::build_from_folner(kz_L(c),
                                      folner::exhaustion_subspace(c, ExhaustionSpec::ball(), n));
}

graphlab::GraphPtr gen(const std::string& spec) {
  return std::make_shared<const graphlab::WindowGraph>(
      graphlab::WindowGraph::generate(graphlab::GeneratorSpec::parse(spec)));
}

// 1. k[Z] Foelner scan: ratio = 2/(2n+1) exactly for n <= 50, under 5 s.
bool criterion_folner_scan(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  Carrier c = kz();
  auto certs = folner::folner_scan(c, kz_L(c), ExhaustionSpec::ball(), 50);
  bool ok = certs.size() == 50;
  for (const auto& cert : certs) {
    // oracle: word enumeration -- a ball of radius n in Z has 2n+1 words and
    // its product with the generator ball has 2n+3
    std::set<long long> ball_words, product_words;
    for (long long j = -cert.n; j <= cert.n; ++j) ball_words.insert(j);
    for (long long j : ball_words)
      for (long long e : {-1LL, 0LL, 1LL}) product_words.insert(j + e);
    ok = ok && cert.dim_Q == ball_words.size() && cert.dim_BQ == product_words.size();
    ok = ok && cert.ratio == mpq_class(2, 2 * cert.n + 1);
  }
  double elapsed = seconds_since(start);
  log << "50 certificates, " << elapsed << " s";
  return ok && elapsed < 5.0;
}

// 2. The Foelner build at n = 5: V = 11, core = 9, defect = 2/11; the core
// agrees with the brute-force intersection of coordinate kernels and the
// multiplicativity residuals vanish exactly.
bool criterion_folner_build(std::ostream& log) {
  Carrier c = kz();
  almostrep::AlmostRep rep = kz_rep(c, 5);
  bool ok = rep.v_dim == 11 && rep.core_dim() == 9 && rep.defect == mpq_class(2, 11);

  // independent oracle: x * t^j stays in the ball iff j + e(x) is in [-5, 5]
  std::set<int> kernel_exponents;
  for (int j = -5; j <= 5; ++j) kernel_exponents.insert(j);
  for (int e : {0, 1, -1}) {
    std::set<int> keep;
    for (int j : kernel_exponents)
      if (j + e >= -5 && j + e <= 5) keep.insert(j);
    kernel_exponents = keep;
  }
  FinSubspace Q = folner::exhaustion_subspace(c, ExhaustionSpec::ball(), 5);
  Mat expected(F, 11, kernel_exponents.size());
  std::size_t col = 0;
  for (int j : kernel_exponents) {
    AlgebraElement w = c.parse("t^" + std::to_string(j));
    for (std::size_t i = 0; i < Q.dim(); ++i)
      if (Q.basis()[i].leading_word() == w.leading_word())
        expected.set(i, col, Scalar::one(F));
    ++col;
  }
  ok = ok && exactlin::same_column_span(rep.core, expected);

  // unit law and zero residuals, asserted directly
  ok = ok && rep.image_of(rep.unit_coeffs).is_identity();
  for (const auto& t : rep.table) {
    Mat residual = (rep.images[t.i] * rep.images[t.j] - rep.image_of(t.coeffs)) * rep.core;
    ok = ok && residual.is_zero();
  }
  ok = ok && almostrep::verify(rep).all_pass();
  log << "V=" << rep.v_dim << " core=" << rep.core_dim() << " defect=" << io::q_str(rep.defect);
  return ok;
}

// 3. Amplification for n in {1, 2, 3}: dims scale, the core scales at least
// linearly, the defect never grows; equality of the defect at n = 2 (22/18).
bool criterion_amplify(std::ostream& log) {
  Carrier c = kz();
  almostrep::AlmostRep rep = kz_rep(c, 5);
  bool ok = true;
  for (std::size_t n : {1, 2, 3}) {
    almostrep::AlmostRep amp = almostrep::amplify(rep, n);
    ok = ok && amp.v_dim == n * rep.v_dim;
    ok = ok && amp.core_dim() >= n * rep.core_dim();
    ok = ok && amp.defect <= rep.defect;
    ok = ok && almostrep::verify(amp).all_pass();
    if (n == 2) {
      ok = ok && amp.v_dim == 22 && amp.core_dim() == 18 && amp.defect == rep.defect;
      log << "n=2 dims " << amp.v_dim << "/" << amp.core_dim() << " defect "
          << io::q_str(amp.defect);
    }
  }
  return ok;
}

// 4. Tensor of two k[Z] representations: 1 - defect >= (9/11)^2, i.e. at
// least 81 core dimensions out of 121, verified exactly.
bool criterion_tensor(std::ostream& log) {
  Carrier c = kz();
  almostrep::AlmostRep rep = kz_rep(c, 5);
  almostrep::AlmostRep prod = almostrep::tensor(rep, rep);
  bool ok = prod.v_dim == 121 && prod.core_dim() >= 81;
  mpq_class kept = mpq_class(9, 11) * mpq_class(9, 11);
  ok = ok && (1 - prod.defect) >= kept;
  ok = ok && almostrep::verify(prod).all_pass();
  log << "dims " << prod.v_dim << "/" << prod.core_dim() << " defect "
      << io::q_str(prod.defect);
  return ok;
}

// 5. The counting audit on 100 randomized (A, B) over L: the range bound
// rank(psi(A) psi(B)) <= n dim V always holds and the contradiction flag is
// set exactly when m core > n dim V.
bool criterion_rank_audits(std::ostream& log) {
  Carrier c = kz();
  almostrep::AlmostRep sharp = kz_rep(c, 5);  // 2*9 > 1*11: certifies
  almostrep::AlmostRep lossy = kz_rep(c, 1);  // 2*1 <= 1*3: too lossy
  const FinSubspace& L = *sharp.domain;

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> coef(-6, 6);
  auto random_l_elem = [&]() {
    AlgebraElement e(F);
    for (const auto& b : L.basis()) e += b.scaled(Scalar::from_int(F, coef(rng)));
    return e;
  };

  int audits = 0;
  bool ok = true;
  struct Setup {
    const almostrep::AlmostRep* rep;
    std::size_t m, n;
  };
  std::vector<Setup> setups = {{&sharp, 2, 1}, {&sharp, 3, 2}, {&lossy, 2, 1}, {&lossy, 3, 2}};
  for (int round = 0; round < 25; ++round) {
    for (const auto& setup : setups) {
      ElementMatrix a(c, setup.m, setup.n), b(c, setup.n, setup.m);
      for (std::size_t i = 0; i < setup.m; ++i)
        for (std::size_t j = 0; j < setup.n; ++j) {
          a.set(i, j, random_l_elem());
          b.set(j, i, random_l_elem());
        }
      auto audit = pathology::rank_condition_audit(*setup.rep, a, b);
      ok = ok && audit.range_bound_ok && audit.rank_product <= audit.rhs;
      bool expect_flag = setup.m * setup.rep->core_dim() > setup.n * setup.rep->v_dim;
      ok = ok && audit.contradiction == expect_flag;
      ++audits;
    }
  }
  log << audits << " audits";
  return ok && audits == 100;
}

// 6. The commutator rank bound on 1000 randomized pairs of sizes 2..16 over
// GF(32003), plus the structured k[Z] instance meeting the bound with
// equality; under 30 s.
bool criterion_commutator(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> entry(0, exactlin::kDefaultPrime - 1);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + trial % 15;  // sizes 2..16
    Mat t(F, n, n), s(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        t.set(i, j, Scalar::from_int(F, entry(rng)));
        s.set(i, j, Scalar::from_int(F, entry(rng)));
      }
    ok = ok && pathology::commutator_bound_check(t, s).pass;
  }
  Carrier c = kz();
  almostrep::AlmostRep rep = kz_rep(c, 5);
  auto structured =
      pathology::commutator_bound_check(rep.psi(c.parse("t")), rep.psi(c.parse("t^-1")));
  ok = ok && structured.rank_commutator == 2 && structured.bound == 2 && structured.pass;
  double elapsed = seconds_since(start);
  log << "1000 random + structured rank " << structured.rank_commutator << " = bound "
      << structured.bound << ", " << elapsed << " s";
  return ok && elapsed < 30.0;
}

// 7. The non-amenable direction on tree(3, R = 5) at K = 1: the doubling
// matching succeeds with deficiency confined to the outermost two shells,
// all four identities hold on the matched region, and the witness products
// are exact identities.
bool criterion_tree_pair(std::ostream& log) {
  auto g = gen("tree:3,5");
  auto pair = graphlab::paradoxical_pair(g, 1);
  bool ok = pair.success && pair.deficiency() == 0;
  ok = ok && pair.domain.size() == pair.interior.size();
  // deficiency (empty here) confined to boundary-distance <= 1, the two
  // outermost shells
  for (auto [copy, v] : pair.unmatched) {
    (void)copy;
    ok = ok && g->boundary_distance(v) <= 1;
  }
  // matching is maximum: it attains the trivial upper bound 2|interior|
  ok = ok && pair.v1.size() + pair.v2.size() == 2 * pair.interior.size();
  // displacement bound, exactly
  for (int y : pair.domain)
    ok = ok && g->distance(y, pair.phi1[y]) <= 1 && g->distance(y, pair.phi2[y]) <= 1;

  auto identities = graphlab::verify_pair(pair, F);
  int four = 0;
  for (const auto& ch : identities.checks)
    if (ch.name == "AtA_on_domain" || ch.name == "BtB_on_domain" ||
        ch.name == "AAt_plus_BBt_on_matched" || ch.name == "AtB_zero")
      four += ch.pass ? 1 : 0;
  ok = ok && four == 4 && identities.all_pass();

  auto witness = graphlab::non_ibn_witness(pair, F);
  ok = ok && witness.wu_is_identity && witness.uw_is_identity;
  log << "deficiency " << pair.deficiency() << ", identities 4/4, witness exact";
  return ok;
}

// 8. The amenable direction: grids and cycles at three sizes keep normalized
// matching deficiency above 1/4 while the isoperimetric ratios follow the
// closed forms exactly.
bool criterion_amenable_windows(std::ostream& log) {
  bool ok = true;
  const mpq_class threshold(1, 4);
  for (int d : {10, 14, 18}) {
    auto pair = graphlab::paradoxical_pair(gen("grid:" + std::to_string(d)), 1);
    ok = ok && !pair.success && pair.normalized_deficiency >= threshold;
  }
  for (int m : {12, 20, 28}) {
    auto pair = graphlab::paradoxical_pair(gen("cycle:" + std::to_string(m)), 1);
    ok = ok && !pair.success && pair.normalized_deficiency >= threshold;
  }

  auto grid = gen("grid:12");
  mpq_class prev(-1);
  for (int n = 3; n <= 5; ++n) {
    std::vector<int> box;
    int start = (12 - n) / 2;
    for (int i = start; i < start + n; ++i)
      for (int j = start; j < start + n; ++j) box.push_back(i * 12 + j);
    auto ratios = graphlab::iso_profile(*grid, {box}, 1);
    mpq_class expect(n * n + 4 * n, n * n);
    expect.canonicalize();
    ok = ok && ratios[0] == expect;
    ok = ok && (prev < 0 || ratios[0] < prev) && ratios[0] > 1;
    prev = ratios[0];
  }
  auto cyc = gen("cycle:24");
  prev = -1;
  for (int m : {4, 6, 8}) {
    std::vector<int> arc;
    for (int i = 0; i < m; ++i) arc.push_back(i);
    auto ratios = graphlab::iso_profile(*cyc, {arc}, 1);
    mpq_class expect(m + 2, m);
    expect.canonicalize();
    ok = ok && ratios[0] == expect;
    ok = ok && (prev < 0 || ratios[0] < prev) && ratios[0] > 1;
    prev = ratios[0];
  }
  log << "no doubling at 3 grid + 3 cycle sizes; closed forms exact";
  return ok;
}

// 9. Rank-radical sanity: ratio 1 for p = 1 and 0 for p = 0 on every carrier
// kind; on k[Z] every nonzero p of support <= 3 with coefficients +-1 stays
// at ratio >= 1/2 through n = 10; the ideal-property bound passes per index.
bool criterion_rank_radical(std::ostream& log) {
  bool ok = true;

  std::vector<std::pair<Carrier, ExhaustionSpec>> carriers;
  carriers.emplace_back(kz(), ExhaustionSpec::ball());
  carriers.emplace_back(Carrier::group_zd(2, F), ExhaustionSpec::ball());
  carriers.emplace_back(Carrier::free_group(2, F), ExhaustionSpec::ball());
  carriers.emplace_back(Carrier::free_algebra(2, F), ExhaustionSpec::parse("length"));
  carriers.emplace_back(Carrier::translation(gen("cycle:14"), F), ExhaustionSpec::ball());
  for (auto& [c, spec] : carriers) {
    FinSubspace L = c.kind() == carrier::CarrierKind::Translation
                        ? FinSubspace::span(c, {c.one()})
                        : FinSubspace::span_words(c, c.ball_words(1));
    int n_max = c.kind() == carrier::CarrierKind::GroupZd && c.generators() == 1 ? 4 : 2;
    auto ones = rankradical::rr_estimate(c, c.one(), L, spec, n_max);
    auto zeros = rankradical::rr_estimate(c, c.zero(), L, spec, n_max);
    for (const auto& rec : ones.records) ok = ok && rec.ratio == 1;
    for (const auto& rec : zeros.records) ok = ok && rec.ratio == 0;
  }

  // every nonzero p with support in the generator ball and coefficients +-1
  Carrier c = kz();
  FinSubspace L = kz_L(c);
  int tested = 0;
  for (int c1 = -1; c1 <= 1; ++c1)
    for (int c2 = -1; c2 <= 1; ++c2)
      for (int c3 = -1; c3 <= 1; ++c3) {
        if (c1 == 0 && c2 == 0 && c3 == 0) continue;
        AlgebraElement p(F);
        p.add_term(carrier::BasisWord::zd({0}), Scalar::from_int(F, c1));
        p.add_term(carrier::BasisWord::zd({1}), Scalar::from_int(F, c2));
        p.add_term(carrier::BasisWord::zd({-1}), Scalar::from_int(F, c3));
        auto series = rankradical::rr_estimate(c, p, L, ExhaustionSpec::ball(), 10);
        for (const auto& rec : series.records) ok = ok && rec.ratio >= mpq_class(1, 2);
        ++tested;
      }
  ok = ok && tested == 26;

  // ideal-property bound along the series for p = t, a = t^-1
  auto series_p = rankradical::rr_estimate(c, c.parse("t"), L, ExhaustionSpec::ball(), 10);
  auto series_ap = rankradical::rr_estimate(c, c.parse("1"), L, ExhaustionSpec::ball(), 10);
  auto mono = rankradical::rr_monotonicity_report(series_p, series_ap, c.parse("t^-1"));
  ok = ok && mono.all_pass;
  log << tested << " elements bounded below by 1/2; monotonicity "
      << (mono.all_pass ? "pass" : "fail");
  return ok;
}

// 10. Determinism: repeated CLI runs with identical configs produce
// byte-identical report bodies.
bool criterion_determinism(std::ostream& log) {
  std::vector<nlohmann::json> configs;
  configs.push_back({{"command", "folner-scan"},
                     {"algebra", {{"carrier", "group"}, {"group", "Z^d"}, {"d", 1}}},
                     {"n_max", 8}});
  configs.push_back({{"command", "paradox"}, {"graph", "tree:3,4"}, {"K", 1}});
  configs.push_back({{"command", "audit-rank"},
                     {"algebra", {{"carrier", "group"}, {"group", "Z^d"}, {"d", 1}}},
                     {"n", 5},
                     {"random_audits", {{"count", 10}, {"m", 2}, {"n", 1}}},
                     {"seed", 5}});
  configs.push_back({{"command", "rr-estimate"},
                     {"algebra", {{"carrier", "group"}, {"group", "Z^d"}, {"d", 1}}},
                     {"p", "1 + t"},
                     {"a", "t^-1"},
                     {"n_max", 5}});
  bool ok = true;
  for (const auto& cfg : configs) {
    auto a = cli::run(cfg);
    auto b = cli::run(cfg);
    ok = ok && a.lines == b.lines && !a.lines.empty();
  }
  log << configs.size() << " configs, bodies byte-identical";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "k[Z] Foelner scan matches 2/(2n+1) for n <= 50", criterion_folner_scan},
      {2, "Foelner build: V=11, core=9, defect=2/11, exact core oracle", criterion_folner_build},
      {3, "amplification scales dims and preserves the defect ratio", criterion_amplify},
      {4, "tensor keeps 1 - defect >= (9/11)^2 (81 of 121)", criterion_tensor},
      {5, "rank-condition audit over 100 randomized matrix pairs", criterion_rank_audits},
      {6, "commutator rank bound: 1000 randomized + structured equality", criterion_commutator},
      {7, "tree(3,5) doubling, identities and non-IBN witness", criterion_tree_pair},
      {8, "amenable windows: no doubling, exact isoperimetric forms", criterion_amenable_windows},
      {9, "rank-radical sanity and ideal-property bound", criterion_rank_radical},
      {10, "CLI determinism: byte-identical report bodies", criterion_determinism},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    std::ostringstream detail;
    bool pass = false;
    try {
      pass = crit.check(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    if (!pass) ++failures;
    std::cout << "criterion " << crit.number << " [" << (pass ? "PASS" : "FAIL") << "] "
              << crit.name;
    if (!detail.str().empty()) std::cout << " -- " << detail.str();
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures;
}
