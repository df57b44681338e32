#include "afd/cli.hpp"

#include <chrono>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "afd/io.hpp"
#include "afd/pathology.hpp"
#include "afd/rankradical.hpp"

namespace afd::cli {

using carrier::AlgebraElement;
using carrier::Carrier;
using carrier::CarrierKind;
using carrier::ElementMatrix;
using exactlin::Field;
using exactlin::Mat;
using exactlin::Scalar;
using folner::ExhaustionSpec;
using folner::FinSubspace;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Field config_field(const json& cfg) {
  return cfg.contains("field") ? io::field_from_json(cfg.at("field"))
                               : Field::gfp(exactlin::kDefaultPrime);
}

Carrier config_carrier(const json& cfg) {
  if (cfg.contains("algebra_path")) {
    std::ifstream in(cfg.at("algebra_path").get<std::string>());
    if (!in)
      throw std::invalid_argument("cannot open algebra spec: " +
                                  cfg.at("algebra_path").get<std::string>());
    json spec;
    in >> spec;
    return io::algebra_from_json(spec, config_field(cfg));
  }
  if (!cfg.contains("algebra")) throw std::invalid_argument("config needs an \"algebra\" object");
  return io::algebra_from_json(cfg.at("algebra"), config_field(cfg));
}

AlgebraElement adjacency_element(const Carrier& c) {
  const auto& g = *c.graph();
  AlgebraElement adj(c.field());
  Scalar one = Scalar::one(c.field());
  for (int u = 0; u < static_cast<int>(g.size()); ++u)
    for (int v : g.neighbors(u)) adj.add_term(carrier::BasisWord::unit_pair(u, v), one);
  return adj;
}

// Generator ball for group/free carriers, span{1, adjacency} for
// translation algebras.
FinSubspace default_L(const Carrier& c) {
  if (c.kind() == CarrierKind::Translation)
    return FinSubspace::span(c, {c.one(), adjacency_element(c)});
  return FinSubspace::span_words(c, c.ball_words(1));
}

// Explicit literals are used as given; the defaults are only ever extended
// (rr-estimate grows the default L by p, a and ap so its preconditions hold).
FinSubspace subspace_from_config(const Carrier& c, const json& cfg, const std::string& key,
                                 const std::vector<AlgebraElement>& default_extra_gens = {}) {
  std::vector<AlgebraElement> gens;
  if (cfg.contains(key)) {
    for (const auto& lit : cfg.at(key)) gens.push_back(c.parse(lit.get<std::string>()));
  } else {
    FinSubspace base = default_L(c);
    gens.assign(base.basis().begin(), base.basis().end());
    gens.insert(gens.end(), default_extra_gens.begin(), default_extra_gens.end());
  }
  return FinSubspace::span(c, gens);
}

ExhaustionSpec config_exhaustion(const json& cfg) {
  if (cfg.contains("exhaustion")) return io::exhaustion_from_json(cfg.at("exhaustion"));
  return ExhaustionSpec::ball();
}

ElementMatrix matrix_from_json(const Carrier& c, const json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix literal must be a nonempty array of rows");
  const std::size_t m = rows.size();
  const std::size_t n = rows.at(0).size();
  ElementMatrix out(c, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows.at(i).size() != n) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t j = 0; j < n; ++j)
      out.set(i, j, c.parse(rows.at(i).at(j).get<std::string>()));
  }
  return out;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_gfp()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.prime() - 1);
    return Scalar::from_int(f, static_cast<long long>(dist(rng)));
  }
  std::uniform_int_distribution<int> dist(-4, 4);
  return Scalar::from_int(f, dist(rng));
}

AlgebraElement random_element(const FinSubspace& L, std::mt19937_64& rng) {
  AlgebraElement out(L.carrier().field());
  for (const auto& b : L.basis()) out += b.scaled(random_scalar(L.carrier().field(), rng));
  return out;
}

Mat random_mat(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_scalar(f, rng));
  return m;
}

ordered_json verify_to_json(const almostrep::VerificationReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& ch : report.checks) {
    ordered_json c;
    c["name"] = ch.name;
    c["pass"] = ch.pass;
    if (!ch.detail.empty()) c["detail"] = ch.detail;
    checks.push_back(std::move(c));
  }
  ordered_json j;
  j["checks"] = checks;
  j["maximal_core_dim"] = report.maximal_core_dim;
  j["maximal_defect"] = io::q_str(report.maximal_defect);
  j["all_pass"] = report.all_pass();
  return j;
}

ordered_json rep_summary(const almostrep::AlmostRep& rep) {
  ordered_json j;
  j["L_dim"] = rep.l_dim();
  j["V_dim"] = rep.v_dim;
  j["core_dim"] = rep.core_dim();
  j["defect"] = io::q_str(rep.defect);
  j["table_size"] = rep.table.size();
  return j;
}

void emit(RunResult& res, ordered_json record) { res.lines.push_back(record.dump()); }

// ---------------------------------------------------------------------------

RunResult cmd_folner_scan(const json& cfg) {
  Carrier c = config_carrier(cfg);
  FinSubspace B = subspace_from_config(c, cfg, "L");
  int n_max = cfg.value("n_max", 10);
  auto certs = folner::folner_scan(c, B, config_exhaustion(cfg), n_max);
  RunResult res;
  for (const auto& cert : certs) {
    ordered_json j;
    j["command"] = "folner-scan";
    j["n"] = cert.n;
    j["dim_B"] = cert.dim_B;
    j["dim_Q"] = cert.dim_Q;
    j["dim_BQ"] = cert.dim_BQ;
    j["ratio"] = io::q_str(cert.ratio);
    emit(res, std::move(j));
  }
  return res;
}

almostrep::AlmostRep build_rep_from_config(const json& cfg, Carrier& c_out) {
  Carrier c = config_carrier(cfg);
  FinSubspace L = subspace_from_config(c, cfg, "L");
  FinSubspace Q = cfg.contains("Q")
                      ? subspace_from_config(c, cfg, "Q")
                      : folner::exhaustion_subspace(c, config_exhaustion(cfg), cfg.value("n", 5));
  c_out = c;
  return almostrep::build_from_folner(L, Q);
}

RunResult cmd_build(const json& cfg, bool with_verify) {
  Carrier c = Carrier::group_zd(1, config_field(cfg));
  almostrep::AlmostRep rep = build_rep_from_config(cfg, c);
  RunResult res;
  ordered_json j;
  j["command"] = with_verify ? "verify" : "almostrep-build";
  j["rep"] = rep_summary(rep);
  if (cfg.value("emit_rep", false)) j["serialized"] = io::almostrep_to_json(rep);
  auto report = almostrep::verify(rep);
  if (with_verify || !report.all_pass()) j["verify"] = verify_to_json(report);
  res.invariants_ok = report.all_pass();
  emit(res, std::move(j));
  return res;
}

RunResult cmd_amplify(const json& cfg) {
  Carrier c = Carrier::group_zd(1, config_field(cfg));
  almostrep::AlmostRep rep = build_rep_from_config(cfg, c);
  std::size_t amp_n = cfg.value("amplify_n", 2);
  almostrep::AlmostRep amp = almostrep::amplify(rep, amp_n);
  auto report = almostrep::verify(amp);

  RunResult res;
  ordered_json j;
  j["command"] = "amplify";
  j["amplify_n"] = amp_n;
  j["base"] = rep_summary(rep);
  j["amplified"] = rep_summary(amp);
  bool dims_ok = amp.v_dim == amp_n * rep.v_dim && amp.core_dim() >= amp_n * rep.core_dim() &&
                 amp.defect <= rep.defect;
  j["dims_ok"] = dims_ok;
  j["verify"] = verify_to_json(report);
  res.invariants_ok = dims_ok && report.all_pass();
  emit(res, std::move(j));
  return res;
}

RunResult cmd_tensor(const json& cfg) {
  Carrier c = Carrier::group_zd(1, config_field(cfg));
  almostrep::AlmostRep rep_a = build_rep_from_config(cfg, c);
  almostrep::AlmostRep rep_b = rep_a;
  if (cfg.contains("second")) {
    json second = cfg.at("second");
    if (!second.contains("field") && cfg.contains("field")) second["field"] = cfg.at("field");
    rep_b = build_rep_from_config(second, c);
  }
  almostrep::AlmostRep prod = almostrep::tensor(rep_a, rep_b);
  auto report = almostrep::verify(prod);

  RunResult res;
  ordered_json j;
  j["command"] = "tensor";
  j["left"] = rep_summary(rep_a);
  j["right"] = rep_summary(rep_b);
  j["tensor"] = rep_summary(prod);
  mpq_class kept = (1 - rep_a.defect) * (1 - rep_b.defect);
  bool bound_ok = 1 - prod.defect >= kept;
  j["submultiplicative_ok"] = bound_ok;
  j["verify"] = verify_to_json(report);
  res.invariants_ok = bound_ok && report.all_pass();
  emit(res, std::move(j));
  return res;
}

RunResult cmd_paradox(const json& cfg) {
  if (!cfg.contains("graph")) throw std::invalid_argument("paradox needs a \"graph\" spec");
  graphlab::GraphPtr g = io::graph_from_json(cfg.at("graph"));
  Field f = config_field(cfg);
  // single K (default 1), or a scan K = 1..K_max
  std::vector<int> ks;
  if (cfg.contains("K_max")) {
    for (int k = 1; k <= cfg.at("K_max").get<int>(); ++k) ks.push_back(k);
  } else {
    ks.push_back(cfg.value("K", 1));
  }

  RunResult res;
  for (int K : ks) {
    auto pair = graphlab::paradoxical_pair(g, K);
    auto identities = graphlab::verify_pair(pair, f);

    ordered_json j;
    j["command"] = "paradox";
    j["pair"] = io::pair_to_json(pair);
    ordered_json checks = ordered_json::array();
    for (const auto& ch : identities.checks) {
      ordered_json cj;
      cj["name"] = ch.name;
      cj["pass"] = ch.pass;
      cj["violations"] = ch.violations.size();
      checks.push_back(std::move(cj));
    }
    j["identities"] = checks;
    j["orientation"] = identities.orientation;
    j["identities_pass"] = identities.all_pass();
    if (pair.success && !pair.domain.empty()) {
      auto witness = graphlab::non_ibn_witness(pair, f);
      ordered_json w;
      w["WU_is_identity"] = witness.wu_is_identity;
      w["UW_is_identity"] = witness.uw_is_identity;
      w["domain_size"] = witness.domain_size;
      w["matched_region_size"] = witness.matched_region_size;
      j["non_ibn_witness"] = w;
    }
    res.invariants_ok = res.invariants_ok && identities.all_pass();
    emit(res, std::move(j));
  }
  return res;
}

RunResult cmd_audit_rank(const json& cfg) {
  Carrier c = Carrier::group_zd(1, config_field(cfg));
  almostrep::AlmostRep rep = build_rep_from_config(cfg, c);

  RunResult res;
  auto emit_audit = [&](const pathology::RankAudit& audit, int index) {
    ordered_json j;
    j["command"] = "audit-rank";
    j["index"] = index;
    j["m"] = audit.m;
    j["n"] = audit.n;
    j["V_dim"] = audit.v_dim;
    j["core_dim"] = audit.core_dim;
    j["lhs"] = audit.lhs;
    j["rhs"] = audit.rhs;
    j["contradiction"] = audit.contradiction;
    j["rank_product"] = audit.rank_product;
    j["range_bound_ok"] = audit.range_bound_ok;
    if (audit.fixed_dim) j["fixed_dim"] = *audit.fixed_dim;
    res.invariants_ok = res.invariants_ok && audit.range_bound_ok;
    emit(res, std::move(j));
  };

  if (cfg.contains("A") && cfg.contains("B")) {
    ElementMatrix a = matrix_from_json(c, cfg.at("A"));
    ElementMatrix b = matrix_from_json(c, cfg.at("B"));
    emit_audit(pathology::rank_condition_audit(rep, a, b), 0);
  } else {
    const json defaults = json::object();
    const json& rnd = cfg.contains("random_audits") ? cfg.at("random_audits") : defaults;
    int count = rnd.value("count", 100);
    std::size_t m = rnd.value("m", 2);
    std::size_t n = rnd.value("n", 1);
    std::mt19937_64 rng(cfg.value("seed", 0));
    const FinSubspace& L = *rep.domain;
    for (int i = 0; i < count; ++i) {
      ElementMatrix a(c, m, n), b(c, n, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          a.set(r, s, random_element(L, rng));
          b.set(s, r, random_element(L, rng));
        }
      emit_audit(pathology::rank_condition_audit(rep, a, b), i);
    }
  }
  return res;
}

RunResult cmd_commutator_check(const json& cfg) {
  Field f = config_field(cfg);
  RunResult res;
  const json defaults = json::object();
  const json& rnd = cfg.contains("random") ? cfg.at("random") : defaults;
  int count = rnd.value("count", 1000);
  std::size_t min_size = rnd.value("min_size", 2);
  std::size_t max_size = rnd.value("max_size", 16);
  if (count < 0 || min_size < 1 || min_size > max_size)
    throw std::invalid_argument("commutator-check: bad size range");
  std::mt19937_64 rng(cfg.value("seed", 0));

  std::size_t passes = 0;
  std::size_t worst_slack = std::numeric_limits<std::size_t>::max();
  for (int i = 0; i < count; ++i) {
    std::size_t size = min_size + (static_cast<std::size_t>(i) % (max_size - min_size + 1));
    auto report = pathology::commutator_bound_check(random_mat(f, size, rng),
                                                    random_mat(f, size, rng));
    if (report.pass) {
      ++passes;
      worst_slack = std::min(worst_slack, report.bound - report.rank_commutator);
    }
  }
  ordered_json j;
  j["command"] = "commutator-check";
  j["random_trials"] = count;
  j["random_passes"] = passes;
  if (worst_slack != std::numeric_limits<std::size_t>::max()) j["min_slack"] = worst_slack;
  res.invariants_ok = passes == static_cast<std::size_t>(count);

  if (cfg.value("structured_kz", true)) {
    Carrier c = Carrier::group_zd(1, f);
    FinSubspace L = default_L(c);
    int n = cfg.value("n", 5);
    FinSubspace Q = folner::exhaustion_subspace(c, ExhaustionSpec::ball(), n);
    almostrep::AlmostRep rep = almostrep::build_from_folner(L, Q);
    auto report = pathology::commutator_bound_check(rep.psi(c.parse("t")), rep.psi(c.parse("t^-1")));
    ordered_json s;
    s["l"] = report.l;
    s["fixed_dim"] = report.fixed_dim;
    s["rank_commutator"] = report.rank_commutator;
    s["bound"] = report.bound;
    s["pass"] = report.pass;
    j["structured_kz"] = s;
    res.invariants_ok = res.invariants_ok && report.pass;
  }
  emit(res, std::move(j));
  return res;
}

RunResult cmd_rr_estimate(const json& cfg) {
  Carrier c = config_carrier(cfg);
  if (!cfg.contains("p")) throw std::invalid_argument("rr-estimate needs an element \"p\"");
  AlgebraElement p = c.parse(cfg.at("p").get<std::string>());

  std::vector<AlgebraElement> extra = {p};
  std::optional<AlgebraElement> a;
  if (cfg.contains("a")) {
    a = c.parse(cfg.at("a").get<std::string>());
    extra.push_back(*a);
    extra.push_back(c.mul(*a, p));
  }
  FinSubspace L = subspace_from_config(c, cfg, "L", extra);
  ExhaustionSpec spec = config_exhaustion(cfg);
  int n_max = cfg.value("n_max", 10);

  auto series = rankradical::rr_estimate(c, p, L, spec, n_max);
  RunResult res;
  for (const auto& rec : series.records) {
    ordered_json j;
    j["command"] = "rr-estimate";
    j["p"] = c.to_string(p);
    j["n"] = rec.n;
    j["V_dim"] = rec.v_dim;
    j["rank"] = rec.rank;
    j["ratio"] = io::q_str(rec.ratio);
    j["defect"] = io::q_str(rec.defect);
    emit(res, std::move(j));
  }
  if (a) {
    AlgebraElement ap = c.mul(*a, p);
    auto series_ap = rankradical::rr_estimate(c, ap, L, spec, n_max);
    auto mono = rankradical::rr_monotonicity_report(series, series_ap, *a);
    for (const auto& entry : mono.entries) {
      ordered_json j;
      j["command"] = "rr-monotonicity";
      j["a"] = c.to_string(*a);
      j["n"] = entry.n;
      j["rank_p"] = entry.bound.rank_p;
      j["rank_ap"] = entry.bound.rank_ap;
      j["bound"] = io::q_str(entry.bound.bound);
      j["pass"] = entry.bound.pass;
      emit(res, std::move(j));
    }
    res.invariants_ok = mono.all_pass;
  }
  return res;
}

}  // namespace

RunResult run(const json& config) {
  std::string command = config.value("command", "");
  if (command == "folner-scan") return cmd_folner_scan(config);
  if (command == "almostrep-build") return cmd_build(config, false);
  if (command == "verify") return cmd_build(config, true);
  if (command == "amplify") return cmd_amplify(config);
  if (command == "tensor") return cmd_tensor(config);
  if (command == "paradox") return cmd_paradox(config);
  if (command == "audit-rank") return cmd_audit_rank(config);
  if (command == "commutator-check") return cmd_commutator_check(config);
  if (command == "rr-estimate") return cmd_rr_estimate(config);
  throw std::invalid_argument("unknown command: \"" + command + "\"");
}

int run_to_stream(const json& config, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  try {
    RunResult res = run(config);
    for (const auto& line : res.lines) out << line << "\n";
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    ordered_json summary;
    summary["summary"] = {{"ok", res.invariants_ok},
                          {"records", res.lines.size()},
                          {"wall_ms", ms}};
    out << summary.dump() << "\n";
    return res.invariants_ok ? 0 : 1;
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = e.what();
    out << err.dump() << "\n";
    return 2;
  }
}

}  // namespace afd::cli
