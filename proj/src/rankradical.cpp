#include "afd/rankradical.hpp"

#include <stdexcept>

namespace afd::rankradical {

using carrier::AlgebraElement;
using carrier::Carrier;
using folner::ExhaustionSpec;
using folner::FinSubspace;

RankRatioSeries rr_estimate(const Carrier& c, const AlgebraElement& p, const FinSubspace& L,
                            const ExhaustionSpec& spec, int n_max) {
  if (!L.carrier().same_carrier(c)) throw std::invalid_argument("rr_estimate: mixed carriers");
  if (!L.contains_one()) throw std::invalid_argument("rr_estimate: 1 not in L");
  if (!L.contains(p)) throw std::invalid_argument("rr_estimate: p not in L");

  RankRatioSeries series{p, L, spec, {}};
  for (int n = 1; n <= n_max; ++n) {
    FinSubspace Q = folner::exhaustion_subspace(c, spec, n);
    almostrep::AlmostRep rep = almostrep::build_from_folner(L, Q);
    RankRatioRecord rec;
    rec.n = n;
    rec.v_dim = rep.v_dim;
    rec.core_dim = rep.core_dim();
    rec.rank = exactlin::rank(rep.psi(p));
    rec.ratio = mpq_class(static_cast<long>(rec.rank), static_cast<long>(rec.v_dim));
    rec.ratio.canonicalize();
    rec.defect = rep.defect;
    series.records.push_back(std::move(rec));
  }
  return series;
}

MonotonicityReport rr_monotonicity_report(const RankRatioSeries& series_p,
                                          const RankRatioSeries& series_ap,
                                          const AlgebraElement& a) {
  if (!(series_p.exhaustion == series_ap.exhaustion))
    throw std::invalid_argument("rr_monotonicity_report: mismatched exhaustions");
  if (!series_p.L.same_space(series_ap.L))
    throw std::invalid_argument("rr_monotonicity_report: series built over different L");
  if (series_p.records.size() != series_ap.records.size())
    throw std::invalid_argument("rr_monotonicity_report: series lengths differ");
  if (!series_p.L.contains(series_p.L.carrier().mul(a, series_p.p)))
    throw std::invalid_argument("rr_monotonicity_report: ap not in L");

  MonotonicityReport report;
  for (std::size_t k = 0; k < series_p.records.size(); ++k) {
    const auto& rp = series_p.records[k];
    const auto& rap = series_ap.records[k];
    if (rp.v_dim != rap.v_dim)
      throw std::invalid_argument("rr_monotonicity_report: dimension mismatch at an index");
    MonotonicityEntry entry;
    entry.n = rp.n;
    entry.bound = pathology::rr_ideal_bound(rp.rank, rp.v_dim, rap.defect, rap.rank);
    report.all_pass = report.all_pass && entry.bound.pass;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace afd::rankradical
