#pragma once

// Rank-ratio series of an element along Foelner-built almost
// representations: for each index n the exact ratio
// rank(psi_n(p)) / dim V_n. A series bounded below by a positive constant is
// evidence that p generates no rank collapse; a series tending to zero is
// evidence toward membership in the rank radical (never a certificate; the
// radical quantifies over all almost representations).

#include <vector>

#include <gmpxx.h>

#include "afd/almostrep.hpp"
#include "afd/carrier.hpp"
#include "afd/folner.hpp"
#include "afd/pathology.hpp"

namespace afd::rankradical {

struct RankRatioRecord {
  int n = 0;
  std::size_t v_dim = 0;
  std::size_t rank = 0;       // rank of psi_n(p)
  std::size_t core_dim = 0;
  mpq_class ratio;            // rank / v_dim
  mpq_class defect;           // of the representation at this index
};

struct RankRatioSeries {
  carrier::AlgebraElement p;
  folner::FinSubspace L;
  folner::ExhaustionSpec exhaustion;
  std::vector<RankRatioRecord> records;
};

// Builds the Foelner representation of L over Q_n for n = 1..n_max and
// records the exact rank ratio of p; requires 1 and p in L.
RankRatioSeries rr_estimate(const carrier::Carrier& c, const carrier::AlgebraElement& p,
                            const folner::FinSubspace& L, const folner::ExhaustionSpec& spec,
                            int n_max);

struct MonotonicityEntry {
  int n = 0;
  pathology::RrIdealReport bound;  // rank(psi(ap)) <= rank(psi(p)) + defect * dim V
};

struct MonotonicityReport {
  std::vector<MonotonicityEntry> entries;
  bool all_pass = true;
};

// Per-index ideal-property check along two series built over the same L and
// exhaustion, for p and for ap.
MonotonicityReport rr_monotonicity_report(const RankRatioSeries& series_p,
                                          const RankRatioSeries& series_ap,
                                          const carrier::AlgebraElement& a);

}  // namespace afd::rankradical
