#include <doctest.h>

#include "afd/rankradical.hpp"

using namespace afd;
using carrier::AlgebraElement;
using carrier::Carrier;
using exactlin::Field;
using folner::ExhaustionSpec;
using folner::FinSubspace;

TEST_SUITE_BEGIN("rankradical");

static const Field F = Field::gfp(exactlin::kDefaultPrime);

static Carrier kz() { return Carrier::group_zd(1, F); }

static FinSubspace kz_L(const Carrier& c) {
  return FinSubspace::span(c, {c.parse("1"), c.parse("t"), c.parse("t^-1")});
}

TEST_CASE("unit and zero elements pin the extreme ratios") {
  Carrier c = kz();
  FinSubspace l = kz_L(c);
  auto ones = rankradical::rr_estimate(c, c.one(), l, ExhaustionSpec::ball(), 4);
  for (const auto& rec : ones.records) {
    CHECK(rec.rank == rec.v_dim);
    CHECK(rec.ratio == 1);
  }
  auto zeros = rankradical::rr_estimate(c, c.zero(), l, ExhaustionSpec::ball(), 4);
  for (const auto& rec : zeros.records) {
    CHECK(rec.rank == 0);
    CHECK(rec.ratio == 0);
  }

  // the same sanity holds on a second carrier kind
  Carrier fa = Carrier::free_algebra(2, F);
  FinSubspace fl = FinSubspace::span_words(fa, fa.ball_words(1));
  auto fa_ones = rankradical::rr_estimate(fa, fa.one(), fl, ExhaustionSpec::parse("length"), 3);
  for (const auto& rec : fa_ones.records) CHECK(rec.ratio == 1);
}

TEST_CASE("t - 1 keeps full rank on k[Z] balls") {
  Carrier c = kz();
  FinSubspace l = kz_L(c);
  auto series = rankradical::rr_estimate(c, c.parse("t - 1"), l, ExhaustionSpec::ball(), 5);
  const auto& rec = series.records.back();
  CHECK(rec.n == 5);
  CHECK(rec.v_dim == 11);
  CHECK(rec.rank == 11);  // the truncated shift minus identity has trivial kernel
  CHECK(rec.ratio == 1);
}

TEST_CASE("small-support elements stay bounded away from zero") {
  Carrier c = kz();
  FinSubspace l = kz_L(c);
  for (const std::string& lit :
       {"t", "t^-1", "1 + t", "1 - t", "t + t^-1", "t - t^-1", "1 + t + t^-1", "1 - t - t^-1"}) {
    auto series = rankradical::rr_estimate(c, c.parse(lit), l, ExhaustionSpec::ball(), 6);
    for (const auto& rec : series.records) {
      CHECK(rec.ratio >= mpq_class(1, 2));
      CHECK(rec.ratio <= 1);
    }
  }
}

TEST_CASE("series are deterministic") {
  Carrier c = kz();
  FinSubspace l = kz_L(c);
  auto s1 = rankradical::rr_estimate(c, c.parse("1 + t"), l, ExhaustionSpec::ball(), 5);
  auto s2 = rankradical::rr_estimate(c, c.parse("1 + t"), l, ExhaustionSpec::ball(), 5);
  REQUIRE(s1.records.size() == s2.records.size());
  for (std::size_t i = 0; i < s1.records.size(); ++i) {
    CHECK(s1.records[i].rank == s2.records[i].rank);
    CHECK(s1.records[i].ratio == s2.records[i].ratio);
  }
}

TEST_CASE("monotonicity report passes along the shift series") {
  Carrier c = kz();
  FinSubspace l = kz_L(c);
  AlgebraElement p = c.parse("t");
  AlgebraElement a = c.parse("t^-1");
  AlgebraElement ap = c.mul(a, p);  // = 1
  auto series_p = rankradical::rr_estimate(c, p, l, ExhaustionSpec::ball(), 6);
  auto series_ap = rankradical::rr_estimate(c, ap, l, ExhaustionSpec::ball(), 6);
  auto report = rankradical::rr_monotonicity_report(series_p, series_ap, a);
  CHECK(report.all_pass);
  REQUIRE(report.entries.size() == 6);
  for (const auto& e : report.entries) CHECK(e.bound.pass);

  // a = 1 is trivially tight per index
  auto same = rankradical::rr_monotonicity_report(series_p, series_p, c.one());
  CHECK(same.all_pass);

  // a fabricated violating index must fail
  auto corrupted = series_ap;
  corrupted.records[2].rank = corrupted.records[2].v_dim + 5;
  auto bad = rankradical::rr_monotonicity_report(series_p, corrupted, a);
  CHECK(!bad.all_pass);
  CHECK(!bad.entries[2].bound.pass);
}

TEST_CASE("errors") {
  Carrier c = kz();
  FinSubspace l = kz_L(c);
  CHECK_THROWS_AS(
      (void)rankradical::rr_estimate(c, c.parse("t^2"), l, ExhaustionSpec::ball(), 3),
      std::invalid_argument);
  FinSubspace no_unit = FinSubspace::span(c, {c.parse("t")});
  CHECK_THROWS_AS(
      (void)rankradical::rr_estimate(c, c.parse("t"), no_unit, ExhaustionSpec::ball(), 3),
      std::invalid_argument);

  auto s_ball = rankradical::rr_estimate(c, c.parse("t"), l, ExhaustionSpec::ball(), 3);
  auto s_other = s_ball;
  s_other.exhaustion.center = "t";
  CHECK_THROWS_AS((void)rankradical::rr_monotonicity_report(s_ball, s_other, c.one()),
                  std::invalid_argument);
}

TEST_SUITE_END();
