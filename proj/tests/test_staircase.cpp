#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "linksing/semigroup.hpp"
#include "linksing/staircase.hpp"

using namespace linksing;

namespace {

std::vector<Staircase> collect(int k, int n, long long lmax) {
  std::vector<Staircase> out;
  enumerate_staircases(k, n, lmax, [&](const Staircase& s) { out.push_back(s); });
  return out;
}

// Semigroup-ideal count of colength l for <k,n>, through the module table:
// every ideal is a shifted module, and the shift fixes the colength.
long long ideal_count_via_modules(const NumSemigroup& sg, int l) {
  long long count = 0;
  for (const GammaModule& mod : semigroup_modules(sg)) {
    const ShiftSet shifts = module_shifts(sg, mod);
    const int i = l + mod.added_gap_count();
    if (shifts.contains(i)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("hand enumeration for k=2, n=3") {
  // monotone pairs (phi_1, phi_0) with phi_1 <= phi_0 <= phi_1 + 3, sum <= 2:
  // (0,0), (0,1), (1,1), (0,2)
  auto all = collect(2, 3, 2);
  REQUIRE(all.size() == 4);
  CHECK(all[0].steps == std::vector<int>{0, 0});
  CHECK(all[1].steps == std::vector<int>{0, 1});
  CHECK(all[2].steps == std::vector<int>{0, 2});
  CHECK(all[3].steps == std::vector<int>{1, 1});

  long long counts[3] = {0, 0, 0};
  for (const auto& s : all) ++counts[s.length()];
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 2);
}

TEST_CASE("smooth point has one ideal per length") {
  auto all = collect(1, 7, 5);
  CHECK(all.size() == 6);
  for (const auto& s : all) CHECK(s.generator_count() == 1);
}

TEST_CASE("staircase statistics") {
  SUBCASE("the unit ideal") {
    Staircase s{3, 4, {0, 0, 0}};
    CHECK(s.length() == 0);
    CHECK(s.generator_count() == 1);
  }
  SUBCASE("k=2, n=3, profile (1,2)") {
    Staircase s{2, 3, {1, 2}};
    CHECK(s.length() == 3);
    CHECK(s.generator_count() == 2);
  }
  SUBCASE("the ideal (t^21, t^23, t^24) of C[[t^4, t^5]]") {
    // row lengths 2 <= 4 <= 4 <= 6, sixteen boxes, three strict steps
    Staircase s{4, 5, {2, 4, 4, 6}};
    CHECK(s.length() == 16);
    CHECK(s.generator_count() == 3);
  }
}

TEST_CASE("non-coprime pairs are rejected") {
  CHECK_THROWS_AS(collect(2, 4, 5), NotCoprime);
  CHECK_THROWS_AS(staircase_series_direct(3, 6, 20), NotCoprime);
  CHECK_THROWS_AS(staircase_series_residue(2, 2, 20), NotCoprime);
}

TEST_CASE("direct series for the smooth point") {
  LaurentPoly one_minus_a2 = LaurentPoly::one() - LaurentPoly::monomial(1, 2, 0);
  TruncSeries expected = TruncSeries::expand(one_minus_a2, {2}, 60);
  CHECK(staircase_series_direct(1, 5, 60).equals_below_common(expected));
}

TEST_CASE("direct series coefficients for the trefoil cusp") {
  TruncSeries s = staircase_series_direct(2, 3, 40);
  LaurentPoly w = LaurentPoly::one() - LaurentPoly::monomial(1, 2, 0);
  CHECK(s.coeff(0) == w);
  CHECK(s.coeff(2) == w * w);
  CHECK(s.coeff(4) == w + w * w);
  CHECK(s.coeff(1).is_zero());
  CHECK(s.coeff(3).is_zero());
}

TEST_CASE("residue closed form equals direct enumeration") {
  const int N = 120;
  for (auto [k, n] : std::vector<std::pair<int, int>>{
           {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {3, 7}}) {
    TruncSeries direct = staircase_series_direct(k, n, N);
    TruncSeries residue = staircase_series_residue(k, n, N);
    auto m = direct.first_mismatch(residue);
    CHECK_MESSAGE(!m.has_value(), "(", k, ",", n, ") differs at q^", m ? *m : -1);
  }
}

TEST_CASE("residue closed form for k=1 is the geometric series") {
  LaurentPoly one_minus_a2 = LaurentPoly::one() - LaurentPoly::monomial(1, 2, 0);
  TruncSeries expected = TruncSeries::expand(one_minus_a2, {2}, 80);
  CHECK(staircase_series_residue(1, 4, 80).equals_below_common(expected));
}

TEST_CASE("staircases of length l match semigroup ideals of colength l") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}, {2, 7}}) {
    NumSemigroup sg = NumSemigroup::from_generators({k, n});
    auto hist = staircase_histogram(k, n, 12);
    for (int l = 0; l <= 12; ++l) {
      long long staircases = 0;
      if (auto it = hist.find(l); it != hist.end())
        for (const auto& [m, c] : it->second) staircases += c;
      CHECK_MESSAGE(staircases == ideal_count_via_modules(sg, l), "(", k, ",", n,
                    ") at l=", l);
    }
  }
}

TEST_CASE("histogram for the cusp") {
  auto hist = staircase_histogram(2, 3, 3);
  REQUIRE(hist.size() == 4);
  CHECK(hist[0] == std::map<int, long long>{{1, 1}});
  CHECK(hist[1] == std::map<int, long long>{{2, 1}});
  CHECK(hist[2] == std::map<int, long long>{{1, 1}, {2, 1}});
  CHECK(hist[3] == std::map<int, long long>{{1, 1}, {2, 1}});
}

TEST_CASE("a := q specialization collapses to 1") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {4, 5}}) {
    TruncSeries s = staircase_series_direct(k, n, 60).substitute(Subst::a_to_q);
    CHECK(s.equals_below_common(TruncSeries::from_poly(LaurentPoly::one(), 60)));
  }
}
