#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "linksing/semigroup.hpp"

using namespace linksing;

namespace {

// Independent membership oracle: plain dynamic-programming sieve.
std::vector<char> brute_sieve(const std::vector<int>& gens, int bound) {
  std::vector<char> in(static_cast<std::size_t>(bound), 0);
  in[0] = 1;
  for (int i = 1; i < bound; ++i)
    for (int g : gens)
      if (i >= g && in[static_cast<std::size_t>(i - g)]) in[static_cast<std::size_t>(i)] = 1;
  return in;
}

}  // namespace

TEST_CASE("semigroup <4,6,13>") {
  NumSemigroup sg = NumSemigroup::from_generators({4, 6, 13});
  CHECK(sg.generators() == std::vector<int>{4, 6, 13});
  CHECK(sg.gaps() == std::vector<int>{1, 2, 3, 5, 7, 9, 11, 15});
  CHECK(sg.conductor() == 16);
  CHECK(sg.delta() == 8);
  CHECK(sg.milnor() == 16);
  CHECK(sg.contains(0));
  CHECK(sg.contains(13));
  CHECK(!sg.contains(15));
  CHECK(sg.contains(16));
}

TEST_CASE("semigroup <2,3>") {
  NumSemigroup sg = NumSemigroup::from_generators({2, 3});
  CHECK(sg.gaps() == std::vector<int>{1});
  CHECK(sg.delta() == 1);
  CHECK(sg.milnor() == 2);
}

TEST_CASE("semigroup <4,5> against a brute-force sieve") {
  auto in = brute_sieve({4, 5}, 20);
  std::vector<int> gaps;
  for (int i = 0; i < 20; ++i)
    if (!in[static_cast<std::size_t>(i)]) gaps.push_back(i);
  REQUIRE(gaps == std::vector<int>{1, 2, 3, 6, 7, 11});

  NumSemigroup sg = NumSemigroup::from_generators({4, 5});
  CHECK(sg.gaps() == gaps);
  CHECK(sg.delta() == 6);
}

TEST_CASE("conductor beyond the product of the two smallest generators") {
  // <4,6,23>: the largest gap is 25 = 4*6 + 1, so a sieve bounded by the
  // product of the two smallest generators would misreport it.
  NumSemigroup sg = NumSemigroup::from_generators({4, 6, 23});
  CHECK(!sg.contains(25));
  CHECK(sg.conductor() == 26);
}

TEST_CASE("degenerate semigroup of a smooth point") {
  NumSemigroup sg = NumSemigroup::from_generators({1});
  CHECK(sg.gaps().empty());
  CHECK(sg.conductor() == 0);
  CHECK(sg.delta() == 0);
  CHECK(sg.generators() == std::vector<int>{1});
}

TEST_CASE("gcd > 1 is rejected") {
  CHECK_THROWS_AS(NumSemigroup::from_generators({4, 6}), NotCofinite);
  CHECK_THROWS_AS(NumSemigroup::from_generators({0, 3}), std::invalid_argument);
}

TEST_CASE("generator list is re-minimalized") {
  NumSemigroup sg = NumSemigroup::from_generators({2, 3, 4, 7});
  CHECK(sg.generators() == std::vector<int>{2, 3});
}

TEST_CASE("closure up to twice the conductor") {
  NumSemigroup sg = NumSemigroup::from_generators({4, 6, 13});
  for (int x = 0; x <= 2 * sg.conductor(); ++x)
    for (int y = 0; x + y <= 2 * sg.conductor(); ++y)
      if (sg.contains(x) && sg.contains(y)) CHECK(sg.contains(x + y));
  CHECK(sg.conductor() <= 2 * sg.delta());
}

TEST_CASE("power series parsing and arithmetic") {
  PowerSeriesQ s = PowerSeriesQ::parse("t^6 + t^7", 40);
  CHECK(s.valuation() == 6);
  CHECK(s.coeff(7) == 1);

  PowerSeriesQ r = PowerSeriesQ::parse("1/2*t^3 - t^5", 40);
  CHECK(r.coeff(3) == Rat(1, 2));
  CHECK(r.coeff(5) == -1);

  CHECK(PowerSeriesQ::parse("3", 10).coeff(0) == 3);
  CHECK_THROWS_AS(PowerSeriesQ::parse("", 10), std::invalid_argument);
  CHECK_THROWS_AS(PowerSeriesQ::parse("t^", 10), std::invalid_argument);

  // (t^6+t^9)^2 - (t^4)^3 = 2 t^15 + t^18, the hand elimination behind <4,6,15>
  PowerSeriesQ a = PowerSeriesQ::parse("t^6 + t^9", 40);
  PowerSeriesQ b = PowerSeriesQ::parse("t^4", 40);
  PowerSeriesQ combo = a * a - b * b * b;
  CHECK(combo.valuation() == 15);
  CHECK(combo.coeff(15) == 2);
  CHECK(combo.coeff(18) == 1);
}

TEST_CASE("valuation semigroup of C[[t^4, t^6+t^7]]") {
  std::vector<PowerSeriesQ> gens = {PowerSeriesQ::parse("t^4", 40),
                                    PowerSeriesQ::parse("t^6 + t^7", 40)};
  NumSemigroup sg = semigroup_from_series(gens, 40);
  CHECK(sg.generators() == std::vector<int>{4, 6, 13});
  CHECK(sg.gaps() == std::vector<int>{1, 2, 3, 5, 7, 9, 11, 15});
  CHECK(sg.delta() == 8);
  CHECK(sg.milnor() == 16);
}

TEST_CASE("valuation semigroup with monomial generators") {
  std::vector<PowerSeriesQ> gens = {PowerSeriesQ::parse("t^2", 10),
                                    PowerSeriesQ::parse("t^3", 10)};
  NumSemigroup sg = semigroup_from_series(gens, 10);
  CHECK(sg == NumSemigroup::from_generators({2, 3}));

  // general monomial case agrees with the sieve route
  std::vector<PowerSeriesQ> gens2 = {PowerSeriesQ::parse("t^4", 60),
                                     PowerSeriesQ::parse("t^7", 60)};
  CHECK(semigroup_from_series(gens2, 60) == NumSemigroup::from_generators({4, 7}));
}

TEST_CASE("valuation semigroup of C[[t^4, t^6+t^9]] at two windows") {
  for (int trunc : {40, 60}) {
    std::vector<PowerSeriesQ> gens = {PowerSeriesQ::parse("t^4", trunc),
                                      PowerSeriesQ::parse("t^6 + t^9", trunc)};
    NumSemigroup sg = semigroup_from_series(gens, trunc);
    CHECK(sg.generators() == std::vector<int>{4, 6, 15});
  }
}

TEST_CASE("window too small to certify stability") {
  std::vector<PowerSeriesQ> gens = {PowerSeriesQ::parse("t^4", 14),
                                    PowerSeriesQ::parse("t^6 + t^7", 14)};
  CHECK_THROWS_AS(semigroup_from_series(gens, 14), TruncationTooLow);
}

TEST_CASE("modules of <2,3>") {
  NumSemigroup sg = NumSemigroup::from_generators({2, 3});
  auto mods = semigroup_modules(sg);
  REQUIRE(mods.size() == 2);
  CHECK(mods[0].min_generators() == std::vector<int>{0});
  CHECK(mods[1].min_generators() == std::vector<int>{0, 1});
}

TEST_CASE("modules of <2,5>") {
  NumSemigroup sg = NumSemigroup::from_generators({2, 5});

  // brute force over subsets of the gap set {1, 3}
  std::set<std::vector<int>> expected;
  for (int mask = 0; mask < 4; ++mask) {
    std::vector<int> added;
    if (mask & 1) added.push_back(1);
    if (mask & 2) added.push_back(3);
    auto in = [&](int x) {
      return sg.contains(x) || std::count(added.begin(), added.end(), x) > 0;
    };
    bool closed = true;
    for (int s : added)
      for (int g : {2, 5})
        if (!in(s + g)) closed = false;
    if (closed) {
      GammaModule m(sg, added);
      expected.insert(m.min_generators());
    }
  }
  REQUIRE(expected == std::set<std::vector<int>>{{0}, {0, 1}, {0, 3}});

  auto mods = semigroup_modules(sg);
  REQUIRE(mods.size() == 3);
  CHECK(mods[0].min_generators() == std::vector<int>{0});
  CHECK(mods[1].min_generators() == std::vector<int>{0, 1});
  CHECK(mods[2].min_generators() == std::vector<int>{0, 3});
}

TEST_CASE("modules of <4,6,13>") {
  NumSemigroup sg = NumSemigroup::from_generators({4, 6, 13});
  auto mods = semigroup_modules(sg);
  CHECK(mods.size() == 25);

  bool found = false;
  for (const auto& m : mods) {
    // every module is closed under the semigroup, tested to 2*conductor
    for (int x = 0; x <= 2 * sg.conductor(); ++x)
      for (int g = 0; x + g <= 2 * sg.conductor(); ++g)
        if (m.contains(x) && sg.contains(g)) CHECK(m.contains(x + g));
    CHECK(m.added_gap_count() == sg.delta() - m.extra_gap_count());
    if (m.min_generators() == std::vector<int>{0, 2, 9, 11}) {
      found = true;
      CHECK(m.added_gap_count() == 4);
    }
  }
  CHECK(found);
}

TEST_CASE("module construction from generators") {
  NumSemigroup sg = NumSemigroup::from_generators({4, 6, 13});

  GammaModule trivial = GammaModule::from_generators(sg, {0});
  CHECK(trivial.min_generators() == std::vector<int>{0});

  GammaModule m = GammaModule::from_generators(sg, {0, 2, 9, 11});
  CHECK(m.min_generators() == std::vector<int>{0, 2, 9, 11});

  // 13 already lies in the semigroup and is absorbed
  GammaModule r = GammaModule::from_generators(sg, {0, 2, 13});
  CHECK(r.min_generators() == std::vector<int>{0, 2});
}

TEST_CASE("module shift sets") {
  NumSemigroup sg = NumSemigroup::from_generators({4, 6, 13});

  SUBCASE("the trivial module shifts by the semigroup itself") {
    ShiftSet s = module_shifts(sg, GammaModule(sg, {}));
    CHECK(s.exceptional == sg.members_below(sg.conductor()));
    CHECK(s.threshold == 16);
  }
  SUBCASE("(0,1)") {
    ShiftSet s = module_shifts(sg, GammaModule::from_generators(sg, {0, 1}));
    CHECK(s.exceptional == std::vector<int>{12, 13});
    CHECK(s.threshold == 16);
  }
  SUBCASE("(0,2,9)") {
    ShiftSet s = module_shifts(sg, GammaModule::from_generators(sg, {0, 2, 9}));
    CHECK(s.exceptional == std::vector<int>{4, 8, 10, 12, 14});
    CHECK(s.threshold == 16);
  }
}

TEST_CASE("module colength") {
  NumSemigroup sg = NumSemigroup::from_generators({4, 6, 13});
  GammaModule trivial(sg, {});

  CHECK(module_colength(sg, trivial, 4) == 4);
  CHECK(module_colength(sg, trivial, 0) == 0);

  GammaModule m01 = GammaModule::from_generators(sg, {0, 1});
  CHECK(m01.added_gap_count() == 6);
  CHECK(module_colength(sg, m01, 12) == 6);

  CHECK_THROWS_AS(module_colength(sg, m01, 4), NotContained);
}

TEST_CASE("colength agrees with the direct set difference everywhere") {
  NumSemigroup sg = NumSemigroup::from_generators({4, 6, 13});
  for (const auto& mod : semigroup_modules(sg)) {
    ShiftSet shifts = module_shifts(sg, mod);
    for (int i = 0; i <= sg.conductor() + 10; ++i) {
      if (!shifts.contains(i)) continue;
      // module_colength performs its own brute-force cross-check and throws
      // on disagreement, so calling it is the assertion.
      int v = module_colength(sg, mod, i);
      CHECK(v == i - mod.added_gap_count());
    }
  }
}
