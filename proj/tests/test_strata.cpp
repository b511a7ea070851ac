#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rootstrata/strata.hpp"

using namespace rootstrata;

TEST_CASE("stratum basics") {
  const RootSystem& b2 = canonical_system(Family::B, 2);
  Stratum st = stratum(b2, {0}, {1, 1});
  std::set<RootVec> got(st.roots.begin(), st.roots.end());
  CHECK(got == std::set<RootVec>{{1, 0}, {1, 1}, {1, 2}});
  CHECK(*st.min_root == RootVec{1, 0});
  CHECK(*st.max_root == RootVec{1, 2});
  CHECK(st.nontrivial);

  const RootSystem& a2 = canonical_system(Family::A, 2);
  Stratum parab = stratum(a2, {0}, {0, 1});
  CHECK_FALSE(parab.nontrivial);
  CHECK_FALSE(parab.min_root.has_value());
  CHECK(std::set<RootVec>(parab.roots.begin(), parab.roots.end()) ==
        std::set<RootVec>{{0, 1}, {0, -1}});

  const RootSystem& g2 = canonical_system(Family::G, 2);
  Stratum top = stratum(g2, {0}, {3, 2});
  CHECK(std::set<RootVec>(top.roots.begin(), top.roots.end()) ==
        std::set<RootVec>{{3, 1}, {3, 2}});
  for (const RootVec& r : top.roots) CHECK(g2.is_long(r));

  CHECK_THROWS_AS(stratum(a2, {0}, RootVec{2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(stratum(a2, {9}, RootVec{1, 0}), std::invalid_argument);
}

TEST_CASE("z stratum levels of G2") {
  const RootSystem& g2 = canonical_system(Family::G, 2);
  // alpha_1 carries mark 3
  REQUIRE(g2.marks()[0] == 3);

  auto whole = z_stratum(g2, {0}, {1, 0});
  CHECK(whole.size() == 12);  // level 1 spans everything

  RootVec level2{2, 1};
  auto z2 = z_stratum(g2, {0}, level2);
  CHECK(z2.size() == 4);  // A1 x A1
  SubsystemBasis b2 = z_stratum_basis(g2, {0}, level2, BasisSide::Min);
  REQUIRE(b2.components.size() == 2);
  CHECK(b2.components[0].family == Family::A);
  CHECK(b2.components[0].rank == 1);
  CHECK(b2.components[1].rank == 1);

  RootVec level3{3, 1};
  auto z3 = z_stratum(g2, {0}, level3);
  CHECK(z3.size() == 6);  // the long roots form A2
  for (const RootVec& r : z3) CHECK(g2.is_long(r));
  SubsystemBasis b3 = z_stratum_basis(g2, {0}, level3, BasisSide::Min);
  REQUIRE(b3.components.size() == 1);
  CHECK(b3.components[0].family == Family::A);
  CHECK(b3.components[0].rank == 2);
}

TEST_CASE("z stratum bases are sign uniform") {
  const RootSystem& b3 = canonical_system(Family::B, 3);
  RootVec beta{0, 1, 1};  // e_2
  for (BasisSide side : {BasisSide::Min, BasisSide::Max}) {
    SubsystemBasis basis = z_stratum_basis(b3, {2}, beta, side);
    for (const RootVec& gamma : z_stratum(b3, {2}, beta)) {
      // gamma = a * basis.gamma + combination of the rest; signs must agree
      int a = gamma[2] / basis.gamma[2];
      bool nonneg = a >= 0, nonpos = a <= 0;
      for (int j : basis.rest) {
        int c = gamma[j] - a * basis.gamma[j];
        if (c > 0) nonpos = false;
        if (c < 0) nonneg = false;
      }
      CHECK((nonneg || nonpos));
    }
  }
  CHECK_THROWS_AS(z_stratum_basis(b3, {0}, RootVec{0, 1, 1}, BasisSide::Min),
                  std::invalid_argument);
}

TEST_CASE("basis of the level-one stratum is Pi itself") {
  const RootSystem& b2 = canonical_system(Family::B, 2);
  SubsystemBasis b = z_stratum_basis(b2, {0}, {1, 0}, BasisSide::Min);
  CHECK(b.gamma == RootVec{1, 0});
  REQUIRE(b.components.size() == 1);
  CHECK(b.components[0].family == Family::B);
  CHECK(b.components[0].rank == 2);
}

TEST_CASE("dominant representatives per length") {
  const RootSystem& b2 = canonical_system(Family::B, 2);
  auto reps = dominant_in_stratum(b2, {0}, {1, 0});
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == RootVec{1, 2});  // long, equals the maximum
  CHECK(reps[1] == RootVec{1, 1});  // short

  const RootSystem& a3 = canonical_system(Family::A, 3);
  auto one = dominant_in_stratum(a3, {1}, {0, 1, 0});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == RootVec{1, 1, 1});
}

TEST_CASE("length profiles") {
  const RootSystem& b2 = canonical_system(Family::B, 2);
  CHECK(length_profile(b2, {0}, {1, 0}) == LengthProfile::Mixed);

  // G2 level one of the short simple root: both roots there are short
  const RootSystem& g2 = canonical_system(Family::G, 2);
  Stratum g2s = stratum(g2, {0}, {1, 0});
  CHECK(g2s.lengths_present == LengthProfile::ShortOnly);
  CHECK(length_profile(g2, {0}, {1, 0}) == LengthProfile::ShortOnly);

  const RootSystem& a3 = canonical_system(Family::A, 3);
  CHECK(length_profile(a3, {1}, {0, 1, 0}) == LengthProfile::LongOnly);
}

TEST_CASE("lacing criterion") {
  const RootSystem& f4 = canonical_system(Family::F, 4);
  RootVec beta;
  for (const RootVec& r : f4.positive_roots()) {
    if (r[3] == 1) {
      beta = r;
      break;
    }
  }
  CHECK_FALSE(lacing_criterion(f4, {3}, beta));
  CHECK(stratum(f4, {3}, beta).lengths_present == LengthProfile::ShortOnly);

  CHECK(lacing_criterion(f4, {3}, f4.highest_root()));  // c_4(theta) = 2

  // only long simple roots in S: vacuously true
  CHECK(lacing_criterion(f4, {0}, f4.highest_root()));
}

TEST_CASE("short witness") {
  const RootSystem& b3 = canonical_system(Family::B, 3);
  CHECK(short_witness(b3, {1, 1, 1}) == 2);  // gamma = alpha_3

  const RootSystem& g2 = canonical_system(Family::G, 2);
  CHECK(short_witness(g2, {1, 1}) == 0);  // gamma = alpha_1
  CHECK(short_witness(g2, {2, 1}) == 0);

  const RootSystem& f4 = canonical_system(Family::F, 4);
  CHECK(short_witness(f4, {1, 2, 3, 2}) == 2);  // gamma = alpha_3

  CHECK_THROWS_AS(short_witness(b3, {0, 1, 1}), std::invalid_argument);  // support not full
  CHECK_THROWS_AS(short_witness(b3, {1, 2, 2}), std::invalid_argument);  // long root
  const RootSystem& a3 = canonical_system(Family::A, 3);
  CHECK_THROWS_AS(short_witness(a3, {1, 1, 1}), std::invalid_argument);  // simply laced
}

TEST_CASE("level strata") {
  const RootSystem& b2 = canonical_system(Family::B, 2);
  Stratum zero = level_stratum(b2, 0, 0);
  CHECK_FALSE(zero.nontrivial);
  CHECK(zero.roots.size() == 2);  // the parabolic {alpha_2, -alpha_2}

  Stratum one = level_stratum(b2, 0, 1);
  CHECK(one.roots.size() == 3);

  const RootSystem& g2 = canonical_system(Family::G, 2);
  Stratum three = level_stratum(g2, 0, 3);
  CHECK(three.roots.size() == 2);
  CHECK(*three.max_root == RootVec{3, 2});

  CHECK_THROWS_AS(level_stratum(g2, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(level_stratum(g2, 1, 3), std::invalid_argument);

  // nonzero levels partition the complement of the wall subsystem
  for (const char* name : {"B3", "G2", "A3"}) {
    const RootSystem& rs = canonical_system(RootSystemSpec::parse(name));
    for (int i = 0; i < rs.rank(); ++i) {
      size_t total = 0;
      for (int k = -rs.marks()[i]; k <= rs.marks()[i]; ++k) {
        if (k != 0) total += level_stratum(rs, i, k).roots.size();
      }
      CHECK(total + level_stratum(rs, i, 0).roots.size() == rs.roots().size());
    }
  }
}
