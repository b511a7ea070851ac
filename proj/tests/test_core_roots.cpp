#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootstrata/diagram.hpp"
#include "rootstrata/root_system.hpp"

using namespace rootstrata;

namespace {

int classical_h(const RootSystemSpec& s) {
  switch (s.family) {
    case Family::A: return s.rank + 1;
    case Family::B:
    case Family::C: return 2 * s.rank;
    case Family::D: return 2 * s.rank - 2;
    case Family::E: return s.rank == 6 ? 12 : s.rank == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

std::vector<RootSystemSpec> all_systems() {
  std::vector<RootSystemSpec> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= 8; ++n) out.emplace_back(Family::B, n);
  for (int n = 3; n <= 8; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= 8; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

}  // namespace

TEST_CASE("spec parsing and normalization") {
  CHECK(RootSystemSpec::parse("A5").name() == "A5");
  CHECK(RootSystemSpec::parse("E8").name() == "E8");
  CHECK(RootSystemSpec::parse("C2").name() == "B2");
  CHECK(RootSystemSpec::parse("D3").name() == "A3");
  CHECK_THROWS_AS(RootSystemSpec::parse("Z9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("D2"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("F5"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("A"), std::invalid_argument);
}

TEST_CASE("construction examples") {
  const RootSystem& a2 = canonical_system(Family::A, 2);
  CHECK(a2.roots().size() == 6);
  CHECK(a2.highest_root() == RootVec{1, 1});

  const RootSystem& g2 = canonical_system(Family::G, 2);
  CHECK(g2.roots().size() == 12);
  CHECK(g2.marks() == std::vector<int>{3, 2});
  CHECK(g2.is_short(g2.simple_root(0)));  // alpha_1 is the short root
  CHECK(g2.is_long(g2.simple_root(1)));

  const RootSystem& e8 = canonical_system(Family::E, 8);
  CHECK(e8.roots().size() == 240);
}

TEST_CASE("root count equals rank times coxeter number, rank <= 8") {
  for (const RootSystemSpec& s : all_systems()) {
    const RootSystem& rs = canonical_system(s);
    CHECK(rs.roots().size() == static_cast<size_t>(s.rank * classical_h(s)));
  }
}

TEST_CASE("inverse cartan") {
  const RootSystem& a2 = canonical_system(Family::A, 2);
  RationalMatrix inv = inverse_cartan(a2);
  CHECK(inv[0][0] == Rational(2) / 3);
  CHECK(inv[0][1] == Rational(1) / 3);
  CHECK(inv[1][0] == Rational(1) / 3);
  CHECK(inv[1][1] == Rational(2) / 3);

  const RootSystem& a1 = canonical_system(Family::A, 1);
  CHECK(inverse_cartan(a1)[0][0] == Rational(1) / 2);

  for (const char* name : {"B3", "F4", "E6"}) {
    const RootSystem& rs = canonical_system(RootSystemSpec::parse(name));
    RationalMatrix a(rs.rank(), RationalVec(rs.rank()));
    for (int i = 0; i < rs.rank(); ++i) {
      for (int j = 0; j < rs.rank(); ++j) a[i][j] = rs.cartan()[i][j];
    }
    CHECK(matmul(inverse_cartan(rs), a) == identity_matrix(rs.rank()));
  }
}

TEST_CASE("coweights pair to the identity") {
  const RootSystem& a2 = canonical_system(Family::A, 2);
  CHECK(coweight(a2, 0) == RationalVec{Rational(2) / 3, Rational(1) / 3});
  const RootSystem& a1 = canonical_system(Family::A, 1);
  CHECK(coweight(a1, 0) == RationalVec{Rational(1) / 2});

  for (const char* name : {"B4", "G2", "E7"}) {
    const RootSystem& rs = canonical_system(RootSystemSpec::parse(name));
    for (int i = 0; i < rs.rank(); ++i) {
      for (int j = 0; j < rs.rank(); ++j) {
        CHECK(rs.pairing(coweight(rs, i), to_rational(rs.simple_root(j))) == (i == j ? 1 : 0));
        CHECK(rs.cartan_pairing(weight(rs, i), j) == (i == j ? 1 : 0));
      }
    }
  }
  CHECK_THROWS_AS(coweight(canonical_system(Family::A, 2), 5), std::invalid_argument);
}

TEST_CASE("root poset order") {
  const RootSystem& a2 = canonical_system(Family::A, 2);
  CHECK(root_poset_leq(a2, {1, 0}, {1, 1}));
  CHECK_FALSE(root_poset_leq(a2, {1, 0}, {0, 1}));
  const RootSystem& g2 = canonical_system(Family::G, 2);
  CHECK(root_poset_leq(g2, {1, 0}, {3, 2}));
  CHECK_THROWS_AS(root_poset_leq(a2, {2, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("subdiagram classification") {
  const RootSystem& f4 = canonical_system(Family::F, 4);
  auto c3 = classify_subdiagram(f4, {1, 2, 3});
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].family == Family::C);
  CHECK(c3[0].rank == 3);

  const RootSystem& a5 = canonical_system(Family::A, 5);
  auto split = classify_subdiagram(a5, {0, 1, 3, 4});
  REQUIRE(split.size() == 2);
  CHECK(split[0].family == Family::A);
  CHECK(split[0].rank == 2);
  CHECK(split[1].family == Family::A);
  CHECK(split[1].rank == 2);

  const RootSystem& e6 = canonical_system(Family::E, 6);
  auto a5c = classify_subdiagram(e6, {0, 2, 3, 4, 5});
  REQUIRE(a5c.size() == 1);
  CHECK(a5c[0].family == Family::A);
  CHECK(a5c[0].rank == 5);

  CHECK(classify_subdiagram(f4, {}).empty());

  // every wall of every system classifies cleanly
  for (const RootSystemSpec& s : all_systems()) {
    const RootSystem& rs = canonical_system(s);
    for (int i = 0; i < rs.rank(); ++i) {
      std::vector<int> wall;
      for (int v = 0; v < rs.rank(); ++v) {
        if (v != i) wall.push_back(v);
      }
      CHECK_NOTHROW(classify_subdiagram(rs, wall));
    }
  }
}

TEST_CASE("weyl orders") {
  CHECK(weyl_order({{Family::A, 2, {0, 1}}}) == 6);
  CHECK(weyl_order(DiagramComponents{}) == 1);
  CHECK(weyl_order(Family::D, 5) == 1920);
  CHECK(weyl_order(Family::E, 6) == 51840);
  CHECK(weyl_order(Family::E, 7) == 2903040);
  CHECK(weyl_order(Family::E, 8) == 696729600);
  CHECK(weyl_order(Family::F, 4) == 1152);
  CHECK(weyl_order(Family::G, 2) == 12);
  CHECK(weyl_order(Family::B, 5) == 3840);
}

TEST_CASE("extended diagram") {
  const RootSystem& a2 = canonical_system(Family::A, 2);
  auto adj = extended_diagram_vertices(a2);
  for (int v = 0; v < 3; ++v) CHECK(adj[v].size() == 2);  // triangle

  const RootSystem& g2 = canonical_system(Family::G, 2);
  auto gadj = extended_diagram_vertices(g2);
  REQUIRE(gadj[2].size() == 1);
  CHECK(gadj[2][0] == 1);  // affine node attaches to the long simple root

  const RootSystem& e8 = canonical_system(Family::E, 8);
  auto eadj = extended_diagram_vertices(e8);
  REQUIRE(eadj[8].size() == 1);
  CHECK(eadj[8][0] == 7);  // attaches at alpha_8, the mark-2 end node
  CHECK(e8.marks()[7] == 2);
}

TEST_CASE("length dichotomy and divisibility") {
  for (const char* name : {"B3", "C4", "F4", "G2"}) {
    const RootSystem& rs = canonical_system(RootSystemSpec::parse(name));
    for (const RootVec& r : rs.roots()) {
      bool divisible = true;
      for (int i = 0; i < rs.rank(); ++i) {
        if (rs.is_short(rs.simple_root(i)) && r[i] % rs.lacing() != 0) divisible = false;
      }
      CHECK(divisible == rs.is_long(r));
    }
  }
}

TEST_CASE("sum of simple roots is a root") {
  for (const RootSystemSpec& s : all_systems()) {
    const RootSystem& rs = canonical_system(s);
    CHECK(rs.is_root(RootVec(rs.rank(), 1)));
  }
}

TEST_CASE("reflection basics") {
  const RootSystem& b2 = canonical_system(Family::B, 2);
  CHECK(b2.reflect(0, b2.simple_root(0)) == RootVec{-1, 0});
  CHECK(b2.reflect(1, RootVec{1, 0}) == RootVec{1, 2});  // s_2(alpha_1) = alpha_1 + 2 alpha_2
  for (const RootVec& r : b2.roots()) {
    CHECK(b2.reflect(0, b2.reflect(0, r)) == r);
    CHECK(b2.norm2(b2.reflect(0, r)) == b2.norm2(r));
  }
}
