#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "crflag/error.hpp"
#include "crflag/oracle.hpp"
#include "crflag/realform.hpp"
#include "test_util.hpp"

using namespace crflag;

namespace {

// Dimension of a maximal compact subalgebra and real rank, from the
// classification of real simple Lie algebras.
struct Classified {
  int dim_k;
  int real_rank;
};

std::map<std::string, Classified> classified_forms() {
  std::map<std::string, Classified> m;
  auto so = [](int n) { return n * (n - 1) / 2; };
  auto sp = [](int n) { return n * (2 * n + 1); };
  for (int n = 2; n <= 8; ++n) {
    m["sl" + std::to_string(n) + "R"] = {so(n), n - 1};
    m["su" + std::to_string(n)] = {n * n - 1, 0};
  }
  for (int p = 1; p <= 7; ++p)
    for (int q = 1; q <= p; ++q)
      if (p + q <= 7 && p + q >= 3)
        m["su" + std::to_string(p) + std::to_string(q)] = {p * p + q * q - 1, q};
  for (int k : {2, 3, 4}) m["sustar" + std::to_string(2 * k)] = {sp(k), k - 1};
  for (int n = 2; n <= 7; ++n) {
    m["so" + std::to_string(n + 1) + std::to_string(n)] = {so(n + 1) + so(n), n};
    m["so" + std::to_string(2 * n + 1)] = {so(2 * n + 1), 0};
  }
  for (int n : {2, 3, 4}) m["so" + std::to_string(2 * n) + "1"] = {so(2 * n), 1};
  m["so52"] = {so(5) + so(2), 2};
  for (int n = 3; n <= 7; ++n) {
    m["sp" + std::to_string(n) + "R"] = {n * n, n};
    m["sp" + std::to_string(n)] = {sp(n), 0};
  }
  m["sp21"] = {sp(2) + sp(1), 1};
  m["sp31"] = {sp(3) + sp(1), 1};
  m["sp22"] = {2 * sp(2), 2};
  for (int n = 4; n <= 7; ++n) {
    m["so" + std::to_string(n) + std::to_string(n)] = {2 * so(n), n};
    m["so" + std::to_string(2 * n)] = {so(2 * n), 0};
    m["sostar" + std::to_string(2 * n)] = {n * n, n / 2};
  }
  m["so71"] = {so(7), 1};
  m["so91"] = {so(9), 1};
  m["so53"] = {so(5) + so(3), 3};
  m["so62"] = {so(6) + so(2), 2};
  m["e6_6"] = {36, 6};
  m["e6_2"] = {38, 4};
  m["e6_m14"] = {46, 2};
  m["e6_m26"] = {52, 2};
  m["e6c"] = {78, 0};
  m["e7_7"] = {63, 7};
  m["e7_m5"] = {69, 4};
  m["e7_m25"] = {79, 3};
  m["e7c"] = {133, 0};
  m["e8_8"] = {120, 8};
  m["e8_m24"] = {136, 4};
  m["e8c"] = {248, 0};
  m["f4_4"] = {24, 4};
  m["f4_m20"] = {36, 1};
  m["f4c"] = {52, 0};
  m["g2_2"] = {6, 2};
  m["g2c"] = {14, 0};
  m["sl2C"] = {3, 1};
  m["sl3C"] = {8, 2};
  m["so5C"] = {10, 2};
  m["g2C"] = {14, 2};
  return m;
}

int trace(const IntMatrix& m) {
  int t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

// Permutation (1 7)(3 6) of the e-basis, as a map on roots e_i - e_j.
int permuted(int i) {
  switch (i) {
    case 1: return 7;
    case 7: return 1;
    case 3: return 6;
    case 6: return 3;
  }
  return i;
}

} // namespace

TEST_CASE("sl7R: identity conjugation, all roots real of multiplicity 1") {
  auto c = load_real_form(std::string("sl7R"));
  CHECK(c->is_identity());
  const RootSystem& rs = *c->roots();
  CHECK(rs.size() == 42);
  for (int i = 0; i < rs.size(); ++i) {
    CHECK(classify_root(*c, i) == RootKind::Real);
    CHECK(c->multiplicity(i) == 1);
  }
}

TEST_CASE("su21: conjugation swaps a1 and a2, a1+a2 is real") {
  auto c = load_real_form(std::string("su21"));
  CHECK(c->matrix() == IntMatrix{{0, 1}, {1, 0}});
  const RootSystem& rs = *c->roots();
  int a1 = rs.require({1, 0}), a2 = rs.require({0, 1}), a12 = rs.require({1, 1});
  CHECK(c->bar(a1) == a2);
  CHECK(classify_root(*c, a1) == RootKind::Complex);
  CHECK(classify_root(*c, a12) == RootKind::Real);
  CHECK(!check_conjugation(rs, c->matrix()));
  // One root restricts to a1+a2 under the conjugation.
  CHECK(c->multiplicity(a12) == testutil::brute_multiplicity(*c, a12));
  CHECK(c->multiplicity(a12) == 1);
}

TEST_CASE("compact A2: conjugation is -1, every root imaginary compact") {
  auto c = load_real_form(std::string("su3"));
  CHECK(c->matrix() == IntMatrix{{-1, 0}, {0, -1}});
  const RootSystem& rs = *c->roots();
  for (int i = 0; i < rs.size(); ++i) {
    CHECK(classify_root(*c, i) == RootKind::Imaginary);
    CHECK(c->compactness(i) == Compactness::Compact);
  }
  CHECK_THROWS_AS(c->multiplicity(0), Error);
}

TEST_CASE("Cayley transform on sl2R gives s_a with a noncompact") {
  auto c = load_real_form(std::string("sl2R"));
  int a = c->roots()->require({1});
  auto t = apply_cayley(c, {a});
  CHECK(t->matrix() == IntMatrix{{-1}});
  CHECK(t->compactness(a) == Compactness::Noncompact);
  CHECK(t->base() == c);
}

TEST_CASE("Cayley transform along e1-e7, e3-e6 permutes the e-basis by (17)(36)") {
  auto c = load_real_form(std::string("sl7R"));
  const RootSystem& rs = *c->roots();
  int r1 = rs.require(parse_e_root(rs, "e1 - e7"));
  int r2 = rs.require(parse_e_root(rs, "e3 - e6"));
  auto t = apply_cayley(c, {r1, r2});
  CHECK(!check_conjugation(rs, t->matrix()));
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      auto name = [](int a, int b) {
        return "e" + std::to_string(a) + " - e" + std::to_string(b);
      };
      int x = rs.require(parse_e_root(rs, name(i, j)));
      int y = rs.require(parse_e_root(rs, name(permuted(i), permuted(j))));
      CHECK(t->bar(x) == y);
    }
  std::set<int> imag;
  for (int i = 0; i < rs.size(); ++i)
    if (t->imaginary(i)) imag.insert(i);
  CHECK(imag == std::set<int>{r1, rs.negative(r1), r2, rs.negative(r2)});
  CHECK(t->compactness(r1) == Compactness::Noncompact);
  CHECK(t->compactness(r2) == Compactness::Noncompact);
}

TEST_CASE("Cayley transform along e1-e7 has imaginary roots exactly +-(e1-e7)") {
  auto c = load_real_form(std::string("sl7R"));
  const RootSystem& rs = *c->roots();
  int r1 = rs.require(parse_e_root(rs, "e1 - e7"));
  auto t = apply_cayley(c, {r1});
  int count = 0;
  for (int i = 0; i < rs.size(); ++i)
    if (t->imaginary(i)) {
      ++count;
      CHECK((i == r1 || i == rs.negative(r1)));
    }
  CHECK(count == 2);
}

TEST_CASE("Cayley transform: empty set, repeated reflection, invalid sets") {
  auto c = load_real_form(std::string("sl4R"));
  const RootSystem& rs = *c->roots();
  CHECK(apply_cayley(c, {})->matrix() == c->matrix());
  for (int a = 0; a < rs.size(); ++a) {
    IntMatrix s = reflection_matrix(rs, a);
    CHECK(multiply(s, multiply(s, c->matrix())) == c->matrix());
  }
  int a1 = rs.require({1, 0, 0}), a2 = rs.require({0, 1, 0});
  CHECK_THROWS_AS(apply_cayley(c, {a1, a2}), Error);
  CHECK_THROWS_AS(apply_cayley(c, {a1, a1}), Error);
  auto su = load_real_form(std::string("su21"));
  CHECK_THROWS_AS(apply_cayley(su, {su->roots()->require({1, 0})}), Error);
}

TEST_CASE("imaginary roots created by a Cayley transform without a rule stay unmarked") {
  auto c = load_real_form(std::string("sp3R"));
  const RootSystem& rs = *c->roots();
  int l1 = rs.require({2, 2, 1}), l2 = rs.require({0, 2, 1});
  auto t = apply_cayley(c, {l1, l2});
  int a1 = rs.require({1, 0, 0});
  CHECK(t->imaginary(a1));
  CHECK_THROWS_AS(t->compactness(a1), Error);
  try {
    t->compactness(a1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CatalogGap);
  }
}

TEST_CASE("Cayley outputs satisfy the conjugation invariants (seeded)") {
  testutil::Gen g(2024);
  for (const auto& c : testutil::forms_up_to_rank(1, 6)) {
    for (int trial = 0; trial < 4; ++trial) {
      auto s = g.cayley(*c);
      auto t = apply_cayley(c, s);
      CHECK(!check_conjugation(*c->roots(), t->matrix()));
      for (int a : s) CHECK(t->compactness(a) == Compactness::Noncompact);
    }
  }
}

TEST_CASE("catalog: 94 entries with classified compact dimension and real rank") {
  auto names = catalog_names();
  CHECK(names.size() == 94);
  auto table = classified_forms();
  for (const std::string& n : names) {
    CAPTURE(n);
    REQUIRE(table.count(n));
    auto c = load_real_form(n);
    const RootSystem& rs = *c->roots();
    CHECK(!check_conjugation(rs, c->matrix()));
    int real_rank = (rs.rank() + trace(c->matrix())) / 2;
    int imag = 0, other = 0;
    for (int i = 0; i < rs.size(); ++i) {
      if (c->imaginary(i)) {
        ++imag;
        CHECK(c->compactness(i) == Compactness::Compact);
      } else {
        ++other;
      }
    }
    int dim_k = (rs.rank() - real_rank) + imag + other / 2;
    CHECK(dim_k == table[n].dim_k);
    CHECK(real_rank == table[n].real_rank);
    std::string l = c->cor_list();
    CHECK((l.empty() || l == "a" || l == "b"));
  }
}

TEST_CASE("catalog multiplicities match the restricted-root count") {
  for (const std::string& n : catalog_names()) {
    auto c = load_real_form(n);
    const RootSystem& rs = *c->roots();
    for (int i = 0; i < rs.size(); ++i) {
      if (!c->real(i)) continue;
      CAPTURE(n);
      CHECK(c->multiplicity(i) >= 1);
      CHECK(c->multiplicity(i) == testutil::brute_multiplicity(*c, i));
    }
  }
}

TEST_CASE("catalog conjugations have the Satake property in the standard chamber") {
  for (const std::string& n : catalog_names()) {
    auto c = load_real_form(n);
    const RootSystem& rs = *c->roots();
    RootSet pos = rs.positive_roots();
    for (int i = 0; i < rs.size(); ++i)
      if (pos[i] && !c->imaginary(i)) {
        CAPTURE(n);
        CHECK(pos[c->bar(i)]);
      }
  }
}

TEST_CASE("invariant violations are named with a counterexample") {
  auto a2 = build_root_system("A2");
  auto v = check_conjugation(*a2, corrupted_sigma_fixture());
  REQUIRE(v);
  CHECK(v->invariant == "involution");
  CHECK(v->counterexample == Root{1, 0});
  auto p = check_conjugation(*a2, {{-1, 0}, {0, 1}});
  REQUIRE(p);
  CHECK(p->invariant == "root permutation");
  auto s = check_conjugation(*a2, {{1, 0, 0}, {0, 1, 0}});
  REQUIRE(s);
  CHECK(s->invariant == "shape");
  nlohmann::json bad = {{"name", "bad"}, {"dynkin", "A2"},
                        {"sigma_star", {{0, -1}, {1, -1}}}, {"noncompact_marks", nlohmann::json::array()},
                        {"real_multiplicities", nlohmann::json::array()}, {"cor_id_list", nullptr}};
  try {
    load_real_form(bad);
    FAIL("accepted a non-involution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
    CHECK(std::string(e.what()).find("involution") != std::string::npos);
  }
}

TEST_CASE("inline entries use the catalog schema") {
  nlohmann::json j = satake_to_json(catalog_entry("su21"));
  auto c = load_real_form(j);
  CHECK(c->matrix() == load_real_form(std::string("su21"))->matrix());
  CHECK(c->cor_list() == "a");
  nlohmann::json split = {{"name", "mine"}, {"dynkin", "B2"},
                          {"sigma_star", {{1, 0}, {0, 1}}}, {"noncompact_marks", nlohmann::json::array()},
                          {"real_multiplicities", nlohmann::json::array()}, {"cor_id_list", nullptr}};
  auto s = load_real_form(split);
  for (int i = 0; i < s->roots()->size(); ++i) CHECK(s->multiplicity(i) == 1);
}

TEST_CASE("unknown names are catalog gaps; e-notation errors are input errors") {
  try {
    load_real_form(std::string("sl99R"));
    FAIL("accepted an unknown name");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CatalogGap);
  }
  auto a3 = build_root_system("A3");
  CHECK_THROWS_AS(parse_e_root(*a3, "e1 - e5"), Error);
  CHECK_THROWS_AS(parse_e_root(*a3, "e2 + e3"), Error);
  CHECK(parse_e_root(*a3, "e3 - e1") == Root{-1, -1, 0});
  CHECK_THROWS_AS(parse_e_root(*build_root_system("B2"), "e1 - e2"), Error);
}
