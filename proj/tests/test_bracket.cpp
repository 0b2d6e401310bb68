#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bsp/bracket.hpp"

using namespace bsp;

namespace {

Subexpression bits(std::initializer_list<int> b) {
  Subexpression g;
  for (int x : b) g.bits.push_back(static_cast<std::uint8_t>(x));
  return g;
}

std::string entry_text(const BracketTable& t, int i, int k) { return to_text(t.entry(i, k)); }

}  // namespace

TEST_CASE("rank-two tables on the three-letter word") {
  const RootSystem a2 = build_root_system('A', 2);
  const StructureTable st = build_chevalley(a2);
  const Word w{{1, 2, 1}};

  const BracketTable mixed = bracket_table(st, w, bits({1, 0, 0}));
  CHECK(entry_text(mixed, 1, 2) == "z_1 z_2");
  CHECK(entry_text(mixed, 1, 3) == "-2 z_1 z_3 + 2 z_3^2");
  CHECK(entry_text(mixed, 2, 3) == "-z_2 z_3");

  const BracketTable full = bracket_table(st, w, Subexpression::full(3));
  CHECK(entry_text(full, 1, 2) == "-z_1 z_2");
  CHECK(entry_text(full, 1, 3) == "z_1 z_3 - 2 z_2");
  CHECK(entry_text(full, 2, 3) == "-z_2 z_3");

  const BracketTable trivial = bracket_table(st, w, Subexpression::trivial(3));
  CHECK(entry_text(trivial, 1, 2) == "-z_1 z_2");
  CHECK(entry_text(trivial, 1, 3) == "2 z_1 z_3");
  CHECK(entry_text(trivial, 2, 3) == "-z_2 z_3");
}

TEST_CASE("rank-one tables") {
  const RootSystem a1 = build_root_system('A', 1);
  const StructureTable st = build_chevalley(a1);
  const Word w5{{1, 1, 1, 1, 1}};

  const BracketTable ends = bracket_table(st, w5, bits({1, 0, 0, 0, 1}));
  CHECK(entry_text(ends, 1, 2) == "-2 z_1 z_2 + 2 z_2^2");
  CHECK(entry_text(ends, 1, 3) == "-2 z_1 z_3 + 4 z_2 z_3 + 2 z_3^2");
  CHECK(entry_text(ends, 1, 4) == "-2 z_1 z_4 + 4 z_2 z_4 + 4 z_3 z_4 + 2 z_4^2");
  CHECK(entry_text(ends, 1, 5) == "2 z_1 z_5 - 4 z_2 z_5 - 4 z_3 z_5 - 4 z_4 z_5 - 2");
  CHECK(entry_text(ends, 2, 3) == "2 z_2 z_3");
  CHECK(entry_text(ends, 2, 5) == "-2 z_2 z_5");
  CHECK(entry_text(ends, 4, 5) == "-2 z_4 z_5");

  // Full subexpression, any length: adjacent pairs pick up the constant,
  // distant pairs stay log-canonical with alternating sign.
  for (int n = 2; n <= 8; ++n) {
    Word w{std::vector<int>(n, 1)};
    const BracketTable t = bracket_table(st, w, Subexpression::full(n));
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k) {
        Polynomial want(n);
        const int sign = (k - i) % 2 == 0 ? -1 : 1;
        want += Polynomial::variable(n, i) * Polynomial::variable(n, k) * mpq_class(2 * sign);
        if (k == i + 1) want += Polynomial::constant(n, -2);
        CAPTURE(n);
        CHECK(t.entry(i, k) == want);
      }
  }
}

TEST_CASE("G2 full-subexpression table") {
  const RootSystem g2 = build_root_system('G', 2);
  const StructureTable st = build_chevalley(g2);
  const Word w{{1, 2, 1, 2, 1, 2}};
  const BracketTable t = bracket_table(st, w, Subexpression::full(6));
  CHECK(entry_text(t, 1, 2) == "-3 z_1 z_2");
  CHECK(entry_text(t, 1, 3) == "-z_1 z_3 - 2 z_2");
  CHECK(entry_text(t, 1, 4) == "-6 z_3^2");
  CHECK(entry_text(t, 1, 5) == "z_1 z_5 - 4 z_3");
  CHECK(entry_text(t, 1, 6) == "3 z_1 z_6 - 6 z_5");
  CHECK(entry_text(t, 2, 3) == "-3 z_2 z_3");
  CHECK(entry_text(t, 2, 4) == "-3 z_2 z_4 - 6 z_3^3");
  CHECK(entry_text(t, 2, 5) == "-6 z_3^2");
  CHECK(entry_text(t, 2, 6) == "3 z_2 z_6 - 18 z_3 z_5 + 6 z_4");
  CHECK(entry_text(t, 3, 4) == "-3 z_3 z_4");
  CHECK(entry_text(t, 3, 5) == "-z_3 z_5 - 2 z_4");
  CHECK(entry_text(t, 3, 6) == "-6 z_5^2");
  CHECK(entry_text(t, 4, 5) == "-3 z_4 z_5");
  CHECK(entry_text(t, 4, 6) == "-3 z_4 z_6 - 6 z_5^3");
  CHECK(entry_text(t, 5, 6) == "-3 z_5 z_6");
}

TEST_CASE("G2 mixed-subexpression table") {
  const RootSystem g2 = build_root_system('G', 2);
  const StructureTable st = build_chevalley(g2);
  const Word w{{1, 2, 1, 2, 1, 2}};
  const BracketTable t = bracket_table(st, w, bits({1, 1, 0, 0, 1, 0}));
  CHECK(entry_text(t, 1, 2) == "-3 z_1 z_2");
  CHECK(entry_text(t, 1, 3) == "z_1 z_3 + 2 z_2 z_3^2");
  CHECK(entry_text(t, 1, 4) == "-3 z_1 z_4 - 6 z_2 z_3 z_4 + 6 z_3 z_4^2");
  CHECK(entry_text(t, 1, 5) == "-z_1 z_5 - 4 z_2 z_3 z_5 - 2 z_2 + 6 z_3 z_4 z_5 + 2 z_4");
  CHECK(entry_text(t, 1, 6) == "6 z_2 z_3 z_6 - 6 z_3 z_4 z_6 + 6 z_3 z_5^3 z_6^2 + 6 z_5^2 z_6^2");
  CHECK(entry_text(t, 2, 3) == "3 z_2 z_3");
  CHECK(entry_text(t, 2, 4) == "-6 z_2 z_4 + 6 z_4^2");
  CHECK(entry_text(t, 2, 5) == "-3 z_2 z_5 + 6 z_4 z_5");
  CHECK(entry_text(t, 2, 6) == "3 z_2 z_6 - 6 z_4 z_6 + 6 z_5^3 z_6^2");
  CHECK(entry_text(t, 3, 4) == "-3 z_3 z_4");
  CHECK(entry_text(t, 3, 5) == "-2 z_3 z_5");
  CHECK(entry_text(t, 3, 6) == "3 z_3 z_6");
  CHECK(entry_text(t, 4, 5) == "3 z_4 z_5");
  CHECK(entry_text(t, 4, 6) == "-3 z_4 z_6");
  CHECK(entry_text(t, 5, 6) == "3 z_5 z_6");
}

TEST_CASE("chain generating functions") {
  const RootSystem b2 = build_root_system('B', 2);
  const StructureTable st = build_chevalley(b2);
  const Word w{{1, 2, 1, 2}};

  // phi ignores the endpoint's own letter choice; psi flips sign with it.
  for (int mask = 0; mask < 16; ++mask) {
    Subexpression g = bits({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1});
    for (int m = 1; m <= 4; ++m)
      for (int k = m; k <= 4; ++k)
        for (const auto& beta : b2.positive_roots) {
          Subexpression flip = g;
          flip.bits[k - 1] ^= 1;
          CHECK(phi(st, w, g, beta, m, k) == phi(st, w, flip, beta, m, k));
          CHECK(psi(st, w, g, beta, m, k) == -psi(st, w, flip, beta, m, k));
        }
  }

  // A chain that dies: beta equal to the window letter takes only the
  // identity branch, so the reflection kills it.
  const Weight a1 = simple_root(b2, 1);
  CHECK(enumerate_chains(st, w, Subexpression::full(4), a1, 1, 2).empty());
  const auto alive = enumerate_chains(st, w, Subexpression::trivial(4), a1, 1, 1);
  REQUIRE(alive.size() == 1);
  CHECK(alive[0].c == 1);
}

TEST_CASE("closed and recursive engines agree beyond the closed window") {
  const RootSystem b2 = build_root_system('B', 2);
  const StructureTable st = build_chevalley(b2);
  const Word w{{2, 1, 2, 1}};
  for (int mask = 0; mask < 16; ++mask) {
    Subexpression g = bits({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1});
    for (const auto& beta : b2.positive_roots)
      for (int m = 1; m <= 4; ++m)
        for (int k = m; k <= 4; ++k)
          CHECK(sigma_closed(st, w, g, beta, m, k) == sigma_recursive(st, w, g, beta, m, k));
  }
}

TEST_CASE("table metadata") {
  const RootSystem a2 = build_root_system('A', 2);
  const StructureTable st = build_chevalley(a2);
  const Word w{{1, 2, 1}};
  const BracketTable t = bracket_table(st, w, Subexpression::full(3));

  CHECK(t.lambda[0] == simple_root(a2, 1));
  CHECK(t.lambda[1] == Weight(simple_root(a2, 1) + simple_root(a2, 2)));
  CHECK(t.lambda[2] == simple_root(a2, 2));

  Eigen::VectorXi h1(2), h2(2), h3(2);
  h1 << -1, 0;
  h2 << -1, -1;
  h3 << 0, -1;
  CHECK(t.h[0] == h1);
  CHECK(t.h[1] == h2);
  CHECK(t.h[2] == h3);

  // lambda_i(h_i) = -<alpha_i, alpha_i> on reflection letters.
  for (int i = 1; i <= 3; ++i) CHECK(weight_on_h(t, i, i) == -2);

  // The quadratic coefficient is the prefix-twisted pairing.
  CHECK(t.quad_coeff(1, 2) == -1);
  CHECK(t.quad_coeff(1, 3) == 1);
  CHECK(t.quad_coeff(2, 3) == -1);
}

TEST_CASE("Ore data extraction") {
  const RootSystem a2 = build_root_system('A', 2);
  const StructureTable st = build_chevalley(a2);
  const Word w{{1, 2, 1}};
  const BracketTable t = bracket_table(st, w, bits({1, 0, 0}));
  const OreData ore = extract_ore_data(t);

  CHECK(ore.a_scalar(1, 3) == -2);
  CHECK(to_text(ore.b_image(1, 3)) == "2 z_3^2");
  CHECK(ore.a_scalar(1, 2) == 1);
  CHECK(ore.b_image(1, 2).is_zero());

  const Derivation b1 = b_derivation(ore, 1);
  CHECK(b1.image(1).is_zero());
  CHECK(b1.image(3) == ore.b_image(1, 3));
  const Derivation a1 = a_derivation(ore, 1);
  CHECK(a1.image(3) == Polynomial::variable(3, 3) * mpq_class(-2));
}

TEST_CASE("bad inputs are rejected") {
  const RootSystem a2 = build_root_system('A', 2);
  const StructureTable st = build_chevalley(a2);
  const Word w{{1, 2, 1}};
  CHECK_THROWS(enumerate_chains(st, w, Subexpression::full(3), simple_root(a2, 1), 3, 2));
  CHECK_THROWS(enumerate_chains(st, w, Subexpression::full(2), simple_root(a2, 1), 1, 2));
  const Word bad{{1, 5, 1}};
  CHECK_THROWS(bracket_table(st, bad, Subexpression::full(3)));
}
