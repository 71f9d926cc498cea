#include <algorithm>
#include <bit>

#include "doctest.h"
#include "isodual/ideal.hpp"
#include "oracles.hpp"

using namespace isodual;

namespace {

Poset make_v() { return Poset::from_covers(3, {{2, 0}, {2, 1}}); }
Poset make_wedge() { return Poset::from_covers(3, {{0, 2}, {1, 2}}); }
Poset make_chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(n, covers);
}
Poset make_antichain(int n) { return Poset::from_covers(n, {}); }

Mask cells(const Grid& g, std::vector<Cell> list) { return mask_of_cells(g, list); }

}  // namespace

TEST_CASE("grid indexing is row major") {
  Grid g{2, 3};
  CHECK(g.cell_count() == 6);
  CHECK(g.index({0, 0}) == 0);
  CHECK(g.index({1, 2}) == 5);
  CHECK(g.at(4) == Cell{1, 1});
  CHECK_THROWS_AS(mask_of_cells(g, std::vector<Cell>{{2, 0}}), Error);
  CHECK_THROWS_AS(mask_of_cells(g, std::vector<Cell>{{0, 3}}), Error);
}

TEST_CASE("lexicographic cell order") {
  Grid g{2, 2};
  Mask a = cells(g, {{0, 0}, {1, 0}});
  Mask b = cells(g, {{0, 0}, {1, 1}});
  Mask c = cells(g, {{0, 1}, {1, 1}});
  CHECK(lex_less_cells(a, b));
  CHECK(lex_less_cells(b, c));
  CHECK(lex_less_cells(a, c));
  CHECK_FALSE(lex_less_cells(c, a));
  CHECK_FALSE(lex_less_cells(a, a));
  // prefix comes first
  CHECK(lex_less_cells(cells(g, {{0, 0}}), a));
}

TEST_CASE("ideal construction minimizes and sorts") {
  Grid g{2, 2};
  Mask big = cells(g, {{0, 0}, {0, 1}});
  Mask small = cells(g, {{0, 0}});
  Ideal ideal(g, {big, small, small});
  REQUIRE(ideal.gen_count() == 1);
  CHECK(ideal.gens()[0] == small);

  Ideal sorted(g, {cells(g, {{1, 1}}), cells(g, {{0, 1}})});
  CHECK(sorted.gens() == std::vector<Mask>{cells(g, {{0, 1}}), cells(g, {{1, 1}})});
}

TEST_CASE("ideal construction validates") {
  Grid g{2, 2};
  CHECK_THROWS_AS(Ideal(g, {}), Error);
  CHECK_THROWS_AS(Ideal(g, {Mask{0}}), Error);
  CHECK_THROWS_AS(Ideal(g, {Mask{1} << 4}), Error);
  CHECK_THROWS_AS(Ideal(Grid{0, 2}, {Mask{1}}), Error);
  CHECK_THROWS_AS(Ideal(Grid{9, 8}, {Mask{1}}), Error);
  CHECK_NOTHROW(Ideal(Grid{8, 8}, {Mask{1}}));
}

TEST_CASE("monomial of a map has one cell per row") {
  Poset v = make_v();
  IsotoneMap phi(v, make_wedge(), {2, 2, 0});
  auto support = monomial_of_map(phi);
  CHECK(support == std::vector<Cell>{{0, 2}, {1, 2}, {2, 0}});

  IsotoneMap ident(make_chain(2), make_chain(2), {0, 1});
  CHECK(monomial_of_map(ident) == std::vector<Cell>{{0, 0}, {1, 1}});

  IsotoneMap constant(make_antichain(2), make_chain(1), {0, 0});
  CHECK(monomial_of_map(constant) == std::vector<Cell>{{0, 0}, {1, 0}});
}

TEST_CASE("the ideal of a pair transcribes its maps") {
  Ideal one = build_L(make_chain(1), make_chain(1));
  CHECK(one.gen_count() == 1);
  CHECK(one.gens()[0] == Mask{1});

  Ideal a2c2 = build_L(make_antichain(2), make_chain(2));
  CHECK(a2c2.gen_count() == 4);
  for (Mask g : a2c2.gens()) CHECK(std::popcount(g) == 2);

  Grid g22{2, 2};
  Ideal c2c2 = build_L(make_chain(2), make_chain(2));
  std::vector<Mask> want{cells(g22, {{0, 0}, {1, 0}}), cells(g22, {{0, 0}, {1, 1}}),
                         cells(g22, {{0, 1}, {1, 1}})};
  CHECK(c2c2.gens() == want);
}

TEST_CASE("generator count always equals the map count") {
  std::vector<Poset> universe;
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : generate_posets(n)) universe.push_back(p);
  for (const Poset& p : universe)
    for (const Poset& q : universe) {
      Ideal ideal = build_L(p, q);
      CHECK(ideal.gen_count() == count_hom(p, q));
      for (Mask g : ideal.gens()) {
        CHECK(std::popcount(g) == p.size());
        for (int row = 0; row < p.size(); ++row) {
          Mask row_cells = 0;
          for (int col = 0; col < q.size(); ++col)
            row_cells |= Mask{1} << ideal.grid().index({row, col});
          CHECK(std::popcount(g & row_cells) == 1);
        }
      }
    }
}

TEST_CASE("index switch") {
  Grid g12{1, 2};
  Ideal single(g12, {cells(g12, {{0, 1}})});
  Ideal flipped = tau(single);
  CHECK(flipped.grid().rows == 2);
  CHECK(flipped.grid().cols == 1);
  CHECK(flipped.gens()[0] == mask_of_cells(flipped.grid(), std::vector<Cell>{{1, 0}}));

  Ideal c2c2 = build_L(make_chain(2), make_chain(2));
  Grid g22{2, 2};
  std::vector<Mask> want{cells(g22, {{0, 0}, {0, 1}}), cells(g22, {{0, 0}, {1, 1}}),
                         cells(g22, {{1, 0}, {1, 1}})};
  CHECK(tau(c2c2).gens() == want);
  CHECK(ideal_equals(tau(tau(c2c2)), c2c2));
}

TEST_CASE("ideal equality") {
  Ideal c2c2 = build_L(make_chain(2), make_chain(2));
  CHECK(ideal_equals(c2c2, c2c2));
  CHECK_FALSE(ideal_equals(c2c2, tau(c2c2)));

  // One row: the row ideal is all singletons, while the switched column
  // ideal is the single full-row monomial. Same grid, different ideals.
  Poset q = make_wedge();
  Ideal left = build_L(make_chain(1), q);
  Ideal right = tau(build_L(q, make_chain(1)));
  CHECK(left.grid() == right.grid());
  CHECK(left.gen_count() == 3);
  for (Mask g : left.gens()) CHECK(std::popcount(g) == 1);
  REQUIRE(right.gen_count() == 1);
  CHECK(right.gens()[0] == cells(right.grid(), {{0, 0}, {0, 1}, {0, 2}}));
  CHECK_FALSE(ideal_equals(left, right));

  Grid g12{1, 2};
  Grid g21{2, 1};
  CHECK_FALSE(ideal_equals(Ideal(g12, {Mask{1}}), Ideal(g21, {Mask{1}})));
}

TEST_CASE("sums and products") {
  Grid g{2, 2};
  Ideal a(g, {cells(g, {{0, 0}})});
  Ideal b(g, {cells(g, {{1, 1}})});
  CHECK(ideal_equals(ideal_sum(a, a), a));
  Ideal both = ideal_sum(a, b);
  CHECK(both.gen_count() == 2);
  Ideal prod = ideal_product(a, b);
  REQUIRE(prod.gen_count() == 1);
  CHECK(prod.gens()[0] == cells(g, {{0, 0}, {1, 1}}));

  Grid other{1, 1};
  CHECK_THROWS_AS(ideal_sum(a, Ideal(other, {Mask{1}})), Error);
  CHECK_THROWS_AS(ideal_product(a, Ideal(other, {Mask{1}})), Error);
}

TEST_CASE("an ideal of a disconnected column poset is the sum over components") {
  Poset c2 = make_chain(2);
  Poset a2 = make_antichain(2);
  Ideal whole = build_L(c2, a2);

  Ideal col0 = embed_columns(build_L(c2, make_chain(1)), 2, std::vector<int>{0});
  Ideal col1 = embed_columns(build_L(c2, make_chain(1)), 2, std::vector<int>{1});
  CHECK(ideal_equals(whole, ideal_sum(col0, col1)));
}

TEST_CASE("column embedding validates") {
  Grid g12{1, 2};
  Ideal ideal(g12, {cells(g12, {{0, 0}, {0, 1}})});
  CHECK_THROWS_AS(embed_columns(ideal, 3, std::vector<int>{0}), Error);
  CHECK_THROWS_AS(embed_columns(ideal, 3, std::vector<int>{0, 3}), Error);
  Ideal wide = embed_columns(ideal, 3, std::vector<int>{2, 0});
  CHECK(wide.grid().cols == 3);
  CHECK(wide.gens()[0] == mask_of_cells(wide.grid(), std::vector<Cell>{{0, 0}, {0, 2}}));
}
