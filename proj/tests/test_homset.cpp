#include <algorithm>
#include <bit>

#include "doctest.h"
#include "isodual/homset.hpp"
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

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("isotone check on single images") {
  Poset c2 = make_chain(2);
  CHECK(is_isotone(c2, c2, std::vector<int>{0, 1}));
  CHECK_FALSE(is_isotone(c2, c2, std::vector<int>{1, 0}));
  CHECK(is_isotone(make_v(), make_wedge(), std::vector<int>{2, 2, 0}));
  CHECK_THROWS_AS(is_isotone(c2, c2, std::vector<int>{0}), Error);
  CHECK_THROWS_AS(is_isotone(c2, c2, std::vector<int>{0, 2}), Error);
  CHECK_THROWS_AS(IsotoneMap(c2, c2, {1, 0}), Error);
}

TEST_CASE("hom counts on the named pairs") {
  CHECK(count_hom(make_chain(2), make_chain(2)) == 3);
  CHECK(count_hom(make_antichain(2), make_chain(2)) == 4);
  CHECK(count_hom(make_v(), make_wedge()) == 9);
  CHECK(count_hom(make_v(), make_v()) == 11);
}

TEST_CASE("enumeration is lexicographic and duplicate free") {
  auto maps = enumerate_hom(make_v(), make_wedge());
  REQUIRE(maps.size() == 9);
  for (std::size_t i = 1; i < maps.size(); ++i)
    CHECK(maps[i - 1].image() < maps[i].image());
}

TEST_CASE("enumeration matches the filter oracle on all small pairs") {
  std::vector<Poset> universe;
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : generate_posets(n)) universe.push_back(p);
  for (const Poset& p : universe)
    for (const Poset& q : universe) {
      auto expect = oracle::all_hom(p.size(), p.covers(), q.size(), q.covers());
      auto got = enumerate_hom(p, q);
      REQUIRE(got.size() == expect.size());
      std::sort(expect.begin(), expect.end());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].image() == expect[i]);
    }
}

TEST_CASE("chain to chain counts are binomial") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      CHECK(count_hom(make_chain(n), make_chain(m)) == binomial(n + m - 1, n));
}

TEST_CASE("enumeration cap rejects oversized searches") {
  try {
    enumerate_hom(make_antichain(2), make_chain(2), 3);
    FAIL("cap ignored");
  } catch (const CapExceeded& e) {
    std::string msg = e.what();
    CHECK(msg.find("4") != std::string::npos);
  }
  CHECK_NOTHROW(enumerate_hom(make_antichain(2), make_chain(2), 4));
}

TEST_CASE("fixpoints") {
  Poset c3 = make_chain(3);
  IsotoneMap identity(c3, c3, {0, 1, 2});
  CHECK(fixpoints(identity) == 0b111);

  Poset v = make_v();
  IsotoneMap to_min(v, v, {2, 2, 2});
  CHECK(elements_of(fixpoints(to_min)) == std::vector<int>{2});

  Poset a2 = make_antichain(2);
  IsotoneMap swap(a2, a2, {1, 0});
  CHECK(fixpoints(swap) == 0);

  IsotoneMap across(a2, c3, {0, 0});
  CHECK_THROWS_AS(fixpoints(across), Error);
}

TEST_CASE("composition stays isotone") {
  Poset v = make_v();
  Poset wedge = make_wedge();
  Poset c2 = make_chain(2);
  for (const auto& f : enumerate_hom(v, wedge))
    for (const auto& g : enumerate_hom(wedge, c2)) {
      IsotoneMap h = compose(f, g);
      CHECK(is_isotone(v, c2, h.image()));
      for (int i = 0; i < 3; ++i) CHECK(h(i) == g(f(i)));
    }
  IsotoneMap f(v, wedge, {2, 2, 0});
  IsotoneMap g(c2, c2, {0, 1});
  CHECK_THROWS_AS(compose(f, g), Error);
}
