#include <doctest.h>

#include "oracles.hpp"
#include "orderlab/enumerate.hpp"
#include "orderlab/finspace.hpp"
#include "support.hpp"

using namespace orderlab;

TEST_CASE("sierpinski space") {
  auto s = sierpinski();
  CHECK(s.size() == 2);
  CHECK(s.opens().size() == 3);
  CHECK(s.is_t0());
  auto p = specialization_poset(s);
  CHECK(p->le(0, 1));
  CHECK_FALSE(p->le(1, 0));
}

TEST_CASE("opens must form a topology") {
  Subset a(3), b(3);
  a.set(0);
  b.set(1);
  CHECK_THROWS_AS(FinSpace({"x", "y", "z"}, {Subset(3), a, b, full_set(3)}), InvalidInput);
  CHECK_THROWS_AS(FinSpace({"x", "y", "z"}, {a, full_set(3)}), InvalidInput);
  FinSpace indiscrete({"x", "y"}, {Subset(2), full_set(2)});
  CHECK_FALSE(indiscrete.is_t0());
  CHECK_THROWS_AS(specialization_poset(indiscrete), InvalidInput);
}

TEST_CASE("Alexandrov topology round-trips through specialisation") {
  for (const auto& p : enumerate_posets_up_to(4)) {
    auto x = alexandrov(*p);
    std::vector<oracle::Mask> opens = support::open_masks(x);
    std::sort(opens.begin(), opens.end());
    CHECK(opens == oracle::up_sets(support::rel(*p)));
    CHECK(x.is_t0());
    CHECK(*specialization_poset(x) == *p);
    CHECK(is_sober(x));
  }
}

TEST_CASE("generated space closes the subbase") {
  Subset a(3), b(3);
  a.set(0);
  a.set(1);
  b.set(1);
  b.set(2);
  auto x = generated_space({"p", "q", "r"}, {a, b});
  // {}, {q}, {p,q}, {q,r}, all
  CHECK(x.opens().size() == 5);
  CHECK(x.neighbourhood(1).count() == 1);
  CHECK(x.neighbourhood(0) == a);
}

TEST_CASE("continuous maps between Alexandrov spaces are the monotone maps") {
  auto ps = enumerate_posets_up_to(3);
  for (const auto& p : ps) {
    for (const auto& q : ps) {
      const auto rp = support::rel(*p);
      const auto rq = support::rel(*q);
      auto xp = alexandrov(*p);
      auto xq = alexandrov(*q);
      std::size_t continuous = 0;
      std::vector<int> f(p->size(), 0);
      if (q->size() == 0) {
        if (p->size() == 0) CHECK(is_continuous(xp, xq, f));
        continue;
      }
      while (true) {
        const bool c = is_continuous(xp, xq, f);
        CHECK(c == oracle::monotone(rp, rq, f));
        CHECK(c == is_spectral_map(xp, xq, f));
        continuous += c ? 1 : 0;
        int i = 0;
        while (i < p->size() && ++f[i] == q->size()) f[i++] = 0;
        if (i == p->size()) break;
      }
      CHECK(continuous == oracle::monotone_maps(rp, rq).size());
    }
  }
}

TEST_CASE("open lattice is a distributive lattice") {
  for (const auto& p : enumerate_posets_up_to(4)) {
    auto o = open_lattice(alexandrov(*p));
    const auto r = support::rel(*o);
    CHECK(oracle::is_lattice(r));
    CHECK(oracle::is_distributive(r));
  }
}

TEST_CASE("same_topology compares open families") {
  CHECK(same_topology(sierpinski(), alexandrov(*chain(2))));
  CHECK_FALSE(same_topology(alexandrov(*antichain(2)), alexandrov(*chain(2))));
}
