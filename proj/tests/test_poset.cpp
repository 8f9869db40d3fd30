#include <doctest.h>

#include "oracles.hpp"
#include "orderlab/enumerate.hpp"
#include "orderlab/limits.hpp"
#include "orderlab/poset.hpp"
#include "support.hpp"

using namespace orderlab;

TEST_CASE("make_poset closes transitively and rejects cycles") {
  auto p = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p->le(p->index_of("a"), p->index_of("c")));
  CHECK_FALSE(p->le(p->index_of("c"), p->index_of("a")));
  CHECK_THROWS_AS(make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidInput);
  CHECK_THROWS_AS(make_poset({"a", "a"}, {}), InvalidInput);
}

TEST_CASE("named posets") {
  CHECK(chain(4)->size() == 4);
  CHECK(boolean_lattice(3)->size() == 8);
  CHECK(lattice_ops(*diamond_m3()).is_lattice);
  CHECK_FALSE(oracle::is_distributive(support::rel(*diamond_m3())));
  CHECK_FALSE(oracle::is_distributive(support::rel(*pentagon_n5())));
  CHECK(oracle::is_distributive(support::rel(*boolean_lattice(2))));
  auto b = with_bounds(*antichain(2));
  CHECK(b->size() == 4);
  CHECK(b->top() == b->index_of("top"));
  CHECK(b->bottom() == b->index_of("bot"));
}

TEST_CASE("enumeration counts match brute force") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(enumerate_posets(n).size() == oracle::posets_up_to_iso(n).size());
    std::size_t lattices = 0;
    for (const auto& r : oracle::posets_up_to_iso(n)) lattices += oracle::is_lattice(r) ? 1 : 0;
    if (n >= 1) CHECK(enumerate_lattices(n).size() == lattices);
  }
  CHECK(enumerate_posets(5).size() == 63);
  CHECK(enumerate_posets(6).size() == 318);
  CHECK(enumerate_lattices(5).size() == 5);
  CHECK(enumerate_lattices(6).size() == 15);
}

TEST_CASE("enumerated posets are pairwise non-isomorphic") {
  auto ps = enumerate_posets(4);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      CHECK_FALSE(oracle::isomorphic(support::rel(*ps[i]), support::rel(*ps[j])));
      CHECK(canonical_form(*ps[i]) != canonical_form(*ps[j]));
    }
  }
}

TEST_CASE("monotone maps and set families agree with brute force") {
  for (const auto& p : enumerate_posets_up_to(3)) {
    for (const auto& q : enumerate_posets_up_to(3)) {
      CHECK(count_monotone_maps(*p, *q) == oracle::monotone_maps(support::rel(*p), support::rel(*q)).size());
    }
    std::vector<oracle::Mask> ups, downs;
    for (const auto& s : up_sets(*p)) ups.push_back(support::mask(s));
    for (const auto& s : down_sets(*p)) downs.push_back(support::mask(s));
    std::sort(ups.begin(), ups.end());
    std::sort(downs.begin(), downs.end());
    CHECK(ups == oracle::up_sets(support::rel(*p)));
    CHECK(downs == oracle::down_sets(support::rel(*p)));
  }
}

TEST_CASE("try_adjoint matches exhaustive adjoint search") {
  const auto posets = enumerate_posets_up_to(3);
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      const auto rp = support::rel(*p);
      const auto rq = support::rel(*q);
      for (const auto& f : monotone_maps(p, q)) {
        for (auto e : {Enrichment::pointwise, Enrichment::dual_pointwise}) {
          for (auto side : {Side::left, Side::right}) {
            const auto expected = oracle::adjoints(rp, rq, f.table(), side == Side::right, e == Enrichment::dual_pointwise);
            const auto got = try_adjoint(f, side, e);
            REQUIRE(expected.size() <= 1);
            CHECK(got.has_value() == !expected.empty());
            if (got && !expected.empty()) CHECK(got->table() == expected.front());
          }
        }
      }
    }
  }
}

TEST_CASE("lattice_ops agrees with brute-force sup and inf") {
  for (const auto& p : enumerate_posets_up_to(4)) {
    const auto r = support::rel(*p);
    const auto ops = lattice_ops(*p);
    CHECK(ops.is_lattice == oracle::is_lattice(r));
    for (int a = 0; a < p->size(); ++a) {
      for (int b = 0; b < p->size(); ++b) {
        const oracle::Mask s = (oracle::Mask{1} << a) | (oracle::Mask{1} << b);
        const int j = oracle::sup(r, s);
        const int m = oracle::inf(r, s);
        CHECK(ops.try_join(a, b).value_or(-1) == j);
        CHECK(ops.try_meet(a, b).value_or(-1) == m);
      }
    }
  }
}

TEST_CASE("order-mono is order-reflecting and matches probes") {
  for (const auto& p : enumerate_posets_up_to(3)) {
    for (const auto& q : enumerate_posets_up_to(3)) {
      for (const auto& f : monotone_maps(p, q)) {
        CHECK(is_order_mono(f) == f.is_order_reflecting());
        CHECK(is_order_mono(f) == is_order_mono_by_probe(f, 2));
      }
    }
  }
}

TEST_CASE("order-epi: the 2-chain includes into the 3-chain with a gap") {
  auto c2 = chain(2);
  auto c3 = chain(3);
  MonotoneMap ends(c2, c3, {0, 2});
  CHECK(find_order_epi_witness(ends).has_value());
  MonotoneMap ids(c3, c3, {0, 1, 2});
  CHECK_FALSE(find_order_epi_witness(ids).has_value());
  auto a2 = antichain(2);
  MonotoneMap bijection(a2, c2, {0, 1});
  CHECK(is_order_epi_bounded(bijection));
  CHECK(is_order_mono(bijection) == false);
}

TEST_CASE("product, equalizer and inserter") {
  auto c2 = chain(2);
  auto prod = product({c2, c2});
  CHECK(are_isomorphic(*prod.apex, *boolean_lattice(2)));
  CHECK(product({}).apex->size() == 1);

  auto c3 = chain(3);
  MonotoneMap f(c3, c3, {0, 1, 1});
  MonotoneMap id = identity(c3);
  auto eq = equalizer(f, id);
  CHECK(eq.object->size() == 2);
  auto ins = inserter(id, f);
  CHECK(ins.object->size() == 2);
  auto ins2 = inserter(f, id);
  CHECK(ins2.object->size() == 3);
  CHECK(factor_through(ins.inclusion, MonotoneMap(c2, c3, {0, 1})).has_value());
  CHECK_FALSE(factor_through(ins.inclusion, MonotoneMap(c2, c3, {1, 2})).has_value());
}

TEST_CASE("cotensor with the 2-chain counts comparable pairs") {
  for (const auto& p : enumerate_posets_up_to(4)) {
    const auto r = support::rel(*p);
    std::size_t pairs = 0;
    for (const auto& row : r) {
      for (bool v : row) pairs += v ? 1 : 0;
    }
    auto c = cotensor(chain(2), p);
    CHECK(static_cast<std::size_t>(c.object->size()) == pairs);
    CHECK(leq(c.projections[0], c.projections[1], Enrichment::pointwise));
  }
}

TEST_CASE("weighted limit with constant weight is the conical limit") {
  auto shape = ShapeCategory::parallel_pair();
  auto c3 = chain(3);
  MonotoneMap f(c3, c3, {0, 1, 1});
  PosDiagram d{{c3, c3}, {identity(c3), identity(c3), f, identity(c3)}};
  auto lim = weighted_limit(shape, d, constant_weight(shape));
  CHECK(are_isomorphic(*lim.object, *equalizer(f, identity(c3)).object));
}

TEST_CASE("weighted limit with the 2-chain weight on a point is the cotensor") {
  auto shape = ShapeCategory::unit();
  auto n5 = pentagon_n5();
  PosDiagram d{{n5}, {identity(n5)}};
  auto c2 = chain(2);
  PosDiagram w{{c2}, {identity(c2)}};
  auto lim = weighted_limit(shape, d, w);
  CHECK(are_isomorphic(*lim.object, *cotensor(c2, n5).object));
  CHECK(lim.projections[0].size() == 2);
}

TEST_CASE("split_idempotent and coinserter") {
  auto c3 = chain(3);
  MonotoneMap e(c3, c3, {0, 2, 2});
  auto s = split_idempotent(e);
  CHECK(s.object->size() == 2);
  CHECK(compose(s.retraction, s.section) == identity(s.object));
  CHECK(compose(s.section, s.retraction) == e);
  CHECK_THROWS_AS(split_idempotent(MonotoneMap(chain(3), chain(3), {1, 2, 2})), InvalidInput);

  auto id = identity(c3);
  auto q = pos_coinserter(id, id);
  CHECK(are_isomorphic(*q.object, *c3));
  auto a2 = antichain(2);
  auto one = chain(1);
  MonotoneMap x0(one, a2, {0});
  MonotoneMap x1(one, a2, {1});
  auto q2 = pos_coinserter(x0, x1);
  CHECK(are_isomorphic(*q2.object, *chain(2)));
  auto q3 = pos_coinserter(x0, x0);
  CHECK(are_isomorphic(*q3.object, *a2));
}

TEST_CASE("tensor is the product") {
  auto t = pos_tensor(chain(2), chain(3));
  CHECK(t.apex->size() == 6);
  CHECK(t.legs.size() == 2);
}
