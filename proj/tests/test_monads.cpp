#include <doctest.h>

#include "oracles.hpp"
#include "orderlab/enumerate.hpp"
#include "orderlab/monads.hpp"
#include "support.hpp"

using namespace orderlab;

namespace {

std::vector<oracle::Mask> up_masks(const Poset& p) { return oracle::up_sets(support::rel(p)); }

std::size_t expected_size(MonadKind k, const Poset& x) {
  const auto r = support::rel(x);
  const auto opens = up_masks(x);
  const oracle::Mask full = (oracle::Mask{1} << x.size()) - 1;
  std::size_t n = 0;
  switch (k) {
    case MonadKind::D: return oracle::down_sets(r).size();
    case MonadKind::I: return static_cast<std::size_t>(x.size());
    case MonadKind::AdjoinBounds: return static_cast<std::size_t>(x.size()) + 2;
    default:
      for (auto phi : oracle::filters(opens, full)) {
        if (k == MonadKind::F) ++n;
        if (k == MonadKind::F1 && oracle::proper(opens, phi)) ++n;
        if (k == MonadKind::F2 && oracle::prime(opens, phi)) ++n;
        if (k == MonadKind::Fc && oracle::completely_prime(opens, phi)) ++n;
      }
      return n;
  }
}

// left -| right read off the unit and counit inequalities.
bool adjunction_by_oracle(const MonotoneMap& left, const MonotoneMap& right, Enrichment e) {
  const auto p = support::rel(left.dom());
  const auto q = support::rel(left.cod());
  const bool dual = e == Enrichment::dual_pointwise;
  for (int x = 0; x < left.dom().size(); ++x) {
    const int rl = right.table()[left.table()[x]];
    if (!(dual ? p[rl][x] : p[x][rl])) return false;
  }
  for (int y = 0; y < left.cod().size(); ++y) {
    const int lr = left.table()[right.table()[y]];
    if (!(dual ? q[y][lr] : q[lr][y])) return false;
  }
  return true;
}

bool le_by_oracle(const MonotoneMap& f, const MonotoneMap& g, Enrichment e) {
  const auto q = support::rel(f.cod());
  return e == Enrichment::pointwise ? oracle::pointwise_le(q, f.table(), g.table())
                                    : oracle::pointwise_le(q, g.table(), f.table());
}

}  // namespace

TEST_CASE("monad names and bases") {
  CHECK(monad_by_name("Fc").kind() == MonadKind::Fc);
  CHECK(monad_by_name("adjbounds").base() == BaseCategory::finite_lattices);
  CHECK(monad_by_name("D").enrichment() == Enrichment::pointwise);
  CHECK(monad_by_name("F2").enrichment() == Enrichment::dual_pointwise);
  CHECK_THROWS_AS(monad_by_name("G"), InvalidInput);
  CHECK(all_monads().size() == 7);
  CHECK_THROWS_AS(Monad(MonadKind::AdjoinBounds).apply(antichain(2)), InvalidInput);
}

TEST_CASE("TX has the brute-force cardinality") {
  for (const auto& t : all_monads()) {
    for (const auto& x : base_objects(t, 4)) {
      CAPTURE(t.name());
      CHECK(static_cast<std::size_t>(t.apply(x)->size()) == expected_size(t.kind(), *x));
    }
  }
}

TEST_CASE("completely prime filters give back the space") {
  const Monad fc(MonadKind::Fc);
  for (const auto& x : enumerate_posets_up_to(4)) {
    auto tx = fc.apply(x);
    auto e = fc.unit(*tx);
    CHECK(e.is_injective());
    CHECK(e.is_surjective());
    CHECK(e.is_order_reflecting());
  }
}

TEST_CASE("filter flags match brute force") {
  for (const auto& x : enumerate_posets_up_to(3)) {
    auto opens = up_sets(*x);
    std::vector<oracle::Mask> masks;
    for (const auto& u : opens) masks.push_back(support::mask(u));
    for (const auto& f : enumerate_filters(opens)) {
      const auto phi = support::mask(f);
      const auto flags = filter_flags(opens, f);
      CHECK(flags.proper == oracle::proper(masks, phi));
      CHECK(flags.prime == oracle::prime(masks, phi));
      CHECK(flags.completely_prime == oracle::completely_prime(masks, phi));
    }
  }
}

TEST_CASE("the sharp topology on FX specialises to inclusion") {
  for (const auto& t : {Monad(MonadKind::F), Monad(MonadKind::F1), Monad(MonadKind::F2)}) {
    for (const auto& x : enumerate_posets_up_to(3)) {
      auto tx = t.apply(x);
      auto sp = filter_space(*tx);
      CHECK(sp.is_t0());
      CHECK(*specialization_poset(sp) == *tx->object);
    }
  }
}

TEST_CASE("monad laws hold on small objects") {
  for (const auto& t : all_monads()) {
    for (const auto& x : base_objects(t, 3)) {
      auto lv = make_levels(t, x, 2000);
      auto laws = verify_monad_laws(t, lv);
      CAPTURE(t.name());
      CHECK(laws.left_unit);
      CHECK(laws.right_unit);
      CHECK(laws.associative.value_or(true));
    }
  }
}

TEST_CASE("KZ conditions agree with brute-force adjoints") {
  for (const auto& t : all_monads()) {
    for (const auto& x : base_objects(t, 3)) {
      auto lv = make_levels(t, x);
      auto kz = verify_kz(t, lv);
      const auto e = t.enrichment();
      CAPTURE(t.name());
      CHECK(kz.cond_i == le_by_oracle(lv.t_e, lv.e_t, e));
      CHECK(kz.cond_ii == adjunction_by_oracle(lv.m, lv.e_t, e));
      CHECK(kz.cond_iii == adjunction_by_oracle(lv.t_e, lv.m, e));
      CHECK(kz.agree());
      CHECK(kz.cond_i == t.is_kz_expected());
    }
  }
}

TEST_CASE("naturality along monotone maps") {
  const Monad d(MonadKind::D);
  const Monad f(MonadKind::F);
  auto c2 = chain(2);
  auto c3 = chain(3);
  for (const auto& t : {d, f}) {
    auto lx = make_levels(t, c2);
    auto ly = make_levels(t, c3);
    for (const auto& g : monotone_maps(c2, c3)) CHECK(check_naturality(t, g, lx, ly));
  }
}

TEST_CASE("units are order-faithful") {
  for (const auto& t : all_monads()) {
    auto r = is_order_faithful(t, 2);
    CAPTURE(t.name());
    CHECK(r.faithful);
    CHECK(r.units_order_mono);
    CHECK(r.pairs_checked > 0);
  }
}
