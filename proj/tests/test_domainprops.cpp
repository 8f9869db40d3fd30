#include <doctest.h>

#include "oracles.hpp"
#include "orderlab/domainprops.hpp"
#include "orderlab/enumerate.hpp"
#include "support.hpp"

using namespace orderlab;

namespace {

// x <<< y: every subset with a supremum above y meets up(x).
bool totally_below(const oracle::Rel& r, int x, int y) {
  const int n = static_cast<int>(r.size());
  for (oracle::Mask s = 0; s < (oracle::Mask{1} << n); ++s) {
    const int j = oracle::sup(r, s);
    if (j < 0 || !r[y][j]) continue;
    bool meets = false;
    for (int a = 0; a < n && !meets; ++a) meets = oracle::bit(s, a) && r[x][a];
    if (!meets) return false;
  }
  return true;
}

bool bounded_complete(const oracle::Rel& r) {
  const int n = static_cast<int>(r.size());
  for (oracle::Mask s = 0; s < (oracle::Mask{1} << n); ++s) {
    bool bounded = false;
    for (int u = 0; u < n && !bounded; ++u) {
      bounded = true;
      for (int a = 0; a < n && bounded; ++a) bounded = !oracle::bit(s, a) || r[a][u];
    }
    if (bounded && oracle::sup(r, s) < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("way-below on finite posets is the order") {
  for (const auto& p : enumerate_posets_up_to(4)) {
    const auto r = support::rel(*p);
    auto wb = way_below(p);
    for (int x = 0; x < p->size(); ++x) {
      for (int y = 0; y < p->size(); ++y) CHECK(wb.holds(x, y) == r[x][y]);
    }
    CHECK(compacts(p) == p->all());
  }
}

TEST_CASE("totally-below matches brute force") {
  for (const auto& p : enumerate_posets_up_to(4)) {
    const auto r = support::rel(*p);
    auto tb = totally_below(p);
    Subset tc(p->size());
    for (int x = 0; x < p->size(); ++x) {
      for (int y = 0; y < p->size(); ++y) CHECK(tb.holds(x, y) == totally_below(r, x, y));
      if (totally_below(r, x, x)) tc.set(x);
    }
    CHECK(totally_compacts(p) == tc);
  }
}

TEST_CASE("classification of lattices up to five") {
  for (const auto& p : enumerate_posets_up_to(5)) {
    const auto r = support::rel(*p);
    const auto c = classify(p);
    const bool lat = oracle::is_lattice(r);
    const bool dist = lat && oracle::is_distributive(r);
    CAPTURE(canonical_form(*p));
    CHECK(c.lattice == lat);
    CHECK(c.distributive == dist);
    CHECK(c.frame == dist);
    CHECK(c.coframe == dist);
    CHECK(c.completely_distributive == dist);
    CHECK(c.continuous);
    CHECK(c.algebraic_domain);
    CHECK(c.directed_complete);
    CHECK(c.bounded_complete == bounded_complete(r));
    if (lat) CHECK(birkhoff_reconstructs(*p) == dist);
  }
}

TEST_CASE("distributivity witness in M3 and N5") {
  for (const auto& p : {diamond_m3(), pentagon_n5()}) {
    auto w = distributivity_witness(*p);
    REQUIRE(w);
    const auto ops = lattice_ops(*p);
    const auto [x, y, z] = *w;
    CHECK(ops.meet(x, ops.join(y, z)) != ops.join(ops.meet(x, y), ops.meet(x, z)));
  }
  CHECK_FALSE(distributivity_witness(*boolean_lattice(3)));
  CHECK_FALSE(is_frame(*diamond_m3()));
  CHECK(is_coframe(*chain(4)));
}

TEST_CASE("filter algebra splittings follow distributivity") {
  const Monad f(MonadKind::F);
  for (const auto& x : enumerate_lattices_up_to(5)) {
    const bool dist = oracle::is_distributive(support::rel(*x));
    auto a = find_algebra_structure(f, x);
    REQUIRE(a);
    auto disc = is_F_disconnected(*a);
    auto psi = psi_construction(*a);
    CHECK(disc.disconnected == dist);
    CHECK(psi.ok == dist);
    if (dist) {
      CHECK(disc.matches_splitting);
      CHECK(psi.filters);
      CHECK(psi.union_of_s);
      CHECK(psi.continuous);
      CHECK(psi.adjunction);
    } else {
      CHECK_FALSE(psi.failure.empty());
      CHECK(psi.witness_a >= 0);
    }
  }
}

TEST_CASE("mu of the full open is the whole carrier") {
  const Monad f(MonadKind::F);
  auto a = find_algebra_structure(f, boolean_lattice(2));
  REQUIRE(a);
  const auto& opens = a->levels.t1->opens;
  const int full = a->levels.t1->find_open(a->carrier()->all());
  REQUIRE(full >= 0);
  CHECK(mu_set(*a, full) == a->carrier()->all());
  CHECK(opens.size() == 6);
}

TEST_CASE("filter splitting sweep") {
  auto rep = verify_filter_splittings(6);
  CHECK(rep.rows.size() == 1 + 1 + 1 + 2 + 5 + 15);
  CHECK(rep.divergences == 0);
  CHECK(rep.side_checks);
  for (const auto& row : rep.rows) {
    CHECK(row.agree());
    CHECK(row.compact_image);
    CHECK(row.alpha_formula);
  }
}

TEST_CASE("subset enumeration guard") {
  CHECK_THROWS_AS(totally_below(chain(kMaxSubsetEnumeration + 1)), SizeCapExceeded);
}
