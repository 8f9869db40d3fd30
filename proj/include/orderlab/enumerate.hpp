#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/poset.hpp"

namespace orderlab {

/// Default cap on the number of sets produced by down_sets/up_sets.
inline constexpr std::size_t kDefaultSetCap = 2'000'000;

/// All down-sets (resp. up-sets) of `p`, ordered by subset_less.
std::vector<Subset> down_sets(const Poset& p, std::size_t cap = kDefaultSetCap);
std::vector<Subset> up_sets(const Poset& p, std::size_t cap = kDefaultSetCap);

/// Calls `visit` with every up-set without storing them; `visit` returns
/// false to stop early.
void for_each_up_set(const Poset& p, const std::function<bool(const Subset&)>& visit);

/// Posets with exactly n elements, one per isomorphism class. Elements are
/// labelled "0".."n-1" along a linear extension. Deterministic.
std::vector<PosetRef> enumerate_posets(int n);
/// Concatenation of enumerate_posets(0..max_n).
std::vector<PosetRef> enumerate_posets_up_to(int max_n);

/// Lattices with exactly n >= 1 elements, one per isomorphism class.
std::vector<PosetRef> enumerate_lattices(int n);
std::vector<PosetRef> enumerate_lattices_up_to(int max_n);

/// Visits monotone maps P -> Q as tables, in lexicographic order along a
/// linear extension of P. `visit` returns false to stop.
void for_each_monotone_map(const Poset& p, const Poset& q,
                           const std::function<bool(const std::vector<int>&)>& visit);
std::vector<MonotoneMap> monotone_maps(const PosetRef& p, const PosetRef& q);
std::size_t count_monotone_maps(const Poset& p, const Poset& q);

/// Canonical form of the order relation; equal iff isomorphic.
std::string canonical_form(const Poset& p);
bool are_isomorphic(const Poset& p, const Poset& q);

/// Visits order isomorphisms p -> q; `visit` returns false to stop.
void for_each_isomorphism(const Poset& p, const Poset& q,
                          const std::function<bool(const std::vector<int>&)>& visit);
std::optional<MonotoneMap> find_isomorphism(const PosetRef& p, const PosetRef& q);

/// Exact: order-mono in Pos is the same as order-reflecting.
bool is_order_mono(const MonotoneMap& f);
/// Definitional check against every probe poset with at most max_probe
/// elements and every pair of maps into dom(f).
bool is_order_mono_by_probe(const MonotoneMap& f, int max_probe);

struct ProbeWitness {
  PosetRef probe;
  MonotoneMap g;
  MonotoneMap h;
};

/// Searches probe posets B with |B| <= max_probe (smallest first) for
/// g, h : cod(f) -> B with g.f <= h.f but not g <= h. A negative answer is
/// only as strong as the bound. max_probe < 0 means |cod| + 2.
std::optional<ProbeWitness> find_order_epi_witness(const MonotoneMap& f, int max_probe = -1);
bool is_order_epi_bounded(const MonotoneMap& f, int max_probe = -1);

/// Plain epimorphism probe: g.f = h.f but g != h.
std::optional<ProbeWitness> find_epi_witness(const MonotoneMap& f, int max_probe);

}  // namespace orderlab
