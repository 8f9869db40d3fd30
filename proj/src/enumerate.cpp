#include "orderlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_set>

namespace orderlab {

namespace {

void enumerate_lower_sets(const Poset& p, bool downward,
                          const std::function<bool(const Subset&)>& visit) {
  // Decide elements along a linear extension (upward for down-sets, downward
  // for up-sets); an element may join only if everything below (resp. above)
  // it already joined, so every branch ends in a valid set.
  auto order = p.linear_extension();
  if (!downward) std::reverse(order.begin(), order.end());
  const auto n = static_cast<std::size_t>(p.size());
  Subset current(n);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == n) {
      if (!visit(current)) stop = true;
      return;
    }
    const int x = order[k];
    rec(k + 1);
    Subset needed = downward ? p.down(x) : p.up(x);
    needed.reset(x);
    if (needed.is_subset_of(current)) {
      current.set(x);
      rec(k + 1);
      current.reset(x);
    }
  };
  rec(0);
}

std::vector<Subset> collect(const Poset& p, bool downward, std::size_t cap) {
  std::vector<Subset> out;
  enumerate_lower_sets(p, downward, [&](const Subset& s) {
    if (out.size() >= cap) {
      throw SizeCapExceeded("more than " + std::to_string(cap) + " " +
                            (downward ? "down" : "up") + "-sets");
    }
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

using Key = std::pair<std::size_t, std::size_t>;

std::vector<Key> element_keys(const Poset& p) {
  std::vector<Key> keys(p.size());
  for (int i = 0; i < p.size(); ++i) keys[i] = {p.down(i).count(), p.up(i).count()};
  return keys;
}

}  // namespace

std::vector<Subset> down_sets(const Poset& p, std::size_t cap) { return collect(p, true, cap); }
std::vector<Subset> up_sets(const Poset& p, std::size_t cap) { return collect(p, false, cap); }

void for_each_up_set(const Poset& p, const std::function<bool(const Subset&)>& visit) {
  enumerate_lower_sets(p, false, visit);
}

std::string canonical_form(const Poset& p) {
  const int n = p.size();
  auto keys = element_keys(p);
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  // Blocks of equal key; permute only within blocks.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && keys[base[j]] == keys[base[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::string best;
  std::string cur(static_cast<std::size_t>(n) * n, '0');
  std::vector<int> perm = base;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) cur[static_cast<std::size_t>(i) * n + j] = p.le(perm[i], perm[j]) ? '1' : '0';
      }
      if (best.empty() || cur < best) best = cur;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(0);
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  std::string prefix;
  for (const auto& k : sorted) prefix += std::to_string(k.first) + "." + std::to_string(k.second) + ",";
  return std::to_string(n) + "|" + prefix + "|" + best;
}

bool are_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  return canonical_form(p) == canonical_form(q);
}

std::vector<PosetRef> enumerate_posets(int n) {
  if (n < 0) return {};
  std::vector<PosetRef> out;
  std::unordered_set<std::string> seen;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  // down[j] is the strict down-set of element j among 0..j-1.
  std::vector<Subset> down(n, Subset(n));
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      std::vector<Subset> up(n, Subset(n));
      for (int b = 0; b < n; ++b) {
        up[b].set(b);
        for (auto a = down[b].find_first(); a != Subset::npos; a = down[b].find_next(a)) up[a].set(b);
      }
      Poset candidate(labels, std::move(up));
      if (seen.insert(canonical_form(candidate)).second) out.push_back(share(std::move(candidate)));
      return;
    }
    // Strict down-set of j: any down-set of the poset on 0..j-1.
    std::vector<int> idx(j);
    std::iota(idx.begin(), idx.end(), 0);
    Subset current(n);
    std::function<void(int)> choose = [&](int k) {
      if (k == j) {
        down[j] = current;
        rec(j + 1);
        return;
      }
      choose(k + 1);
      // k may be added only if its own strict down-set is already inside.
      if (down[k].is_subset_of(current)) {
        current.set(k);
        choose(k + 1);
        current.reset(k);
      }
    };
    choose(0);
  };
  rec(0);
  return out;
}

std::vector<PosetRef> enumerate_posets_up_to(int max_n) {
  std::vector<PosetRef> out;
  for (int n = 0; n <= max_n; ++n) {
    auto part = enumerate_posets(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<PosetRef> enumerate_lattices(int n) {
  if (n <= 0) return {};
  if (n == 1) return {chain(1)};
  std::vector<PosetRef> out;
  for (const auto& inner : enumerate_posets(n - 2)) {
    auto l = with_bounds(*inner);
    if (lattice_ops(*l).is_lattice) out.push_back(l);
  }
  return out;
}

std::vector<PosetRef> enumerate_lattices_up_to(int max_n) {
  std::vector<PosetRef> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = enumerate_lattices(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void for_each_monotone_map(const Poset& p, const Poset& q,
                           const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = p.size();
  const int m = q.size();
  auto order = p.linear_extension();
  std::vector<int> table(n, -1);
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (stop) return;
    if (k == n) {
      if (!visit(table)) stop = true;
      return;
    }
    const int x = order[k];
    for (int v = 0; v < m && !stop; ++v) {
      bool ok = true;
      const auto& below = p.down(x);
      for (auto y = below.find_first(); y != Subset::npos; y = below.find_next(y)) {
        if (static_cast<int>(y) != x && !q.le(table[y], v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      table[x] = v;
      rec(k + 1);
      table[x] = -1;
    }
  };
  rec(0);
}

std::vector<MonotoneMap> monotone_maps(const PosetRef& p, const PosetRef& q) {
  std::vector<MonotoneMap> out;
  for_each_monotone_map(*p, *q, [&](const std::vector<int>& t) {
    out.push_back(MonotoneMap::trusted(p, q, t));
    return true;
  });
  return out;
}

std::size_t count_monotone_maps(const Poset& p, const Poset& q) {
  std::size_t count = 0;
  for_each_monotone_map(p, q, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

void for_each_isomorphism(const Poset& p, const Poset& q,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = p.size();
  if (n != q.size()) return;
  auto kp = element_keys(p);
  auto kq = element_keys(q);
  {
    auto a = kp, b = kq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  std::vector<int> table(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int x) {
    if (stop) return;
    if (x == n) {
      if (!visit(table)) stop = true;
      return;
    }
    for (int v = 0; v < n && !stop; ++v) {
      if (used[v] || kp[x] != kq[v]) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        ok = p.le(x, y) == q.le(v, table[y]) && p.le(y, x) == q.le(table[y], v);
      }
      if (!ok) continue;
      table[x] = v;
      used[v] = 1;
      rec(x + 1);
      used[v] = 0;
      table[x] = -1;
    }
  };
  rec(0);
}

std::optional<MonotoneMap> find_isomorphism(const PosetRef& p, const PosetRef& q) {
  std::optional<MonotoneMap> found;
  for_each_isomorphism(*p, *q, [&](const std::vector<int>& t) {
    found = MonotoneMap::trusted(p, q, t);
    return false;
  });
  return found;
}

bool is_order_mono(const MonotoneMap& f) { return f.is_order_reflecting(); }

bool is_order_mono_by_probe(const MonotoneMap& f, int max_probe) {
  const auto& x = f.dom_ref();
  for (const auto& a : enumerate_posets_up_to(max_probe)) {
    auto maps = monotone_maps(a, x);
    for (const auto& g : maps) {
      for (const auto& h : maps) {
        if (leq(compose(f, g), compose(f, h), Enrichment::pointwise) &&
            !leq(g, h, Enrichment::pointwise)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<ProbeWitness> find_order_epi_witness(const MonotoneMap& f, int max_probe) {
  if (max_probe < 0) max_probe = f.cod().size() + 2;
  const auto& y = f.cod_ref();
  for (const auto& b : enumerate_posets_up_to(max_probe)) {
    auto maps = monotone_maps(y, b);
    std::vector<MonotoneMap> restricted;
    restricted.reserve(maps.size());
    for (const auto& g : maps) restricted.push_back(compose(g, f));
    for (std::size_t i = 0; i < maps.size(); ++i) {
      for (std::size_t j = 0; j < maps.size(); ++j) {
        if (leq(restricted[i], restricted[j], Enrichment::pointwise) &&
            !leq(maps[i], maps[j], Enrichment::pointwise)) {
          return ProbeWitness{b, maps[i], maps[j]};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_order_epi_bounded(const MonotoneMap& f, int max_probe) {
  return !find_order_epi_witness(f, max_probe).has_value();
}

std::optional<ProbeWitness> find_epi_witness(const MonotoneMap& f, int max_probe) {
  const auto& y = f.cod_ref();
  for (const auto& b : enumerate_posets_up_to(max_probe)) {
    auto maps = monotone_maps(y, b);
    std::map<std::vector<int>, std::size_t> seen;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      auto [it, fresh] = seen.emplace(compose(maps[i], f).table(), i);
      if (!fresh) return ProbeWitness{b, maps[it->second], maps[i]};
    }
  }
  return std::nullopt;
}

}  // namespace orderlab
