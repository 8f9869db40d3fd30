#include "orderlab/finspace.hpp"

#include <algorithm>
#include <unordered_set>

#include "orderlab/enumerate.hpp"

namespace orderlab {

namespace {

void sort_unique(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), subset_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

FinSpace::FinSpace(std::vector<std::string> points, std::vector<Subset> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  const auto n = points_.size();
  for (const auto& u : opens_) {
    if (u.size() != n) throw InvalidInput("open set has the wrong width");
  }
  sort_unique(opens_);
  std::unordered_set<Subset, SubsetHash> index(opens_.begin(), opens_.end());
  if (!index.count(Subset(n))) throw InvalidInput("the empty set is not open");
  if (!index.count(full_set(n))) throw InvalidInput("the full set is not open");
  for (const auto& u : opens_) {
    for (const auto& v : opens_) {
      if (!index.count(u & v)) throw InvalidInput("opens are not closed under intersection");
      if (!index.count(u | v)) throw InvalidInput("opens are not closed under union");
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw InvalidInput("duplicate point label '" + p + "'");
  }
}

bool FinSpace::is_open(const Subset& s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s, subset_less);
}

Subset FinSpace::neighbourhood(int x) const {
  Subset n = full_set(points_.size());
  for (const auto& u : opens_) {
    if (u[x]) n &= u;
  }
  return n;
}

bool FinSpace::is_t0() const {
  for (int x = 0; x < size(); ++x) {
    for (int y = x + 1; y < size(); ++y) {
      if (neighbourhood(x)[y] && neighbourhood(y)[x]) return false;
    }
  }
  return true;
}

FinSpace generated_space(std::vector<std::string> points, const std::vector<Subset>& subbase) {
  const auto n = points.size();
  std::unordered_set<Subset, SubsetHash> seen{Subset(n), full_set(n)};
  std::vector<Subset> all(seen.begin(), seen.end());
  for (const auto& s : subbase) {
    if (seen.insert(s).second) all.push_back(s);
  }
  // Close under binary meets and joins; new sets are paired with all others.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const Subset& c : {all[i] & all[j], all[i] | all[j]}) {
        if (seen.insert(c).second) all.push_back(c);
      }
    }
  }
  return FinSpace(std::move(points), std::move(all));
}

PosetRef specialization_poset(const FinSpace& x) {
  if (!x.is_t0()) throw InvalidInput("space is not T0");
  std::vector<Subset> up;
  for (int p = 0; p < x.size(); ++p) up.push_back(x.neighbourhood(p));
  return share(Poset(x.points(), std::move(up)));
}

FinSpace alexandrov(const Poset& p) { return FinSpace(p.labels(), up_sets(p)); }

PosetRef open_lattice(const FinSpace& x) {
  const auto& opens = x.opens();
  const auto m = opens.size();
  std::vector<std::string> labels;
  std::vector<Subset> up(m, Subset(m));
  for (std::size_t a = 0; a < m; ++a) {
    std::string l = "{";
    bool first = true;
    for (int i : members(opens[a])) {
      l += (first ? "" : ",") + x.points()[i];
      first = false;
    }
    labels.push_back(l + "}");
    for (std::size_t b = 0; b < m; ++b) {
      if (opens[a].is_subset_of(opens[b])) up[a].set(b);
    }
  }
  return share(Poset(std::move(labels), std::move(up)));
}

FinSpace sierpinski() {
  Subset one(2);
  one.set(1);
  return FinSpace({"0", "1"}, {Subset(2), one, full_set(2)});
}

bool is_sober(const FinSpace& x) {
  const auto n = static_cast<std::size_t>(x.size());
  std::vector<Subset> closed;
  for (const auto& u : x.opens()) closed.push_back(~u);
  std::vector<Subset> point_closure(n);
  for (std::size_t p = 0; p < n; ++p) {
    point_closure[p] = full_set(n);
    for (const auto& c : closed) {
      if (c[p]) point_closure[p] &= c;
    }
  }
  for (const auto& c : closed) {
    if (c.none()) continue;
    bool irreducible = true;
    for (const auto& a : closed) {
      for (const auto& b : closed) {
        if (a != c && b != c && a.is_subset_of(c) && b.is_subset_of(c) && (a | b) == c) {
          irreducible = false;
        }
      }
    }
    if (!irreducible) continue;
    int generic = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (point_closure[p] == c) ++generic;
    }
    if (generic != 1) return false;
  }
  return true;
}

namespace {

Subset preimage(const std::vector<int>& table, const Subset& v) {
  Subset out(table.size());
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (v[table[p]]) out.set(p);
  }
  return out;
}

bool valid_table(const FinSpace& dom, const FinSpace& cod, const std::vector<int>& table) {
  if (static_cast<int>(table.size()) != dom.size()) return false;
  return std::all_of(table.begin(), table.end(), [&](int v) { return v >= 0 && v < cod.size(); });
}

}  // namespace

bool is_continuous(const FinSpace& dom, const FinSpace& cod, const std::vector<int>& table) {
  if (!valid_table(dom, cod, table)) return false;
  return std::all_of(cod.opens().begin(), cod.opens().end(),
                     [&](const Subset& v) { return dom.is_open(preimage(table, v)); });
}

bool is_spectral_map(const FinSpace& dom, const FinSpace& cod, const std::vector<int>& table) {
  if (!valid_table(dom, cod, table)) return false;
  // Compact opens of a finite space: every open, since each cover is finite.
  for (const auto& v : cod.opens()) {
    if (!dom.is_open(preimage(table, v))) return false;
  }
  return true;
}

ContinuousMap::ContinuousMap(const FinSpace& dom, const FinSpace& cod, std::vector<int> table)
    : table_(std::move(table)) {
  if (!valid_table(dom, cod, table_)) throw InvalidInput("map table is not total on the domain");
  if (!is_continuous(dom, cod, table_)) throw InvalidInput("map is not continuous");
}

bool same_topology(const FinSpace& a, const FinSpace& b) {
  return a.size() == b.size() && a.opens() == b.opens();
}

}  // namespace orderlab
