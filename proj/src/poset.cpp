#include "orderlab/poset.hpp"

#include <algorithm>
#include <sstream>

namespace orderlab {

Poset::Poset(std::vector<std::string> labels, std::vector<Subset> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  const auto n = labels_.size();
  if (up_.size() != n) throw InvalidInput("relation has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
      throw InvalidInput("duplicate element label '" + labels_[i] + "'");
    }
    if (up_[i].size() != n) throw InvalidInput("relation row has wrong width");
    if (!up_[i][i]) throw InvalidInput("relation is not reflexive at '" + labels_[i] + "'");
  }
  down_.assign(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up_[i].find_first(); j != Subset::npos; j = up_[i].find_next(j)) {
      down_[j].set(i);
      if (j != i && up_[j][i]) {
        throw InvalidInput("relation is not antisymmetric: '" + labels_[i] + "' and '" +
                           labels_[j] + "'");
      }
      if (!up_[j].is_subset_of(up_[i])) {
        throw InvalidInput("relation is not transitive through '" + labels_[j] + "'");
      }
    }
  }
}

std::optional<int> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InvalidInput("unknown element '" + std::string(label) + "'");
}

Subset Poset::up_closure(const Subset& s) const {
  Subset out(labels_.size());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out |= up_[i];
  return out;
}

Subset Poset::down_closure(const Subset& s) const {
  Subset out(labels_.size());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out |= down_[i];
  return out;
}

bool Poset::is_up_set(const Subset& s) const { return up_closure(s) == s; }
bool Poset::is_down_set(const Subset& s) const { return down_closure(s) == s; }

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order(labels_.size());
  for (int i = 0; i < size(); ++i) order[i] = i;
  // Fewer elements below means earlier; strict comparability implies a
  // strictly smaller down-set, so this is a linear extension.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_[a].count() < down_[b].count(); });
  return order;
}

std::optional<int> Poset::greatest_in(const Subset& s) const {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    if (s.is_subset_of(down_[i])) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> Poset::least_in(const Subset& s) const {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    if (s.is_subset_of(up_[i])) return static_cast<int>(i);
  }
  return std::nullopt;
}

Subset Poset::maximal_in(const Subset& s) const {
  Subset out(labels_.size());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    Subset above = up_[i] & s;
    above.reset(i);
    if (above.none()) out.set(i);
  }
  return out;
}

Subset Poset::minimal_in(const Subset& s) const {
  Subset out(labels_.size());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    Subset below = down_[i] & s;
    below.reset(i);
    if (below.none()) out.set(i);
  }
  return out;
}

Subset Poset::upper_bounds(const Subset& s) const {
  Subset out = all();
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out &= up_[i];
  return out;
}

Subset Poset::lower_bounds(const Subset& s) const {
  Subset out = all();
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out &= down_[i];
  return out;
}

std::optional<int> Poset::sup(const Subset& s) const { return least_in(upper_bounds(s)); }
std::optional<int> Poset::inf(const Subset& s) const { return greatest_in(lower_bounds(s)); }

bool Poset::is_directed(const Subset& s) const {
  if (s.none()) return false;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    for (auto j = s.find_next(i); j != Subset::npos; j = s.find_next(j)) {
      if (!(up_[i] & up_[j] & s).any()) return false;
    }
  }
  return true;
}

Poset Poset::dual() const { return Poset(labels_, down_); }

Poset Poset::induced(const Subset& keep) const {
  const auto idx = members(keep);
  const auto m = idx.size();
  std::vector<std::string> labels;
  std::vector<Subset> up(m, Subset(m));
  labels.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(labels_[idx[a]]);
    for (std::size_t b = 0; b < m; ++b) {
      if (up_[idx[a]][idx[b]]) up[a].set(b);
    }
  }
  return Poset(std::move(labels), std::move(up));
}

bool Poset::operator==(const Poset& other) const {
  return labels_ == other.labels_ && up_ == other.up_;
}

namespace {

// Depth-first search for a directed cycle in the generating edges, used to
// name the offending elements when antisymmetry fails.
std::vector<int> find_cycle(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> state(n, 0), parent(n, -1);
  std::vector<int> cycle;
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : adj[v]) {
      if (w == v) continue;
      if (state[w] == 1) {
        cycle.push_back(w);
        for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return true;
      }
      if (state[w] == 0) {
        parent[w] = v;
        if (dfs(w)) return true;
      }
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (state[v] == 0 && dfs(v)) break;
  }
  return cycle;
}

}  // namespace

PosetRef make_poset_indexed(const std::vector<std::string>& labels,
                            const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(labels.size());
  std::vector<Subset> up(n, Subset(n));
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidInput("pair index out of range");
    up[a].set(b);
    adj[a].push_back(b);
  }
  // Warshall
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (up[i][k]) up[i] |= up[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (up[i][j] && up[j][i]) {
        auto cycle = find_cycle(n, adj);
        std::ostringstream msg;
        msg << "order relation has a cycle:";
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          msg << (k ? " <= " : " ") << labels[cycle[k]];
        }
        throw InvalidInput(msg.str());
      }
    }
  }
  return share(Poset(labels, std::move(up)));
}

PosetRef make_poset(const std::vector<std::string>& labels,
                    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second) {
      throw InvalidInput("duplicate element label '" + labels[i] + "'");
    }
  }
  std::vector<std::pair<int, int>> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InvalidInput("pair names unknown element '" + a + "'");
    if (ib == index.end()) throw InvalidInput("pair names unknown element '" + b + "'");
    idx.emplace_back(ia->second, ib->second);
  }
  return make_poset_indexed(labels, idx);
}

PosetRef chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) pairs.emplace_back(i - 1, i);
  }
  return make_poset_indexed(labels, pairs);
}

PosetRef antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  }
  return make_poset_indexed(labels, {});
}

PosetRef boolean_lattice(int k) {
  const int n = 1 << k;
  std::vector<std::string> labels;
  std::vector<Subset> up(n, Subset(n));
  for (int s = 0; s < n; ++s) {
    std::string l = "{";
    for (int b = 0; b < k; ++b) {
      if (s & (1 << b)) {
        if (l.size() > 1) l += ",";
        l += static_cast<char>('a' + b);
      }
    }
    labels.push_back(l + "}");
    for (int t = 0; t < n; ++t) {
      if ((s & t) == s) up[s].set(t);
    }
  }
  return share(Poset(std::move(labels), std::move(up)));
}

PosetRef diamond_m3() {
  return make_poset({"bot", "a", "b", "c", "top"},
                    {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
}

PosetRef pentagon_n5() {
  return make_poset({"bot", "a", "b", "c", "top"},
                    {{"bot", "a"}, {"a", "b"}, {"b", "top"}, {"bot", "c"}, {"c", "top"}});
}

PosetRef disjoint_union(const Poset& a, const Poset& b) {
  const int n = a.size() + b.size();
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l);
  std::vector<Subset> up(n, Subset(n));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) up[i][j] = a.le(i, j);
  }
  for (int i = 0; i < b.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) up[a.size() + i][a.size() + j] = b.le(i, j);
  }
  return share(Poset(std::move(labels), std::move(up)));
}

PosetRef with_bounds(const Poset& p, const std::string& bottom, const std::string& top) {
  const int n = p.size() + 2;
  std::vector<std::string> labels{bottom};
  for (const auto& l : p.labels()) labels.push_back(l);
  labels.push_back(top);
  std::vector<Subset> up(n, Subset(n));
  up[0].set();
  up[n - 1].set(n - 1);
  for (int i = 0; i < p.size(); ++i) {
    up[i + 1].set(n - 1);
    for (int j = 0; j < p.size(); ++j) up[i + 1][j + 1] = p.le(i, j);
  }
  return share(Poset(std::move(labels), std::move(up)));
}

bool is_monotone(const Poset& dom, const Poset& cod, const std::vector<int>& table) {
  if (static_cast<int>(table.size()) != dom.size()) return false;
  for (int v : table) {
    if (v < 0 || v >= cod.size()) return false;
  }
  for (int x = 0; x < dom.size(); ++x) {
    const auto& up = dom.up(x);
    for (auto y = up.find_first(); y != Subset::npos; y = up.find_next(y)) {
      if (!cod.le(table[x], table[y])) return false;
    }
  }
  return true;
}

MonotoneMap::MonotoneMap(PosetRef dom, PosetRef cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (!is_monotone(*dom_, *cod_, table_)) throw InvalidInput("map is not total and monotone");
}

MonotoneMap MonotoneMap::trusted(PosetRef dom, PosetRef cod, std::vector<int> table) {
  MonotoneMap m;
  m.dom_ = std::move(dom);
  m.cod_ = std::move(cod);
  m.table_ = std::move(table);
  return m;
}

Subset MonotoneMap::image(const Subset& s) const {
  Subset out = cod_->empty_set();
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.set(table_[i]);
  return out;
}

Subset MonotoneMap::preimage(const Subset& s) const {
  Subset out = dom_->empty_set();
  for (int x = 0; x < dom_->size(); ++x) {
    if (s[table_[x]]) out.set(x);
  }
  return out;
}

bool MonotoneMap::is_injective() const { return static_cast<int>(image().count()) == dom_->size(); }
bool MonotoneMap::is_surjective() const { return static_cast<int>(image().count()) == cod_->size(); }

bool MonotoneMap::is_order_reflecting() const {
  for (int x = 0; x < dom_->size(); ++x) {
    for (int y = 0; y < dom_->size(); ++y) {
      if (cod_->le(table_[x], table_[y]) && !dom_->le(x, y)) return false;
    }
  }
  return true;
}

MonotoneMap identity(const PosetRef& p) {
  std::vector<int> t(p->size());
  for (int i = 0; i < p->size(); ++i) t[i] = i;
  return MonotoneMap::trusted(p, p, std::move(t));
}

MonotoneMap constant(const PosetRef& dom, const PosetRef& cod, int value) {
  return MonotoneMap::trusted(dom, cod, std::vector<int>(dom->size(), value));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod().size() != g.dom().size()) throw InvalidInput("composition of non-matching maps");
  std::vector<int> t(f.dom().size());
  for (int x = 0; x < f.dom().size(); ++x) t[x] = g(f(x));
  return MonotoneMap::trusted(f.dom_ref(), g.cod_ref(), std::move(t));
}

const char* to_string(Enrichment e) {
  return e == Enrichment::pointwise ? "pointwise" : "dual-pointwise";
}

bool leq(const MonotoneMap& f, const MonotoneMap& g, Enrichment e) {
  const auto& cod = f.cod();
  for (int x = 0; x < f.dom().size(); ++x) {
    const bool ok = e == Enrichment::pointwise ? cod.le(f(x), g(x)) : cod.le(g(x), f(x));
    if (!ok) return false;
  }
  return true;
}

bool is_adjunction(const MonotoneMap& left, const MonotoneMap& right, Enrichment e) {
  if (left.cod().size() != right.dom().size() || right.cod().size() != left.dom().size()) {
    return false;
  }
  return leq(identity(left.dom_ref()), compose(right, left), e) &&
         leq(compose(left, right), identity(right.dom_ref()), e);
}

std::optional<MonotoneMap> try_adjoint(const MonotoneMap& f, Side side, Enrichment e) {
  // Under the dual order the roles of left and right swap.
  const bool want_pointwise_right = (side == Side::right) == (e == Enrichment::pointwise);
  const auto& dom = f.dom();
  const auto& cod = f.cod();
  std::vector<int> g(cod.size());
  for (int q = 0; q < cod.size(); ++q) {
    Subset candidates = dom.empty_set();
    for (int p = 0; p < dom.size(); ++p) {
      if (want_pointwise_right ? cod.le(f(p), q) : cod.le(q, f(p))) candidates.set(p);
    }
    auto best = want_pointwise_right ? dom.greatest_in(candidates) : dom.least_in(candidates);
    if (!best) return std::nullopt;
    g[q] = *best;
  }
  return MonotoneMap(f.cod_ref(), f.dom_ref(), std::move(g));
}

int LatticeOps::meet(int a, int b) const {
  auto m = try_meet(a, b);
  if (!m) throw InvalidInput("meet queried on a pair without a meet");
  return *m;
}

int LatticeOps::join(int a, int b) const {
  auto j = try_join(a, b);
  if (!j) throw InvalidInput("join queried on a pair without a join");
  return *j;
}

LatticeOps lattice_ops(const Poset& p) {
  LatticeOps ops;
  ops.n = p.size();
  ops.top = p.top();
  ops.bottom = p.bottom();
  ops.meet_.resize(static_cast<std::size_t>(ops.n) * ops.n);
  ops.join_.resize(static_cast<std::size_t>(ops.n) * ops.n);
  bool all = ops.n > 0 && ops.top && ops.bottom;
  for (int a = 0; a < ops.n; ++a) {
    for (int b = 0; b < ops.n; ++b) {
      Subset pair = p.empty_set();
      pair.set(a);
      pair.set(b);
      const auto k = static_cast<std::size_t>(a) * ops.n + b;
      ops.meet_[k] = p.inf(pair);
      ops.join_[k] = p.sup(pair);
      if (!ops.meet_[k] || !ops.join_[k]) all = false;
    }
  }
  ops.is_lattice = all;
  return ops;
}

}  // namespace orderlab
