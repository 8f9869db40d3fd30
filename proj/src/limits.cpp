#include "orderlab/limits.hpp"

#include <map>

#include "orderlab/enumerate.hpp"

namespace orderlab {

namespace {

std::string tuple_label(const std::vector<std::string>& parts, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  s += close;
  return s;
}

}  // namespace

Cone product(const std::vector<PosetRef>& factors) {
  std::size_t total = 1;
  for (const auto& f : factors) total *= static_cast<std::size_t>(f->size());
  const auto k = factors.size();
  std::vector<std::vector<int>> coords(total, std::vector<int>(k));
  for (std::size_t e = 0; e < total; ++e) {
    std::size_t rest = e;
    for (std::size_t c = k; c-- > 0;) {
      const auto n = static_cast<std::size_t>(factors[c]->size());
      coords[e][c] = static_cast<int>(rest % n);
      rest /= n;
    }
  }
  std::vector<std::string> labels(total);
  std::vector<Subset> up(total, Subset(total));
  for (std::size_t a = 0; a < total; ++a) {
    std::vector<std::string> parts;
    for (std::size_t c = 0; c < k; ++c) parts.push_back(factors[c]->label(coords[a][c]));
    labels[a] = tuple_label(parts, '(', ')');
    for (std::size_t b = 0; b < total; ++b) {
      bool le = true;
      for (std::size_t c = 0; c < k && le; ++c) le = factors[c]->le(coords[a][c], coords[b][c]);
      if (le) up[a].set(b);
    }
  }
  auto apex = share(Poset(std::move(labels), std::move(up)));
  Cone cone{apex, {}};
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<int> t(total);
    for (std::size_t e = 0; e < total; ++e) t[e] = coords[e][c];
    cone.legs.push_back(MonotoneMap::trusted(apex, factors[c], std::move(t)));
  }
  return cone;
}

MonotoneMap pairing(const Cone& prod, const std::vector<MonotoneMap>& maps) {
  if (maps.size() != prod.legs.size()) throw InvalidInput("pairing: wrong number of maps");
  if (maps.empty()) throw InvalidInput("pairing: empty family has no domain");
  const auto& dom = maps.front().dom_ref();
  std::vector<int> t(dom->size());
  for (int x = 0; x < dom->size(); ++x) {
    // mixed radix, last coordinate fastest
    int e = 0;
    for (std::size_t c = 0; c < maps.size(); ++c) e = e * prod.legs[c].cod().size() + maps[c](x);
    t[x] = e;
  }
  return MonotoneMap(dom, prod.apex, std::move(t));
}

namespace {

Subobject restrict_to(const MonotoneMap& f, const Subset& keep) {
  auto sub = share(f.dom().induced(keep));
  return Subobject{sub, MonotoneMap::trusted(sub, f.dom_ref(), members(keep))};
}

}  // namespace

Subobject equalizer(const MonotoneMap& f, const MonotoneMap& g) {
  Subset keep = f.dom().empty_set();
  for (int x = 0; x < f.dom().size(); ++x) {
    if (f(x) == g(x)) keep.set(x);
  }
  return restrict_to(f, keep);
}

Subobject inserter(const MonotoneMap& f, const MonotoneMap& g) {
  Subset keep = f.dom().empty_set();
  for (int x = 0; x < f.dom().size(); ++x) {
    if (f.cod().le(f(x), g(x))) keep.set(x);
  }
  return restrict_to(f, keep);
}

std::optional<MonotoneMap> factor_through(const MonotoneMap& inclusion, const MonotoneMap& k) {
  std::vector<int> inverse(inclusion.cod().size(), -1);
  for (int y = 0; y < inclusion.dom().size(); ++y) inverse[inclusion(y)] = y;
  std::vector<int> t(k.dom().size());
  for (int a = 0; a < k.dom().size(); ++a) {
    t[a] = inverse[k(a)];
    if (t[a] < 0) return std::nullopt;
  }
  if (!is_monotone(k.dom(), inclusion.dom(), t)) return std::nullopt;
  return MonotoneMap::trusted(k.dom_ref(), inclusion.dom_ref(), std::move(t));
}

int Cotensor::element_of(const std::vector<int>& table) const {
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (tables[k] == table) return static_cast<int>(k);
  }
  throw InvalidInput("map is not an element of the cotensor");
}

Cotensor cotensor(const PosetRef& weight, const PosetRef& base) {
  Cotensor c;
  c.weight = weight;
  c.base = base;
  for_each_monotone_map(*weight, *base, [&](const std::vector<int>& t) {
    c.tables.push_back(t);
    return true;
  });
  const auto n = c.tables.size();
  std::vector<std::string> labels(n);
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::string> parts;
    for (int v : c.tables[a]) parts.push_back(base->label(v));
    labels[a] = tuple_label(parts, '[', ']');
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (int i = 0; i < weight->size() && le; ++i) le = base->le(c.tables[a][i], c.tables[b][i]);
      if (le) up[a].set(b);
    }
  }
  c.object = share(Poset(std::move(labels), std::move(up)));
  for (int i = 0; i < weight->size(); ++i) {
    std::vector<int> t(n);
    for (std::size_t a = 0; a < n; ++a) t[a] = c.tables[a][i];
    c.projections.push_back(MonotoneMap::trusted(c.object, base, std::move(t)));
  }
  return c;
}

void ShapeCategory::validate() const {
  const int m = static_cast<int>(arrows.size());
  if (static_cast<int>(identity.size()) != objects) throw InvalidInput("shape: missing identities");
  if (static_cast<int>(compose.size()) != m) throw InvalidInput("shape: composition table size");
  for (int d = 0; d < objects; ++d) {
    const auto& id = arrows.at(identity[d]);
    if (id.source != d || id.target != d) throw InvalidInput("shape: identity has wrong ends");
  }
  for (int g = 0; g < m; ++g) {
    if (static_cast<int>(compose[g].size()) != m) throw InvalidInput("shape: composition row size");
    for (int f = 0; f < m; ++f) {
      const bool composable = arrows[f].target == arrows[g].source;
      const int h = compose[g][f];
      if (composable != (h >= 0)) throw InvalidInput("shape: composition defined off composable pairs");
      if (h >= 0 && (arrows[h].source != arrows[f].source || arrows[h].target != arrows[g].target)) {
        throw InvalidInput("shape: composite has wrong ends");
      }
    }
  }
  for (int f = 0; f < m; ++f) {
    if (compose[identity[arrows[f].target]][f] != f || compose[f][identity[arrows[f].source]] != f) {
      throw InvalidInput("shape: identity law fails");
    }
  }
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (compose[g][f] < 0) continue;
      for (int h = 0; h < m; ++h) {
        if (compose[h][g] < 0) continue;
        if (compose[compose[h][g]][f] != compose[h][compose[g][f]]) {
          throw InvalidInput("shape: composition is not associative");
        }
      }
    }
  }
}

ShapeCategory ShapeCategory::discrete(int n) {
  ShapeCategory s;
  s.objects = n;
  for (int d = 0; d < n; ++d) {
    s.arrows.push_back({d, d, "id" + std::to_string(d)});
    s.identity.push_back(d);
  }
  s.compose.assign(n, std::vector<int>(n, -1));
  for (int d = 0; d < n; ++d) s.compose[d][d] = d;
  return s;
}

ShapeCategory ShapeCategory::parallel_pair() {
  ShapeCategory s = discrete(2);
  s.arrows.push_back({0, 1, "u"});
  s.arrows.push_back({0, 1, "v"});
  s.compose.assign(4, std::vector<int>(4, -1));
  s.compose[0][0] = 0;
  s.compose[1][1] = 1;
  s.compose[2][0] = 2;
  s.compose[3][0] = 3;
  s.compose[1][2] = 2;
  s.compose[1][3] = 3;
  return s;
}

namespace {

void check_functor(const ShapeCategory& shape, const PosDiagram& d, const char* what) {
  if (static_cast<int>(d.objects.size()) != shape.objects || d.arrows.size() != shape.arrows.size()) {
    throw InvalidInput(std::string(what) + ": size does not match the shape");
  }
  for (std::size_t a = 0; a < shape.arrows.size(); ++a) {
    const auto& arr = shape.arrows[a];
    if (d.arrows[a].dom().size() != d.objects[arr.source]->size() ||
        d.arrows[a].cod().size() != d.objects[arr.target]->size()) {
      throw InvalidInput(std::string(what) + ": arrow '" + arr.name + "' has wrong ends");
    }
  }
  for (int o = 0; o < shape.objects; ++o) {
    if (!(d.arrows[shape.identity[o]] == identity(d.objects[o]))) {
      throw InvalidInput(std::string(what) + ": identity not preserved");
    }
  }
  for (std::size_t g = 0; g < shape.arrows.size(); ++g) {
    for (std::size_t f = 0; f < shape.arrows.size(); ++f) {
      const int h = shape.compose[g][f];
      if (h >= 0 && !(d.arrows[h] == compose(d.arrows[g], d.arrows[f]))) {
        throw InvalidInput(std::string(what) + ": composition not preserved");
      }
    }
  }
}

}  // namespace

PosDiagram constant_weight(const ShapeCategory& shape) {
  PosDiagram w;
  auto one = chain(1);
  for (int d = 0; d < shape.objects; ++d) w.objects.push_back(one);
  for (std::size_t a = 0; a < shape.arrows.size(); ++a) w.arrows.push_back(identity(one));
  return w;
}

WeightedLimit weighted_limit(const ShapeCategory& shape, const PosDiagram& diagram,
                             const PosDiagram& weight) {
  shape.validate();
  check_functor(shape, diagram, "diagram");
  check_functor(shape, weight, "weight");

  std::vector<Cotensor> sources;
  std::vector<PosetRef> source_objects;
  for (int d = 0; d < shape.objects; ++d) {
    sources.push_back(cotensor(weight.objects[d], diagram.objects[d]));
    source_objects.push_back(sources.back().object);
  }
  std::vector<Cotensor> targets;
  std::vector<PosetRef> target_objects;
  for (const auto& arr : shape.arrows) {
    targets.push_back(cotensor(weight.objects[arr.source], diagram.objects[arr.target]));
    target_objects.push_back(targets.back().object);
  }
  auto p1 = product(source_objects);
  auto p2 = product(target_objects);

  // sigma_n(a) = D(n) . a_d and tau_n(a) = a_d' . W(n), for n : d -> d'.
  std::vector<MonotoneMap> sigma_parts;
  std::vector<MonotoneMap> tau_parts;
  for (std::size_t n = 0; n < shape.arrows.size(); ++n) {
    const auto& arr = shape.arrows[n];
    std::vector<int> ts(p1.apex->size());
    std::vector<int> tt(p1.apex->size());
    for (int e = 0; e < p1.apex->size(); ++e) {
      const auto& a_src = sources[arr.source].tables[p1.legs[arr.source](e)];
      const auto& a_tgt = sources[arr.target].tables[p1.legs[arr.target](e)];
      std::vector<int> s_table(a_src.size());
      for (std::size_t x = 0; x < a_src.size(); ++x) s_table[x] = diagram.arrows[n](a_src[x]);
      std::vector<int> t_table(a_src.size());
      for (std::size_t x = 0; x < a_src.size(); ++x) t_table[x] = a_tgt[weight.arrows[n](static_cast<int>(x))];
      ts[e] = targets[n].element_of(s_table);
      tt[e] = targets[n].element_of(t_table);
    }
    sigma_parts.push_back(MonotoneMap(p1.apex, targets[n].object, std::move(ts)));
    tau_parts.push_back(MonotoneMap(p1.apex, targets[n].object, std::move(tt)));
  }
  MonotoneMap sigma = shape.arrows.empty() ? constant(p1.apex, p2.apex, 0) : pairing(p2, sigma_parts);
  MonotoneMap tau = shape.arrows.empty() ? constant(p1.apex, p2.apex, 0) : pairing(p2, tau_parts);
  auto eq = equalizer(sigma, tau);

  WeightedLimit lim;
  lim.object = eq.object;
  lim.projections.resize(shape.objects);
  for (int d = 0; d < shape.objects; ++d) {
    for (int x = 0; x < weight.objects[d]->size(); ++x) {
      std::vector<int> t(eq.object->size());
      for (int e = 0; e < eq.object->size(); ++e) {
        t[e] = sources[d].tables[p1.legs[d](eq.inclusion(e))][x];
      }
      lim.projections[d].push_back(MonotoneMap::trusted(eq.object, diagram.objects[d], std::move(t)));
    }
  }
  return lim;
}

IdempotentSplitting split_idempotent(const MonotoneMap& e) {
  if (e.dom().size() != e.cod().size() || !(compose(e, e) == e)) {
    throw InvalidInput("split_idempotent: map is not idempotent");
  }
  const Subset img = e.image();
  auto y = share(e.dom().induced(img));
  std::vector<int> position(e.dom().size(), -1);
  const auto idx = members(img);
  for (std::size_t k = 0; k < idx.size(); ++k) position[idx[k]] = static_cast<int>(k);
  std::vector<int> r(e.dom().size());
  for (int x = 0; x < e.dom().size(); ++x) r[x] = position[e(x)];
  return IdempotentSplitting{y, MonotoneMap(e.dom_ref(), y, std::move(r)),
                             MonotoneMap(y, e.dom_ref(), idx)};
}

Quotient pos_coinserter(const MonotoneMap& f, const MonotoneMap& g) {
  const auto& y = f.cod();
  const int n = y.size();
  std::vector<Subset> pre(n);
  for (int a = 0; a < n; ++a) pre[a] = y.up(a);
  for (int x = 0; x < f.dom().size(); ++x) pre[f(x)].set(g(x));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (pre[i][k]) pre[i] |= pre[k];
    }
  }
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int b = a; b < n; ++b) {
      if (pre[a][b] && pre[b][a]) cls[b] = c;
    }
  }
  const auto m = reps.size();
  std::vector<std::string> labels(m);
  std::vector<Subset> up(m, Subset(m));
  for (std::size_t c = 0; c < m; ++c) {
    std::string l;
    for (int b = 0; b < n; ++b) {
      if (cls[b] == static_cast<int>(c)) l += (l.empty() ? "" : "~") + y.label(b);
    }
    labels[c] = l;
    for (std::size_t d = 0; d < m; ++d) {
      if (pre[reps[c]][reps[d]]) up[c].set(d);
    }
  }
  auto q = share(Poset(std::move(labels), std::move(up)));
  return Quotient{q, MonotoneMap(f.cod_ref(), q, cls)};
}

Cone pos_tensor(const PosetRef& weight, const PosetRef& base) {
  auto prod = product({weight, base});
  Cone c{prod.apex, {}};
  for (int i = 0; i < weight->size(); ++i) {
    std::vector<int> t(base->size());
    for (int x = 0; x < base->size(); ++x) t[x] = i * base->size() + x;
    c.legs.push_back(MonotoneMap(base, prod.apex, std::move(t)));
  }
  return c;
}

}  // namespace orderlab
