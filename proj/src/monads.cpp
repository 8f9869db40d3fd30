#include "orderlab/monads.hpp"

#include <algorithm>
#include <functional>

#include "orderlab/enumerate.hpp"

namespace orderlab {

const char* to_string(MonadKind k) {
  switch (k) {
    case MonadKind::D: return "D";
    case MonadKind::I: return "I";
    case MonadKind::F: return "F";
    case MonadKind::F1: return "F1";
    case MonadKind::F2: return "F2";
    case MonadKind::Fc: return "Fc";
    case MonadKind::AdjoinBounds: return "adjbounds";
  }
  return "?";
}

const char* to_string(BaseCategory b) {
  switch (b) {
    case BaseCategory::pos: return "Pos";
    case BaseCategory::top0: return "Top0";
    case BaseCategory::finite_lattices: return "CompleteLatticesAllMonotone";
  }
  return "?";
}

int TObject::find(const Subset& payload) const {
  auto it = element_index.find(payload);
  return it == element_index.end() ? -1 : it->second;
}

int TObject::find_open(const Subset& u) const {
  auto it = open_index.find(u);
  return it == open_index.end() ? -1 : it->second;
}

BaseCategory Monad::base() const {
  switch (kind_) {
    case MonadKind::D:
    case MonadKind::I: return BaseCategory::pos;
    case MonadKind::AdjoinBounds: return BaseCategory::finite_lattices;
    default: return BaseCategory::top0;
  }
}

Enrichment Monad::enrichment() const {
  return base() == BaseCategory::top0 ? Enrichment::dual_pointwise : Enrichment::pointwise;
}

bool Monad::is_filter_kind() const { return base() == BaseCategory::top0; }

bool Monad::accepts(const Poset& x) const {
  if (kind_ == MonadKind::AdjoinBounds) return lattice_ops(x).is_lattice;
  return true;
}

Monad monad_by_name(const std::string& name) {
  for (auto k : {MonadKind::D, MonadKind::I, MonadKind::F, MonadKind::F1, MonadKind::F2,
                 MonadKind::Fc, MonadKind::AdjoinBounds}) {
    if (name == to_string(k)) return Monad(k);
  }
  throw InvalidInput("unknown monad '" + name + "' (expected D, I, F, F1, F2, Fc or adjbounds)");
}

std::vector<Monad> all_monads() {
  return {Monad(MonadKind::D),  Monad(MonadKind::I),  Monad(MonadKind::F),
          Monad(MonadKind::F1), Monad(MonadKind::F2), Monad(MonadKind::Fc),
          Monad(MonadKind::AdjoinBounds)};
}

namespace {

std::string set_label(const Poset& x, const Subset& s) {
  std::string l = "{";
  bool first = true;
  for (int i : members(s)) {
    l += (first ? "" : ",") + x.label(i);
    first = false;
  }
  return l + "}";
}

std::string filter_label(const Poset& x, const std::vector<Subset>& opens, const Subset& f) {
  Subset least = full_set(x.size());
  for (int i : members(f)) least &= opens[i];
  for (int i : members(f)) {
    if (opens[i] == least) return "^" + set_label(x, least);
  }
  std::string l = "F[";
  bool first = true;
  for (int i : members(f)) {
    l += (first ? "" : ";") + set_label(x, opens[i]);
    first = false;
  }
  return l + "]";
}

std::string fresh(const Poset& x, std::string name) {
  while (x.find(name)) name += "'";
  return name;
}

// Payloads ordered by inclusion.
PosetRef inclusion_poset(std::vector<std::string> labels, const std::vector<Subset>& payload) {
  const auto n = payload.size();
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (payload[a].is_subset_of(payload[b])) up[a].set(b);
    }
  }
  return share(Poset(std::move(labels), std::move(up)));
}

void index_elements(TObject& t) {
  for (std::size_t k = 0; k < t.elements.size(); ++k) t.element_index.emplace(t.elements[k], static_cast<int>(k));
}

int lookup(const TObject& t, const Subset& payload, const char* what) {
  const int k = t.find(payload);
  if (k < 0) throw std::logic_error(std::string(what) + ": value outside the carrier");
  return k;
}

Subset preimage_of(const MonotoneMap& f, const Subset& v) { return f.preimage(v); }

}  // namespace

std::vector<Subset> enumerate_filters(const std::vector<Subset>& opens, std::size_t cap) {
  const auto k = opens.size();
  std::vector<Subset> out;
  if (k == 0) return out;
  std::unordered_map<Subset, int, SubsetHash> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(opens[i], static_cast<int>(i));
  std::vector<Subset> sup(k, Subset(k));
  std::vector<Subset> sub(k, Subset(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (opens[i].is_subset_of(opens[j])) {
        sup[i].set(j);
        sub[j].set(i);
      }
    }
  }
  auto meet = [&](int i, int j) {
    auto it = index.find(opens[i] & opens[j]);
    if (it == index.end()) throw InvalidInput("open family is not closed under intersection");
    return it->second;
  };
  const int full = index.at(full_set(opens.front().size()));
  // Decide larger opens first; including U pulls in everything above U and
  // above U meet V for each V already in, excluding U pushes out its subsets.
  std::vector<int> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = static_cast<int>(k - 1 - i);
  Subset in(k);
  Subset out_set(k);
  in |= sup[full];
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    while (pos < k && (in[order[pos]] || out_set[order[pos]])) ++pos;
    if (pos == k) {
      if (out.size() >= cap) throw SizeCapExceeded("more than " + std::to_string(cap) + " filters");
      out.push_back(in);
      return;
    }
    const int u = order[pos];
    const Subset saved_in = in;
    const Subset saved_out = out_set;
    Subset grown = in | sup[u];
    for (int v : members(in)) grown |= sup[meet(u, v)];
    if (!grown.intersects(out_set)) {
      in = grown;
      rec(pos + 1);
      in = saved_in;
    }
    out_set |= sub[u];
    rec(pos + 1);
    out_set = saved_out;
  };
  rec(0);
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

FilterFlags filter_flags(const std::vector<Subset>& opens, const Subset& filter) {
  FilterFlags flags;
  if (opens.empty()) return flags;
  const auto n = opens.front().size();
  int empty_open = -1;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (opens[i].none()) empty_open = static_cast<int>(i);
  }
  flags.proper = empty_open < 0 || !filter[empty_open];
  // Binary unions, plus the empty union (which is properness).
  bool prime = flags.proper;
  for (std::size_t i = 0; i < opens.size() && prime; ++i) {
    for (std::size_t j = 0; j < opens.size() && prime; ++j) {
      const Subset u = opens[i] | opens[j];
      for (std::size_t w = 0; w < opens.size(); ++w) {
        if (opens[w] == u && filter[w] && !filter[i] && !filter[j]) prime = false;
      }
    }
  }
  flags.prime = prime;
  // Arbitrary families: W in the filter is the union of a family missing the
  // filter iff it is the union of all opens below W outside the filter.
  bool cprime = true;
  for (int w : members(filter)) {
    Subset cover(n);
    for (std::size_t v = 0; v < opens.size(); ++v) {
      if (!filter[v] && opens[v].is_subset_of(opens[w])) cover |= opens[v];
    }
    if (cover == opens[w]) cprime = false;
  }
  flags.completely_prime = cprime;
  return flags;
}

TObjectRef Monad::apply(const PosetRef& x) const {
  if (!accepts(*x)) throw InvalidInput(name() + ": object is outside the base category");
  auto t = std::make_shared<TObject>();
  t->base = x;
  std::vector<std::string> labels;
  switch (kind_) {
    case MonadKind::D:
    case MonadKind::I: {
      for (auto& s : down_sets(*x)) {
        if (kind_ == MonadKind::I && (s.none() || !x->is_directed(s))) continue;
        labels.push_back(set_label(*x, s));
        t->elements.push_back(std::move(s));
      }
      t->object = inclusion_poset(std::move(labels), t->elements);
      break;
    }
    case MonadKind::AdjoinBounds:
      t->object = with_bounds(*x, fresh(*x, "bot"), fresh(*x, "top"));
      break;
    default: {
      t->opens = up_sets(*x);
      for (std::size_t i = 0; i < t->opens.size(); ++i) t->open_index.emplace(t->opens[i], static_cast<int>(i));
      for (auto& f : enumerate_filters(t->opens)) {
        if (kind_ != MonadKind::F) {
          const auto flags = filter_flags(t->opens, f);
          if (kind_ == MonadKind::F1 && !flags.proper) continue;
          if (kind_ == MonadKind::F2 && !flags.prime) continue;
          if (kind_ == MonadKind::Fc && !flags.completely_prime) continue;
        }
        labels.push_back(filter_label(*x, t->opens, f));
        t->elements.push_back(std::move(f));
      }
      t->object = inclusion_poset(std::move(labels), t->elements);
      break;
    }
  }
  index_elements(*t);
  return t;
}

MonotoneMap Monad::unit(const TObject& tx) const {
  const auto& x = *tx.base;
  std::vector<int> table(x.size());
  for (int p = 0; p < x.size(); ++p) {
    switch (kind_) {
      case MonadKind::D:
      case MonadKind::I: table[p] = lookup(tx, x.down(p), "unit"); break;
      case MonadKind::AdjoinBounds: table[p] = p + 1; break;
      default: {
        Subset nb(tx.opens.size());
        for (std::size_t i = 0; i < tx.opens.size(); ++i) {
          if (tx.opens[i][p]) nb.set(i);
        }
        table[p] = lookup(tx, nb, "unit");
      }
    }
  }
  return MonotoneMap(tx.base, tx.object, std::move(table));
}

Subset sharp(const TObject& tx, int open) {
  Subset s(tx.elements.size());
  for (std::size_t k = 0; k < tx.elements.size(); ++k) {
    if (tx.elements[k][open]) s.set(k);
  }
  return s;
}

MonotoneMap Monad::mult(const TObject& tx, const TObject& ttx) const {
  std::vector<int> table(ttx.size());
  for (int z = 0; z < ttx.size(); ++z) {
    switch (kind_) {
      case MonadKind::D:
      case MonadKind::I: {
        Subset u(tx.base->size());
        for (int k : members(ttx.elements[z])) u |= tx.elements[k];
        table[z] = lookup(tx, u, "mult");
        break;
      }
      case MonadKind::AdjoinBounds:
        table[z] = z == 0 ? 0 : (z == ttx.size() - 1 ? tx.size() - 1 : z - 1);
        break;
      default: {
        Subset f(tx.opens.size());
        for (std::size_t a = 0; a < tx.opens.size(); ++a) {
          const int s = ttx.find_open(sharp(tx, static_cast<int>(a)));
          if (s >= 0 && ttx.elements[z][s]) f.set(a);
        }
        table[z] = lookup(tx, f, "mult");
      }
    }
  }
  return MonotoneMap(ttx.object, tx.object, std::move(table));
}

MonotoneMap Monad::fmap(const MonotoneMap& f, const TObject& tx, const TObject& ty) const {
  std::vector<int> table(tx.size());
  for (int k = 0; k < tx.size(); ++k) {
    switch (kind_) {
      case MonadKind::D:
      case MonadKind::I:
        table[k] = lookup(ty, f.cod().down_closure(f.image(tx.elements[k])), "fmap");
        break;
      case MonadKind::AdjoinBounds:
        table[k] = k == 0 ? 0 : (k == tx.size() - 1 ? ty.size() - 1 : f(k - 1) + 1);
        break;
      default: {
        Subset g(ty.opens.size());
        for (std::size_t b = 0; b < ty.opens.size(); ++b) {
          const int a = tx.find_open(preimage_of(f, ty.opens[b]));
          if (a < 0) throw InvalidInput("fmap: map is not continuous");
          if (tx.elements[k][a]) g.set(b);
        }
        table[k] = lookup(ty, g, "fmap");
      }
    }
  }
  return MonotoneMap(tx.object, ty.object, std::move(table));
}

FinSpace filter_space(const TObject& tx) {
  std::vector<Subset> subbase;
  for (std::size_t a = 0; a < tx.opens.size(); ++a) subbase.push_back(sharp(tx, static_cast<int>(a)));
  return generated_space(tx.object->labels(), subbase);
}

Levels make_levels(const Monad& t, const PosetRef& x, std::size_t third_level_cap) {
  auto t1 = t.apply(x);
  auto t2 = t.apply(t1->object);
  auto e = t.unit(*t1);
  auto e_t = t.unit(*t2);
  auto t_e = t.fmap(e, *t1, *t2);
  auto m = t.mult(*t1, *t2);
  Levels lv{t1, t2, nullptr, e, e_t, t_e, m, std::nullopt, std::nullopt};
  if (third_level_cap > 0 && static_cast<std::size_t>(t2->size()) <= third_level_cap) {
    try {
      if (t.is_filter_kind()) (void)up_sets(*t2->object, third_level_cap);
      lv.t3 = t.apply(t2->object);
      lv.m_t = t.mult(*t2, *lv.t3);
      lv.t_m = t.fmap(m, *lv.t3, *t2);
    } catch (const SizeCapExceeded&) {
      lv.t3 = nullptr;
      lv.m_t.reset();
      lv.t_m.reset();
    }
  }
  return lv;
}

namespace {

std::string first_difference(const MonotoneMap& a, const MonotoneMap& b) {
  for (int z = 0; z < a.dom().size(); ++z) {
    if (a(z) != b(z)) return a.dom().label(z);
  }
  return {};
}

}  // namespace

LawReport verify_monad_laws(const Monad& t, const Levels& lv) {
  (void)t;
  LawReport r;
  const auto id1 = identity(lv.t1->object);
  const auto left = compose(lv.m, lv.t_e);
  const auto right = compose(lv.m, lv.e_t);
  r.left_unit = left == id1;
  r.right_unit = right == id1;
  if (!r.left_unit) r.witness = first_difference(left, id1);
  else if (!r.right_unit) r.witness = first_difference(right, id1);
  if (lv.t3 && lv.m_t && lv.t_m) {
    const auto a = compose(lv.m, *lv.t_m);
    const auto b = compose(lv.m, *lv.m_t);
    r.associative = a == b;
    if (!*r.associative && r.witness.empty()) r.witness = first_difference(a, b);
  }
  return r;
}

KzReport verify_kz(const Monad& t, const Levels& lv) {
  const auto en = t.enrichment();
  return KzReport{leq(lv.t_e, lv.e_t, en), is_adjunction(lv.m, lv.e_t, en),
                  is_adjunction(lv.t_e, lv.m, en)};
}

bool check_naturality(const Monad& t, const MonotoneMap& f, const Levels& x, const Levels& y) {
  const auto tf = t.fmap(f, *x.t1, *y.t1);
  if (!(compose(tf, x.e) == compose(y.e, f))) return false;
  const auto ttf = t.fmap(tf, *x.t2, *y.t2);
  return compose(tf, x.m) == compose(y.m, ttf);
}

std::vector<PosetRef> base_objects(const Monad& t, int max_size, int min_size) {
  if (t.base() == BaseCategory::finite_lattices) {
    std::vector<PosetRef> out;
    for (int n = std::max(1, min_size); n <= max_size; ++n) {
      auto part = enumerate_lattices(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  std::vector<PosetRef> out;
  for (int n = std::max(0, min_size); n <= max_size; ++n) {
    auto part = enumerate_posets(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

FaithfulReport is_order_faithful(const Monad& t, int bound) {
  FaithfulReport rep;
  const auto en = t.enrichment();
  const auto objects = base_objects(t, bound);
  std::vector<TObjectRef> images;
  for (const auto& x : objects) {
    images.push_back(t.apply(x));
    if (!t.unit(*images.back()).is_order_reflecting()) rep.units_order_mono = false;
  }
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      auto maps = monotone_maps(objects[i], objects[j]);
      std::vector<MonotoneMap> lifted;
      lifted.reserve(maps.size());
      for (const auto& f : maps) lifted.push_back(t.fmap(f, *images[i], *images[j]));
      for (std::size_t a = 0; a < maps.size(); ++a) {
        for (std::size_t b = 0; b < maps.size(); ++b) {
          ++rep.pairs_checked;
          if (leq(lifted[a], lifted[b], en) && !leq(maps[a], maps[b], en)) rep.faithful = false;
        }
      }
    }
  }
  return rep;
}

}  // namespace orderlab
