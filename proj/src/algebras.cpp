#include "orderlab/algebras.hpp"

#include <set>

#include "orderlab/enumerate.hpp"
#include "orderlab/kleisli.hpp"

namespace orderlab {

AlgebraCheck check_algebra(const Monad& t, const Levels& lv, const MonotoneMap& alpha) {
  AlgebraCheck c;
  c.unit_law = compose(alpha, lv.e) == identity(lv.t1->base);
  c.adjoint = is_adjunction(alpha, lv.e, t.enrichment());
  const auto t_alpha = t.fmap(alpha, *lv.t2, *lv.t1);
  c.associative = compose(alpha, t_alpha) == compose(alpha, lv.m);
  return c;
}

std::optional<Algebra> find_algebra_structure(const Monad& t, Levels lv) {
  if (t.is_kz_expected()) {
    auto alpha = try_adjoint(lv.e, Side::left, t.enrichment());
    if (!alpha || !check_algebra(t, lv, *alpha).is_algebra()) return std::nullopt;
    return Algebra{t, std::move(lv), *alpha};
  }
  std::optional<MonotoneMap> found;
  for_each_monotone_map(*lv.t1->object, *lv.t1->base, [&](const std::vector<int>& table) {
    auto alpha = MonotoneMap::trusted(lv.t1->object, lv.t1->base, table);
    if (check_algebra(t, lv, alpha).is_algebra()) {
      found = alpha;
      return false;
    }
    return true;
  });
  if (!found) return std::nullopt;
  return Algebra{t, std::move(lv), *found};
}

std::optional<Algebra> find_algebra_structure(const Monad& t, const PosetRef& x) {
  return find_algebra_structure(t, make_levels(t, x));
}

Algebra free_algebra(const Monad& t, const PosetRef& y) {
  auto ly = make_levels(t, y);
  auto lt = make_levels(t, ly.t1->object);
  auto m = MonotoneMap(lt.t1->object, ly.t1->object, ly.m.table());
  return Algebra{t, std::move(lt), std::move(m)};
}

bool is_homomorphism(const MonotoneMap& f, const Algebra& a, const Algebra& b) {
  const auto tf = a.monad.fmap(f, *a.levels.t1, *b.levels.t1);
  return compose(b.structure, tf) == compose(f, a.structure);
}

LeftAdjointReport check_left_adjoints_are_homs(const Monad& t, int bound) {
  LeftAdjointReport rep;
  std::vector<Algebra> algebras;
  for (const auto& x : base_objects(t, bound)) {
    if (auto a = find_algebra_structure(t, x)) algebras.push_back(std::move(*a));
  }
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      for (const auto& f : monotone_maps(a.carrier(), b.carrier())) {
        if (!try_adjoint(f, Side::right, t.enrichment())) continue;
        ++rep.adjoints_checked;
        if (!is_homomorphism(f, a, b)) {
          if (rep.failures++ == 0) rep.witness = "left adjoint is not a homomorphism";
        }
      }
    }
  }
  return rep;
}

int HomPoset::index_of(const std::vector<int>& table) const {
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (tables[k] == table) return static_cast<int>(k);
  }
  throw InvalidInput("map is not in the hom-set");
}

HomPoset hom_poset(const PosetRef& x, const PosetRef& y, Enrichment e) {
  HomPoset h;
  for_each_monotone_map(*x, *y, [&](const std::vector<int>& table) {
    h.tables.push_back(table);
    return true;
  });
  const auto n = h.tables.size();
  std::vector<std::string> labels;
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a) {
    std::string l = "[";
    for (std::size_t p = 0; p < h.tables[a].size(); ++p) l += (p ? "," : "") + y->label(h.tables[a][p]);
    labels.push_back(l + "]");
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (int p = 0; p < x->size() && le; ++p) {
        le = e == Enrichment::pointwise ? y->le(h.tables[a][p], h.tables[b][p])
                                        : y->le(h.tables[b][p], h.tables[a][p]);
      }
      if (le) up[a].set(b);
    }
  }
  h.object = share(Poset(std::move(labels), std::move(up)));
  return h;
}

namespace {

std::vector<int> precompose(const std::vector<int>& g, const MonotoneMap& h) {
  std::vector<int> out(h.dom().size());
  for (int p = 0; p < h.dom().size(); ++p) out[p] = g[h(p)];
  return out;
}

// X(h, A) : X(Y, A) -> X(X, A) and its left adjoint, if it is a retraction.
struct Restriction {
  HomPoset from;
  HomPoset to;
  std::optional<MonotoneMap> left;
};

Restriction restriction(const PosetRef& a, const MonotoneMap& h, Enrichment e) {
  Restriction r{hom_poset(h.cod_ref(), a, e), hom_poset(h.dom_ref(), a, e), std::nullopt};
  std::vector<int> table;
  for (const auto& g : r.from.tables) table.push_back(r.to.index_of(precompose(g, h)));
  const auto res = MonotoneMap(r.from.object, r.to.object, std::move(table));
  auto left = try_adjoint(res, Side::left, Enrichment::pointwise);
  if (left && compose(res, *left) == identity(r.to.object)) r.left = left;
  return r;
}

}  // namespace

bool is_injective_wrt(const PosetRef& a, const MonotoneMap& h) {
  std::set<std::vector<int>> restricted;
  for_each_monotone_map(h.cod(), *a, [&](const std::vector<int>& g) {
    restricted.insert(precompose(g, h));
    return true;
  });
  bool all = true;
  for_each_monotone_map(h.dom(), *a, [&](const std::vector<int>& g) {
    all = restricted.count(g) > 0;
    return all;
  });
  return all;
}

bool is_injective_wrt(const PosetRef& a, const std::vector<MonotoneMap>& maps) {
  for (const auto& h : maps) {
    if (!is_injective_wrt(a, h)) return false;
  }
  return true;
}

bool is_kan_injective(const PosetRef& a, const MonotoneMap& h, Enrichment e) {
  return restriction(a, h, e).left.has_value();
}

bool is_kan_injective(const PosetRef& a, const std::vector<MonotoneMap>& maps, Enrichment e) {
  for (const auto& h : maps) {
    if (!is_kan_injective(a, h, e)) return false;
  }
  return true;
}

bool is_kan_injective_morphism(const MonotoneMap& f, const MonotoneMap& h, Enrichment e) {
  const auto ra = restriction(f.dom_ref(), h, e);
  const auto rb = restriction(f.cod_ref(), h, e);
  if (!ra.left || !rb.left) return false;
  auto after = [&](const std::vector<int>& u) {
    std::vector<int> out(u.size());
    for (std::size_t p = 0; p < u.size(); ++p) out[p] = f(u[p]);
    return out;
  };
  for (std::size_t u = 0; u < ra.to.tables.size(); ++u) {
    const auto lhs = after(ra.from.tables[(*ra.left)(static_cast<int>(u))]);
    const auto rhs = rb.from.tables[(*rb.left)(rb.to.index_of(after(ra.to.tables[u])))];
    if (lhs != rhs) return false;
  }
  return true;
}

std::optional<Splitting> find_splitting(const Algebra& a) {
  const auto& t = a.monad;
  const auto& lv = a.levels;
  auto left = try_adjoint(a.structure, Side::left, t.enrichment());
  if (!left) return std::nullopt;
  Splitting s{*left};
  s.alpha_t_id = compose(a.structure, s.t) == identity(a.carrier());
  s.t_below_e = leq(s.t, lv.e, t.enrichment());
  const auto tt = t.fmap(s.t, *lv.t1, *lv.t2);
  const auto ext = compose(lv.m, tt);
  s.kleisli_idempotent = compose(ext, s.t) == s.t;
  s.homomorphism = ext == compose(s.t, a.structure);
  return s;
}

std::optional<AlgebraicWitness> is_algebraic_direct(const Algebra& a, int size_bound) {
  const auto& t = a.monad;
  const auto& x = a.carrier();
  if (size_bound < 0) size_bound = x->size();
  for (const auto& y : base_objects(t, size_bound)) {
    auto ty = t.apply(y);
    if (ty->size() != x->size() || !are_isomorphic(*ty->object, *x)) continue;
    auto ly = make_levels(t, y);
    std::optional<AlgebraicWitness> found;
    for_each_isomorphism(*ly.t1->object, *x, [&](const std::vector<int>& table) {
      auto phi = MonotoneMap::trusted(ly.t1->object, x, table);
      const auto t_phi = t.fmap(phi, *ly.t2, *a.levels.t1);
      if (compose(phi, ly.m) == compose(a.structure, t_phi)) {
        found = AlgebraicWitness{y, phi};
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

AlgebraicCertificate is_algebraic_char(const Algebra& a) {
  AlgebraicCertificate c;
  auto split = find_splitting(a);
  if (!split || !split->valid()) return c;
  const auto& t = a.monad;
  const auto& e = a.levels.e;
  Subset keep = a.carrier()->empty_set();
  for (int x = 0; x < a.carrier()->size(); ++x) {
    if (e(x) == split->t(x)) keep.set(x);
  }
  c.a0 = share(a.carrier()->induced(keep));
  c.inclusion = MonotoneMap(c.a0, a.carrier(), members(keep));
  auto t0 = t.apply(c.a0);
  const auto ti = t.fmap(*c.inclusion, *t0, *a.levels.t1);
  c.t_preserves_mono = ti.is_order_reflecting();
  c.dense = is_T_dense(t, *c.inclusion, *t0, *a.levels.t1);
  const auto onto = compose(a.structure, ti);
  c.surjective = onto.is_surjective();
  c.epi_by_probe = !find_epi_witness(onto, 2).has_value();
  c.status = c.dense && c.surjective ? AlgebraicCertificate::Status::algebraic
                                     : AlgebraicCertificate::Status::not_algebraic;
  return c;
}

std::vector<MonotoneMap> m_t_sample(const Monad& t, int bound, int unit_bound) {
  std::vector<MonotoneMap> out;
  const auto objects = base_objects(t, bound);
  std::vector<TObjectRef> images;
  for (const auto& x : objects) images.push_back(t.apply(x));
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      for (const auto& h : monotone_maps(objects[i], objects[j])) {
        if (in_M_T(t, h, *images[i], *images[j])) out.push_back(h);
      }
    }
  }
  for (const auto& x : base_objects(t, unit_bound)) out.push_back(t.unit(*t.apply(x)));
  return out;
}

}  // namespace orderlab
