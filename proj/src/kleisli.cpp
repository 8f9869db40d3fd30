#include "orderlab/kleisli.hpp"

#include <map>
#include <set>

#include "orderlab/enumerate.hpp"

namespace orderlab {

LevelsRef kleisli_object(const Monad& t, const PosetRef& x) {
  return std::make_shared<const Levels>(make_levels(t, x));
}

KleisliArrow kleisli_identity(const LevelsRef& x) { return KleisliArrow{x, x, x->e}; }

MonotoneMap kleisli_extension(const Monad& t, const KleisliArrow& r) {
  const auto tr = t.fmap(r.map, *r.dom->t1, *r.cod->t2);
  return compose(r.cod->m, tr);
}

KleisliArrow kleisli_compose(const Monad& t, const KleisliArrow& s, const KleisliArrow& r) {
  if (r.cod->t1->base->size() != s.dom->t1->base->size()) {
    throw InvalidInput("kleisli_compose: codomain of r is not the domain of s");
  }
  return KleisliArrow{r.dom, s.cod, compose(kleisli_extension(t, s), r.map)};
}

KleisliArrow to_kleisli(const MonotoneMap& f, const LevelsRef& x, const LevelsRef& y) {
  return KleisliArrow{x, y, compose(y->e, f)};
}

bool kleisli_adjunction(const Monad& t, const KleisliArrow& r, const KleisliArrow& s) {
  const auto en = t.enrichment();
  return leq(r.dom->e, kleisli_compose(t, s, r).map, en) &&
         leq(kleisli_compose(t, r, s).map, r.cod->e, en);
}

std::optional<KleisliArrow> kleisli_right_adjoint(const Monad& t, const KleisliArrow& r) {
  auto g = try_adjoint(kleisli_extension(t, r), Side::right, t.enrichment());
  if (!g) return std::nullopt;
  KleisliArrow s{r.cod, r.dom, compose(*g, r.cod->e)};
  if (!kleisli_adjunction(t, r, s)) return std::nullopt;
  return s;
}

std::vector<KleisliArrow> kleisli_arrows(const LevelsRef& x, const LevelsRef& y) {
  std::vector<KleisliArrow> out;
  for_each_monotone_map(*x->t1->base, *y->t1->object, [&](const std::vector<int>& table) {
    out.push_back(KleisliArrow{x, y, MonotoneMap::trusted(x->t1->base, y->t1->object, table)});
    return true;
  });
  return out;
}

bool is_T_dense(const Monad& t, const MonotoneMap& f, const TObject& tx, const TObject& ty) {
  return try_adjoint(t.fmap(f, tx, ty), Side::right, t.enrichment()).has_value();
}

bool is_T_dense(const Monad& t, const MonotoneMap& f) {
  return is_T_dense(t, f, *t.apply(f.dom_ref()), *t.apply(f.cod_ref()));
}

bool is_T_dense_by_search(const Monad& t, const MonotoneMap& f) {
  auto x = kleisli_object(t, f.dom_ref());
  auto y = kleisli_object(t, f.cod_ref());
  const auto fs = to_kleisli(f, x, y);
  for (const auto& s : kleisli_arrows(y, x)) {
    if (kleisli_adjunction(t, fs, s)) return true;
  }
  return false;
}

bool in_M_T(const Monad& t, const MonotoneMap& h, const TObject& tx, const TObject& ty) {
  const auto th = t.fmap(h, tx, ty);
  auto g = try_adjoint(th, Side::right, t.enrichment());
  return g && compose(*g, th) == identity(tx.object);
}

bool in_M_T(const Monad& t, const MonotoneMap& h) {
  return in_M_T(t, h, *t.apply(h.dom_ref()), *t.apply(h.cod_ref()));
}

CauchyReport is_cauchy_complete(const Monad& t, const PosetRef& y, int probe_bound) {
  CauchyReport rep;
  auto ly = kleisli_object(t, y);
  const Subset units = ly->e.image();
  for (const auto& x : base_objects(t, probe_bound)) {
    auto lx = kleisli_object(t, x);
    for (const auto& r : kleisli_arrows(lx, ly)) {
      if (!kleisli_right_adjoint(t, r)) continue;
      ++rep.left_adjoints;
      std::vector<int> f(x->size());
      bool in_image = true;
      for (int p = 0; p < x->size() && in_image; ++p) {
        in_image = units[r.map(p)];
        if (in_image) {
          for (int q = 0; q < y->size(); ++q) {
            if (ly->e(q) == r.map(p)) f[p] = q;
          }
        }
      }
      if (!in_image || !is_monotone(*x, *y, f)) {
        rep.complete = false;
        if (rep.witness.empty()) {
          rep.witness = "probe of size " + std::to_string(x->size()) + ": left adjoint not of the form f_*";
        }
      }
    }
  }
  return rep;
}

void validate_kar(const Monad& t, const KarObject& k) {
  KleisliArrow arrow{k.x, k.x, k.t};
  if (!(kleisli_compose(t, arrow, arrow).map == k.t)) {
    throw InvalidInput("kar object: t . t != t in the Kleisli category");
  }
  if (!leq(k.t, k.x->e, t.enrichment())) throw InvalidInput("kar object: t is not below e_X");
}

SplitKar split_kar(const Monad& t, const KarObject& k) {
  validate_kar(t, k);
  const KleisliArrow arrow{k.x, k.x, k.t};
  auto split = split_idempotent(kleisli_extension(t, arrow));
  auto ly = make_levels(t, split.object);
  const auto ts = t.fmap(split.section, *ly.t1, *k.x->t2);
  auto beta = compose(split.retraction, compose(k.x->m, ts));
  Algebra algebra{t, std::move(ly), std::move(beta)};
  auto splitting = find_splitting(algebra);
  return SplitKar{std::move(split), std::move(algebra), std::move(splitting)};
}

namespace {

struct Candidate {
  KleisliArrow arrow;
  MonotoneMap ext;
};

// {t' . c . t | c : X -o X'}, without repeats, with their extensions.
std::vector<Candidate> sandwiched(const Monad& t, const KarObject& a, const KarObject& b) {
  const auto tb = kleisli_extension(t, KleisliArrow{b.x, b.x, b.t});
  std::set<std::vector<int>> seen;
  std::vector<Candidate> out;
  for (const auto& c : kleisli_arrows(a.x, b.x)) {
    const auto ext_c = kleisli_extension(t, c);
    auto table = compose(tb, compose(ext_c, a.t)).table();
    if (!seen.insert(table).second) continue;
    KleisliArrow arrow{a.x, b.x, MonotoneMap::trusted(a.x->t1->base, b.x->t1->object, table)};
    auto ext = kleisli_extension(t, arrow);
    out.push_back(Candidate{std::move(arrow), std::move(ext)});
  }
  return out;
}

}  // namespace

bool kar_isomorphic(const Monad& t, const KarObject& a, const KarObject& b) {
  const auto forth = sandwiched(t, a, b);
  const auto back = sandwiched(t, b, a);
  for (const auto& f : forth) {
    for (const auto& g : back) {
      if (compose(g.ext, f.arrow.map) == a.t && compose(f.ext, g.arrow.map) == b.t) return true;
    }
  }
  return false;
}

std::vector<KarObject> enumerate_kar(const Monad& t, int size_bound) {
  std::vector<KarObject> reps;
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (const auto& x : base_objects(t, size_bound)) {
    auto lx = kleisli_object(t, x);
    const auto en = t.enrichment();
    for_each_monotone_map(*x, *lx->t1->object, [&](const std::vector<int>& table) {
      auto tm = MonotoneMap::trusted(x, lx->t1->object, table);
      if (!leq(tm, lx->e, en)) return true;
      const KleisliArrow arrow{lx, lx, tm};
      const auto ext = kleisli_extension(t, arrow);
      if (!(compose(ext, tm) == tm)) return true;
      KarObject k{lx, tm};
      const auto key = canonical_form(*split_idempotent(ext).object);
      auto& bucket = buckets[key];
      for (auto idx : bucket) {
        if (kar_isomorphic(t, reps[idx], k)) return true;
      }
      bucket.push_back(reps.size());
      reps.push_back(std::move(k));
      return true;
    });
  }
  return reps;
}

}  // namespace orderlab
