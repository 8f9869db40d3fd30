#include "orderlab/sweeps.hpp"

#include <map>
#include <set>

#include "orderlab/algebras.hpp"
#include "orderlab/domainprops.hpp"
#include "orderlab/enumerate.hpp"
#include "orderlab/kleisli.hpp"

namespace orderlab {

namespace {

Json shape_json(const Poset& x) { return Json{{"size", x.size()}, {"poset", poset_to_json(x)}}; }

void first_failure(SweepReport& r, const Json& what) {
  if (r.holds) r.detail["witness"] = what;
  r.holds = false;
}

}  // namespace

int default_bound(const std::string& law, const Monad& t) {
  const bool top = t.base() == BaseCategory::top0;
  const bool lat = t.base() == BaseCategory::finite_lattices;
  if (law == "kz-equiv" || law == "em-adjoint") return top ? 3 : 4;
  if (law == "cauchy") return top || lat ? 3 : 4;
  if (law == "char-algebraic") return top || lat ? 3 : 5;
  if (law == "thm6") return 6;
  if (law == "regcogen") return 4;
  return 3;
}

SweepReport sweep_kz(const Monad& t, int bound) {
  SweepReport r;
  std::size_t objects = 0, agree = 0, all_true = 0, all_false = 0;
  for (const auto& x : base_objects(t, bound)) {
    const auto lv = make_levels(t, x);
    const auto kz = verify_kz(t, lv);
    ++objects;
    if (kz.agree()) ++agree;
    if (kz.cond_i && kz.cond_ii && kz.cond_iii) ++all_true;
    if (!kz.cond_i && !kz.cond_ii && !kz.cond_iii) ++all_false;
    const bool expected = t.is_kz_expected() ? kz.cond_i && kz.agree() : !kz.cond_i && kz.agree();
    if (!expected) {
      first_failure(r, Json{{"object", shape_json(*x)},
                            {"cond_i", kz.cond_i},
                            {"cond_ii", kz.cond_ii},
                            {"cond_iii", kz.cond_iii}});
    }
  }
  r.detail["monad"] = t.name();
  r.detail["bound"] = bound;
  r.detail["objects"] = objects;
  r.detail["agree"] = agree;
  r.detail["all_true"] = all_true;
  r.detail["all_false"] = all_false;
  r.detail["expected"] = t.is_kz_expected() ? "all true" : "all false";
  return r;
}

SweepReport sweep_em_adjoint(const Monad& t, int bound) {
  if (!t.is_kz_expected()) throw InvalidInput("em-adjoint applies to KZ monads only");
  SweepReport r;
  std::size_t objects = 0, candidates = 0, algebras = 0, divergences = 0;
  for (const auto& x : base_objects(t, bound)) {
    ++objects;
    const auto lv = make_levels(t, x);
    for_each_monotone_map(*lv.t1->object, *x, [&](const std::vector<int>& table) {
      ++candidates;
      const auto alpha = MonotoneMap::trusted(lv.t1->object, x, table);
      const auto c = check_algebra(t, lv, alpha);
      if (c.is_algebra()) ++algebras;
      if (c.unit_law != c.adjoint || c.adjoint != c.is_algebra()) {
        ++divergences;
        first_failure(r, Json{{"object", shape_json(*x)},
                              {"alpha", table_to_json(alpha)},
                              {"unit_law", c.unit_law},
                              {"adjoint", c.adjoint},
                              {"associative", c.associative}});
      }
      return true;
    });
  }
  r.detail["monad"] = t.name();
  r.detail["bound"] = bound;
  r.detail["objects"] = objects;
  r.detail["candidates"] = candidates;
  r.detail["algebras"] = algebras;
  r.detail["divergences"] = divergences;
  return r;
}

SweepReport sweep_injectivity(const Monad& t, int bound) {
  SweepReport r;
  std::vector<MonotoneMap> units;
  for (const auto& x : base_objects(t, bound)) units.push_back(t.unit(*t.apply(x)));
  const auto mt = m_t_sample(t, bound, bound);
  const auto en = t.enrichment();
  std::size_t objects = 0, algebras = 0, divergences = 0;
  for (const auto& a : base_objects(t, bound, 1)) {
    ++objects;
    const bool algebra = find_algebra_structure(t, a).has_value();
    const bool inj_units = is_injective_wrt(a, units);
    const bool inj_mt = is_injective_wrt(a, mt);
    const bool kan_mt = is_kan_injective(a, mt, en);
    if (algebra) ++algebras;
    if (algebra != inj_units || algebra != inj_mt || algebra != kan_mt) {
      ++divergences;
      first_failure(r, Json{{"object", shape_json(*a)},
                            {"algebra", algebra},
                            {"injective_units", inj_units},
                            {"injective_m_t", inj_mt},
                            {"kan_injective_m_t", kan_mt}});
    }
  }
  r.detail["monad"] = t.name();
  r.detail["bound"] = bound;
  r.detail["objects"] = objects;
  r.detail["algebras"] = algebras;
  r.detail["units"] = units.size();
  r.detail["m_t_maps"] = mt.size();
  r.detail["divergences"] = divergences;
  return r;
}

SweepReport sweep_mt_identity(const Monad& t, int bound) {
  SweepReport r;
  const auto objects = base_objects(t, bound);
  std::vector<TObjectRef> images;
  for (const auto& x : objects) images.push_back(t.apply(x));
  std::size_t maps = 0, members = 0, divergences = 0;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      for (const auto& h : monotone_maps(objects[i], objects[j])) {
        ++maps;
        const bool in = in_M_T(t, h, *images[i], *images[j]);
        const bool dense = is_T_dense(t, h, *images[i], *images[j]);
        const bool mono = is_order_mono(h);
        if (in) ++members;
        if (in != (dense && mono)) {
          ++divergences;
          first_failure(r, Json{{"map", map_to_json(h)}, {"in_m_t", in}, {"dense", dense}, {"order_mono", mono}});
        }
      }
    }
  }
  const auto faithful = is_order_faithful(t, bound);
  r.detail["monad"] = t.name();
  r.detail["bound"] = bound;
  r.detail["maps"] = maps;
  r.detail["m_t_members"] = members;
  r.detail["order_faithful"] = faithful.faithful;
  r.detail["divergences"] = divergences;
  return r;
}

SweepReport sweep_cauchy(const Monad& t, int bound, int probe_bound, bool algebras_only) {
  SweepReport r;
  std::size_t objects = 0, adjoints = 0;
  for (const auto& y : base_objects(t, bound)) {
    if (algebras_only && !find_algebra_structure(t, y)) continue;
    ++objects;
    const auto rep = is_cauchy_complete(t, y, probe_bound);
    adjoints += rep.left_adjoints;
    if (!rep.complete) first_failure(r, Json{{"object", shape_json(*y)}, {"reason", rep.witness}});
  }
  r.detail["monad"] = t.name();
  r.detail["bound"] = bound;
  r.detail["probe_bound"] = probe_bound;
  r.detail["algebras_only"] = algebras_only;
  r.detail["objects"] = objects;
  r.detail["left_adjoints"] = adjoints;
  return r;
}

SweepReport sweep_kar(const Monad& t, int bound) {
  if (!t.is_kz_expected()) throw InvalidInput("kar-spl applies to KZ monads only");
  SweepReport r;
  std::set<std::string> from_algebras;
  for (const auto& x : base_objects(t, bound)) {
    auto a = find_algebra_structure(t, x);
    if (!a) continue;
    auto s = find_splitting(*a);
    if (s && s->valid()) from_algebras.insert(canonical_form(*x));
  }
  std::map<std::string, std::size_t> from_kar;
  std::size_t kar_objects = 0;
  for (const auto& k : enumerate_kar(t, bound)) {
    ++kar_objects;
    const auto sk = split_kar(t, k);
    const bool split = sk.splitting && sk.splitting->valid() &&
                       check_algebra(t, sk.algebra.levels, sk.algebra.structure).is_algebra();
    if (!split) {
      first_failure(r, Json{{"kar_carrier", shape_json(*k.x->t1->base)},
                            {"t", table_to_json(k.t)},
                            {"reason", "splitting is not a split algebra"}});
    }
    if (sk.split.object->size() <= bound) ++from_kar[canonical_form(*sk.split.object)];
  }
  std::set<std::string> kar_shapes;
  for (const auto& [shape, count] : from_kar) {
    kar_shapes.insert(shape);
    if (count > 1) first_failure(r, Json{{"reason", "two inequivalent kar objects split to the same algebra"}});
  }
  if (kar_shapes != from_algebras) first_failure(r, Json{{"reason", "the two classes differ"}});
  r.detail["monad"] = t.name();
  r.detail["bound"] = bound;
  r.detail["kar_objects"] = kar_objects;
  r.detail["kar_classes_within_bound"] = kar_shapes.size();
  r.detail["split_algebras"] = from_algebras.size();
  return r;
}

SweepReport sweep_char_algebraic(const Monad& t, int bound) {
  if (!t.is_kz_expected()) throw InvalidInput("char-algebraic applies to KZ monads only");
  SweepReport r;
  const bool birkhoff = t.kind() == MonadKind::D;
  std::size_t algebras = 0, algebraic = 0, divergences = 0;
  Json rows = Json::array();
  for (const auto& x : base_objects(t, bound)) {
    auto a = find_algebra_structure(t, x);
    if (!a) continue;
    ++algebras;
    const auto c = is_algebraic_char(*a);
    const bool direct = is_algebraic_direct(*a).has_value();
    const bool b = birkhoff ? birkhoff_reconstructs(*x) : direct;
    if (direct) ++algebraic;
    Json row{{"size", x->size()}, {"char", c.verdict()}, {"direct", direct}};
    if (birkhoff) row["birkhoff"] = b;
    rows.push_back(row);
    if (c.verdict() != direct || direct != b) {
      ++divergences;
      first_failure(r, Json{{"object", shape_json(*x)}, {"row", row}});
    }
  }
  r.detail["monad"] = t.name();
  r.detail["bound"] = bound;
  r.detail["algebras"] = algebras;
  r.detail["algebraic"] = algebraic;
  r.detail["divergences"] = divergences;
  r.detail["rows"] = rows;
  return r;
}

SweepReport sweep_filter_splittings(int bound) {
  SweepReport r;
  const auto rep = verify_filter_splittings(bound);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(Json{{"size", row.size},
                        {"shape", row.shape},
                        {"split", row.split},
                        {"psi", row.psi},
                        {"coframe", row.coframe},
                        {"compact_image", row.compact_image},
                        {"alpha_formula", row.alpha_formula}});
  }
  r.holds = rep.divergences == 0 && rep.side_checks;
  r.detail["bound"] = bound;
  r.detail["lattices"] = rep.rows.size();
  r.detail["divergences"] = rep.divergences;
  r.detail["side_checks"] = rep.side_checks;
  r.detail["rows"] = rows;
  return r;
}

SweepReport sweep_regcogen(CategoryClass c, int bound) {
  SweepReport r;
  std::size_t objects = 0, verified = 0, refused = 0, controls = 0;
  Json rows = Json::array();
  for (const auto& x : class_objects(c, bound)) {
    ++objects;
    const auto cert = is_regular_cogenerator_instance(x, c);
    Json row{{"size", x->size()}, {"lambda", cert.lambda_size}};
    if (cert.refused) {
      ++refused;
      row["refused"] = cert.reason;
      rows.push_back(row);
      continue;
    }
    row["hat"] = cert.hat_size;
    row["method"] = cert.method;
    row["cone"] = cert.cone;
    row["equaliser"] = cert.equaliser;
    if (cert.equaliser && cert.cone) {
      ++verified;
    } else {
      first_failure(r, Json{{"object", shape_json(*x)}, {"row", row}});
    }
    if (x->size() >= 2) {
      const auto bad = is_regular_cogenerator_instance(x, c, EqualiserMethod::automatic, corrupted_lambda(*x, c));
      row["corrupted_equaliser"] = bad.equaliser;
      if (bad.equaliser) {
        first_failure(r, Json{{"object", shape_json(*x)}, {"reason", "corrupted Lambda still gives an equaliser"}});
      } else {
        ++controls;
      }
    }
    const auto unions = union_condition(x, c);
    row["union_condition"] = unions.ok;
    if (!unions.ok) first_failure(r, Json{{"object", shape_json(*x)}, {"reason", unions.witness}});
    rows.push_back(row);
  }
  r.detail["class"] = to_string(c);
  r.detail["bound"] = bound;
  r.detail["objects"] = objects;
  r.detail["verified"] = verified;
  r.detail["refused"] = refused;
  r.detail["controls_failing"] = controls;
  r.detail["rows"] = rows;
  return r;
}

}  // namespace orderlab
