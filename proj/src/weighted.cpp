#include "orderlab/weighted.hpp"

#include <algorithm>
#include <unordered_map>

#include "orderlab/enumerate.hpp"

namespace orderlab {

namespace {

constexpr std::size_t kEnumerateOpensCap = 200'000;

const PosetRef& sierpinski_order() {
  static const PosetRef s = chain(2);
  return s;
}

// chi_U : X -> S is a class morphism.
bool characteristic_is_morphism(CategoryClass c, const Poset& x, const Subset& u) {
  if (c == CategoryClass::Spec) return x.is_up_set(u);
  if (!x.is_up_set(u)) return false;
  const auto ops = lattice_ops(x);
  if (c == CategoryClass::ALat && !u[*ops.top]) return false;
  for (int a : members(u)) {
    for (int b : members(u)) {
      auto m = x.inf(singleton(x.size(), a) | singleton(x.size(), b));
      if (!m || !u[*m]) return false;
    }
  }
  return true;
}

}  // namespace

const char* to_string(CategoryClass c) {
  switch (c) {
    case CategoryClass::ALat: return "alat";
    case CategoryClass::ADom: return "adom";
    case CategoryClass::Spec: return "spec";
  }
  return "?";
}

CategoryClass category_class_by_name(const std::string& name) {
  for (auto c : {CategoryClass::ALat, CategoryClass::ADom, CategoryClass::Spec}) {
    if (name == to_string(c)) return c;
  }
  throw InvalidInput("unknown class '" + name + "' (expected alat, adom or spec)");
}

bool is_class_object(CategoryClass c, const Poset& x) {
  switch (c) {
    case CategoryClass::Spec: return true;
    case CategoryClass::ALat: return lattice_ops(x).is_lattice;
    case CategoryClass::ADom: {
      for (int a = 0; a < x.size(); ++a) {
        for (int b = 0; b < x.size(); ++b) {
          if (!x.inf(singleton(x.size(), a) | singleton(x.size(), b))) return false;
        }
      }
      return true;
    }
  }
  return false;
}

bool is_class_morphism(CategoryClass c, const MonotoneMap& f) {
  if (c == CategoryClass::Spec) return true;
  const auto& x = f.dom();
  const auto& y = f.cod();
  if (c == CategoryClass::ALat && f(*x.top()) != *y.top()) return false;
  for (int a = 0; a < x.size(); ++a) {
    for (int b = 0; b < x.size(); ++b) {
      const auto m = x.inf(singleton(x.size(), a) | singleton(x.size(), b));
      const auto n = y.inf(singleton(y.size(), f(a)) | singleton(y.size(), f(b)));
      if (!m || !n || f(*m) != *n) return false;
    }
  }
  return true;
}

std::vector<Subset> lambda_opens(const Poset& x, CategoryClass c) {
  if (!is_class_object(c, x)) throw InvalidInput(std::string("object is not in ") + to_string(c));
  std::vector<Subset> out;
  for_each_up_set(x, [&](const Subset& u) {
    if (characteristic_is_morphism(c, x, u)) out.push_back(u);
    return true;
  });
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

LambdaCheck check_lambda(const Poset& x, const std::vector<Subset>& lambda) {
  LambdaCheck r;
  const auto full = x.all();
  r.contains_full = std::find(lambda.begin(), lambda.end(), full) != lambda.end();
  r.closed_under_intersection = true;
  for (const auto& a : lambda) {
    for (const auto& b : lambda) {
      if (std::find(lambda.begin(), lambda.end(), a & b) == lambda.end()) r.closed_under_intersection = false;
    }
  }
  r.is_base = true;
  for_each_up_set(x, [&](const Subset& u) {
    Subset cover = x.empty_set();
    for (const auto& v : lambda) {
      if (v.is_subset_of(u)) cover |= v;
    }
    if (cover != u) r.is_base = false;
    return r.is_base;
  });
  return r;
}

Subset Hat::diamond(int u) const {
  Subset s(hat.tables.size());
  for (std::size_t k = 0; k < hat.tables.size(); ++k) {
    if (hat.tables[k][u] == 1) s.set(k);
  }
  return s;
}

Hat build_hat(const PosetRef& x, std::vector<Subset> lambda) {
  if (lambda.size() > kMaxLambda) {
    throw SizeCapExceeded("|Lambda X| = " + std::to_string(lambda.size()) + " exceeds the cap of " +
                          std::to_string(kMaxLambda));
  }
  std::vector<std::string> labels;
  std::vector<Subset> up(lambda.size(), Subset(lambda.size()));
  for (std::size_t a = 0; a < lambda.size(); ++a) {
    labels.push_back("U" + std::to_string(a));
    for (std::size_t b = 0; b < lambda.size(); ++b) {
      if (lambda[a].is_subset_of(lambda[b])) up[a].set(b);
    }
  }
  auto order = share(Poset(std::move(labels), std::move(up)));
  auto c = cotensor(order, sierpinski_order());
  std::vector<int> table(x->size());
  for (int p = 0; p < x->size(); ++p) {
    std::vector<int> family(lambda.size());
    for (std::size_t u = 0; u < lambda.size(); ++u) family[u] = lambda[u][p] ? 1 : 0;
    table[p] = c.element_of(family);
  }
  auto n = MonotoneMap(x, c.object, std::move(table));
  return Hat{x, std::move(lambda), std::move(order), std::move(c), std::move(n)};
}

Hat build_hat(const PosetRef& x, CategoryClass c) { return build_hat(x, lambda_opens(*x, c)); }

bool hat_embedding_ok(const Hat& h) {
  for (std::size_t u = 0; u < h.lambda.size(); ++u) {
    if (h.n.preimage(h.diamond(static_cast<int>(u))) != h.lambda[u]) return false;
  }
  return h.n.is_injective() && h.n.is_order_reflecting();
}

std::vector<Subset> corrupted_lambda(const Poset& x, CategoryClass c) {
  std::vector<Subset> out;
  for (auto& u : lambda_opens(x, c)) {
    if (u.none() || u == x.all()) out.push_back(u);
  }
  return out;
}

RegCogenCertificate is_regular_cogenerator_instance(const PosetRef& x, CategoryClass c,
                                                    EqualiserMethod method,
                                                    const std::optional<std::vector<Subset>>& lambda_override) {
  RegCogenCertificate cert;
  auto lambda = lambda_override ? *lambda_override : lambda_opens(*x, c);
  cert.lambda_size = lambda.size();
  if (lambda.size() > kMaxLambda) {
    cert.refused = true;
    cert.reason = "|Lambda X| = " + std::to_string(lambda.size()) + " exceeds the cap of " +
                  std::to_string(kMaxLambda);
    return cert;
  }
  const auto h = build_hat(x, lambda);
  const auto& hat = *h.hat.object;
  cert.hat_size = static_cast<std::size_t>(hat.size());
  std::unordered_map<Subset, int, SubsetHash> index;
  for (std::size_t u = 0; u < h.lambda.size(); ++u) index.emplace(h.lambda[u], static_cast<int>(u));
  std::vector<Subset> column;
  for (std::size_t u = 0; u < h.lambda.size(); ++u) column.push_back(h.diamond(static_cast<int>(u)));

  if (method == EqualiserMethod::automatic) {
    std::size_t count = 0;
    for_each_up_set(hat, [&](const Subset&) { return ++count <= kEnumerateOpensCap; });
    if (count <= kEnumerateOpensCap) {
      method = EqualiserMethod::enumerate;
    } else if (c == CategoryClass::Spec) {
      method = EqualiserMethod::extremal;
    } else {
      cert.refused = true;
      cert.reason = "Lambda of the double dual is too large to enumerate";
      return cert;
    }
  }
  if (method == EqualiserMethod::extremal && c != CategoryClass::Spec) {
    throw InvalidInput("the extremal-open reduction needs every open in Lambda (class spec)");
  }

  Subset e = hat.all();
  if (method == EqualiserMethod::enumerate) {
    cert.method = "enumerate";
    for_each_up_set(hat, [&](const Subset& v) {
      if (!characteristic_is_morphism(c, hat, v)) return true;
      ++cert.opens_checked;
      auto it = index.find(h.n.preimage(v));
      if (it == index.end()) {
        cert.beta_defined = false;
        return true;
      }
      e &= ~(v ^ column[it->second]);
      return true;
    });
  } else {
    cert.method = "extremal";
    for (int z = 0; z < hat.size(); ++z) {
      const Subset v1 = hat.up(z);
      const Subset v2 = ~hat.down(z);
      cert.opens_checked += 2;
      auto i1 = index.find(h.n.preimage(v1));
      auto i2 = index.find(h.n.preimage(v2));
      if (i1 == index.end() || i2 == index.end()) {
        cert.beta_defined = false;
        e.reset(z);
        continue;
      }
      if (!column[i1->second][z] || column[i2->second][z]) e.reset(z);
    }
  }
  cert.equaliser_set = e;
  const Subset image = h.n.image();
  cert.cone = image.is_subset_of(e);
  cert.equaliser = cert.beta_defined && e == image && h.n.is_injective() && h.n.is_order_reflecting();
  return cert;
}

UnionConditionReport union_condition(const PosetRef& x, CategoryClass c) {
  UnionConditionReport rep;
  const auto h = build_hat(x, c);
  const auto& hat = *h.hat.object;
  const auto k = h.lambda.size();
  std::unordered_map<Subset, int, SubsetHash> index;
  for (std::size_t u = 0; u < k; ++u) index.emplace(h.lambda[u], static_cast<int>(u));
  std::vector<Subset> diamonds;
  for (std::size_t u = 0; u < k; ++u) diamonds.push_back(h.diamond(static_cast<int>(u)));

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ++rep.families;
    Subset union_x = x->empty_set();
    Subset union_d = hat.empty_set();
    std::vector<int> family;
    for (std::size_t u = 0; u < k; ++u) {
      if (mask >> u & 1) {
        union_x |= h.lambda[u];
        union_d |= diamonds[u];
        family.push_back(static_cast<int>(u));
      }
    }
    if (!index.count(union_x)) continue;
    ++rep.applicable;
    Subset witness = hat.empty_set();
    if (union_x.none()) {
      ++rep.trivial;
    } else if (c == CategoryClass::Spec) {
      // Finite subfamily: all of it, the carrier being finite.
      for (int u : family) witness |= diamonds[u];
    } else {
      const int a = *x->least_in(union_x);
      const auto it = std::find_if(family.begin(), family.end(), [&](int u) { return h.lambda[u][a]; });
      witness = diamonds[*it];
    }
    const bool ok = characteristic_is_morphism(c, hat, witness) && h.n.preimage(witness) == union_x &&
                    witness.is_subset_of(union_d);
    if (!ok && rep.ok) {
      rep.ok = false;
      rep.witness = "family mask " + std::to_string(mask);
    }
  }
  return rep;
}

std::vector<PosetRef> class_objects(CategoryClass c, int max_size, int min_size) {
  std::vector<PosetRef> out;
  for (int n = std::max(0, min_size); n <= max_size; ++n) {
    for (auto& p : enumerate_posets(n)) {
      if (is_class_object(c, *p)) out.push_back(p);
    }
  }
  return out;
}

namespace {

std::vector<MonotoneMap> class_maps(CategoryClass c, const PosetRef& x, const PosetRef& y) {
  std::vector<MonotoneMap> out;
  for (auto& f : monotone_maps(x, y)) {
    if (is_class_morphism(c, f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

CogeneratorReport is_order_cogenerator(CategoryClass c, int bound) {
  CogeneratorReport rep;
  const auto objects = class_objects(c, bound);
  for (const auto& x : objects) {
    for (const auto& y : objects) {
      const auto lambda = lambda_opens(*y, c);
      const auto maps = class_maps(c, x, y);
      for (const auto& f : maps) {
        for (const auto& g : maps) {
          ++rep.pairs;
          bool below = true;
          for (const auto& u : lambda) {
            if (!f.preimage(u).is_subset_of(g.preimage(u))) below = false;
          }
          if (below && !leq(f, g, Enrichment::pointwise)) {
            rep.detects = false;
            if (rep.witness.empty()) rep.witness = "pair of maps agreeing under every test into S";
          }
        }
      }
    }
  }
  return rep;
}

ClosureReport closure_under_weighted_limits_check(CategoryClass c, int bound) {
  ClosureReport rep;
  auto note = [&](const std::string& what) {
    rep.ok = false;
    if (rep.witness.empty()) rep.witness = what;
  };
  const auto objects = class_objects(c, bound);
  for (const auto& x : objects) {
    for (const auto& y : objects) {
      ++rep.products;
      auto p = product({x, y});
      if (!is_class_object(c, *p.apex)) note("product outside the class");
      for (const auto& leg : p.legs) {
        if (!is_class_morphism(c, leg)) note("product projection is not a class map");
      }
      const auto maps = class_maps(c, x, y);
      for (const auto& f : maps) {
        for (const auto& g : maps) {
          auto ins = inserter(f, g);
          ++rep.inserters;
          if (!is_class_object(c, *ins.object) || !is_class_morphism(c, ins.inclusion)) {
            note("inserter outside the class");
          }
        }
      }
    }
    ++rep.cotensors;
    auto ct = cotensor(chain(2), x);
    if (!is_class_object(c, *ct.object)) note("cotensor outside the class");
    for (const auto& pr : ct.projections) {
      if (!is_class_morphism(c, pr)) note("cotensor projection is not a class map");
    }
  }
  return rep;
}

}  // namespace orderlab
