#include "orderlab/domainprops.hpp"

#include <cstdint>

#include "orderlab/enumerate.hpp"

namespace orderlab {

namespace {

using Mask = std::uint32_t;

// Dense 32-bit view of a small poset for the subset sweeps.
struct Small {
  int n = 0;
  std::vector<Mask> up;
  std::vector<Mask> down;

  explicit Small(const Poset& p) : n(p.size()), up(p.size()), down(p.size()) {
    if (n > kMaxSubsetEnumeration) {
      throw SizeCapExceeded("subset enumeration is limited to " +
                            std::to_string(kMaxSubsetEnumeration) + " elements");
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (p.le(i, j)) {
          up[i] |= Mask{1} << j;
          down[j] |= Mask{1} << i;
        }
      }
    }
  }

  Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

  int least(Mask s) const {
    for (int u = 0; u < n; ++u) {
      if ((s >> u & 1) && (s & ~up[u]) == 0) return u;
    }
    return -1;
  }
  int greatest(Mask s) const {
    for (int u = 0; u < n; ++u) {
      if ((s >> u & 1) && (s & ~down[u]) == 0) return u;
    }
    return -1;
  }
  int sup(Mask s) const {
    Mask ub = all();
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) ub &= up[i];
    }
    return least(ub);
  }
  int inf(Mask s) const {
    Mask lb = all();
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) lb &= down[i];
    }
    return greatest(lb);
  }
  Mask down_closure(Mask s) const {
    Mask out = 0;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) out |= down[i];
    }
    return out;
  }
  bool directed(Mask s) const {
    if (s == 0) return false;
    for (int a = 0; a < n; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = a + 1; b < n; ++b) {
        if ((s >> b & 1) && (up[a] & up[b] & s) == 0) return false;
      }
    }
    return true;
  }
};

Subset to_subset(Mask m, int n) {
  Subset s(n);
  for (int i = 0; i < n; ++i) {
    if (m >> i & 1) s.set(i);
  }
  return s;
}

Mask to_mask(const Subset& s) {
  Mask m = 0;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) m |= Mask{1} << i;
  return m;
}

RelationTable sweep(const PosetRef& p, bool directed_only) {
  const Small sp(*p);
  std::vector<Mask> below(sp.n, sp.all());
  const std::uint64_t count = std::uint64_t{1} << sp.n;
  for (std::uint64_t raw = 0; raw < count; ++raw) {
    const auto s = static_cast<Mask>(raw);
    if (directed_only && !sp.directed(s)) continue;
    const int top = sp.sup(s);
    if (top < 0) continue;
    const Mask reach = sp.down_closure(s);
    for (int y = 0; y < sp.n; ++y) {
      if (sp.up[y] >> top & 1) below[y] &= reach;
    }
  }
  RelationTable r{p, {}};
  for (int y = 0; y < sp.n; ++y) r.below.push_back(to_subset(below[y], sp.n));
  return r;
}

Subset diagonal(const RelationTable& r) {
  Subset d(r.below.size());
  for (std::size_t x = 0; x < r.below.size(); ++x) {
    if (r.below[x][x]) d.set(x);
  }
  return d;
}

}  // namespace

RelationTable way_below(const PosetRef& p) { return sweep(p, true); }
RelationTable totally_below(const PosetRef& p) { return sweep(p, false); }
Subset compacts(const PosetRef& p) { return diagonal(way_below(p)); }
Subset totally_compacts(const PosetRef& p) { return diagonal(totally_below(p)); }

std::optional<std::array<int, 3>> distributivity_witness(const Poset& p) {
  const auto ops = lattice_ops(p);
  if (!ops.is_lattice) throw InvalidInput("distributivity_witness: not a lattice");
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      for (int z = 0; z < p.size(); ++z) {
        if (ops.meet(x, ops.join(y, z)) != ops.join(ops.meet(x, y), ops.meet(x, z))) {
          return std::array<int, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool infinite_law(const Poset& p, bool frame) {
  const auto ops = lattice_ops(p);
  if (!ops.is_lattice) return false;
  const Small sp(p);
  const std::uint64_t count = std::uint64_t{1} << sp.n;
  for (std::uint64_t raw = 0; raw < count; ++raw) {
    const auto s = static_cast<Mask>(raw);
    const int big = frame ? sp.sup(s) : sp.inf(s);
    for (int a = 0; a < sp.n; ++a) {
      Mask image = 0;
      for (int i = 0; i < sp.n; ++i) {
        if (s >> i & 1) image |= Mask{1} << (frame ? ops.meet(a, i) : ops.join(a, i));
      }
      const int lhs = frame ? ops.meet(a, big) : ops.join(a, big);
      const int rhs = frame ? sp.sup(image) : sp.inf(image);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// x is the supremum of `approx`, and `approx` is directed when asked.
bool generated(const Small& sp, int x, Mask approx, bool need_directed) {
  if (need_directed && !sp.directed(approx)) return false;
  return sp.sup(approx) == x;
}

}  // namespace

bool is_frame(const Poset& p) { return infinite_law(p, true); }
bool is_coframe(const Poset& p) { return infinite_law(p, false); }

Classification classify(const PosetRef& p) {
  Classification c;
  const Small sp(*p);
  const auto ops = lattice_ops(*p);
  c.lattice = ops.is_lattice;
  c.distributive = c.lattice && !distributivity_witness(*p);
  c.frame = c.lattice && is_frame(*p);
  c.coframe = c.lattice && is_coframe(*p);

  c.directed_complete = true;
  c.bounded_complete = true;
  const std::uint64_t count = std::uint64_t{1} << sp.n;
  for (std::uint64_t raw = 0; raw < count; ++raw) {
    const auto s = static_cast<Mask>(raw);
    const bool has_sup = sp.sup(s) >= 0;
    if (sp.directed(s) && !has_sup) c.directed_complete = false;
    Mask ub = sp.all();
    for (int i = 0; i < sp.n; ++i) {
      if (s >> i & 1) ub &= sp.up[i];
    }
    if (ub != 0 && !has_sup) c.bounded_complete = false;
  }

  const auto wb = way_below(p);
  const auto tb = totally_below(p);
  const Mask k = to_mask(diagonal(wb));
  const Mask kt = to_mask(diagonal(tb));
  c.continuous = c.directed_complete;
  c.algebraic_domain = c.directed_complete;
  c.completely_distributive = c.lattice;
  c.totally_algebraic = c.lattice;
  for (int x = 0; x < sp.n; ++x) {
    if (!generated(sp, x, to_mask(wb.below[x]), true)) c.continuous = false;
    if (!generated(sp, x, k & sp.down[x], true)) c.algebraic_domain = false;
    if (!generated(sp, x, to_mask(tb.below[x]), false)) c.completely_distributive = false;
    if (!generated(sp, x, kt & sp.down[x], false)) c.totally_algebraic = false;
  }
  return c;
}

bool birkhoff_reconstructs(const Poset& p) {
  const auto ops = lattice_ops(p);
  if (!ops.is_lattice) return false;
  Subset joins_irreducible = p.empty_set();
  for (int x = 0; x < p.size(); ++x) {
    if (ops.bottom && x == *ops.bottom) continue;
    bool irreducible = true;
    for (int a = 0; a < p.size() && irreducible; ++a) {
      for (int b = 0; b < p.size() && irreducible; ++b) {
        if (a != x && b != x && ops.join(a, b) == x) irreducible = false;
      }
    }
    if (irreducible) joins_irreducible.set(x);
  }
  const auto j = p.induced(joins_irreducible);
  const auto ds = down_sets(j);
  std::vector<std::string> labels;
  std::vector<Subset> up(ds.size(), Subset(ds.size()));
  for (std::size_t a = 0; a < ds.size(); ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < ds.size(); ++b) {
      if (ds[a].is_subset_of(ds[b])) up[a].set(b);
    }
  }
  return are_isomorphic(Poset(std::move(labels), std::move(up)), p);
}

Subset mu_set(const Algebra& a, int open) {
  Subset out = a.carrier()->empty_set();
  const auto& tx = *a.levels.t1;
  for (int k = 0; k < tx.size(); ++k) {
    if (tx.elements[k][open]) out.set(a.structure(k));
  }
  return out;
}

DisconnectedReport is_F_disconnected(const Algebra& a) {
  DisconnectedReport r;
  const auto& tx = *a.levels.t1;
  const auto& x = *a.carrier();
  std::vector<Subset> mus;
  r.disconnected = true;
  for (std::size_t u = 0; u < tx.opens.size(); ++u) {
    mus.push_back(mu_set(a, static_cast<int>(u)));
    if (!x.is_up_set(mus.back())) r.disconnected = false;
  }
  if (!r.disconnected) return r;
  std::vector<int> table(x.size());
  for (int p = 0; p < x.size(); ++p) {
    Subset f(tx.opens.size());
    for (std::size_t u = 0; u < tx.opens.size(); ++u) {
      if (mus[u][p]) f.set(u);
    }
    table[p] = tx.find(f);
    if (table[p] < 0) return r;
  }
  if (!is_monotone(x, *tx.object, table)) return r;
  r.t = MonotoneMap(a.carrier(), tx.object, table);
  auto split = find_splitting(a);
  r.matches_splitting = split && split->t == *r.t;
  return r;
}

PsiCertificate psi_construction(const Algebra& a) {
  PsiCertificate c;
  if (!a.monad.is_filter_kind()) throw InvalidInput("psi_construction needs a filter monad algebra");
  const auto& x = *a.carrier();
  const auto ops = lattice_ops(x);
  if (!ops.is_lattice) throw InvalidInput("psi_construction needs a lattice carrier");
  const auto& tx = *a.levels.t1;
  const auto& opens = tx.opens;
  const auto k = compacts(a.carrier());
  const auto no = opens.size();

  // meet k(G) for every open G.
  std::vector<int> meet_k(no);
  for (std::size_t g = 0; g < no; ++g) {
    auto m = x.inf(opens[g] & k);
    meet_k[g] = *m;
  }
  std::vector<Subset> psi(x.size(), Subset(no));
  for (int p = 0; p < x.size(); ++p) {
    for (std::size_t g = 0; g < no; ++g) {
      if (x.le(meet_k[g], p)) psi[p].set(g);
    }
  }
  auto fail = [&](std::string why, int p, std::vector<int> w) {
    c.failure = std::move(why);
    c.witness_a = p;
    c.witness_opens = std::move(w);
    return c;
  };

  const int full = tx.find_open(full_set(x.size()));
  for (int p = 0; p < x.size(); ++p) {
    if (!psi[p][full]) return fail("psi_a misses the full set", p, {full});
    for (std::size_t g = 0; g < no; ++g) {
      if (!psi[p][g]) continue;
      for (std::size_t h = 0; h < no; ++h) {
        if (opens[g].is_subset_of(opens[h]) && !psi[p][h]) {
          return fail("psi_a is not up-closed", p, {static_cast<int>(g), static_cast<int>(h)});
        }
        if (psi[p][h] && !psi[p][tx.find_open(opens[g] & opens[h])]) {
          return fail("psi_a is not closed under intersection", p,
                      {static_cast<int>(g), static_cast<int>(h)});
        }
      }
    }
  }
  c.filters = true;

  for (int p = 0; p < x.size(); ++p) {
    Subset s_union(no);
    for (int f = 0; f < tx.size(); ++f) {
      if (x.le(a.structure(f), p)) s_union |= tx.elements[f];
    }
    if (s_union != psi[p]) return fail("psi_a differs from the union of S_a", p, {});
  }
  c.union_of_s = true;

  std::vector<int> table(x.size());
  for (int p = 0; p < x.size(); ++p) {
    table[p] = tx.find(psi[p]);
    if (table[p] < 0) return fail("psi_a is not a point of the filter space", p, {});
  }
  for (std::size_t u = 0; u < no; ++u) {
    Subset pre = x.empty_set();
    for (int p = 0; p < x.size(); ++p) {
      if (psi[p][u]) pre.set(p);
    }
    if (pre != x.up(meet_k[u]) || !x.is_up_set(pre)) {
      return fail("preimage of U^# is not the up-set of meet k(U)", -1, {static_cast<int>(u)});
    }
  }
  c.continuous = true;
  auto t = MonotoneMap(a.carrier(), tx.object, table);

  if (!(compose(a.structure, t) == identity(a.carrier()))) return fail("alpha . t != id", -1, {});
  for (int f = 0; f < tx.size(); ++f) {
    if (!tx.object->le(f, t(a.structure(f)))) return fail("id <= t . alpha fails", -1, {});
  }
  c.adjunction = true;
  c.t = t;
  c.ok = true;
  return c;
}

FilterSplittingRow filter_splitting_row(const PosetRef& lattice) {
  FilterSplittingRow row;
  row.shape = canonical_form(*lattice);
  row.size = lattice->size();
  const Monad f(MonadKind::F);
  auto alg = find_algebra_structure(f, lattice);
  if (!alg) throw InvalidInput("lattice carries no F-algebra structure");
  auto split = find_splitting(*alg);
  row.split = split && split->valid();
  row.psi = psi_construction(*alg).ok;
  const auto k = compacts(lattice);
  row.coframe = is_coframe(lattice->induced(k));

  const auto& tx = *alg->levels.t1;
  Subset principal(tx.size());
  for (int p = 0; p < tx.size(); ++p) {
    for (std::size_t u = 0; u < tx.opens.size(); ++u) {
      Subset up_u(tx.opens.size());
      for (std::size_t v = 0; v < tx.opens.size(); ++v) {
        if (tx.opens[u].is_subset_of(tx.opens[v])) up_u.set(v);
      }
      if (tx.elements[p] == up_u) principal.set(p);
    }
  }
  const auto kfa = compacts(tx.object);
  row.compact_image = kfa == principal && alg->structure.image(kfa) == k;

  row.alpha_formula = true;
  for (int p = 0; p < tx.size(); ++p) {
    Subset below = lattice->empty_set();
    for (int z = 0; z < lattice->size(); ++z) {
      if (tx.object->le(alg->levels.e(z), p)) below.set(z);
    }
    if (lattice->sup(below) != alg->structure(p)) row.alpha_formula = false;
  }
  return row;
}

FilterSplittingReport verify_filter_splittings(int size_bound) {
  FilterSplittingReport rep;
  for (const auto& l : enumerate_lattices_up_to(size_bound)) {
    rep.rows.push_back(filter_splitting_row(l));
    if (!rep.rows.back().agree()) ++rep.divergences;
    if (!rep.rows.back().compact_image || !rep.rows.back().alpha_formula) rep.side_checks = false;
  }
  return rep;
}

}  // namespace orderlab
