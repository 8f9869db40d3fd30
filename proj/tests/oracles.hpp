#pragma once

// Brute-force reference computations for the test suites. Everything here is
// written from definitions over raw index tables and masks, without calling
// the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Rel = std::vector<std::vector<bool>>;  // le[a][b]
using Table = std::vector<int>;
using Mask = std::uint64_t;

inline bool bit(Mask m, int i) { return (m >> i) & 1U; }

inline bool is_partial_order(const Rel& le) {
  const int n = static_cast<int>(le.size());
  for (int a = 0; a < n; ++a) {
    if (!le[a][a]) return false;
    for (int b = 0; b < n; ++b) {
      if (a != b && le[a][b] && le[b][a]) return false;
      for (int c = 0; c < n; ++c) {
        if (le[a][b] && le[b][c] && !le[a][c]) return false;
      }
    }
  }
  return true;
}

inline bool monotone(const Rel& p, const Rel& q, const Table& f) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p[a][b] && !q[f[a]][f[b]]) return false;
    }
  }
  return true;
}

/// Every total function p -> q, monotone ones only.
inline std::vector<Table> monotone_maps(const Rel& p, const Rel& q) {
  std::vector<Table> out;
  const int n = static_cast<int>(p.size());
  const int m = static_cast<int>(q.size());
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  Table f(n, 0);
  while (true) {
    if (monotone(p, q, f)) out.push_back(f);
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool pointwise_le(const Rel& q, const Table& f, const Table& g) {
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (!q[f[a]][g[a]]) return false;
  }
  return true;
}

/// All g : q -> p with f -| g (right) or g -| f (left), pointwise order, or
/// the reverse order when dual.
inline std::vector<Table> adjoints(const Rel& p, const Rel& q, const Table& f, bool right, bool dual) {
  auto le_p = [&](int a, int b) { return dual ? p[b][a] : p[a][b]; };
  auto le_q = [&](int a, int b) { return dual ? q[b][a] : q[a][b]; };
  std::vector<Table> out;
  for (const auto& g : monotone_maps(q, p)) {
    bool ok = true;
    for (std::size_t x = 0; x < p.size() && ok; ++x) {
      ok = right ? le_p(static_cast<int>(x), g[f[x]]) : le_p(g[f[x]], static_cast<int>(x));
    }
    for (std::size_t y = 0; y < q.size() && ok; ++y) {
      ok = right ? le_q(f[g[y]], static_cast<int>(y)) : le_q(static_cast<int>(y), f[g[y]]);
    }
    if (ok) out.push_back(g);
  }
  return out;
}

inline bool isomorphic(const Rel& p, const Rel& q) {
  if (p.size() != q.size()) return false;
  Table perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < p.size() && ok; ++a) {
      for (std::size_t b = 0; b < p.size() && ok; ++b) ok = p[a][b] == q[perm[a]][perm[b]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Partial orders on n labelled points, one per isomorphism class.
inline std::vector<Rel> posets_up_to_iso(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) slots.emplace_back(a, b);
    }
  }
  std::vector<Rel> reps;
  for (Mask m = 0; m < (Mask{1} << slots.size()); ++m) {
    Rel le(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) le[a][a] = true;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (bit(m, static_cast<int>(s))) le[slots[s].first][slots[s].second] = true;
    }
    if (!is_partial_order(le)) continue;
    if (std::none_of(reps.begin(), reps.end(), [&](const Rel& r) { return isomorphic(r, le); })) reps.push_back(le);
  }
  return reps;
}

inline bool is_down_set(const Rel& le, Mask s) {
  const int n = static_cast<int>(le.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (bit(s, b) && le[a][b] && !bit(s, a)) return false;
    }
  }
  return true;
}

inline bool is_up_set(const Rel& le, Mask s) {
  const int n = static_cast<int>(le.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (bit(s, a) && le[a][b] && !bit(s, b)) return false;
    }
  }
  return true;
}

inline std::vector<Mask> down_sets(const Rel& le) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << le.size()); ++s) {
    if (is_down_set(le, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> up_sets(const Rel& le) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << le.size()); ++s) {
    if (is_up_set(le, s)) out.push_back(s);
  }
  return out;
}

/// Least upper bound of a mask, or -1.
inline int sup(const Rel& le, Mask s) {
  const int n = static_cast<int>(le.size());
  int best = -1;
  for (int u = 0; u < n; ++u) {
    bool upper = true;
    for (int a = 0; a < n && upper; ++a) upper = !bit(s, a) || le[a][u];
    if (!upper) continue;
    if (best < 0 || le[u][best]) best = u;
  }
  if (best < 0) return -1;
  for (int u = 0; u < n; ++u) {
    bool upper = true;
    for (int a = 0; a < n && upper; ++a) upper = !bit(s, a) || le[a][u];
    if (upper && !le[best][u]) return -1;
  }
  return best;
}

inline int inf(const Rel& le, Mask s) {
  Rel dual(le.size(), std::vector<bool>(le.size()));
  for (std::size_t a = 0; a < le.size(); ++a) {
    for (std::size_t b = 0; b < le.size(); ++b) dual[a][b] = le[b][a];
  }
  return sup(dual, s);
}

inline bool is_lattice(const Rel& le) {
  const int n = static_cast<int>(le.size());
  if (n == 0) return false;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Mask s = (Mask{1} << a) | (Mask{1} << b);
      if (sup(le, s) < 0 || inf(le, s) < 0) return false;
    }
  }
  return sup(le, 0) >= 0 && inf(le, 0) >= 0;
}

inline bool is_distributive(const Rel& le) {
  const int n = static_cast<int>(le.size());
  auto meet = [&](int a, int b) { return inf(le, (Mask{1} << a) | (Mask{1} << b)); };
  auto join = [&](int a, int b) { return sup(le, (Mask{1} << a) | (Mask{1} << b)); };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
      }
    }
  }
  return true;
}

/// Opens of a finite space as masks over points, indexed 0..k-1.
/// Filters: subsets of the open family (masks over open indices) that are
/// up-closed, closed under binary intersection and contain the full set.
inline std::vector<Mask> filters(const std::vector<Mask>& opens, Mask full) {
  const int k = static_cast<int>(opens.size());
  auto index_of = [&](Mask u) {
    for (int i = 0; i < k; ++i) {
      if (opens[i] == u) return i;
    }
    return -1;
  };
  const int top = index_of(full);
  std::vector<Mask> out;
  for (Mask phi = 0; phi < (Mask{1} << k); ++phi) {
    if (!bit(phi, top)) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (!bit(phi, i)) continue;
      for (int j = 0; j < k && ok; ++j) {
        if ((opens[i] & ~opens[j]) == 0 && !bit(phi, j)) ok = false;
        if (bit(phi, j) && !bit(phi, index_of(opens[i] & opens[j]))) ok = false;
      }
    }
    if (ok) out.push_back(phi);
  }
  return out;
}

inline bool proper(const std::vector<Mask>& opens, Mask phi) {
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (opens[i] == 0 && bit(phi, static_cast<int>(i))) return false;
  }
  return true;
}

inline bool prime(const std::vector<Mask>& opens, Mask phi) {
  if (!proper(opens, phi)) return false;
  const int k = static_cast<int>(opens.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int u = 0; u < k; ++u) {
        if (opens[u] == (opens[i] | opens[j]) && bit(phi, u) && !bit(phi, i) && !bit(phi, j)) return false;
      }
    }
  }
  return true;
}

/// Every family of opens (the empty family included) whose union lies in phi
/// has a member in phi.
inline bool completely_prime(const std::vector<Mask>& opens, Mask phi) {
  const int k = static_cast<int>(opens.size());
  for (Mask fam = 0; fam < (Mask{1} << k); ++fam) {
    Mask uni = 0;
    for (int i = 0; i < k; ++i) {
      if (bit(fam, i)) uni |= opens[i];
    }
    int u = -1;
    for (int i = 0; i < k; ++i) {
      if (opens[i] == uni) u = i;
    }
    if (bit(phi, u) && (fam & phi) == 0) return false;
  }
  return true;
}

}  // namespace oracle
