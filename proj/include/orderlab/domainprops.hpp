#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/algebras.hpp"
#include "orderlab/poset.hpp"

namespace orderlab {

/// Largest poset on which the subset-enumerating predicates run.
inline constexpr int kMaxSubsetEnumeration = 20;

/// below[y] is {x | x R y}.
struct RelationTable {
  PosetRef poset;
  std::vector<Subset> below;
  bool holds(int x, int y) const { return below[y][x]; }
};

/// x << y: every directed D with a supremum above y meets the up-set of x.
/// Enumerates all subsets; throws SizeCapExceeded past kMaxSubsetEnumeration.
RelationTable way_below(const PosetRef& p);
/// x <<< y: the same for arbitrary subsets that have a supremum.
RelationTable totally_below(const PosetRef& p);

/// K(P) = {x | x << x} and {x | x <<< x}.
Subset compacts(const PosetRef& p);
Subset totally_compacts(const PosetRef& p);

struct Classification {
  bool lattice = false;
  bool distributive = false;
  bool frame = false;
  bool coframe = false;
  bool continuous = false;
  bool algebraic_domain = false;
  bool completely_distributive = false;
  bool totally_algebraic = false;
  bool bounded_complete = false;
  bool directed_complete = false;
};

Classification classify(const PosetRef& p);

/// (x, y, z) with x meet (y join z) != (x meet y) join (x meet z); the lattice
/// must be a lattice.
std::optional<std::array<int, 3>> distributivity_witness(const Poset& p);

/// a meet (join S) = join (a meet s) for every a and every subset S.
bool is_frame(const Poset& p);
/// a join (meet S) = meet (a join s) for every a and every subset S.
bool is_coframe(const Poset& p);

/// Birkhoff reconstruction: p is isomorphic to the down-sets of its
/// join-irreducible elements.
bool birkhoff_reconstructs(const Poset& p);

/// mu(U) = {alpha(phi) | phi in FA, U in phi} for an F-algebra A and an open
/// given by its index in the algebra's open list.
Subset mu_set(const Algebra& a, int open);

struct DisconnectedReport {
  bool disconnected = false;            ///< every mu(U) is open
  std::optional<MonotoneMap> t;         ///< x -> {U | x in mu(U)}
  bool matches_splitting = false;       ///< equals the adjoint of alpha
};

DisconnectedReport is_F_disconnected(const Algebra& a);

/// Construction of the right adjoint of a filter algebra on a finite
/// lattice through psi_a = {G open | meet k(G) <= a}, with k(G) the compact
/// elements of G.
struct PsiCertificate {
  bool ok = false;
  std::string failure;           ///< first failed condition
  int witness_a = -1;            ///< element whose psi_a failed
  std::vector<int> witness_opens;  ///< open indices G, H where relevant
  std::optional<MonotoneMap> t;  ///< A -> FA when ok
  bool filters = false;
  bool union_of_s = false;
  bool continuous = false;
  bool adjunction = false;
};

PsiCertificate psi_construction(const Algebra& a);

struct FilterSplittingRow {
  std::string shape;  ///< canonical form of the lattice
  int size = 0;
  bool split = false;
  bool psi = false;
  bool coframe = false;
  bool compact_image = false;  ///< K(A) = alpha(K(FA)) and K(FA) = {^U}
  bool alpha_formula = false;  ///< alpha(y) = join {z | e(z) <= y}
  bool agree() const { return split == psi && psi == coframe; }
};

struct FilterSplittingReport {
  std::vector<FilterSplittingRow> rows;
  std::size_t divergences = 0;
  bool side_checks = true;
};

/// Sweeps every lattice with at most size_bound elements.
FilterSplittingReport verify_filter_splittings(int size_bound);
FilterSplittingRow filter_splitting_row(const PosetRef& lattice);

}  // namespace orderlab
