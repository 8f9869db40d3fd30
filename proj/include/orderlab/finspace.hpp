#pragma once

#include <string>
#include <vector>

#include "orderlab/poset.hpp"

namespace orderlab {

/// A finite topological space given by its points and its open sets.
/// Opens are kept sorted by subset_less and are closed under intersection
/// and union; the space is not required to be T0 until specialisation is
/// asked for.
class FinSpace {
 public:
  FinSpace() = default;
  /// Throws InvalidInput unless `opens` contains the empty and full sets
  /// and is closed under binary intersection and union. Duplicates are
  /// dropped.
  FinSpace(std::vector<std::string> points, std::vector<Subset> opens);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Subset>& opens() const { return opens_; }
  bool is_open(const Subset& s) const;

  /// Smallest open containing `x`.
  Subset neighbourhood(int x) const;

  bool is_t0() const;

 private:
  std::vector<std::string> points_;
  std::vector<Subset> opens_;
};

/// Closes a family of subsets under finite intersections and unions,
/// adding the empty and full sets.
FinSpace generated_space(std::vector<std::string> points, const std::vector<Subset>& subbase);

/// x <= y iff every open containing x contains y. Throws InvalidInput when
/// the space is not T0.
PosetRef specialization_poset(const FinSpace& x);

/// Opens are the up-sets of p.
FinSpace alexandrov(const Poset& p);

/// Opens ordered by inclusion.
PosetRef open_lattice(const FinSpace& x);

/// Points 0 and 1, opens {}, {1}, {0,1}.
FinSpace sierpinski();

/// Every nonempty irreducible closed set has exactly one generic point.
bool is_sober(const FinSpace& x);

/// Preimage of every open is open. `table` maps points of dom to points of
/// cod.
bool is_continuous(const FinSpace& dom, const FinSpace& cod, const std::vector<int>& table);

/// Preimage of every compact open is compact. Every subset of a finite space
/// is compact, so the test reduces to continuity, but both halves are run.
bool is_spectral_map(const FinSpace& dom, const FinSpace& cod, const std::vector<int>& table);

/// A continuous map between finite spaces.
class ContinuousMap {
 public:
  /// Throws InvalidInput unless the table is total, in range and continuous.
  ContinuousMap(const FinSpace& dom, const FinSpace& cod, std::vector<int> table);
  const std::vector<int>& table() const { return table_; }
  int operator()(int x) const { return table_[x]; }

 private:
  std::vector<int> table_;
};

/// Same space up to relabelling-free equality of the open families.
bool same_topology(const FinSpace& a, const FinSpace& b);

}  // namespace orderlab
