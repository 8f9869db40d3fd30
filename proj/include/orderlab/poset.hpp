#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orderlab/bits.hpp"

namespace orderlab {

/// A finite partially ordered set. Elements are indices 0..size()-1 with
/// unique labels; the order is kept as dense up-set and down-set rows.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from a relation that must already be a partial order.
  /// `up[i][j]` means i <= j. Throws InvalidInput if the relation is not
  /// reflexive, transitive and antisymmetric, or labels repeat.
  Poset(std::vector<std::string> labels, std::vector<Subset> up);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }

  bool le(int a, int b) const { return up_[a][b]; }
  bool lt(int a, int b) const { return a != b && up_[a][b]; }
  bool comparable(int a, int b) const { return le(a, b) || le(b, a); }

  const Subset& up(int a) const { return up_[a]; }
  const Subset& down(int a) const { return down_[a]; }

  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;
  int index_of(std::string_view label) const;

  Subset empty_set() const { return Subset(labels_.size()); }
  Subset all() const { return full_set(labels_.size()); }

  Subset up_closure(const Subset& s) const;
  Subset down_closure(const Subset& s) const;
  bool is_up_set(const Subset& s) const;
  bool is_down_set(const Subset& s) const;

  /// Elements ordered so that every element comes after everything below it.
  std::vector<int> linear_extension() const;

  /// Greatest / least element of `s` itself, if any.
  std::optional<int> greatest_in(const Subset& s) const;
  std::optional<int> least_in(const Subset& s) const;
  Subset maximal_in(const Subset& s) const;
  Subset minimal_in(const Subset& s) const;

  Subset upper_bounds(const Subset& s) const;
  Subset lower_bounds(const Subset& s) const;
  /// Least upper bound / greatest lower bound in the whole poset.
  std::optional<int> sup(const Subset& s) const;
  std::optional<int> inf(const Subset& s) const;
  std::optional<int> top() const { return greatest_in(all()); }
  std::optional<int> bottom() const { return least_in(all()); }

  bool is_directed(const Subset& s) const;

  Poset dual() const;
  /// Induced order on `keep`; element i of the result is the i-th member.
  Poset induced(const Subset& keep) const;

  /// Structural equality: same labels in the same order and same relation.
  bool operator==(const Poset& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::unordered_map<std::string, int> index_;
};

using PosetRef = std::shared_ptr<const Poset>;

inline PosetRef share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

/// Takes the reflexive-transitive closure of `pairs` (a, b meaning a <= b).
/// Throws InvalidInput naming the cycle if the closure is not antisymmetric.
PosetRef make_poset(const std::vector<std::string>& labels,
                    const std::vector<std::pair<std::string, std::string>>& pairs);

/// Same, with pairs given by index.
PosetRef make_poset_indexed(const std::vector<std::string>& labels,
                            const std::vector<std::pair<int, int>>& pairs);

PosetRef chain(int n);
PosetRef antichain(int n);
/// Subsets of a k-element set ordered by inclusion.
PosetRef boolean_lattice(int k);
PosetRef diamond_m3();
PosetRef pentagon_n5();
/// Disjoint union with the components side by side.
PosetRef disjoint_union(const Poset& a, const Poset& b);
/// Adds a fresh bottom and a fresh top.
PosetRef with_bounds(const Poset& p, const std::string& bottom = "bot",
                     const std::string& top = "top");

/// A monotone map between finite posets, stored as an index table.
class MonotoneMap {
 public:
  /// Throws InvalidInput unless the table is total, in range and monotone.
  MonotoneMap(PosetRef dom, PosetRef cod, std::vector<int> table);

  /// Skips the monotonicity check. Tables built from trusted formulas only.
  static MonotoneMap trusted(PosetRef dom, PosetRef cod, std::vector<int> table);

  const Poset& dom() const { return *dom_; }
  const Poset& cod() const { return *cod_; }
  const PosetRef& dom_ref() const { return dom_; }
  const PosetRef& cod_ref() const { return cod_; }
  const std::vector<int>& table() const { return table_; }

  int operator()(int x) const { return table_[x]; }

  Subset image(const Subset& s) const;
  Subset image() const { return image(dom_->all()); }
  Subset preimage(const Subset& s) const;

  bool is_injective() const;
  bool is_surjective() const;
  /// f(x) <= f(y) implies x <= y.
  bool is_order_reflecting() const;

  bool operator==(const MonotoneMap& other) const { return table_ == other.table_; }

 private:
  MonotoneMap() = default;
  PosetRef dom_;
  PosetRef cod_;
  std::vector<int> table_;
};

MonotoneMap identity(const PosetRef& p);
MonotoneMap constant(const PosetRef& dom, const PosetRef& cod, int value);
/// g . f
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

bool is_monotone(const Poset& dom, const Poset& cod, const std::vector<int>& table);

/// Orientation of the order on hom-sets of an order-enriched category.
/// Pos uses the pointwise order; Top0 uses the dual of the pointwise
/// specialisation order.
enum class Enrichment { pointwise, dual_pointwise };

const char* to_string(Enrichment e);

/// f <= g in the given hom-set order (pointwise, or reversed).
bool leq(const MonotoneMap& f, const MonotoneMap& g, Enrichment e);

/// left -| right in the given enrichment: id <= right.left and
/// left.right <= id.
bool is_adjunction(const MonotoneMap& left, const MonotoneMap& right, Enrichment e);

enum class Side { left, right };

/// Side::right looks for g with f -| g, Side::left for g with g -| f, both in
/// the enrichment order `e`. Adjoints are unique when they exist; the
/// pointwise right adjoint is q -> max {p | f(p) <= q}.
std::optional<MonotoneMap> try_adjoint(const MonotoneMap& f, Side side, Enrichment e);

/// Meets, joins and bounds of a finite poset.
struct LatticeOps {
  bool is_lattice = false;
  std::optional<int> top;
  std::optional<int> bottom;

  int meet(int a, int b) const;
  int join(int a, int b) const;
  std::optional<int> try_meet(int a, int b) const { return meet_[index(a, b)]; }
  std::optional<int> try_join(int a, int b) const { return join_[index(a, b)]; }

  int n = 0;
  std::vector<std::optional<int>> meet_;
  std::vector<std::optional<int>> join_;

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n + b; }
};

/// Finite lattices are complete, so is_lattice also means complete lattice.
/// The empty poset is not a lattice.
LatticeOps lattice_ops(const Poset& p);

}  // namespace orderlab
