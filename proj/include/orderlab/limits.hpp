#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orderlab/poset.hpp"

namespace orderlab {

/// An object together with a family of maps out of it.
struct Cone {
  PosetRef apex;
  std::vector<MonotoneMap> legs;
};

/// A subobject given by an order-embedding into a parent.
struct Subobject {
  PosetRef object;
  MonotoneMap inclusion;
};

/// Product with the pointwise order; legs are the projections. The empty
/// product is the one-point poset.
Cone product(const std::vector<PosetRef>& factors);

/// Pairs a family of maps A -> P_k into the product of their codomains.
MonotoneMap pairing(const Cone& prod, const std::vector<MonotoneMap>& maps);

/// {x | f(x) = g(x)} with the induced order.
Subobject equalizer(const MonotoneMap& f, const MonotoneMap& g);
/// {x | f(x) <= g(x)} with the induced order.
Subobject inserter(const MonotoneMap& f, const MonotoneMap& g);

/// The unique u with inclusion . u = k, if k lands in the subobject.
std::optional<MonotoneMap> factor_through(const MonotoneMap& inclusion, const MonotoneMap& k);

/// Monotone maps I -> X under the pointwise order. projections[i] is
/// evaluation at i, so projections[i] <= projections[j] whenever i <= j.
struct Cotensor {
  PosetRef object;
  PosetRef weight;
  PosetRef base;
  std::vector<MonotoneMap> projections;
  std::vector<std::vector<int>> tables;  ///< element k is the map tables[k]
  int element_of(const std::vector<int>& table) const;
};

Cotensor cotensor(const PosetRef& weight, const PosetRef& base);

/// A small category given by its arrows and a composition table.
struct ShapeCategory {
  struct Arrow {
    int source;
    int target;
    std::string name;
  };
  int objects = 0;
  std::vector<Arrow> arrows;
  std::vector<int> identity;             ///< arrow index of id_d
  std::vector<std::vector<int>> compose;  ///< compose[g][f] = g.f, -1 if not composable

  /// Throws InvalidInput if identities or composition are inconsistent.
  void validate() const;

  static ShapeCategory discrete(int n);
  static ShapeCategory unit() { return discrete(1); }
  /// Two objects 0, 1 and two parallel arrows u, v : 0 -> 1.
  static ShapeCategory parallel_pair();
};

/// A functor from a shape into Pos: an object per shape object, a map per
/// shape arrow.
struct PosDiagram {
  std::vector<PosetRef> objects;
  std::vector<MonotoneMap> arrows;
};

struct WeightedLimit {
  PosetRef object;
  /// projections[d][x] is l_d^x : L -> D(d) for x in W(d).
  std::vector<std::vector<MonotoneMap>> projections;
};

/// Limit of `diagram` weighted by `weight`, built as the equaliser of the two
/// comparison maps between products of cotensors. Throws InvalidInput on
/// non-functorial input.
WeightedLimit weighted_limit(const ShapeCategory& shape, const PosDiagram& diagram,
                             const PosDiagram& weight);

/// Constant one-point weight on a shape.
PosDiagram constant_weight(const ShapeCategory& shape);

struct IdempotentSplitting {
  PosetRef object;
  MonotoneMap retraction;  ///< r : X -> Y
  MonotoneMap section;     ///< s : Y -> X, with r.s = id and s.r = e
};

/// Splits an idempotent through its image. Throws InvalidInput if e.e != e.
IdempotentSplitting split_idempotent(const MonotoneMap& e);

/// Coinserter of f, g : X -> Y in Pos: Y modulo the preorder generated by its
/// order and f(x) <= g(x).
struct Quotient {
  PosetRef object;
  MonotoneMap projection;
};
Quotient pos_coinserter(const MonotoneMap& f, const MonotoneMap& g);

/// Tensor I (x) X in Pos, which is I x X; legs[i] : X -> I (x) X, x -> (i, x).
Cone pos_tensor(const PosetRef& weight, const PosetRef& base);

}  // namespace orderlab
