#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/algebras.hpp"
#include "orderlab/limits.hpp"
#include "orderlab/monads.hpp"

namespace orderlab {

using LevelsRef = std::shared_ptr<const Levels>;

/// TX and TTX of X, shared between the arrows that touch X.
LevelsRef kleisli_object(const Monad& t, const PosetRef& x);

/// r : X -o Y, stored as the base map X -> TY.
struct KleisliArrow {
  LevelsRef dom;
  LevelsRef cod;
  MonotoneMap map;
};

KleisliArrow kleisli_identity(const LevelsRef& x);
/// s . r = m_Z . Ts . r
KleisliArrow kleisli_compose(const Monad& t, const KleisliArrow& s, const KleisliArrow& r);
/// f_* = e_Y . f
KleisliArrow to_kleisli(const MonotoneMap& f, const LevelsRef& x, const LevelsRef& y);

/// The algebra map m_Y . Tr : TX -> TY corresponding to r.
MonotoneMap kleisli_extension(const Monad& t, const KleisliArrow& r);

/// r -| s: e_X <= s . r and r . s <= e_Y in the enrichment order.
bool kleisli_adjunction(const Monad& t, const KleisliArrow& r, const KleisliArrow& s);

/// The Kleisli right adjoint of r, if any. Computed from the base right
/// adjoint g of the extension of r as s = g . e_Y, then verified.
std::optional<KleisliArrow> kleisli_right_adjoint(const Monad& t, const KleisliArrow& r);

/// All Kleisli arrows X -o Y.
std::vector<KleisliArrow> kleisli_arrows(const LevelsRef& x, const LevelsRef& y);

/// Tf has a right adjoint in the enrichment order.
bool is_T_dense(const Monad& t, const MonotoneMap& f, const TObject& tx, const TObject& ty);
bool is_T_dense(const Monad& t, const MonotoneMap& f);
/// f_* has a Kleisli right adjoint, decided by exhaustive search over all
/// Kleisli arrows Y -o X.
bool is_T_dense_by_search(const Monad& t, const MonotoneMap& f);

/// Th has a right adjoint g with g . Th = id.
bool in_M_T(const Monad& t, const MonotoneMap& h, const TObject& tx, const TObject& ty);
bool in_M_T(const Monad& t, const MonotoneMap& h);

struct CauchyReport {
  bool complete = true;
  std::size_t left_adjoints = 0;  ///< Kleisli left adjoints into Y that were tested
  std::string witness;            ///< probe and arrow of the first failure
};

/// Every Kleisli left adjoint r : X -o Y with |X| <= probe_bound lies in
/// the image of e_Y, i.e. is f_* for a base map f.
CauchyReport is_cauchy_complete(const Monad& t, const PosetRef& y, int probe_bound = 3);

/// (X, t) with t . t = t in the Kleisli category and t <= e_X.
struct KarObject {
  LevelsRef x;
  MonotoneMap t;
};

/// Throws InvalidInput unless t is a Kleisli idempotent below e_X.
void validate_kar(const Monad& t, const KarObject& k);

struct SplitKar {
  IdempotentSplitting split;  ///< of the extension of t on TX
  Algebra algebra;
  std::optional<Splitting> splitting;
};

/// Splits the idempotent algebra map m_X . Tt on TX and equips the image
/// with the algebra structure r . m_X . Ts.
SplitKar split_kar(const Monad& t, const KarObject& k);

/// Definitional kar isomorphism: a : X -o X', b : X' -o X with
/// t'.a.t = a, t.b.t' = b, b.a = t, a.b = t'.
bool kar_isomorphic(const Monad& t, const KarObject& a, const KarObject& b);

/// All kar objects over base objects of size <= size_bound, one per kar
/// isomorphism class. Candidates are bucketed by the iso class of their
/// split object before the definitional test runs.
std::vector<KarObject> enumerate_kar(const Monad& t, int size_bound);

}  // namespace orderlab
