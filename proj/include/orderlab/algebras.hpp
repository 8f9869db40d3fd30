#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/monads.hpp"

namespace orderlab {

/// An Eilenberg-Moore algebra alpha : TX -> X together with the levels of X
/// it was found on.
struct Algebra {
  Monad monad;
  Levels levels;
  MonotoneMap structure;

  const PosetRef& carrier() const { return levels.t1->base; }
};

/// Which of the equivalent descriptions of an algebra structure a candidate
/// map satisfies.
struct AlgebraCheck {
  bool unit_law = false;     ///< alpha . e = id
  bool adjoint = false;      ///< alpha -| e in the enrichment order
  bool associative = false;  ///< alpha . T alpha = alpha . m
  bool is_algebra() const { return unit_law && associative; }
};

AlgebraCheck check_algebra(const Monad& t, const Levels& lv, const MonotoneMap& alpha);

/// For KZ monads: the left adjoint of e_X, kept iff alpha . e = id and the
/// associativity square commutes. For the non-KZ adjoin-bounds monad the
/// first structure satisfying both laws in map enumeration order.
std::optional<Algebra> find_algebra_structure(const Monad& t, Levels lv);
std::optional<Algebra> find_algebra_structure(const Monad& t, const PosetRef& x);

/// The free algebra (TY, m_Y).
Algebra free_algebra(const Monad& t, const PosetRef& y);

/// beta . Tf = f . alpha
bool is_homomorphism(const MonotoneMap& f, const Algebra& a, const Algebra& b);

struct LeftAdjointReport {
  std::size_t adjoints_checked = 0;
  std::size_t failures = 0;
  std::string witness;
  bool ok() const { return failures == 0; }
};

/// Every map between algebras with carriers of size <= bound that is a left
/// adjoint in the enrichment order is a homomorphism.
LeftAdjointReport check_left_adjoints_are_homs(const Monad& t, int bound);

/// Monotone maps X -> Y ordered by the enrichment; element k is tables[k].
struct HomPoset {
  PosetRef object;
  std::vector<std::vector<int>> tables;
  int index_of(const std::vector<int>& table) const;
};
HomPoset hom_poset(const PosetRef& x, const PosetRef& y, Enrichment e);

/// Every g : X -> A extends along h : X -> Y.
bool is_injective_wrt(const PosetRef& a, const MonotoneMap& h);
bool is_injective_wrt(const PosetRef& a, const std::vector<MonotoneMap>& maps);

/// The restriction map X(h, A) : X(Y, A) -> X(X, A) has a left adjoint that
/// it retracts, in the hom-set order given by e.
bool is_kan_injective(const PosetRef& a, const MonotoneMap& h, Enrichment e);
bool is_kan_injective(const PosetRef& a, const std::vector<MonotoneMap>& maps, Enrichment e);

/// f : A -> B with both ends Kan-injective w.r.t. h, and the left adjoints
/// commute with composition by f.
bool is_kan_injective_morphism(const MonotoneMap& f, const MonotoneMap& h, Enrichment e);

struct Splitting {
  MonotoneMap t;  ///< t : X -> TX, t -| alpha
  bool alpha_t_id = false;
  bool t_below_e = false;
  bool kleisli_idempotent = false;
  bool homomorphism = false;  ///< t : (X, alpha) -> (TX, m_X)
  bool valid() const { return alpha_t_id && t_below_e && kleisli_idempotent && homomorphism; }
};

std::optional<Splitting> find_splitting(const Algebra& a);

struct AlgebraicWitness {
  PosetRef y;
  MonotoneMap iso;  ///< TY -> X, an algebra isomorphism (TY, m_Y) -> A
};

/// Searches base objects Y with |Y| <= size_bound for an algebra
/// isomorphism (TY, m_Y) ~ A. A negative size_bound means |A|.
std::optional<AlgebraicWitness> is_algebraic_direct(const Algebra& a, int size_bound = -1);

struct AlgebraicCertificate {
  enum class Status { not_split, algebraic, not_algebraic };
  Status status = Status::not_split;
  PosetRef a0;                           ///< equaliser of e_X and t
  std::optional<MonotoneMap> inclusion;  ///< i : A0 -> X
  bool t_preserves_mono = false;         ///< Ti is order-reflecting
  bool dense = false;                    ///< i is T-dense
  bool surjective = false;               ///< alpha . Ti is onto
  bool epi_by_probe = false;             ///< no probe into posets of size <= 2 separates
  bool verdict() const { return status == Status::algebraic; }
};

AlgebraicCertificate is_algebraic_char(const Algebra& a);

/// Maps h between base objects of size <= bound with Th left adjoint to a
/// retraction, plus the units e_X for |X| <= unit_bound.
std::vector<MonotoneMap> m_t_sample(const Monad& t, int bound, int unit_bound);

}  // namespace orderlab
