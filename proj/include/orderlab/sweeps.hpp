#pragma once

#include <string>

#include "orderlab/json_io.hpp"
#include "orderlab/monads.hpp"
#include "orderlab/weighted.hpp"

namespace orderlab {

/// Outcome of an exhaustive sweep; `detail` is deterministic JSON.
struct SweepReport {
  bool holds = true;
  Json detail = Json::object();
};

/// The three KZ conditions agree on every object, and are all true for KZ
/// monads and all false for adjbounds.
SweepReport sweep_kz(const Monad& t, int bound);

/// For every monotone alpha : TX -> X, unit law <=> adjoint to e <=> algebra.
SweepReport sweep_em_adjoint(const Monad& t, int bound);

/// algebra <=> injective wrt units <=> injective wrt M_T <=> Kan-injective
/// wrt M_T, with both classes sampled from objects of size <= bound.
SweepReport sweep_injectivity(const Monad& t, int bound);

/// M_T = T-dense maps that are order-mono, over maps between objects of size
/// <= bound.
SweepReport sweep_mt_identity(const Monad& t, int bound);

/// Every object of size <= bound is Cauchy complete at the probe bound.
/// With algebras_only, only objects carrying an algebra are tested.
SweepReport sweep_cauchy(const Monad& t, int bound, int probe_bound, bool algebras_only = false);

/// Split algebras from algebra enumeration vs the splittings of enumerated
/// kar objects, compared by carrier shape on carriers of size <= bound.
SweepReport sweep_kar(const Monad& t, int bound);

/// is_algebraic_char vs is_algebraic_direct (and Birkhoff for D) on every
/// object of size <= bound carrying an algebra.
SweepReport sweep_char_algebraic(const Monad& t, int bound);

SweepReport sweep_filter_splittings(int bound);

/// Equaliser verified for every class object of size <= bound within the
/// Lambda cap; the corrupted-Lambda control fails on objects with >= 2
/// points; the union condition holds.
SweepReport sweep_regcogen(CategoryClass c, int bound);

/// Default size bound for a law and monad when --max-size is absent.
int default_bound(const std::string& law, const Monad& t);

}  // namespace orderlab
