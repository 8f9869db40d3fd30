#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orderlab/finspace.hpp"
#include "orderlab/poset.hpp"

namespace orderlab {

enum class MonadKind { D, I, F, F1, F2, Fc, AdjoinBounds };
enum class BaseCategory { pos, top0, finite_lattices };

const char* to_string(MonadKind k);
const char* to_string(BaseCategory b);

/// T applied to an object X. Objects of Top0 are handled through their
/// specialisation posets; a finite T0 space is the Alexandrov space of it.
///
/// Payload per kind:
///   D, I         elements[k] is a down-set of X
///   F-family     elements[k] is a filter, as a set of indices into `opens`
///   AdjoinBounds no payload; index 0 is the new bottom, 1..|X| are X, the
///                last index is the new top
struct TObject {
  PosetRef base;
  PosetRef object;
  std::vector<Subset> elements;
  std::vector<Subset> opens;  ///< up-sets of base, F-family only

  int size() const { return object->size(); }
  /// Index of an element payload; -1 if absent.
  int find(const Subset& payload) const;
  /// Index of an open of the base; -1 if not open.
  int find_open(const Subset& u) const;

  std::unordered_map<Subset, int, SubsetHash> element_index;
  std::unordered_map<Subset, int, SubsetHash> open_index;
};

using TObjectRef = std::shared_ptr<const TObject>;

class Monad {
 public:
  explicit Monad(MonadKind kind) : kind_(kind) {}

  MonadKind kind() const { return kind_; }
  std::string name() const { return to_string(kind_); }
  BaseCategory base() const;
  Enrichment enrichment() const;
  bool is_filter_kind() const;
  bool is_kz_expected() const { return kind_ != MonadKind::AdjoinBounds; }

  /// Whether X is an object of the base category.
  bool accepts(const Poset& x) const;

  TObjectRef apply(const PosetRef& x) const;
  MonotoneMap unit(const TObject& tx) const;
  /// m_X : TTX -> TX, where ttx = apply(tx.object).
  MonotoneMap mult(const TObject& tx, const TObject& ttx) const;
  /// Tf : TX -> TY.
  MonotoneMap fmap(const MonotoneMap& f, const TObject& tx, const TObject& ty) const;

 private:
  MonadKind kind_;
};

Monad monad_by_name(const std::string& name);
std::vector<Monad> all_monads();

/// Flags of a filter given as a set of indices into `opens`.
struct FilterFlags {
  bool proper = false;
  bool prime = false;
  bool completely_prime = false;
};
FilterFlags filter_flags(const std::vector<Subset>& opens, const Subset& filter);

/// Up-closed, intersection-closed families of opens containing the full
/// set, as index sets into `opens`; `opens` must be the open family of a
/// finite space sorted by subset_less. Throws SizeCapExceeded past `cap`.
std::vector<Subset> enumerate_filters(const std::vector<Subset>& opens,
                                      std::size_t cap = 200'000);

/// A^# = {phi in TX | A in phi} for an open A of the base.
Subset sharp(const TObject& tx, int open);

/// TX as a space, with the topology generated by the sets A^#.
FinSpace filter_space(const TObject& tx);

/// T, TT and optionally TTT of X with the structure maps between them.
struct Levels {
  TObjectRef t1;  ///< TX
  TObjectRef t2;  ///< TTX
  TObjectRef t3;  ///< TTTX, null when skipped
  MonotoneMap e;     ///< e_X   : X -> TX
  MonotoneMap e_t;   ///< e_TX  : TX -> TTX
  MonotoneMap t_e;   ///< Te_X  : TX -> TTX
  MonotoneMap m;     ///< m_X   : TTX -> TX
  std::optional<MonotoneMap> m_t;  ///< m_TX : TTTX -> TTX
  std::optional<MonotoneMap> t_m;  ///< Tm_X : TTTX -> TTX
};

/// Builds TX and TTX; TTTX only when `third_level_cap` > 0 and |TTX|
/// stays under that cap (the filter family of TTX then is enumerated up to
/// the cap as well).
Levels make_levels(const Monad& t, const PosetRef& x, std::size_t third_level_cap = 0);

struct LawReport {
  bool left_unit = false;   ///< m . Te = id
  bool right_unit = false;  ///< m . eT = id
  std::optional<bool> associative;  ///< m . Tm = m . mT; empty when skipped
  std::string witness;      ///< label of the first failing element
  bool ok() const { return left_unit && right_unit && associative.value_or(true); }
};

LawReport verify_monad_laws(const Monad& t, const Levels& lv);

/// The three Kock-Zoeberlein conditions, read in the monad's enrichment:
/// (i) Te_X <= e_TX, (ii) m_X -| e_TX, (iii) Te_X -| m_X.
struct KzReport {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  bool agree() const { return cond_i == cond_ii && cond_ii == cond_iii; }
};

KzReport verify_kz(const Monad& t, const Levels& lv);

/// Naturality of e and m along f : X -> Y.
bool check_naturality(const Monad& t, const MonotoneMap& f, const Levels& x, const Levels& y);

/// Objects of the base category with at most max_size points, one per
/// isomorphism class.
std::vector<PosetRef> base_objects(const Monad& t, int max_size, int min_size = 0);

struct FaithfulReport {
  bool faithful = true;         ///< Tf <= Tg implies f <= g on all tested pairs
  bool units_order_mono = true;  ///< every tested e_X is order-reflecting
  std::size_t pairs_checked = 0;
};

FaithfulReport is_order_faithful(const Monad& t, int bound);

}  // namespace orderlab
