#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/limits.hpp"
#include "orderlab/poset.hpp"

namespace orderlab {

/// Finite fragments of three categories of spaces, all handled through
/// specialisation posets (finite spaces are Alexandrov):
///   ALat  finite lattices, maps preserving all meets
///   ADom  finite posets with all nonempty meets (the empty poset included),
///         maps preserving them
///   Spec  all finite T0 spaces, continuous maps
enum class CategoryClass { ALat, ADom, Spec };

const char* to_string(CategoryClass c);
CategoryClass category_class_by_name(const std::string& name);

bool is_class_object(CategoryClass c, const Poset& x);
bool is_class_morphism(CategoryClass c, const MonotoneMap& f);

/// Hard cap on |Lambda X| before the double dual is built.
inline constexpr std::size_t kMaxLambda = 12;

/// Lambda X: opens U whose characteristic map X -> S is a morphism of the
/// class. Sorted by subset_less. Throws InvalidInput if X is not an object.
std::vector<Subset> lambda_opens(const Poset& x, CategoryClass c);

struct LambdaCheck {
  bool contains_full = false;
  bool closed_under_intersection = false;
  bool is_base = false;  ///< every open is a union of members
};
LambdaCheck check_lambda(const Poset& x, const std::vector<Subset>& lambda);

/// X^ = monotone families (z_U) over (Lambda X, inclusion) with values in S,
/// and n_X(x) = (chi_U(x))_U.
struct Hat {
  PosetRef x;
  std::vector<Subset> lambda;
  PosetRef lambda_order;
  Cotensor hat;
  MonotoneMap n;
  /// diamond U = {z | z_U = 1}, by index into lambda
  Subset diamond(int u) const;
};

/// Throws SizeCapExceeded when |lambda| > kMaxLambda.
Hat build_hat(const PosetRef& x, std::vector<Subset> lambda);
Hat build_hat(const PosetRef& x, CategoryClass c);

/// U = n^-1(diamond U) for every U in Lambda X, n injective and order
/// reflecting.
bool hat_embedding_ok(const Hat& h);

enum class EqualiserMethod {
  automatic,  ///< enumerate Lambda X^ when small, otherwise extremal opens
  enumerate,  ///< every V in Lambda X^
  extremal    ///< Spec only: V = up(z) and V = X^ minus down(z) decide z
};

struct RegCogenCertificate {
  bool refused = false;
  std::string reason;
  std::size_t lambda_size = 0;
  std::size_t hat_size = 0;
  std::size_t opens_checked = 0;
  std::string method;
  bool cone = false;        ///< alpha . n = beta . n
  bool beta_defined = true; ///< every g . n_X lands in Lambda X
  bool equaliser = false;   ///< n_X is an isomorphism onto the equaliser
  Subset equaliser_set;     ///< as a subset of X^
};

/// Checks that X -> X^ => [Hom(X^, S), S] is an equaliser, with alpha =
/// n_{X^} and beta(z)_g = z_{g . n_X}. `lambda_override` replaces Lambda X
/// (negative controls).
RegCogenCertificate is_regular_cogenerator_instance(
    const PosetRef& x, CategoryClass c, EqualiserMethod method = EqualiserMethod::automatic,
    const std::optional<std::vector<Subset>>& lambda_override = std::nullopt);

/// Lambda X reduced to the opens that cannot separate points: the full set,
/// plus the empty set when the class has it.
std::vector<Subset> corrupted_lambda(const Poset& x, CategoryClass c);

struct UnionConditionReport {
  bool ok = true;
  std::size_t families = 0;    ///< subfamilies of Lambda X examined
  std::size_t applicable = 0;  ///< those whose union lies in Lambda X
  std::size_t trivial = 0;     ///< empty unions
  std::string witness;
};

/// For each union H of members of Lambda X that lies in
/// Lambda X, some H' in Lambda X^ has H = n^-1(H') and H' inside the union
/// of the diamonds.
UnionConditionReport union_condition(const PosetRef& x, CategoryClass c);

struct CogeneratorReport {
  bool detects = true;
  std::size_t pairs = 0;
  std::string witness;
};

/// For class maps f, g : X -> Y between objects of size <= bound, h.f <= h.g
/// for every h : Y -> S in the class implies f <= g.
CogeneratorReport is_order_cogenerator(CategoryClass c, int bound);

struct ClosureReport {
  bool ok = true;
  std::size_t products = 0;
  std::size_t inserters = 0;
  std::size_t cotensors = 0;
  std::string witness;
};

/// Products of pairs, inserters of parallel class maps and cotensors with
/// the 2-chain stay in the class, with class-morphism legs.
ClosureReport closure_under_weighted_limits_check(CategoryClass c, int bound);

/// Class objects with at most max_size points, one per isomorphism class.
std::vector<PosetRef> class_objects(CategoryClass c, int max_size, int min_size = 1);

}  // namespace orderlab
