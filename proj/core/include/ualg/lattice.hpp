#ifndef UALG_LATTICE_HPP
#define UALG_LATTICE_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"
#include "ualg/subpower.hpp"

namespace ualg {

/// Whether every operation maps theta-related argument frames to
/// theta-related results.
bool is_congruence(const FiniteAlgebra& a, const Partition& theta);

/// Least congruence containing the given pairs: merge-find plus a worklist
/// of merged pairs, re-scanning every operation, argument position and
/// frame per merge.
Partition congruence_generated(const FiniteAlgebra& a,
                               std::span<const std::pair<Element, Element>> pairs);

/// All congruences of `a`: the join closure of the principal congruences
/// plus the zero partition, in canonical order. Guarded by `size_bound`.
std::vector<Partition> congruence_lattice(const FiniteAlgebra& a, int size_bound = 64);

/// Least subset containing `seed`, every constant, and closed under all
/// operations.
Subset subuniverse_closure(const FiniteAlgebra& a, const Subset& seed);

bool is_subuniverse(const FiniteAlgebra& a, const Subset& s);

/// Every closed subset, in canonical order. The empty set appears only when
/// the signature has no constants. Guarded by `size_bound`.
std::vector<Subset> all_subuniverses(const FiniteAlgebra& a, int size_bound = 12);

/// Union of the theta-classes meeting `b`. When `b` is a subuniverse the
/// result is one as well (checked).
Subset saturation(const FiniteAlgebra& a, const Subset& b, const Partition& theta);

/// Whether every coordinate projection of `d` is the full universe.
bool is_subdirect(const FiniteAlgebra& a, const Subpower& d);

/// Number of `finer`-classes inside each `coarser`-class, when uniform.
/// Requires finer <= coarser.
std::optional<long long> class_index(const Partition& coarser, const Partition& finer);

struct DecomposabilityResult {
  bool indecomposable = true;
  /// A complementary permuting pair of nontrivial congruences, when found.
  std::optional<std::pair<Partition, Partition>> witness;
};

/// Searches Con(a) for nontrivial alpha, beta with meet 0, join 1, and
/// alpha o beta the full relation.
DecomposabilityResult is_directly_indecomposable(const FiniteAlgebra& a,
                                                 int size_bound = 64);

}  // namespace ualg

#endif  // UALG_LATTICE_HPP
