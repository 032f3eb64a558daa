#ifndef UALG_RETRACT_HPP
#define UALG_RETRACT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/commutator.hpp"
#include "ualg/partition.hpp"
#include "ualg/subpower.hpp"

namespace ualg {

/// The standard generators retained for the retract construction: exactly
/// those whose last-coordinate value lies in B.
struct GammaSpec {
  int dimension = 0;  // cls + 1
  std::vector<StandardGenerator> gens;

  std::vector<Tuple> expansions() const;
};

/// Standard generators in all cls+1 directions whose last coordinate lies in
/// `b`; includes every constant tuple with value in `b`.
GammaSpec build_gamma(const FiniteAlgebra& a, const Subset& b, const Partition& theta,
                      int cls);

struct GammaClaimsReport {
  bool last_coordinate_in_b = false;       // (1)
  bool every_b_as_last = false;            // (2)
  bool every_value_at_every_earlier = false;  // (3)
  std::vector<Element> missing_last_values;
  /// (element, earlier coordinate) pairs with no generator covering them.
  std::vector<std::pair<Element, int>> uncovered;

  bool all_pass() const {
    return last_coordinate_in_b && every_b_as_last && every_value_at_every_earlier;
  }
};

/// Checks the three generator-set claims by scanning the expansions: every
/// last entry lies in B, every b in B occurs as a last entry, and every
/// element of A occurs at every earlier coordinate. The third holds exactly
/// when the saturation of B by theta is all of A.
GammaClaimsReport verify_gamma_claims(const FiniteAlgebra& a, const Subset& b,
                                      const Partition& theta, const GammaSpec& gamma);

enum class CertificateVerdict { valid, invalid, undecided };

/// Checkable output of the retract construction. VALID requires a closed mu
/// that is functional on its last coordinate, last-coordinate image exactly
/// B, a subdirect projection D, and the diagonal right inverse.
struct RetractCertificate {
  CertificateVerdict verdict = CertificateVerdict::undecided;
  int cls = 0;
  int dimension = 0;  // cls + 1; the cube has 2^dimension coordinates
  std::size_t gamma_size = 0;
  std::optional<Subpower> mu;  // arity 2^dimension
  bool functional = false;
  std::optional<CubeWitness> functional_violation;
  std::optional<Subset> image_of_last;
  bool image_is_b = false;
  std::optional<Subpower> d;  // arity 2^dimension - 1
  bool subdirect = false;
  bool retraction_verified = false;
  ClosureOutcome budget_state = ClosureOutcome::closed;
  std::string notes;

  std::string to_text() const;
};

/// Runs the construction for a fixed congruence and class: mu is generated
/// from the retained generators with an online functional check, then the
/// projection D and the retraction are verified. Requires the saturation of
/// `b` by `theta` to be all of A (throws otherwise); a functional violation
/// yields INVALID with a witness, budget exhaustion UNDECIDED.
RetractCertificate build_retract(const FiniteAlgebra& a, const Subset& b,
                                 const Partition& theta, int cls,
                                 const Budget& budget = {});

/// Retract representation via the universal congruence: finds the least
/// cls <= max_cls making the full congruence supernilpotent of that class,
/// then runs build_retract with it. UNDECIDED with the collected evidence
/// when no class is found.
RetractCertificate represent_subalgebra(const FiniteAlgebra& a, const Subset& b,
                                        int max_cls = 3, const Budget& budget = {});

}  // namespace ualg

#endif  // UALG_RETRACT_HPP
