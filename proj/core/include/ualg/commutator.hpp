#ifndef UALG_COMMUTATOR_HPP
#define UALG_COMMUTATOR_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/lattice.hpp"
#include "ualg/partition.hpp"
#include "ualg/subpower.hpp"

namespace ualg {

/// Vertex of the k-dimensional 0/1 hypercube. The address string is read as
/// a binary numeral, first place most significant, and that numeral is the
/// coordinate position inside a 2^k-tuple. The last coordinate is the
/// all-ones address, position 2^k - 1.
struct CubeAddress {
  int dimension = 0;
  unsigned bits = 0;  // bit (dimension-1-j) of `bits` holds place j

  static CubeAddress from_index(int dimension, int index) {
    return {dimension, static_cast<unsigned>(index)};
  }
  int index() const { return static_cast<int>(bits); }
  int place(int j) const { return (bits >> (dimension - 1 - j)) & 1u; }
  bool is_last() const { return bits + 1 == (1u << dimension); }
};

/// Generator constant on the two hyperfaces split by direction j: value `u`
/// where place j is 0 and `v` where it is 1.
struct StandardGenerator {
  int dimension = 0;
  int direction = 0;
  Element u = 0;
  Element v = 0;

  Tuple expand() const;
};

/// All standard generators for the given congruence list, one list entry per
/// direction. Ordered by direction, then u, then v ascending; duplicates
/// (the constant tuples shared between directions) are kept and disappear
/// when interned.
std::vector<StandardGenerator> standard_generator_specs(
    const FiniteAlgebra& a, std::span<const Partition> thetas);
std::vector<Tuple> standard_generators(const FiniteAlgebra& a,
                                       std::span<const Partition> thetas);

/// The subalgebra of A^(2^k) generated by the standard generators in all
/// directions; contains the diagonal.
Subpower cube(const FiniteAlgebra& a, std::span<const Partition> thetas,
              const Budget& budget = {});

/// Two cube members that agree at every earlier coordinate but not at the
/// last one.
struct CubeWitness {
  TupleId s_id = 0;
  TupleId t_id = 0;
  Tuple s;
  Tuple t;
  Element s_last = 0;
  Element t_last = 0;
};

enum class Decided {
  exact,           // full closure was reached; the value is the commutator
  zero_test_only,  // stopped at the first collision; value >= witnessed pair
  unknown_budget,  // budget ran out before closure
};

enum class CommutatorMode { exact, zero_test };

struct CommutatorResult {
  Partition value;
  std::vector<CubeWitness> witnesses;
  Decided decided = Decided::exact;
  Subpower cube;

  std::string to_text() const;
};

/// Least congruence containing every last-coordinate collision pair of the
/// cube over `thetas`. Collision detection runs online over the generation
/// observer. zero_test mode stops at the first collision.
CommutatorResult two_term_higher_commutator(const FiniteAlgebra& a,
                                            std::span<const Partition> thetas,
                                            CommutatorMode mode,
                                            const Budget& budget = {});

enum class Verdict { yes, no, unknown };

struct SupernilpotenceResult {
  Verdict verdict = Verdict::unknown;
  std::optional<CubeWitness> witness;
  Subpower cube;  // the (possibly partial) cube that was generated
  std::uint64_t insertions_used = 0;
};

/// Zero test of the (cls+1)-dimensional cube over theta: yes when closure
/// completes with no last-coordinate collision, no with a witness, unknown
/// when the budget runs out first.
SupernilpotenceResult is_supernilpotent(const FiniteAlgebra& a, const Partition& theta,
                                        int cls, const Budget& budget = {});

/// Binary term-condition commutator [alpha, beta]: least delta such that for
/// every m in the 2x2 cube over (alpha, beta), delta-related first rows force
/// delta-related second rows, in both direction orders.
Partition tc_commutator(const FiniteAlgebra& a, const Partition& alpha,
                        const Partition& beta, const Budget& budget = {});

/// Least i <= max_cls with the lower central series [1,[1,...[1,1]]] hitting
/// zero after i steps, or nullopt when it does not within max_cls.
std::optional<int> nilpotence_class(const FiniteAlgebra& a, int max_cls,
                                    const Budget& budget = {});

/// Builds the pair algebra of theta inside A^2 and checks that the two-block
/// split {diagonal, off-diagonal} is one of its congruences.
bool verify_delta_centrality(const FiniteAlgebra& a, const Partition& theta);

}  // namespace ualg

#endif  // UALG_COMMUTATOR_HPP
