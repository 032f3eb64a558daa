#ifndef UALG_Z6_EXAMPLE_HPP
#define UALG_Z6_EXAMPLE_HPP

#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"
#include "ualg/subpower.hpp"

namespace ualg {

// Verification suite for the builtin "paper-z6" algebra: a Z6 expansion that
// is 2-step nilpotent but not supernilpotent, and whose two-element
// subalgebra is not a quotient of any finite subdirect power. The checks
// here replay its lattices, nilpotence data, the non-supernilpotence
// witness search, and the ideal obstruction via the 3-Sylow slice.

/// Whether `a` lives on Z6 with "+" interpreted as addition mod 6.
bool is_z6_expansion(const FiniteAlgebra& a);

/// The image of a subpower under the idempotent term e(x) = 4x, which picks
/// out the Sylow 3-subgroup of the additive reduct coordinatewise.
struct SylowSlice {
  std::vector<Tuple> v3;  // members, sorted
  int dim = 0;            // |v3| == 3^dim
};

/// Applies e componentwise to every member of `d`. When `d` is subdirect the
/// result is subdirect over {0,2,4} in every coordinate (checked).
SylowSlice sylow3(const FiniteAlgebra& a, const Subpower& d);

enum class SplitPolarity { lex_min, lex_max };

/// Splits v3 \ {0} into negation orbits {t, -t} and picks one member per
/// orbit: the lexicographically smaller tuple under lex_min, the other
/// under lex_max.
struct PlusMinusSplit {
  std::vector<Tuple> p;
  std::vector<Tuple> minus_p;
};
PlusMinusSplit plus_minus_split(const FiniteAlgebra& a, const SylowSlice& slice,
                                SplitPolarity polarity = SplitPolarity::lex_min);

struct SumIdentityReport {
  bool sum_matches = false;       // sum over P of s(t) equals the constant c tuple
  bool counts_match = false;      // off-kernel count is 2*3^(dim-1) per coordinate
  Tuple sum;
  Tuple expected;
  std::vector<std::size_t> off_kernel_counts;
  std::size_t expected_off_kernel = 0;
  bool ok() const { return sum_matches && counts_match; }
};

/// Computes sum over P of s(t) under the componentwise operations and checks
/// it equals (c,...,c); also checks the per-coordinate kernel counting.
/// Holds for either split polarity.
SumIdentityReport verify_sum_identity(const FiniteAlgebra& a, const Subpower& d,
                                      SplitPolarity polarity = SplitPolarity::lex_min);

struct IdealObstructionReport {
  bool ok = false;
  bool vacuous = false;   // no two-class congruence had V3 inside its 0-class
  int two_class_congruences = 0;
  int applicable = 0;     // those with V3 inside the 0-class
  std::vector<std::string> details;
};

/// For every congruence of D (as an abstract algebra) with exactly two
/// classes whose 0-class contains V3(D), checks that the class also contains
/// the constant tuple c^D; such quotients therefore satisfy c = 0.
IdealObstructionReport verify_ideal_obstruction(const FiniteAlgebra& a, const Subpower& d,
                                                std::size_t bound = 64);

enum class CheckStatus { pass, fail, undecided };

struct ExampleCheck {
  std::string section;
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string evidence;
};

struct ExampleReport {
  std::vector<ExampleCheck> checks;
  bool all_ok() const;
  std::string to_text() const;
};

/// Runs the whole suite against the builtin algebra: lattice shapes,
/// nilpotence data, direct indecomposability, the budgeted supernilpotence
/// witness search, and the sum-identity / ideal-obstruction checks over the
/// fixed sample of subdirect squares.
ExampleReport verify_z6_example(const Budget& budget = {});

}  // namespace ualg

#endif  // UALG_Z6_EXAMPLE_HPP
