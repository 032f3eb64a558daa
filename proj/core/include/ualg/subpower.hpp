#ifndef UALG_SUBPOWER_HPP
#define UALG_SUBPOWER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/detail/key_index.hpp"

namespace ualg {

using TupleId = std::uint32_t;

/// Resource caps for a single closure run. Insertions count tuples created
/// by operation applications; the generator seed is always stored.
struct Budget {
  std::uint64_t max_insertions = 10'000'000;
  std::uint64_t max_op_applications = 1'000'000'000;
};

enum class ClosureOutcome {
  closed,             // natural termination, result is a subalgebra
  insertion_budget,   // stopped before inserting past the cap
  op_budget,          // stopped mid-pass on the application cap
  stopped,            // an observer asked to stop
};

/// Called once per newly interned tuple, in insertion order (ids strictly
/// increasing, generators included). Return false to stop generation.
using Observer = std::function<bool(TupleId, std::span<const Element>)>;

/// A set of k-tuples over a finite algebra, interned into a dense id space.
/// Built by worklist closure from generators; when `closed()` the store is a
/// subuniverse of A^k. Completed instances are immutable.
///
/// Tuples pack into one 64-bit key (ceil(log2 n) bits per coordinate), which
/// bounds k*bits to 63; that covers every desk-scale cube this tool targets.
class Subpower {
 public:
  /// Worklist closure over the generators. Deterministic iteration order:
  /// tuples by id ascending, operations in signature order, argument id
  /// combinations lexicographic. Nullary operations are applied once after
  /// the seed. The result is flagged closed only on natural termination.
  static Subpower generate(const FiniteAlgebra& algebra, int arity,
                           std::span<const Tuple> generators,
                           const Budget& budget = {}, Observer observer = {});

  const FiniteAlgebra& base() const { return base_; }
  int arity() const { return arity_; }
  std::size_t size() const { return keys_.size(); }
  bool closed() const { return outcome_ == ClosureOutcome::closed; }
  ClosureOutcome outcome() const { return outcome_; }
  std::size_t generator_count() const { return generator_count_; }
  std::uint64_t insertions_used() const { return insertions_used_; }
  std::uint64_t op_applications_used() const { return ops_used_; }

  Tuple tuple(TupleId id) const;
  void tuple_into(TupleId id, std::span<Element> out) const;
  Element entry(TupleId id, int coord) const;

  std::optional<TupleId> find(std::span<const Element> t) const;
  bool contains(std::span<const Element> t) const { return find(t).has_value(); }

  /// Deduplicated projection onto the given coordinates, in id order.
  /// The projection of a closed subpower is closed.
  Subpower project(std::span<const int> coords) const;

  /// The store as an abstract algebra: element i is tuple i, operations act
  /// componentwise. Requires closed() and a small store.
  FiniteAlgebra as_algebra(std::string name, std::size_t max_size = 1024) const;

  /// "subpower k=<k> size=<m> closed=<bool>" then one tuple per line.
  std::string serialize() const;

 private:
  Subpower(FiniteAlgebra base, int arity);

  std::uint64_t pack(std::span<const Element> t) const;
  // Interns a tuple, returns (id, inserted).
  std::pair<TupleId, bool> intern(std::span<const Element> t);

  FiniteAlgebra base_;
  int arity_ = 0;
  int bits_ = 1;                     // bits per coordinate in the packed key
  std::vector<std::uint64_t> keys_;  // packed tuples in insertion order
  detail::KeyIndex index_;
  ClosureOutcome outcome_ = ClosureOutcome::closed;
  std::size_t generator_count_ = 0;
  std::uint64_t insertions_used_ = 0;
  std::uint64_t ops_used_ = 0;
};

}  // namespace ualg

#endif  // UALG_SUBPOWER_HPP
