#ifndef UALG_PARTITION_HPP
#define UALG_PARTITION_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ualg {

using Element = int;

/// Equivalence relation on {0..n-1}, stored as one block id per element.
/// The block id of an element is always the minimum element of its block,
/// so equal partitions compare equal and the text form is canonical.
class Partition {
 public:
  Partition() = default;

  /// Takes any element -> label map and renames labels to block minima.
  static Partition from_labels(std::vector<int> labels);

  /// Transitive closure of the given pairs; everything else stays singleton.
  static Partition from_pairs(int n,
                              std::span<const std::pair<Element, Element>> pairs);

  static Partition zero(int n);  // all singletons
  static Partition one(int n);   // a single block

  int size() const { return static_cast<int>(rep_.size()); }
  Element rep(Element x) const { return rep_[static_cast<std::size_t>(x)]; }
  bool related(Element a, Element b) const { return rep(a) == rep(b); }
  bool is_zero() const;
  bool is_one() const;
  int block_count() const;

  /// Blocks ordered by their minimum element, elements ascending.
  std::vector<std::vector<Element>> blocks() const;

  /// Whether *this is finer than (or equal to) `coarser`.
  bool refines(const Partition& coarser) const;

  /// "0 3|1 4|2 5": blocks sorted by minimum, elements space-separated.
  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> rep_;
};

Partition meet(const Partition& p, const Partition& q);
Partition join(const Partition& p, const Partition& q);

/// Total order used whenever partitions are listed: finer partitions first
/// (more blocks), ties broken by the representative vector.
bool canonical_less(const Partition& p, const Partition& q);

/// Subset of {0..n-1} as a membership mask.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe_size)
      : member_(static_cast<std::size_t>(universe_size), 0) {}

  static Subset of(int universe_size, std::span<const Element> elements);
  static Subset full(int universe_size);

  int universe_size() const { return static_cast<int>(member_.size()); }
  bool contains(Element x) const { return member_[static_cast<std::size_t>(x)] != 0; }
  void add(Element x) { member_[static_cast<std::size_t>(x)] = 1; }
  bool empty() const;
  int count() const;
  std::vector<Element> elements() const;
  bool is_subset_of(const Subset& other) const;

  /// Elements ascending, space-separated: "0 3".
  std::string to_string() const;

  bool operator==(const Subset&) const = default;

 private:
  std::vector<char> member_;
};

/// Order used when subsets are listed: fewer elements first, then contents.
bool canonical_less(const Subset& a, const Subset& b);

}  // namespace ualg

#endif  // UALG_PARTITION_HPP
