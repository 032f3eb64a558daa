#ifndef UALG_UNION_FIND_HPP
#define UALG_UNION_FIND_HPP

#include <vector>

namespace ualg {

// Disjoint sets over {0..n-1} with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n), -1) {}

  int size() const { return static_cast<int>(parent_.size()); }

  int find(int x) const {
    int root = x;
    while (parent_[root] >= 0) root = parent_[root];
    while (parent_[x] >= 0) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns true when two distinct sets were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (parent_[a] > parent_[b]) std::swap(a, b);  // a keeps the bigger set
    parent_[a] += parent_[b];
    parent_[b] = a;
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }

 private:
  mutable std::vector<int> parent_;  // negative: -size of the set at its root
};

}  // namespace ualg

#endif  // UALG_UNION_FIND_HPP
