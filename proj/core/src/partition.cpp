#include "ualg/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "ualg/union_find.hpp"

namespace ualg {

Partition Partition::from_labels(std::vector<int> labels) {
  const int n = static_cast<int>(labels.size());
  // Scanning ascending, the first carrier of a label is its block minimum.
  std::vector<int> canon(labels.size());
  std::vector<int> remap(labels.size(), -1);
  for (int x = 0; x < n; ++x) {
    int lab = labels[static_cast<std::size_t>(x)];
    if (lab < 0 || lab >= n) throw std::invalid_argument("partition label out of range");
    if (remap[static_cast<std::size_t>(lab)] < 0) remap[static_cast<std::size_t>(lab)] = x;
    canon[static_cast<std::size_t>(x)] = remap[static_cast<std::size_t>(lab)];
  }
  Partition p;
  p.rep_ = std::move(canon);
  return p;
}

Partition Partition::from_pairs(int n,
                                std::span<const std::pair<Element, Element>> pairs) {
  UnionFind uf(n);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("pair element out of range");
    uf.unite(a, b);
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = uf.find(x);
  return from_labels(std::move(labels));
}

Partition Partition::zero(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = x;
  Partition p;
  p.rep_ = std::move(labels);
  return p;
}

Partition Partition::one(int n) {
  Partition p;
  p.rep_.assign(static_cast<std::size_t>(n), 0);
  return p;
}

bool Partition::is_zero() const {
  for (int x = 0; x < size(); ++x)
    if (rep(x) != x) return false;
  return true;
}

bool Partition::is_one() const {
  for (int x = 0; x < size(); ++x)
    if (rep(x) != 0) return false;
  return true;
}

int Partition::block_count() const {
  int count = 0;
  for (int x = 0; x < size(); ++x)
    if (rep(x) == x) ++count;
  return count;
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out;
  std::vector<int> slot(rep_.size(), -1);
  for (int x = 0; x < size(); ++x) {
    int r = rep(x);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(x);
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) throw std::invalid_argument("partition size mismatch");
  for (int x = 0; x < size(); ++x)
    if (!coarser.related(x, rep(x))) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out += '|';
    first_block = false;
    bool first = true;
    for (Element x : block) {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x);
    }
  }
  return out;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition size mismatch");
  const int n = p.size();
  // Common refinement: label by the (p-rep, q-rep) pair.
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (labels[static_cast<std::size_t>(x)] >= 0) continue;
    labels[static_cast<std::size_t>(x)] = x;
    for (int y = x + 1; y < n; ++y)
      if (p.related(x, y) && q.related(x, y)) labels[static_cast<std::size_t>(y)] = x;
  }
  return Partition::from_labels(std::move(labels));
}

Partition join(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition size mismatch");
  const int n = p.size();
  UnionFind uf(n);
  for (int x = 0; x < n; ++x) {
    uf.unite(x, p.rep(x));
    uf.unite(x, q.rep(x));
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = uf.find(x);
  return Partition::from_labels(std::move(labels));
}

bool canonical_less(const Partition& p, const Partition& q) {
  int pb = p.block_count();
  int qb = q.block_count();
  if (pb != qb) return pb > qb;  // finer first
  for (int x = 0; x < p.size() && x < q.size(); ++x) {
    if (p.rep(x) != q.rep(x)) return p.rep(x) < q.rep(x);
  }
  return p.size() < q.size();
}

Subset Subset::of(int universe_size, std::span<const Element> elements) {
  Subset s(universe_size);
  for (Element x : elements) {
    if (x < 0 || x >= universe_size)
      throw std::invalid_argument("subset element out of range");
    s.add(x);
  }
  return s;
}

Subset Subset::full(int universe_size) {
  Subset s(universe_size);
  for (int x = 0; x < universe_size; ++x) s.add(x);
  return s;
}

bool Subset::empty() const {
  for (char m : member_)
    if (m) return false;
  return true;
}

int Subset::count() const {
  int c = 0;
  for (char m : member_) c += (m != 0);
  return c;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  for (int x = 0; x < universe_size(); ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  if (universe_size() != other.universe_size())
    throw std::invalid_argument("subset universe mismatch");
  for (int x = 0; x < universe_size(); ++x)
    if (contains(x) && !other.contains(x)) return false;
  return true;
}

std::string Subset::to_string() const {
  std::string out;
  bool first = true;
  for (Element x : elements()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(x);
  }
  return out;
}

bool canonical_less(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.elements() < b.elements();
}

}  // namespace ualg
