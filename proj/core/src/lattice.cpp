#include "ualg/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ualg/union_find.hpp"

namespace ualg {

namespace {

// Iterates all frames of `arity - 1` elements (everything but `position`)
// and hands the callback a mutable argument vector with the frame filled in.
template <typename F>
void for_each_frame(int n, int arity, int position, std::vector<Element>& args, F&& body) {
  // Odometer over the non-`position` slots.
  for (int i = 0; i < arity; ++i) args[static_cast<std::size_t>(i)] = 0;
  while (true) {
    body(args);
    int i = arity - 1;
    while (i >= 0) {
      if (i == position) { --i; continue; }
      if (args[static_cast<std::size_t>(i)] < n - 1) { ++args[static_cast<std::size_t>(i)]; break; }
      args[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace

bool is_congruence(const FiniteAlgebra& a, const Partition& theta) {
  if (theta.size() != a.size()) throw std::invalid_argument("partition size mismatch");
  const int n = a.size();
  std::vector<Element> args;
  std::vector<Element> args_b;
  for (int op = 0; op < a.op_count(); ++op) {
    const int m = a.arity(op);
    if (m == 0) continue;
    args.assign(static_cast<std::size_t>(m), 0);
    args_b.assign(static_cast<std::size_t>(m), 0);
    for (int pos = 0; pos < m; ++pos) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
          if (!theta.related(x, y)) continue;
          bool ok = true;
          for_each_frame(n, m, pos, args, [&](std::vector<Element>& frame) {
            if (!ok) return;
            frame[static_cast<std::size_t>(pos)] = x;
            Element rx = a.eval(op, frame);
            frame[static_cast<std::size_t>(pos)] = y;
            Element ry = a.eval(op, frame);
            if (!theta.related(rx, ry)) ok = false;
          });
          if (!ok) return false;
        }
      }
    }
  }
  return true;
}

Partition congruence_generated(const FiniteAlgebra& a,
                               std::span<const std::pair<Element, Element>> pairs) {
  const int n = a.size();
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> worklist;
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("pair element out of range");
    if (uf.unite(x, y)) worklist.emplace_back(x, y);
  }

  std::vector<Element> args;
  while (!worklist.empty()) {
    auto [x, y] = worklist.back();
    worklist.pop_back();
    for (int op = 0; op < a.op_count(); ++op) {
      const int m = a.arity(op);
      if (m == 0) continue;
      args.assign(static_cast<std::size_t>(m), 0);
      for (int pos = 0; pos < m; ++pos) {
        for_each_frame(n, m, pos, args, [&](std::vector<Element>& frame) {
          frame[static_cast<std::size_t>(pos)] = x;
          Element rx = a.eval(op, frame);
          frame[static_cast<std::size_t>(pos)] = y;
          Element ry = a.eval(op, frame);
          if (uf.unite(rx, ry)) worklist.emplace_back(rx, ry);
        });
      }
    }
  }

  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = uf.find(x);
  return Partition::from_labels(std::move(labels));
}

std::vector<Partition> congruence_lattice(const FiniteAlgebra& a, int size_bound) {
  const int n = a.size();
  if (n > size_bound)
    throw std::invalid_argument("congruence_lattice: size " + std::to_string(n) +
                                " exceeds bound " + std::to_string(size_bound));

  auto cmp = [](const Partition& p, const Partition& q) { return canonical_less(p, q); };
  std::set<Partition, decltype(cmp)> cons(cmp);
  cons.insert(Partition::zero(n));

  std::vector<Partition> fresh;
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      std::pair<Element, Element> seed[] = {{x, y}};
      Partition p = congruence_generated(a, seed);
      if (cons.insert(p).second) fresh.push_back(p);
    }

  // Join closure: congruences are exactly the joins of principal ones.
  while (!fresh.empty()) {
    Partition p = std::move(fresh.back());
    fresh.pop_back();
    std::vector<Partition> added;
    for (const Partition& q : cons) {
      Partition j = join(p, q);
      if (!cons.count(j)) added.push_back(std::move(j));
    }
    for (Partition& j : added) {
      if (cons.insert(j).second) fresh.push_back(std::move(j));
    }
  }

  return {cons.begin(), cons.end()};
}

Subset subuniverse_closure(const FiniteAlgebra& a, const Subset& seed) {
  if (seed.universe_size() != a.size()) throw std::invalid_argument("subset universe mismatch");
  Subset closed = seed;
  for (int op = 0; op < a.op_count(); ++op)
    if (a.arity(op) == 0) closed.add(a.table(op)[0]);

  bool changed = true;
  std::vector<Element> args;
  while (changed) {
    changed = false;
    std::vector<Element> members = closed.elements();
    for (int op = 0; op < a.op_count(); ++op) {
      const int m = a.arity(op);
      if (m == 0) continue;
      args.assign(static_cast<std::size_t>(m), 0);
      std::vector<std::size_t> combo(static_cast<std::size_t>(m), 0);
      if (members.empty()) continue;
      while (true) {
        for (int i = 0; i < m; ++i)
          args[static_cast<std::size_t>(i)] = members[combo[static_cast<std::size_t>(i)]];
        Element r = a.eval(op, args);
        if (!closed.contains(r)) {
          closed.add(r);
          changed = true;
        }
        int i = m - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == members.size() - 1)
          combo[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
      }
    }
  }
  return closed;
}

bool is_subuniverse(const FiniteAlgebra& a, const Subset& s) {
  return subuniverse_closure(a, s) == s;
}

std::vector<Subset> all_subuniverses(const FiniteAlgebra& a, int size_bound) {
  const int n = a.size();
  if (n > size_bound)
    throw std::invalid_argument("all_subuniverses: size " + std::to_string(n) +
                                " exceeds bound " + std::to_string(size_bound));

  auto cmp = [](const Subset& x, const Subset& y) { return canonical_less(x, y); };
  std::set<Subset, decltype(cmp)> found(cmp);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Subset s(n);
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) s.add(x);
    found.insert(subuniverse_closure(a, s));
  }
  return {found.begin(), found.end()};
}

Subset saturation(const FiniteAlgebra& a, const Subset& b, const Partition& theta) {
  if (b.universe_size() != a.size() || theta.size() != a.size())
    throw std::invalid_argument("size mismatch");
  if (!is_congruence(a, theta)) throw std::invalid_argument("saturation by a non-congruence");
  Subset out(a.size());
  for (int x = 0; x < a.size(); ++x) {
    if (!b.contains(x)) continue;
    for (int y = 0; y < a.size(); ++y)
      if (theta.related(x, y)) out.add(y);
  }
  if (is_subuniverse(a, b) && !is_subuniverse(a, out))
    throw std::logic_error("saturation of a subuniverse failed to be one");
  return out;
}

bool is_subdirect(const FiniteAlgebra& a, const Subpower& d) {
  if (d.base().size() != a.size()) throw std::invalid_argument("base size mismatch");
  const int n = a.size();
  for (int c = 0; c < d.arity(); ++c) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (TupleId id = 0; id < d.size() && count < n; ++id) {
      Element v = d.entry(id, c);
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++count;
      }
    }
    if (count < n) return false;
  }
  return true;
}

std::optional<long long> class_index(const Partition& coarser, const Partition& finer) {
  if (coarser.size() != finer.size()) throw std::invalid_argument("partition size mismatch");
  if (!finer.refines(coarser))
    throw std::invalid_argument("class_index requires finer <= coarser");
  // Count finer-blocks inside each coarser-block.
  std::vector<long long> counts(static_cast<std::size_t>(coarser.size()), 0);
  for (int x = 0; x < finer.size(); ++x)
    if (finer.rep(x) == x) ++counts[static_cast<std::size_t>(coarser.rep(x))];
  std::optional<long long> ratio;
  for (int x = 0; x < coarser.size(); ++x) {
    if (coarser.rep(x) != x) continue;
    long long c = counts[static_cast<std::size_t>(x)];
    if (!ratio) ratio = c;
    else if (*ratio != c) return std::nullopt;
  }
  return ratio;
}

namespace {

// Whether alpha o beta is the full relation A x A.
bool composition_full(const Partition& alpha, const Partition& beta) {
  const int n = alpha.size();
  for (int x = 0; x < n; ++x) {
    std::vector<char> reach(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (int y = 0; y < n; ++y) {
      if (!alpha.related(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (beta.related(y, z) && !reach[static_cast<std::size_t>(z)]) {
          reach[static_cast<std::size_t>(z)] = 1;
          ++count;
        }
      }
    }
    if (count < n) return false;
  }
  return true;
}

}  // namespace

DecomposabilityResult is_directly_indecomposable(const FiniteAlgebra& a, int size_bound) {
  std::vector<Partition> cons = congruence_lattice(a, size_bound);
  const Partition zero = Partition::zero(a.size());
  const Partition one = Partition::one(a.size());
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const Partition& alpha = cons[i];
    if (alpha == zero || alpha == one) continue;
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const Partition& beta = cons[j];
      if (beta == zero || beta == one) continue;
      if (!meet(alpha, beta).is_zero()) continue;
      if (!join(alpha, beta).is_one()) continue;
      if (!composition_full(alpha, beta)) continue;
      return {false, std::make_pair(alpha, beta)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace ualg
