#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace ualg::oracles {

namespace {

void grow(std::vector<int>& prefix, int n, int next_label,
          std::vector<Partition>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Partition::from_labels(
        [&] {
          // Restricted growth labels are already first-occurrence minimal.
          std::vector<int> labels(prefix.size());
          std::vector<int> first(prefix.size(), -1);
          for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (first[static_cast<std::size_t>(prefix[i])] < 0)
              first[static_cast<std::size_t>(prefix[i])] = static_cast<int>(i);
            labels[i] = first[static_cast<std::size_t>(prefix[i])];
          }
          return labels;
        }()));
    return;
  }
  for (int lab = 0; lab <= next_label; ++lab) {
    prefix.push_back(lab);
    grow(prefix, n, std::max(next_label, lab + 1), out);
    prefix.pop_back();
  }
}

// All argument tuples of the given arity over {0..n-1}, row-major order.
std::vector<std::vector<Element>> all_arg_tuples(int n, int arity) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> cur(static_cast<std::size_t>(arity), 0);
  while (true) {
    out.push_back(cur);
    int i = arity - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1)
      cur[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

struct GroupOps {
  int mul = -1;
  int inv = -1;
  int id = -1;
};

GroupOps find_group_ops(const FiniteAlgebra& g) {
  GroupOps ops;
  for (int op = 0; op < g.op_count(); ++op) {
    if (g.arity(op) == 2 && ops.mul < 0) ops.mul = op;
    if (g.arity(op) == 1 && ops.inv < 0) ops.inv = op;
    if (g.arity(op) == 0 && ops.id < 0) ops.id = op;
  }
  if (ops.mul < 0 || ops.inv < 0 || ops.id < 0)
    throw std::invalid_argument("not a pure group signature");
  return ops;
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (n == 0) return out;
  prefix.push_back(0);
  grow(prefix, n, 1, out);
  std::sort(out.begin(), out.end(),
            [](const Partition& p, const Partition& q) { return canonical_less(p, q); });
  return out;
}

bool is_compatible(const FiniteAlgebra& a, const Partition& p) {
  for (int op = 0; op < a.op_count(); ++op) {
    const int m = a.arity(op);
    if (m == 0) continue;
    std::vector<std::vector<Element>> tuples = all_arg_tuples(a.size(), m);
    for (const auto& u : tuples) {
      for (const auto& w : tuples) {
        bool related = true;
        for (int i = 0; i < m && related; ++i)
          related = p.related(u[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
        if (!related) continue;
        if (!p.related(a.eval(op, u), a.eval(op, w))) return false;
      }
    }
  }
  return true;
}

std::vector<Partition> brute_congruences(const FiniteAlgebra& a) {
  std::vector<Partition> out;
  for (const Partition& p : all_partitions(a.size()))
    if (is_compatible(a, p)) out.push_back(p);
  return out;
}

bool is_closed_subset(const FiniteAlgebra& a, const Subset& s) {
  for (int op = 0; op < a.op_count(); ++op) {
    if (a.arity(op) == 0 && !s.contains(a.table(op)[0])) return false;
  }
  std::vector<Element> members = s.elements();
  for (int op = 0; op < a.op_count(); ++op) {
    const int m = a.arity(op);
    if (m == 0) continue;
    if (members.empty()) continue;
    std::vector<std::size_t> combo(static_cast<std::size_t>(m), 0);
    std::vector<Element> args(static_cast<std::size_t>(m));
    while (true) {
      for (int i = 0; i < m; ++i)
        args[static_cast<std::size_t>(i)] = members[combo[static_cast<std::size_t>(i)]];
      if (!s.contains(a.eval(op, args))) return false;
      int i = m - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == members.size() - 1)
        combo[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
    }
  }
  return true;
}

std::vector<Subset> brute_subuniverses(const FiniteAlgebra& a) {
  if (a.size() > 20) throw std::invalid_argument("brute subuniverse scan too large");
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    Subset s(a.size());
    for (int x = 0; x < a.size(); ++x)
      if (mask & (1u << x)) s.add(x);
    if (is_closed_subset(a, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](const Subset& x, const Subset& y) { return canonical_less(x, y); });
  return out;
}

Subset derived_subgroup(const FiniteAlgebra& g) {
  GroupOps ops = find_group_ops(g);
  auto mul = [&](Element x, Element y) {
    Element args[] = {x, y};
    return g.eval(ops.mul, args);
  };
  auto inv = [&](Element x) {
    Element args[] = {x};
    return g.eval(ops.inv, args);
  };

  Subset h(g.size());
  h.add(g.eval(ops.id, {}));
  for (Element x = 0; x < g.size(); ++x)
    for (Element y = 0; y < g.size(); ++y)
      h.add(mul(mul(x, y), mul(inv(x), inv(y))));

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Element> members = h.elements();
    for (Element x : members) {
      if (!h.contains(inv(x))) {
        h.add(inv(x));
        changed = true;
      }
      for (Element y : members) {
        if (!h.contains(mul(x, y))) {
          h.add(mul(x, y));
          changed = true;
        }
      }
    }
  }
  return h;
}

std::set<Tuple> naive_closure(const FiniteAlgebra& a, int k,
                              const std::vector<Tuple>& gens) {
  std::set<Tuple> s(gens.begin(), gens.end());
  for (int op = 0; op < a.op_count(); ++op)
    if (a.arity(op) == 0)
      s.insert(Tuple(static_cast<std::size_t>(k), a.table(op)[0]));

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Tuple> members(s.begin(), s.end());
    for (int op = 0; op < a.op_count(); ++op) {
      const int m = a.arity(op);
      if (m == 0 || members.empty()) continue;
      std::vector<std::size_t> combo(static_cast<std::size_t>(m), 0);
      while (true) {
        Tuple out(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) {
          std::vector<Element> args(static_cast<std::size_t>(m));
          for (int i = 0; i < m; ++i)
            args[static_cast<std::size_t>(i)] =
                members[combo[static_cast<std::size_t>(i)]][static_cast<std::size_t>(c)];
          out[static_cast<std::size_t>(c)] = a.eval(op, args);
        }
        if (s.insert(std::move(out)).second) changed = true;
        int i = m - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == members.size() - 1)
          combo[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
      }
    }
  }
  return s;
}

bool group_axioms_hold(const FiniteAlgebra& g) {
  GroupOps ops = find_group_ops(g);
  auto mul = [&](Element x, Element y) {
    Element args[] = {x, y};
    return g.eval(ops.mul, args);
  };
  auto inv = [&](Element x) {
    Element args[] = {x};
    return g.eval(ops.inv, args);
  };
  Element e = g.eval(ops.id, {});
  for (Element x = 0; x < g.size(); ++x) {
    if (mul(x, e) != x || mul(e, x) != x) return false;
    if (mul(x, inv(x)) != e || mul(inv(x), x) != e) return false;
    for (Element y = 0; y < g.size(); ++y)
      for (Element z = 0; z < g.size(); ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
  }
  return true;
}

}  // namespace ualg::oracles
