#include "ualg/subpower.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ualg {

namespace {

int bits_for(int n) {
  unsigned w = std::bit_width(static_cast<unsigned>(n - 1));
  return w == 0 ? 1 : static_cast<int>(w);
}

}  // namespace

Subpower::Subpower(FiniteAlgebra base, int arity)
    : base_(std::move(base)), arity_(arity), bits_(bits_for(base_.size())) {
  if (arity_ < 1) throw std::invalid_argument("subpower arity must be positive");
  if (arity_ * bits_ > 63)
    throw std::invalid_argument("tuple of arity " + std::to_string(arity_) +
                                " over " + std::to_string(base_.size()) +
                                " elements does not pack into a 63-bit key");
}

std::uint64_t Subpower::pack(std::span<const Element> t) const {
  std::uint64_t key = 0;
  for (int c = arity_ - 1; c >= 0; --c)
    key = (key << bits_) | static_cast<std::uint64_t>(t[static_cast<std::size_t>(c)]);
  return key;
}

void Subpower::tuple_into(TupleId id, std::span<Element> out) const {
  std::uint64_t key = keys_[id];
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  for (int c = 0; c < arity_; ++c) {
    out[static_cast<std::size_t>(c)] = static_cast<Element>(key & mask);
    key >>= bits_;
  }
}

Tuple Subpower::tuple(TupleId id) const {
  Tuple out(static_cast<std::size_t>(arity_));
  tuple_into(id, out);
  return out;
}

Element Subpower::entry(TupleId id, int coord) const {
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  return static_cast<Element>((keys_[id] >> (coord * bits_)) & mask);
}

std::optional<TupleId> Subpower::find(std::span<const Element> t) const {
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tuple arity mismatch");
  for (Element v : t)
    if (v < 0 || v >= base_.size()) return std::nullopt;
  const std::uint64_t* hit = index_.find(pack(t));
  if (!hit) return std::nullopt;
  return static_cast<TupleId>(*hit);
}

std::pair<TupleId, bool> Subpower::intern(std::span<const Element> t) {
  std::uint64_t key = pack(t);
  const std::uint64_t* hit = index_.find(key);
  if (hit) return {static_cast<TupleId>(*hit), false};
  TupleId id = static_cast<TupleId>(keys_.size());
  keys_.push_back(key);
  index_.insert(key, id);
  return {id, true};
}

Subpower Subpower::generate(const FiniteAlgebra& algebra, int arity,
                            std::span<const Tuple> generators,
                            const Budget& budget, Observer observer) {
  if (budget.max_insertions == 0 || budget.max_op_applications == 0)
    throw std::invalid_argument("budget limits must be positive");
  Subpower s(algebra, arity);
  const int n = algebra.size();
  const int k = arity;

  for (const Tuple& g : generators) {
    if (static_cast<int>(g.size()) != k)
      throw std::invalid_argument("generator arity mismatch");
    for (Element v : g)
      if (v < 0 || v >= n) throw std::invalid_argument("generator entry out of range");
  }

  bool halted = false;
  // Interns one tuple; insertion budget and observer stops halt generation.
  auto emit = [&](std::span<const Element> t) {
    std::uint64_t key = s.pack(t);
    if (s.index_.find(key)) return;
    if (s.insertions_used_ == budget.max_insertions) {
      s.outcome_ = ClosureOutcome::insertion_budget;
      halted = true;
      return;
    }
    TupleId id = static_cast<TupleId>(s.keys_.size());
    s.keys_.push_back(key);
    s.index_.insert(key, id);
    ++s.insertions_used_;
    if (observer && !observer(id, t)) {
      s.outcome_ = ClosureOutcome::stopped;
      halted = true;
    }
  };

  // Seed: generators are stored unconditionally and in the order given,
  // before any closure-produced tuple; they do not count as insertions.
  for (const Tuple& g : generators) {
    std::uint64_t key = s.pack(g);
    if (s.index_.find(key)) continue;
    TupleId id = static_cast<TupleId>(s.keys_.size());
    s.keys_.push_back(key);
    s.index_.insert(key, id);
    if (observer && !observer(id, g)) {
      s.outcome_ = ClosureOutcome::stopped;
      halted = true;
      break;
    }
  }
  s.generator_count_ = s.keys_.size();

  auto charge_op = [&]() -> bool {
    if (s.ops_used_ == budget.max_op_applications) {
      s.outcome_ = ClosureOutcome::op_budget;
      halted = true;
      return false;
    }
    ++s.ops_used_;
    return true;
  };

  // Nullary operations contribute their constant tuple exactly once.
  for (int op = 0; op < algebra.op_count() && !halted; ++op) {
    if (algebra.arity(op) != 0) continue;
    if (!charge_op()) break;
    Tuple constant(static_cast<std::size_t>(k), algebra.table(op)[0]);
    emit(constant);
  }

  std::vector<Element> frontier(static_cast<std::size_t>(k));
  std::vector<Element> other(static_cast<std::size_t>(k));
  std::vector<Element> out(static_cast<std::size_t>(k));

  // General-arity argument frames: all id combinations over [0..p] that use
  // the frontier id p at least once, in lexicographic order.
  std::vector<TupleId> combo;
  std::vector<std::vector<Element>> args;

  for (TupleId p = 0; !halted && p < s.keys_.size(); ++p) {
    s.tuple_into(p, frontier);
    for (int op = 0; op < algebra.op_count() && !halted; ++op) {
      const int m = algebra.arity(op);
      if (m == 0) continue;
      std::span<const Element> table = algebra.table(op);
      if (m == 1) {
        if (!charge_op()) break;
        for (int c = 0; c < k; ++c)
          out[static_cast<std::size_t>(c)] = table[static_cast<std::size_t>(frontier[static_cast<std::size_t>(c)])];
        emit(out);
      } else if (m == 2) {
        // (j, p) for j < p, then (p, j) for j <= p.
        for (TupleId j = 0; !halted && j < p; ++j) {
          if (!charge_op()) break;
          s.tuple_into(j, other);
          for (int c = 0; c < k; ++c)
            out[static_cast<std::size_t>(c)] =
                table[static_cast<std::size_t>(other[static_cast<std::size_t>(c)] * n + frontier[static_cast<std::size_t>(c)])];
          emit(out);
        }
        for (TupleId j = 0; !halted && j <= p; ++j) {
          if (!charge_op()) break;
          s.tuple_into(j, other);
          for (int c = 0; c < k; ++c)
            out[static_cast<std::size_t>(c)] =
                table[static_cast<std::size_t>(frontier[static_cast<std::size_t>(c)] * n + other[static_cast<std::size_t>(c)])];
          emit(out);
        }
      } else {
        combo.assign(static_cast<std::size_t>(m), 0);
        args.assign(static_cast<std::size_t>(m), std::vector<Element>(static_cast<std::size_t>(k)));
        auto apply_combo = [&]() {
          if (!charge_op()) return;
          for (int c = 0; c < k; ++c) {
            std::size_t idx = 0;
            for (int i = 0; i < m; ++i)
              idx = idx * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(args[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
            out[static_cast<std::size_t>(c)] = table[idx];
          }
          emit(out);
        };
        auto rec = [&](auto&& self, int pos, bool has_frontier) -> void {
          if (halted) return;
          if (pos == m) {
            apply_combo();
            return;
          }
          if (pos == m - 1 && !has_frontier) {
            combo[static_cast<std::size_t>(pos)] = p;
            s.tuple_into(p, args[static_cast<std::size_t>(pos)]);
            self(self, pos + 1, true);
            return;
          }
          for (TupleId j = 0; j <= p; ++j) {
            combo[static_cast<std::size_t>(pos)] = j;
            s.tuple_into(j, args[static_cast<std::size_t>(pos)]);
            self(self, pos + 1, has_frontier || j == p);
            if (halted || j == p) break;
          }
        };
        rec(rec, 0, false);
      }
    }
  }

  if (!halted) s.outcome_ = ClosureOutcome::closed;
  return s;
}

Subpower Subpower::project(std::span<const int> coords) const {
  for (int c : coords)
    if (c < 0 || c >= arity_) throw std::invalid_argument("projection coordinate out of range");
  if (coords.empty()) throw std::invalid_argument("projection needs at least one coordinate");
  Subpower p(base_, static_cast<int>(coords.size()));
  p.outcome_ = outcome_;
  std::vector<Element> full(static_cast<std::size_t>(arity_));
  std::vector<Element> proj(coords.size());
  for (TupleId id = 0; id < keys_.size(); ++id) {
    tuple_into(id, full);
    for (std::size_t i = 0; i < coords.size(); ++i)
      proj[i] = full[static_cast<std::size_t>(coords[i])];
    p.intern(proj);
  }
  return p;
}

FiniteAlgebra Subpower::as_algebra(std::string name, std::size_t max_size) const {
  if (!closed()) throw std::invalid_argument("as_algebra requires a closed subpower");
  const std::size_t m = size();
  if (m == 0) throw std::invalid_argument("as_algebra requires a nonempty subpower");
  if (m > max_size)
    throw std::invalid_argument("subpower too large to materialize as an algebra");

  const FiniteAlgebra& a = base_;
  std::vector<std::vector<Element>> tables;
  std::vector<std::vector<Element>> args;
  std::vector<Element> out(static_cast<std::size_t>(arity_));
  for (int op = 0; op < a.op_count(); ++op) {
    const int ar = a.arity(op);
    std::uint64_t len = 1;
    for (int i = 0; i < ar; ++i) {
      len *= m;
      if (len > (1u << 26)) throw std::invalid_argument("induced table too large");
    }
    std::vector<Element> table(len);
    std::vector<std::size_t> combo(static_cast<std::size_t>(ar), 0);
    args.assign(static_cast<std::size_t>(ar), std::vector<Element>(static_cast<std::size_t>(arity_)));
    for (std::uint64_t idx = 0;; ++idx) {
      for (int i = 0; i < ar; ++i)
        tuple_into(static_cast<TupleId>(combo[static_cast<std::size_t>(i)]), args[static_cast<std::size_t>(i)]);
      for (int c = 0; c < arity_; ++c) {
        std::size_t t = 0;
        for (int i = 0; i < ar; ++i)
          t = t * static_cast<std::size_t>(a.size()) +
              static_cast<std::size_t>(args[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
        out[static_cast<std::size_t>(c)] = a.table(op)[t];
      }
      std::optional<TupleId> hit = find(out);
      if (!hit) throw std::logic_error("closed subpower missing an operation image");
      table[idx] = static_cast<Element>(*hit);
      int i = ar - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == m - 1) combo[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(std::move(name), static_cast<int>(m), a.signature(), std::move(tables));
}

std::string Subpower::serialize() const {
  std::ostringstream outs;
  outs << "subpower k=" << arity_ << " size=" << size() << " closed="
       << (closed() ? "true" : "false") << "\n";
  std::vector<Element> t(static_cast<std::size_t>(arity_));
  for (TupleId id = 0; id < keys_.size(); ++id) {
    tuple_into(id, t);
    for (int c = 0; c < arity_; ++c) outs << (c ? " " : "") << t[static_cast<std::size_t>(c)];
    outs << "\n";
  }
  return outs.str();
}

}  // namespace ualg
