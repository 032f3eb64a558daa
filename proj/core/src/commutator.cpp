#include "ualg/commutator.hpp"

#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ualg/detail/key_index.hpp"

namespace ualg {

namespace {

int bits_for(int n) {
  unsigned w = std::bit_width(static_cast<unsigned>(n - 1));
  return w == 0 ? 1 : static_cast<int>(w);
}

std::string format_tuple(std::span<const Element> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  out += ")";
  return out;
}

}  // namespace

Tuple StandardGenerator::expand() const {
  const int coords = 1 << dimension;
  Tuple t(static_cast<std::size_t>(coords));
  for (int idx = 0; idx < coords; ++idx) {
    CubeAddress addr = CubeAddress::from_index(dimension, idx);
    t[static_cast<std::size_t>(idx)] = addr.place(direction) ? v : u;
  }
  return t;
}

std::vector<StandardGenerator> standard_generator_specs(
    const FiniteAlgebra& a, std::span<const Partition> thetas) {
  const int dim = static_cast<int>(thetas.size());
  if (dim < 1) throw std::invalid_argument("at least one congruence required");
  for (const Partition& theta : thetas)
    if (!is_congruence(a, theta))
      throw std::invalid_argument("standard generators need congruences");

  std::vector<StandardGenerator> out;
  for (int j = 0; j < dim; ++j) {
    const Partition& theta = thetas[static_cast<std::size_t>(j)];
    for (Element u = 0; u < a.size(); ++u)
      for (Element v = 0; v < a.size(); ++v)
        if (theta.related(u, v)) out.push_back({dim, j, u, v});
  }
  return out;
}

std::vector<Tuple> standard_generators(const FiniteAlgebra& a,
                                       std::span<const Partition> thetas) {
  std::vector<Tuple> out;
  for (const StandardGenerator& g : standard_generator_specs(a, thetas))
    out.push_back(g.expand());
  return out;
}

Subpower cube(const FiniteAlgebra& a, std::span<const Partition> thetas,
              const Budget& budget) {
  std::vector<Tuple> gens = standard_generators(a, thetas);
  return Subpower::generate(a, 1 << thetas.size(), gens, budget);
}

CommutatorResult two_term_higher_commutator(const FiniteAlgebra& a,
                                            std::span<const Partition> thetas,
                                            CommutatorMode mode,
                                            const Budget& budget) {
  const int dim = static_cast<int>(thetas.size());
  if (dim < 2) throw std::invalid_argument("higher commutator needs dimension >= 2");
  const int coords = 1 << dim;
  const int bits = bits_for(a.size());

  // Earlier-coordinates prefix -> (first id, its last value). Keys pack the
  // prefix exactly, so a hit is a true prefix match.
  detail::KeyIndex prefix_index(1024);
  std::vector<CubeWitness> witnesses;
  std::set<std::pair<Element, Element>> value_pairs;
  constexpr std::size_t kMaxStoredWitnesses = 64;

  auto observer = [&](TupleId id, std::span<const Element> t) -> bool {
    std::uint64_t prefix = 0;
    for (int c = coords - 2; c >= 0; --c)
      prefix = (prefix << bits) | static_cast<std::uint64_t>(t[static_cast<std::size_t>(c)]);
    Element last = t[static_cast<std::size_t>(coords - 1)];
    const std::uint64_t* hit = prefix_index.find(prefix);
    if (!hit) {
      prefix_index.insert(prefix,
                          (static_cast<std::uint64_t>(id) << 32) |
                              static_cast<std::uint64_t>(static_cast<std::uint32_t>(last)));
      return true;
    }
    TupleId first_id = static_cast<TupleId>(*hit >> 32);
    Element first_last = static_cast<Element>(static_cast<std::uint32_t>(*hit));
    if (first_last == last) return true;
    value_pairs.emplace(std::min(first_last, last), std::max(first_last, last));
    if (witnesses.size() < kMaxStoredWitnesses) {
      CubeWitness w;
      w.s_id = first_id;
      w.t_id = id;
      w.s_last = first_last;
      w.t_last = last;
      witnesses.push_back(std::move(w));
    }
    return mode != CommutatorMode::zero_test;
  };

  std::vector<Tuple> gens = standard_generators(a, thetas);
  Subpower m = Subpower::generate(a, coords, gens, budget, observer);

  for (CubeWitness& w : witnesses) {
    w.s = m.tuple(w.s_id);
    w.t = m.tuple(w.t_id);
  }

  std::vector<std::pair<Element, Element>> pairs(value_pairs.begin(), value_pairs.end());
  CommutatorResult result{congruence_generated(a, pairs), std::move(witnesses),
                          Decided::exact, std::move(m)};
  switch (result.cube.outcome()) {
    case ClosureOutcome::closed:
      result.decided = Decided::exact;
      break;
    case ClosureOutcome::stopped:
      result.decided = Decided::zero_test_only;
      break;
    default:
      result.decided = Decided::unknown_budget;
      break;
  }
  return result;
}

std::string CommutatorResult::to_text() const {
  std::ostringstream out;
  out << "value: " << value.to_string() << "\n";
  out << "decided: ";
  switch (decided) {
    case Decided::exact: out << "exact"; break;
    case Decided::zero_test_only: out << "zero-test-only"; break;
    case Decided::unknown_budget: out << "unknown-budget"; break;
  }
  out << "\n";
  out << "cube size: " << cube.size() << (cube.closed() ? " (closed)" : " (partial)") << "\n";
  out << "witnesses: " << witnesses.size() << "\n";
  for (const CubeWitness& w : witnesses)
    out << "  s=" << format_tuple(w.s) << " t=" << format_tuple(w.t)
        << " s_last=" << w.s_last << " t_last=" << w.t_last << "\n";
  return out.str();
}

SupernilpotenceResult is_supernilpotent(const FiniteAlgebra& a, const Partition& theta,
                                        int cls, const Budget& budget) {
  if (cls < 1) throw std::invalid_argument("supernilpotence class must be >= 1");
  std::vector<Partition> thetas(static_cast<std::size_t>(cls) + 1, theta);
  CommutatorResult r = two_term_higher_commutator(a, thetas, CommutatorMode::zero_test, budget);

  Verdict verdict = Verdict::unknown;
  std::optional<CubeWitness> witness;
  if (!r.witnesses.empty()) {
    verdict = Verdict::no;
    witness = r.witnesses.front();
  } else if (r.cube.closed()) {
    verdict = Verdict::yes;
  }
  std::uint64_t insertions = r.cube.insertions_used();
  return SupernilpotenceResult{verdict, std::move(witness), std::move(r.cube), insertions};
}

Partition tc_commutator(const FiniteAlgebra& a, const Partition& alpha,
                        const Partition& beta, const Budget& budget) {
  std::vector<Partition> thetas{alpha, beta};
  Subpower m = cube(a, thetas, budget);
  if (!m.closed())
    throw std::runtime_error("tc_commutator: cube closure exceeded the budget");

  Partition delta = Partition::zero(a.size());
  while (true) {
    std::vector<std::pair<Element, Element>> seeds;
    for (int x = 0; x < a.size(); ++x)
      if (delta.rep(x) != x) seeds.emplace_back(delta.rep(x), x);
    // Term condition in both direction orders: related first rows force
    // related second rows, likewise for columns.
    for (TupleId id = 0; id < m.size(); ++id) {
      Element m00 = m.entry(id, 0);
      Element m01 = m.entry(id, 1);
      Element m10 = m.entry(id, 2);
      Element m11 = m.entry(id, 3);
      if (delta.related(m00, m01) && !delta.related(m10, m11)) seeds.emplace_back(m10, m11);
      if (delta.related(m00, m10) && !delta.related(m01, m11)) seeds.emplace_back(m01, m11);
    }
    Partition next = congruence_generated(a, seeds);
    if (next == delta) return delta;
    delta = std::move(next);
  }
}

std::optional<int> nilpotence_class(const FiniteAlgebra& a, int max_cls,
                                    const Budget& budget) {
  if (max_cls < 1) throw std::invalid_argument("max_cls must be >= 1");
  const Partition one = Partition::one(a.size());
  Partition gamma = one;
  for (int i = 1; i <= max_cls; ++i) {
    Partition next = tc_commutator(a, one, gamma, budget);
    if (next.is_zero()) return i;
    if (next == gamma) return std::nullopt;  // series stabilized above zero
    gamma = std::move(next);
  }
  return std::nullopt;
}

bool verify_delta_centrality(const FiniteAlgebra& a, const Partition& theta) {
  if (!is_congruence(a, theta)) throw std::invalid_argument("delta centrality needs a congruence");
  std::vector<Tuple> pairs;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (theta.related(x, y)) pairs.push_back({x, y});

  Subpower graph = Subpower::generate(a, 2, pairs);
  if (!graph.closed() || graph.size() != pairs.size())
    throw std::logic_error("congruence pair set failed to close onto itself");

  FiniteAlgebra pair_algebra = graph.as_algebra(a.name() + "(theta)", graph.size());
  int first_diag = -1;
  int first_off = -1;
  std::vector<int> labels(graph.size());
  for (TupleId id = 0; id < graph.size(); ++id) {
    bool diag = graph.entry(id, 0) == graph.entry(id, 1);
    int& anchor = diag ? first_diag : first_off;
    if (anchor < 0) anchor = static_cast<int>(id);
    labels[id] = anchor;
  }
  Partition split = Partition::from_labels(std::move(labels));
  return is_congruence(pair_algebra, split);
}

}  // namespace ualg
