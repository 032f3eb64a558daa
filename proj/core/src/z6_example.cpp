#include "ualg/z6_example.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ualg/commutator.hpp"
#include "ualg/lattice.hpp"

namespace ualg {

namespace {

std::string format_tuple(std::span<const Element> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  out += ")";
  return out;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    int m = n;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return false;
}

Element plus(const FiniteAlgebra& a, Element x, Element y) {
  Element args[] = {x, y};
  return a.eval("+", args);
}

// e(x) = x+x+x+x, the idempotent term picking the 3-Sylow part of Z6.
Element sylow_idempotent(const FiniteAlgebra& a, Element x) {
  Element two = plus(a, x, x);
  return plus(a, two, two);
}

Element negate(const FiniteAlgebra& a, Element x) {
  // -x = 5x in Z6.
  Element four = sylow_idempotent(a, x);
  return plus(a, four, x);
}

}  // namespace

bool is_z6_expansion(const FiniteAlgebra& a) {
  if (a.size() != 6) return false;
  int op = a.signature().index_of("+");
  if (op < 0 || a.arity(op) != 2) return false;
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      if (plus(a, x, y) != (x + y) % 6) return false;
  return true;
}

SylowSlice sylow3(const FiniteAlgebra& a, const Subpower& d) {
  if (!is_z6_expansion(a)) throw std::invalid_argument("sylow3 needs a Z6 expansion");

  std::set<Tuple> image;
  std::vector<Element> t(static_cast<std::size_t>(d.arity()));
  for (TupleId id = 0; id < d.size(); ++id) {
    d.tuple_into(id, t);
    Tuple e(t.size());
    for (std::size_t c = 0; c < t.size(); ++c) e[c] = sylow_idempotent(a, t[c]);
    image.insert(std::move(e));
  }

  SylowSlice slice;
  slice.v3.assign(image.begin(), image.end());
  std::size_t m = slice.v3.size();
  int dim = 0;
  std::size_t pw = 1;
  while (pw < m) {
    pw *= 3;
    ++dim;
  }
  if (pw != m) throw std::logic_error("3-Sylow slice size is not a power of 3");
  slice.dim = dim;

  if (is_subdirect(a, d)) {
    // The slice must be subdirect over {0,2,4} in every coordinate.
    for (int c = 0; c < d.arity(); ++c) {
      std::set<Element> seen;
      for (const Tuple& v : slice.v3) seen.insert(v[static_cast<std::size_t>(c)]);
      if (seen != std::set<Element>{0, 2, 4})
        throw std::logic_error("3-Sylow slice of a subdirect subpower is not subdirect");
    }
  }
  return slice;
}

PlusMinusSplit plus_minus_split(const FiniteAlgebra& a, const SylowSlice& slice,
                                SplitPolarity polarity) {
  PlusMinusSplit split;
  for (const Tuple& t : slice.v3) {
    Tuple neg(t.size());
    for (std::size_t c = 0; c < t.size(); ++c) neg[c] = negate(a, t[c]);
    if (t == neg) continue;  // only the zero tuple is its own negative
    if (t < neg) {
      if (polarity == SplitPolarity::lex_min) {
        split.p.push_back(t);
        split.minus_p.push_back(neg);
      } else {
        split.p.push_back(neg);
        split.minus_p.push_back(t);
      }
    }
  }
  std::sort(split.p.begin(), split.p.end());
  std::sort(split.minus_p.begin(), split.minus_p.end());
  return split;
}

SumIdentityReport verify_sum_identity(const FiniteAlgebra& a, const Subpower& d,
                                      SplitPolarity polarity) {
  if (!is_z6_expansion(a)) throw std::invalid_argument("sum identity needs a Z6 expansion");
  if (a.signature().index_of("s") < 0 || a.signature().index_of("c") < 0)
    throw std::invalid_argument("sum identity needs the s and c operations");
  if (!is_subdirect(a, d)) throw std::invalid_argument("sum identity needs a subdirect subpower");

  SylowSlice slice = sylow3(a, d);
  PlusMinusSplit split = plus_minus_split(a, slice, polarity);

  const std::size_t k = static_cast<std::size_t>(d.arity());
  SumIdentityReport report;
  report.sum.assign(k, 0);
  for (const Tuple& t : split.p) {
    for (std::size_t c = 0; c < k; ++c) {
      Element arg[] = {t[c]};
      report.sum[c] = plus(a, report.sum[c], a.eval("s", arg));
    }
  }
  Element c_value = a.eval("c", {});
  report.expected.assign(k, c_value);
  report.sum_matches = (report.sum == report.expected);

  report.expected_off_kernel = 2;
  for (int i = 1; i < slice.dim; ++i) report.expected_off_kernel *= 3;
  report.counts_match = true;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t count = 0;
    for (const Tuple& v : slice.v3) count += (v[c] != 0);
    report.off_kernel_counts.push_back(count);
    if (count != report.expected_off_kernel) report.counts_match = false;
  }
  return report;
}

IdealObstructionReport verify_ideal_obstruction(const FiniteAlgebra& a, const Subpower& d,
                                                std::size_t bound) {
  if (!is_z6_expansion(a)) throw std::invalid_argument("ideal obstruction needs a Z6 expansion");
  if (!d.closed()) throw std::invalid_argument("ideal obstruction needs a closed subpower");
  if (d.size() > bound)
    throw std::invalid_argument("subpower exceeds the congruence computation bound");
  if (!is_subdirect(a, d)) throw std::invalid_argument("ideal obstruction needs a subdirect subpower");

  FiniteAlgebra abstract = d.as_algebra(a.name() + "-subpower", bound);
  std::vector<Partition> cons = congruence_lattice(abstract, static_cast<int>(bound));

  const std::size_t k = static_cast<std::size_t>(d.arity());
  Tuple zero_tuple(k, 0);
  Tuple c_tuple(k, a.eval("c", {}));
  std::optional<TupleId> zero_id = d.find(zero_tuple);
  std::optional<TupleId> c_id = d.find(c_tuple);
  if (!zero_id || !c_id)
    throw std::logic_error("closed subpower is missing a constant-term tuple");

  SylowSlice slice = sylow3(a, d);
  std::vector<TupleId> v3_ids;
  for (const Tuple& t : slice.v3) {
    std::optional<TupleId> id = d.find(t);
    if (!id) throw std::logic_error("3-Sylow slice member escaped the subpower");
    v3_ids.push_back(*id);
  }

  IdealObstructionReport report;
  report.ok = true;
  for (const Partition& delta : cons) {
    if (delta.block_count() != 2) continue;
    ++report.two_class_congruences;
    bool v3_in_zero_class = true;
    for (TupleId id : v3_ids)
      if (!delta.related(static_cast<Element>(id), static_cast<Element>(*zero_id))) {
        v3_in_zero_class = false;
        break;
      }
    if (!v3_in_zero_class) continue;
    ++report.applicable;
    bool c_in = delta.related(static_cast<Element>(*c_id), static_cast<Element>(*zero_id));
    std::ostringstream line;
    line << "two-class congruence " << delta.to_string() << ": constant tuple "
         << (c_in ? "inside" : "OUTSIDE") << " the 0-class";
    report.details.push_back(line.str());
    if (!c_in) report.ok = false;
  }
  report.vacuous = (report.applicable == 0);
  return report;
}

bool ExampleReport::all_ok() const {
  for (const ExampleCheck& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

std::string ExampleReport::to_text() const {
  std::ostringstream out;
  std::string section;
  for (const ExampleCheck& c : checks) {
    if (c.section != section) {
      section = c.section;
      out << "[" << section << "]\n";
    }
    const char* status = c.status == CheckStatus::pass        ? "PASS"
                         : c.status == CheckStatus::undecided ? "UNDECIDED"
                                                              : "FAIL";
    out << "  " << status << "  " << c.name;
    if (!c.evidence.empty()) out << "  -- " << c.evidence;
    out << "\n";
  }
  out << (all_ok() ? "suite: PASS" : "suite: FAIL") << "\n";
  return out.str();
}

ExampleReport verify_z6_example(const Budget& budget) {
  ExampleReport report;
  auto add = [&](std::string section, std::string name, bool pass, std::string evidence) {
    report.checks.push_back({std::move(section), std::move(name),
                             pass ? CheckStatus::pass : CheckStatus::fail,
                             std::move(evidence)});
  };

  FiniteAlgebra a = builtin_algebra("paper-z6");
  const Partition zero = Partition::zero(6);
  const Partition one = Partition::one(6);
  std::pair<Element, Element> theta_seed[] = {{0, 3}};
  const Partition theta = congruence_generated(a, theta_seed);

  // Lattice shapes.
  {
    std::vector<Partition> cons = congruence_lattice(a);
    bool match = cons.size() == 3 && cons[0] == zero && cons[1] == theta && cons[2] == one &&
                 theta.to_string() == "0 3|1 4|2 5";
    std::string listing;
    for (const Partition& p : cons) listing += (listing.empty() ? "" : " ; ") + p.to_string();
    add("lattices", "congruence lattice is the three-chain 0 < theta < 1", match, listing);

    std::vector<Subset> subs = all_subuniverses(a);
    bool submatch = subs.size() == 2 && subs[0].to_string() == "0 3" &&
                    subs[1] == Subset::full(6);
    std::string sublist;
    for (const Subset& s : subs) sublist += (sublist.empty() ? "" : " ; ") + ("{" + s.to_string() + "}");
    add("lattices", "proper subuniverses: exactly {0 3}", submatch, sublist);

    auto idx_top = class_index(one, theta);
    auto idx_bot = class_index(theta, zero);
    bool idx_ok = idx_top && *idx_top == 3 && idx_bot && *idx_bot == 2;
    add("lattices", "covering indices [1:theta]=3 and [theta:0]=2", idx_ok,
        "[1:theta]=" + (idx_top ? std::to_string(*idx_top) : "undefined") +
            " [theta:0]=" + (idx_bot ? std::to_string(*idx_bot) : "undefined"));
  }

  // Nilpotence data.
  {
    Partition c1t = tc_commutator(a, one, theta);
    add("nilpotence", "[1,theta] = 0", c1t.is_zero(), "[1,theta] = " + c1t.to_string());

    Partition c11 = tc_commutator(a, one, one);
    add("nilpotence", "[1,1] = theta", c11 == theta, "[1,1] = " + c11.to_string());

    std::optional<int> cls = nilpotence_class(a, 5);
    add("nilpotence", "nilpotence class is 2", cls && *cls == 2,
        cls ? "class " + std::to_string(*cls) : "exceeds bound");

    bool delta = verify_delta_centrality(a, theta);
    add("nilpotence", "two-block split of the theta pair algebra is a congruence", delta,
        delta ? "congruence confirmed" : "not a congruence");

    FiniteAlgebra q = quotient_algebra(a, theta);
    Partition q_one = Partition::one(q.size());
    bool quotient_ok = q.size() == 3 && tc_commutator(q, q_one, q_one).is_zero();
    add("nilpotence", "quotient by theta is abelian of size 3", quotient_ok,
        "size " + std::to_string(q.size()));
  }

  // Structural certificate for non-supernilpotence.
  {
    DecomposabilityResult dec = is_directly_indecomposable(a);
    add("supernilpotence", "directly indecomposable", dec.indecomposable,
        dec.indecomposable ? "no complementary permuting pair"
                           : dec.witness->first.to_string() + " / " + dec.witness->second.to_string());
    add("supernilpotence", "cardinality 6 is not a prime power", !is_prime_power(6), "6 = 2*3");
  }

  // Budgeted direct witness search.
  {
    SupernilpotenceResult s = is_supernilpotent(a, one, 2, budget);
    if (s.verdict == Verdict::no) {
      const CubeWitness& w = *s.witness;
      bool verified = s.cube.contains(w.s) && s.cube.contains(w.t) && w.s != w.t &&
                      std::equal(w.s.begin(), w.s.end() - 1, w.t.begin()) &&
                      w.s.back() != w.t.back();
      add("supernilpotence", "class-2 witness search", verified,
          "collision " + format_tuple(w.s) + " vs " + format_tuple(w.t) + " after " +
              std::to_string(s.insertions_used) + " insertions");
    } else if (s.verdict == Verdict::unknown) {
      report.checks.push_back({"supernilpotence", "class-2 witness search",
                               CheckStatus::undecided,
                               "budget exhausted; relying on the structural certificate"});
    } else {
      add("supernilpotence", "class-2 witness search", false,
          "cube closed with no collision, contradicting the structural certificate");
    }
  }

  // Sum identity and ideal obstruction over the fixed sample.
  {
    std::vector<Tuple> universe;
    for (Element x = 0; x < 6; ++x) universe.push_back({x});
    Subpower d_self = Subpower::generate(a, 1, universe);
    std::vector<Tuple> g1{{1, 5}};
    Subpower d_anti = Subpower::generate(a, 2, g1);
    std::vector<Tuple> g2{{1, 1}, {0, 3}};
    Subpower d_shift = Subpower::generate(a, 2, g2);

    struct Sample {
      const char* label;
      const Subpower* d;
    } samples[] = {{"A itself", &d_self},
                   {"square generated by (1,5)", &d_anti},
                   {"square generated by (1,1),(0,3)", &d_shift}};

    for (const Sample& sample : samples) {
      for (SplitPolarity polarity : {SplitPolarity::lex_min, SplitPolarity::lex_max}) {
        SumIdentityReport r = verify_sum_identity(a, *sample.d, polarity);
        std::string name = std::string("sum identity over ") + sample.label +
                           (polarity == SplitPolarity::lex_min ? " (lex-min split)"
                                                               : " (lex-max split)");
        add("obstruction", name, r.ok(),
            "sum " + format_tuple(r.sum) + ", off-kernel " +
                std::to_string(r.expected_off_kernel) + " per coordinate");
      }
      IdealObstructionReport io = verify_ideal_obstruction(a, *sample.d);
      std::string evidence = io.vacuous
                                 ? "vacuous: no two-class congruence contains the slice"
                                 : std::to_string(io.applicable) + " applicable congruence(s), all contain c";
      add("obstruction", std::string("ideal obstruction over ") + sample.label, io.ok, evidence);
    }
  }

  return report;
}

}  // namespace ualg
