#include "ualg/retract.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "ualg/detail/key_index.hpp"
#include "ualg/lattice.hpp"

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

std::vector<Tuple> GammaSpec::expansions() const {
  std::vector<Tuple> out;
  out.reserve(gens.size());
  for (const StandardGenerator& g : gens) out.push_back(g.expand());
  return out;
}

GammaSpec build_gamma(const FiniteAlgebra& a, const Subset& b, const Partition& theta,
                      int cls) {
  if (cls < 1) throw std::invalid_argument("class must be >= 1");
  if (!is_subuniverse(a, b)) throw std::invalid_argument("B must be a subuniverse");
  if (!is_congruence(a, theta)) throw std::invalid_argument("theta must be a congruence");

  const int dim = cls + 1;
  GammaSpec gamma{dim, {}};
  // A direction-j generator (u, v) carries v at the all-ones address, so the
  // retained ones are exactly those with v in B.
  for (int j = 0; j < dim; ++j)
    for (Element u = 0; u < a.size(); ++u)
      for (Element v = 0; v < a.size(); ++v)
        if (theta.related(u, v) && b.contains(v)) gamma.gens.push_back({dim, j, u, v});
  return gamma;
}

GammaClaimsReport verify_gamma_claims(const FiniteAlgebra& a, const Subset& b,
                                      const Partition& theta, const GammaSpec& gamma) {
  GammaClaimsReport report;
  const int coords = 1 << gamma.dimension;
  std::vector<Tuple> exps = gamma.expansions();

  report.last_coordinate_in_b = true;
  for (const Tuple& t : exps)
    if (!b.contains(t[static_cast<std::size_t>(coords - 1)])) {
      report.last_coordinate_in_b = false;
      break;
    }

  report.every_b_as_last = true;
  for (Element x : b.elements()) {
    bool hit = false;
    for (const Tuple& t : exps)
      if (t[static_cast<std::size_t>(coords - 1)] == x) {
        hit = true;
        break;
      }
    if (!hit) {
      report.every_b_as_last = false;
      report.missing_last_values.push_back(x);
    }
  }

  report.every_value_at_every_earlier = true;
  for (Element x = 0; x < a.size(); ++x) {
    for (int c = 0; c < coords - 1; ++c) {
      bool hit = false;
      for (const Tuple& t : exps)
        if (t[static_cast<std::size_t>(c)] == x) {
          hit = true;
          break;
        }
      if (!hit) {
        report.every_value_at_every_earlier = false;
        report.uncovered.emplace_back(x, c);
      }
    }
  }

  // The scan outcome for the third claim must coincide with the saturation
  // condition the hyperface-split construction rests on.
  bool saturated = saturation(a, b, theta) == Subset::full(a.size());
  if (saturated != report.every_value_at_every_earlier)
    throw std::logic_error("coverage scan disagrees with the saturation condition");
  return report;
}

RetractCertificate build_retract(const FiniteAlgebra& a, const Subset& b,
                                 const Partition& theta, int cls,
                                 const Budget& budget) {
  if (b.universe_size() != a.size() || theta.size() != a.size())
    throw std::invalid_argument("size mismatch");
  if (b.empty()) throw std::invalid_argument("B must be a nonempty subuniverse");
  GammaSpec gamma = build_gamma(a, b, theta, cls);  // validates B and theta
  if (saturation(a, b, theta) != Subset::full(a.size()))
    throw std::invalid_argument(
        "precondition failed: the saturation of B by theta is not all of A");

  const int dim = cls + 1;
  const int coords = 1 << dim;
  const int bits = bits_for(a.size());

  RetractCertificate cert;
  cert.cls = cls;
  cert.dimension = dim;
  cert.gamma_size = gamma.gens.size();

  // Online functional check: the first collision invalidates the whole run.
  detail::KeyIndex prefix_index(1024);
  std::optional<CubeWitness> violation;
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
    Element first_last = static_cast<Element>(static_cast<std::uint32_t>(*hit));
    if (first_last == last) return true;
    CubeWitness w;
    w.s_id = static_cast<TupleId>(*hit >> 32);
    w.t_id = id;
    w.s_last = first_last;
    w.t_last = last;
    violation = std::move(w);
    return false;
  };

  std::vector<Tuple> gens = gamma.expansions();
  Subpower mu = Subpower::generate(a, coords, gens, budget, observer);
  cert.budget_state = mu.outcome();

  if (violation) {
    violation->s = mu.tuple(violation->s_id);
    violation->t = mu.tuple(violation->t_id);
    cert.functional = false;
    cert.functional_violation = std::move(violation);
    cert.verdict = CertificateVerdict::invalid;
    cert.notes = "mu is not a functional relation; theta is not supernilpotent of class " +
                 std::to_string(cls);
    cert.mu = std::move(mu);
    return cert;
  }
  if (!mu.closed()) {
    cert.verdict = CertificateVerdict::undecided;
    cert.notes = "budget exhausted before mu closed";
    cert.mu = std::move(mu);
    return cert;
  }

  cert.functional = true;

  Subset image(a.size());
  for (TupleId id = 0; id < mu.size(); ++id) image.add(mu.entry(id, coords - 1));
  cert.image_of_last = image;
  cert.image_is_b = (image == b);

  std::vector<int> earlier(static_cast<std::size_t>(coords - 1));
  for (int c = 0; c < coords - 1; ++c) earlier[static_cast<std::size_t>(c)] = c;
  Subpower d = mu.project(earlier);
  cert.subdirect = is_subdirect(a, d);

  // Retraction: each b maps to its diagonal tuple in D, and mu carries that
  // diagonal back to b (the constant cube tuple is a member of mu).
  cert.retraction_verified = true;
  for (Element x : b.elements()) {
    Tuple diag_cube(static_cast<std::size_t>(coords), x);
    Tuple diag_d(static_cast<std::size_t>(coords - 1), x);
    if (!mu.contains(diag_cube) || !d.contains(diag_d)) {
      cert.retraction_verified = false;
      break;
    }
  }

  cert.verdict = (cert.functional && cert.image_is_b && cert.subdirect &&
                  cert.retraction_verified)
                     ? CertificateVerdict::valid
                     : CertificateVerdict::invalid;
  cert.mu = std::move(mu);
  cert.d = std::move(d);
  return cert;
}

RetractCertificate represent_subalgebra(const FiniteAlgebra& a, const Subset& b,
                                        int max_cls, const Budget& budget) {
  if (max_cls < 1) throw std::invalid_argument("max_cls must be >= 1");
  const Partition one = Partition::one(a.size());
  std::string evidence;
  for (int cls = 1; cls <= max_cls; ++cls) {
    SupernilpotenceResult s = is_supernilpotent(a, one, cls, budget);
    if (s.verdict == Verdict::yes) {
      RetractCertificate cert = build_retract(a, b, one, cls, budget);
      if (!evidence.empty()) cert.notes = "supernilpotence search: " + evidence + "; " + cert.notes;
      return cert;
    }
    evidence += (evidence.empty() ? "" : ", ");
    evidence += "cls " + std::to_string(cls) +
                (s.verdict == Verdict::no ? ": no (witnessed)" : ": unknown (budget)");
  }
  RetractCertificate cert;
  cert.verdict = CertificateVerdict::undecided;
  cert.cls = 0;
  cert.dimension = 0;
  cert.notes = "no supernilpotence class found up to " + std::to_string(max_cls) +
               " (" + evidence + ")";
  return cert;
}

std::string RetractCertificate::to_text() const {
  std::ostringstream out;
  out << "retract certificate\n";
  out << "  verdict: ";
  switch (verdict) {
    case CertificateVerdict::valid: out << "VALID"; break;
    case CertificateVerdict::invalid: out << "INVALID"; break;
    case CertificateVerdict::undecided: out << "UNDECIDED"; break;
  }
  out << "\n";
  out << "  cls: " << cls << "\n";
  out << "  cube coordinates: " << (dimension > 0 ? (1 << dimension) : 0) << "\n";
  out << "  |gamma|: " << gamma_size << "\n";
  if (mu) out << "  |mu|: " << mu->size() << (mu->closed() ? " (closed)" : " (partial)") << "\n";
  out << "  functional: " << (functional ? "yes" : "no") << "\n";
  if (functional_violation) {
    const CubeWitness& w = *functional_violation;
    out << "  violation: s=" << format_tuple(w.s) << " t=" << format_tuple(w.t)
        << " s_last=" << w.s_last << " t_last=" << w.t_last << "\n";
  }
  if (image_of_last)
    out << "  image of last: {" << image_of_last->to_string() << "}"
        << (image_is_b ? " = B" : " != B") << "\n";
  if (d) out << "  |D|: " << d->size() << "\n";
  out << "  subdirect: " << (subdirect ? "yes" : "no") << "\n";
  out << "  retraction verified: " << (retraction_verified ? "yes" : "no") << "\n";
  out << "  budget state: ";
  switch (budget_state) {
    case ClosureOutcome::closed: out << "closed"; break;
    case ClosureOutcome::insertion_budget: out << "insertion budget exhausted"; break;
    case ClosureOutcome::op_budget: out << "op budget exhausted"; break;
    case ClosureOutcome::stopped: out << "stopped"; break;
  }
  out << "\n";
  if (!notes.empty()) out << "  notes: " << notes << "\n";
  return out.str();
}

}  // namespace ualg
