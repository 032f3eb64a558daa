#include "json_out.hpp"

namespace ualg::tools {

namespace {

const char* outcome_name(ClosureOutcome o) {
  switch (o) {
    case ClosureOutcome::closed: return "closed";
    case ClosureOutcome::insertion_budget: return "insertion-budget";
    case ClosureOutcome::op_budget: return "op-budget";
    case ClosureOutcome::stopped: return "stopped";
  }
  return "unknown";
}

}  // namespace

nlohmann::json to_json(const CubeWitness& w) {
  return nlohmann::json{{"s", w.s},
                        {"t", w.t},
                        {"s_last", w.s_last},
                        {"t_last", w.t_last}};
}

nlohmann::json to_json(const CommutatorResult& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const CubeWitness& w : r.witnesses) witnesses.push_back(to_json(w));
  const char* decided = r.decided == Decided::exact            ? "exact"
                        : r.decided == Decided::zero_test_only ? "zero-test-only"
                                                                : "unknown-budget";
  return nlohmann::json{{"value", r.value.to_string()},
                        {"decided", decided},
                        {"cube_size", r.cube.size()},
                        {"cube_closed", r.cube.closed()},
                        {"witnesses", witnesses}};
}

nlohmann::json to_json(const RetractCertificate& cert) {
  const char* verdict = cert.verdict == CertificateVerdict::valid     ? "VALID"
                        : cert.verdict == CertificateVerdict::invalid ? "INVALID"
                                                                      : "UNDECIDED";
  nlohmann::json j{{"verdict", verdict},
                   {"cls", cert.cls},
                   {"cube_coordinates", cert.dimension > 0 ? (1 << cert.dimension) : 0},
                   {"gamma_size", cert.gamma_size},
                   {"functional", cert.functional},
                   {"image_is_b", cert.image_is_b},
                   {"subdirect", cert.subdirect},
                   {"retraction_verified", cert.retraction_verified},
                   {"budget_state", outcome_name(cert.budget_state)},
                   {"notes", cert.notes}};
  if (cert.mu) {
    j["mu_size"] = cert.mu->size();
    j["mu_closed"] = cert.mu->closed();
  }
  if (cert.d) j["d_size"] = cert.d->size();
  if (cert.image_of_last) j["image_of_last"] = cert.image_of_last->elements();
  if (cert.functional_violation) j["violation"] = to_json(*cert.functional_violation);
  return j;
}

}  // namespace ualg::tools
