// Command-line surface for the workbench. Subcommands mirror the library:
// parse, con, sub, commutator, supernil, retract, verify-paper-example.
//
// Exit codes: 0 success / property holds, 1 property fails or a witness was
// found, 2 input error, 3 budget exhausted / undecided.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json_out.hpp"
#include "ualg/algebra.hpp"
#include "ualg/commutator.hpp"
#include "ualg/lattice.hpp"
#include "ualg/retract.hpp"
#include "ualg/subpower.hpp"
#include "ualg/z6_example.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

ualg::FiniteAlgebra load_algebra(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0)
    return ualg::builtin_algebra(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot open input file: " + source);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ualg::parse_algebra(buf.str());
}

// "a-b,c-d" -> congruence generated by those pairs.
ualg::Partition parse_theta(const ualg::FiniteAlgebra& a, const std::string& spec) {
  std::vector<std::pair<ualg::Element, ualg::Element>> pairs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
      throw std::invalid_argument("bad --theta entry '" + item + "', expected a-b");
    pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return ualg::congruence_generated(a, pairs);
}

std::string format_tuple(const ualg::Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  out += ")";
  return out;
}

// "0,2" -> subuniverse closure of those elements.
ualg::Subset parse_subalgebra(const ualg::FiniteAlgebra& a, const std::string& spec) {
  ualg::Subset seed(a.size());
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int x = std::stoi(item);
    if (x < 0 || x >= a.size())
      throw std::invalid_argument("subalgebra generator out of range: " + item);
    seed.add(x);
  }
  return ualg::subuniverse_closure(a, seed);
}

struct CommonFlags {
  std::uint64_t budget = ualg::Budget{}.max_insertions;
  std::uint64_t op_budget = ualg::Budget{}.max_op_applications;
  std::string format = "text";

  ualg::Budget to_budget() const { return {budget, op_budget}; }
};

void add_budget_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--budget", flags.budget, "closure insertion budget");
  cmd->add_option("--op-budget", flags.op_budget, "operation application budget");
}

void add_format_flag(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite universal-algebra workbench"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  std::string input;
  CommonFlags flags;
  int cls = 1;
  int max_cls = 3;
  int bound = 64;
  std::string theta_spec;
  std::string subalgebra_spec;
  std::string mode = "exact";
  bool have_cls = false;

  CLI::App* cmd_parse = app.add_subcommand("parse", "parse an algebra file and echo it");
  cmd_parse->add_option("file", input, "algebra file or builtin:<name>")->required();
  cmd_parse->callback([&] {
    ualg::FiniteAlgebra a = load_algebra(input);
    std::cout << ualg::serialize_algebra(a);
  });

  CLI::App* cmd_con = app.add_subcommand("con", "list the congruence lattice");
  cmd_con->add_option("file", input)->required();
  cmd_con->add_option("--bound", bound, "size guard");
  cmd_con->callback([&] {
    ualg::FiniteAlgebra a = load_algebra(input);
    for (const ualg::Partition& p : ualg::congruence_lattice(a, bound))
      std::cout << p.to_string() << "\n";
  });

  CLI::App* cmd_sub = app.add_subcommand("sub", "list all subuniverses");
  cmd_sub->add_option("file", input)->required();
  int sub_bound = 12;
  cmd_sub->add_option("--bound", sub_bound, "size guard");
  cmd_sub->callback([&] {
    ualg::FiniteAlgebra a = load_algebra(input);
    for (const ualg::Subset& s : ualg::all_subuniverses(a, sub_bound))
      std::cout << "{" << s.to_string() << "}\n";
  });

  CLI::App* cmd_comm = app.add_subcommand("commutator",
                                          "two-term higher commutator of theta, cube dimension cls+1");
  cmd_comm->add_option("file", input)->required();
  cmd_comm->add_option("--cls", cls, "class parameter; the cube has 2^(cls+1) coordinates");
  cmd_comm->add_option("--theta", theta_spec, "seed pairs a-b,c-d (default: the full congruence)");
  cmd_comm->add_option("--mode", mode, "exact or zero-test")
      ->check(CLI::IsMember({"exact", "zero-test"}));
  add_budget_flags(cmd_comm, flags);
  add_format_flag(cmd_comm, flags);
  cmd_comm->callback([&] {
    ualg::FiniteAlgebra a = load_algebra(input);
    ualg::Partition theta =
        theta_spec.empty() ? ualg::Partition::one(a.size()) : parse_theta(a, theta_spec);
    std::vector<ualg::Partition> thetas(static_cast<std::size_t>(cls) + 1, theta);
    ualg::CommutatorMode m = mode == "exact" ? ualg::CommutatorMode::exact
                                             : ualg::CommutatorMode::zero_test;
    ualg::CommutatorResult r =
        ualg::two_term_higher_commutator(a, thetas, m, flags.to_budget());
    if (flags.format == "json")
      std::cout << ualg::tools::to_json(r).dump(2) << "\n";
    else
      std::cout << r.to_text();
    exit_code = r.decided == ualg::Decided::exact            ? kExitOk
                : r.decided == ualg::Decided::zero_test_only ? kExitProperty
                                                             : kExitUndecided;
  });

  CLI::App* cmd_super = app.add_subcommand("supernil", "supernilpotence zero test");
  cmd_super->add_option("file", input)->required();
  cmd_super->add_option("--cls", cls, "supernilpotence class to test")->required();
  cmd_super->add_option("--theta", theta_spec, "seed pairs a-b,c-d (default: the full congruence)");
  add_budget_flags(cmd_super, flags);
  cmd_super->callback([&] {
    ualg::FiniteAlgebra a = load_algebra(input);
    ualg::Partition theta =
        theta_spec.empty() ? ualg::Partition::one(a.size()) : parse_theta(a, theta_spec);
    ualg::SupernilpotenceResult s =
        ualg::is_supernilpotent(a, theta, cls, flags.to_budget());
    switch (s.verdict) {
      case ualg::Verdict::yes:
        std::cout << "YES: supernilpotent of class " << cls << " (cube size "
                  << s.cube.size() << ")\n";
        exit_code = kExitOk;
        break;
      case ualg::Verdict::no: {
        const ualg::CubeWitness& w = *s.witness;
        std::cout << "NO: witness collision after " << s.insertions_used
                  << " insertions\n";
        std::cout << "  s = " << format_tuple(w.s) << " (last " << w.s_last << ")\n";
        std::cout << "  t = " << format_tuple(w.t) << " (last " << w.t_last << ")\n";
        exit_code = kExitProperty;
        break;
      }
      case ualg::Verdict::unknown:
        std::cout << "UNDECIDED: budget exhausted after " << s.insertions_used
                  << " insertions\n";
        exit_code = kExitUndecided;
        break;
    }
  });

  CLI::App* cmd_retract = app.add_subcommand("retract", "retract-of-subdirect-power certificate");
  cmd_retract->add_option("file", input)->required();
  cmd_retract->add_option("--subalgebra", subalgebra_spec, "generators of B, e.g. 0,2")->required();
  CLI::Option* cls_opt = cmd_retract->add_option("--cls", cls, "fixed class (skips the search)");
  cmd_retract->add_option("--max-cls", max_cls, "search bound for the class");
  cmd_retract->add_option("--theta", theta_spec, "seed pairs (default: the full congruence)")
      ->needs(cls_opt);
  add_budget_flags(cmd_retract, flags);
  add_format_flag(cmd_retract, flags);
  cmd_retract->callback([&] {
    have_cls = cls_opt->count() > 0;
    ualg::FiniteAlgebra a = load_algebra(input);
    ualg::Subset b = parse_subalgebra(a, subalgebra_spec);
    ualg::RetractCertificate cert =
        have_cls ? ualg::build_retract(a, b,
                                       theta_spec.empty() ? ualg::Partition::one(a.size())
                                                          : parse_theta(a, theta_spec),
                                       cls, flags.to_budget())
                 : ualg::represent_subalgebra(a, b, max_cls, flags.to_budget());
    if (flags.format == "json")
      std::cout << ualg::tools::to_json(cert).dump(2) << "\n";
    else
      std::cout << cert.to_text();
    exit_code = cert.verdict == ualg::CertificateVerdict::valid     ? kExitOk
                : cert.verdict == ualg::CertificateVerdict::invalid ? kExitProperty
                                                                    : kExitUndecided;
  });

  CLI::App* cmd_example = app.add_subcommand("verify-paper-example",
                                             "replay the bundled z6 example suite");
  add_budget_flags(cmd_example, flags);
  cmd_example->callback([&] {
    ualg::ExampleReport report = ualg::verify_z6_example(flags.to_budget());
    std::cout << report.to_text();
    exit_code = report.all_ok() ? kExitOk : kExitProperty;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return kExitInput;
  } catch (const ualg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}
