// Command-line front end; talks to the core exclusively through the C API.
//
// Exit codes: 0 = query true / all consistent, 1 = query false,
// 2 = usage or parse error, 3 = theorem violation found.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dgcycle.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct DigraphDeleter {
  void operator()(dgc_digraph* d) const { dgc_free(d); }
};
using DigraphPtr = std::unique_ptr<dgc_digraph, DigraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { dgc_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kExitUsage;
}

DigraphPtr load(const std::string& path, int* err) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      *err = fail("cannot open " + path);
      return nullptr;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  dgc_digraph* d = nullptr;
  if (dgc_decode(text.c_str(), &d) != 0) {
    *err = fail(std::string(path) + ": " + dgc_last_error());
    return nullptr;
  }
  return DigraphPtr(d);
}

bool write_output(const std::string& path, const char* data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << data;
  return static_cast<bool>(out);
}

int env_workers() {
  const char* w = std::getenv("DGCYCLE_WORKERS");
  if (!w || !*w) return 0;
  return std::atoi(w);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-conditioned digraph cycle toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family instance");
  std::string family_spec, gen_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("family-spec", family_spec,
                  "e.g. hnn:n=3,cross=full | bnn:n=4,k=2 | q:k=5 | h6p")
      ->required();
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_option("--seed", gen_seed, "seed for sampled free parameters");

  // check
  auto* check = app.add_subcommand("check", "query a digraph property");
  std::string check_file;
  int cycle_k = 0;
  bool q_ham = false, q_pre = false, q_pan = false, q_strong = false,
       q_hyp = false;
  check->add_option("file", check_file, "digraph file ('-' for stdin)")
      ->required();
  auto* grp = check->add_option_group("query")->require_option(1);
  grp->add_option("--cycle", cycle_k, "cycle of length K");
  grp->add_flag("--hamiltonian", q_ham);
  grp->add_flag("--pre-hamiltonian", q_pre);
  grp->add_flag("--pancyclic", q_pan);
  grp->add_flag("--strong", q_strong);
  grp->add_flag("--hypotheses", q_hyp,
                "minimum degree p-1 and semi-degree bounds");

  // classify
  auto* classify = app.add_subcommand("classify", "recognize family membership");
  std::string classify_file;
  classify->add_option("file", classify_file, "digraph file ('-' for stdin)")
      ->required();

  // verify
  auto* verify = app.add_subcommand("verify", "sweep an order for violations");
  int verify_p = 5;
  std::string verify_mode = "exhaustive", verify_theorem = "all", report_file;
  std::uint64_t verify_seed = 0, verify_trials = 1000000;
  double verify_prob = 0.0;
  verify->add_option("--p", verify_p, "order to sweep")->required();
  verify->add_option("--mode", verify_mode, "exhaustive | random");
  verify->add_option("--seed", verify_seed, "seed (random mode)");
  verify->add_option("--trials", verify_trials, "sample count (random mode)");
  verify->add_option("--arc-prob", verify_prob, "arc probability (random mode)");
  verify->add_option("--theorem", verify_theorem, "all | 43i | 43ii | 51 | l34");
  verify->add_option("--report", report_file, "write the report to a file");

  // convert
  auto* convert = app.add_subcommand("convert", "convert a digraph file");
  std::string convert_file;
  bool to_dot = false;
  convert->add_option("file", convert_file, "digraph file ('-' for stdin)")
      ->required();
  convert->add_flag("--dot", to_dot, "emit DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed()) {
    dgc_digraph* d = nullptr;
    if (dgc_generate(family_spec.c_str(), gen_seed, &d) != 0)
      return fail(dgc_last_error());
    DigraphPtr holder(d);
    StringPtr text(dgc_encode(d));
    if (!text || !write_output(gen_out, text.get()))
      return fail("cannot write output");
    return kExitTrue;
  }

  if (check->parsed()) {
    int err = 0;
    DigraphPtr d = load(check_file, &err);
    if (!d) return err;
    int r;
    if (*check->get_option_group("query")->get_option("--cycle"))
      r = dgc_has_cycle(d.get(), cycle_k);
    else if (q_ham)
      r = dgc_hamiltonian(d.get());
    else if (q_pre)
      r = dgc_pre_hamiltonian(d.get());
    else if (q_pan)
      r = dgc_pancyclic(d.get());
    else if (q_strong)
      r = dgc_strong(d.get());
    else
      r = dgc_meets_hypotheses(d.get());
    if (r < 0) return fail(dgc_last_error());
    return r == 1 ? kExitTrue : kExitFalse;
  }

  if (classify->parsed()) {
    int err = 0;
    DigraphPtr d = load(classify_file, &err);
    if (!d) return err;
    StringPtr families(dgc_classify(d.get()));
    if (!families) return fail(dgc_last_error());
    std::cout << families.get();
    return *families.get() ? kExitTrue : kExitFalse;
  }

  if (verify->parsed()) {
    if (verify_mode != "exhaustive" && verify_mode != "random")
      return fail("mode must be exhaustive or random");
    dgc_verify_options opt{};
    opt.p = verify_p;
    opt.exhaustive = verify_mode == "exhaustive" ? 1 : 0;
    opt.seed = verify_seed;
    opt.trials = verify_trials;
    opt.arc_prob = verify_prob;
    opt.workers = env_workers();
    opt.theorems = verify_theorem.c_str();
    char* report = nullptr;
    std::uint64_t violations = 0;
    if (dgc_verify(&opt, &report, &violations) != 0)
      return fail(dgc_last_error());
    StringPtr holder(report);
    if (!report_file.empty()) {
      if (!write_output(report_file, report)) return fail("cannot write report");
      std::cout << (violations ? "violations found\n" : "all consistent\n");
    } else {
      std::cout << report;
    }
    return violations ? kExitViolation : kExitTrue;
  }

  // convert
  {
    int err = 0;
    DigraphPtr d = load(convert_file, &err);
    if (!d) return err;
    StringPtr out(to_dot ? dgc_dot(d.get()) : dgc_encode(d.get()));
    if (!out) return fail(dgc_last_error());
    std::cout << out.get();
    return kExitTrue;
  }
}
