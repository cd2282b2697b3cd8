// Command-line front end. Exit codes: 0 success/provable/holds,
// 1 refuted/violation, 2 inconclusive (budget), 64 usage or input error.
// Reports are line-oriented; machine-readable lines use the prefixes
// VERDICT:, WITNESS:, DERIVATION:, DERIVATION-FILE:, MAPPING-FILE:.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mallbes/base.hpp"
#include "mallbes/completeness.hpp"
#include "mallbes/nd.hpp"
#include "mallbes/oracle.hpp"
#include "mallbes/support.hpp"
#include "mallbes/syntax.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

mallbes::AtomicMultiset parse_atom_list(const std::string& text) {
  mallbes::AtomicMultiset out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    // trim
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.add(cur.substr(b, e - b + 1));
  }
  return out;
}

struct SharedOpts {
  int budget_depth = 24;
  long budget_nodes = 200'000;
  std::uint64_t seed = 7;
  int fam_size = 4;
  int ext_rules = 2;
  int ctx_bound = 3;

  mallbes::SearchBudget budget() const { return {budget_depth, budget_nodes}; }
};

void add_budget_flags(CLI::App* cmd, SharedOpts& o) {
  cmd->add_option("--budget-depth", o.budget_depth, "search depth limit");
  cmd->add_option("--budget-nodes", o.budget_nodes, "search node limit");
}

void add_family_flags(CLI::App* cmd, SharedOpts& o) {
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--fam-size", o.fam_size, "extension family size");
  cmd->add_option("--ext-rules", o.ext_rules, "max rules added per extension");
  cmd->add_option("--ctx-bound", o.ctx_bound, "atomic multiset size bound");
}

int run_parse(const std::string& text) {
  if (text.find("|-") != std::string::npos) {
    mallbes::Sequent s = mallbes::parse_sequent(text);
    std::cout << "PARSED: " << mallbes::print_sequent(s) << "\n";
  } else {
    mallbes::Formula f = mallbes::parse_formula(text);
    std::cout << "PARSED: " << mallbes::print_formula(f) << "\n";
  }
  return kExitOk;
}

int run_check_nd(const std::string& path, bool no_subs, bool no_raa) {
  mallbes::NdDerivation d = mallbes::nd_from_sexpr(read_file(path));
  auto r = mallbes::check_nd(d, !no_subs, !no_raa);
  if (r.ok) {
    std::cout << "VERDICT: ok\n";
    std::cout << "CONCLUSION: " << mallbes::print_sequent(d.conclusion) << "\n";
    return kExitOk;
  }
  std::cout << "VERDICT: violation\n";
  for (const auto& v : r.violations)
    std::cout << "VIOLATION: " << v.path << ": " << v.message << "\n";
  return kExitRefuted;
}

int run_prove(const std::string& seq_text, const SharedOpts& o,
              const std::string& out_path, const std::string& map_path) {
  mallbes::Sequent s = mallbes::parse_sequent(seq_text);
  int fresh_start = static_cast<int>(o.seed % 1000) + 1;
  mallbes::DecideOutcome out =
      mallbes::decide(s.context, s.conclusion, o.budget(), fresh_start);
  if (!out.provable) {
    std::cout << "VERDICT: not-found-within-budget\n";
    return kExitInconclusive;
  }
  std::cout << "VERDICT: provable\n";
  std::cout << "ATOMIC-DERIVATION: " << mallbes::atomic_to_sexpr(*out.atomic)
            << "\n";
  mallbes::NdDerivation nd = mallbes::translate(*out.atomic, out.sim);
  auto check = mallbes::check_nd(nd);
  if (!check.ok) {
    std::cout << "ERROR: translated derivation failed to check\n"
              << check.report() << "\n";
    return kExitRefuted;
  }
  write_file(out_path, mallbes::nd_to_sexpr_pretty(nd));
  std::cout << "DERIVATION-FILE: " << out_path << "\n";
  if (!map_path.empty()) {
    write_file(map_path, mallbes::mapping_to_tsv(out.sim.sigma));
    std::cout << "MAPPING-FILE: " << map_path << "\n";
  }
  return kExitOk;
}

int run_oracle(const std::string& seq_text) {
  mallbes::Sequent s = mallbes::parse_sequent(seq_text);
  switch (mallbes::oracle_prove_sequent(s)) {
    case mallbes::OracleVerdict::Provable:
      std::cout << "VERDICT: provable\n";
      return kExitOk;
    case mallbes::OracleVerdict::Refuted:
      std::cout << "VERDICT: refuted\n";
      return kExitRefuted;
    default:
      std::cout << "VERDICT: exhaustion-overflow\n";
      return kExitInconclusive;
  }
}

int run_base_derive(const std::string& base_path, const std::string& seq_text,
                    const SharedOpts& o, const std::string& cut_atoms) {
  mallbes::Base b = mallbes::load_base_file(base_path);
  mallbes::AtomicSequent goal = mallbes::parse_atomic_sequent(seq_text);
  std::vector<std::string> extra;
  for (const auto& [a, n] : parse_atom_list(cut_atoms).counts()) {
    (void)n;
    extra.push_back(a);
  }
  auto d = mallbes::derive_atomic(b, goal, o.budget(), nullptr, extra);
  if (!d) {
    std::cout << "VERDICT: not-found-within-budget\n";
    return kExitInconclusive;
  }
  auto check = mallbes::verify_atomic(b, *d);
  if (!check.ok) {
    std::cout << "ERROR: search returned an unverifiable derivation\n"
              << check.report() << "\n";
    return kExitRefuted;
  }
  std::cout << "VERDICT: found\n";
  std::cout << "DERIVATION: " << mallbes::atomic_to_sexpr(*d) << "\n";
  return kExitOk;
}

int run_support(const std::string& base_path, const std::string& seq_text,
                const std::string& sup_text, const SharedOpts& o) {
  mallbes::Base b = mallbes::load_base_file(base_path);
  mallbes::Sequent s = mallbes::parse_sequent(seq_text);
  mallbes::SupportJudgment j;
  j.antecedents = s.context;
  j.conclusion = s.conclusion;
  j.superscript = parse_atom_list(sup_text);

  std::vector<std::string> pool = b.atom_vocabulary();
  for (const auto& [a, n] : j.superscript.counts()) {
    (void)n;
    if (std::find(pool.begin(), pool.end(), a) == pool.end()) pool.push_back(a);
  }
  if (pool.empty()) pool = {"a", "b"};
  std::sort(pool.begin(), pool.end());

  mallbes::ExtensionFamily fam =
      mallbes::generate_family(b, o.seed, o.fam_size, o.ext_rules, pool);
  mallbes::EvalLimits limits;
  limits.ctx_bound = o.ctx_bound;
  limits.atomic = mallbes::SearchBudget{12, o.budget_nodes};
  mallbes::SupportEvaluator ev(fam, limits);
  mallbes::EvalResult r = ev.eval(j);
  std::cout << "JUDGMENT: " << j.render() << "\n";
  std::cout << "FAMILY: " << fam.members.size() << " members, seed " << o.seed
            << "\n";
  if (r.holds) {
    std::cout << "VERDICT: holds-relative-to-family\n";
    return kExitOk;
  }
  std::cout << "VERDICT: refuted\n";
  for (const auto& line : r.trace) std::cout << "WITNESS: " << line << "\n";
  return kExitRefuted;
}

int run_translate(const std::string& deriv_path, const std::string& map_path,
                  const std::string& out_path) {
  mallbes::AtomicMapping sigma = mallbes::mapping_from_tsv(read_file(map_path));
  mallbes::SimulationBase sim = mallbes::simulation_base_from_mapping(sigma);
  mallbes::AtomicDerivation d =
      mallbes::atomic_from_sexpr(read_file(deriv_path), sim.base);
  auto check = mallbes::verify_atomic(sim.base, d);
  if (!check.ok) {
    std::cout << "VERDICT: violation\n" << check.report() << "\n";
    return kExitRefuted;
  }
  mallbes::NdDerivation nd = mallbes::translate(d, sim);
  auto nd_check = mallbes::check_nd(nd);
  if (!nd_check.ok) {
    std::cout << "VERDICT: violation\n" << nd_check.report() << "\n";
    return kExitRefuted;
  }
  if (out_path.empty()) {
    std::cout << mallbes::nd_to_sexpr_pretty(nd);
  } else {
    write_file(out_path, mallbes::nd_to_sexpr_pretty(nd));
    std::cout << "DERIVATION-FILE: " << out_path << "\n";
  }
  std::cout << "VERDICT: ok\n";
  return kExitOk;
}

int run_lemmas(const std::vector<std::string>& which, int trials,
               const SharedOpts& o) {
  std::vector<std::string> ids =
      which.empty() ? mallbes::registered_lemmas() : which;
  mallbes::LemmaParams params;
  params.fam_size = o.fam_size;
  params.ext_rules = o.ext_rules;
  params.ctx_bound = o.ctx_bound;
  bool all_pass = true;
  for (const auto& id : ids) {
    mallbes::LemmaOutcome out = mallbes::check_lemma(id, trials, o.seed, params);
    if (out.pass) {
      std::cout << "LEMMA " << id << ": PASS trials=" << out.trials_run
                << " vacuous=" << out.vacuous << "\n";
    } else {
      all_pass = false;
      std::cout << "LEMMA " << id << ": COUNTEREXAMPLE\n";
      std::cout << "WITNESS: " << out.counterexample << "\n";
    }
  }
  return all_pass ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MALL natural deduction, atomic bases and base-extension "
               "support semantics"};
  app.require_subcommand(1);

  SharedOpts opts;

  std::string text;
  auto* parse_cmd = app.add_subcommand("parse", "parse a formula or sequent");
  parse_cmd->add_option("text", text, "formula or sequent")->required();

  std::string nd_file;
  bool no_subs = false, no_raa = false;
  auto* check_cmd = app.add_subcommand("check-nd", "check a derivation file");
  check_cmd->add_option("file", nd_file, "derivation s-expression file")
      ->required();
  check_cmd->add_flag("--no-subs", no_subs, "reject Subs nodes");
  check_cmd->add_flag("--no-raa", no_raa, "reject Raa nodes (intuitionistic)");

  std::string prove_seq, prove_out = "proof.nd", prove_map;
  auto* prove_cmd =
      app.add_subcommand("prove", "decide a sequent via the simulation base");
  prove_cmd->add_option("sequent", prove_seq, "sequent text")->required();
  prove_cmd->add_option("--out", prove_out, "derivation output file");
  prove_cmd->add_option("--map-out", prove_map, "atomic mapping output file");
  add_budget_flags(prove_cmd, opts);
  prove_cmd->add_option("--seed", opts.seed, "fresh-name seed");

  std::string oracle_seq;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "cut-free sequent calculus verdict");
  oracle_cmd->add_option("sequent", oracle_seq, "sequent text")->required();

  std::string bd_base, bd_seq, bd_cuts;
  auto* bd_cmd = app.add_subcommand("base-derive",
                                    "derive an atomic sequent in a base");
  bd_cmd->add_option("base", bd_base, "base file")->required();
  bd_cmd->add_option("sequent", bd_seq, "atomic sequent")->required();
  bd_cmd->add_option("--cut-atoms", bd_cuts,
                     "extra comma-separated Subs cut atom candidates");
  add_budget_flags(bd_cmd, opts);

  std::string sup_base, sup_seq, sup_sup;
  auto* sup_cmd = app.add_subcommand(
      "support", "evaluate a support judgment relative to a family");
  sup_cmd->add_option("base", sup_base, "base file")->required();
  sup_cmd->add_option("judgment", sup_seq,
                      "judgment as a sequent: 'Gamma |- phi'")
      ->required();
  sup_cmd->add_option("--sup", sup_sup, "superscript atoms, comma-separated");
  add_budget_flags(sup_cmd, opts);
  add_family_flags(sup_cmd, opts);

  std::string tr_deriv, tr_map, tr_out;
  auto* tr_cmd = app.add_subcommand(
      "translate", "translate an atomic derivation to natural deduction");
  tr_cmd->add_option("derivation", tr_deriv, "atomic derivation file")
      ->required();
  tr_cmd->add_option("mapping", tr_map, "atomic mapping tsv file")->required();
  tr_cmd->add_option("--out", tr_out, "derivation output file");

  std::vector<std::string> lemma_ids;
  int trials = 200;
  auto* lemmas_cmd =
      app.add_subcommand("lemmas", "run the lemma property harness");
  lemmas_cmd->add_option("--lemma", lemma_ids, "lemma ids (default: all)");
  lemmas_cmd->add_option("--trials", trials, "trials per lemma");
  opts.ctx_bound = 3;
  add_family_flags(lemmas_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*parse_cmd) return run_parse(text);
    if (*check_cmd) return run_check_nd(nd_file, no_subs, no_raa);
    if (*prove_cmd) return run_prove(prove_seq, opts, prove_out, prove_map);
    if (*oracle_cmd) return run_oracle(oracle_seq);
    if (*bd_cmd) return run_base_derive(bd_base, bd_seq, opts, bd_cuts);
    if (*sup_cmd) return run_support(sup_base, sup_seq, sup_sup, opts);
    if (*tr_cmd) return run_translate(tr_deriv, tr_map, tr_out);
    if (*lemmas_cmd) {
      // the lemma harness keeps a tighter default multiset bound
      if (!lemmas_cmd->count("--ctx-bound")) opts.ctx_bound = 2;
      return run_lemmas(lemma_ids, trials, opts);
    }
  } catch (const mallbes::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
