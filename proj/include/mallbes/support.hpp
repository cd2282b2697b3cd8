#pragma once

// The support relation, evaluated clause by clause with every universal
// quantifier bounded: "for all C extending B" ranges over a finite family of
// extensions and "for all atomic multisets" over multisets of bounded size
// drawn from the family's vocabulary. A holds answer is therefore only
// relative to the family; a refutation carries a witness whose positive
// derivability facts genuinely verify.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mallbes/base.hpp"
#include "mallbes/syntax.hpp"

namespace mallbes {

struct SupportJudgment {
  FormulaMultiset antecedents;
  AtomicMultiset superscript;
  Formula conclusion;

  std::string render() const;  // "G ||-^{D} phi"
};

struct ExtensionFamily {
  std::vector<Base> members;             // members[0] is the root base
  std::vector<std::string> vocabulary;   // sorted atom names, includes bot

  // extends[i][j]: members[i] is an extension of members[j]
  std::vector<std::vector<bool>> extends;

  void finalize();  // recomputes extends from members
};

// Root plus fam_size-1 random extensions, each adding up to ext_rules rules
// over atom_pool (chained so the family contains proper towers).
ExtensionFamily generate_family(const Base& root, std::uint64_t seed,
                                int fam_size, int ext_rules,
                                const std::vector<std::string>& atom_pool);

struct EvalLimits {
  int ctx_bound = 3;        // size bound on enumerated multisets
  int depth = 64;           // recursion cap; exhaustion counts as holds
  SearchBudget atomic{12, 20'000};
};

struct SupportFact {
  int member;          // family member index
  AtomicSequent fact;  // a sequent the evaluator found derivable there
};

struct EvalResult {
  bool holds = true;
  std::vector<std::string> trace;   // refutation path, outermost first
  std::vector<SupportFact> facts;   // derivable facts backing the refutation
};

class SupportEvaluator {
 public:
  SupportEvaluator(const ExtensionFamily& fam, const EvalLimits& limits);

  // Evaluates the judgment relative to members[member] and the family.
  EvalResult eval(const SupportJudgment& j, int member = 0);

  // Memoized derivability inside a family member.
  bool derivable(int member, const AtomicSequent& s);

  const std::vector<AtomicMultiset>& deltas() const { return deltas_; }

 private:
  const ExtensionFamily& fam_;
  EvalLimits limits_;
  std::vector<AtomicMultiset> deltas_;  // all multisets up to the bound
  std::vector<AtomicProver> provers_;   // one per member, memo kept warm
  std::vector<std::string> universe_;   // sorted atoms the provers know
  std::unordered_map<std::string, EvalResult> memo_;
  std::unordered_map<std::string, bool> derive_memo_;  // fallback path only

  EvalResult eval_rec(const FormulaMultiset& gamma, const AtomicMultiset& sup,
                      int member, const Formula& phi, int depth);
  EvalResult eval_kind(const AtomicMultiset& sup, int member,
                       const Formula& phi, int depth);
};

// The base containing exactly the schema  ?T, p |- bot ==> ?T |- bot.
Base counterexample_base(const std::string& atom);

// ---------------------------------------------------------------------------
// lemma harness

struct LemmaParams {
  int fam_size = 4;
  int ext_rules = 2;
  int ctx_bound = 2;
  SearchBudget atomic{10, 20'000};
  std::vector<std::string> atom_pool{"a", "b", "c", "d"};
};

struct LemmaOutcome {
  bool pass = true;
  int trials_run = 0;
  int vacuous = 0;  // trials whose hypotheses never fired
  std::string counterexample;
};

const std::vector<std::string>& registered_lemmas();
LemmaOutcome check_lemma(const std::string& id, int trials, std::uint64_t seed,
                         const LemmaParams& params = {});

}  // namespace mallbes
