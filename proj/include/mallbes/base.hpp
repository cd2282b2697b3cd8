#pragma once

// Atomic systems (bases): concrete rules over atomic sequents, schematic
// rules with context metavariables, extensions, and a budgeted goal-directed
// deducibility engine. Bases are implicitly closed under Ax (p |- p) and
// Subs (composition on an atom); those two are supplied by the engine and are
// never stored.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mallbes/syntax.hpp"

namespace mallbes {

struct AtomicSequent {
  AtomicMultiset context;
  std::string conclusion;  // atom name; may be "bot"

  bool operator==(const AtomicSequent&) const = default;
  auto operator<=>(const AtomicSequent&) const = default;
  std::string render() const;
};

AtomicSequent parse_atomic_sequent(const std::string& text);

struct AtomicRule {
  std::vector<AtomicSequent> premises;
  AtomicSequent conclusion;

  bool operator==(const AtomicRule&) const = default;
  auto operator<=>(const AtomicRule&) const = default;
  std::string render() const;  // "p1 ; p2 ==> concl." / "concl." if axiomatic
};

// A context pattern is a multiset of concrete atoms plus metavariable
// occurrences; instantiating every metavariable with a concrete atomic
// multiset yields a concrete context.
struct ContextPattern {
  AtomicMultiset concrete;
  std::vector<std::string> metavars;  // sorted, may repeat

  bool operator==(const ContextPattern&) const = default;
  auto operator<=>(const ContextPattern&) const = default;
};

struct SequentPattern {
  ContextPattern context;
  std::string conclusion;  // concrete atom, may be "bot"

  bool operator==(const SequentPattern&) const = default;
  auto operator<=>(const SequentPattern&) const = default;
  std::string render() const;
};

struct RuleSchema {
  std::vector<SequentPattern> premises;
  SequentPattern conclusion;

  bool operator==(const RuleSchema&) const = default;
  auto operator<=>(const RuleSchema&) const = default;
  std::string render() const;
};

struct Base {
  std::vector<AtomicRule> rules;
  std::vector<RuleSchema> schemas;

  void add_rule(const AtomicRule& r);      // set semantics, keeps first copy
  void add_schema(const RuleSchema& s);
  bool contains_rule(const AtomicRule& r) const;
  bool contains_schema(const RuleSchema& s) const;
  std::string render() const;  // base file format

  // Every atom name mentioned by a rule or schema, sorted, without "bot".
  std::vector<std::string> atom_vocabulary() const;
};

// The base with no proper rules, i.e. the smallest of all bases.
Base structural_base();

// True iff every rule and schema of b occurs in c.
bool is_extension(const Base& c, const Base& b);

// Base file format: one rule per statement, '.'-terminated. Axiomatic rules
// are written as their conclusion only ("l |- r."), rules with premises as
// "l |- p ==> |- u." with ';'-separated premises. Context metavariables are
// written ?G, ?D, ... Lines starting with '#' are comments.
Base parse_base(const std::string& text);
Base load_base_file(const std::string& path);

struct SearchBudget {
  int max_depth = 24;
  long max_nodes = 200'000;
};

struct AtomicDerivation {
  enum class Kind { Ax, Subs, Rule, Schema };
  Kind kind = Kind::Ax;
  int index = -1;  // into Base::rules or Base::schemas for Rule/Schema nodes
  AtomicSequent conclusion;
  std::vector<AtomicDerivation> premises;

  int depth() const;
};

struct AtomicSearchStats {
  long nodes = 0;
  bool node_budget_hit = false;
};

// Goal-directed backward search. A found derivation verifies against b; a
// nullopt result means not-found-within-budget and is never a refutation.
// Subs cut atoms are drawn from the base vocabulary, the goal, bot, and
// extra_cut_atoms (exposed to widen the candidate set).
std::optional<AtomicDerivation> derive_atomic(
    const Base& b, const AtomicSequent& goal, const SearchBudget& budget,
    AtomicSearchStats* stats = nullptr,
    const std::vector<std::string>& extra_cut_atoms = {});

// Persistent handle over one base: interning and memo tables survive across
// queries, which matters when the same base is probed many times (the
// support evaluator does exactly that). Goals may only mention atoms from the
// base vocabulary, bot, or universe_atoms. The node budget applies per call.
class AtomicProver {
 public:
  AtomicProver(const Base& b, const SearchBudget& budget,
               const std::vector<std::string>& universe_atoms);
  ~AtomicProver();
  AtomicProver(AtomicProver&&) noexcept;
  AtomicProver& operator=(AtomicProver&&) noexcept;

  std::optional<AtomicDerivation> derive(const AtomicSequent& goal);
  bool derivable(const AtomicSequent& goal);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct AtomicViolation {
  std::string path;
  std::string message;
};

struct AtomicCheckResult {
  bool ok = true;
  std::vector<AtomicViolation> violations;
  std::string report() const;
};

AtomicCheckResult verify_atomic(const Base& b, const AtomicDerivation& d);

// S-expression format: (Ax "p |- p"), (Subs "..." c1 c2), (Rule "..." c*).
std::string atomic_to_sexpr(const AtomicDerivation& d);
std::string atomic_to_sexpr_pretty(const AtomicDerivation& d);
// Resolves generic Rule labels against b; throws ParseError when a node
// matches no rule or schema of b.
AtomicDerivation atomic_from_sexpr(const std::string& text, const Base& b);

}  // namespace mallbes
