#pragma once

// The simulation-base machinery: injective atomic mappings over subformula
// closures, bases whose schematic rules mirror the natural deduction rules on
// the image atoms, the resulting decision route for MALL sequents, and the
// translation of atomic derivations back into natural deduction.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mallbes/base.hpp"
#include "mallbes/nd.hpp"
#include "mallbes/syntax.hpp"

namespace mallbes {

class AtomicMapping {
 public:
  // entries sorted by formula; atoms map to themselves, composites to fresh
  // atoms
  const std::vector<std::pair<Formula, std::string>>& entries() const {
    return entries_;
  }
  bool defined_for(const Formula& f) const;
  const std::string& atom_for(const Formula& f) const;  // throws if absent
  std::optional<Formula> formula_for(const std::string& atom) const;

  void insert(const Formula& f, const std::string& atom);

 private:
  std::vector<std::pair<Formula, std::string>> entries_;
  std::map<Formula, std::string> by_formula_;
  std::map<std::string, Formula> by_atom_;
};

// Total on the subformula closure of pi together with bot (so the negation of
// bot is covered as well); injective; identity on atoms. fresh_start shifts
// the fresh-name numbering so mapping independence can be exercised.
AtomicMapping make_mapping(const std::set<Formula>& pi, int fresh_start = 1);

struct SchemaOrigin {
  NdRule rule;
  Formula major;  // the formula the schema was instantiated at
};

struct SimulationBase {
  Base base;
  AtomicMapping sigma;
  std::vector<Formula> domain;         // the closure, sorted
  std::vector<SchemaOrigin> origins;   // parallel to base.schemas
};

SimulationBase build_simulation_base(const std::set<Formula>& pi,
                                     int fresh_start = 1);
// Same construction over an explicit closure (used when reloading a mapping).
SimulationBase simulation_base_from_mapping(const AtomicMapping& sigma);

struct DecideOutcome {
  bool provable = false;
  std::optional<AtomicDerivation> atomic;
  SimulationBase sim;
  AtomicSequent goal;
  AtomicSearchStats stats;
};

// Builds the simulation base for gamma + {phi}, maps the sequent to atoms and
// searches. A nullopt derivation is not-found-within-budget; it is treated as
// a refutation only inside envelopes where the search has been validated
// against the oracle.
DecideOutcome decide(const FormulaMultiset& gamma, const Formula& phi,
                     const SearchBudget& budget, int fresh_start = 1);

struct TranslateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rewrites each image atom back to its formula and each schema node to the
// corresponding natural deduction rule (Subs stays Subs). The result passes
// check_nd and normal_form_check for derivations produced by decide.
NdDerivation translate(const AtomicDerivation& d, const SimulationBase& sim);

// Mapping table file format: one "atom<TAB>formula" line per entry.
std::string mapping_to_tsv(const AtomicMapping& sigma);
AtomicMapping mapping_from_tsv(const std::string& text);

}  // namespace mallbes
