#pragma once

// Natural deduction for MALL in sequent style: derivation trees, a
// rule-by-rule checker, composition, the minor-premise normal form predicate,
// an s-expression file format, and a bounded exhaustive proof search used to
// separate the classical and intuitionistic calculi at small depths.

#include <optional>
#include <string>
#include <vector>

#include "mallbes/syntax.hpp"

namespace mallbes {

enum class NdRule {
  Ax, Raa, TensorI, TensorE, OneI, OneE, WithI, WithE1, WithE2, TopI,
  LolliI, LolliE, ParI, ParE, PlusI1, PlusI2, PlusE, ZeroE, Subs
};

const char* nd_rule_name(NdRule r);
std::optional<NdRule> nd_rule_from_name(const std::string& name);
bool nd_rule_is_admissible(NdRule r);  // true only for Subs

struct NdDerivation {
  Sequent conclusion;
  NdRule rule = NdRule::Ax;
  std::vector<NdDerivation> premises;
};

struct NdViolation {
  std::string path;  // root is "root", children "root.0", "root.0.1", ...
  std::string message;
};

struct NdCheckResult {
  bool ok = true;
  std::vector<NdViolation> violations;
  std::string report() const;
};

NdCheckResult check_nd(const NdDerivation& d, bool allow_subs = true,
                       bool allow_raa = true);

// Composition: d1 proves G |- phi, d2 proves D, phi |- psi; the result is a
// Subs node proving G, D |- psi. Throws std::invalid_argument when phi does
// not occur in d2's context.
NdDerivation compose(const NdDerivation& d1, const NdDerivation& d2);

// True iff every TensorE, PlusE, ZeroE and ParE node has all minor premises
// concluding bot. ZeroE has no minor premises, so it passes vacuously.
bool normal_form_check(const NdDerivation& d);

std::string nd_to_sexpr(const NdDerivation& d);         // single line
std::string nd_to_sexpr_pretty(const NdDerivation& d);  // indented
NdDerivation nd_from_sexpr(const std::string& text);

struct NdSearchBudget {
  int max_depth = 12;
  long max_nodes = 20'000'000;
};

// Bounded exhaustive backward search, without Subs (admissible) and with
// elimination majors drawn from the subformula closure of the goal. Within
// those declared bounds a nullopt result for allow_raa=false is an exhaustive
// refutation of intuitionistic derivability at the given depth.
std::optional<NdDerivation> search_nd(const Sequent& goal,
                                      const NdSearchBudget& budget,
                                      bool allow_raa);

}  // namespace mallbes
