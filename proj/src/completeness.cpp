#include "mallbes/completeness.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mallbes {

bool AtomicMapping::defined_for(const Formula& f) const {
  return by_formula_.count(f) > 0;
}

const std::string& AtomicMapping::atom_for(const Formula& f) const {
  auto it = by_formula_.find(f);
  if (it == by_formula_.end())
    throw std::out_of_range("atomic mapping undefined for " + print_formula(f));
  return it->second;
}

std::optional<Formula> AtomicMapping::formula_for(const std::string& atom) const {
  auto it = by_atom_.find(atom);
  if (it == by_atom_.end()) return std::nullopt;
  return it->second;
}

void AtomicMapping::insert(const Formula& f, const std::string& atom) {
  if (by_formula_.count(f)) throw std::logic_error("mapping entry duplicated");
  if (by_atom_.count(atom))
    throw std::logic_error("mapping not injective at atom " + atom);
  entries_.emplace_back(f, atom);
  by_formula_.emplace(f, atom);
  by_atom_.emplace(atom, f);
}

AtomicMapping make_mapping(const std::set<Formula>& pi, int fresh_start) {
  std::set<Formula> seed = pi;
  seed.insert(Formula::bottom());
  std::set<Formula> domain = subformula_closure(seed);

  std::set<std::string> used;
  std::function<void(const Formula&)> collect = [&](const Formula& f) {
    if (f.is_atom())
      used.insert(f.atom_name());
    else if (f.is_binary()) {
      collect(f.left());
      collect(f.right());
    }
  };
  for (const auto& f : domain) collect(f);

  AtomicMapping sigma;
  int counter = fresh_start;
  for (const auto& f : domain) {
    if (f.is_atom()) {
      sigma.insert(f, f.atom_name());
      continue;
    }
    std::string name;
    do {
      name = "x" + std::to_string(counter++);
    } while (used.count(name));
    used.insert(name);
    sigma.insert(f, name);
  }
  return sigma;
}

namespace {

SequentPattern pat(std::vector<std::string> metavars,
                   std::vector<std::string> concrete, std::string concl) {
  SequentPattern p;
  std::sort(metavars.begin(), metavars.end());
  p.context.metavars = std::move(metavars);
  for (auto& a : concrete) p.context.concrete.add(a);
  p.conclusion = std::move(concl);
  return p;
}

SimulationBase build_from(const std::set<Formula>& domain_set,
                          AtomicMapping sigma) {
  SimulationBase sim;
  sim.sigma = std::move(sigma);
  sim.domain.assign(domain_set.begin(), domain_set.end());

  auto at = [&](const Formula& f) { return sim.sigma.atom_for(f); };
  auto add = [&](RuleSchema s, NdRule rule, const Formula& major) {
    if (sim.base.contains_schema(s)) return;
    sim.base.schemas.push_back(std::move(s));
    sim.origins.push_back({rule, major});
  };

  for (const auto& chi : sim.domain) {
    const std::string p_chi = at(chi);
    switch (chi.kind()) {
      case Conn::Atom:
        break;
      case Conn::Top:
        add(RuleSchema{{}, pat({"G"}, {}, p_chi)}, NdRule::TopI, chi);
        break;
      case Conn::Zero:
        add(RuleSchema{{pat({"G"}, {}, p_chi)},
                       pat({"G", "D"}, {}, kBottomName)},
            NdRule::ZeroE, chi);
        break;
      case Conn::One: {
        add(RuleSchema{{}, pat({}, {}, p_chi)}, NdRule::OneI, chi);
        for (const auto& phi : sim.domain) {
          add(RuleSchema{{pat({"G"}, {}, at(phi)), pat({"D"}, {}, p_chi)},
                         pat({"G", "D"}, {}, at(phi))},
              NdRule::OneE, phi);
        }
        break;
      }
      case Conn::Tensor: {
        const std::string a = at(chi.left()), b = at(chi.right());
        add(RuleSchema{{pat({"G"}, {}, a), pat({"D"}, {}, b)},
                       pat({"G", "D"}, {}, p_chi)},
            NdRule::TensorI, chi);
        add(RuleSchema{{pat({"G"}, {}, p_chi),
                        pat({"D"}, {a, b}, kBottomName)},
                       pat({"G", "D"}, {}, kBottomName)},
            NdRule::TensorE, chi);
        break;
      }
      case Conn::With: {
        const std::string a = at(chi.left()), b = at(chi.right());
        add(RuleSchema{{pat({"G"}, {}, a), pat({"G"}, {}, b)},
                       pat({"G"}, {}, p_chi)},
            NdRule::WithI, chi);
        add(RuleSchema{{pat({"G"}, {}, p_chi)}, pat({"G"}, {}, a)},
            NdRule::WithE1, chi);
        add(RuleSchema{{pat({"G"}, {}, p_chi)}, pat({"G"}, {}, b)},
            NdRule::WithE2, chi);
        break;
      }
      case Conn::Lolli: {
        const std::string a = at(chi.left()), b = at(chi.right());
        add(RuleSchema{{pat({"G"}, {a}, b)}, pat({"G"}, {}, p_chi)},
            NdRule::LolliI, chi);
        add(RuleSchema{{pat({"G"}, {}, p_chi), pat({"D"}, {}, a)},
                       pat({"G", "D"}, {}, b)},
            NdRule::LolliE, chi);
        break;
      }
      case Conn::Par: {
        const std::string a = at(chi.left()), b = at(chi.right());
        add(RuleSchema{{pat({"G"}, {at(negate(chi.left())), at(negate(chi.right()))},
                            kBottomName)},
                       pat({"G"}, {}, p_chi)},
            NdRule::ParI, chi);
        add(RuleSchema{{pat({"G"}, {}, p_chi), pat({"D"}, {a}, kBottomName),
                        pat({"T"}, {b}, kBottomName)},
                       pat({"D", "G", "T"}, {}, kBottomName)},
            NdRule::ParE, chi);
        break;
      }
      case Conn::Plus: {
        const std::string a = at(chi.left()), b = at(chi.right());
        add(RuleSchema{{pat({"G"}, {}, a)}, pat({"G"}, {}, p_chi)},
            NdRule::PlusI1, chi);
        add(RuleSchema{{pat({"G"}, {}, b)}, pat({"G"}, {}, p_chi)},
            NdRule::PlusI2, chi);
        add(RuleSchema{{pat({"G"}, {}, p_chi), pat({"D"}, {a}, kBottomName),
                        pat({"D"}, {b}, kBottomName)},
                       pat({"D", "G"}, {}, kBottomName)},
            NdRule::PlusE, chi);
        break;
      }
    }
  }
  // Raa schemas last, so backward search reaches for them only after the
  // connective schemas
  for (const auto& chi : sim.domain) {
    if (!domain_set.count(negate(chi))) continue;
    add(RuleSchema{{pat({"G"}, {at(negate(chi))}, kBottomName)},
                   pat({"G"}, {}, at(chi))},
        NdRule::Raa, chi);
  }
  return sim;
}

}  // namespace

SimulationBase build_simulation_base(const std::set<Formula>& pi,
                                     int fresh_start) {
  std::set<Formula> seed = pi;
  seed.insert(Formula::bottom());
  std::set<Formula> domain = subformula_closure(seed);
  return build_from(domain, make_mapping(pi, fresh_start));
}

SimulationBase simulation_base_from_mapping(const AtomicMapping& sigma) {
  std::set<Formula> domain;
  for (const auto& [f, _] : sigma.entries()) domain.insert(f);
  return build_from(domain, sigma);
}

DecideOutcome decide(const FormulaMultiset& gamma, const Formula& phi,
                     const SearchBudget& budget, int fresh_start) {
  std::set<Formula> pi(gamma.items().begin(), gamma.items().end());
  pi.insert(phi);
  DecideOutcome out;
  out.sim = build_simulation_base(pi, fresh_start);
  for (const auto& g : gamma.items())
    out.goal.context.add(out.sim.sigma.atom_for(g));
  out.goal.conclusion = out.sim.sigma.atom_for(phi);
  out.atomic = derive_atomic(out.sim.base, out.goal, budget, &out.stats);
  out.provable = out.atomic.has_value();
  return out;
}

namespace {

Sequent map_back(const AtomicSequent& s, const SimulationBase& sim) {
  Sequent out;
  for (const auto& [atom, n] : s.context.counts()) {
    auto f = sim.sigma.formula_for(atom);
    if (!f) throw TranslateError("unmapped-atom: " + atom);
    for (int i = 0; i < n; ++i) out.context.add(*f);
  }
  auto f = sim.sigma.formula_for(s.conclusion);
  if (!f) throw TranslateError("unmapped-atom: " + s.conclusion);
  out.conclusion = *f;
  return out;
}

}  // namespace

NdDerivation translate(const AtomicDerivation& d, const SimulationBase& sim) {
  NdDerivation out;
  out.conclusion = map_back(d.conclusion, sim);
  switch (d.kind) {
    case AtomicDerivation::Kind::Ax:
      out.rule = NdRule::Ax;
      break;
    case AtomicDerivation::Kind::Subs:
      out.rule = NdRule::Subs;
      break;
    case AtomicDerivation::Kind::Schema:
      if (d.index < 0 || d.index >= static_cast<int>(sim.origins.size()))
        throw TranslateError("schema index outside the simulation base");
      out.rule = sim.origins[d.index].rule;
      break;
    case AtomicDerivation::Kind::Rule:
      throw TranslateError(
          "derivation uses a concrete rule; simulation bases have none");
  }
  for (const auto& p : d.premises) out.premises.push_back(translate(p, sim));
  return out;
}

std::string mapping_to_tsv(const AtomicMapping& sigma) {
  std::string out;
  for (const auto& [f, atom] : sigma.entries()) {
    out += atom;
    out += '\t';
    out += print_formula(f);
    out += '\n';
  }
  return out;
}

AtomicMapping mapping_from_tsv(const std::string& text) {
  AtomicMapping sigma;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("mapping line " + std::to_string(lineno) +
                               ": expected 'atom<TAB>formula'");
    sigma.insert(parse_formula(line.substr(tab + 1)), line.substr(0, tab));
  }
  return sigma;
}

}  // namespace mallbes
