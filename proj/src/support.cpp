#include "mallbes/support.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace mallbes {

std::string SupportJudgment::render() const {
  std::string out;
  bool first = true;
  for (const auto& f : antecedents.items()) {
    if (!first) out += ", ";
    first = false;
    out += print_formula(f);
  }
  if (!out.empty()) out += ' ';
  out += "||-";
  if (!superscript.empty()) out += "^{" + superscript.render() + "}";
  out += ' ';
  out += print_formula(conclusion);
  return out;
}

void ExtensionFamily::finalize() {
  std::size_t n = members.size();
  extends.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      extends[i][j] = is_extension(members[i], members[j]);

  std::set<std::string> vocab(vocabulary.begin(), vocabulary.end());
  vocab.insert(kBottomName);
  for (const auto& m : members)
    for (const auto& a : m.atom_vocabulary()) vocab.insert(a);
  vocabulary.assign(vocab.begin(), vocab.end());
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int upto(int n) {  // 0 .. n-1
    return n <= 0 ? 0 : static_cast<int>(gen() % static_cast<std::uint64_t>(n));
  }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(upto(static_cast<int>(v.size())))];
  }
};

AtomicSequent random_atomic_sequent(Rng& rng,
                                    const std::vector<std::string>& pool,
                                    int max_ctx) {
  AtomicSequent s;
  int n = rng.upto(max_ctx + 1);
  std::vector<std::string> names = pool;
  names.push_back(kBottomName);
  for (int i = 0; i < n; ++i) s.context.add(rng.pick(names));
  s.conclusion = rng.pick(names);
  return s;
}

AtomicRule random_rule(Rng& rng, const std::vector<std::string>& pool) {
  AtomicRule r;
  int prems = rng.upto(3);  // 0..2 premises
  for (int i = 0; i < prems; ++i)
    r.premises.push_back(random_atomic_sequent(rng, pool, 2));
  r.conclusion = random_atomic_sequent(rng, pool, 2);
  return r;
}

Base random_base(Rng& rng, const std::vector<std::string>& pool,
                 int max_rules) {
  Base b;
  int n = rng.upto(max_rules + 1);
  for (int i = 0; i < n; ++i) b.add_rule(random_rule(rng, pool));
  return b;
}

}  // namespace

ExtensionFamily generate_family(const Base& root, std::uint64_t seed,
                                int fam_size, int ext_rules,
                                const std::vector<std::string>& atom_pool) {
  Rng rng(seed);
  ExtensionFamily fam;
  fam.members.push_back(root);
  for (int i = 1; i < fam_size; ++i) {
    Base child = fam.members[static_cast<std::size_t>(
        rng.upto(static_cast<int>(fam.members.size())))];
    int n = 1 + rng.upto(std::max(1, ext_rules));
    for (int k = 0; k < n; ++k) child.add_rule(random_rule(rng, atom_pool));
    fam.members.push_back(std::move(child));
  }
  fam.vocabulary = atom_pool;
  fam.finalize();
  return fam;
}

// ---------------------------------------------------------------------------
// evaluator

SupportEvaluator::SupportEvaluator(const ExtensionFamily& fam,
                                   const EvalLimits& limits)
    : fam_(fam), limits_(limits) {
  // all multisets of size <= ctx_bound over the vocabulary, smallest first
  deltas_.emplace_back();
  std::vector<AtomicMultiset> frontier = deltas_;
  for (int s = 1; s <= limits_.ctx_bound; ++s) {
    std::vector<AtomicMultiset> next;
    for (const auto& m : frontier) {
      // extend with atoms >= the largest atom present, to enumerate each
      // multiset once
      std::string last;
      if (!m.counts().empty()) last = m.counts().rbegin()->first;
      for (const auto& a : fam_.vocabulary) {
        if (a < last) continue;
        AtomicMultiset e = m;
        e.add(a);
        next.push_back(std::move(e));
      }
    }
    deltas_.insert(deltas_.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  universe_ = fam_.vocabulary;
  for (const auto& m : fam_.members)
    provers_.emplace_back(m, limits_.atomic, universe_);
}

bool SupportEvaluator::derivable(int member, const AtomicSequent& s) {
  bool known = std::binary_search(universe_.begin(), universe_.end(),
                                  s.conclusion);
  for (const auto& [a, _] : s.context.counts())
    known = known && std::binary_search(universe_.begin(), universe_.end(), a);
  if (known)
    return provers_[static_cast<std::size_t>(member)].derivable(s);
  // judgment atoms outside the family vocabulary take the one-shot path
  std::string key = std::to_string(member) + "#" + s.render();
  auto it = derive_memo_.find(key);
  if (it != derive_memo_.end()) return it->second;
  bool found =
      derive_atomic(fam_.members[static_cast<std::size_t>(member)], s,
                    limits_.atomic)
          .has_value();
  derive_memo_.emplace(std::move(key), found);
  return found;
}

EvalResult SupportEvaluator::eval(const SupportJudgment& j, int member) {
  return eval_rec(j.antecedents, j.superscript, member, j.conclusion,
                  limits_.depth);
}

namespace {

std::string fm_key(const FormulaMultiset& fm) {
  std::string out;
  for (const auto& f : fm.items()) {
    out += print_formula(f);
    out += ',';
  }
  return out;
}

}  // namespace

EvalResult SupportEvaluator::eval_rec(const FormulaMultiset& gamma,
                                      const AtomicMultiset& sup, int member,
                                      const Formula& phi, int depth) {
  if (depth <= 0) return {};  // cannot refute beyond the recursion cap
  std::string key = fm_key(gamma) + "#" + sup.render() + "#" +
                    std::to_string(member) + "#" + print_formula(phi);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  EvalResult result;
  if (gamma.empty()) {
    result = eval_kind(sup, member, phi, depth);
  } else {
    // (Inf): for all C >= member and all Delta_i, if each antecedent is
    // supported relative to Delta_i then the conclusion is supported
    // relative to their union plus the superscript.
    const auto& items = gamma.items();
    for (std::size_t j = 0; j < fam_.members.size() && result.holds; ++j) {
      if (!fam_.extends[j][static_cast<std::size_t>(member)]) continue;
      std::vector<std::vector<std::size_t>> holding(items.size());
      for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t di = 0; di < deltas_.size(); ++di) {
          if (eval_rec({}, deltas_[di], static_cast<int>(j), items[i],
                       depth - 1)
                  .holds)
            holding[i].push_back(di);
        }
      }
      std::vector<std::size_t> combo(items.size(), 0);
      std::function<void(std::size_t)> product = [&](std::size_t i) {
        if (!result.holds) return;
        if (i == items.size()) {
          AtomicMultiset joined = sup;
          for (std::size_t k = 0; k < items.size(); ++k)
            joined = joined.united(deltas_[holding[k][combo[k]]]);
          EvalResult sub =
              eval_rec({}, joined, static_cast<int>(j), phi, depth - 1);
          if (!sub.holds) {
            result.holds = false;
            std::string ds;
            for (std::size_t k = 0; k < items.size(); ++k) {
              if (k) ds += " ; ";
              ds += "{" + deltas_[holding[k][combo[k]]].render() + "}";
            }
            result.trace.push_back("(Inf) member " + std::to_string(j) +
                                   ", antecedent multisets " + ds);
            result.trace.insert(result.trace.end(), sub.trace.begin(),
                                sub.trace.end());
            result.facts = std::move(sub.facts);
          }
          return;
        }
        for (std::size_t c = 0; c < holding[i].size() && result.holds; ++c) {
          combo[i] = c;
          product(i + 1);
        }
      };
      product(0);
    }
  }

  memo_.emplace(std::move(key), result);
  return result;
}

EvalResult SupportEvaluator::eval_kind(const AtomicMultiset& sup, int member,
                                       const Formula& phi, int depth) {
  EvalResult result;

  auto members_from = [&](int m) {
    std::vector<int> out;
    for (std::size_t j = 0; j < fam_.members.size(); ++j)
      if (fam_.extends[j][static_cast<std::size_t>(m)])
        out.push_back(static_cast<int>(j));
    return out;
  };

  auto refute = [&](std::string line, EvalResult sub) {
    result.holds = false;
    result.trace.push_back(std::move(line));
    result.trace.insert(result.trace.end(), sub.trace.begin(), sub.trace.end());
    for (auto& f : sub.facts) result.facts.push_back(std::move(f));
  };

  switch (phi.kind()) {
    case Conn::Atom: {
      // (At): if p, Delta |- bot in C then sup, Delta |- bot in C.
      const std::string& p = phi.atom_name();
      for (int j : members_from(member)) {
        for (const auto& delta : deltas_) {
          AtomicSequent prem{delta, kBottomName};
          prem.context.add(p);
          if (!derivable(j, prem)) continue;
          AtomicSequent concl{sup.united(delta), kBottomName};
          if (derivable(j, concl)) continue;
          result.holds = false;
          result.trace.push_back(
              "(At) member " + std::to_string(j) + ": '" + prem.render() +
              "' is derivable but '" + concl.render() + "' was not found");
          result.facts.push_back({j, prem});
          return result;
        }
      }
      return result;
    }
    case Conn::Top:
      return result;  // holds for all bases and multisets
    case Conn::Zero: {
      // (0): sup, Delta supports bot for every Delta, at this very base
      for (const auto& delta : deltas_) {
        EvalResult sub =
            eval_rec({}, sup.united(delta), member, Formula::bottom(), depth - 1);
        if (!sub.holds) {
          refute("(0) at Delta = {" + delta.render() + "}", std::move(sub));
          return result;
        }
      }
      return result;
    }
    case Conn::With: {
      EvalResult l = eval_rec({}, sup, member, phi.left(), depth - 1);
      if (!l.holds) {
        refute("(&) left component", std::move(l));
        return result;
      }
      EvalResult r = eval_rec({}, sup, member, phi.right(), depth - 1);
      if (!r.holds) {
        refute("(&) right component", std::move(r));
        return result;
      }
      return result;
    }
    case Conn::One: {
      for (int j : members_from(member)) {
        for (const auto& delta : deltas_) {
          if (!eval_rec({}, delta, j, Formula::bottom(), depth - 1).holds)
            continue;
          EvalResult sub =
              eval_rec({}, sup.united(delta), j, Formula::bottom(), depth - 1);
          if (!sub.holds) {
            refute("(1) member " + std::to_string(j) + ", Delta = {" +
                       delta.render() + "}",
                   std::move(sub));
            return result;
          }
        }
      }
      return result;
    }
    case Conn::Tensor: {
      for (int j : members_from(member)) {
        for (const auto& delta : deltas_) {
          FormulaMultiset both{phi.left(), phi.right()};
          if (!eval_rec(both, delta, j, Formula::bottom(), depth - 1).holds)
            continue;
          EvalResult sub =
              eval_rec({}, sup.united(delta), j, Formula::bottom(), depth - 1);
          if (!sub.holds) {
            refute("(*) member " + std::to_string(j) + ", Delta = {" +
                       delta.render() + "}",
                   std::move(sub));
            return result;
          }
        }
      }
      return result;
    }
    case Conn::Lolli: {
      for (int j : members_from(member)) {
        for (const auto& delta : deltas_) {
          if (!eval_rec({}, delta, j, phi.left(), depth - 1).holds) continue;
          for (const auto& theta : deltas_) {
            if (!eval_rec({phi.right()}, theta, j, Formula::bottom(), depth - 1)
                     .holds)
              continue;
            EvalResult sub = eval_rec({}, sup.united(delta).united(theta), j,
                                      Formula::bottom(), depth - 1);
            if (!sub.holds) {
              refute("(-o) member " + std::to_string(j) + ", Delta = {" +
                         delta.render() + "}, Theta = {" + theta.render() + "}",
                     std::move(sub));
              return result;
            }
          }
        }
      }
      return result;
    }
    case Conn::Par: {
      for (int j : members_from(member)) {
        for (const auto& delta : deltas_) {
          if (!eval_rec({phi.left()}, delta, j, Formula::bottom(), depth - 1)
                   .holds)
            continue;
          for (const auto& theta : deltas_) {
            if (!eval_rec({phi.right()}, theta, j, Formula::bottom(), depth - 1)
                     .holds)
              continue;
            EvalResult sub = eval_rec({}, sup.united(delta).united(theta), j,
                                      Formula::bottom(), depth - 1);
            if (!sub.holds) {
              refute("(|) member " + std::to_string(j) + ", Delta = {" +
                         delta.render() + "}, Theta = {" + theta.render() + "}",
                     std::move(sub));
              return result;
            }
          }
        }
      }
      return result;
    }
    case Conn::Plus: {
      for (int j : members_from(member)) {
        for (const auto& delta : deltas_) {
          if (!eval_rec({phi.left()}, delta, j, Formula::bottom(), depth - 1)
                   .holds)
            continue;
          if (!eval_rec({phi.right()}, delta, j, Formula::bottom(), depth - 1)
                   .holds)
            continue;
          EvalResult sub =
              eval_rec({}, sup.united(delta), j, Formula::bottom(), depth - 1);
          if (!sub.holds) {
            refute("(+) member " + std::to_string(j) + ", Delta = {" +
                       delta.render() + "}",
                   std::move(sub));
            return result;
          }
        }
      }
      return result;
    }
  }
  return result;
}

Base counterexample_base(const std::string& atom) {
  if (atom == kBottomName)
    throw std::invalid_argument("counterexample base needs an atom distinct "
                                "from bot");
  RuleSchema s;
  SequentPattern prem;
  prem.context.metavars = {"T"};
  prem.context.concrete.add(atom);
  prem.conclusion = kBottomName;
  SequentPattern concl;
  concl.context.metavars = {"T"};
  concl.conclusion = kBottomName;
  s.premises = {prem};
  s.conclusion = concl;
  Base b;
  b.add_schema(s);
  return b;
}

// ---------------------------------------------------------------------------
// lemma harness

namespace {

Formula random_formula(Rng& rng, const std::vector<std::string>& pool,
                       int max_depth) {
  if (max_depth <= 0 || rng.upto(100) < 45) {
    int c = rng.upto(8);
    if (c < 4) return Formula::atom(rng.pick(pool));
    switch (c) {
      case 4: return Formula::bottom();
      case 5: return Formula::one();
      case 6: return Formula::top();
      default: return Formula::zero();
    }
  }
  Formula l = random_formula(rng, pool, max_depth - 1);
  Formula r = random_formula(rng, pool, max_depth - 1);
  switch (rng.upto(5)) {
    case 0: return Formula::tensor(l, r);
    case 1: return Formula::par(l, r);
    case 2: return Formula::with(l, r);
    case 3: return Formula::plus(l, r);
    default: return Formula::lolli(l, r);
  }
}

AtomicMultiset random_multiset(Rng& rng, const std::vector<std::string>& pool,
                               int max_size) {
  AtomicMultiset m;
  int n = rng.upto(max_size + 1);
  for (int i = 0; i < n; ++i) m.add(rng.pick(pool));
  return m;
}

FormulaMultiset atoms_as_formulas(const AtomicMultiset& m) {
  FormulaMultiset out;
  for (const auto& [a, n] : m.counts())
    for (int i = 0; i < n; ++i) out.add(Formula::atom(a));
  return out;
}

struct TrialContext {
  Rng rng;
  const LemmaParams& params;
  Base base;
  ExtensionFamily fam;
  std::optional<SupportEvaluator> ev;

  TrialContext(std::uint64_t seed, const LemmaParams& p, bool structural_root)
      : rng(seed), params(p) {
    base = structural_root ? structural_base()
                           : random_base(rng, p.atom_pool, 4);
    fam = generate_family(base, rng.gen(), p.fam_size, p.ext_rules,
                          p.atom_pool);
    EvalLimits limits;
    limits.ctx_bound = p.ctx_bound;
    limits.atomic = p.atomic;
    ev.emplace(fam, limits);
  }

  bool holds(const FormulaMultiset& gamma, const AtomicMultiset& sup,
             int member, const Formula& phi) {
    return ev->eval({gamma, sup, phi}, member).holds;
  }
};

struct TrialResult {
  bool vacuous = false;
  std::string counterexample;  // empty = pass
};

using LemmaFn = std::function<TrialResult(std::uint64_t, const LemmaParams&)>;

std::string describe(const char* lemma, const std::string& details) {
  return std::string(lemma) + ": " + details;
}

TrialResult lemma_derivability_implies_support(std::uint64_t seed,
                                               const LemmaParams& p) {
  TrialContext t(seed, p, false);
  AtomicMultiset gamma;
  std::string atom;
  if (!t.base.rules.empty() && t.rng.upto(2) == 0) {
    const AtomicRule& r = t.base.rules[static_cast<std::size_t>(
        t.rng.upto(static_cast<int>(t.base.rules.size())))];
    gamma = r.conclusion.context;
    atom = r.conclusion.conclusion;
  } else {
    gamma = random_multiset(t.rng, p.atom_pool, 2);
    atom = t.rng.pick(p.atom_pool);
  }
  if (!derive_atomic(t.base, {gamma, atom}, p.atomic)) return {true, ""};
  if (!t.holds({}, gamma, 0, Formula::atom(atom)))
    return {false, describe("derivable but unsupported",
                            gamma.render() + " |- " + atom + " in base\n" +
                                t.base.render())};
  return {};
}

TrialResult lemma_bottom_special(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  AtomicMultiset gamma = random_multiset(t.rng, p.atom_pool, 2);
  bool sup = t.holds({}, gamma, 0, Formula::bottom());
  bool der = derive_atomic(t.base, {gamma, kBottomName}, p.atomic).has_value();
  if (sup != der)
    return {false,
            describe("support/derivability mismatch on bot",
                     "Gamma = {" + gamma.render() + "}, support=" +
                         (sup ? "holds" : "refuted") + ", derivable=" +
                         (der ? "yes" : "no") + "\nbase:\n" + t.base.render())};
  return {};
}

TrialResult lemma_monotonicity(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula phi = random_formula(t.rng, p.atom_pool, 2);
  FormulaMultiset gamma;
  if (t.rng.upto(2) == 0) gamma.add(random_formula(t.rng, p.atom_pool, 1));
  AtomicMultiset sup = random_multiset(t.rng, p.atom_pool, 2);
  int j = t.rng.upto(static_cast<int>(t.fam.members.size()));
  if (!t.holds(gamma, sup, 0, phi)) return {true, ""};
  if (!t.holds(gamma, sup, j, phi))
    return {false, describe("support lost under extension",
                            SupportJudgment{gamma, sup, phi}.render() +
                                " holds at the root but not at member " +
                                std::to_string(j))};
  return {};
}

TrialResult lemma_validity_via_s(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, true);  // root is the structural base
  Formula phi = random_formula(t.rng, p.atom_pool, 2);
  FormulaMultiset gamma;
  if (t.rng.upto(2) == 0) gamma.add(random_formula(t.rng, p.atom_pool, 1));
  bool at_s = t.holds(gamma, {}, 0, phi);
  bool everywhere = true;
  for (std::size_t j = 0; j < t.fam.members.size(); ++j)
    everywhere = everywhere && t.holds(gamma, {}, static_cast<int>(j), phi);
  if (at_s != everywhere)
    return {false,
            describe("validity-via-S mismatch",
                     SupportJudgment{gamma, {}, phi}.render() + ": at S " +
                         (at_s ? "holds" : "refuted") + ", across family " +
                         (everywhere ? "holds" : "refuted"))};
  return {};
}

TrialResult lemma_floating_atom(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  AtomicMultiset gamma = random_multiset(t.rng, p.atom_pool, 2);
  AtomicMultiset delta = random_multiset(t.rng, p.atom_pool, 2);
  bool lhs = t.holds(atoms_as_formulas(gamma), delta, 0, Formula::bottom());
  bool rhs = t.holds({}, gamma.united(delta), 0, Formula::bottom());
  if (lhs != rhs)
    return {false, describe("floating-atom mismatch",
                            "Gamma = {" + gamma.render() + "}, Delta = {" +
                                delta.render() + "}: left " +
                                (lhs ? "holds" : "refuted") + ", right " +
                                (rhs ? "holds" : "refuted") + "\nbase:\n" +
                                t.base.render())};
  return {};
}

TrialResult lemma_interchangeable_sets(std::uint64_t seed,
                                       const LemmaParams& p) {
  TrialContext t(seed, p, false);
  AtomicMultiset gamma = random_multiset(t.rng, p.atom_pool, 2);
  Formula phi = random_formula(t.rng, p.atom_pool, 2);
  bool lhs = t.holds(atoms_as_formulas(gamma), {}, 0, phi);
  bool rhs = t.holds({}, gamma, 0, phi);
  if (lhs != rhs)
    return {false, describe("interchangeable-sets mismatch",
                            "Gamma = {" + gamma.render() + "}, phi = " +
                                print_formula(phi) + ": left " +
                                (lhs ? "holds" : "refuted") + ", right " +
                                (rhs ? "holds" : "refuted"))};
  return {};
}

TrialResult lemma_partial_inf(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula alpha = random_formula(t.rng, p.atom_pool, 1);
  Formula phi = random_formula(t.rng, p.atom_pool, 1);
  Formula psi = random_formula(t.rng, p.atom_pool, 1);
  AtomicMultiset delta = random_multiset(t.rng, p.atom_pool, 1);
  AtomicMultiset theta = random_multiset(t.rng, p.atom_pool, 1);
  int c = t.rng.upto(static_cast<int>(t.fam.members.size()));
  if (!t.holds({alpha, phi}, delta, 0, psi)) return {true, ""};
  if (!t.holds({}, theta, c, alpha)) return {true, ""};
  if (!t.holds({phi}, delta.united(theta), c, psi))
    return {false, describe("partial-inf failure",
                            "alpha=" + print_formula(alpha) + " phi=" +
                                print_formula(phi) + " psi=" +
                                print_formula(psi) + " member " +
                                std::to_string(c))};
  return {};
}

TrialResult lemma_negating_formula(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula phi = random_formula(t.rng, p.atom_pool, 2);
  AtomicMultiset gamma = random_multiset(t.rng, p.atom_pool, 2);
  bool lhs = t.holds({phi}, gamma, 0, Formula::bottom());
  bool rhs = t.holds({}, gamma, 0, negate(phi));
  if (lhs != rhs)
    return {false, describe("negating-formula mismatch",
                            "phi = " + print_formula(phi) + ", Gamma = {" +
                                gamma.render() + "}: left " +
                                (lhs ? "holds" : "refuted") + ", right " +
                                (rhs ? "holds" : "refuted") + "\nbase:\n" +
                                t.base.render())};
  return {};
}

TrialResult lemma_generic_tensor(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula l = random_formula(t.rng, p.atom_pool, 1);
  Formula r = random_formula(t.rng, p.atom_pool, 1);
  Formula chi = random_formula(t.rng, p.atom_pool, 1);
  AtomicMultiset g = random_multiset(t.rng, p.atom_pool, 1);
  AtomicMultiset d = random_multiset(t.rng, p.atom_pool, 1);
  if (!t.holds({}, g, 0, Formula::tensor(l, r))) return {true, ""};
  if (!t.holds({l, r}, d, 0, chi)) return {true, ""};
  if (!t.holds({}, g.united(d), 0, chi))
    return {false, describe("generic tensor elimination failure",
                            print_formula(Formula::tensor(l, r)) + " with " +
                                print_formula(chi))};
  return {};
}

TrialResult lemma_generic_implication(std::uint64_t seed,
                                      const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula l = random_formula(t.rng, p.atom_pool, 1);
  Formula r = random_formula(t.rng, p.atom_pool, 1);
  Formula chi = random_formula(t.rng, p.atom_pool, 1);
  AtomicMultiset g = random_multiset(t.rng, p.atom_pool, 1);
  AtomicMultiset d = random_multiset(t.rng, p.atom_pool, 1);
  AtomicMultiset th = random_multiset(t.rng, p.atom_pool, 1);
  if (!t.holds({}, g, 0, Formula::lolli(l, r))) return {true, ""};
  if (!t.holds({}, d, 0, l)) return {true, ""};
  if (!t.holds({r}, th, 0, chi)) return {true, ""};
  if (!t.holds({}, g.united(d).united(th), 0, chi))
    return {false, describe("generic implication elimination failure",
                            print_formula(Formula::lolli(l, r)) + " with " +
                                print_formula(chi))};
  return {};
}

TrialResult lemma_generic_one(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula chi = random_formula(t.rng, p.atom_pool, 1);
  AtomicMultiset g = random_multiset(t.rng, p.atom_pool, 1);
  AtomicMultiset d = random_multiset(t.rng, p.atom_pool, 1);
  if (!t.holds({}, g, 0, Formula::one())) return {true, ""};
  if (!t.holds({}, d, 0, chi)) return {true, ""};
  if (!t.holds({}, g.united(d), 0, chi))
    return {false, describe("generic one elimination failure",
                            "chi = " + print_formula(chi))};
  return {};
}

TrialResult lemma_generic_plus(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula l = random_formula(t.rng, p.atom_pool, 1);
  Formula r = random_formula(t.rng, p.atom_pool, 1);
  Formula chi = random_formula(t.rng, p.atom_pool, 1);
  AtomicMultiset g = random_multiset(t.rng, p.atom_pool, 1);
  AtomicMultiset d = random_multiset(t.rng, p.atom_pool, 1);
  if (!t.holds({}, g, 0, Formula::plus(l, r))) return {true, ""};
  if (!t.holds({l}, d, 0, chi)) return {true, ""};
  if (!t.holds({r}, d, 0, chi)) return {true, ""};
  if (!t.holds({}, g.united(d), 0, chi))
    return {false, describe("generic plus elimination failure",
                            print_formula(Formula::plus(l, r)) + " with " +
                                print_formula(chi))};
  return {};
}

TrialResult lemma_generic_zero(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula chi = random_formula(t.rng, p.atom_pool, 1);
  AtomicMultiset g = random_multiset(t.rng, p.atom_pool, 1);
  AtomicMultiset d = random_multiset(t.rng, p.atom_pool, 1);
  if (!t.holds({}, g, 0, Formula::zero())) return {true, ""};
  if (!t.holds({}, g.united(d), 0, chi))
    return {false, describe("generic zero elimination failure",
                            "chi = " + print_formula(chi))};
  return {};
}

TrialResult lemma_generic_raa(std::uint64_t seed, const LemmaParams& p) {
  TrialContext t(seed, p, false);
  Formula phi = random_formula(t.rng, p.atom_pool, 1);
  FormulaMultiset gamma;
  if (t.rng.upto(2) == 0) gamma.add(random_formula(t.rng, p.atom_pool, 1));
  FormulaMultiset hyp = gamma;
  hyp.add(negate(phi));
  if (!t.holds(hyp, {}, 0, Formula::bottom())) return {true, ""};
  if (!t.holds(gamma, {}, 0, phi))
    return {false, describe("semantic reductio failure",
                            "phi = " + print_formula(phi) + "\nbase:\n" +
                                t.base.render())};
  return {};
}

const std::vector<std::pair<std::string, LemmaFn>>& lemma_table() {
  static const std::vector<std::pair<std::string, LemmaFn>> table = {
      {"derivability-implies-support", lemma_derivability_implies_support},
      {"bottom-special", lemma_bottom_special},
      {"monotonicity", lemma_monotonicity},
      {"validity-via-S", lemma_validity_via_s},
      {"floating-atom", lemma_floating_atom},
      {"interchangeable-sets", lemma_interchangeable_sets},
      {"partial-inf", lemma_partial_inf},
      {"negating-formula", lemma_negating_formula},
      {"generic-tensor", lemma_generic_tensor},
      {"generic-implication", lemma_generic_implication},
      {"generic-one", lemma_generic_one},
      {"generic-plus", lemma_generic_plus},
      {"generic-zero", lemma_generic_zero},
      {"generic-raa", lemma_generic_raa},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& registered_lemmas() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : lemma_table()) out.push_back(name);
    return out;
  }();
  return names;
}

LemmaOutcome check_lemma(const std::string& id, int trials, std::uint64_t seed,
                         const LemmaParams& params) {
  const LemmaFn* fn = nullptr;
  for (const auto& [name, f] : lemma_table())
    if (name == id) fn = &f;
  if (!fn) throw std::invalid_argument("unknown lemma id: " + id);

  LemmaOutcome out;
  std::mt19937_64 master(seed);
  for (int i = 0; i < trials; ++i) {
    std::uint64_t trial_seed = master();
    TrialResult r = (*fn)(trial_seed, params);
    out.trials_run++;
    if (r.vacuous) out.vacuous++;
    if (!r.counterexample.empty()) {
      out.pass = false;
      out.counterexample =
          "trial " + std::to_string(i) + " (seed " +
          std::to_string(trial_seed) + "): " + r.counterexample;
      return out;
    }
  }
  return out;
}

}  // namespace mallbes
