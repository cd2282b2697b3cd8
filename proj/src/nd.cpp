#include "mallbes/nd.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace mallbes {

namespace {

struct RuleInfo {
  const char* name;
  int arity;
};

const RuleInfo kRules[] = {
    {"Ax", 0},      {"Raa", 1},    {"TensorI", 2}, {"TensorE", 2},
    {"OneI", 0},    {"OneE", 2},   {"WithI", 2},   {"WithE1", 1},
    {"WithE2", 1},  {"TopI", 0},   {"LolliI", 1},  {"LolliE", 2},
    {"ParI", 1},    {"ParE", 3},   {"PlusI1", 1},  {"PlusI2", 1},
    {"PlusE", 3},   {"ZeroE", 1},  {"Subs", 2},
};

}  // namespace

const char* nd_rule_name(NdRule r) { return kRules[static_cast<int>(r)].name; }

std::optional<NdRule> nd_rule_from_name(const std::string& name) {
  for (int i = 0; i < static_cast<int>(std::size(kRules)); ++i)
    if (name == kRules[i].name) return static_cast<NdRule>(i);
  return std::nullopt;
}

bool nd_rule_is_admissible(NdRule r) { return r == NdRule::Subs; }

std::string NdCheckResult::report() const {
  std::string out = ok ? "ok" : "violation";
  for (const auto& v : violations) out += "\n" + v.path + ": " + v.message;
  return out;
}

namespace {

class Checker {
 public:
  Checker(bool allow_subs, bool allow_raa)
      : allow_subs_(allow_subs), allow_raa_(allow_raa) {}

  NdCheckResult run(const NdDerivation& d) {
    walk(d, "root");
    return std::move(result_);
  }

 private:
  bool allow_subs_, allow_raa_;
  NdCheckResult result_;

  void fail(const std::string& path, const std::string& msg) {
    result_.ok = false;
    result_.violations.push_back({path, msg});
  }

  void fail_seq(const std::string& path, const std::string& msg,
                const NdDerivation& d) {
    fail(path, msg + "; found " + print_sequent(d.conclusion));
  }

  // Premise context must equal conclusion context plus the given extras.
  bool ctx_is(const Sequent& premise, const FormulaMultiset& expected) {
    return premise.context == expected;
  }

  void walk(const NdDerivation& d, const std::string& path) {
    const RuleInfo& info = kRules[static_cast<int>(d.rule)];
    if (static_cast<int>(d.premises.size()) != info.arity) {
      fail(path, std::string(info.name) + " expects " +
                     std::to_string(info.arity) + " premises, has " +
                     std::to_string(d.premises.size()));
      return;
    }
    for (std::size_t i = 0; i < d.premises.size(); ++i)
      walk(d.premises[i], path + "." + std::to_string(i));
    check_node(d, path);
  }

  void check_node(const NdDerivation& d, const std::string& path) {
    const Sequent& c = d.conclusion;
    const auto& ps = d.premises;
    switch (d.rule) {
      case NdRule::Ax: {
        if (!(c.context == FormulaMultiset{c.conclusion}))
          fail_seq(path, "Ax concludes phi |- phi", d);
        return;
      }
      case NdRule::Raa: {
        if (!allow_raa_) {
          fail(path, "Raa is not allowed in intuitionistic mode");
          return;
        }
        // premise: G, ~phi |- bot ; conclusion: G |- phi
        if (!ps[0].conclusion.conclusion.is_bottom()) {
          fail_seq(path, "Raa premise must conclude bot", ps[0]);
          return;
        }
        FormulaMultiset want = c.context;
        want.add(negate(c.conclusion));
        if (!ctx_is(ps[0].conclusion, want))
          fail(path, "Raa premise context must be the conclusion context "
                     "plus ~" + print_formula(c.conclusion) + "; found " +
                     print_sequent(ps[0].conclusion));
        return;
      }
      case NdRule::TensorI: {
        if (c.conclusion.kind() != Conn::Tensor) {
          fail_seq(path, "TensorI must conclude a tensor", d);
          return;
        }
        if (!(ps[0].conclusion.conclusion == c.conclusion.left()) ||
            !(ps[1].conclusion.conclusion == c.conclusion.right())) {
          fail(path, "TensorI premises must conclude the components");
          return;
        }
        if (!(c.context == ps[0].conclusion.context.united(ps[1].conclusion.context)))
          fail_seq(path, "TensorI conclusion context must be the multiset "
                         "union of the premise contexts", d);
        return;
      }
      case NdRule::TensorE: {
        const Formula& major = ps[0].conclusion.conclusion;
        if (major.kind() != Conn::Tensor) {
          fail_seq(path, "TensorE major premise must conclude a tensor", ps[0]);
          return;
        }
        FormulaMultiset minor_ctx = ps[1].conclusion.context;
        if (!minor_ctx.remove_one(major.left()) ||
            !minor_ctx.remove_one(major.right())) {
          fail(path, "TensorE minor premise context must contain both tensor "
                     "components");
          return;
        }
        if (!(ps[1].conclusion.conclusion == c.conclusion)) {
          fail(path, "TensorE conclusion formula must match the minor premise");
          return;
        }
        if (!(c.context == ps[0].conclusion.context.united(minor_ctx)))
          fail_seq(path, "TensorE conclusion context mismatch", d);
        return;
      }
      case NdRule::OneI: {
        if (c.conclusion.kind() != Conn::One || !c.context.empty())
          fail_seq(path, "OneI concludes |- 1", d);
        return;
      }
      case NdRule::OneE: {
        if (ps[1].conclusion.conclusion.kind() != Conn::One) {
          fail_seq(path, "OneE second premise must conclude 1", ps[1]);
          return;
        }
        if (!(ps[0].conclusion.conclusion == c.conclusion)) {
          fail(path, "OneE conclusion formula must match the first premise");
          return;
        }
        if (!(c.context == ps[0].conclusion.context.united(ps[1].conclusion.context)))
          fail_seq(path, "OneE conclusion context mismatch", d);
        return;
      }
      case NdRule::WithI: {
        if (c.conclusion.kind() != Conn::With) {
          fail_seq(path, "WithI must conclude a with", d);
          return;
        }
        if (!(ps[0].conclusion.conclusion == c.conclusion.left()) ||
            !(ps[1].conclusion.conclusion == c.conclusion.right())) {
          fail(path, "WithI premises must conclude the components");
          return;
        }
        if (!(ps[0].conclusion.context == c.context) ||
            !(ps[1].conclusion.context == c.context))
          fail_seq(path, "WithI premises must share the conclusion context", d);
        return;
      }
      case NdRule::WithE1:
      case NdRule::WithE2: {
        const Formula& major = ps[0].conclusion.conclusion;
        if (major.kind() != Conn::With) {
          fail_seq(path, "WithE premise must conclude a with", ps[0]);
          return;
        }
        Formula want =
            d.rule == NdRule::WithE1 ? major.left() : major.right();
        if (!(c.conclusion == want)) {
          fail_seq(path, "WithE conclusion must be the selected component", d);
          return;
        }
        if (!(c.context == ps[0].conclusion.context))
          fail_seq(path, "WithE must preserve the premise context", d);
        return;
      }
      case NdRule::TopI: {
        if (c.conclusion.kind() != Conn::Top)
          fail_seq(path, "TopI must conclude top", d);
        return;
      }
      case NdRule::LolliI: {
        if (c.conclusion.kind() != Conn::Lolli) {
          fail_seq(path, "LolliI must conclude an implication", d);
          return;
        }
        FormulaMultiset want = c.context;
        want.add(c.conclusion.left());
        if (!(ps[0].conclusion.conclusion == c.conclusion.right()) ||
            !ctx_is(ps[0].conclusion, want))
          fail_seq(path, "LolliI premise must be the context plus the "
                         "antecedent, concluding the consequent", ps[0]);
        return;
      }
      case NdRule::LolliE: {
        const Formula& major = ps[0].conclusion.conclusion;
        if (major.kind() != Conn::Lolli) {
          fail_seq(path, "LolliE major premise must conclude an implication",
                   ps[0]);
          return;
        }
        if (!(ps[1].conclusion.conclusion == major.left())) {
          fail(path, "LolliE second premise must conclude the antecedent");
          return;
        }
        if (!(c.conclusion == major.right())) {
          fail_seq(path, "LolliE conclusion must be the consequent", d);
          return;
        }
        if (!(c.context == ps[0].conclusion.context.united(ps[1].conclusion.context)))
          fail_seq(path, "LolliE conclusion context mismatch", d);
        return;
      }
      case NdRule::ParI: {
        if (c.conclusion.kind() != Conn::Par) {
          fail_seq(path, "ParI must conclude a par", d);
          return;
        }
        if (!ps[0].conclusion.conclusion.is_bottom()) {
          fail_seq(path, "ParI premise must conclude bot", ps[0]);
          return;
        }
        FormulaMultiset want = c.context;
        want.add(negate(c.conclusion.left()));
        want.add(negate(c.conclusion.right()));
        if (!ctx_is(ps[0].conclusion, want))
          fail_seq(path, "ParI premise context must add the negated "
                         "components", ps[0]);
        return;
      }
      case NdRule::ParE: {
        const Formula& major = ps[0].conclusion.conclusion;
        if (major.kind() != Conn::Par) {
          fail_seq(path, "ParE major premise must conclude a par", ps[0]);
          return;
        }
        if (!c.conclusion.is_bottom()) {
          fail_seq(path, "ParE must conclude bot", d);
          return;
        }
        for (int i : {1, 2}) {
          if (!ps[i].conclusion.conclusion.is_bottom()) {
            fail_seq(path, "ParE minor premises must conclude bot", ps[i]);
            return;
          }
        }
        FormulaMultiset m1 = ps[1].conclusion.context;
        FormulaMultiset m2 = ps[2].conclusion.context;
        if (!m1.remove_one(major.left()) || !m2.remove_one(major.right())) {
          fail(path, "ParE minor premises must consume the par components");
          return;
        }
        if (!(c.context == ps[0].conclusion.context.united(m1).united(m2)))
          fail_seq(path, "ParE conclusion context mismatch", d);
        return;
      }
      case NdRule::PlusI1:
      case NdRule::PlusI2: {
        if (c.conclusion.kind() != Conn::Plus) {
          fail_seq(path, "PlusI must conclude a plus", d);
          return;
        }
        Formula want = d.rule == NdRule::PlusI1 ? c.conclusion.left()
                                                : c.conclusion.right();
        if (!(ps[0].conclusion.conclusion == want) ||
            !(ps[0].conclusion.context == c.context))
          fail_seq(path, "PlusI premise mismatch", ps[0]);
        return;
      }
      case NdRule::PlusE: {
        const Formula& major = ps[0].conclusion.conclusion;
        if (major.kind() != Conn::Plus) {
          fail_seq(path, "PlusE major premise must conclude a plus", ps[0]);
          return;
        }
        FormulaMultiset m1 = ps[1].conclusion.context;
        FormulaMultiset m2 = ps[2].conclusion.context;
        if (!m1.remove_one(major.left()) || !m2.remove_one(major.right())) {
          fail(path, "PlusE minor premises must consume the plus components");
          return;
        }
        if (!(m1 == m2)) {
          fail(path, "PlusE minor premises must share their side context");
          return;
        }
        if (!(ps[1].conclusion.conclusion == c.conclusion) ||
            !(ps[2].conclusion.conclusion == c.conclusion)) {
          fail(path, "PlusE minor premises must conclude the rule conclusion");
          return;
        }
        if (!(c.context == ps[0].conclusion.context.united(m1)))
          fail_seq(path, "PlusE conclusion context mismatch", d);
        return;
      }
      case NdRule::ZeroE: {
        if (ps[0].conclusion.conclusion.kind() != Conn::Zero) {
          fail_seq(path, "ZeroE premise must conclude 0", ps[0]);
          return;
        }
        // conclusion context is the premise context plus arbitrary weakening
        FormulaMultiset rest = c.context;
        for (const auto& f : ps[0].conclusion.context.items()) {
          if (!rest.remove_one(f)) {
            fail_seq(path, "ZeroE conclusion context must contain the premise "
                           "context", d);
            return;
          }
        }
        return;
      }
      case NdRule::Subs: {
        if (!allow_subs_) {
          fail(path, "Subs is not allowed (admissible rule disabled)");
          return;
        }
        const Formula& cut = ps[0].conclusion.conclusion;
        FormulaMultiset m = ps[1].conclusion.context;
        if (!m.remove_one(cut)) {
          fail(path, "Subs second premise context must contain the cut "
                     "formula " + print_formula(cut));
          return;
        }
        if (!(ps[1].conclusion.conclusion == c.conclusion)) {
          fail(path, "Subs conclusion formula must match the second premise");
          return;
        }
        if (!(c.context == ps[0].conclusion.context.united(m)))
          fail_seq(path, "Subs conclusion context mismatch", d);
        return;
      }
    }
  }
};

}  // namespace

NdCheckResult check_nd(const NdDerivation& d, bool allow_subs, bool allow_raa) {
  return Checker(allow_subs, allow_raa).run(d);
}

NdDerivation compose(const NdDerivation& d1, const NdDerivation& d2) {
  const Formula& phi = d1.conclusion.conclusion;
  FormulaMultiset rest = d2.conclusion.context;
  if (!rest.remove_one(phi))
    throw std::invalid_argument(
        "compose: premise mismatch, " + print_formula(phi) +
        " does not occur in the context of " + print_sequent(d2.conclusion));
  NdDerivation out;
  out.rule = NdRule::Subs;
  out.conclusion.context = d1.conclusion.context.united(rest);
  out.conclusion.conclusion = d2.conclusion.conclusion;
  out.premises = {d1, d2};
  return out;
}

bool normal_form_check(const NdDerivation& d) {
  for (const auto& p : d.premises)
    if (!normal_form_check(p)) return false;
  switch (d.rule) {
    case NdRule::TensorE:
      return d.premises[1].conclusion.conclusion.is_bottom();
    case NdRule::PlusE:
      return d.premises[1].conclusion.conclusion.is_bottom() &&
             d.premises[2].conclusion.conclusion.is_bottom();
    case NdRule::ParE:
      return d.premises[1].conclusion.conclusion.is_bottom() &&
             d.premises[2].conclusion.conclusion.is_bottom();
    case NdRule::ZeroE:  // no minor premises
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// s-expressions: (RULE "sequent" child*)

namespace {

void sexpr_rec(const NdDerivation& d, std::string& out, int indent,
               bool pretty) {
  if (pretty && indent > 0) {
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
  }
  out += '(';
  out += nd_rule_name(d.rule);
  out += " \"";
  out += print_sequent(d.conclusion);
  out += '"';
  for (const auto& p : d.premises) {
    if (!pretty) out += ' ';
    sexpr_rec(p, out, indent + 1, pretty);
  }
  out += ')';
}

struct SexprParser {
  const std::string& text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }

  [[noreturn]] void err(const std::string& msg) { throw ParseError(msg, i); }

  NdDerivation parse_node() {
    skip_ws();
    if (i >= text.size() || text[i] != '(') err("expected '('");
    ++i;
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i]))))
      ++i;
    std::string rule_name = text.substr(start, i - start);
    auto rule = nd_rule_from_name(rule_name);
    if (!rule) err("unknown rule label '" + rule_name + "'");
    skip_ws();
    if (i >= text.size() || text[i] != '"') err("expected quoted sequent");
    ++i;
    start = i;
    while (i < text.size() && text[i] != '"') ++i;
    if (i >= text.size()) err("unterminated sequent string");
    std::string seq_text = text.substr(start, i - start);
    ++i;
    NdDerivation node;
    node.rule = *rule;
    node.conclusion = parse_sequent(seq_text);
    skip_ws();
    while (i < text.size() && text[i] == '(') {
      node.premises.push_back(parse_node());
      skip_ws();
    }
    if (i >= text.size() || text[i] != ')') err("expected ')'");
    ++i;
    return node;
  }
};

}  // namespace

std::string nd_to_sexpr(const NdDerivation& d) {
  std::string out;
  sexpr_rec(d, out, 0, false);
  return out;
}

std::string nd_to_sexpr_pretty(const NdDerivation& d) {
  std::string out;
  sexpr_rec(d, out, 0, true);
  out += '\n';
  return out;
}

NdDerivation nd_from_sexpr(const std::string& text) {
  SexprParser p{text};
  NdDerivation d = p.parse_node();
  p.skip_ws();
  if (p.i != text.size()) p.err("trailing input after derivation");
  return d;
}

// ---------------------------------------------------------------------------
// bounded exhaustive search

namespace {

std::string seq_key(const Sequent& s) { return print_sequent(s); }

// All ways to split a formula multiset in two (ordered pairs).
void formula_splits(const FormulaMultiset& ctx,
                    std::vector<std::pair<FormulaMultiset, FormulaMultiset>>& out) {
  // group into runs of equal formulas
  std::vector<std::pair<Formula, int>> runs;
  for (const auto& f : ctx.items()) {
    if (!runs.empty() && runs.back().first == f)
      runs.back().second++;
    else
      runs.emplace_back(f, 1);
  }
  std::vector<int> take(runs.size(), 0);
  while (true) {
    FormulaMultiset a, b;
    for (std::size_t k = 0; k < runs.size(); ++k) {
      for (int i = 0; i < take[k]; ++i) a.add(runs[k].first);
      for (int i = take[k]; i < runs[k].second; ++i) b.add(runs[k].first);
    }
    out.emplace_back(std::move(a), std::move(b));
    std::size_t k = 0;
    while (k < runs.size() && take[k] == runs[k].second) take[k++] = 0;
    if (k == runs.size()) break;
    take[k]++;
  }
}

class NdSearcher {
 public:
  NdSearcher(const Sequent& goal, const NdSearchBudget& budget, bool allow_raa)
      : budget_(budget), allow_raa_(allow_raa) {
    std::set<Formula> seed;
    for (const auto& f : goal.context.items()) seed.insert(f);
    seed.insert(goal.conclusion);
    candidates_ = subformula_closure(seed);
  }

  std::optional<NdDerivation> run(const Sequent& goal) {
    for (int d = 2; d <= budget_.max_depth; d += 2) {
      auto r = search(goal, d);
      if (r || aborted_) return r;
    }
    if (budget_.max_depth % 2 == 1) return search(goal, budget_.max_depth);
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }

 private:
  NdSearchBudget budget_;
  bool allow_raa_;
  std::set<Formula> candidates_;
  std::unordered_map<std::string, int> fail_depth_;
  long nodes_ = 0;
  bool aborted_ = false;

  std::optional<NdDerivation> search(const Sequent& goal, int depth) {
    std::string key = seq_key(goal);
    auto it = fail_depth_.find(key);
    if (it != fail_depth_.end() && it->second >= depth) return std::nullopt;
    if (++nodes_ > budget_.max_nodes) {
      aborted_ = true;
      return std::nullopt;
    }

    // leaves
    if (goal.context == FormulaMultiset{goal.conclusion})
      return NdDerivation{goal, NdRule::Ax, {}};
    if (goal.conclusion.kind() == Conn::One && goal.context.empty())
      return NdDerivation{goal, NdRule::OneI, {}};
    if (goal.conclusion.kind() == Conn::Top)
      return NdDerivation{goal, NdRule::TopI, {}};

    if (depth <= 0) return std::nullopt;

    auto result = expand(goal, depth);
    if (!result && !aborted_) {
      int& fd = fail_depth_[key];
      if (depth > fd) fd = depth;
    }
    return result;
  }

  std::optional<NdDerivation> prove_all(
      const Sequent& goal, NdRule rule, const std::vector<Sequent>& premises,
      int depth) {
    NdDerivation node{goal, rule, {}};
    for (const auto& p : premises) {
      auto sub = search(p, depth - 1);
      if (!sub) return std::nullopt;
      node.premises.push_back(std::move(*sub));
    }
    return node;
  }

  std::optional<NdDerivation> expand(const Sequent& goal, int depth) {
    const Formula& c = goal.conclusion;
    std::vector<std::pair<FormulaMultiset, FormulaMultiset>> splits;
    formula_splits(goal.context, splits);

    // introductions
    switch (c.kind()) {
      case Conn::Tensor:
        for (const auto& [g, d] : splits) {
          if (auto r = prove_all(goal, NdRule::TensorI,
                                 {{g, c.left()}, {d, c.right()}}, depth))
            return r;
          if (aborted_) return std::nullopt;
        }
        break;
      case Conn::With: {
        if (auto r = prove_all(goal, NdRule::WithI,
                               {{goal.context, c.left()},
                                {goal.context, c.right()}}, depth))
          return r;
        break;
      }
      case Conn::Plus: {
        if (auto r = prove_all(goal, NdRule::PlusI1,
                               {{goal.context, c.left()}}, depth))
          return r;
        if (auto r = prove_all(goal, NdRule::PlusI2,
                               {{goal.context, c.right()}}, depth))
          return r;
        break;
      }
      case Conn::Lolli: {
        FormulaMultiset ctx = goal.context;
        ctx.add(c.left());
        if (auto r = prove_all(goal, NdRule::LolliI, {{ctx, c.right()}}, depth))
          return r;
        break;
      }
      case Conn::Par: {
        FormulaMultiset ctx = goal.context;
        ctx.add(negate(c.left()));
        ctx.add(negate(c.right()));
        if (auto r = prove_all(goal, NdRule::ParI,
                               {{ctx, Formula::bottom()}}, depth))
          return r;
        break;
      }
      default:
        break;
    }

    if (allow_raa_) {
      FormulaMultiset ctx = goal.context;
      ctx.add(negate(c));
      if (auto r = prove_all(goal, NdRule::Raa, {{ctx, Formula::bottom()}}, depth))
        return r;
      if (aborted_) return std::nullopt;
    }

    // eliminations, majors drawn from the closure
    for (const auto& major : candidates_) {
      if (aborted_) return std::nullopt;
      switch (major.kind()) {
        case Conn::Tensor:
          for (const auto& [g, d] : splits) {
            FormulaMultiset minor = d;
            minor.add(major.left());
            minor.add(major.right());
            if (auto r = prove_all(goal, NdRule::TensorE,
                                   {{g, major}, {minor, c}}, depth))
              return r;
            if (aborted_) return std::nullopt;
          }
          break;
        case Conn::Lolli:
          if (major.right() == c) {
            for (const auto& [g, d] : splits) {
              if (auto r = prove_all(goal, NdRule::LolliE,
                                     {{g, major}, {d, major.left()}}, depth))
                return r;
              if (aborted_) return std::nullopt;
            }
          }
          break;
        case Conn::With:
          if (major.left() == c) {
            if (auto r = prove_all(goal, NdRule::WithE1,
                                   {{goal.context, major}}, depth))
              return r;
          }
          if (major.right() == c) {
            if (auto r = prove_all(goal, NdRule::WithE2,
                                   {{goal.context, major}}, depth))
              return r;
          }
          break;
        case Conn::Plus:
          for (const auto& [g, d] : splits) {
            FormulaMultiset m1 = d, m2 = d;
            m1.add(major.left());
            m2.add(major.right());
            if (auto r = prove_all(goal, NdRule::PlusE,
                                   {{g, major}, {m1, c}, {m2, c}}, depth))
              return r;
            if (aborted_) return std::nullopt;
          }
          break;
        case Conn::Par:
          if (c.is_bottom()) {
            for (const auto& [g, rest] : splits) {
              std::vector<std::pair<FormulaMultiset, FormulaMultiset>> inner;
              formula_splits(rest, inner);
              for (const auto& [d1, d2] : inner) {
                FormulaMultiset m1 = d1, m2 = d2;
                m1.add(major.left());
                m2.add(major.right());
                if (auto r = prove_all(goal, NdRule::ParE,
                                       {{g, major},
                                        {m1, Formula::bottom()},
                                        {m2, Formula::bottom()}}, depth))
                  return r;
                if (aborted_) return std::nullopt;
              }
            }
          }
          break;
        case Conn::One:
          for (const auto& [g, d] : splits) {
            if (auto r = prove_all(goal, NdRule::OneE,
                                   {{g, c}, {d, major}}, depth))
              return r;
            if (aborted_) return std::nullopt;
          }
          break;
        case Conn::Zero:
          for (const auto& [g, d] : splits) {
            (void)d;  // ZeroE weakens: any split of the context may be dropped
            if (auto r = prove_all(goal, NdRule::ZeroE, {{g, major}}, depth))
              return r;
            if (aborted_) return std::nullopt;
          }
          break;
        default:
          break;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<NdDerivation> search_nd(const Sequent& goal,
                                      const NdSearchBudget& budget,
                                      bool allow_raa) {
  return NdSearcher(goal, budget, allow_raa).run(goal);
}

}  // namespace mallbes
