#include "mallbes/base.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace mallbes {

// ---------------------------------------------------------------------------
// rendering

std::string AtomicSequent::render() const {
  std::string out = context.render();
  if (!out.empty()) out += ' ';
  out += "|- ";
  out += conclusion;
  return out;
}

std::string SequentPattern::render() const {
  std::string out;
  for (const auto& v : context.metavars) {
    if (!out.empty()) out += ", ";
    out += "?" + v;
  }
  std::string conc = context.concrete.render();
  if (!conc.empty()) {
    if (!out.empty()) out += ", ";
    out += conc;
  }
  if (!out.empty()) out += ' ';
  out += "|- ";
  out += conclusion;
  return out;
}

namespace {

template <typename SeqT>
std::string render_rule(const std::vector<SeqT>& premises, const SeqT& concl) {
  std::string out;
  if (!premises.empty()) {
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (i) out += " ; ";
      out += premises[i].render();
    }
    out += " ==> ";
  }
  out += concl.render();
  out += '.';
  return out;
}

}  // namespace

std::string AtomicRule::render() const { return render_rule(premises, conclusion); }
std::string RuleSchema::render() const { return render_rule(premises, conclusion); }

void Base::add_rule(const AtomicRule& r) {
  if (!contains_rule(r)) rules.push_back(r);
}

void Base::add_schema(const RuleSchema& s) {
  if (!contains_schema(s)) schemas.push_back(s);
}

bool Base::contains_rule(const AtomicRule& r) const {
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}

bool Base::contains_schema(const RuleSchema& s) const {
  return std::find(schemas.begin(), schemas.end(), s) != schemas.end();
}

std::string Base::render() const {
  std::string out;
  for (const auto& r : rules) out += r.render() + "\n";
  for (const auto& s : schemas) out += s.render() + "\n";
  return out;
}

std::vector<std::string> Base::atom_vocabulary() const {
  std::set<std::string> atoms;
  auto add_seq = [&](const AtomicSequent& s) {
    for (const auto& [a, _] : s.context.counts()) atoms.insert(a);
    atoms.insert(s.conclusion);
  };
  auto add_pat = [&](const SequentPattern& p) {
    for (const auto& [a, _] : p.context.concrete.counts()) atoms.insert(a);
    atoms.insert(p.conclusion);
  };
  for (const auto& r : rules) {
    for (const auto& p : r.premises) add_seq(p);
    add_seq(r.conclusion);
  }
  for (const auto& s : schemas) {
    for (const auto& p : s.premises) add_pat(p);
    add_pat(s.conclusion);
  }
  atoms.erase(kBottomName);
  return {atoms.begin(), atoms.end()};
}

Base structural_base() { return Base{}; }

bool is_extension(const Base& c, const Base& b) {
  for (const auto& r : b.rules)
    if (!c.contains_rule(r)) return false;
  for (const auto& s : b.schemas)
    if (!c.contains_schema(s)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// base file parsing

namespace {

bool is_atom_start(char c) { return std::islower(static_cast<unsigned char>(c)); }
bool is_atom_char(char c) {
  return std::islower(static_cast<unsigned char>(c)) ||
         std::isdigit(static_cast<unsigned char>(c)) || c == '_';
}

struct BaseStmtParser {
  const std::string& text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }

  bool at_end() {
    skip_ws();
    return i >= text.size();
  }

  [[noreturn]] void err(const std::string& msg) { throw ParseError(msg, i); }

  bool try_consume(const std::string& s) {
    skip_ws();
    if (text.compare(i, s.size(), s) == 0) {
      i += s.size();
      return true;
    }
    return false;
  }

  void consume(const std::string& s, const char* what) {
    if (!try_consume(s)) err(std::string("expected ") + what);
  }

  std::string parse_atom_name() {
    skip_ws();
    if (i >= text.size() || !is_atom_start(text[i])) err("expected an atom");
    std::size_t start = i;
    while (i < text.size() && is_atom_char(text[i])) ++i;
    return text.substr(start, i - start);
  }

  // one context item: atom or ?Metavar
  void parse_item(ContextPattern& ctx) {
    skip_ws();
    if (i < text.size() && text[i] == '?') {
      ++i;
      if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i])))
        err("expected a metavariable name after '?'");
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      ctx.metavars.push_back(text.substr(start, i - start));
    } else {
      ctx.concrete.add(parse_atom_name());
    }
  }

  SequentPattern parse_sequent_pattern() {
    SequentPattern p;
    skip_ws();
    if (!try_consume("|-")) {
      parse_item(p.context);
      skip_ws();
      while (try_consume(",")) parse_item(p.context);
      consume("|-", "'|-'");
    }
    p.conclusion = parse_atom_name();
    std::sort(p.context.metavars.begin(), p.context.metavars.end());
    return p;
  }

  RuleSchema parse_statement() {
    RuleSchema schema;
    std::vector<SequentPattern> parts;
    parts.push_back(parse_sequent_pattern());
    while (try_consume(";")) parts.push_back(parse_sequent_pattern());
    if (try_consume("==>")) {
      schema.premises = std::move(parts);
      schema.conclusion = parse_sequent_pattern();
    } else {
      if (parts.size() != 1) err("premises require '==>' before a conclusion");
      schema.conclusion = std::move(parts[0]);
    }
    consume(".", "'.'");
    return schema;
  }
};

bool pattern_is_concrete(const SequentPattern& p) {
  return p.context.metavars.empty();
}

AtomicSequent pattern_to_sequent(const SequentPattern& p) {
  return AtomicSequent{p.context.concrete, p.conclusion};
}

}  // namespace

AtomicSequent parse_atomic_sequent(const std::string& text) {
  BaseStmtParser p{text};
  SequentPattern pat = p.parse_sequent_pattern();
  if (!p.at_end()) p.err("trailing input after sequent");
  if (!pattern_is_concrete(pat))
    p.err("metavariables are not allowed in a concrete sequent");
  return pattern_to_sequent(pat);
}

Base parse_base(const std::string& raw) {
  // strip # comments line-wise
  std::string text;
  std::istringstream lines(raw);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    text += line;
    text += '\n';
  }
  Base b;
  BaseStmtParser p{text};
  while (!p.at_end()) {
    RuleSchema s = p.parse_statement();
    bool concrete = pattern_is_concrete(s.conclusion);
    for (const auto& prem : s.premises) concrete &= pattern_is_concrete(prem);
    if (concrete) {
      AtomicRule r;
      for (const auto& prem : s.premises)
        r.premises.push_back(pattern_to_sequent(prem));
      r.conclusion = pattern_to_sequent(s.conclusion);
      b.add_rule(r);
    } else {
      b.add_schema(s);
    }
  }
  return b;
}

Base load_base_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open base file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_base(ss.str());
}

// ---------------------------------------------------------------------------
// derivations

int AtomicDerivation::depth() const {
  int d = 0;
  for (const auto& p : premises) d = std::max(d, p.depth());
  return d + 1;
}

std::string AtomicCheckResult::report() const {
  std::string out = ok ? "ok" : "violation";
  for (const auto& v : violations) out += "\n" + v.path + ": " + v.message;
  return out;
}

// ---------------------------------------------------------------------------
// schema matching (shared by verify and the file loader)

namespace {

using Env = std::map<std::string, AtomicMultiset>;

// Occurrence counts of each distinct metavariable in a pattern context.
std::map<std::string, int> metavar_occurrences(const ContextPattern& ctx) {
  std::map<std::string, int> occ;
  for (const auto& v : ctx.metavars) occ[v]++;
  return occ;
}

// Enumerate assignments X_v with sum_v occ_v * X_v == residue, calling fn for
// each. Variables are processed in sorted order for determinism.
void enumerate_assignments(
    const AtomicMultiset& residue, const std::vector<std::pair<std::string, int>>& vars,
    Env& env, const std::function<void()>& fn, bool& stop) {
  if (vars.empty()) {
    if (residue.empty()) fn();
    return;
  }
  // Recurse atom by atom over the residue, distributing counts.
  // Collect residue as a vector for index-based recursion.
  std::vector<std::pair<std::string, int>> atoms(residue.counts().begin(),
                                                 residue.counts().end());
  std::vector<AtomicMultiset> vals(vars.size());
  std::function<void(std::size_t)> per_atom = [&](std::size_t ai) {
    if (stop) return;
    if (ai == atoms.size()) {
      for (std::size_t k = 0; k < vars.size(); ++k) env[vars[k].first] = vals[k];
      fn();
      for (const auto& [name, _] : vars) env.erase(name);
      return;
    }
    const auto& [atom, total] = atoms[ai];
    std::function<void(std::size_t, int)> distribute = [&](std::size_t vi,
                                                           int remaining) {
      if (stop) return;
      if (vi + 1 == vars.size()) {
        int coeff = vars[vi].second;
        if (remaining % coeff == 0) {
          int take = remaining / coeff;
          if (take > 0) vals[vi].add(atom, take);
          per_atom(ai + 1);
          for (int t = 0; t < take; ++t) vals[vi].remove_one(atom);
        }
        return;
      }
      int coeff = vars[vi].second;
      for (int take = 0; take * coeff <= remaining; ++take) {
        if (take > 0) vals[vi].add(atom, take);
        distribute(vi + 1, remaining - take * coeff);
        for (int t = 0; t < take; ++t) vals[vi].remove_one(atom);
        if (stop) return;
      }
    };
    distribute(0, total);
  };
  per_atom(0);
}

// Try to match pattern against a concrete sequent, extending env; on full
// match calls fn. Unbound metavariables are enumerated over all decompositions
// of the leftover context.
void match_pattern(const SequentPattern& pat, const AtomicSequent& seq,
                   Env& env, const std::function<void()>& fn, bool& stop) {
  if (pat.conclusion != seq.conclusion) return;
  AtomicMultiset need = pat.context.concrete;
  std::vector<std::pair<std::string, int>> unbound;
  for (const auto& [v, occ] : metavar_occurrences(pat.context)) {
    auto it = env.find(v);
    if (it != env.end()) {
      for (int k = 0; k < occ; ++k) need = need.united(it->second);
    } else {
      unbound.emplace_back(v, occ);
    }
  }
  if (!seq.context.contains(need)) return;
  AtomicMultiset residue = seq.context.minus(need);
  enumerate_assignments(residue, unbound, env, fn, stop);
}

// Does the schema instantiate to (conclusion, premises)?
bool schema_matches(const RuleSchema& schema, const AtomicSequent& concl,
                    const std::vector<AtomicSequent>& premises) {
  if (premises.size() != schema.premises.size()) return false;
  bool found = false;
  Env env;
  std::function<void(std::size_t)> match_premises = [&](std::size_t i) {
    if (found) return;
    if (i == premises.size()) {
      found = true;
      return;
    }
    match_pattern(schema.premises[i], premises[i], env,
                  [&] { match_premises(i + 1); }, found);
  };
  match_pattern(schema.conclusion, concl, env, [&] { match_premises(0); },
                found);
  return found;
}

}  // namespace

AtomicCheckResult verify_atomic(const Base& b, const AtomicDerivation& d) {
  AtomicCheckResult result;
  std::function<void(const AtomicDerivation&, const std::string&)> walk =
      [&](const AtomicDerivation& node, const std::string& path) {
        for (std::size_t i = 0; i < node.premises.size(); ++i)
          walk(node.premises[i], path + "." + std::to_string(i));
        auto fail = [&](const std::string& msg) {
          result.ok = false;
          result.violations.push_back(
              {path, msg + " at " + node.conclusion.render()});
        };
        std::vector<AtomicSequent> prem_seqs;
        for (const auto& p : node.premises) prem_seqs.push_back(p.conclusion);
        switch (node.kind) {
          case AtomicDerivation::Kind::Ax: {
            AtomicMultiset want;
            want.add(node.conclusion.conclusion);
            if (!node.premises.empty() || !(node.conclusion.context == want))
              fail("Ax must conclude p |- p");
            return;
          }
          case AtomicDerivation::Kind::Subs: {
            if (node.premises.size() != 2) {
              fail("Subs needs two premises");
              return;
            }
            const std::string& cut = prem_seqs[0].conclusion;
            AtomicMultiset m = prem_seqs[1].context;
            if (!m.remove_one(cut)) {
              fail("Subs cut atom '" + cut + "' missing from second premise");
              return;
            }
            if (prem_seqs[1].conclusion != node.conclusion.conclusion ||
                !(node.conclusion.context == prem_seqs[0].context.united(m)))
              fail("Subs conclusion mismatch");
            return;
          }
          case AtomicDerivation::Kind::Rule: {
            if (node.index < 0 ||
                node.index >= static_cast<int>(b.rules.size())) {
              fail("rule index out of range");
              return;
            }
            const AtomicRule& r = b.rules[node.index];
            if (!(r.conclusion == node.conclusion) || !(r.premises == prem_seqs))
              fail("node is not an instance of rule '" + r.render() +
                   "' (fixed-context discipline)");
            return;
          }
          case AtomicDerivation::Kind::Schema: {
            if (node.index < 0 ||
                node.index >= static_cast<int>(b.schemas.size())) {
              fail("schema index out of range");
              return;
            }
            const RuleSchema& s = b.schemas[node.index];
            if (!schema_matches(s, node.conclusion, prem_seqs))
              fail("node does not instantiate schema '" + s.render() + "'");
            return;
          }
        }
      };
  walk(d, "root");
  return result;
}

// ---------------------------------------------------------------------------
// search engine on an interned universe

namespace {

using Ctx = std::vector<int16_t>;

struct ISeq {
  Ctx ctx;
  int concl;
  bool operator==(const ISeq&) const = default;
};

struct ISeqHash {
  std::size_t operator()(const ISeq& s) const {
    std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(s.concl);
    for (int16_t v : s.ctx) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

struct Engine {
  const Base& base;
  SearchBudget budget;

  std::vector<std::string> names;
  std::map<std::string, int> ids;
  int nat = 0;

  struct CPat {
    Ctx concrete;
    std::vector<int> occ;  // per-metavar occurrence count, size nvars
    int concl;
  };
  struct CSchema {
    std::vector<CPat> prems;
    CPat concl;
    int nvars = 0;
    std::vector<int> fresh;  // vars absent from the conclusion
  };
  struct CRule {
    std::vector<ISeq> prems;
    ISeq concl;
  };
  std::vector<CRule> crules;
  std::vector<CSchema> cschemas;
  std::vector<int> cut_atoms;

  long nodes = 0;
  bool aborted = false;

  struct MemoEntry {
    int fail_depth = -1;
    int succ = -1;
  };
  std::unordered_map<ISeq, MemoEntry, ISeqHash> memo;

  struct DNode {
    AtomicDerivation::Kind kind;
    int index;
    ISeq concl;
    std::vector<int> kids;
  };
  std::vector<DNode> pool;

  Engine(const Base& b, const SearchBudget& bud,
         const std::vector<std::string>& universe)
      : base(b), budget(bud) {
    intern(kBottomName);
    for (const auto& a : b.atom_vocabulary()) intern(a);
    for (const auto& a : universe) intern(a);
    nat = static_cast<int>(names.size());
    for (int i = 0; i < nat; ++i) cut_atoms.push_back(i);
    compile();
  }

  std::optional<AtomicDerivation> run(const AtomicSequent& goal,
                                      AtomicSearchStats* stats) {
    nodes = 0;
    aborted = false;
    ISeq igoal = to_iseq(goal);
    int found = -1;
    for (int d = 4;; d += 4) {
      if (d > budget.max_depth) d = budget.max_depth;
      found = search(igoal, d);
      if (found >= 0 || aborted || d >= budget.max_depth) break;
    }
    if (stats) {
      stats->nodes = nodes;
      stats->node_budget_hit = aborted;
    }
    if (found < 0) return std::nullopt;
    return extract(found);
  }

  int intern(const std::string& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.push_back(s);
    ids.emplace(s, id);
    return id;
  }

  Ctx to_ctx(const AtomicMultiset& m) const {
    Ctx c(static_cast<std::size_t>(nat), 0);
    for (const auto& [a, n] : m.counts())
      c[static_cast<std::size_t>(ids.at(a))] = static_cast<int16_t>(n);
    return c;
  }

  ISeq to_iseq(const AtomicSequent& s) const {
    return ISeq{to_ctx(s.context), ids.at(s.conclusion)};
  }

  AtomicSequent from_iseq(const ISeq& s) const {
    AtomicSequent out;
    for (int a = 0; a < nat; ++a)
      if (s.ctx[static_cast<std::size_t>(a)] > 0)
        out.context.add(names[static_cast<std::size_t>(a)],
                        s.ctx[static_cast<std::size_t>(a)]);
    out.conclusion = names[static_cast<std::size_t>(s.concl)];
    return out;
  }

  void compile() {
    for (const auto& r : base.rules) {
      CRule cr;
      for (const auto& p : r.premises) cr.prems.push_back(to_iseq(p));
      cr.concl = to_iseq(r.conclusion);
      crules.push_back(std::move(cr));
    }
    for (const auto& s : base.schemas) {
      CSchema cs;
      std::vector<std::string> vars;
      auto collect = [&](const SequentPattern& p) {
        for (const auto& v : p.context.metavars)
          if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
      };
      collect(s.conclusion);
      for (const auto& p : s.premises) collect(p);
      std::sort(vars.begin(), vars.end());
      cs.nvars = static_cast<int>(vars.size());
      auto compile_pat = [&](const SequentPattern& p) {
        CPat cp;
        cp.concrete = to_ctx(p.context.concrete);
        cp.occ.assign(static_cast<std::size_t>(cs.nvars), 0);
        for (const auto& v : p.context.metavars) {
          auto it = std::find(vars.begin(), vars.end(), v);
          cp.occ[static_cast<std::size_t>(it - vars.begin())]++;
        }
        cp.concl = ids.at(p.conclusion);
        return cp;
      };
      cs.concl = compile_pat(s.conclusion);
      for (const auto& p : s.premises) cs.prems.push_back(compile_pat(p));
      for (int v = 0; v < cs.nvars; ++v)
        if (cs.concl.occ[static_cast<std::size_t>(v)] == 0) cs.fresh.push_back(v);
      cschemas.push_back(std::move(cs));
    }
  }

  static bool ctx_contains(const Ctx& big, const Ctx& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
      if (small[i] > big[i]) return false;
    return true;
  }

  static Ctx ctx_minus(const Ctx& big, const Ctx& small) {
    Ctx out = big;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = static_cast<int16_t>(out[i] - small[i]);
    return out;
  }

  static Ctx ctx_plus(const Ctx& a, const Ctx& b) {
    Ctx out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = static_cast<int16_t>(out[i] + b[i]);
    return out;
  }

  static int ctx_total(const Ctx& c) {
    int t = 0;
    for (int16_t v : c) t += v;
    return t;
  }

  // Enumerate all submultisets of c (mixed radix).
  template <typename Fn>
  static void for_submultisets(const Ctx& c, Fn&& fn) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] > 0) pos.push_back(i);
    Ctx cur(c.size(), 0);
    while (true) {
      fn(cur);
      std::size_t k = 0;
      while (k < pos.size() && cur[pos[k]] == c[pos[k]]) {
        cur[pos[k]] = 0;
        ++k;
      }
      if (k == pos.size()) break;
      cur[pos[k]]++;
    }
  }

  // Enumerate envs (one Ctx per schema var) distributing residue over the
  // conclusion occurrence counts, then fresh vars over submultisets of the
  // goal context. Calls fn(env) for each.
  template <typename Fn>
  void enumerate_schema_envs(const CSchema& cs, const Ctx& residue,
                             const Ctx& goal_ctx, Fn&& fn) {
    std::vector<int> bound_vars;
    for (int v = 0; v < cs.nvars; ++v)
      if (cs.concl.occ[static_cast<std::size_t>(v)] > 0) bound_vars.push_back(v);
    std::vector<Ctx> env(static_cast<std::size_t>(cs.nvars),
                         Ctx(static_cast<std::size_t>(nat), 0));
    std::vector<std::size_t> atoms;
    for (std::size_t i = 0; i < residue.size(); ++i)
      if (residue[i] > 0) atoms.push_back(i);

    std::function<void(std::size_t)> fresh_rec;
    std::function<void(std::size_t)> atom_rec = [&](std::size_t ai) {
      if (aborted) return;
      if (ai == atoms.size()) {
        fresh_rec(0);
        return;
      }
      std::size_t atom = atoms[ai];
      int total = residue[atom];
      std::function<void(std::size_t, int)> dist = [&](std::size_t vi,
                                                       int remaining) {
        if (aborted) return;
        if (vi == bound_vars.size()) {
          if (remaining == 0) atom_rec(ai + 1);
          return;
        }
        int v = bound_vars[vi];
        int coeff = cs.concl.occ[static_cast<std::size_t>(v)];
        for (int take = 0; take * coeff <= remaining; ++take) {
          env[static_cast<std::size_t>(v)][atom] = static_cast<int16_t>(take);
          dist(vi + 1, remaining - take * coeff);
        }
        env[static_cast<std::size_t>(v)][atom] = 0;
      };
      if (bound_vars.empty()) {
        if (total == 0) atom_rec(ai + 1);
        return;
      }
      dist(0, total);
    };
    fresh_rec = [&](std::size_t fi) {
      if (aborted) return;
      if (fi == cs.fresh.size()) {
        fn(env);
        return;
      }
      int v = cs.fresh[fi];
      for_submultisets(goal_ctx, [&](const Ctx& sub) {
        env[static_cast<std::size_t>(v)] = sub;
        fresh_rec(fi + 1);
      });
      env[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(nat), 0);
    };
    if (bound_vars.empty() && ctx_total(residue) != 0) return;
    atom_rec(0);
  }

  ISeq instantiate(const CPat& pat, const std::vector<Ctx>& env) const {
    Ctx ctx = pat.concrete;
    for (std::size_t v = 0; v < pat.occ.size(); ++v)
      for (int k = 0; k < pat.occ[v]; ++k) ctx = ctx_plus(ctx, env[v]);
    return ISeq{std::move(ctx), pat.concl};
  }

  int make_node(AtomicDerivation::Kind kind, int index, const ISeq& concl,
                std::vector<int> kids) {
    pool.push_back(DNode{kind, index, concl, std::move(kids)});
    return static_cast<int>(pool.size()) - 1;
  }

  // Returns pool index of a derivation of goal, or -1.
  int search(const ISeq& goal, int depth) {
    {
      auto it = memo.find(goal);
      if (it != memo.end()) {
        if (it->second.succ >= 0) return it->second.succ;
        if (it->second.fail_depth >= depth) return -1;
      }
    }
    if (++nodes > budget.max_nodes) {
      aborted = true;
      return -1;
    }

    int result = -1;

    // Ax
    if (goal.ctx[static_cast<std::size_t>(goal.concl)] == 1 &&
        ctx_total(goal.ctx) == 1) {
      result = make_node(AtomicDerivation::Kind::Ax, -1, goal, {});
    }

    if (result < 0 && depth > 0) result = expand(goal, depth);

    auto& entry = memo[goal];
    if (result >= 0) {
      entry.succ = result;
    } else if (!aborted) {
      if (depth > entry.fail_depth) entry.fail_depth = depth;
    }
    return result;
  }

  int prove_premises(AtomicDerivation::Kind kind, int index, const ISeq& goal,
                     const std::vector<ISeq>& prems, int depth) {
    std::vector<int> kids;
    for (const auto& p : prems) {
      int r = search(p, depth - 1);
      if (r < 0) return -1;
      kids.push_back(r);
    }
    return make_node(kind, index, goal, std::move(kids));
  }

  int expand(const ISeq& goal, int depth) {
    // concrete rules
    for (std::size_t ri = 0; ri < crules.size(); ++ri) {
      const CRule& r = crules[ri];
      if (!(r.concl == goal)) continue;
      int n = prove_premises(AtomicDerivation::Kind::Rule, static_cast<int>(ri),
                             goal, r.prems, depth);
      if (n >= 0) return n;
      if (aborted) return -1;
    }
    // schemas
    for (std::size_t si = 0; si < cschemas.size(); ++si) {
      const CSchema& cs = cschemas[si];
      if (cs.concl.concl != goal.concl) continue;
      if (!ctx_contains(goal.ctx, cs.concl.concrete)) continue;
      Ctx residue = ctx_minus(goal.ctx, cs.concl.concrete);
      int found = -1;
      enumerate_schema_envs(cs, residue, goal.ctx, [&](const std::vector<Ctx>& env) {
        if (found >= 0 || aborted) return;
        std::vector<ISeq> prems;
        prems.reserve(cs.prems.size());
        for (const auto& p : cs.prems) prems.push_back(instantiate(p, env));
        int n = prove_premises(AtomicDerivation::Kind::Schema,
                               static_cast<int>(si), goal, prems, depth);
        if (n >= 0) found = n;
      });
      if (found >= 0) return found;
      if (aborted) return -1;
    }
    // Subs
    for (int c : cut_atoms) {
      int found = -1;
      for_submultisets(goal.ctx, [&](const Ctx& d1) {
        if (found >= 0 || aborted) return;
        // skip the identity split: d1 == {c} alone
        if (d1[static_cast<std::size_t>(c)] == 1 && ctx_total(d1) == 1) return;
        // skip re-deriving the goal itself as the left premise
        if (c == goal.concl && d1 == goal.ctx) return;
        ISeq s1{d1, c};
        int r1 = search(s1, depth - 1);
        if (r1 < 0) return;
        Ctx d2 = ctx_minus(goal.ctx, d1);
        d2[static_cast<std::size_t>(c)]++;
        ISeq s2{std::move(d2), goal.concl};
        int r2 = search(s2, depth - 1);
        if (r2 < 0) return;
        found = make_node(AtomicDerivation::Kind::Subs, -1, goal, {r1, r2});
      });
      if (found >= 0) return found;
      if (aborted) return -1;
    }
    return -1;
  }

  AtomicDerivation extract(int idx) const {
    const DNode& n = pool[static_cast<std::size_t>(idx)];
    AtomicDerivation out;
    out.kind = n.kind;
    out.index = n.index;
    out.conclusion = from_iseq(n.concl);
    for (int k : n.kids) out.premises.push_back(extract(k));
    return out;
  }
};

}  // namespace

std::optional<AtomicDerivation> derive_atomic(
    const Base& b, const AtomicSequent& goal, const SearchBudget& budget,
    AtomicSearchStats* stats, const std::vector<std::string>& extra_cut_atoms) {
  std::vector<std::string> universe = extra_cut_atoms;
  for (const auto& [a, _] : goal.context.counts()) universe.push_back(a);
  universe.push_back(goal.conclusion);
  Engine eng(b, budget, universe);
  return eng.run(goal, stats);
}

struct AtomicProver::Impl {
  Engine eng;
  Impl(const Base& b, const SearchBudget& budget,
       const std::vector<std::string>& universe)
      : eng(b, budget, universe) {}
};

AtomicProver::AtomicProver(const Base& b, const SearchBudget& budget,
                           const std::vector<std::string>& universe_atoms)
    : impl_(std::make_unique<Impl>(b, budget, universe_atoms)) {}

AtomicProver::~AtomicProver() = default;
AtomicProver::AtomicProver(AtomicProver&&) noexcept = default;
AtomicProver& AtomicProver::operator=(AtomicProver&&) noexcept = default;

std::optional<AtomicDerivation> AtomicProver::derive(const AtomicSequent& goal) {
  try {
    return impl_->eng.run(goal, nullptr);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("goal mentions an atom outside the prover's "
                                "universe: " + goal.render());
  }
}

bool AtomicProver::derivable(const AtomicSequent& goal) {
  return derive(goal).has_value();
}

// ---------------------------------------------------------------------------
// s-expressions

namespace {

const char* atomic_kind_label(AtomicDerivation::Kind k) {
  switch (k) {
    case AtomicDerivation::Kind::Ax: return "Ax";
    case AtomicDerivation::Kind::Subs: return "Subs";
    default: return "Rule";
  }
}

void atomic_sexpr_rec(const AtomicDerivation& d, std::string& out, int indent,
                      bool pretty) {
  if (pretty && indent > 0) {
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
  }
  out += '(';
  out += atomic_kind_label(d.kind);
  out += " \"";
  out += d.conclusion.render();
  out += '"';
  for (const auto& p : d.premises) {
    if (!pretty) out += ' ';
    atomic_sexpr_rec(p, out, indent + 1, pretty);
  }
  out += ')';
}

}  // namespace

std::string atomic_to_sexpr(const AtomicDerivation& d) {
  std::string out;
  atomic_sexpr_rec(d, out, 0, false);
  return out;
}

std::string atomic_to_sexpr_pretty(const AtomicDerivation& d) {
  std::string out;
  atomic_sexpr_rec(d, out, 0, true);
  out += '\n';
  return out;
}

namespace {

struct AtomicSexprParser {
  const std::string& text;
  const Base& base;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }

  [[noreturn]] void err(const std::string& msg) { throw ParseError(msg, i); }

  AtomicDerivation parse_node() {
    skip_ws();
    if (i >= text.size() || text[i] != '(') err("expected '('");
    ++i;
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
      ++i;
    std::string label = text.substr(start, i - start);
    skip_ws();
    if (i >= text.size() || text[i] != '"') err("expected quoted sequent");
    ++i;
    start = i;
    while (i < text.size() && text[i] != '"') ++i;
    if (i >= text.size()) err("unterminated sequent string");
    std::string seq_text = text.substr(start, i - start);
    ++i;
    AtomicDerivation node;
    node.conclusion = parse_atomic_sequent(seq_text);
    skip_ws();
    while (i < text.size() && text[i] == '(') {
      node.premises.push_back(parse_node());
      skip_ws();
    }
    if (i >= text.size() || text[i] != ')') err("expected ')'");
    ++i;

    if (label == "Ax") {
      node.kind = AtomicDerivation::Kind::Ax;
    } else if (label == "Subs") {
      node.kind = AtomicDerivation::Kind::Subs;
    } else if (label == "Rule") {
      resolve_rule(node);
    } else {
      err("unknown node label '" + label + "'");
    }
    return node;
  }

  void resolve_rule(AtomicDerivation& node) {
    std::vector<AtomicSequent> prems;
    for (const auto& p : node.premises) prems.push_back(p.conclusion);
    for (std::size_t ri = 0; ri < base.rules.size(); ++ri) {
      const AtomicRule& r = base.rules[ri];
      if (r.conclusion == node.conclusion && r.premises == prems) {
        node.kind = AtomicDerivation::Kind::Rule;
        node.index = static_cast<int>(ri);
        return;
      }
    }
    for (std::size_t si = 0; si < base.schemas.size(); ++si) {
      if (schema_matches(base.schemas[si], node.conclusion, prems)) {
        node.kind = AtomicDerivation::Kind::Schema;
        node.index = static_cast<int>(si);
        return;
      }
    }
    err("no rule or schema of the base matches node concluding " +
        node.conclusion.render());
  }
};

}  // namespace

AtomicDerivation atomic_from_sexpr(const std::string& text, const Base& b) {
  AtomicSexprParser p{text, b};
  AtomicDerivation d = p.parse_node();
  p.skip_ws();
  if (p.i != text.size()) p.err("trailing input after derivation");
  return d;
}

}  // namespace mallbes
