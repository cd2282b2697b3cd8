#include "mallbes/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace mallbes {

Nnf Nnf::make(NnfKind k, const std::string& atom, const Nnf* l, const Nnf* r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->atom = atom;
  if (l) {
    n->l = l->node_;
    n->size += l->size();
  }
  if (r) {
    n->r = r->node_;
    n->size += r->size();
  }
  return Nnf(std::move(n));
}

Nnf::Nnf() : node_(Nnf::bot().node_) {}

Nnf Nnf::pos(const std::string& atom) { return make(NnfKind::Pos, atom, nullptr, nullptr); }
Nnf Nnf::neg(const std::string& atom) { return make(NnfKind::Neg, atom, nullptr, nullptr); }
Nnf Nnf::one() { return make(NnfKind::One, "", nullptr, nullptr); }
Nnf Nnf::bot() { return make(NnfKind::Bot, "", nullptr, nullptr); }
Nnf Nnf::top() { return make(NnfKind::Top, "", nullptr, nullptr); }
Nnf Nnf::zero() { return make(NnfKind::Zero, "", nullptr, nullptr); }
Nnf Nnf::tensor(const Nnf& l, const Nnf& r) { return make(NnfKind::Tensor, "", &l, &r); }
Nnf Nnf::par(const Nnf& l, const Nnf& r) { return make(NnfKind::Par, "", &l, &r); }
Nnf Nnf::with(const Nnf& l, const Nnf& r) { return make(NnfKind::With, "", &l, &r); }
Nnf Nnf::plus(const Nnf& l, const Nnf& r) { return make(NnfKind::Plus, "", &l, &r); }

const std::string& Nnf::atom() const {
  if (node_->kind != NnfKind::Pos && node_->kind != NnfKind::Neg)
    throw std::logic_error("atom on non-literal");
  return node_->atom;
}

bool Nnf::is_binary() const {
  switch (node_->kind) {
    case NnfKind::Tensor:
    case NnfKind::Par:
    case NnfKind::With:
    case NnfKind::Plus:
      return true;
    default:
      return false;
  }
}

Nnf Nnf::left() const {
  if (!is_binary()) throw std::logic_error("left on non-binary nnf");
  return Nnf(node_->l);
}

Nnf Nnf::right() const {
  if (!is_binary()) throw std::logic_error("right on non-binary nnf");
  return Nnf(node_->r);
}

bool Nnf::operator==(const Nnf& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Nnf::operator<=>(const Nnf& other) const {
  if (node_.get() == other.node_.get()) return std::strong_ordering::equal;
  if (auto c = size() <=> other.size(); c != 0) return c;
  if (auto c = static_cast<int>(kind()) <=> static_cast<int>(other.kind()); c != 0)
    return c;
  switch (kind()) {
    case NnfKind::Pos:
    case NnfKind::Neg:
      return node_->atom <=> other.node_->atom;
    case NnfKind::Tensor:
    case NnfKind::Par:
    case NnfKind::With:
    case NnfKind::Plus: {
      if (auto c = left() <=> other.left(); c != 0) return c;
      return right() <=> other.right();
    }
    default:
      return std::strong_ordering::equal;
  }
}

std::string Nnf::render() const {
  switch (kind()) {
    case NnfKind::Pos: return node_->atom;
    case NnfKind::Neg: return node_->atom + "^";
    case NnfKind::One: return "1";
    case NnfKind::Bot: return "bot";
    case NnfKind::Top: return "top";
    case NnfKind::Zero: return "0";
    case NnfKind::Tensor: return "(" + left().render() + " * " + right().render() + ")";
    case NnfKind::Par: return "(" + left().render() + " | " + right().render() + ")";
    case NnfKind::With: return "(" + left().render() + " & " + right().render() + ")";
    case NnfKind::Plus: return "(" + left().render() + " + " + right().render() + ")";
  }
  return "?";
}

Nnf nnf_dual(const Nnf& f) {
  switch (f.kind()) {
    case NnfKind::Pos: return Nnf::neg(f.atom());
    case NnfKind::Neg: return Nnf::pos(f.atom());
    case NnfKind::One: return Nnf::bot();
    case NnfKind::Bot: return Nnf::one();
    case NnfKind::Top: return Nnf::zero();
    case NnfKind::Zero: return Nnf::top();
    case NnfKind::Tensor: return Nnf::par(nnf_dual(f.left()), nnf_dual(f.right()));
    case NnfKind::Par: return Nnf::tensor(nnf_dual(f.left()), nnf_dual(f.right()));
    case NnfKind::With: return Nnf::plus(nnf_dual(f.left()), nnf_dual(f.right()));
    case NnfKind::Plus: return Nnf::with(nnf_dual(f.left()), nnf_dual(f.right()));
  }
  return Nnf::bot();
}

Nnf nnf_of_formula(const Formula& f) {
  switch (f.kind()) {
    case Conn::Atom:
      return f.is_bottom() ? Nnf::bot() : Nnf::pos(f.atom_name());
    case Conn::One: return Nnf::one();
    case Conn::Top: return Nnf::top();
    case Conn::Zero: return Nnf::zero();
    case Conn::Tensor:
      return Nnf::tensor(nnf_of_formula(f.left()), nnf_of_formula(f.right()));
    case Conn::Par:
      return Nnf::par(nnf_of_formula(f.left()), nnf_of_formula(f.right()));
    case Conn::With:
      return Nnf::with(nnf_of_formula(f.left()), nnf_of_formula(f.right()));
    case Conn::Plus:
      return Nnf::plus(nnf_of_formula(f.left()), nnf_of_formula(f.right()));
    case Conn::Lolli:
      return Nnf::par(nnf_dual(nnf_of_formula(f.left())),
                      nnf_of_formula(f.right()));
  }
  return Nnf::bot();
}

std::vector<Nnf> to_one_sided(const Sequent& s) {
  std::vector<Nnf> out;
  for (const auto& g : s.context.items()) out.push_back(nnf_dual(nnf_of_formula(g)));
  out.push_back(nnf_of_formula(s.conclusion));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Exhausted {};

class Prover {
 public:
  explicit Prover(const OracleOptions& opts) : opts_(opts) {}

  bool prove(std::vector<Nnf> goal) {
    std::sort(goal.begin(), goal.end());
    return prove_sorted(std::move(goal));
  }

 private:
  OracleOptions opts_;
  long nodes_ = 0;
  std::unordered_map<std::string, bool> memo_;

  static std::string key_of(const std::vector<Nnf>& goal) {
    std::string k;
    for (const auto& f : goal) {
      k += f.render();
      k += ';';
    }
    return k;
  }

  static std::vector<Nnf> without(const std::vector<Nnf>& goal, std::size_t idx) {
    std::vector<Nnf> out;
    out.reserve(goal.size() - 1);
    for (std::size_t i = 0; i < goal.size(); ++i)
      if (i != idx) out.push_back(goal[i]);
    return out;
  }

  static std::vector<Nnf> with_added(std::vector<Nnf> goal, const Nnf& f) {
    goal.insert(std::upper_bound(goal.begin(), goal.end(), f), f);
    return goal;
  }

  bool prove_sorted(std::vector<Nnf> goal) {
    if (++nodes_ > opts_.max_nodes) throw Exhausted{};

    // invertible phase
    for (std::size_t i = 0; i < goal.size(); ++i) {
      if (goal[i].kind() == NnfKind::Top) return true;
      if (goal[i].kind() == NnfKind::Par) {
        Nnf l = goal[i].left(), r = goal[i].right();
        return prove_sorted(with_added(with_added(without(goal, i), l), r));
      }
      if (goal[i].kind() == NnfKind::Bot) {
        return prove_sorted(without(goal, i));
      }
      if (goal[i].kind() == NnfKind::With) {
        Nnf l = goal[i].left(), r = goal[i].right();
        auto rest = without(goal, i);
        return prove_sorted(with_added(rest, l)) &&
               prove_sorted(with_added(rest, r));
      }
    }

    std::string key = key_of(goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool result = decide_choices(goal);
    memo_.emplace(std::move(key), result);
    return result;
  }

  // goal now contains only literals, One, Zero, Tensor, Plus
  bool decide_choices(const std::vector<Nnf>& goal) {
    if (goal.size() == 1 && goal[0].kind() == NnfKind::One) return true;
    if (goal.size() == 2 && goal[0].kind() != goal[1].kind() &&
        (goal[0].kind() == NnfKind::Pos || goal[0].kind() == NnfKind::Neg) &&
        (goal[1].kind() == NnfKind::Pos || goal[1].kind() == NnfKind::Neg) &&
        goal[0].atom() == goal[1].atom())
      return true;

    for (std::size_t i = 0; i < goal.size(); ++i) {
      if (goal[i].kind() == NnfKind::Plus) {
        auto rest = without(goal, i);
        if (prove_sorted(with_added(rest, goal[i].left()))) return true;
        if (prove_sorted(with_added(rest, goal[i].right()))) return true;
      }
    }
    for (std::size_t i = 0; i < goal.size(); ++i) {
      if (goal[i].kind() != NnfKind::Tensor) continue;
      auto rest = without(goal, i);
      // all 2^k distributions of the remaining formulas
      std::size_t k = rest.size();
      for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << k); ++mask) {
        std::vector<Nnf> s1, s2;
        for (std::size_t j = 0; j < k; ++j)
          (mask >> j & 1 ? s1 : s2).push_back(rest[j]);
        if (prove_sorted(with_added(std::move(s1), goal[i].left())) &&
            prove_sorted(with_added(std::move(s2), goal[i].right())))
          return true;
      }
    }
    return false;
  }
};

}  // namespace

OracleVerdict prove(const std::vector<Nnf>& goal, const OracleOptions& opts) {
  try {
    return Prover(opts).prove(goal) ? OracleVerdict::Provable
                                    : OracleVerdict::Refuted;
  } catch (const Exhausted&) {
    return OracleVerdict::Exhausted;
  }
}

OracleVerdict oracle_prove_sequent(const Sequent& s, const OracleOptions& opts) {
  return prove(to_one_sided(s), opts);
}

}  // namespace mallbes
