#include "mallbes/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace mallbes {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Conn k, const std::string& atom, const Formula* l,
                      const Formula* r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->atom = atom;
  std::size_t h = hash_combine(0x5eed, static_cast<std::size_t>(k));
  if (k == Conn::Atom) h = hash_combine(h, std::hash<std::string>{}(atom));
  if (l) {
    n->l = l->node_;
    n->size += l->size();
    h = hash_combine(h, l->hash());
  }
  if (r) {
    n->r = r->node_;
    n->size += r->size();
    h = hash_combine(h, r->hash());
  }
  n->hash = h;
  return Formula(std::move(n));
}

Formula::Formula() : node_(Formula::atom(kBottomName).node_) {}

Formula Formula::atom(const std::string& name) {
  return make(Conn::Atom, name, nullptr, nullptr);
}
Formula Formula::bottom() { return atom(kBottomName); }
Formula Formula::one() { return make(Conn::One, "", nullptr, nullptr); }
Formula Formula::top() { return make(Conn::Top, "", nullptr, nullptr); }
Formula Formula::zero() { return make(Conn::Zero, "", nullptr, nullptr); }
Formula Formula::tensor(const Formula& l, const Formula& r) {
  return make(Conn::Tensor, "", &l, &r);
}
Formula Formula::par(const Formula& l, const Formula& r) {
  return make(Conn::Par, "", &l, &r);
}
Formula Formula::with(const Formula& l, const Formula& r) {
  return make(Conn::With, "", &l, &r);
}
Formula Formula::plus(const Formula& l, const Formula& r) {
  return make(Conn::Plus, "", &l, &r);
}
Formula Formula::lolli(const Formula& l, const Formula& r) {
  return make(Conn::Lolli, "", &l, &r);
}

bool Formula::is_bottom() const {
  return node_->kind == Conn::Atom && node_->atom == kBottomName;
}

bool Formula::is_binary() const {
  switch (node_->kind) {
    case Conn::Tensor:
    case Conn::Par:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      return true;
    default:
      return false;
  }
}

const std::string& Formula::atom_name() const {
  if (!is_atom()) throw std::logic_error("atom_name on non-atom");
  return node_->atom;
}

Formula Formula::left() const {
  if (!is_binary()) throw std::logic_error("left on non-binary formula");
  return Formula(node_->l);
}

Formula Formula::right() const {
  if (!is_binary()) throw std::logic_error("right on non-binary formula");
  return Formula(node_->r);
}

bool Formula::operator==(const Formula& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a->size <=> b->size; c != 0) return c;
  std::function<std::strong_ordering(const Node*, const Node*)> cmp =
      [&](const Node* x, const Node* y) -> std::strong_ordering {
    if (x == y) return std::strong_ordering::equal;
    if (auto c = static_cast<int>(x->kind) <=> static_cast<int>(y->kind);
        c != 0)
      return c;
    if (x->kind == Conn::Atom) return x->atom <=> y->atom;
    if (x->l) {
      if (auto c = cmp(x->l.get(), y->l.get()); c != 0) return c;
      return cmp(x->r.get(), y->r.get());
    }
    return std::strong_ordering::equal;
  };
  return cmp(a, b);
}

Formula negate(const Formula& f) { return Formula::lolli(f, Formula::bottom()); }

// ---------------------------------------------------------------------------
// multisets

AtomicMultiset::AtomicMultiset(std::initializer_list<std::string> atoms) {
  for (const auto& a : atoms) add(a);
}

void AtomicMultiset::add(const std::string& atom, int n) {
  if (n <= 0) return;
  counts_[atom] += n;
}

bool AtomicMultiset::remove_one(const std::string& atom) {
  auto it = counts_.find(atom);
  if (it == counts_.end()) return false;
  if (--it->second == 0) counts_.erase(it);
  return true;
}

int AtomicMultiset::count(const std::string& atom) const {
  auto it = counts_.find(atom);
  return it == counts_.end() ? 0 : it->second;
}

int AtomicMultiset::size() const {
  int total = 0;
  for (const auto& [_, n] : counts_) total += n;
  return total;
}

bool AtomicMultiset::contains(const AtomicMultiset& sub) const {
  for (const auto& [a, n] : sub.counts_)
    if (count(a) < n) return false;
  return true;
}

AtomicMultiset AtomicMultiset::united(const AtomicMultiset& other) const {
  AtomicMultiset out = *this;
  for (const auto& [a, n] : other.counts_) out.add(a, n);
  return out;
}

AtomicMultiset AtomicMultiset::minus(const AtomicMultiset& sub) const {
  AtomicMultiset out = *this;
  for (const auto& [a, n] : sub.counts_) {
    for (int i = 0; i < n; ++i) {
      if (!out.remove_one(a))
        throw std::logic_error("multiset minus: not a submultiset");
    }
  }
  return out;
}

std::string AtomicMultiset::render() const {
  std::string out;
  for (const auto& [a, n] : counts_) {
    for (int i = 0; i < n; ++i) {
      if (!out.empty()) out += ", ";
      out += a;
    }
  }
  return out;
}

FormulaMultiset::FormulaMultiset(std::initializer_list<Formula> items) {
  for (const auto& f : items) add(f);
}

void FormulaMultiset::add(const Formula& f) {
  items_.insert(std::lower_bound(items_.begin(), items_.end(), f), f);
}

bool FormulaMultiset::remove_one(const Formula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it == items_.end() || !(*it == f)) return false;
  items_.erase(it);
  return true;
}

int FormulaMultiset::count(const Formula& f) const {
  auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f);
  return static_cast<int>(hi - lo);
}

FormulaMultiset FormulaMultiset::united(const FormulaMultiset& other) const {
  FormulaMultiset out = *this;
  for (const auto& f : other.items_) out.add(f);
  return out;
}

bool FormulaMultiset::operator==(const FormulaMultiset& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering FormulaMultiset::operator<=>(
    const FormulaMultiset& other) const {
  if (auto c = items_.size() <=> other.items_.size(); c != 0) return c;
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (auto c = items_[i] <=> other.items_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// printing

namespace {

// Precedence levels, tightest first: ~ (6), * (5), | (4), & (3), + (2),
// -o (1, right-associative).
int conn_level(Conn k) {
  switch (k) {
    case Conn::Tensor: return 5;
    case Conn::Par: return 4;
    case Conn::With: return 3;
    case Conn::Plus: return 2;
    case Conn::Lolli: return 1;
    default: return 7;
  }
}

const char* conn_symbol(Conn k) {
  switch (k) {
    case Conn::Tensor: return " * ";
    case Conn::Par: return " | ";
    case Conn::With: return " & ";
    case Conn::Plus: return " + ";
    case Conn::Lolli: return " -o ";
    default: return "";
  }
}

bool is_negation(const Formula& f) {
  return f.kind() == Conn::Lolli && f.right().is_bottom();
}

void print_rec(const Formula& f, int min_level, std::string& out) {
  switch (f.kind()) {
    case Conn::Atom: out += f.atom_name(); return;
    case Conn::One: out += "1"; return;
    case Conn::Zero: out += "0"; return;
    case Conn::Top: out += "top"; return;
    default: break;
  }
  if (is_negation(f)) {
    if (min_level > 6) {
      out += '(';
      out += '~';
      print_rec(f.left(), 6, out);
      out += ')';
    } else {
      out += '~';
      print_rec(f.left(), 6, out);
    }
    return;
  }
  int level = conn_level(f.kind());
  bool parens = level < min_level;
  if (parens) out += '(';
  if (f.kind() == Conn::Lolli) {
    print_rec(f.left(), level + 1, out);
    out += conn_symbol(f.kind());
    print_rec(f.right(), level, out);
  } else {
    print_rec(f.left(), level, out);
    out += conn_symbol(f.kind());
    print_rec(f.right(), level + 1, out);
  }
  if (parens) out += ')';
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  bool first = true;
  for (const auto& f : s.context.items()) {
    if (!first) out += ", ";
    first = false;
    out += print_formula(f);
  }
  if (!out.empty()) out += ' ';
  out += "|- ";
  out += print_formula(s.conclusion);
  return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

enum class Tok {
  Ident, One, Zero, BotKw, TopKw, Star, Bar, Amp, Plus, Lolli, Tilde,
  LParen, RParen, Comma, Turnstile, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
    std::size_t start = i_;
    if (i_ >= text_.size()) return {Tok::End, "", start};
    char c = text_[i_];
    if (c == '!' || c == '?')
      throw ParseError("exponentials out of scope", start);
    if (c == '(') { ++i_; return {Tok::LParen, "(", start}; }
    if (c == ')') { ++i_; return {Tok::RParen, ")", start}; }
    if (c == ',') { ++i_; return {Tok::Comma, ",", start}; }
    if (c == '*') { ++i_; return {Tok::Star, "*", start}; }
    if (c == '&') { ++i_; return {Tok::Amp, "&", start}; }
    if (c == '+') { ++i_; return {Tok::Plus, "+", start}; }
    if (c == '~') { ++i_; return {Tok::Tilde, "~", start}; }
    if (c == '|') {
      if (i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
        i_ += 2;
        return {Tok::Turnstile, "|-", start};
      }
      ++i_;
      return {Tok::Bar, "|", start};
    }
    if (c == '-') {
      if (i_ + 1 < text_.size() && text_[i_ + 1] == 'o') {
        i_ += 2;
        return {Tok::Lolli, "-o", start};
      }
      throw ParseError("expected '-o'", start);
    }
    if (c == '1' || c == '0') {
      ++i_;
      if (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_])))
        throw ParseError("malformed unit literal", start);
      return {c == '1' ? Tok::One : Tok::Zero, std::string(1, c), start};
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[j])) ||
              std::isdigit(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '_'))
        ++j;
      std::string word = text_.substr(i_, j - i_);
      i_ = j;
      if (word == "bot") return {Tok::BotKw, word, start};
      if (word == "top") return {Tok::TopKw, word, start};
      return {Tok::Ident, word, start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  const std::string& text_;
  std::size_t i_ = 0;
};

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : lex_(text) { advance(); }

  Formula parse_formula_all() {
    Formula f = parse_lolli();
    expect(Tok::End, "end of input");
    return f;
  }

  Sequent parse_sequent_all() {
    Sequent s;
    if (cur_.kind != Tok::Turnstile) {
      s.context.add(parse_lolli());
      while (cur_.kind == Tok::Comma) {
        advance();
        s.context.add(parse_lolli());
      }
    }
    expect(Tok::Turnstile, "'|-'");
    s.conclusion = parse_lolli();
    expect(Tok::End, "end of input");
    return s;
  }

 private:
  Lexer lex_;
  Token cur_;

  void advance() { cur_ = lex_.next(); }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k)
      throw ParseError(std::string("expected ") + what, cur_.pos);
    if (k != Tok::End) advance();
  }

  Formula parse_lolli() {
    Formula l = parse_plus();
    if (cur_.kind == Tok::Lolli) {
      advance();
      return Formula::lolli(l, parse_lolli());  // right-associative
    }
    return l;
  }

  Formula parse_plus() {
    Formula l = parse_with();
    while (cur_.kind == Tok::Plus) {
      advance();
      l = Formula::plus(l, parse_with());
    }
    return l;
  }

  Formula parse_with() {
    Formula l = parse_par();
    while (cur_.kind == Tok::Amp) {
      advance();
      l = Formula::with(l, parse_par());
    }
    return l;
  }

  Formula parse_par() {
    Formula l = parse_tensor();
    while (cur_.kind == Tok::Bar) {
      advance();
      l = Formula::par(l, parse_tensor());
    }
    return l;
  }

  Formula parse_tensor() {
    Formula l = parse_unary();
    while (cur_.kind == Tok::Star) {
      advance();
      l = Formula::tensor(l, parse_unary());
    }
    return l;
  }

  Formula parse_unary() {
    if (cur_.kind == Tok::Tilde) {
      advance();
      return negate(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::atom(cur_.text);
        advance();
        return f;
      }
      case Tok::BotKw: advance(); return Formula::bottom();
      case Tok::TopKw: advance(); return Formula::top();
      case Tok::One: advance(); return Formula::one();
      case Tok::Zero: advance(); return Formula::zero();
      case Tok::LParen: {
        advance();
        Formula f = parse_lolli();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", cur_.pos);
    }
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  return FormulaParser(text).parse_formula_all();
}

Sequent parse_sequent(const std::string& text) {
  return FormulaParser(text).parse_sequent_all();
}

// ---------------------------------------------------------------------------

std::set<Formula> subformula_closure(const std::set<Formula>& gamma) {
  std::set<Formula> subs;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (!subs.insert(f).second) return;
    if (f.is_binary()) {
      walk(f.left());
      walk(f.right());
    }
  };
  for (const auto& f : gamma) walk(f);
  std::set<Formula> out = subs;
  for (const auto& f : subs) out.insert(negate(f));
  return out;
}

}  // namespace mallbes
