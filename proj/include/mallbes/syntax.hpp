#pragma once

// MALL formulas over a countable atom alphabet, multisets, sequents, and the
// concrete ASCII syntax used by the whole toolkit.
//
// The falsum constant is not a separate constructor: it is the reserved atom
// "bot", so rules that manipulate it at the atomic level need no special case.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mallbes {

inline constexpr const char* kBottomName = "bot";

enum class Conn { Atom, Tensor, Par, With, Plus, Lolli, One, Top, Zero };

class Formula {
 public:
  Formula();  // defaults to bot

  static Formula atom(const std::string& name);
  static Formula bottom();
  static Formula one();
  static Formula top();
  static Formula zero();
  static Formula tensor(const Formula& l, const Formula& r);
  static Formula par(const Formula& l, const Formula& r);
  static Formula with(const Formula& l, const Formula& r);
  static Formula plus(const Formula& l, const Formula& r);
  static Formula lolli(const Formula& l, const Formula& r);

  Conn kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Conn::Atom; }
  bool is_bottom() const;
  bool is_binary() const;
  const std::string& atom_name() const;  // requires is_atom()
  Formula left() const;                  // requires is_binary()
  Formula right() const;

  int size() const { return node_->size; }  // syntax-tree node count
  std::size_t hash() const { return node_->hash; }

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

 private:
  struct Node {
    Conn kind;
    std::string atom;
    std::shared_ptr<const Node> l, r;
    int size = 1;
    std::size_t hash = 0;
  };
  std::shared_ptr<const Node> node_;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Conn k, const std::string& atom, const Formula* l,
                      const Formula* r);
};

// phi -o bot, with no involution collapse.
Formula negate(const Formula& f);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Finite multiset of atom names. Canonical representation: sorted name->count
// map, so equality and ordering are structural.
class AtomicMultiset {
 public:
  AtomicMultiset() = default;
  AtomicMultiset(std::initializer_list<std::string> atoms);

  void add(const std::string& atom, int n = 1);
  bool remove_one(const std::string& atom);
  int count(const std::string& atom) const;
  int size() const;  // total multiplicity
  bool empty() const { return counts_.empty(); }
  bool contains(const AtomicMultiset& sub) const;
  AtomicMultiset united(const AtomicMultiset& other) const;
  AtomicMultiset minus(const AtomicMultiset& sub) const;  // requires contains
  const std::map<std::string, int>& counts() const { return counts_; }

  bool operator==(const AtomicMultiset&) const = default;
  auto operator<=>(const AtomicMultiset&) const = default;
  std::string render() const;  // "a, a, b"; empty multiset renders as ""

 private:
  std::map<std::string, int> counts_;
};

// Finite multiset of formulas, kept sorted for order-free equality.
class FormulaMultiset {
 public:
  FormulaMultiset() = default;
  FormulaMultiset(std::initializer_list<Formula> items);

  void add(const Formula& f);
  bool remove_one(const Formula& f);
  int count(const Formula& f) const;
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  FormulaMultiset united(const FormulaMultiset& other) const;
  const std::vector<Formula>& items() const { return items_; }

  bool operator==(const FormulaMultiset& other) const;
  std::strong_ordering operator<=>(const FormulaMultiset& other) const;

 private:
  std::vector<Formula> items_;  // sorted
};

struct Sequent {
  FormulaMultiset context;
  Formula conclusion;

  bool operator==(const Sequent& other) const {
    return context == other.context && conclusion == other.conclusion;
  }
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);
std::string print_formula(const Formula& f);
std::string print_sequent(const Sequent& s);

// Smallest set containing every subformula of every member and the negation
// of each such subformula.
std::set<Formula> subformula_closure(const std::set<Formula>& gamma);

}  // namespace mallbes
