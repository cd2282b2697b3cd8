#pragma once

// Independent brute-force provability oracle: a one-sided cut-free sequent
// calculus for classical MALL over negation normal forms, with exhaustive
// backward search. Every rule premise is strictly smaller in total formula
// size, so the search terminates; a Refuted answer is a genuine refutation.
//
// On this side the distinguished atom bot of the two-sided calculus is
// identified with the multiplicative unit (dual pair bot/1).

#include <string>
#include <vector>

#include "mallbes/syntax.hpp"

namespace mallbes {

enum class NnfKind { Pos, Neg, Tensor, Par, With, Plus, One, Bot, Top, Zero };

class Nnf {
 public:
  Nnf();  // Bot

  static Nnf pos(const std::string& atom);
  static Nnf neg(const std::string& atom);
  static Nnf one();
  static Nnf bot();
  static Nnf top();
  static Nnf zero();
  static Nnf tensor(const Nnf& l, const Nnf& r);
  static Nnf par(const Nnf& l, const Nnf& r);
  static Nnf with(const Nnf& l, const Nnf& r);
  static Nnf plus(const Nnf& l, const Nnf& r);

  NnfKind kind() const { return node_->kind; }
  const std::string& atom() const;  // Pos/Neg only
  Nnf left() const;
  Nnf right() const;
  bool is_binary() const;
  int size() const { return node_->size; }

  bool operator==(const Nnf& other) const;
  std::strong_ordering operator<=>(const Nnf& other) const;
  std::string render() const;

 private:
  struct Node {
    NnfKind kind;
    std::string atom;
    std::shared_ptr<const Node> l, r;
    int size = 1;
  };
  std::shared_ptr<const Node> node_;
  explicit Nnf(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Nnf make(NnfKind k, const std::string& atom, const Nnf* l, const Nnf* r);
};

// Involutive dualization.
Nnf nnf_dual(const Nnf& f);

// Translate a MALL formula: bot becomes the Bot unit, phi -o psi becomes
// dual(phi) par psi.
Nnf nnf_of_formula(const Formula& f);

// G |- phi  becomes  { dual(g) : g in G } + { phi }.
std::vector<Nnf> to_one_sided(const Sequent& s);

enum class OracleVerdict { Provable, Refuted, Exhausted };

struct OracleOptions {
  long max_nodes = 50'000'000;
};

OracleVerdict prove(const std::vector<Nnf>& goal, const OracleOptions& opts = {});

// Convenience: oracle verdict for a two-sided sequent.
OracleVerdict oracle_prove_sequent(const Sequent& s, const OracleOptions& opts = {});

}  // namespace mallbes
