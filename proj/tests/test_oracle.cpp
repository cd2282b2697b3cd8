#include "mallbes/oracle.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace mallbes;

namespace {

Nnf gen_nnf(std::mt19937_64& rng, int depth) {
  auto roll = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (depth <= 0 || roll(3) == 0) {
    switch (roll(6)) {
      case 0: return Nnf::pos("p");
      case 1: return Nnf::neg("p");
      case 2: return Nnf::pos("q");
      case 3: return Nnf::one();
      case 4: return Nnf::bot();
      default: return roll(2) ? Nnf::top() : Nnf::zero();
    }
  }
  Nnf l = gen_nnf(rng, depth - 1);
  Nnf r = gen_nnf(rng, depth - 1);
  switch (roll(4)) {
    case 0: return Nnf::tensor(l, r);
    case 1: return Nnf::par(l, r);
    case 2: return Nnf::with(l, r);
    default: return Nnf::plus(l, r);
  }
}

}  // namespace

TEST_CASE("dualization is involutive") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Nnf f = gen_nnf(rng, 4);
    CHECK(nnf_dual(nnf_dual(f)) == f);
  }
}

TEST_CASE("to_one_sided translation") {
  auto p = Formula::atom("p");
  SUBCASE("identity sequent") {
    auto g = to_one_sided(parse_sequent("p |- p"));
    REQUIRE(g.size() == 2);
    CHECK(((g[0] == Nnf::pos("p") && g[1] == Nnf::neg("p")) ||
           (g[0] == Nnf::neg("p") && g[1] == Nnf::pos("p"))));
  }
  SUBCASE("with on the left dualizes to plus") {
    auto g = to_one_sided(parse_sequent("p & q |- p"));
    REQUIRE(g.size() == 2);
    bool found = false;
    for (const auto& f : g)
      if (f == Nnf::plus(Nnf::neg("p"), Nnf::neg("q"))) found = true;
    CHECK(found);
  }
  SUBCASE("double negation goal") {
    auto g = to_one_sided(parse_sequent("|- ~~p -o p"));
    REQUIRE(g.size() == 1);
    // ((p -o bot) -o bot) -o p  ~~>  dual(dual(p)*1 ... ) | p, spelled out:
    // dual(~~p) | p where dual(~p) = p * 1 and dual(~~p) = (p*1 -par- ...)
    Nnf np = Nnf::par(Nnf::neg("p"), Nnf::bot());       // ~p
    Nnf nnp = Nnf::par(nnf_dual(np), Nnf::bot());       // ~~p
    CHECK(g[0] == Nnf::par(nnf_dual(nnp), Nnf::pos("p")));
  }
  (void)p;
}

TEST_CASE("oracle ground truths") {
  CHECK(prove({Nnf::neg("p"), Nnf::pos("p")}) == OracleVerdict::Provable);
  // p |- p * p: both splits leave an unprovable branch
  CHECK(prove({Nnf::neg("p"), Nnf::tensor(Nnf::pos("p"), Nnf::pos("p"))}) ==
        OracleVerdict::Refuted);
  // 0 |- q  via top on the dual side
  CHECK(oracle_prove_sequent(parse_sequent("0 |- q")) == OracleVerdict::Provable);
  // consistency
  CHECK(prove({Nnf::bot()}) == OracleVerdict::Refuted);
  CHECK(prove({Nnf::one()}) == OracleVerdict::Provable);
}

TEST_CASE("oracle on familiar MALL sequents") {
  CHECK(oracle_prove_sequent(parse_sequent("|- p -o p")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("|- p | ~p")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("~~p |- p")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("p |- ~~p")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("p & q |- p")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("p |- p + q")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("p, q |- p * q")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("|- 1")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("|- top")) == OracleVerdict::Provable);
  CHECK(oracle_prove_sequent(parse_sequent("p |- q")) == OracleVerdict::Refuted);
  CHECK(oracle_prove_sequent(parse_sequent("|- p + ~p")) == OracleVerdict::Refuted);
  CHECK(oracle_prove_sequent(parse_sequent("p + q |- p")) == OracleVerdict::Refuted);
  CHECK(oracle_prove_sequent(parse_sequent("|- bot")) == OracleVerdict::Refuted);
  CHECK(oracle_prove_sequent(parse_sequent("bot |- p")) == OracleVerdict::Refuted);
  CHECK(oracle_prove_sequent(parse_sequent("bot |- bot")) == OracleVerdict::Provable);
  // linear: no contraction or weakening
  CHECK(oracle_prove_sequent(parse_sequent("p |- p * p")) == OracleVerdict::Refuted);
  CHECK(oracle_prove_sequent(parse_sequent("p, q |- p")) == OracleVerdict::Refuted);
}

TEST_CASE("oracle verdict invariant under permutation and double dual") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    std::vector<Nnf> goal;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) goal.push_back(gen_nnf(rng, 3));
    OracleVerdict v = prove(goal);
    std::vector<Nnf> shuffled = goal;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(prove(shuffled) == v);
    std::vector<Nnf> dd;
    for (const auto& f : goal) dd.push_back(nnf_dual(nnf_dual(f)));
    CHECK(prove(dd) == v);
  }
}
