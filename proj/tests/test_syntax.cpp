#include "mallbes/syntax.hpp"

#include <functional>
#include <random>

#include "doctest.h"

using namespace mallbes;

namespace {

Formula gen_formula(std::mt19937_64& rng, int depth) {
  auto roll = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (depth <= 0 || roll(3) == 0) {
    switch (roll(7)) {
      case 0: return Formula::atom("p");
      case 1: return Formula::atom("q");
      case 2: return Formula::atom("r_1");
      case 3: return Formula::bottom();
      case 4: return Formula::one();
      case 5: return Formula::top();
      default: return Formula::zero();
    }
  }
  Formula l = gen_formula(rng, depth - 1);
  Formula r = gen_formula(rng, depth - 1);
  switch (roll(5)) {
    case 0: return Formula::tensor(l, r);
    case 1: return Formula::par(l, r);
    case 2: return Formula::with(l, r);
    case 3: return Formula::plus(l, r);
    default: return Formula::lolli(l, r);
  }
}

}  // namespace

TEST_CASE("parse_formula grammar cases") {
  CHECK(parse_formula("p * q") == Formula::tensor(Formula::atom("p"), Formula::atom("q")));
  CHECK(parse_formula("~p") == Formula::lolli(Formula::atom("p"), Formula::bottom()));
  CHECK(parse_formula("p -o q -o r") ==
        Formula::lolli(Formula::atom("p"),
                       Formula::lolli(Formula::atom("q"), Formula::atom("r"))));
  // declared precedence, tightest first: ~, *, |, &, +, -o
  CHECK(parse_formula("p * q | r") ==
        Formula::par(parse_formula("p * q"), Formula::atom("r")));
  CHECK(parse_formula("p | q & r") ==
        Formula::with(parse_formula("p | q"), Formula::atom("r")));
  CHECK(parse_formula("p & q + r") ==
        Formula::plus(parse_formula("p & q"), Formula::atom("r")));
  CHECK(parse_formula("p + q -o r") ==
        Formula::lolli(parse_formula("p + q"), Formula::atom("r")));
  CHECK(parse_formula("~p * q") ==
        Formula::tensor(parse_formula("~p"), Formula::atom("q")));
  CHECK(parse_formula("p * q * r") == parse_formula("(p * q) * r"));
  CHECK(parse_formula("bot") == Formula::bottom());
  CHECK(parse_formula("1").kind() == Conn::One);
  CHECK(parse_formula("0").kind() == Conn::Zero);
  CHECK(parse_formula("top").kind() == Conn::Top);
}

TEST_CASE("bot is the reserved atom") {
  Formula b = parse_formula("bot");
  CHECK(b.is_atom());
  CHECK(b.is_bottom());
  CHECK(b == Formula::bottom());
  CHECK(parse_formula("p -o bot") == parse_formula("~p"));
}

TEST_CASE("negate applies no involution collapse") {
  Formula p = Formula::atom("p");
  CHECK(negate(p) == parse_formula("p -o bot"));
  CHECK(negate(Formula::bottom()) == parse_formula("bot -o bot"));
  CHECK(negate(negate(p)) == parse_formula("(p -o bot) -o bot"));
  CHECK(print_formula(negate(negate(p))) == "~~p");
}

TEST_CASE("exponentials are rejected") {
  CHECK_THROWS_WITH_AS(parse_formula("!p"),
                       "exponentials out of scope (at position 0)", ParseError);
  CHECK_THROWS_AS(parse_formula("p * ?q"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_formula("p * ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("P"), ParseError);
}

TEST_CASE("sequent parsing") {
  Sequent s = parse_sequent("p, q |- r");
  CHECK(s.context.size() == 2);
  CHECK(s.conclusion == Formula::atom("r"));
  CHECK(parse_sequent("|- r").context.empty());
  CHECK(parse_sequent("p, p |- p").context.count(Formula::atom("p")) == 2);
  // context equality is order-free
  CHECK(parse_sequent("p, q |- r") == parse_sequent("q, p |- r"));
  CHECK(print_sequent(parse_sequent("q,p|-r")) == "p, q |- r");
}

TEST_CASE("print/parse round trip on random formulas") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen_formula(rng, 4);
    CAPTURE(print_formula(f));
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("atomic multiset laws") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> pool{"a", "b", "c"};
  auto gen = [&] {
    AtomicMultiset m;
    int n = static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) m.add(pool[rng() % pool.size()]);
    return m;
  };
  for (int i = 0; i < 200; ++i) {
    AtomicMultiset a = gen(), b = gen(), c = gen();
    CHECK(a.united(b) == b.united(a));
    CHECK(a.united(b).united(c) == a.united(b.united(c)));
    CHECK(a.united(AtomicMultiset{}) == a);
  }
  AtomicMultiset m{"a", "a", "b"};
  CHECK(m.size() == 3);
  CHECK(m.count("a") == 2);
  CHECK(m.render() == "a, a, b");
  CHECK(m.contains(AtomicMultiset{"a", "b"}));
  CHECK_FALSE(m.contains(AtomicMultiset{"b", "b"}));
  CHECK(m.minus(AtomicMultiset{"a"}) == AtomicMultiset{"a", "b"});
}

TEST_CASE("subformula closure definition cases") {
  Formula p = Formula::atom("p");
  Formula q = Formula::atom("q");

  SUBCASE("tensor") {
    auto cl = subformula_closure({Formula::tensor(p, q)});
    std::set<Formula> want = {p, q, Formula::tensor(p, q), negate(p),
                              negate(q), negate(Formula::tensor(p, q))};
    CHECK(cl == want);
  }
  SUBCASE("single atom") {
    auto cl = subformula_closure({p});
    CHECK(cl == std::set<Formula>{p, negate(p)});
  }
  SUBCASE("negated atom, hand enumeration") {
    // ~p is p -o bot; subformulas: ~p, p, bot; adding negations gives
    // ~~p, ~p (deduplicated) and ~bot
    auto cl = subformula_closure({negate(p)});
    std::set<Formula> want = {p, Formula::bottom(), negate(p),
                              negate(Formula::bottom()), negate(negate(p))};
    CHECK(cl == want);
    CHECK(cl.size() == 5);
  }
}

TEST_CASE("subformula closure properties") {
  // Note: re-closing a closure is NOT a fixed point (each pass adds a fresh
  // negation layer); what does hold is extensivity, monotonicity, and
  // invariance under taking the subformula set first.
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    std::set<Formula> gamma;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) gamma.insert(gen_formula(rng, 3));
    auto once = subformula_closure(gamma);
    // extensive
    for (const auto& f : gamma) CHECK(once.count(f) == 1);
    // subformula-part stable: closing the subformula set changes nothing
    std::set<Formula> subs;
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
      subs.insert(f);
      if (f.is_binary()) {
        walk(f.left());
        walk(f.right());
      }
    };
    for (const auto& f : gamma) walk(f);
    CHECK(subformula_closure(subs) == once);
    // monotone under set inclusion
    std::set<Formula> larger = gamma;
    larger.insert(gen_formula(rng, 2));
    auto big = subformula_closure(larger);
    for (const auto& f : once) CHECK(big.count(f) == 1);
  }
}
