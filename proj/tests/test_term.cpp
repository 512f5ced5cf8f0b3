#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clari/term.hpp"

using namespace clari;

TEST_CASE("shift displaces only free variables") {
  CHECK(alphaEq(shift(Term::var(0), 0, 1), Term::var(1)));
  Term lamBound = Term::lam(Term::boolTy(), Term::var(0));
  CHECK(alphaEq(shift(lamBound, 0, 1), lamBound));
  Term lamFree = Term::lam(Term::boolTy(), Term::var(1));
  CHECK(alphaEq(shift(lamFree, 0, 2), Term::lam(Term::boolTy(), Term::var(3))));
}

TEST_CASE("shift by zero is identity and negative underflow throws") {
  Term t = Term::app(Term::var(3), Term::lam(Term::natTy(), Term::var(0)));
  CHECK(shift(t, 2, 0).sameNode(t));
  CHECK_THROWS_AS(shift(Term::var(0), 0, -1), NegativeIndexError);
  CHECK(alphaEq(shift(Term::var(5), 0, -2), Term::var(3)));
}

TEST_CASE("subst consumes the binder") {
  CHECK(alphaEq(subst(Term::var(0), 0, Term::tt()), Term::tt()));
  // substitution under one binder, capture-avoiding
  Term t = Term::lam(Term::boolTy(), Term::app(Term::var(1), Term::var(0)));
  Term id = Term::lam(Term::boolTy(), Term::var(0));
  Term expected = Term::lam(Term::boolTy(), Term::app(id, Term::var(0)));
  CHECK(alphaEq(subst(t, 0, id), expected));
  // indices above the target slide down
  CHECK(alphaEq(subst(Term::var(3), 0, Term::tt()), Term::var(2)));
}

TEST_CASE("alphaEq compares annotations") {
  Term a = Term::pairOf(Term::tt(), Term::zero(), Term::sigma(Term::boolTy(), Term::natTy()));
  Term b = Term::pairOf(Term::tt(), Term::zero(), Term::sigma(Term::boolTy(), Term::boolTy()));
  CHECK(alphaEq(a, a));
  CHECK_FALSE(alphaEq(a, b));
  CHECK(alphaEq(Term::lam(Term::boolTy(), Term::var(0)), Term::lam(Term::boolTy(), Term::var(0))));
  CHECK_FALSE(alphaEq(Term::tt(), Term::ff()));
}

TEST_CASE("scope validator") {
  CHECK(scopeValid(Term::lam(Term::boolTy(), Term::var(0)), 0));
  CHECK_FALSE(scopeValid(Term::var(0), 0));
  CHECK(scopeValid(Term::var(0), 1));
  CHECK_FALSE(scopeValid(Term::lam(Term::boolTy(), Term::var(2)), 1));
  CHECK_FALSE(scopeValid(Term::univ(3), 0));
}

namespace {

// Arbitrary scope-valid term generator (not necessarily well typed).
Term genTerm(std::mt19937_64& rng, unsigned ctxLen, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  if (depth <= 0 || pick(4) == 0) {
    switch (pick(ctxLen > 0 ? 8 : 7)) {
      case 0: return Term::tt();
      case 1: return Term::ff();
      case 2: return Term::zero();
      case 3: return Term::unitVal();
      case 4: return Term::boolTy();
      case 5: return Term::natTy();
      case 6: return Term::univ(rng() % 2);
      default: return Term::var(rng() % ctxLen);
    }
  }
  auto sub = [&](unsigned extra) { return genTerm(rng, ctxLen + extra, depth - 1); };
  switch (pick(12)) {
    case 0: return Term::lam(sub(0), sub(1));
    case 1: return Term::pi(sub(0), sub(1));
    case 2: return Term::sigma(sub(0), sub(1));
    case 3: return Term::app(sub(0), sub(0));
    case 4: return Term::pairOf(sub(0), sub(0), sub(0));
    case 5: return Term::sigElim(sub(1), sub(0), sub(2));
    case 6: return Term::sum(sub(0), sub(0));
    case 7: return Term::inl(sub(0), sub(0));
    case 8: return Term::sumElim(sub(1), sub(0), sub(1), sub(1));
    case 9: return Term::succ(sub(0));
    case 10: return Term::natElim(sub(1), sub(0), sub(0), sub(2));
    default: return Term::boolElim(sub(1), sub(0), sub(0), sub(0));
  }
}

}  // namespace

TEST_CASE("shift/subst cancellation on generated terms") {
  std::mt19937_64 rng(0xC1A51);
  int checked = 0;
  for (int i = 0; i < 1200; ++i) {
    unsigned ctxLen = 1 + static_cast<unsigned>(rng() % 3);
    Term t = genTerm(rng, ctxLen, 4);
    Term s = genTerm(rng, ctxLen, 3);
    REQUIRE(scopeValid(t, ctxLen));
    REQUIRE(scopeValid(s, ctxLen));
    CHECK(alphaEq(subst(shift(t, 0, 1), 0, s), t));
    CHECK(shift(t, 2, 0).sameNode(t));
    ++checked;
  }
  CHECK(checked == 1200);
}

TEST_CASE("alphaEq is an equivalence relation on generated terms") {
  std::mt19937_64 rng(0xA11CE);
  for (int i = 0; i < 300; ++i) {
    Term a = genTerm(rng, 2, 3);
    Term b = genTerm(rng, 2, 3);
    Term c = genTerm(rng, 2, 3);
    CHECK(alphaEq(a, a));
    CHECK(alphaEq(a, b) == alphaEq(b, a));
    if (alphaEq(a, b) && alphaEq(b, c)) CHECK(alphaEq(a, c));
  }
}
