#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clari/eval.hpp"
#include "clari/parser.hpp"
#include "clari/typing.hpp"

using namespace clari;

namespace {

GlobalEnv withEqN() {
  // footnote-style recursive equality on Nat, built programmatically
  GlobalEnv env;
  Fuel fuel;
  Term eqN = parseTermString(
      "fun (n : Nat) =>"
      "  elimN (x. Nat -> Bool, n,"
      "    fun (m : Nat) => elimN (y. Bool, m, true, m0 c. false),"
      "    n0 r. fun (m : Nat) => elimN (y. Bool, m, false, m0 c. r m0))");
  return defineGlobal(env, "eqN", parseTermString("Nat -> Nat -> Bool"), eqN, fuel);
}

Term natLit(unsigned n) {
  Term t = Term::zero();
  for (unsigned i = 0; i < n; ++i) t = Term::succ(t);
  return t;
}

Term iterateStep(const GlobalEnv& env, Term t, int maxSteps = 200000) {
  for (int i = 0; i < maxSteps; ++i) {
    auto r = step(env, t);
    if (!r) return t;
    t = *r;
  }
  FAIL("step did not terminate");
  return t;
}

}  // namespace

TEST_CASE("step contracts the expected redexes") {
  GlobalEnv env;
  Term m = Term::boolTy();  // constant motive body for Bool scrutinee
  Term ifT = Term::boolElim(m, Term::tt(), Term::ff(), Term::tt());
  auto r = step(env, ifT);
  REQUIRE(r.has_value());
  CHECK(alphaEq(*r, Term::ff()));

  Term recZ = Term::natElim(Term::natTy(), Term::zero(), natLit(7),
                            Term::succ(Term::var(1)));
  r = step(env, recZ);
  REQUIRE(r.has_value());
  CHECK(alphaEq(*r, natLit(7)));

  // elimSig on a pair substitutes both components into the branch
  Term pair = Term::pairOf(Term::tt(), Term::zero(),
                           Term::sigma(Term::boolTy(), Term::natTy()));
  Term proj = Term::sigElim(Term::boolTy(), pair, Term::var(1));
  r = step(env, proj);
  REQUIRE(r.has_value());
  CHECK(alphaEq(*r, Term::tt()));

  CHECK_FALSE(step(env, Term::tt()).has_value());
  CHECK_FALSE(step(env, Term::lam(Term::boolTy(), Term::var(0))).has_value());
}

TEST_CASE("step is leftmost-outermost") {
  GlobalEnv env;
  // beta at the root fires before the redex inside the argument
  Term redexArg = Term::app(Term::lam(Term::boolTy(), Term::var(0)), Term::tt());
  Term t = Term::app(Term::lam(Term::boolTy(), Term::ff()), redexArg);
  auto r = step(env, t);
  REQUIRE(r.has_value());
  CHECK(alphaEq(*r, Term::ff()));
}

TEST_CASE("normalize handles beta under binders and delta") {
  Fuel fuel;
  GlobalEnv env;
  Term a = Term::boolTy();
  Term inner = Term::app(Term::lam(a, Term::var(0)), Term::var(0));
  Term t = Term::lam(a, inner);
  CHECK(alphaEq(normalize(env, t, fuel), Term::lam(a, Term::var(0))));

  GlobalEnv env2 = withEqN();
  Term one = natLit(1);
  Term eq11 = Term::app(Term::app(Term::constant("eqN"), one), one);
  CHECK(alphaEq(normalize(env2, eq11, fuel), Term::tt()));
  Term eq10 = Term::app(Term::app(Term::constant("eqN"), one), Term::zero());
  CHECK(alphaEq(normalize(env2, eq10, fuel), Term::ff()));
}

TEST_CASE("eqN agrees with the unary equality oracle for n,m <= 5") {
  GlobalEnv env = withEqN();
  Fuel fuel;
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned m = 0; m <= 5; ++m) {
      Term t = Term::app(Term::app(Term::constant("eqN"), natLit(n)), natLit(m));
      Term got = normalize(env, t, fuel);
      Term want = (n == m) ? Term::tt() : Term::ff();
      CHECK(alphaEq(got, want));
    }
  }
}

TEST_CASE("convertible identifies definitional equals") {
  GlobalEnv env;
  Fuel fuel;
  Term t = Term::app(Term::lam(Term::boolTy(), Term::var(0)), Term::tt());
  CHECK(convertible(env, t, Term::tt(), fuel));
  CHECK_FALSE(convertible(env, Term::tt(), Term::ff(), fuel));

  // bracket true is convertible to Unit once bracket is defined
  Term bracket = parseTermString("fun (b : Bool) => elimB (x. Type0, b, Unit, Void)");
  GlobalEnv env2 = defineGlobal(env, "bracket", parseTermString("Bool -> Type0"), bracket, fuel);
  CHECK(convertible(env2, Term::app(Term::constant("bracket"), Term::tt()),
                    Term::unitTy(), fuel));
}

TEST_CASE("fuel exhaustion raises E-FUEL") {
  GlobalEnv env;
  Fuel fuel{3};
  Term omegaish = Term::app(Term::lam(Term::boolTy(), Term::app(Term::var(0), Term::var(0))),
                            Term::lam(Term::boolTy(), Term::app(Term::var(0), Term::var(0))));
  CHECK_THROWS_WITH_AS(normalize(env, omegaish, fuel), doctest::Contains("E-FUEL"),
                       TypeError);
}

TEST_CASE("normalize agrees with iterated step and is idempotent") {
  GlobalEnv env = withEqN();
  std::mt19937_64 rng(0xBEEF);
  for (int i = 0; i < 120; ++i) {
    unsigned n = rng() % 4, m = rng() % 4;
    Term t = Term::app(Term::app(Term::constant("eqN"), natLit(n)), natLit(m));
    if (i % 3 == 0) t = Term::app(Term::lam(Term::boolTy(), Term::var(0)), t);
    Fuel fuel;
    Term nf = normalize(env, t, fuel);
    CHECK(alphaEq(nf, iterateStep(env, t)));
    Fuel fuel2;
    CHECK(alphaEq(normalize(env, nf, fuel2), nf));
  }
}
