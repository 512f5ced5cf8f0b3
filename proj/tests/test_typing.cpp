#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clari/eval.hpp"
#include "clari/parser.hpp"
#include "clari/typing.hpp"

using namespace clari;

namespace {

Term parse(const std::string& s) { return parseTermString(s); }

std::string codeOf(const TypeError& e) { return e.diag().code; }

}  // namespace

TEST_CASE("identity function infers its Pi type") {
  GlobalEnv env;
  Context ctx;
  Fuel fuel;
  Term id = parse("fun (phi : Type0) => fun (x : phi) => x");
  Term ty = infer(env, ctx, id, fuel);
  CHECK(alphaEq(ty, parse("Pi (phi : Type0), phi -> phi")));
  CHECK(alphaEq(infer(env, ctx, Term::univ(0), fuel), Term::univ(1)));
}

TEST_CASE("constant-motive elimN recovers simply typed recursion") {
  GlobalEnv env;
  Context ctx;
  Fuel fuel;
  Term t = parse("elimN (n. Bool, succ zero, true, n ih. ih)");
  CHECK(alphaEq(infer(env, ctx, t, fuel), Term::boolTy()));
}

TEST_CASE("check uses conversion") {
  GlobalEnv env;
  Context ctx;
  Fuel fuel;
  check(env, ctx, parse("fun (x : Void) => x"), parse("Void -> Void"), fuel);
  CHECK_THROWS_AS(check(env, ctx, parse("zero"), Term::boolTy(), fuel), TypeError);
  // a redex in the expected type is fine
  check(env, ctx, Term::tt(), parse("(fun (A : Type0) => A) Bool"), fuel);
}

TEST_CASE("error codes") {
  GlobalEnv env;
  Context ctx;
  Fuel fuel;
  try {
    infer(env, ctx, Term::var(0), fuel);
    FAIL("expected E-SCOPE");
  } catch (const TypeError& e) {
    CHECK(codeOf(e) == "E-SCOPE");
  }
  try {
    infer(env, ctx, Term::app(Term::tt(), Term::tt()), fuel);
    FAIL("expected E-NOTFN");
  } catch (const TypeError& e) {
    CHECK(codeOf(e) == "E-NOTFN");
  }
  try {
    infer(env, ctx, Term::univ(2), fuel);
    FAIL("expected E-UNIV");
  } catch (const TypeError& e) {
    CHECK(codeOf(e) == "E-UNIV");
  }
  try {
    infer(env, ctx, parse("Pi (A : Type1), A"), fuel);
    FAIL("expected E-UNIV");
  } catch (const TypeError& e) {
    CHECK(codeOf(e) == "E-UNIV");
  }
  try {
    infer(env, ctx, Term::constant("nope"), fuel);
    FAIL("expected E-SCOPE");
  } catch (const TypeError& e) {
    CHECK(codeOf(e) == "E-SCOPE");
  }
}

TEST_CASE("defineGlobal validates and rejects duplicates") {
  GlobalEnv env;
  Fuel fuel;
  env = defineGlobal(env, "neg", parse("Type0 -> Type0"),
                     parse("fun (phi : Type0) => phi -> Void"), fuel);
  CHECK(env.find("neg") != nullptr);
  try {
    defineGlobal(env, "neg", parse("Type0 -> Type0"),
                 parse("fun (phi : Type0) => phi"), fuel);
    FAIL("expected E-DUPNAME");
  } catch (const TypeError& e) {
    CHECK(codeOf(e) == "E-DUPNAME");
  }
  try {
    defineGlobal(env, "bad", Term::boolTy(), Term::zero(), fuel);
    FAIL("expected E-MISMATCH");
  } catch (const TypeError& e) {
    CHECK(codeOf(e) == "E-MISMATCH");
  }
  // non-closed inputs are rejected up front
  CHECK_THROWS_AS(defineGlobal(env, "open", Term::boolTy(), Term::var(0), fuel),
                  TypeError);
}

TEST_CASE("cumulativity admits lower universes") {
  GlobalEnv env;
  Context ctx;
  Fuel fuel;
  check(env, ctx, Term::boolTy(), Term::univ(1), fuel);
  check(env, ctx, parse("Bool -> Type0"), Term::univ(2), fuel);
  CHECK_THROWS_AS(check(env, ctx, Term::univ(1), Term::univ(0), fuel), TypeError);
}

TEST_CASE("dependent eliminators instantiate their motives") {
  GlobalEnv env;
  Context ctx;
  Fuel fuel;
  // if b then Nat else Bool, eliminated dependently
  Term t = parse(
      "fun (b : Bool) =>"
      "  elimB (x. elimB (y. Type0, x, Nat, Bool), b, zero, true)");
  Term ty = infer(env, ctx, t, fuel);
  CHECK(alphaEq(ty, parse("Pi (b : Bool), elimB (y. Type0, b, Nat, Bool)")));

  // dependent pair elimination: motive mentions the scrutinee
  Term pr = parse("pair(true, zero : Sig (b : Bool), Nat)");
  Term getFst = parse("elimSig (p. Bool, pair(true, zero : Sig (b : Bool), Nat), a b. a)");
  CHECK(alphaEq(infer(env, ctx, getFst, fuel), Term::boolTy()));
  CHECK(alphaEq(infer(env, ctx, pr, fuel), parse("Sig (b : Bool), Nat")));
}

namespace {

// Typed term generator: returns well-typed terms by construction.
struct Gen {
  std::mt19937_64 rng;
  GlobalEnv env;
  Fuel fuel{100000000};

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int pick(int n) { return static_cast<int>(rng() % n); }

  Term natLit(unsigned n) {
    Term t = Term::zero();
    for (unsigned i = 0; i < n; ++i) t = Term::succ(t);
    return t;
  }

  // generate a closed first-order type
  Term genType(int depth) {
    if (depth <= 0) {
      switch (pick(3)) {
        case 0: return Term::boolTy();
        case 1: return Term::natTy();
        default: return Term::unitTy();
      }
    }
    switch (pick(5)) {
      case 0: return Term::pi(genType(depth - 1), shift(genType(depth - 1), 0, 1));
      case 1: return Term::sigma(genType(depth - 1), shift(genType(depth - 1), 0, 1));
      case 2: return Term::sum(genType(depth - 1), genType(depth - 1));
      default: return genType(0);
    }
  }

  // generate a closed term of the given closed type
  Term genOf(const Term& ty, int depth) {
    Fuel f{1000000};
    GlobalEnv none;
    Term w = whnf(none, ty, f);
    if (depth > 0 && pick(4) == 0) {
      // wrap in a beta redex of the same type
      Term inner = genOf(ty, depth - 1);
      Term dom = genType(0);
      Term arg = genOf(dom, 0);
      return Term::app(Term::lam(dom, shift(inner, 0, 1)), arg);
    }
    switch (w.tag()) {
      case Tag::BoolTy: {
        if (depth > 0 && pick(3) == 0) {
          Term b = genOf(Term::boolTy(), 0);
          return Term::boolElim(Term::boolTy(), b, genOf(w, depth - 1), genOf(w, depth - 1));
        }
        return pick(2) ? Term::tt() : Term::ff();
      }
      case Tag::NatTy: {
        if (depth > 0 && pick(3) == 0) {
          Term n = natLit(static_cast<unsigned>(pick(3)));
          // rec with constant motive: zero case Nat, succ case uses ih
          return Term::natElim(Term::natTy(), n, genOf(w, depth - 1),
                               Term::succ(Term::var(0)));
        }
        return natLit(static_cast<unsigned>(pick(4)));
      }
      case Tag::UnitTy:
        return Term::unitVal();
      case Tag::Pi: {
        Term body = genOf(shift(w.child(1), 0, -1), depth > 0 ? depth - 1 : 0);
        return Term::lam(w.child(0), shift(body, 0, 1));
      }
      case Tag::Sigma: {
        Term a = genOf(w.child(0), depth > 0 ? depth - 1 : 0);
        Term b = genOf(shift(w.child(1), 0, -1), depth > 0 ? depth - 1 : 0);
        return Term::pairOf(a, b, w);
      }
      case Tag::Sum: {
        if (pick(2)) return Term::inl(genOf(w.child(0), depth - 1), w.child(1));
        return Term::inr(genOf(w.child(1), depth - 1), w.child(0));
      }
      default:
        return Term::unitVal();
    }
  }
};

}  // namespace

TEST_CASE("subject reduction and idempotence on generated terms") {
  Gen g(0x5EED);
  GlobalEnv env;
  Context ctx;
  int reduced = 0;
  for (int i = 0; i < 200; ++i) {
    Term ty = g.genType(2);
    Term t = g.genOf(ty, 3);
    Fuel fuel;
    Term a = infer(env, ctx, t, fuel);
    // every step preserves the type
    Term cur = t;
    for (int s = 0;; ++s) {
      REQUIRE(s < 10000);
      auto nxt = step(env, cur);
      if (!nxt) break;
      cur = *nxt;
      check(env, ctx, cur, a, fuel);
      ++reduced;
    }
    Term nf = normalize(env, t, fuel);
    CHECK(alphaEq(nf, normalize(env, nf, fuel)));
    CHECK(alphaEq(nf, cur));
  }
  CHECK(reduced > 100);
}
