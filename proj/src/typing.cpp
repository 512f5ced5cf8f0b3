#include "clari/typing.hpp"

#include <algorithm>

namespace clari {

namespace {

// Expects whnf(ty) to be a universe; returns its level.
unsigned universeLevel(const GlobalEnv& env, const Term& ty, Fuel& fuel,
                       const char* what) {
  Term w = whnf(env, ty, fuel);
  if (w.tag() != Tag::Univ) {
    fail("E-MISMATCH", std::string(what) + " is not a universe", {},
         normalize(env, ty, fuel));
  }
  return w.level();
}

// Instantiate a one-binder body whose binder sits below `extra` fresh
// binders: shift the frees, then consume the binder with `v`.
Term instUnder(const Term& body, unsigned extra, const Term& v) {
  return subst(shift(body, 1, extra), 0, v);
}

Term inferType(const GlobalEnv& env, const Context& ctx, const Term& t, Fuel& fuel);

unsigned checkIsType(const GlobalEnv& env, const Context& ctx, const Term& t, Fuel& fuel,
                     const char* what) {
  Term s = inferType(env, ctx, t, fuel);
  return universeLevel(env, s, fuel, what);
}

// The hierarchy is predicative: nothing quantifies over a Univ-2-typed type.
void requireQuantifiable(unsigned level, const char* what) {
  if (level > 1) fail("E-UNIV", std::string(what) + " lives at Type2 and cannot be quantified over");
}

Term inferType(const GlobalEnv& env, const Context& ctx, const Term& t, Fuel& fuel) {
  switch (t.tag()) {
    case Tag::Var: {
      if (t.index() >= ctx.size())
        fail("E-SCOPE", "variable index " + std::to_string(t.index()) +
                            " exceeds context of length " + std::to_string(ctx.size()));
      return ctx.varType(t.index());
    }
    case Tag::Univ: {
      if (t.level() + 1 > 2)
        fail("E-UNIV", "Type2 has no type in the three-level hierarchy");
      return Term::univ(t.level() + 1);
    }
    case Tag::Pi:
    case Tag::Sigma: {
      unsigned i = universeLevel(env, inferType(env, ctx, t.child(0), fuel), fuel,
                                 "binder domain");
      requireQuantifiable(i, "binder domain");
      unsigned j = universeLevel(
          env, inferType(env, ctx.extended(t.child(0)), t.child(1), fuel), fuel,
          "binder codomain");
      return Term::univ(std::max(i, j));
    }
    case Tag::Sum: {
      unsigned i = universeLevel(env, inferType(env, ctx, t.child(0), fuel), fuel,
                                 "sum component");
      unsigned j = universeLevel(env, inferType(env, ctx, t.child(1), fuel), fuel,
                                 "sum component");
      return Term::univ(std::max(i, j));
    }
    case Tag::Lam: {
      unsigned i = checkIsType(env, ctx, t.child(0), fuel, "lambda annotation");
      requireQuantifiable(i, "lambda annotation");
      Term bodyTy = inferType(env, ctx.extended(t.child(0)), t.child(1), fuel);
      return Term::pi(t.child(0), bodyTy);
    }
    case Tag::App: {
      Term fnTy = whnf(env, inferType(env, ctx, t.child(0), fuel), fuel);
      if (fnTy.tag() != Tag::Pi)
        fail("E-NOTFN", "application head is not a function", {},
             normalize(env, fnTy, fuel));
      check(env, ctx, t.child(1), fnTy.child(0), fuel);
      return subst(fnTy.child(1), 0, t.child(1));
    }
    case Tag::Pair: {
      checkIsType(env, ctx, t.child(2), fuel, "pair annotation");
      Term sig = whnf(env, t.child(2), fuel);
      if (sig.tag() != Tag::Sigma)
        fail("E-MISMATCH", "pair annotation is not a Sig type", {},
             normalize(env, t.child(2), fuel));
      check(env, ctx, t.child(0), sig.child(0), fuel);
      check(env, ctx, t.child(1), subst(sig.child(1), 0, t.child(0)), fuel);
      return t.child(2);
    }
    case Tag::SigElim: {
      Term sig = whnf(env, inferType(env, ctx, t.child(1), fuel), fuel);
      if (sig.tag() != Tag::Sigma)
        fail("E-MISMATCH", "elimSig scrutinee is not a pair type", {},
             normalize(env, sig, fuel));
      const Term& a = sig.child(0);
      const Term& b = sig.child(1);
      checkIsType(env, ctx.extended(sig), t.child(0), fuel, "motive");
      // branch lives under [fst, snd]
      Term expected = instUnder(t.child(0), 2,
                                Term::pairOf(Term::var(1), Term::var(0), shift(sig, 0, 2)));
      check(env, ctx.extended(a).extended(b), t.child(2), expected, fuel);
      return subst(t.child(0), 0, t.child(1));
    }
    case Tag::Inl:
    case Tag::Inr: {
      Term payloadTy = inferType(env, ctx, t.child(0), fuel);
      checkIsType(env, ctx, t.child(1), fuel, "injection annotation");
      return t.tag() == Tag::Inl ? Term::sum(payloadTy, t.child(1))
                                 : Term::sum(t.child(1), payloadTy);
    }
    case Tag::SumElim: {
      Term sumTy = whnf(env, inferType(env, ctx, t.child(1), fuel), fuel);
      if (sumTy.tag() != Tag::Sum)
        fail("E-MISMATCH", "elimS scrutinee is not a sum", {},
             normalize(env, sumTy, fuel));
      const Term& a = sumTy.child(0);
      const Term& b = sumTy.child(1);
      checkIsType(env, ctx.extended(sumTy), t.child(0), fuel, "motive");
      Term expL = instUnder(t.child(0), 1, Term::inl(Term::var(0), shift(b, 0, 1)));
      check(env, ctx.extended(a), t.child(2), expL, fuel);
      Term expR = instUnder(t.child(0), 1, Term::inr(Term::var(0), shift(a, 0, 1)));
      check(env, ctx.extended(b), t.child(3), expR, fuel);
      return subst(t.child(0), 0, t.child(1));
    }
    case Tag::UnitTy:
    case Tag::VoidTy:
    case Tag::BoolTy:
    case Tag::NatTy:
      return Term::univ(0);
    case Tag::UnitVal:
      return Term::unitTy();
    case Tag::VoidElim: {
      check(env, ctx, t.child(1), Term::voidTy(), fuel);
      checkIsType(env, ctx.extended(Term::voidTy()), t.child(0), fuel, "motive");
      return subst(t.child(0), 0, t.child(1));
    }
    case Tag::TT:
    case Tag::FF:
      return Term::boolTy();
    case Tag::BoolElim: {
      check(env, ctx, t.child(1), Term::boolTy(), fuel);
      checkIsType(env, ctx.extended(Term::boolTy()), t.child(0), fuel, "motive");
      check(env, ctx, t.child(2), subst(t.child(0), 0, Term::tt()), fuel);
      check(env, ctx, t.child(3), subst(t.child(0), 0, Term::ff()), fuel);
      return subst(t.child(0), 0, t.child(1));
    }
    case Tag::Zero:
      return Term::natTy();
    case Tag::Succ: {
      check(env, ctx, t.child(0), Term::natTy(), fuel);
      return Term::natTy();
    }
    case Tag::NatElim: {
      check(env, ctx, t.child(1), Term::natTy(), fuel);
      checkIsType(env, ctx.extended(Term::natTy()), t.child(0), fuel, "motive");
      check(env, ctx, t.child(2), subst(t.child(0), 0, Term::zero()), fuel);
      // succCase lives under [predecessor, motive(predecessor)]
      Term expected = instUnder(t.child(0), 2, Term::succ(Term::var(1)));
      check(env, ctx.extended(Term::natTy()).extended(t.child(0)), t.child(3), expected,
            fuel);
      return subst(t.child(0), 0, t.child(1));
    }
    case Tag::Const: {
      const GlobalDef* d = env.find(t.name());
      if (!d) fail("E-SCOPE", "unknown constant '" + t.name() + "'");
      return d->type;
    }
  }
  fail("E-SCOPE", "malformed term");
}

}  // namespace

Term infer(const GlobalEnv& env, const Context& ctx, const Term& t, Fuel& fuel) {
  return inferType(env, ctx, t, fuel);
}

void check(const GlobalEnv& env, const Context& ctx, const Term& t, const Term& type,
           Fuel& fuel) {
  Term actual = inferType(env, ctx, t, fuel);
  if (!leqType(env, actual, type, fuel)) {
    fail("E-MISMATCH", "type mismatch", normalize(env, type, fuel),
         normalize(env, actual, fuel));
  }
}

GlobalEnv defineGlobal(const GlobalEnv& env, const std::string& name,
                       const Term& statedType, const Term& body, Fuel& fuel,
                       bool isTheorem) {
  if (env.find(name)) fail("E-DUPNAME", "duplicate global name '" + name + "'");
  if (!scopeValid(statedType, 0))
    fail("E-SCOPE", "stated type of '" + name + "' is not closed");
  if (!scopeValid(body, 0)) fail("E-SCOPE", "body of '" + name + "' is not closed");
  Context empty;
  universeLevel(env, inferType(env, empty, statedType, fuel), fuel, "stated type");
  check(env, empty, body, statedType, fuel);
  GlobalEnv out = env;
  out.appendUnchecked(GlobalDef{name, statedType, body, isTheorem});
  return out;
}

GlobalEnv defineStatement(const GlobalEnv& env, const std::string& name,
                          const Term& statedType, Fuel& fuel) {
  if (env.find(name)) fail("E-DUPNAME", "duplicate global name '" + name + "'");
  if (!scopeValid(statedType, 0))
    fail("E-SCOPE", "stated type of '" + name + "' is not closed");
  Context empty;
  universeLevel(env, inferType(env, empty, statedType, fuel), fuel, "stated type");
  GlobalEnv out = env;
  out.appendUnchecked(GlobalDef{name, statedType, std::nullopt, true});
  return out;
}

}  // namespace clari
