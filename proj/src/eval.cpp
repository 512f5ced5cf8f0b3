#include "clari/eval.hpp"

namespace clari {

void burnFuel(Fuel& fuel, const Term& site) {
  if (fuel.remaining == 0) {
    fail("E-FUEL", "reduction fuel exhausted", {}, site);
  }
  --fuel.remaining;
}

namespace {

// NatElim succCase binds [predecessor, inductive hypothesis]; SigElim branch
// binds [fst, snd]. The inner binder (index 0) is substituted first.
Term instantiate2(const Term& body, const Term& outer, const Term& inner) {
  return subst(subst(body, 0, shift(inner, 0, 1)), 0, outer);
}

std::optional<Term> contractRoot(const GlobalEnv& env, const Term& t) {
  switch (t.tag()) {
    case Tag::App: {
      const Term& f = t.child(0);
      if (f.tag() == Tag::Lam) return subst(f.child(1), 0, t.child(1));
      return std::nullopt;
    }
    case Tag::BoolElim: {
      const Term& s = t.child(1);
      if (s.tag() == Tag::TT) return t.child(2);
      if (s.tag() == Tag::FF) return t.child(3);
      return std::nullopt;
    }
    case Tag::NatElim: {
      const Term& s = t.child(1);
      if (s.tag() == Tag::Zero) return t.child(2);
      if (s.tag() == Tag::Succ) {
        const Term& pred = s.child(0);
        Term rec = Term::natElim(t.child(0), pred, t.child(2), t.child(3));
        return instantiate2(t.child(3), pred, rec);
      }
      return std::nullopt;
    }
    case Tag::SumElim: {
      const Term& s = t.child(1);
      if (s.tag() == Tag::Inl) return subst(t.child(2), 0, s.child(0));
      if (s.tag() == Tag::Inr) return subst(t.child(3), 0, s.child(0));
      return std::nullopt;
    }
    case Tag::SigElim: {
      const Term& s = t.child(1);
      if (s.tag() == Tag::Pair) return instantiate2(t.child(2), s.child(0), s.child(1));
      return std::nullopt;
    }
    case Tag::Const: {
      const GlobalDef* d = env.find(t.name());
      if (d && d->body) return *d->body;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<Term> step(const GlobalEnv& env, const Term& t) {
  if (auto r = contractRoot(env, t)) return r;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (auto r = step(env, t.child(i))) {
      std::vector<Term> kids;
      kids.reserve(t.arity());
      for (std::size_t j = 0; j < t.arity(); ++j) kids.push_back(j == i ? *r : t.child(j));
      return t.withChildren(std::move(kids));
    }
  }
  return std::nullopt;
}

Term whnf(const GlobalEnv& env, Term t, Fuel& fuel) {
  for (;;) {
    switch (t.tag()) {
      case Tag::App: {
        Term f = whnf(env, t.child(0), fuel);
        if (f.tag() == Tag::Lam) {
          burnFuel(fuel, t);
          t = subst(f.child(1), 0, t.child(1));
          continue;
        }
        if (f.sameNode(t.child(0))) return t;
        return Term::app(std::move(f), t.child(1));
      }
      case Tag::BoolElim: {
        Term s = whnf(env, t.child(1), fuel);
        if (s.tag() == Tag::TT || s.tag() == Tag::FF) {
          burnFuel(fuel, t);
          t = s.tag() == Tag::TT ? t.child(2) : t.child(3);
          continue;
        }
        if (s.sameNode(t.child(1))) return t;
        return Term::boolElim(t.child(0), std::move(s), t.child(2), t.child(3));
      }
      case Tag::NatElim: {
        Term s = whnf(env, t.child(1), fuel);
        if (s.tag() == Tag::Zero) {
          burnFuel(fuel, t);
          t = t.child(2);
          continue;
        }
        if (s.tag() == Tag::Succ) {
          burnFuel(fuel, t);
          const Term& pred = s.child(0);
          Term rec = Term::natElim(t.child(0), pred, t.child(2), t.child(3));
          t = instantiate2(t.child(3), pred, rec);
          continue;
        }
        if (s.sameNode(t.child(1))) return t;
        return Term::natElim(t.child(0), std::move(s), t.child(2), t.child(3));
      }
      case Tag::SumElim: {
        Term s = whnf(env, t.child(1), fuel);
        if (s.tag() == Tag::Inl || s.tag() == Tag::Inr) {
          burnFuel(fuel, t);
          t = subst(s.tag() == Tag::Inl ? t.child(2) : t.child(3), 0, s.child(0));
          continue;
        }
        if (s.sameNode(t.child(1))) return t;
        return Term::sumElim(t.child(0), std::move(s), t.child(2), t.child(3));
      }
      case Tag::SigElim: {
        Term s = whnf(env, t.child(1), fuel);
        if (s.tag() == Tag::Pair) {
          burnFuel(fuel, t);
          t = instantiate2(t.child(2), s.child(0), s.child(1));
          continue;
        }
        if (s.sameNode(t.child(1))) return t;
        return Term::sigElim(t.child(0), std::move(s), t.child(2));
      }
      case Tag::Const: {
        const GlobalDef* d = env.find(t.name());
        if (d && d->body) {
          burnFuel(fuel, t);
          t = *d->body;
          continue;
        }
        return t;
      }
      default:
        return t;
    }
  }
}

Term normalize(const GlobalEnv& env, const Term& t, Fuel& fuel) {
  Term h = whnf(env, t, fuel);
  if (h.arity() == 0) return h;
  std::vector<Term> kids;
  kids.reserve(h.arity());
  bool changed = false;
  for (std::size_t i = 0; i < h.arity(); ++i) {
    Term k = normalize(env, h.child(i), fuel);
    if (!k.sameNode(h.child(i))) changed = true;
    kids.push_back(std::move(k));
  }
  if (!changed) return h;
  return h.withChildren(std::move(kids));
}

bool convertible(const GlobalEnv& env, const Term& t, const Term& u, Fuel& fuel) {
  if (alphaEq(t, u)) return true;
  return alphaEq(normalize(env, t, fuel), normalize(env, u, fuel));
}

namespace {

bool leqNorm(const Term& a, const Term& b) {
  if (alphaEq(a, b)) return true;
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::Univ:
      return a.level() <= b.level();
    case Tag::Pi:
      return alphaEq(a.child(0), b.child(0)) && leqNorm(a.child(1), b.child(1));
    case Tag::Sigma:
    case Tag::Sum:
      return leqNorm(a.child(0), b.child(0)) && leqNorm(a.child(1), b.child(1));
    default:
      return false;
  }
}

}  // namespace

bool leqType(const GlobalEnv& env, const Term& a, const Term& b, Fuel& fuel) {
  if (alphaEq(a, b)) return true;
  return leqNorm(normalize(env, a, fuel), normalize(env, b, fuel));
}

}  // namespace clari
