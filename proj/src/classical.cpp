#include "clari/classical.hpp"

#include <algorithm>
#include <optional>

#include "clari/typing.hpp"

namespace clari {

namespace {

// Raw connective spellings; the emitted witnesses never depend on stdlib
// load order, only their displayed types do.
Term rneg(const Term& t) { return Term::pi(t, Term::voidTy()); }
Term rnn(const Term& t) { return rneg(rneg(t)); }
Term rarrow(const Term& a, const Term& b) { return Term::pi(a, shift(b, 0, 1)); }
Term randP(const Term& a, const Term& b) { return Term::sigma(a, shift(b, 0, 1)); }

Term negE(const GlobalEnv& env, const Term& t) {
  if (env.find("neg")) return Term::app(Term::constant("neg"), t);
  return rneg(t);
}

Term dnE(const GlobalEnv& env, const Term& t) {
  if (env.find("dn")) return Term::app(Term::constant("dn"), t);
  return rnn(t);
}

Term spineHead(const Term& t, std::vector<Term>& args) {
  Term h = t;
  while (h.tag() == Tag::App) {
    args.push_back(h.child(1));
    h = h.child(0);
  }
  std::reverse(args.begin(), args.end());
  return h;
}

Term mkSpine(Term h, const std::vector<Term>& args) {
  for (const Term& a : args) h = Term::app(std::move(h), a);
  return h;
}

// Head reduction that records every Const-headed spine it unfolds, so hint
// lookup can see goals before their definitions disappear.
Term headChain(const GlobalEnv& env, Term t, std::vector<Term>& constForms, Fuel& fuel) {
  for (;;) {
    std::vector<Term> args;
    Term h = spineHead(t, args);
    if (h.tag() == Tag::Const) {
      const GlobalDef* d = env.find(h.name());
      if (d && d->body) {
        constForms.push_back(t);
        burnFuel(fuel, t);
        t = mkSpine(*d->body, args);
        continue;
      }
      return t;
    }
    if (h.tag() == Tag::Lam && !args.empty()) {
      burnFuel(fuel, t);
      Term reduced = subst(h.child(1), 0, args.front());
      std::vector<Term> rest(args.begin() + 1, args.end());
      t = mkSpine(std::move(reduced), rest);
      continue;
    }
    return t;
  }
}

bool usesVarsBelowAt(const Term& t, unsigned bound, unsigned depth) {
  if (t.tag() == Tag::Var) return t.index() >= depth && t.index() < depth + bound;
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (usesVarsBelowAt(t.child(i), bound, depth + childBinders(t.tag(), i))) return true;
  return false;
}
bool usesVarsBelow(const Term& t, unsigned bound) { return usesVarsBelowAt(t, bound, 0); }

// ---- raw witness builders; binder stacks noted inline ----

Term certTop() { return Term::lam(rnn(Term::unitTy()), Term::unitVal()); }

Term certBot() {
  // [nn]  nn (fun (x : Void) => x)
  return Term::lam(rnn(Term::voidTy()),
                   Term::app(Term::var(0), Term::lam(Term::voidTy(), Term::var(0))));
}

Term certJoin(const Term& psi) {
  // [x][k]  x (fun (m : nn psi) => m k)
  return Term::lam(
      rnn(rnn(psi)),
      Term::lam(rneg(shift(psi, 0, 1)),
                Term::app(Term::var(1),
                          Term::lam(rnn(shift(psi, 0, 2)),
                                    Term::app(Term::var(0), Term::var(1))))));
}

// goal S = Sigma(A, B) with B not using its binder; bp is B unshifted.
// wa / wb certify A / bp in the ambient context.
Term certAnd(const Term& s, const Term& a, const Term& bp, const Term& wa, const Term& wb) {
  // component extractors under [nn,k,p,(fst,snd)]
  Term fst = Term::sigElim(shift(a, 0, 4), Term::var(0), Term::var(1));
  Term snd = Term::sigElim(shift(bp, 0, 4), Term::var(0), Term::var(0));
  auto side = [&](const Term& w, const Term& compTy, const Term& proj) {
    // [nn]  w (fun (k : neg comp) => nn (fun (p : S) => k (proj p)))
    return Term::app(
        shift(w, 0, 1),
        Term::lam(rneg(shift(compTy, 0, 1)),
                  Term::app(Term::var(1),
                            Term::lam(shift(s, 0, 2), Term::app(Term::var(1), proj)))));
  };
  return Term::lam(rnn(s), Term::pairOf(side(wa, a, fst), side(wb, bp, snd), shift(s, 0, 1)));
}

// goal Pi(A, B); w certifies B in the context extended by A.
Term certPi(const Term& a, const Term& b, const Term& w) {
  Term p = Term::pi(a, b);
  // [nn][a']  w' (fun (k : neg B) => nn (fun (f : P) => k (f a')))
  Term inner = Term::lam(
      shift(p, 0, 3),
      Term::app(Term::var(1), Term::app(Term::var(0), Term::var(2))));
  Term arg = Term::lam(rneg(shift(b, 1, 1)), Term::app(Term::var(2), inner));
  return Term::lam(rnn(p), Term::lam(shift(a, 0, 1), Term::app(shift(w, 1, 1), arg)));
}

Term bracketOf(const Term& b) {
  return Term::boolElim(Term::univ(0), b, Term::unitTy(), Term::voidTy());
}

// Case analysis over the boolean: the Fig-1 lemma as an inline term.
Term boolAtomLemma(const GlobalEnv& env) {
  if (env.find("stable_boolatom")) return Term::constant("stable_boolatom");
  Term brv = bracketOf(Term::var(0));
  Term motive = Term::pi(rnn(brv), shift(brv, 0, 1));
  Term brT = bracketOf(Term::tt());
  Term brF = bracketOf(Term::ff());
  Term onTrue = Term::lam(rnn(brT), Term::unitVal());
  Term onFalse =
      Term::lam(rnn(brF), Term::app(Term::var(0), Term::lam(brF, Term::var(0))));
  return Term::lam(Term::boolTy(),
                   Term::boolElim(motive, Term::var(0), onTrue, onFalse));
}

// inst : phi + neg phi  in the ambient context.
Term certDec(const GlobalEnv& env, const Term& phi, const Term& inst) {
  if (env.find("dec_stable")) {
    // dec_stable phi inst : nn phi -> phi
    return Term::app(Term::app(Term::constant("dec_stable"), phi), inst);
  }
  // [nn]  elimS(_. phi, inst, a. a, k. elimV(_. phi, nn k))
  Term rightBr = Term::voidElim(shift(phi, 0, 3), Term::app(Term::var(1), Term::var(0)));
  return Term::lam(rnn(phi), Term::sumElim(shift(phi, 0, 2), shift(inst, 0, 1),
                                           Term::var(0), rightBr));
}

struct HintSplit {
  std::vector<Term> tele;  // entry j valid under j binders
  Term conclusion;         // under tele.size() binders
};

std::optional<HintSplit> splitStableHint(const GlobalEnv& env, const Term& ty, Fuel& fuel) {
  std::vector<Term> tele;
  Term t = ty;
  for (;;) {
    if (t.tag() != Tag::Pi) return std::nullopt;
    const Term& n = t.child(0);
    const Term& c = t.child(1);
    if (!hasFreeVar(c, 0)) {
      Term cu = shift(c, 0, -1);
      std::vector<Term> args;
      Term h = spineHead(cu, args);
      if (h.tag() == Tag::Const && convertible(env, n, rnn(cu), fuel)) {
        return HintSplit{std::move(tele), cu};
      }
    }
    tele.push_back(n);
    t = c;
  }
}

std::optional<HintSplit> splitDecHint(const GlobalEnv& env, const Term& ty, Fuel& fuel) {
  std::vector<Term> tele;
  Term t = ty;
  for (;;) {
    if (t.tag() == Tag::Sum) {
      const Term& l = t.child(0);
      const Term& r = t.child(1);
      std::vector<Term> args;
      Term h = spineHead(l, args);
      if (h.tag() == Tag::Const && convertible(env, r, rneg(l), fuel))
        return HintSplit{std::move(tele), l};
      return std::nullopt;
    }
    if (t.tag() != Tag::Pi) return std::nullopt;
    tele.push_back(t.child(0));
    t = t.child(1);
  }
}

struct Engine {
  const GlobalEnv& env;
  const HintDb& db;
  Fuel& fuel;

  std::variant<Term, NotStableInfo> go(const Context& ctx, const Term& goal,
                                       std::vector<PathStep> path, int depth) {
    if (depth > 64) return NotStableInfo{std::move(path), goal};

    std::vector<Term> candidates;
    Term t = headChain(env, goal, candidates, fuel);
    {
      std::vector<Term> args;
      if (spineHead(t, args).tag() == Tag::Const) candidates.push_back(t);
    }
    Term u = whnf(env, t, fuel);

    // N-headed goals are stable via join, before any hint fires.
    if (u.tag() == Tag::Pi && !hasFreeVar(u.child(1), 0) &&
        normalize(env, shift(u.child(1), 0, -1), fuel).tag() == Tag::VoidTy) {
      Term dw = whnf(env, u.child(0), fuel);
      if (dw.tag() == Tag::Pi && !hasFreeVar(dw.child(1), 0) &&
          normalize(env, shift(dw.child(1), 0, -1), fuel).tag() == Tag::VoidTy) {
        return certJoin(dw.child(0));
      }
    }

    std::optional<NotStableInfo> refusal;
    switch (u.tag()) {
      case Tag::UnitTy:
        return certTop();
      case Tag::VoidTy:
        return certBot();
      case Tag::Pi: {
        auto sub = path;
        sub.push_back(PathStep::Codomain);
        auto child = go(ctx.extended(u.child(0)), u.child(1), sub, depth + 1);
        if (auto* w = std::get_if<Term>(&child))
          return certPi(u.child(0), u.child(1), *w);
        refusal = std::get<NotStableInfo>(child);
        break;
      }
      case Tag::Sigma: {
        if (hasFreeVar(u.child(1), 0)) {
          refusal = NotStableInfo{path, u};
          break;
        }
        Term bp = shift(u.child(1), 0, -1);
        auto lp = path;
        lp.push_back(PathStep::Left);
        auto lchild = go(ctx, u.child(0), lp, depth + 1);
        if (auto* nl = std::get_if<NotStableInfo>(&lchild)) {
          refusal = *nl;
          break;
        }
        auto rp = path;
        rp.push_back(PathStep::Right);
        auto rchild = go(ctx, bp, rp, depth + 1);
        if (auto* nr = std::get_if<NotStableInfo>(&rchild)) {
          refusal = *nr;
          break;
        }
        return certAnd(u, u.child(0), bp, std::get<Term>(lchild), std::get<Term>(rchild));
      }
      case Tag::BoolElim: {
        if (normalize(env, u.child(0), fuel).tag() == Tag::Univ &&
            normalize(env, u.child(0), fuel).level() == 0 &&
            normalize(env, u.child(2), fuel).tag() == Tag::UnitTy &&
            normalize(env, u.child(3), fuel).tag() == Tag::VoidTy) {
          return Term::app(boolAtomLemma(env), u.child(1));
        }
        refusal = NotStableInfo{path, u};
        break;
      }
      case Tag::Sum:
      default:
        refusal = NotStableInfo{path, u};
        break;
    }

    for (const Term& cand : candidates) {
      for (const std::string& name : db.stableHints) {
        if (auto w = tryStableHint(ctx, cand, goal, name, depth)) return *w;
      }
      for (const std::string& name : db.decidableHints) {
        if (auto w = tryDecHint(ctx, cand, goal, name, depth)) return *w;
      }
    }
    return *refusal;
  }

  // Matches the hint conclusion's constant spine against `cand`, assigning
  // telescope variables left to right; residual telescope entries that are
  // themselves stability statements are discharged recursively.
  std::optional<std::vector<Term>> matchTele(const Context& ctx, const HintSplit& hs,
                                             const Term& cand, int depth) {
    std::vector<Term> gargs, pargs;
    Term gh = spineHead(cand, gargs);
    Term ph = spineHead(hs.conclusion, pargs);
    if (gh.tag() != Tag::Const || ph.tag() != Tag::Const || gh.name() != ph.name())
      return std::nullopt;
    if (gargs.size() != pargs.size()) return std::nullopt;
    std::size_t k = hs.tele.size();
    std::vector<std::optional<Term>> assign(k);
    for (std::size_t i = 0; i < pargs.size(); ++i) {
      const Term& p = pargs[i];
      if (p.tag() == Tag::Var && p.index() < k) {
        std::size_t slot = k - 1 - p.index();
        if (!assign[slot])
          assign[slot] = gargs[i];
        else if (!convertible(env, *assign[slot], gargs[i], fuel))
          return std::nullopt;
      } else {
        if (usesVarsBelow(p, static_cast<unsigned>(k))) return std::nullopt;
        Term closed = shift(p, 0, -static_cast<long long>(k));
        if (!convertible(env, closed, gargs[i], fuel)) return std::nullopt;
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (assign[j]) continue;
      Term tj = hs.tele[j];
      for (std::size_t q = j; q-- > 0;) {
        if (!assign[q]) return std::nullopt;
        tj = subst(tj, 0, *assign[q]);
      }
      Term w = whnf(env, tj, fuel);
      if (w.tag() == Tag::Pi && !hasFreeVar(w.child(1), 0)) {
        Term target = shift(w.child(1), 0, -1);
        if (convertible(env, w.child(0), rnn(target), fuel)) {
          auto sub = go(ctx, target, {}, depth + 1);
          if (auto* sw = std::get_if<Term>(&sub)) {
            assign[j] = *sw;
            continue;
          }
        }
      }
      return std::nullopt;
    }
    std::vector<Term> out;
    out.reserve(k);
    for (auto& a : assign) out.push_back(*a);
    return out;
  }

  bool verifies(const Context& ctx, const Term& witness, const Term& goal) {
    try {
      Fuel local = fuel;
      check(env, ctx, witness, Term::pi(rnn(goal), shift(goal, 0, 1)), local);
      return true;
    } catch (const TypeError&) {
      return false;
    }
  }

  std::optional<Term> tryStableHint(const Context& ctx, const Term& cand, const Term& goal,
                                    const std::string& name, int depth) {
    const GlobalDef* d = env.find(name);
    if (!d) return std::nullopt;
    auto hs = splitStableHint(env, d->type, fuel);
    if (!hs) return std::nullopt;
    auto args = matchTele(ctx, *hs, cand, depth);
    if (!args) return std::nullopt;
    Term w = mkSpine(Term::constant(name), *args);
    if (!verifies(ctx, w, goal)) return std::nullopt;
    return w;
  }

  std::optional<Term> tryDecHint(const Context& ctx, const Term& cand, const Term& goal,
                                 const std::string& name, int depth) {
    const GlobalDef* d = env.find(name);
    if (!d) return std::nullopt;
    auto hs = splitDecHint(env, d->type, fuel);
    if (!hs) return std::nullopt;
    auto args = matchTele(ctx, *hs, cand, depth);
    if (!args) return std::nullopt;
    Term inst = mkSpine(Term::constant(name), *args);
    Term w = certDec(env, goal, inst);
    if (!verifies(ctx, w, goal)) return std::nullopt;
    return w;
  }
};

}  // namespace

std::string pathToString(const std::vector<PathStep>& path) {
  if (path.empty()) return "here";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    switch (path[i]) {
      case PathStep::Codomain: out += "codomain"; break;
      case PathStep::Left: out += "left"; break;
      case PathStep::Right: out += "right"; break;
    }
  }
  return out;
}

Term stabilityType(const GlobalEnv& env, const Term& t) {
  return Term::pi(negE(env, negE(env, t)), shift(t, 0, 1));
}

HintDb registerHint(const GlobalEnv& env, const HintDb& db, const std::string& name,
                    const std::string& kind, Fuel& fuel) {
  const GlobalDef* d = env.find(name);
  if (!d) fail("E-SCOPE", "unknown constant '" + name + "' in hint registration");
  HintDb out = db;
  if (kind == "stable") {
    if (!splitStableHint(env, d->type, fuel))
      fail("E-MISMATCH",
           "'" + name + "' does not have shape Pi ..., neg (neg (h args)) -> h args");
    out.stableHints.push_back(name);
  } else if (kind == "decidable") {
    if (!splitDecHint(env, d->type, fuel))
      fail("E-MISMATCH",
           "'" + name + "' does not have shape Pi ..., Sum(h args, neg (h args))");
    out.decidableHints.push_back(name);
  } else {
    fail("E-MISMATCH", "unknown hint kind '" + kind + "'");
  }
  return out;
}

StabilityResult proveStable(const GlobalEnv& env, const HintDb& db, const Term& formula,
                            Fuel& fuel) {
  Context empty;
  check(env, empty, formula, Term::univ(0), fuel);
  Engine eng{env, db, fuel};
  auto r = eng.go(empty, formula, {}, 0);
  if (auto* w = std::get_if<Term>(&r)) {
    // the kernel is the oracle: re-check before handing the certificate out
    check(env, empty, *w, Term::pi(rnn(formula), shift(formula, 0, 1)), fuel);
    return StabilityCertificate{formula, *w};
  }
  return std::get<NotStableInfo>(r);
}

Term emitLem(const GlobalEnv& env, const Term& phi) {
  (void)env;
  // [p]  elimSig(_. Void, p, a b. b a)
  return Term::lam(randP(rneg(phi), rnn(phi)),
                   Term::sigElim(Term::voidTy(), Term::var(0),
                                 Term::app(Term::var(0), Term::var(1))));
}

Term emitWeakenOr(const GlobalEnv& env, const Term& phi, const Term& psi) {
  (void)env;
  // [s][p]  elimSig(_. Void, p, na nb. elimS(_. Void, s, a. na a, b. nb b))
  Term inner = Term::sumElim(Term::voidTy(), Term::var(3),
                             Term::app(Term::var(2), Term::var(0)),
                             Term::app(Term::var(1), Term::var(0)));
  return Term::lam(
      Term::sum(phi, psi),
      Term::lam(shift(randP(rneg(phi), rneg(psi)), 0, 1),
                Term::sigElim(Term::voidTy(), Term::var(0), inner)));
}

Term emitWeakenEx(const GlobalEnv& env, const Term& domain, const Term& family) {
  (void)env;
  Term sigTy = Term::sigma(domain, family);
  Term allNeg = Term::pi(domain, rneg(family));
  // [s][k]  elimSig(_. Void, s, a pf. k a pf)
  Term branch = Term::app(Term::app(Term::var(2), Term::var(1)), Term::var(0));
  return Term::lam(sigTy, Term::lam(shift(allNeg, 0, 1),
                                    Term::sigElim(Term::voidTy(), Term::var(1), branch)));
}

Term emitOrElim(const GlobalEnv& env, const Term& phi, const Term& psi, const Term& theta) {
  (void)env;
  Term orw = rneg(randP(rneg(phi), rneg(psi)));
  // [f][g][st][d][k]  pair(fun a => k (f a), fun b => k (g b))
  Term c1 = Term::lam(shift(phi, 0, 5),
                      Term::app(Term::var(1), Term::app(Term::var(5), Term::var(0))));
  Term c2 = Term::lam(shift(psi, 0, 5),
                      Term::app(Term::var(1), Term::app(Term::var(4), Term::var(0))));
  Term pairTerm = Term::pairOf(c1, c2, shift(randP(rneg(phi), rneg(psi)), 0, 5));
  Term body = Term::app(
      Term::var(1),
      Term::lam(rneg(shift(theta, 0, 4)), Term::app(Term::var(1), pairTerm)));
  return Term::lam(
      rarrow(phi, theta),
      Term::lam(shift(rarrow(psi, theta), 0, 1),
                Term::lam(shift(rarrow(rnn(theta), theta), 0, 2),
                          Term::lam(shift(orw, 0, 3), body))));
}

Term emitExElim(const GlobalEnv& env, const Term& domain, const Term& family,
                const Term& theta) {
  (void)env;
  Term hyp = Term::pi(domain, Term::pi(family, shift(theta, 0, 2)));
  Term exw = rneg(Term::pi(domain, rneg(family)));
  // [f][st][e][k][a][pf]  k (f a pf)
  Term core = Term::app(Term::var(2), Term::app(Term::app(Term::var(5), Term::var(1)),
                                                Term::var(0)));
  Term inner = Term::lam(shift(domain, 0, 4), Term::lam(shift(family, 1, 4), core));
  Term body = Term::app(Term::var(1),
                        Term::lam(rneg(shift(theta, 0, 3)),
                                  Term::app(Term::var(1), inner)));
  return Term::lam(hyp, Term::lam(shift(rarrow(rnn(theta), theta), 0, 1),
                                  Term::lam(shift(exw, 0, 2), body)));
}

Term emitDnElim(const GlobalEnv& env, const Term& phi, const Term& theta) {
  (void)env;
  // [f][st][n][k][x]  k (f x)
  Term core = Term::app(Term::var(1), Term::app(Term::var(4), Term::var(0)));
  Term body = Term::app(
      Term::var(1),
      Term::lam(rneg(shift(theta, 0, 3)),
                Term::app(Term::var(1), Term::lam(shift(phi, 0, 4), core))));
  return Term::lam(rarrow(phi, theta),
                   Term::lam(shift(rarrow(rnn(theta), theta), 0, 1),
                             Term::lam(shift(rnn(phi), 0, 2), body)));
}

Term emitClassicalRule(const GlobalEnv& env, RuleKind kind, const std::vector<Term>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      fail("E-MISMATCH", "classical rule expects " + std::to_string(n) + " arguments");
  };
  switch (kind) {
    case RuleKind::Lem: need(1); return emitLem(env, args[0]);
    case RuleKind::WeakenOr: need(2); return emitWeakenOr(env, args[0], args[1]);
    case RuleKind::WeakenEx: need(2); return emitWeakenEx(env, args[0], args[1]);
    case RuleKind::OrElim: need(3); return emitOrElim(env, args[0], args[1], args[2]);
    case RuleKind::ExElim: need(3); return emitExElim(env, args[0], args[1], args[2]);
    case RuleKind::DnElim: need(2); return emitDnElim(env, args[0], args[1]);
  }
  fail("E-MISMATCH", "unknown classical rule kind");
}

namespace {

Term dnUnit(const Term& phi) {
  // [a][k]  k a
  return Term::lam(phi, Term::lam(rneg(shift(phi, 0, 1)),
                                  Term::app(Term::var(0), Term::var(1))));
}

Term dnMap(const Term& phi, const Term& psi) {
  // [f][x][k]  x (fun a => k (f a))
  Term inner = Term::lam(shift(phi, 0, 3),
                         Term::app(Term::var(1), Term::app(Term::var(3), Term::var(0))));
  return Term::lam(rarrow(phi, psi),
                   Term::lam(shift(rnn(phi), 0, 1),
                             Term::lam(rneg(shift(psi, 0, 2)),
                                       Term::app(Term::var(1), inner))));
}

Term dnBind(const Term& phi, const Term& psi) {
  // [f][x][k]  x (fun a => f a k)
  Term inner = Term::lam(shift(phi, 0, 3),
                         Term::app(Term::app(Term::var(3), Term::var(0)), Term::var(1)));
  return Term::lam(rarrow(phi, rnn(psi)),
                   Term::lam(shift(rnn(phi), 0, 1),
                             Term::lam(rneg(shift(psi, 0, 2)),
                                       Term::app(Term::var(1), inner))));
}

Term dnAp(const Term& phi, const Term& psi) {
  // [F][x][k]  F (fun f => x (fun a => k (f a)))
  Term core = Term::lam(shift(phi, 0, 4),
                        Term::app(Term::var(2), Term::app(Term::var(1), Term::var(0))));
  Term inner = Term::lam(shift(rarrow(phi, psi), 0, 3), Term::app(Term::var(2), core));
  return Term::lam(rnn(rarrow(phi, psi)),
                   Term::lam(shift(rnn(phi), 0, 1),
                             Term::lam(rneg(shift(psi, 0, 2)),
                                       Term::app(Term::var(2), inner))));
}

Term dnMap2(const Term& phi, const Term& psi, const Term& theta) {
  // [f][x][y][k]  x (fun a => y (fun b => k (f a b)))
  Term core = Term::app(Term::var(2), Term::app(Term::app(Term::var(5), Term::var(1)),
                                                Term::var(0)));
  Term innerB = Term::lam(shift(psi, 0, 5), core);
  Term innerA = Term::lam(shift(phi, 0, 4), Term::app(Term::var(2), innerB));
  return Term::lam(
      rarrow(phi, rarrow(psi, theta)),
      Term::lam(shift(rnn(phi), 0, 1),
                Term::lam(shift(rnn(psi), 0, 2),
                          Term::lam(rneg(shift(theta, 0, 3)),
                                    Term::app(Term::var(2), innerA)))));
}

}  // namespace

Term dnCombinator(const GlobalEnv& env, DnKind kind, const std::vector<Term>& args) {
  (void)env;
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      fail("E-MISMATCH", "dn combinator expects " + std::to_string(n) + " arguments");
  };
  switch (kind) {
    case DnKind::Unit: need(1); return dnUnit(args[0]);
    case DnKind::Map: need(2); return dnMap(args[0], args[1]);
    case DnKind::Join: need(1); return certJoin(args[0]);
    case DnKind::Bind: need(2); return dnBind(args[0], args[1]);
    case DnKind::Ap: need(2); return dnAp(args[0], args[1]);
    case DnKind::Map2: need(3); return dnMap2(args[0], args[1], args[2]);
  }
  fail("E-MISMATCH", "unknown dn combinator kind");
}

Term dnCombinatorType(const GlobalEnv& env, DnKind kind, const std::vector<Term>& args) {
  auto dn = [&](const Term& t) { return dnE(env, t); };
  switch (kind) {
    case DnKind::Unit:
      return rarrow(args[0], dn(args[0]));
    case DnKind::Map:
      return rarrow(rarrow(args[0], args[1]), rarrow(dn(args[0]), dn(args[1])));
    case DnKind::Join:
      return rarrow(dn(dn(args[0])), dn(args[0]));
    case DnKind::Bind:
      return rarrow(rarrow(args[0], dn(args[1])), rarrow(dn(args[0]), dn(args[1])));
    case DnKind::Ap:
      return rarrow(dn(rarrow(args[0], args[1])), rarrow(dn(args[0]), dn(args[1])));
    case DnKind::Map2:
      return rarrow(rarrow(args[0], rarrow(args[1], args[2])),
                    rarrow(dn(args[0]), rarrow(dn(args[1]), dn(args[2]))));
  }
  fail("E-MISMATCH", "unknown dn combinator kind");
}

}  // namespace clari
