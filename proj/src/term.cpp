#include "clari/term.hpp"

#include <utility>

namespace clari {

Term Term::make(Tag t, unsigned num, std::string name, std::vector<Term> kids) {
  auto n = std::make_shared<Node>();
  n->tag = t;
  n->num = num;
  n->name = std::move(name);
  n->kids = std::move(kids);
  return Term(std::move(n));
}

Term Term::var(unsigned index) { return make(Tag::Var, index, {}, {}); }
Term Term::univ(unsigned level) { return make(Tag::Univ, level, {}, {}); }
Term Term::pi(Term a, Term b) { return make(Tag::Pi, 0, {}, {std::move(a), std::move(b)}); }
Term Term::lam(Term a, Term b) { return make(Tag::Lam, 0, {}, {std::move(a), std::move(b)}); }
Term Term::app(Term f, Term x) { return make(Tag::App, 0, {}, {std::move(f), std::move(x)}); }
Term Term::sigma(Term a, Term b) { return make(Tag::Sigma, 0, {}, {std::move(a), std::move(b)}); }
Term Term::pairOf(Term a, Term b, Term ty) {
  return make(Tag::Pair, 0, {}, {std::move(a), std::move(b), std::move(ty)});
}
Term Term::sigElim(Term m, Term s, Term br) {
  return make(Tag::SigElim, 0, {}, {std::move(m), std::move(s), std::move(br)});
}
Term Term::sum(Term a, Term b) { return make(Tag::Sum, 0, {}, {std::move(a), std::move(b)}); }
Term Term::inl(Term a, Term o) { return make(Tag::Inl, 0, {}, {std::move(a), std::move(o)}); }
Term Term::inr(Term a, Term o) { return make(Tag::Inr, 0, {}, {std::move(a), std::move(o)}); }
Term Term::sumElim(Term m, Term s, Term l, Term r) {
  return make(Tag::SumElim, 0, {}, {std::move(m), std::move(s), std::move(l), std::move(r)});
}
Term Term::unitTy() { return make(Tag::UnitTy, 0, {}, {}); }
Term Term::unitVal() { return make(Tag::UnitVal, 0, {}, {}); }
Term Term::voidTy() { return make(Tag::VoidTy, 0, {}, {}); }
Term Term::voidElim(Term m, Term s) {
  return make(Tag::VoidElim, 0, {}, {std::move(m), std::move(s)});
}
Term Term::boolTy() { return make(Tag::BoolTy, 0, {}, {}); }
Term Term::tt() { return make(Tag::TT, 0, {}, {}); }
Term Term::ff() { return make(Tag::FF, 0, {}, {}); }
Term Term::boolElim(Term m, Term s, Term x, Term y) {
  return make(Tag::BoolElim, 0, {}, {std::move(m), std::move(s), std::move(x), std::move(y)});
}
Term Term::natTy() { return make(Tag::NatTy, 0, {}, {}); }
Term Term::zero() { return make(Tag::Zero, 0, {}, {}); }
Term Term::succ(Term p) { return make(Tag::Succ, 0, {}, {std::move(p)}); }
Term Term::natElim(Term m, Term s, Term z, Term f) {
  return make(Tag::NatElim, 0, {}, {std::move(m), std::move(s), std::move(z), std::move(f)});
}
Term Term::constant(std::string name) { return make(Tag::Const, 0, std::move(name), {}); }

Term Term::withChildren(std::vector<Term> kids) const {
  const Node& n = node();
  return make(n.tag, n.num, n.name, std::move(kids));
}

unsigned childBinders(Tag t, std::size_t i) {
  switch (t) {
    case Tag::Pi:
    case Tag::Lam:
    case Tag::Sigma:
      return i == 1 ? 1 : 0;
    case Tag::SigElim:
      return i == 0 ? 1 : (i == 2 ? 2 : 0);
    case Tag::SumElim:
      return i == 1 ? 0 : 1;  // motive, left, right each bind 1
    case Tag::VoidElim:
    case Tag::BoolElim:
      return i == 0 ? 1 : 0;
    case Tag::NatElim:
      return i == 0 ? 1 : (i == 3 ? 2 : 0);
    default:
      return 0;
  }
}

namespace {

// Rebuild `t` with every Var replaced through `f(index, depth)`; shares
// unchanged subtrees.
template <typename F>
Term transformVars(const Term& t, unsigned depth, const F& f) {
  if (t.tag() == Tag::Var) return f(t.index(), depth);
  if (t.arity() == 0) return t;
  std::vector<Term> kids;
  kids.reserve(t.arity());
  bool changed = false;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    Term k = transformVars(t.child(i), depth + childBinders(t.tag(), i), f);
    if (!k.sameNode(t.child(i))) changed = true;
    kids.push_back(std::move(k));
  }
  if (!changed) return t;
  return t.withChildren(std::move(kids));
}

}  // namespace

Term shift(const Term& t, unsigned cutoff, long long amount) {
  if (amount == 0) return t;
  return transformVars(t, 0, [&](unsigned idx, unsigned depth) {
    unsigned bar = cutoff + depth;
    if (idx < bar) return Term::var(idx);
    long long moved = static_cast<long long>(idx) + amount;
    if (moved < static_cast<long long>(bar)) throw NegativeIndexError();
    return Term::var(static_cast<unsigned>(moved));
  });
}

Term subst(const Term& t, unsigned target, const Term& replacement) {
  return transformVars(t, 0, [&](unsigned idx, unsigned depth) {
    unsigned bar = target + depth;
    if (idx == bar) return shift(replacement, 0, static_cast<long long>(depth));
    if (idx > bar) return Term::var(idx - 1);
    return Term::var(idx);
  });
}

bool alphaEq(const Term& a, const Term& b) {
  if (a.sameNode(b)) return true;
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::Var:
      return a.index() == b.index();
    case Tag::Univ:
      return a.level() == b.level();
    case Tag::Const:
      return a.name() == b.name();
    default:
      break;
  }
  if (a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!alphaEq(a.child(i), b.child(i))) return false;
  return true;
}

namespace {

bool scopeValidAt(const Term& t, std::size_t bound) {
  switch (t.tag()) {
    case Tag::Var:
      return t.index() < bound;
    case Tag::Univ:
      return t.level() <= 2;
    default:
      for (std::size_t i = 0; i < t.arity(); ++i)
        if (!scopeValidAt(t.child(i), bound + childBinders(t.tag(), i))) return false;
      return true;
  }
}

}  // namespace

bool scopeValid(const Term& t, std::size_t contextLen) { return scopeValidAt(t, contextLen); }

bool hasFreeVar(const Term& t, unsigned index) {
  if (t.tag() == Tag::Var) return t.index() == index;
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (hasFreeVar(t.child(i), index + childBinders(t.tag(), i))) return true;
  return false;
}

}  // namespace clari
