#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace clari {

// One syntax tree for both programs and propositions. Binding is de Bruijn:
// Var 0 refers to the innermost enclosing binder.
enum class Tag : std::uint8_t {
  Var,
  Univ,
  Pi,
  Lam,
  App,
  Sigma,
  Pair,
  SigElim,
  Sum,
  Inl,
  Inr,
  SumElim,
  UnitTy,
  UnitVal,
  VoidTy,
  VoidElim,
  BoolTy,
  TT,
  FF,
  BoolElim,
  NatTy,
  Zero,
  Succ,
  NatElim,
  Const,
};

struct NegativeIndexError : std::logic_error {
  NegativeIndexError()
      : std::logic_error("shift would move a de Bruijn index below its cutoff") {}
};

class Term {
public:
  Term() = default;  // null handle; every accessor asserts a real node

  static Term var(unsigned index);
  static Term univ(unsigned level);
  static Term pi(Term domain, Term codomain);      // codomain binds 1
  static Term lam(Term annotation, Term body);     // body binds 1
  static Term app(Term fn, Term arg);
  static Term sigma(Term first, Term second);      // second binds 1
  static Term pairOf(Term fst, Term snd, Term asType);
  static Term sigElim(Term motive, Term scrutinee, Term branch);  // motive binds 1, branch binds 2
  static Term sum(Term left, Term right);
  static Term inl(Term payload, Term otherType);
  static Term inr(Term payload, Term otherType);
  static Term sumElim(Term motive, Term scrutinee, Term leftBranch, Term rightBranch);
  static Term unitTy();
  static Term unitVal();
  static Term voidTy();
  static Term voidElim(Term motive, Term scrutinee);
  static Term boolTy();
  static Term tt();
  static Term ff();
  static Term boolElim(Term motive, Term scrutinee, Term ifTrue, Term ifFalse);
  static Term natTy();
  static Term zero();
  static Term succ(Term pred);
  static Term natElim(Term motive, Term scrutinee, Term zeroCase, Term succCase);  // succCase binds 2
  static Term constant(std::string name);

  bool isNull() const { return !n_; }
  Tag tag() const { return node().tag; }
  unsigned index() const { return node().num; }   // Var
  unsigned level() const { return node().num; }   // Univ
  const std::string& name() const { return node().name; }  // Const
  std::size_t arity() const { return node().kids.size(); }
  const Term& child(std::size_t i) const { return node().kids[i]; }
  bool sameNode(const Term& o) const { return n_ == o.n_; }

  // Structural copy with replaced children (same tag/num/name).
  Term withChildren(std::vector<Term> kids) const;

private:
  struct Node {
    Tag tag;
    unsigned num = 0;
    std::string name;
    std::vector<Term> kids;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Term make(Tag t, unsigned num, std::string name, std::vector<Term> kids);
  const Node& node() const {
    if (!n_) throw std::logic_error("null Term");
    return *n_;
  }
  std::shared_ptr<const Node> n_;
};

// Number of binders child `i` of a node with tag `t` lives under.
unsigned childBinders(Tag t, std::size_t i);

// Displace free variables with index >= cutoff by `amount`. Bound variables
// are untouched. Throws NegativeIndexError if an affected index would land
// below its cutoff.
Term shift(const Term& t, unsigned cutoff, long long amount);

// Capture-avoiding substitution: replaces Var `target` by `replacement` and
// renumbers the remaining free variables so the binder at `target` is
// consumed. `replacement` is expressed in the context outside that binder.
Term subst(const Term& t, unsigned target, const Term& replacement);

// Structural equality; de Bruijn representation makes this alpha-equivalence.
// Type annotations (Pair.asType, Inl/Inr.otherType, Lam domains) participate.
bool alphaEq(const Term& a, const Term& b);

// Every Var index lies below contextLen plus the binders enclosing it, and
// every Univ level is in {0,1,2}.
bool scopeValid(const Term& t, std::size_t contextLen);

bool hasFreeVar(const Term& t, unsigned index);

}  // namespace clari
