#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clari/env.hpp"
#include "clari/term.hpp"

namespace clari {

// Finite Heyting algebra given by tables. Elements are 0..size-1 with
// bottom = 0 and top = size-1; imp is the residual of meet.
struct HeytingAlgebra {
  unsigned size = 0;
  std::vector<std::uint8_t> leq;   // size*size, row-major
  std::vector<std::uint8_t> meet;  // element tables
  std::vector<std::uint8_t> join;
  std::vector<std::uint8_t> imp;
  unsigned bottom = 0;
  unsigned top = 0;

  bool le(unsigned a, unsigned b) const { return leq[a * size + b] != 0; }
  unsigned meetOf(unsigned a, unsigned b) const { return meet[a * size + b]; }
  unsigned joinOf(unsigned a, unsigned b) const { return join[a * size + b]; }
  unsigned impOf(unsigned a, unsigned b) const { return imp[a * size + b]; }
};

struct LatticeViolation {
  std::string law;                   // name of the failing law
  std::vector<unsigned> witnesses;   // elements witnessing the failure
};

// Checks partial order, glb/lub tables, extremes, residuation and
// distributivity; reports the first violation found.
std::optional<LatticeViolation> validateAlgebra(const HeytingAlgebra& h);

struct SizeLimitError : std::invalid_argument {
  SizeLimitError() : std::invalid_argument("algebra enumeration is bounded at size 6") {}
};

struct MissingAtomError : std::logic_error {
  explicit MissingAtomError(const std::string& atom)
      : std::logic_error("valuation does not cover atom '" + atom + "'") {}
};

enum class PTag { Atom, Top, Bot, And, Imp, SumP };

// Propositional fragment formulas. Not and weak-or are parse-time sugar:
// not a = Imp(a, Bot), a \/ b = not (not a /\ not b).
class PropFormula {
public:
  static PropFormula atom(std::string name);
  static PropFormula top();
  static PropFormula bot();
  static PropFormula conj(PropFormula l, PropFormula r);
  static PropFormula impl(PropFormula l, PropFormula r);
  static PropFormula sump(PropFormula l, PropFormula r);
  static PropFormula negf(PropFormula a) { return impl(std::move(a), bot()); }
  static PropFormula orw(PropFormula l, PropFormula r) {
    return negf(conj(negf(std::move(l)), negf(std::move(r))));
  }

  PTag tag() const { return n_->tag; }
  const std::string& name() const { return n_->name; }
  const PropFormula& left() const { return n_->kids[0]; }
  const PropFormula& right() const { return n_->kids[1]; }

private:
  struct Node {
    PTag tag;
    std::string name;
    std::vector<PropFormula> kids;
  };
  explicit PropFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

using Valuation = std::map<std::string, unsigned>;

unsigned evalFormula(const HeytingAlgebra& h, const Valuation& v, const PropFormula& f);

// All labeled partial orders on {0..n-1} with 0 bottom and n-1 top that form
// distributive lattices, for n = 1..maxSize, imp derived by residuation.
// Emission order is fixed: by size, then lexicographically on the leq table.
std::vector<HeytingAlgebra> enumerateAlgebras(unsigned maxSize);

struct Countermodel {
  HeytingAlgebra algebra;
  Valuation valuation;
};

// First (algebra, valuation) in the fixed enumeration order with
// eval != top; none when every algebra up to maxSize validates the formula.
std::optional<Countermodel> findCountermodel(const PropFormula& f, unsigned maxSize);

std::vector<std::string> atomsOf(const PropFormula& f);

// Grammar: atoms, top, bot, not/nn prefixes, /\ + \/ ->, parentheses.
// \/ is the weak disjunction; + is the constructive one (lattice join).
PropFormula parsePropFormula(const std::string& text);

// Propositional shadow of a checked statement: leading Pi (x : Type0)
// binders become atoms, Unit/Void/non-dependent Pi/Sigma/Sum map to
// Top/Bot/Imp/And/SumP. none when the statement leaves the fragment.
std::optional<PropFormula> propositionalShadow(const GlobalEnv& env, const Term& statement);

std::string formatAlgebra(const HeytingAlgebra& h);
std::string formatCountermodel(const Countermodel& cm);

}  // namespace clari
