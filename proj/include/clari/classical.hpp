#pragma once

#include <string>
#include <variant>
#include <vector>

#include "clari/env.hpp"
#include "clari/eval.hpp"
#include "clari/term.hpp"

namespace clari {

// A target formula together with a kernel-checkable witness of its
// double-negation stability: check(witness, neg (neg target) -> target).
struct StabilityCertificate {
  Term target;
  Term witness;
};

enum class PathStep { Codomain, Left, Right };

std::string pathToString(const std::vector<PathStep>& path);

// Verdict, not a failure: the offending subformula has a Sum/Sigma head (or
// is otherwise outside the stable fragment) and no hint applies.
struct NotStableInfo {
  std::vector<PathStep> path;
  Term offending;
};

using StabilityResult = std::variant<StabilityCertificate, NotStableInfo>;

// Named stability / decidability facts, resolved against the environment.
// stableHints entries have shape  Pi ..., neg (neg (h args)) -> h args;
// decidableHints entries have shape  Pi ..., Sum(h args, neg (h args)).
struct HintDb {
  std::vector<std::string> stableHints;
  std::vector<std::string> decidableHints;
};

// Validates the required type shape before appending. E-MISMATCH otherwise.
HintDb registerHint(const GlobalEnv& env, const HintDb& db, const std::string& name,
                    const std::string& kind, Fuel& fuel);

// Synthesizes a stability witness by structural recursion on the weak head
// normal form of `formula` (which must check at Type0), consulting the hint
// database before refusing on constructive heads.
StabilityResult proveStable(const GlobalEnv& env, const HintDb& db, const Term& formula,
                            Fuel& fuel);

// Derived classical rules as closed proof terms. `family` arguments bind one
// variable of the given domain.
Term emitLem(const GlobalEnv& env, const Term& phi);
Term emitWeakenOr(const GlobalEnv& env, const Term& phi, const Term& psi);
Term emitWeakenEx(const GlobalEnv& env, const Term& domain, const Term& family);
Term emitOrElim(const GlobalEnv& env, const Term& phi, const Term& psi, const Term& theta);
Term emitExElim(const GlobalEnv& env, const Term& domain, const Term& family,
                const Term& theta);
Term emitDnElim(const GlobalEnv& env, const Term& phi, const Term& theta);

enum class RuleKind { Lem, WeakenOr, WeakenEx, OrElim, ExElim, DnElim };
Term emitClassicalRule(const GlobalEnv& env, RuleKind kind, const std::vector<Term>& args);

// Double-negation monad combinators at the given formulas.
enum class DnKind { Unit, Map, Join, Bind, Ap, Map2 };
Term dnCombinator(const GlobalEnv& env, DnKind kind, const std::vector<Term>& args);

// The schema type each combinator inhabits (for checking and display).
Term dnCombinatorType(const GlobalEnv& env, DnKind kind, const std::vector<Term>& args);

// neg (neg t) -> t, spelled with the stdlib's neg constant when defined.
Term stabilityType(const GlobalEnv& env, const Term& t);

}  // namespace clari
