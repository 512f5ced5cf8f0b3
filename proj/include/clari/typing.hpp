#pragma once

#include "clari/env.hpp"
#include "clari/eval.hpp"
#include "clari/term.hpp"

namespace clari {

// Bidirectional checking with three fixed universes Univ 0..2, cumulative in
// the conversion rule. Pi/Sigma/Sum land at the max of their component
// levels; nothing quantifies over a Univ-2-typed domain (E-UNIV).

// Returns the type of `t`, unique up to convertibility. Throws TypeError.
Term infer(const GlobalEnv& env, const Context& ctx, const Term& t, Fuel& fuel);

// Succeeds iff infer(t) is convertible to (or a universe below) `type`.
void check(const GlobalEnv& env, const Context& ctx, const Term& t, const Term& type,
           Fuel& fuel);

// Validates statedType : Univ i and body : statedType, then appends.
GlobalEnv defineGlobal(const GlobalEnv& env, const std::string& name, const Term& statedType,
                       const Term& body, Fuel& fuel, bool isTheorem = false);

// Statement-only entry: type checked, body absent (never delta-reduces).
GlobalEnv defineStatement(const GlobalEnv& env, const std::string& name,
                          const Term& statedType, Fuel& fuel);

}  // namespace clari
