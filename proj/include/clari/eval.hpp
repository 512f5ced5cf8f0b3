#pragma once

#include <cstdint>
#include <optional>

#include "clari/env.hpp"
#include "clari/term.hpp"

namespace clari {

inline constexpr std::uint64_t kDefaultFuel = 1000000;

// Step budget. Each contracted redex (beta, iota, delta) burns one unit;
// exhaustion raises E-FUEL rather than truncating silently.
struct Fuel {
  std::uint64_t remaining = kDefaultFuel;
};

void burnFuel(Fuel& fuel, const Term& site);

// Contracts the leftmost-outermost redex; none when `t` is a normal form.
// Redexes: beta, BoolElim on TT/FF, NatElim on Zero/Succ, SumElim on Inl/Inr,
// SigElim on Pair, and delta (Const with a body in `env`).
std::optional<Term> step(const GlobalEnv& env, const Term& t);

// Reduces until the head is no longer a redex; subterms are left alone.
Term whnf(const GlobalEnv& env, Term t, Fuel& fuel);

// Full normal form, including under binders. Same contractions as iterating
// step (confluence makes the result strategy-independent); implemented
// head-first to avoid rescanning from the root.
Term normalize(const GlobalEnv& env, const Term& t, Fuel& fuel);

// alphaEq on normal forms.
bool convertible(const GlobalEnv& env, const Term& t, const Term& u, Fuel& fuel);

// Conversion with universe cumulativity: Univ i <= Univ j, covariantly in Pi
// codomains and Sigma/Sum components; Pi domains stay invariant.
bool leqType(const GlobalEnv& env, const Term& a, const Term& b, Fuel& fuel);

}  // namespace clari
