#pragma once

#include <string>
#include <vector>

#include "clari/term.hpp"

namespace clari {

// Renders a term in the surface syntax the parser accepts; binder names are
// generated (x0, x1, ...) avoiding any constant names the term mentions.
// parse(printTerm(t)) is alpha-equal to t.
std::string printTerm(const Term& t);
std::string printTerm(const Term& t, const std::vector<std::string>& outerNames);

}  // namespace clari
