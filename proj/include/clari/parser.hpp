#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clari/env.hpp"
#include "clari/term.hpp"

namespace clari {

enum class DeclKind {
  Def,
  Theorem,
  StatementOnly,
  CheckCmd,
  NormalizeCmd,
  StableCmd,
  HintCmd,
  ImportCmd,
};

struct Decl {
  DeclKind kind;
  std::string name;      // Def/Theorem/StatementOnly/HintCmd
  std::string hintKind;  // "stable" or "decidable"
  std::string path;      // ImportCmd
  std::optional<Term> type;
  std::optional<Term> term;  // body, or the command's term
  SourceSpan span;
};

// Parses a script. Surface names become de Bruijn indices; unbound
// identifiers become Const references checked later. Throws TypeError with
// code E-PARSE on syntax errors.
std::vector<Decl> parseScript(const std::string& text, const std::string& fileName);

// Parses a single closed term (the CLI's -e argument).
Term parseTermString(const std::string& text, const std::string& what = "<expr>");

}  // namespace clari
