#pragma once

#include <exception>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "clari/term.hpp"

namespace clari {

struct SourceSpan {
  std::string file;
  int startLine = 1, startCol = 1;
  int endLine = 1, endCol = 1;
};

// Structured error report. `code` is one of the fixed set:
// E-SCOPE, E-MISMATCH, E-NOTFN, E-UNIV, E-FUEL, E-PARSE, E-NOTSTABLE, E-DUPNAME.
struct Diagnostic {
  std::string code;
  std::string message;
  std::optional<Term> expected;
  std::optional<Term> actual;
  std::optional<SourceSpan> location;
};

class TypeError : public std::exception {
public:
  explicit TypeError(Diagnostic d) : d_(std::move(d)) {
    what_ = d_.code + ": " + d_.message;
  }
  const Diagnostic& diag() const { return d_; }
  Diagnostic& diag() { return d_; }
  const char* what() const noexcept override { return what_.c_str(); }

private:
  Diagnostic d_;
  std::string what_;
};

[[noreturn]] inline void fail(std::string code, std::string message,
                              std::optional<Term> expected = {},
                              std::optional<Term> actual = {}) {
  throw TypeError(Diagnostic{std::move(code), std::move(message), std::move(expected),
                             std::move(actual), {}});
}

// Named global definition. A missing body marks a statement-only entry:
// its type is trusted for lookups but the constant never delta-reduces.
struct GlobalDef {
  std::string name;
  Term type;                  // closed
  std::optional<Term> body;   // closed when present
  bool isTheorem = false;     // surface-level `theorem` vs `def`
};

class GlobalEnv {
public:
  const GlobalDef* find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return nullptr;
    return &defs_[it->second];
  }
  std::size_t size() const { return defs_.size(); }
  const GlobalDef& at(std::size_t i) const { return defs_[i]; }

  // Appends without checking; defineGlobal/defineStatement are the
  // validating entry points.
  void appendUnchecked(GlobalDef d) {
    index_[d.name] = defs_.size();
    defs_.push_back(std::move(d));
  }

private:
  std::vector<GlobalDef> defs_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Telescopic local context; entry k is scope-valid in entries 0..k-1.
// The innermost entry is last.
class Context {
public:
  std::size_t size() const { return types_.size(); }

  Context extended(Term ty) const {
    Context c = *this;
    c.types_.push_back(std::move(ty));
    return c;
  }

  // Type of Var i, adjusted into the full context.
  Term varType(unsigned i) const {
    const Term& raw = types_[types_.size() - 1 - i];
    return shift(raw, 0, static_cast<long long>(i) + 1);
  }

  const Term& rawEntry(std::size_t fromInnermost) const {
    return types_[types_.size() - 1 - fromInnermost];
  }

private:
  std::vector<Term> types_;
};

}  // namespace clari
