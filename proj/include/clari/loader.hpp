#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "clari/classical.hpp"
#include "clari/env.hpp"
#include "clari/parser.hpp"

namespace clari {

struct LoadOptions {
  std::uint64_t fuel = kDefaultFuel;
  bool allowStatements = true;  // tier-1 stdlib files reject `statement`
};

struct LoadReport {
  int defs = 0;
  int theorems = 0;
  int statements = 0;
  std::vector<std::string> outputs;  // one line per #check/#normalize/#stable
};

// Session state threaded through declaration processing.
struct Session {
  GlobalEnv env;
  HintDb hints;
};

// Processes declarations in order; the first failing declaration aborts with
// a TypeError whose location names it. `importStack` holds canonical paths
// of files currently being loaded (cycle detection); `loaded` the files
// already processed (each file loads once).
void runDecls(Session& s, const std::vector<Decl>& decls, const LoadOptions& opts,
              LoadReport& report, const std::string& currentFile,
              std::vector<std::string>& importStack, std::set<std::string>& loaded);

// Parses and runs one script file, following imports.
void runFile(Session& s, const std::string& path, const LoadOptions& opts,
             LoadReport& report, std::vector<std::string>& importStack,
             std::set<std::string>& loaded);

// Checks the shipped corpus into a fresh-or-given session. Tier 1 loads
// logic.core, dn.monad, setoid.core; tier 2 adds weakvalue and nat.gcd.
LoadReport loadStdlib(Session& s, int tier, const std::string& dir,
                      std::uint64_t fuel = kDefaultFuel);

std::vector<std::string> stdlibFiles(int tier);

// Resolves the stdlib directory: CLARI_STDLIB env var, else the build-time
// default.
std::string stdlibDir();

}  // namespace clari
