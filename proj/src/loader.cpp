#include "clari/loader.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "clari/printer.hpp"
#include "clari/typing.hpp"

#ifndef CLARI_STDLIB_DEFAULT
#define CLARI_STDLIB_DEFAULT "stdlib"
#endif

namespace clari {

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("E-PARSE", "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void locate(TypeError& e, const Decl& d) {
  if (!e.diag().location) e.diag().location = d.span;
}

}  // namespace

void runDecls(Session& s, const std::vector<Decl>& decls, const LoadOptions& opts,
              LoadReport& report, const std::string& currentFile,
              std::vector<std::string>& importStack, std::set<std::string>& loaded) {
  for (const Decl& d : decls) {
    try {
      Fuel fuel{opts.fuel};
      switch (d.kind) {
        case DeclKind::Def:
        case DeclKind::Theorem: {
          bool thm = d.kind == DeclKind::Theorem;
          s.env = defineGlobal(s.env, d.name, *d.type, *d.term, fuel, thm);
          (thm ? report.theorems : report.defs)++;
          break;
        }
        case DeclKind::StatementOnly: {
          if (!opts.allowStatements)
            fail("E-PARSE", "statement declarations are not allowed in this file");
          s.env = defineStatement(s.env, d.name, *d.type, fuel);
          report.statements++;
          break;
        }
        case DeclKind::CheckCmd: {
          Context ctx;
          Term ty = infer(s.env, ctx, *d.term, fuel);
          report.outputs.push_back(printTerm(*d.term) + " : " + printTerm(ty));
          break;
        }
        case DeclKind::NormalizeCmd: {
          Term n = normalize(s.env, *d.term, fuel);
          report.outputs.push_back(printTerm(n));
          break;
        }
        case DeclKind::StableCmd: {
          StabilityResult r = proveStable(s.env, s.hints, *d.term, fuel);
          if (auto* cert = std::get_if<StabilityCertificate>(&r)) {
            report.outputs.push_back("stable: " + printTerm(cert->target) +
                                     "  witness " + printTerm(cert->witness));
          } else {
            auto& ns = std::get<NotStableInfo>(r);
            report.outputs.push_back("not stable: " + printTerm(*d.term) + "  at " +
                                     pathToString(ns.path) + ": " +
                                     printTerm(ns.offending));
          }
          break;
        }
        case DeclKind::HintCmd: {
          s.hints = registerHint(s.env, s.hints, d.name, d.hintKind, fuel);
          break;
        }
        case DeclKind::ImportCmd: {
          namespace fs = std::filesystem;
          fs::path base = fs::path(currentFile).parent_path();
          fs::path target = base / d.path;
          std::string canon = fs::weakly_canonical(target).string();
          for (const auto& p : importStack)
            if (p == canon) fail("E-PARSE", "import cycle through '" + d.path + "'");
          if (loaded.count(canon)) break;
          runFile(s, canon, opts, report, importStack, loaded);
          break;
        }
      }
    } catch (TypeError& e) {
      locate(e, d);
      throw;
    }
  }
}

void runFile(Session& s, const std::string& path, const LoadOptions& opts,
             LoadReport& report, std::vector<std::string>& importStack,
             std::set<std::string>& loaded) {
  namespace fs = std::filesystem;
  std::string canon = fs::weakly_canonical(fs::path(path)).string();
  if (loaded.count(canon)) return;
  std::string text = readFile(path);
  std::vector<Decl> decls = parseScript(text, path);
  importStack.push_back(canon);
  runDecls(s, decls, opts, report, path, importStack, loaded);
  importStack.pop_back();
  loaded.insert(canon);
}

std::vector<std::string> stdlibFiles(int tier) {
  std::vector<std::string> files = {"logic.core.ct", "dn.monad.ct", "setoid.core.ct"};
  if (tier >= 2) {
    files.push_back("weakvalue.ct");
    files.push_back("nat.gcd.ct");
  }
  return files;
}

std::string stdlibDir() {
  if (const char* e = std::getenv("CLARI_STDLIB")) return e;
  return CLARI_STDLIB_DEFAULT;
}

LoadReport loadStdlib(Session& s, int tier, const std::string& dir, std::uint64_t fuel) {
  LoadReport report;
  LoadOptions opts;
  opts.fuel = fuel;
  std::vector<std::string> importStack;
  std::set<std::string> loaded;
  std::vector<std::string> tier1 = stdlibFiles(1);
  for (const std::string& f : stdlibFiles(tier)) {
    // the tier-1 corpus carries no axioms; statement-only lives in tier 2
    opts.allowStatements =
        std::find(tier1.begin(), tier1.end(), f) == tier1.end();
    runFile(s, dir + "/" + f, opts, report, importStack, loaded);
  }
  return report;
}

}  // namespace clari
