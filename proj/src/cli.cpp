#include "clari/cli.hpp"

#include <json.hpp>

#include "clari/classical.hpp"
#include "clari/heyting.hpp"
#include "clari/loader.hpp"
#include "clari/printer.hpp"
#include "clari/typing.hpp"

namespace clari {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitParse = 2;
constexpr int kExitFuel = 3;
constexpr int kExitUsage = 4;

int exitCodeFor(const Diagnostic& d) {
  if (d.code == "E-PARSE") return kExitParse;
  if (d.code == "E-FUEL") return kExitFuel;
  return kExitCheck;
}

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string expr;
  std::uint64_t fuel = kDefaultFuel;
  unsigned maxSize = 3;
  int tier = 1;
  bool json = false;
  bool noStdlib = false;
};

const char* kUsage =
    "usage: clari <command> [options]\n"
    "\n"
    "commands:\n"
    "  check FILE...              parse and check declarations\n"
    "  normalize -e EXPR          print the normal form of a term\n"
    "  stable -e EXPR             synthesize and check a stability certificate\n"
    "  countermodel -e EXPR [--max-size N]\n"
    "                             search finite Heyting algebras for a refutation\n"
    "  stdlib [--tier 1|2]        check the shipped corpus and report counts\n"
    "\n"
    "options:\n"
    "  --fuel N     reduction step budget (default 1000000)\n"
    "  --json       machine-readable diagnostics\n"
    "  --no-stdlib  do not preload the tier-1 corpus\n";

bool parseArgs(const std::vector<std::string>& args, Options& o, std::string& errMsg) {
  std::size_t i = 0;
  if (i < args.size() && !args[i].empty() && args[i][0] != '-') {
    o.command = args[i++];
  }
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto value = [&](const char* flag) -> const std::string* {
      if (i + 1 >= args.size()) {
        errMsg = std::string(flag) + " needs a value";
        return nullptr;
      }
      return &args[++i];
    };
    if (a == "--fuel") {
      const std::string* v = value("--fuel");
      if (!v) return false;
      o.fuel = std::stoull(*v);
    } else if (a == "--max-size") {
      const std::string* v = value("--max-size");
      if (!v) return false;
      o.maxSize = static_cast<unsigned>(std::stoul(*v));
    } else if (a == "--tier") {
      const std::string* v = value("--tier");
      if (!v) return false;
      o.tier = std::stoi(*v);
      if (o.tier != 1 && o.tier != 2) {
        errMsg = "--tier must be 1 or 2";
        return false;
      }
    } else if (a == "-e") {
      const std::string* v = value("-e");
      if (!v) return false;
      o.expr = *v;
    } else if (a == "--json") {
      o.json = true;
    } else if (a == "--no-stdlib") {
      o.noStdlib = true;
    } else if (!a.empty() && a[0] == '-') {
      errMsg = "unknown option '" + a + "'";
      return false;
    } else {
      o.files.push_back(a);
    }
  }
  return true;
}

void emitDiagnostic(const Diagnostic& d, bool json, std::ostream& err) {
  err << formatDiagnostic(d, json) << "\n";
}

int cmdCheck(const Options& o, Session& s, std::ostream& out, std::ostream& err) {
  if (o.files.empty()) {
    err << "check: no input files\n";
    return kExitUsage;
  }
  LoadOptions lo;
  lo.fuel = o.fuel;
  LoadReport report;
  std::vector<std::string> importStack;
  std::set<std::string> loaded;
  for (const std::string& f : o.files) {
    try {
      runFile(s, f, lo, report, importStack, loaded);
    } catch (const TypeError& e) {
      for (const auto& line : report.outputs) out << line << "\n";
      emitDiagnostic(e.diag(), o.json, err);
      return exitCodeFor(e.diag());
    }
  }
  for (const auto& line : report.outputs) out << line << "\n";
  out << "checked " << report.defs << " definitions, " << report.theorems
      << " theorems, " << report.statements << " statement-only\n";
  return kExitOk;
}

int cmdNormalize(const Options& o, Session& s, std::ostream& out, std::ostream& err) {
  if (o.expr.empty()) {
    err << "normalize: missing -e EXPR\n";
    return kExitUsage;
  }
  Term t = parseTermString(o.expr);
  Fuel fuel{o.fuel};
  Context ctx;
  infer(s.env, ctx, t, fuel);  // scope/type errors surface before reduction
  Term n = normalize(s.env, t, fuel);
  out << printTerm(n) << "\n";
  return kExitOk;
}

int cmdStable(const Options& o, Session& s, std::ostream& out, std::ostream& err) {
  if (o.expr.empty()) {
    err << "stable: missing -e EXPR\n";
    return kExitUsage;
  }
  Term t = parseTermString(o.expr);
  Fuel fuel{o.fuel};
  StabilityResult r = proveStable(s.env, s.hints, t, fuel);
  if (auto* cert = std::get_if<StabilityCertificate>(&r)) {
    out << "stable\n";
    out << "witness: " << printTerm(cert->witness) << "\n";
    out << "type: " << printTerm(stabilityType(s.env, cert->target)) << "\n";
    return kExitOk;
  }
  const auto& ns = std::get<NotStableInfo>(r);
  Diagnostic d{"E-NOTSTABLE",
               "not stable at " + pathToString(ns.path) + ": " + printTerm(ns.offending),
               {},
               {},
               {}};
  emitDiagnostic(d, o.json, err);
  return kExitCheck;
}

int cmdCountermodel(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.expr.empty()) {
    err << "countermodel: missing -e EXPR\n";
    return kExitUsage;
  }
  PropFormula f = parsePropFormula(o.expr);
  auto cm = findCountermodel(f, o.maxSize);
  if (!cm) {
    out << "no countermodel up to size " << o.maxSize << "\n";
    return kExitOk;
  }
  out << "countermodel found\n" << formatCountermodel(*cm);
  return kExitOk;
}

int cmdStdlib(const Options& o, std::ostream& out, std::ostream& err) {
  Session s;
  LoadReport report = loadStdlib(s, o.tier, stdlibDir(), o.fuel);
  for (const auto& line : report.outputs) out << line << "\n";
  out << (report.defs + report.theorems + report.statements) << " declarations checked ("
      << report.defs << " definitions, " << report.theorems << " theorems, "
      << report.statements << " statement-only), 0 failures\n";
  (void)err;
  return kExitOk;
}

}  // namespace

std::string formatDiagnostic(const Diagnostic& d, bool json) {
  if (json) {
    nlohmann::json j;
    j["code"] = d.code;
    j["message"] = d.message;
    if (d.location) {
      j["file"] = d.location->file;
      j["startLine"] = d.location->startLine;
      j["startCol"] = d.location->startCol;
      j["endLine"] = d.location->endLine;
      j["endCol"] = d.location->endCol;
    }
    if (d.expected) j["expected"] = printTerm(*d.expected);
    if (d.actual) j["actual"] = printTerm(*d.actual);
    return j.dump();
  }
  std::string loc = "<input>";
  if (d.location) {
    loc = d.location->file + ":" + std::to_string(d.location->startLine) + ":" +
          std::to_string(d.location->startCol);
  }
  std::string s = loc + ": error[" + d.code + "]: " + d.message;
  if (d.expected) s += "\n  expected: " + printTerm(*d.expected);
  if (d.actual) s += "\n  actual:   " + printTerm(*d.actual);
  return s;
}

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string errMsg;
  if (!parseArgs(args, o, errMsg)) {
    err << "clari: " << errMsg << "\n" << kUsage;
    return kExitUsage;
  }
  if (o.command.empty()) {
    err << kUsage;
    return kExitUsage;
  }
  try {
    if (o.command == "countermodel") return cmdCountermodel(o, out, err);
    Session s;
    if (!o.noStdlib && o.command != "stdlib") {
      loadStdlib(s, 1, stdlibDir(), o.fuel);
    }
    if (o.command == "check") return cmdCheck(o, s, out, err);
    if (o.command == "normalize") return cmdNormalize(o, s, out, err);
    if (o.command == "stable") return cmdStable(o, s, out, err);
    if (o.command == "stdlib") return cmdStdlib(o, out, err);
    err << "clari: unknown command '" << o.command << "'\n" << kUsage;
    return kExitUsage;
  } catch (const TypeError& e) {
    emitDiagnostic(e.diag(), o.json, err);
    return exitCodeFor(e.diag());
  } catch (const SizeLimitError& e) {
    err << "clari: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "clari: " << e.what() << "\n";
    return kExitCheck;
  }
}

}  // namespace clari
