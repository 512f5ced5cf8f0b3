#include "clari/printer.hpp"

#include <set>
#include <sstream>

namespace clari {

namespace {

void collectConstNames(const Term& t, std::set<std::string>& out) {
  if (t.tag() == Tag::Const) out.insert(t.name());
  for (std::size_t i = 0; i < t.arity(); ++i) collectConstNames(t.child(i), out);
}

// Precedence: 0 arrow/binders, 1 application, 2 atoms.
struct Printer {
  std::set<std::string> avoid;
  std::vector<std::string> names;  // outermost first
  unsigned counter = 0;

  std::string freshName() {
    for (;;) {
      std::string n = "x" + std::to_string(counter++);
      if (!avoid.count(n)) return n;
    }
  }

  std::string varName(unsigned idx) const {
    if (idx < names.size()) return names[names.size() - 1 - idx];
    return "?" + std::to_string(idx - static_cast<unsigned>(names.size()));
  }

  static std::string wrap(bool needed, const std::string& s) {
    return needed ? "(" + s + ")" : s;
  }

  // Nat literals print as decimal.
  bool natLiteral(const Term& t, unsigned long long& out) const {
    unsigned long long n = 0;
    const Term* cur = &t;
    while (cur->tag() == Tag::Succ) {
      ++n;
      cur = &cur->child(0);
    }
    if (cur->tag() != Tag::Zero) return false;
    out = n;
    return true;
  }

  std::string binder1(const Term& body, std::string* nameOut) {
    std::string n = freshName();
    *nameOut = n;
    names.push_back(n);
    std::string s = print(body, 0);
    names.pop_back();
    return s;
  }

  std::string binder2(const Term& body, std::string* n1, std::string* n2) {
    *n1 = freshName();
    *n2 = freshName();
    names.push_back(*n1);
    names.push_back(*n2);
    std::string s = print(body, 0);
    names.pop_back();
    names.pop_back();
    return s;
  }

  std::string print(const Term& t, int prec) {
    switch (t.tag()) {
      case Tag::Var:
        return varName(t.index());
      case Tag::Univ:
        return "Type" + std::to_string(t.level());
      case Tag::Const:
        return t.name();
      case Tag::UnitTy:
        return "Unit";
      case Tag::UnitVal:
        return "unit";
      case Tag::VoidTy:
        return "Void";
      case Tag::BoolTy:
        return "Bool";
      case Tag::TT:
        return "true";
      case Tag::FF:
        return "false";
      case Tag::NatTy:
        return "Nat";
      case Tag::Zero:
        return "zero";
      case Tag::Succ: {
        unsigned long long lit;
        if (natLiteral(t, lit)) return std::to_string(lit);
        return wrap(prec > 1, "succ " + print(t.child(0), 2));
      }
      case Tag::Pi: {
        if (!hasFreeVar(t.child(1), 0)) {
          std::string dom = print(t.child(0), 1);
          // unused binder: print with the arrow sugar
          names.push_back("_");
          std::string cod = print(t.child(1), 0);
          names.pop_back();
          return wrap(prec > 0, dom + " -> " + cod);
        }
        std::string dom = print(t.child(0), 0);
        std::string n;
        std::string body = binder1(t.child(1), &n);
        return wrap(prec > 0, "Pi (" + n + " : " + dom + "), " + body);
      }
      case Tag::Sigma: {
        std::string dom = print(t.child(0), 0);
        std::string n;
        std::string body = binder1(t.child(1), &n);
        return wrap(prec > 0, "Sig (" + n + " : " + dom + "), " + body);
      }
      case Tag::Lam: {
        std::string dom = print(t.child(0), 0);
        std::string n;
        std::string body = binder1(t.child(1), &n);
        return wrap(prec > 0, "fun (" + n + " : " + dom + ") => " + body);
      }
      case Tag::App:
        return wrap(prec > 1, print(t.child(0), 1) + " " + print(t.child(1), 2));
      case Tag::Pair:
        return "pair(" + print(t.child(0), 0) + ", " + print(t.child(1), 0) + " : " +
               print(t.child(2), 0) + ")";
      case Tag::Inl:
        return "inl(" + print(t.child(0), 0) + "; " + print(t.child(1), 0) + ")";
      case Tag::Inr:
        return "inr(" + print(t.child(0), 0) + "; " + print(t.child(1), 0) + ")";
      case Tag::Sum:
        return "Sum(" + print(t.child(0), 0) + ", " + print(t.child(1), 0) + ")";
      case Tag::SigElim: {
        std::string mn;
        std::string motive = binder1(t.child(0), &mn);
        std::string scrut = print(t.child(1), 0);
        std::string b1, b2;
        std::string branch = binder2(t.child(2), &b1, &b2);
        return "elimSig(" + mn + ". " + motive + ", " + scrut + ", " + b1 + " " + b2 +
               ". " + branch + ")";
      }
      case Tag::SumElim: {
        std::string mn;
        std::string motive = binder1(t.child(0), &mn);
        std::string scrut = print(t.child(1), 0);
        std::string ln;
        std::string left = binder1(t.child(2), &ln);
        std::string rn;
        std::string right = binder1(t.child(3), &rn);
        return "elimS(" + mn + ". " + motive + ", " + scrut + ", " + ln + ". " + left +
               ", " + rn + ". " + right + ")";
      }
      case Tag::VoidElim: {
        std::string mn;
        std::string motive = binder1(t.child(0), &mn);
        return "elimV(" + mn + ". " + motive + ", " + print(t.child(1), 0) + ")";
      }
      case Tag::BoolElim: {
        std::string mn;
        std::string motive = binder1(t.child(0), &mn);
        return "elimB(" + mn + ". " + motive + ", " + print(t.child(1), 0) + ", " +
               print(t.child(2), 0) + ", " + print(t.child(3), 0) + ")";
      }
      case Tag::NatElim: {
        std::string mn;
        std::string motive = binder1(t.child(0), &mn);
        std::string scrut = print(t.child(1), 0);
        std::string zcase = print(t.child(2), 0);
        std::string n1, n2;
        std::string scase = binder2(t.child(3), &n1, &n2);
        return "elimN(" + mn + ". " + motive + ", " + scrut + ", " + zcase + ", " + n1 +
               " " + n2 + ". " + scase + ")";
      }
    }
    return "?";
  }
};

}  // namespace

std::string printTerm(const Term& t, const std::vector<std::string>& outerNames) {
  Printer p;
  collectConstNames(t, p.avoid);
  for (const auto& n : outerNames) p.avoid.insert(n);
  p.names = outerNames;
  return p.print(t, 0);
}

std::string printTerm(const Term& t) { return printTerm(t, {}); }

}  // namespace clari
