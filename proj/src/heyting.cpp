#include "clari/heyting.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "clari/eval.hpp"

namespace clari {

PropFormula PropFormula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->tag = PTag::Atom;
  n->name = std::move(name);
  return PropFormula(std::move(n));
}
PropFormula PropFormula::top() {
  auto n = std::make_shared<Node>();
  n->tag = PTag::Top;
  return PropFormula(std::move(n));
}
PropFormula PropFormula::bot() {
  auto n = std::make_shared<Node>();
  n->tag = PTag::Bot;
  return PropFormula(std::move(n));
}
PropFormula PropFormula::conj(PropFormula l, PropFormula r) {
  auto n = std::make_shared<Node>();
  n->tag = PTag::And;
  n->kids = {std::move(l), std::move(r)};
  return PropFormula(std::move(n));
}
PropFormula PropFormula::impl(PropFormula l, PropFormula r) {
  auto n = std::make_shared<Node>();
  n->tag = PTag::Imp;
  n->kids = {std::move(l), std::move(r)};
  return PropFormula(std::move(n));
}
PropFormula PropFormula::sump(PropFormula l, PropFormula r) {
  auto n = std::make_shared<Node>();
  n->tag = PTag::SumP;
  n->kids = {std::move(l), std::move(r)};
  return PropFormula(std::move(n));
}

std::optional<LatticeViolation> validateAlgebra(const HeytingAlgebra& h) {
  const unsigned n = h.size;
  if (n == 0) return LatticeViolation{"nonempty", {}};
  auto viol = [](std::string law, std::vector<unsigned> w) {
    return LatticeViolation{std::move(law), std::move(w)};
  };
  for (unsigned a = 0; a < n; ++a)
    if (!h.le(a, a)) return viol("reflexivity", {a});
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (a != b && h.le(a, b) && h.le(b, a)) return viol("antisymmetry", {a, b});
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (h.le(a, b) && h.le(b, c) && !h.le(a, c)) return viol("transitivity", {a, b, c});
  for (unsigned a = 0; a < n; ++a) {
    if (!h.le(h.bottom, a)) return viol("bottom", {a});
    if (!h.le(a, h.top)) return viol("top", {a});
  }
  // meet = greatest lower bound, join = least upper bound
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      unsigned m = h.meetOf(a, b);
      if (!h.le(m, a) || !h.le(m, b)) return viol("meet-lower-bound", {a, b, m});
      for (unsigned c = 0; c < n; ++c)
        if (h.le(c, a) && h.le(c, b) && !h.le(c, m)) return viol("meet-greatest", {a, b, c});
      unsigned j = h.joinOf(a, b);
      if (!h.le(a, j) || !h.le(b, j)) return viol("join-upper-bound", {a, b, j});
      for (unsigned c = 0; c < n; ++c)
        if (h.le(a, c) && h.le(b, c) && !h.le(j, c)) return viol("join-least", {a, b, c});
    }
  // residuation: meet(a,c) <= b  iff  c <= imp(a,b)
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c) {
        bool lhs = h.le(h.meetOf(a, c), b);
        bool rhs = h.le(c, h.impOf(a, b));
        if (lhs != rhs) return viol("residuation", {a, b, c});
      }
  // distributivity (implied by residuation; asserted directly as well)
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (h.meetOf(a, h.joinOf(b, c)) != h.joinOf(h.meetOf(a, b), h.meetOf(a, c)))
          return viol("distributivity", {a, b, c});
  return std::nullopt;
}

unsigned evalFormula(const HeytingAlgebra& h, const Valuation& v, const PropFormula& f) {
  switch (f.tag()) {
    case PTag::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw MissingAtomError(f.name());
      return it->second;
    }
    case PTag::Top:
      return h.top;
    case PTag::Bot:
      return h.bottom;
    case PTag::And:
      return h.meetOf(evalFormula(h, v, f.left()), evalFormula(h, v, f.right()));
    case PTag::Imp:
      return h.impOf(evalFormula(h, v, f.left()), evalFormula(h, v, f.right()));
    case PTag::SumP:
      return h.joinOf(evalFormula(h, v, f.left()), evalFormula(h, v, f.right()));
  }
  throw std::logic_error("malformed formula");
}

namespace {

// Builds the derived tables from a candidate order; nullopt when the order
// is not a distributive lattice.
std::optional<HeytingAlgebra> completeAlgebra(unsigned n, std::vector<std::uint8_t> leq) {
  HeytingAlgebra h;
  h.size = n;
  h.leq = std::move(leq);
  h.bottom = 0;
  h.top = n - 1;
  h.meet.assign(n * n, 0);
  h.join.assign(n * n, 0);
  h.imp.assign(n * n, 0);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      // greatest lower bound: a lower bound that dominates every other
      int m = -1;
      for (unsigned c = 0; c < n && m < 0; ++c) {
        if (!h.le(c, a) || !h.le(c, b)) continue;
        bool greatest = true;
        for (unsigned d = 0; d < n && greatest; ++d)
          if (h.le(d, a) && h.le(d, b) && !h.le(d, c)) greatest = false;
        if (greatest) m = static_cast<int>(c);
      }
      if (m < 0) return std::nullopt;
      h.meet[a * n + b] = static_cast<std::uint8_t>(m);
      // least upper bound, dually
      int j = -1;
      for (unsigned c = 0; c < n && j < 0; ++c) {
        if (!h.le(a, c) || !h.le(b, c)) continue;
        bool least = true;
        for (unsigned d = 0; d < n && least; ++d)
          if (h.le(a, d) && h.le(b, d) && !h.le(c, d)) least = false;
        if (least) j = static_cast<int>(c);
      }
      if (j < 0) return std::nullopt;
      h.join[a * n + b] = static_cast<std::uint8_t>(j);
    }
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (h.meetOf(a, h.joinOf(b, c)) != h.joinOf(h.meetOf(a, b), h.meetOf(a, c)))
          return std::nullopt;
  // imp(a,b) = largest c with meet(a,c) <= b
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      unsigned best = h.bottom;
      for (unsigned c = 0; c < n; ++c)
        if (h.le(h.meetOf(a, c), b)) best = h.joinOf(best, c);
      if (!h.le(h.meetOf(a, best), b)) return std::nullopt;
      h.imp[a * n + b] = static_cast<std::uint8_t>(best);
    }
  if (validateAlgebra(h)) return std::nullopt;
  return h;
}

}  // namespace

std::vector<HeytingAlgebra> enumerateAlgebras(unsigned maxSize) {
  if (maxSize > 6) throw SizeLimitError();
  std::vector<HeytingAlgebra> out;
  for (unsigned n = 1; n <= maxSize; ++n) {
    std::vector<HeytingAlgebra> found;
    if (n == 1) {
      HeytingAlgebra h;
      h.size = 1;
      h.leq = {1};
      h.meet = {0};
      h.join = {0};
      h.imp = {0};
      h.bottom = h.top = 0;
      found.push_back(std::move(h));
    } else {
      unsigned mids = n - 2;
      std::vector<std::pair<unsigned, unsigned>> freePairs;
      for (unsigned i = 1; i + 1 < n; ++i)
        for (unsigned j = 1; j + 1 < n; ++j)
          if (i != j) freePairs.emplace_back(i, j);
      const std::size_t bits = freePairs.size();
      (void)mids;
      for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        std::vector<std::uint8_t> leq(n * n, 0);
        for (unsigned a = 0; a < n; ++a) leq[a * n + a] = 1;
        for (unsigned a = 0; a < n; ++a) {
          leq[0 * n + a] = 1;
          leq[a * n + (n - 1)] = 1;
        }
        for (std::size_t k = 0; k < bits; ++k)
          if (mask & (1ull << k)) leq[freePairs[k].first * n + freePairs[k].second] = 1;
        bool ok = true;
        for (unsigned a = 0; a < n && ok; ++a)
          for (unsigned b = 0; b < n && ok; ++b)
            if (a != b && leq[a * n + b] && leq[b * n + a]) ok = false;
        for (unsigned a = 0; a < n && ok; ++a)
          for (unsigned b = 0; b < n && ok; ++b)
            for (unsigned c = 0; c < n && ok; ++c)
              if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) ok = false;
        if (!ok) continue;
        if (auto h = completeAlgebra(n, std::move(leq))) found.push_back(std::move(*h));
      }
    }
    std::sort(found.begin(), found.end(),
              [](const HeytingAlgebra& a, const HeytingAlgebra& b) { return a.leq < b.leq; });
    for (auto& h : found) out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::string> atomsOf(const PropFormula& f) {
  std::vector<std::string> out;
  std::function<void(const PropFormula&)> walk = [&](const PropFormula& g) {
    switch (g.tag()) {
      case PTag::Atom:
        out.push_back(g.name());
        return;
      case PTag::Top:
      case PTag::Bot:
        return;
      default:
        walk(g.left());
        walk(g.right());
    }
  };
  walk(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Countermodel> findCountermodel(const PropFormula& f, unsigned maxSize) {
  if (maxSize < 1) return std::nullopt;
  std::vector<std::string> atoms = atomsOf(f);
  for (const HeytingAlgebra& h : enumerateAlgebras(maxSize)) {
    std::vector<unsigned> vals(atoms.size(), 0);
    bool done = false;
    while (!done) {
      Valuation v;
      for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = vals[i];
      if (evalFormula(h, v, f) != h.top) return Countermodel{h, std::move(v)};
      // odometer over valuations, last atom varying fastest
      std::size_t i = atoms.size();
      for (;;) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++vals[i] < h.size) break;
        vals[i] = 0;
      }
    }
  }
  return std::nullopt;
}

namespace {

struct PParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) {
    Diagnostic d{"E-PARSE", msg + " at offset " + std::to_string(pos), {}, {}, {}};
    throw TypeError(std::move(d));
  }

  void skip() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  bool peekWord(const std::string& w) {
    skip();
    if (s.compare(pos, w.size(), w) != 0) return false;
    std::size_t end = pos + w.size();
    return end >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_');
  }
  bool eatWord(const std::string& w) {
    if (!peekWord(w)) return false;
    pos += w.size();
    return true;
  }

  // imp := sum ('->' imp)? ; sum := or ('+' or)* ; or := and ('\/' and)* ;
  // and := unary ('/\' unary)*
  PropFormula parseImp() {
    PropFormula l = parseSum();
    if (eat("->")) return PropFormula::impl(std::move(l), parseImp());
    return l;
  }
  PropFormula parseSum() {
    PropFormula l = parseOr();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '+') {
        ++pos;
        l = PropFormula::sump(std::move(l), parseOr());
      } else {
        return l;
      }
    }
  }
  PropFormula parseOr() {
    PropFormula l = parseAnd();
    while (eat("\\/")) l = PropFormula::orw(std::move(l), parseAnd());
    return l;
  }
  PropFormula parseAnd() {
    PropFormula l = parseUnary();
    while (eat("/\\")) l = PropFormula::conj(std::move(l), parseUnary());
    return l;
  }
  PropFormula parseUnary() {
    if (eatWord("not")) return PropFormula::negf(parseUnary());
    if (eatWord("nn")) return PropFormula::negf(PropFormula::negf(parseUnary()));
    return parseAtom();
  }
  PropFormula parseAtom() {
    skip();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      PropFormula f = parseImp();
      skip();
      if (pos >= s.size() || s[pos] != ')') err("expected ')'");
      ++pos;
      return f;
    }
    if (eatWord("top")) return PropFormula::top();
    if (eatWord("bot")) return PropFormula::bot();
    skip();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) err("expected a formula");
    return PropFormula::atom(s.substr(start, pos - start));
  }
};

}  // namespace

PropFormula parsePropFormula(const std::string& text) {
  PParser p{text};
  PropFormula f = p.parseImp();
  p.skip();
  if (p.pos != text.size()) p.err("trailing input");
  return f;
}

namespace {

std::optional<PropFormula> shadowOf(const Term& t, unsigned atomCount) {
  switch (t.tag()) {
    case Tag::Var: {
      unsigned idx = t.index();
      if (idx >= atomCount) return std::nullopt;
      // atom j (outermost-first) has index atomCount-1-j here
      return PropFormula::atom("p" + std::to_string(atomCount - 1 - idx));
    }
    case Tag::UnitTy:
      return PropFormula::top();
    case Tag::VoidTy:
      return PropFormula::bot();
    case Tag::Pi: {
      if (hasFreeVar(t.child(1), 0)) return std::nullopt;
      auto l = shadowOf(t.child(0), atomCount);
      if (!l) return std::nullopt;
      auto r = shadowOf(shift(t.child(1), 0, -1), atomCount);
      if (!r) return std::nullopt;
      return PropFormula::impl(std::move(*l), std::move(*r));
    }
    case Tag::Sigma: {
      if (hasFreeVar(t.child(1), 0)) return std::nullopt;
      auto l = shadowOf(t.child(0), atomCount);
      if (!l) return std::nullopt;
      auto r = shadowOf(shift(t.child(1), 0, -1), atomCount);
      if (!r) return std::nullopt;
      return PropFormula::conj(std::move(*l), std::move(*r));
    }
    case Tag::Sum: {
      auto l = shadowOf(t.child(0), atomCount);
      if (!l) return std::nullopt;
      auto r = shadowOf(t.child(1), atomCount);
      if (!r) return std::nullopt;
      return PropFormula::sump(std::move(*l), std::move(*r));
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<PropFormula> propositionalShadow(const GlobalEnv& env, const Term& statement) {
  Fuel fuel;
  Term t = normalize(env, statement, fuel);
  unsigned atoms = 0;
  while (t.tag() == Tag::Pi && t.child(0).tag() == Tag::Univ && t.child(0).level() == 0) {
    ++atoms;
    t = t.child(1);
  }
  return shadowOf(t, atoms);
}

std::string formatAlgebra(const HeytingAlgebra& h) {
  std::ostringstream os;
  os << "algebra size " << h.size << " (bottom=0, top=" << h.size - 1 << ")\n";
  os << "  leq:\n";
  for (unsigned a = 0; a < h.size; ++a) {
    os << "   ";
    for (unsigned b = 0; b < h.size; ++b) os << " " << (h.le(a, b) ? 1 : 0);
    os << "\n";
  }
  return os.str();
}

std::string formatCountermodel(const Countermodel& cm) {
  std::ostringstream os;
  os << formatAlgebra(cm.algebra);
  os << "  valuation:";
  for (const auto& [atom, val] : cm.valuation) os << " " << atom << "=" << val;
  os << "\n";
  os << "  machine: CM n=" << cm.algebra.size << " leq=";
  for (auto b : cm.algebra.leq) os << (b ? 1 : 0);
  for (const auto& [atom, val] : cm.valuation) os << " " << atom << ":" << val;
  os << "\n";
  return os.str();
}

}  // namespace clari
