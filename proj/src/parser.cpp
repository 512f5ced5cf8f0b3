#include "clari/parser.hpp"

#include <cctype>
#include <set>

namespace clari {

namespace {

enum class Tok {
  Ident,
  Number,
  String,
  HashWord,  // #check, #normalize, #stable
  LParen,
  RParen,
  Comma,
  Colon,
  Semi,
  Dot,
  Arrow,    // ->
  DArrow,   // =>
  Assign,   // :=
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 1, col = 1;
  int endLine = 1, endCol = 1;
};

const std::set<std::string> kTermKeywords = {
    "fun",  "Pi",    "Sig",   "pair",  "inl",   "inr",   "elimB", "elimN",
    "elimS", "elimSig", "elimV", "Type0", "Type1", "Type2", "Unit", "unit",
    "Void", "Bool",  "true",  "false", "Nat",  "zero",  "succ",  "Sum"};
const std::set<std::string> kDeclKeywords = {"def", "theorem", "statement", "hint",
                                             "import"};

struct Lexer {
  const std::string& src;
  std::string file;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s, std::string f) : src(s), file(std::move(f)) {}

  [[noreturn]] void err(const std::string& msg, int l, int c) {
    Diagnostic d{"E-PARSE", msg, {}, {}, SourceSpan{file, l, c, l, c}};
    throw TypeError(std::move(d));
  }

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        continue;
      }
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      Token t;
      t.line = line;
      t.col = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                src[pos] == '\'')) {
          word += src[pos];
          advance();
        }
        t.kind = Tok::Ident;
        t.text = word;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
          num += src[pos];
          advance();
        }
        t.kind = Tok::Number;
        t.text = num;
      } else if (c == '#') {
        advance();
        std::string word;
        while (pos < src.size() &&
               std::isalpha(static_cast<unsigned char>(src[pos]))) {
          word += src[pos];
          advance();
        }
        t.kind = Tok::HashWord;
        t.text = word;
      } else if (c == '"') {
        advance();
        std::string s;
        while (pos < src.size() && src[pos] != '"') {
          s += src[pos];
          advance();
        }
        if (pos >= src.size()) err("unterminated string literal", t.line, t.col);
        advance();
        t.kind = Tok::String;
        t.text = s;
      } else if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
        advance();
        advance();
        t.kind = Tok::Arrow;
        t.text = "->";
      } else if (c == '=' && pos + 1 < src.size() && src[pos + 1] == '>') {
        advance();
        advance();
        t.kind = Tok::DArrow;
        t.text = "=>";
      } else if (c == ':' && pos + 1 < src.size() && src[pos + 1] == '=') {
        advance();
        advance();
        t.kind = Tok::Assign;
        t.text = ":=";
      } else {
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case ',': t.kind = Tok::Comma; break;
          case ':': t.kind = Tok::Colon; break;
          case ';': t.kind = Tok::Semi; break;
          case '.': t.kind = Tok::Dot; break;
          default:
            err(std::string("unexpected character '") + c + "'", line, col);
        }
        t.text = std::string(1, c);
        advance();
      }
      t.endLine = line;
      t.endCol = col;
      out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.text = "<eof>";
    end.line = line;
    end.col = col;
    end.endLine = line;
    end.endCol = col;
    out.push_back(end);
    return out;
  }
};

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  std::string file;
  std::vector<std::string> scope;  // outermost first

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  const Token& advance() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

  [[noreturn]] void err(const std::string& expected) {
    const Token& t = peek();
    Diagnostic d{"E-PARSE",
                 "expected " + expected + ", found '" + t.text + "'",
                 {},
                 {},
                 SourceSpan{file, t.line, t.col, t.endLine, t.endCol}};
    throw TypeError(std::move(d));
  }

  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) err(what);
    return advance();
  }

  bool atWord(const std::string& w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  void expectWord(const std::string& w) {
    if (!atWord(w)) err("'" + w + "'");
    advance();
  }

  std::string expectIdent() {
    if (peek().kind != Tok::Ident) err("an identifier");
    std::string name = peek().text;
    if (kTermKeywords.count(name) || kDeclKeywords.count(name))
      err("an identifier (found reserved word)");
    advance();
    return name;
  }

  Term lookupName(const std::string& name) {
    for (std::size_t back = 0; back < scope.size(); ++back) {
      if (scope[scope.size() - 1 - back] == name)
        return Term::var(static_cast<unsigned>(back));
    }
    return Term::constant(name);
  }

  bool startsAtom() const {
    switch (peek().kind) {
      case Tok::LParen:
      case Tok::Number:
        return true;
      case Tok::Ident:
        return !kDeclKeywords.count(peek().text);
      default:
        return false;
    }
  }

  // term := fun/Pi/Sig binder forms | app ('->' term)?
  Term parseTerm() {
    if (atWord("fun")) {
      advance();
      expect(Tok::LParen, "'('");
      std::string n = expectIdent();
      expect(Tok::Colon, "':'");
      Term ann = parseTerm();
      expect(Tok::RParen, "')'");
      expect(Tok::DArrow, "'=>'");
      scope.push_back(n);
      Term body = parseTerm();
      scope.pop_back();
      return Term::lam(std::move(ann), std::move(body));
    }
    if (atWord("Pi") || atWord("Sig")) {
      bool isPi = peek().text == "Pi";
      advance();
      expect(Tok::LParen, "'('");
      std::string n = expectIdent();
      expect(Tok::Colon, "':'");
      Term dom = parseTerm();
      expect(Tok::RParen, "')'");
      expect(Tok::Comma, "','");
      scope.push_back(n);
      Term body = parseTerm();
      scope.pop_back();
      return isPi ? Term::pi(std::move(dom), std::move(body))
                  : Term::sigma(std::move(dom), std::move(body));
    }
    Term lhs = parseApp();
    if (peek().kind == Tok::Arrow) {
      advance();
      // parsing the codomain under an anonymous binder keeps indices right
      scope.push_back("_");
      Term rhs = parseTerm();
      scope.pop_back();
      return Term::pi(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Term parseApp() {
    Term f = parseAtom();
    while (startsAtom()) f = Term::app(std::move(f), parseAtom());
    return f;
  }

  // motive / branch: IDENT '.' term ; two-binder: IDENT IDENT '.' term
  Term parseBinder1() {
    std::string n = expectIdent();
    expect(Tok::Dot, "'.'");
    scope.push_back(n);
    Term t = parseTerm();
    scope.pop_back();
    return t;
  }
  Term parseBinder2() {
    std::string a = expectIdent();
    std::string b = expectIdent();
    expect(Tok::Dot, "'.'");
    scope.push_back(a);
    scope.push_back(b);
    Term t = parseTerm();
    scope.pop_back();
    scope.pop_back();
    return t;
  }

  Term parseAtom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      advance();
      Term inner = parseTerm();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Number) {
      advance();
      unsigned long long n = std::stoull(t.text);
      Term acc = Term::zero();
      for (unsigned long long i = 0; i < n; ++i) acc = Term::succ(std::move(acc));
      return acc;
    }
    if (t.kind != Tok::Ident) err("a term");
    const std::string& w = t.text;
    if (w == "Type0") { advance(); return Term::univ(0); }
    if (w == "Type1") { advance(); return Term::univ(1); }
    if (w == "Type2") { advance(); return Term::univ(2); }
    if (w == "Unit") { advance(); return Term::unitTy(); }
    if (w == "unit") { advance(); return Term::unitVal(); }
    if (w == "Void") { advance(); return Term::voidTy(); }
    if (w == "Bool") { advance(); return Term::boolTy(); }
    if (w == "true") { advance(); return Term::tt(); }
    if (w == "false") { advance(); return Term::ff(); }
    if (w == "Nat") { advance(); return Term::natTy(); }
    if (w == "zero") { advance(); return Term::zero(); }
    if (w == "succ") {
      advance();
      return Term::succ(parseAtom());
    }
    if (w == "Sum") {
      advance();
      expect(Tok::LParen, "'('");
      Term a = parseTerm();
      expect(Tok::Comma, "','");
      Term b = parseTerm();
      expect(Tok::RParen, "')'");
      return Term::sum(std::move(a), std::move(b));
    }
    if (w == "pair") {
      advance();
      expect(Tok::LParen, "'('");
      Term a = parseTerm();
      expect(Tok::Comma, "','");
      Term b = parseTerm();
      expect(Tok::Colon, "':'");
      Term ty = parseTerm();
      expect(Tok::RParen, "')'");
      return Term::pairOf(std::move(a), std::move(b), std::move(ty));
    }
    if (w == "inl" || w == "inr") {
      bool left = w == "inl";
      advance();
      expect(Tok::LParen, "'('");
      Term payload = parseTerm();
      expect(Tok::Semi, "';'");
      Term other = parseTerm();
      expect(Tok::RParen, "')'");
      return left ? Term::inl(std::move(payload), std::move(other))
                  : Term::inr(std::move(payload), std::move(other));
    }
    if (w == "elimB") {
      advance();
      expect(Tok::LParen, "'('");
      Term m = parseBinder1();
      expect(Tok::Comma, "','");
      Term s = parseTerm();
      expect(Tok::Comma, "','");
      Term x = parseTerm();
      expect(Tok::Comma, "','");
      Term y = parseTerm();
      expect(Tok::RParen, "')'");
      return Term::boolElim(std::move(m), std::move(s), std::move(x), std::move(y));
    }
    if (w == "elimN") {
      advance();
      expect(Tok::LParen, "'('");
      Term m = parseBinder1();
      expect(Tok::Comma, "','");
      Term s = parseTerm();
      expect(Tok::Comma, "','");
      Term z = parseTerm();
      expect(Tok::Comma, "','");
      Term f = parseBinder2();
      expect(Tok::RParen, "')'");
      return Term::natElim(std::move(m), std::move(s), std::move(z), std::move(f));
    }
    if (w == "elimS") {
      advance();
      expect(Tok::LParen, "'('");
      Term m = parseBinder1();
      expect(Tok::Comma, "','");
      Term s = parseTerm();
      expect(Tok::Comma, "','");
      Term l = parseBinder1();
      expect(Tok::Comma, "','");
      Term r = parseBinder1();
      expect(Tok::RParen, "')'");
      return Term::sumElim(std::move(m), std::move(s), std::move(l), std::move(r));
    }
    if (w == "elimSig") {
      advance();
      expect(Tok::LParen, "'('");
      Term m = parseBinder1();
      expect(Tok::Comma, "','");
      Term s = parseTerm();
      expect(Tok::Comma, "','");
      Term br = parseBinder2();
      expect(Tok::RParen, "')'");
      return Term::sigElim(std::move(m), std::move(s), std::move(br));
    }
    if (w == "elimV") {
      advance();
      expect(Tok::LParen, "'('");
      Term m = parseBinder1();
      expect(Tok::Comma, "','");
      Term s = parseTerm();
      expect(Tok::RParen, "')'");
      return Term::voidElim(std::move(m), std::move(s));
    }
    if (kDeclKeywords.count(w)) err("a term");
    advance();
    return lookupName(w);
  }

  SourceSpan spanFrom(const Token& start) const {
    const Token& prev = toks[pos == 0 ? 0 : pos - 1];
    return SourceSpan{file, start.line, start.col, prev.endLine, prev.endCol};
  }

  std::vector<Decl> parseFile() {
    std::vector<Decl> out;
    while (peek().kind != Tok::End) {
      out.push_back(parseDecl());
    }
    return out;
  }

  Decl parseDecl() {
    const Token start = peek();
    Decl d;
    if (peek().kind == Tok::HashWord) {
      std::string w = peek().text;
      advance();
      if (w == "check") d.kind = DeclKind::CheckCmd;
      else if (w == "normalize") d.kind = DeclKind::NormalizeCmd;
      else if (w == "stable") d.kind = DeclKind::StableCmd;
      else err("'#check', '#normalize' or '#stable'");
      d.term = parseTerm();
      expect(Tok::Dot, "'.'");
      d.span = spanFrom(start);
      return d;
    }
    if (atWord("def") || atWord("theorem")) {
      bool thm = peek().text == "theorem";
      advance();
      d.kind = thm ? DeclKind::Theorem : DeclKind::Def;
      d.name = expectIdent();
      expect(Tok::Colon, "':'");
      d.type = parseTerm();
      expect(Tok::Assign, "':='");
      d.term = parseTerm();
      expect(Tok::Dot, "'.'");
      d.span = spanFrom(start);
      return d;
    }
    if (atWord("statement")) {
      advance();
      d.kind = DeclKind::StatementOnly;
      d.name = expectIdent();
      expect(Tok::Colon, "':'");
      d.type = parseTerm();
      expect(Tok::Dot, "'.'");
      d.span = spanFrom(start);
      return d;
    }
    if (atWord("hint")) {
      advance();
      d.kind = DeclKind::HintCmd;
      if (!atWord("stable") && !atWord("decidable")) err("'stable' or 'decidable'");
      d.hintKind = peek().text;
      advance();
      d.name = expectIdent();
      expect(Tok::Dot, "'.'");
      d.span = spanFrom(start);
      return d;
    }
    if (atWord("import")) {
      advance();
      d.kind = DeclKind::ImportCmd;
      if (peek().kind != Tok::String) err("a quoted path");
      d.path = peek().text;
      advance();
      expect(Tok::Dot, "'.'");
      d.span = spanFrom(start);
      return d;
    }
    err("a declaration ('def', 'theorem', 'statement', '#check', '#normalize', '#stable', 'hint' or 'import')");
  }
};

}  // namespace

std::vector<Decl> parseScript(const std::string& text, const std::string& fileName) {
  Lexer lx(text, fileName);
  Parser p;
  p.toks = lx.run();
  p.file = fileName;
  return p.parseFile();
}

Term parseTermString(const std::string& text, const std::string& what) {
  Lexer lx(text, what);
  Parser p;
  p.toks = lx.run();
  p.file = what;
  Term t = p.parseTerm();
  if (p.peek().kind != Tok::End) p.err("end of expression");
  return t;
}

}  // namespace clari
