#include "diffsres/parser.hpp"

#include <cctype>
#include <charconv>

#include "diffsres/errors.hpp"

namespace diffsres {

namespace {

std::string where(SourcePos p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

[[noreturn]] void fail(ErrorCode code, SourcePos p, const std::string& msg) {
  throw Error(code, "line " + where(p) + ": " + msg);
}

struct Token {
  enum class Kind { number, ident, op, end };
  Kind kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::number, std::string(src.substr(i, j - i)), pos});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      while (j < src.size() && src[j] == '\'') ++j;
      out.push_back({Token::Kind::ident, std::string(src.substr(i, j - i)), pos});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      j = i + 1;
      out.push_back({Token::Kind::op, std::string(1, c), pos});
    } else {
      fail(ErrorCode::SyntaxError, pos, std::string("unexpected character '") + c + "'");
    }
    advance(j - i);
  }
  out.push_back({Token::Kind::end, "", pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::unique_ptr<Expr> parse() {
    auto e = expr();
    if (peek().kind != Token::Kind::end) fail(ErrorCode::SyntaxError, peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool is_op(const char* s) const { return peek().kind == Token::Kind::op && peek().text == s; }
  Token take() { return toks_[at_++]; }

  static std::unique_ptr<Expr> node(Expr::Kind k, SourcePos p) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->pos = p;
    return e;
  }

  static std::unique_ptr<Expr> binary(Expr::Kind k, SourcePos p, std::unique_ptr<Expr> l, std::unique_ptr<Expr> r) {
    auto e = node(k, p);
    e->children.push_back(std::move(l));
    e->children.push_back(std::move(r));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (is_op("+") || is_op("-")) {
      Token t = take();
      lhs = binary(t.text == "+" ? Expr::Kind::add : Expr::Kind::sub, t.pos, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = factor();
    while (is_op("*") || is_op("/")) {
      Token t = take();
      lhs = binary(t.text == "*" ? Expr::Kind::mul : Expr::Kind::div, t.pos, std::move(lhs), factor());
    }
    return lhs;
  }

  std::unique_ptr<Expr> factor() {
    auto b = base();
    if (!is_op("^")) return b;
    Token caret = take();
    Token t = take();
    if (t.kind != Token::Kind::number) fail(ErrorCode::SyntaxError, t.pos, "exponent must be a nonnegative integer");
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc()) fail(ErrorCode::SyntaxError, t.pos, "exponent too large");
    auto e = node(Expr::Kind::pow, caret.pos);
    e->exponent = value;
    e->children.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> base() {
    Token t = take();
    switch (t.kind) {
      case Token::Kind::number: {
        auto e = node(Expr::Kind::integer, t.pos);
        e->text = t.text;
        return e;
      }
      case Token::Kind::ident: {
        auto e = node(Expr::Kind::symbol, t.pos);
        e->text = t.text;
        return e;
      }
      case Token::Kind::op:
        if (t.text == "(") {
          auto e = node(Expr::Kind::paren, t.pos);
          e->children.push_back(expr());
          if (!is_op(")")) fail(ErrorCode::SyntaxError, peek().pos, "expected ')'");
          take();
          return e;
        }
        if (t.text == "-") {
          auto e = node(Expr::Kind::neg, t.pos);
          e->children.push_back(factor());
          return e;
        }
        fail(ErrorCode::SyntaxError, t.pos, "unexpected '" + t.text + "'");
      case Token::Kind::end:
        break;
    }
    fail(ErrorCode::SyntaxError, t.pos, "unexpected end of input");
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t k = s.find(sep, start);
    out.emplace_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Symbol declared_symbol(const std::string& name) {
  if (!is_identifier(name)) throw Error(ErrorCode::SyntaxError, "invalid symbol name '" + name + "'");
  return Symbol(name);
}

// "a0..a3" -> a0, a1, a2, a3; plain names pass through.
void expand_names(const std::string& item, std::vector<Symbol>& out) {
  const std::size_t dots = item.find("..");
  if (dots == std::string::npos) {
    out.push_back(declared_symbol(item));
    return;
  }
  const std::string lo = item.substr(0, dots);
  const std::string hi = item.substr(dots + 2);
  auto digits_at = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return k;
  };
  const std::size_t kl = digits_at(lo);
  const std::size_t kh = digits_at(hi);
  const std::string prefix = lo.substr(0, kl);
  if (kl == lo.size() || kh == hi.size() || prefix.empty() || (kh != 0 && hi.substr(0, kh) != prefix)) {
    throw Error(ErrorCode::SyntaxError, "bad range '" + item + "'");
  }
  const int first = std::stoi(lo.substr(kl));
  const int last = std::stoi(hi.substr(kh));
  if (last < first || last - first > 1000) throw Error(ErrorCode::SyntaxError, "bad range '" + item + "'");
  for (int k = first; k <= last; ++k) out.push_back(declared_symbol(prefix + std::to_string(k)));
}

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view src) { return Parser(tokenize(src)).parse(); }

Odo evaluate(const Expr& e, const DomainPtr& dom) {
  auto child = [&](std::size_t k) { return evaluate(*e.children[k], dom); };
  switch (e.kind) {
    case Expr::Kind::integer:
      return Odo::scalar(Element::constant(dom, Rational(Integer(e.text))));
    case Expr::Kind::symbol: {
      if (e.text == "D" + dom->main_variable().name()) return Odo::derivation(dom);
      Symbol s(e.text);
      if (!s.valid() || !dom->allows(s)) {
        fail(ErrorCode::UnknownSymbol, e.pos, "'" + e.text + "' is not declared in " + dom->spec());
      }
      return Odo::scalar(Element::symbol(dom, s));
    }
    case Expr::Kind::add:
      return child(0) + child(1);
    case Expr::Kind::sub:
      return child(0) - child(1);
    case Expr::Kind::mul:
      return child(0) * child(1);
    case Expr::Kind::div: {
      Odo d = child(1);
      if (d.is_zero()) fail(ErrorCode::DivisionByZero, e.pos, "division by zero");
      if (d.order() != 0) fail(ErrorCode::SyntaxError, e.pos, "divisor must not involve the derivation");
      return child(0) * Odo::scalar(d.leading_coefficient().inverse());
    }
    case Expr::Kind::pow:
      return child(0).pow(e.exponent);
    case Expr::Kind::neg:
      return -child(0);
    case Expr::Kind::paren:
      return child(0);
  }
  fail(ErrorCode::SyntaxError, e.pos, "malformed expression");
}

Odo parse_operator(std::string_view src, const DomainPtr& domain) { return evaluate(*parse_expression(src), domain); }

DomainPtr parse_domain(std::string_view spec) {
  const std::string s = trim(spec);
  const std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')') {
    throw Error(ErrorCode::SyntaxError, "domain spec must look like kind(var; key=...)");
  }
  const std::string kind = trim(std::string_view(s).substr(0, open));
  std::vector<std::string> parts = split(std::string_view(s).substr(open + 1, s.size() - open - 2), ';');
  const Symbol main = declared_symbol(trim(parts[0]));
  std::vector<Symbol> params, inds;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const std::string part = trim(parts[k]);
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected key=names in '" + part + "'");
    const std::string key = trim(std::string_view(part).substr(0, eq));
    std::vector<Symbol>* target = key == "params" ? &params : key == "inds" ? &inds : nullptr;
    if (target == nullptr) throw Error(ErrorCode::SyntaxError, "unknown domain key '" + key + "'");
    for (const auto& item : split(std::string_view(part).substr(eq + 1), ',')) {
      const std::string name = trim(item);
      if (!name.empty()) expand_names(name, *target);
    }
  }
  if (kind == "ratfunc" && inds.empty()) return Domain::rational_functions(main, params);
  if (kind == "diffpoly") return Domain::diff_polynomials(main, inds, params);
  if (kind == "weierstrass" && inds.empty()) return Domain::weierstrass(main, params);
  throw Error(ErrorCode::SyntaxError, "unknown domain kind '" + kind + "'");
}

}  // namespace diffsres
