#include "weylcomb/expr.hpp"

#include <algorithm>
#include <cctype>

namespace weylcomb {

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::number: return value.to_string();
    case Kind::generator: return name;
    case Kind::add: return "(" + children[0].to_string() + " + " + children[1].to_string() + ")";
    case Kind::sub: return "(" + children[0].to_string() + " - " + children[1].to_string() + ")";
    case Kind::mul: return "(" + children[0].to_string() + " * " + children[1].to_string() + ")";
    case Kind::neg: return "(-" + children[0].to_string() + ")";
    case Kind::pow: return "(" + children[0].to_string() + ")^" + std::to_string(exponent);
  }
  return "?";
}

namespace {

struct Token {
  enum class Type { number, ident, op, end };
  Type type;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(const std::string& s, const std::vector<std::string>& words) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Token::Type::number, s.substr(start, i - start), start});
    } else if (std::isalpha(c)) {
      bool matched = false;
      for (const std::string& w : words) {
        if (s.compare(i, w.size(), w) == 0) {
          out.push_back({Token::Type::ident, w, i});
          i += w.size();
          matched = true;
          break;
        }
      }
      if (!matched) {
        out.push_back({Token::Type::ident, std::string(1, s[i]), i});
        ++i;
      }
    } else if (std::string("+-*^()").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Type::op, std::string(1, s[i]), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string generators, std::vector<std::string> words)
      : toks_(std::move(tokens)), gens_(std::move(generators)), words_(std::move(words)) {}

  Expr parse() {
    if (toks_.empty()) throw ParseError("empty expression", 0);
    Expr e = sum();
    if (pos_ < toks_.size()) throw ParseError("unexpected '" + toks_[pos_].text + "'", toks_[pos_].offset);
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::string gens_;
  std::vector<std::string> words_;
  std::size_t pos_ = 0;

  bool at_op(const char* op) const {
    return pos_ < toks_.size() && toks_[pos_].type == Token::Type::op && toks_[pos_].text == op;
  }
  std::size_t here() const { return pos_ < toks_.size() ? toks_[pos_].offset : toks_.back().offset; }
  bool starts_atom() const {
    return pos_ < toks_.size() && (toks_[pos_].type != Token::Type::op || toks_[pos_].text == "(");
  }

  static Expr node(Expr::Kind kind, std::size_t offset, std::vector<Expr> children) {
    Expr e;
    e.kind = kind;
    e.offset = offset;
    e.children = std::move(children);
    return e;
  }

  Expr sum() {
    Expr left = signed_product();
    while (at_op("+") || at_op("-")) {
      const bool plus = toks_[pos_].text == "+";
      const std::size_t off = toks_[pos_++].offset;
      Expr right = signed_product();
      left = node(plus ? Expr::Kind::add : Expr::Kind::sub, off, {std::move(left), std::move(right)});
    }
    return left;
  }

  Expr signed_product() {
    if (at_op("-")) {
      const std::size_t off = toks_[pos_++].offset;
      return node(Expr::Kind::neg, off, {signed_product()});
    }
    return product();
  }

  Expr product() {
    Expr left = power();
    while (true) {
      if (at_op("*")) {
        const std::size_t off = toks_[pos_++].offset;
        left = node(Expr::Kind::mul, off, {std::move(left), power()});
      } else if (starts_atom()) {
        const std::size_t off = toks_[pos_].offset;
        left = node(Expr::Kind::mul, off, {std::move(left), power()});
      } else {
        return left;
      }
    }
  }

  Expr power() {
    Expr base = atom();
    if (!at_op("^")) return base;
    const std::size_t off = toks_[pos_++].offset;
    if (pos_ >= toks_.size() || toks_[pos_].type != Token::Type::number ||
        toks_[pos_].text.find('/') != std::string::npos) {
      throw ParseError("expected a nonnegative integer exponent", here());
    }
    Expr e = node(Expr::Kind::pow, off, {std::move(base)});
    e.exponent = static_cast<unsigned>(std::stoul(toks_[pos_++].text));
    return e;
  }

  Expr atom() {
    if (pos_ >= toks_.size()) throw ParseError("unexpected end of input", here());
    const Token& t = toks_[pos_];
    if (t.type == Token::Type::number) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::number;
      e.value = Scalar::parse(t.text);
      e.offset = t.offset;
      return e;
    }
    if (t.type == Token::Type::ident) {
      const bool known = t.text.size() == 1 ? gens_.find(t.text[0]) != std::string::npos
                                            : std::find(words_.begin(), words_.end(), t.text) != words_.end();
      if (!known) throw ParseError("unknown generator '" + t.text + "'", t.offset);
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::generator;
      e.name = t.text;
      e.offset = t.offset;
      return e;
    }
    if (t.text == "(") {
      ++pos_;
      Expr inner = sum();
      if (!at_op(")")) throw ParseError("expected ')'", here());
      ++pos_;
      return inner;
    }
    throw ParseError("unexpected '" + t.text + "'", t.offset);
  }
};

}  // namespace

Expr parse_expression(const std::string& text, const std::string& generators,
                      const std::vector<std::string>& words) {
  return Parser(tokenize(text, words), generators, words).parse();
}

Poly parse_poly(const std::string& text, char var, const Ring& ring) {
  const Expr e = parse_expression(text, std::string(1, var));
  return fold_expr<Poly>(
      e, [&](const std::string&) { return Poly::variable().in_ring(ring.p); },
      [&](const Scalar& s) { return Poly(ring.coerce(s)); });
}

OreElement parse_ore(const std::string& text, const OreAlgebraSpec& spec) {
  const Expr e = parse_expression(text, "xy");
  return fold_expr<OreElement>(
      e, [&](const std::string& g) { return g == "x" ? OreElement::x(spec) : OreElement::y(spec); },
      [&](const Scalar& s) { return OreElement::constant(spec, spec.ring.coerce(s)); });
}

QghaElement parse_qgha(const std::string& text, const QghaSpec& spec) {
  const Expr e = parse_expression(text, "xyh");
  return fold_expr<QghaElement>(
      e, [&](const std::string& g) { return QghaElement::generator(spec, g[0]); },
      [&](const Scalar& s) { return QghaElement::constant(spec, spec.ring.coerce(s)); });
}

BiPoly parse_bipoly(const std::string& text) {
  const Expr e = parse_expression(text, "xy", {"hbar"});
  return fold_expr<BiPoly>(
      e,
      [](const std::string& g) { return g == "x" ? BiPoly::x() : g == "y" ? BiPoly::y() : BiPoly::hbar(); },
      [](const Scalar& s) { return BiPoly(s); });
}

}  // namespace weylcomb
