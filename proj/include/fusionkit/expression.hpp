#pragma once

// A small expression language over the fusion semiring of a Ring.
//
//   sum     := product ('+' product)*
//   product := scaled ('*' scaled)*
//   scaled  := INT postfix? | postfix
//   postfix := primary '~'*
//   primary := '[' letter* ']' | '(' sum ')'
//
// A bare integer n denotes n times the unit; `[]` is the unit itself.
// Letter names are whitespace-separated inside brackets and may contain
// '*' and '@'.

#include <cctype>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fusionkit/ring.hpp"

namespace fusionkit {

class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct IntegerLit {
  Coeff value;
};
struct WordLit {
  std::vector<std::string> letters;
  std::vector<SourcePos> positions;
};
struct DualOf {
  ExprPtr arg;
};
struct Sum {
  ExprPtr lhs, rhs;
};
struct Product {
  ExprPtr lhs, rhs;
};
struct Scaled {
  Coeff factor;
  ExprPtr arg;
};

struct Expression {
  std::variant<IntegerLit, WordLit, DualOf, Sum, Product, Scaled> node;
  SourcePos pos;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    auto e = parse_sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + src_[i_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(ErrorCode::syntax_error, pos_.line, pos_.column, what);
  }

  bool at_end() const { return i_ >= src_.size(); }

  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
  }

  bool peek(char c) {
    skip_space();
    return !at_end() && src_[i_] == c;
  }

  static ExprPtr make(decltype(Expression::node) node, SourcePos pos) {
    return std::make_shared<const Expression>(Expression{std::move(node), pos});
  }

  ExprPtr parse_sum() {
    auto lhs = parse_product();
    while (peek('+')) {
      const SourcePos at = pos_;
      advance();
      lhs = make(Sum{lhs, parse_product()}, at);
    }
    return lhs;
  }

  ExprPtr parse_product() {
    auto lhs = parse_scaled();
    while (peek('*')) {
      const SourcePos at = pos_;
      advance();
      lhs = make(Product{lhs, parse_scaled()}, at);
    }
    return lhs;
  }

  ExprPtr parse_scaled() {
    skip_space();
    if (at_end()) fail("expected an operand");
    const SourcePos at = pos_;
    if (std::isdigit(static_cast<unsigned char>(src_[i_]))) {
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
        digits.push_back(src_[i_]);
        advance();
      }
      Coeff n(digits);
      if (peek('[') || peek('(')) return make(Scaled{n, parse_postfix()}, at);
      return make(IntegerLit{n}, at);
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    auto e = parse_primary();
    while (peek('~')) {
      const SourcePos at = pos_;
      advance();
      e = make(DualOf{e}, at);
    }
    return e;
  }

  ExprPtr parse_primary() {
    skip_space();
    if (at_end()) fail("expected '[' or '('");
    const SourcePos at = pos_;
    if (src_[i_] == '(') {
      advance();
      auto e = parse_sum();
      if (!peek(')')) fail("expected ')'");
      advance();
      return e;
    }
    if (src_[i_] != '[') fail(std::string("unexpected '") + src_[i_] + "'");
    advance();
    WordLit w;
    for (;;) {
      skip_space();
      if (at_end()) fail("unterminated word literal");
      if (src_[i_] == ']') break;
      if (src_[i_] == '[') fail("nested '['");
      w.positions.push_back(pos_);
      std::string name;
      while (!at_end() && src_[i_] != ']' && src_[i_] != '[' &&
             !std::isspace(static_cast<unsigned char>(src_[i_]))) {
        name.push_back(src_[i_]);
        advance();
      }
      w.letters.push_back(std::move(name));
    }
    advance();
    return make(std::move(w), at);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace detail

/// Syntax only; letter names are resolved by `resolve` or `evaluate`.
inline ExprPtr parse_expression(std::string_view source) { return detail::Parser(source).parse(); }

/// The simple named by a word literal.
inline Simple resolve(const Ring& ring, const WordLit& w) {
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    auto a = ring.parse_atom(w.letters[k]);
    if (!a) throw SyntaxError(ErrorCode::unknown_letter, w.positions[k].line, w.positions[k].column,
                              "unknown letter '" + w.letters[k] + "' for ring " + ring.name());
    atoms.push_back(*a);
  }
  Simple x(std::move(atoms));
  ring.require_simple(x);
  return x;
}

inline Combination<Simple> evaluate(const Expression& e, const Ring& ring) {
  return std::visit(
      [&](const auto& n) -> Combination<Simple> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntegerLit>) {
          return Combination<Simple>(ring.unit(), n.value);
        } else if constexpr (std::is_same_v<T, WordLit>) {
          return Combination<Simple>(resolve(ring, n));
        } else if constexpr (std::is_same_v<T, DualOf>) {
          return ring.dual(evaluate(*n.arg, ring));
        } else if constexpr (std::is_same_v<T, Sum>) {
          return evaluate(*n.lhs, ring) + evaluate(*n.rhs, ring);
        } else if constexpr (std::is_same_v<T, Product>) {
          return ring.product(evaluate(*n.lhs, ring), evaluate(*n.rhs, ring));
        } else {
          return n.factor * evaluate(*n.arg, ring);
        }
      },
      e.node);
}

/// Parses and checks every letter against `ring`.
inline ExprPtr parse_expression(std::string_view source, const Ring& ring) {
  auto e = parse_expression(source);
  std::function<void(const Expression&)> check = [&](const Expression& x) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, WordLit>) {
            resolve(ring, n);
          } else if constexpr (std::is_same_v<T, DualOf> || std::is_same_v<T, Scaled>) {
            check(*n.arg);
          } else if constexpr (std::is_same_v<T, Sum> || std::is_same_v<T, Product>) {
            check(*n.lhs);
            check(*n.rhs);
          }
        },
        x.node);
  };
  check(*e);
  return e;
}

inline Combination<Simple> evaluate(std::string_view source, const Ring& ring) {
  return evaluate(*parse_expression(source, ring), ring);
}

}  // namespace fusionkit
