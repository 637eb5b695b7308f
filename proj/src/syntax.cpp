#include "fodesc/syntax.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>

#include "fodesc/error.hpp"

namespace fodesc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// "x<digits>" with a positive index, else nullopt.
std::optional<Var> as_variable(std::string_view word) {
  if (word.size() < 2 || word[0] != 'x') return std::nullopt;
  for (char c : word.substr(1))
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  Var v = 0;
  auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(), v);
  if (ec != std::errc() || v == 0) return std::nullopt;
  return v;
}

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab) : text_(text), vocab_(vocab) {}

  Formula run() {
    Formula f = unary();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string_view word() {
    skip_ws();
    const auto start = pos_;
    if (pos_ < text_.size() && ident_start(text_[pos_])) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  Var variable() {
    skip_ws();
    const auto start = pos_;
    auto w = word();
    if (w.empty()) fail("expected a variable");
    auto v = as_variable(w);
    if (!v) {
      pos_ = start;
      fail("malformed variable '" + std::string(w) + "'");
    }
    return *v;
  }

  Formula unary() {
    const char c = peek();
    if (c == '!') {
      ++pos_;
      return negate(unary());
    }
    if (c == '(') {
      ++pos_;
      return group();
    }
    if (c == '\0') fail("unexpected end of input");
    if (!ident_start(c)) fail(std::string("unexpected character '") + c + "'");

    const auto start = pos_;
    const auto w = word();
    // Quantifier: E/A immediately followed by a variable, then a dot.
    if ((w[0] == 'E' || w[0] == 'A') && as_variable(w.substr(1)) && peek() == '.') {
      ++pos_;
      const Var v = *as_variable(w.substr(1));
      Formula body = unary();
      return w[0] == 'E' ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
    }
    if (auto v = as_variable(w); v && peek() != '(') {
      if (accept("!=")) return Formula::neq(*v, variable());
      if (accept("=")) return Formula::eq(*v, variable());
      fail("expected '=' or '!=' after variable");
    }
    auto index = vocab_.index_of(w);
    if (!index) {
      pos_ = start;
      fail("unknown predicate '" + std::string(w) + "'");
    }
    expect("(");
    const Var v = variable();
    expect(")");
    return Formula::pred(*index, v);
  }

  // After '(' : formula (op formula)* ')'
  Formula group() {
    std::vector<Formula> parts{unary()};
    char op = '\0';
    for (;;) {
      const char c = peek();
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c != '&' && c != '|') fail("expected '&', '|' or ')'");
      if (op != '\0' && c != op) fail("mixed '&' and '|' need parentheses");
      op = c;
      ++pos_;
      parts.push_back(unary());
    }
    if (parts.size() == 1) return parts.front();
    return op == '&' ? big_and(parts) : big_or(parts);
  }

  std::string_view text_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
};

void print_to(std::string& out, const Formula& f, const Vocabulary* vocab) {
  auto var = [&](Var v) {
    out += 'x';
    out += std::to_string(v);
  };
  auto pred_name = [&](std::size_t p) {
    if (vocab) {
      out += vocab->name(p);
    } else {
      out += 'P';
      out += std::to_string(p + 1);
    }
  };
  switch (f.kind()) {
    case NodeKind::Eq:
    case NodeKind::Neq:
      var(f.lhs());
      out += f.kind() == NodeKind::Eq ? " = " : " != ";
      var(f.rhs());
      return;
    case NodeKind::NegPred:
      out += '!';
      [[fallthrough]];
    case NodeKind::Pred:
      pred_name(f.predicate());
      out += '(';
      var(f.var());
      out += ')';
      return;
    case NodeKind::And:
    case NodeKind::Or:
      out += '(';
      print_to(out, f.left(), vocab);
      out += f.kind() == NodeKind::And ? " & " : " | ";
      print_to(out, f.right(), vocab);
      out += ')';
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
      out += f.kind() == NodeKind::Exists ? 'E' : 'A';
      var(f.var());
      out += ". ";
      print_to(out, f.body(), vocab);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text, const Vocabulary& vocab) { return Parser(text, vocab).run(); }

std::string print(const Formula& f, const Vocabulary& vocab) {
  std::string out;
  print_to(out, f, &vocab);
  return out;
}

std::string print(const Formula& f) {
  std::string out;
  print_to(out, f, nullptr);
  return out;
}

}  // namespace fodesc
