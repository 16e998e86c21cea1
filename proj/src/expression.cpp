#include "softclust/expression.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace softclust {

namespace {

struct Token {
  enum Kind { name, op_union, op_inter, op_diff, op_compl, lparen, rparen, end };
  Kind kind = end;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    Token token;
    token.pos = i;
    if (ch == '(') {
      token.kind = Token::lparen;
      ++i;
    } else if (ch == ')') {
      token.kind = Token::rparen;
      ++i;
    } else if (ch == '~') {
      token.kind = Token::op_compl;
      ++i;
    } else if (ch == '-') {
      token.kind = Token::op_diff;
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      token.text = text.substr(start, i - start);
      if (token.text == "u") {
        token.kind = Token::op_union;
      } else if (token.text == "n") {
        token.kind = Token::op_inter;
      } else {
        token.kind = Token::name;
      }
    } else {
      throw InputError("syntax error at position " + std::to_string(i) +
                       ": unexpected character '" + std::string(1, ch) + "'");
    }
    out.push_back(std::move(token));
  }
  out.push_back(Token{Token::end, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(const SpaceBundle& bundle, const std::string& text)
      : bundle_(bundle), tokens_(tokenize(text)) {}

  SoftSet run() {
    SoftSet value = parse_union();
    if (peek().kind != Token::end) {
      throw InputError("syntax error at position " + std::to_string(peek().pos) +
                       ": trailing input");
    }
    return value;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token take() { return tokens_[index_++]; }

  SoftSet parse_union() {
    SoftSet value = parse_diff();
    while (peek().kind == Token::op_union) {
      take();
      value = value | parse_diff();
    }
    return value;
  }

  SoftSet parse_diff() {
    SoftSet value = parse_inter();
    while (peek().kind == Token::op_diff) {
      take();
      value = value - parse_inter();
    }
    return value;
  }

  SoftSet parse_inter() {
    SoftSet value = parse_unary();
    while (peek().kind == Token::op_inter) {
      take();
      value = value & parse_unary();
    }
    return value;
  }

  SoftSet parse_unary() {
    const Token& token = peek();
    if (token.kind == Token::op_compl) {
      take();
      return ~parse_unary();
    }
    if (token.kind == Token::lparen) {
      take();
      SoftSet value = parse_union();
      expect(Token::rparen, "')'");
      return value;
    }
    if (token.kind == Token::name) {
      Token word = take();
      if ((word.text == "cl" || word.text == "int" || word.text == "D" || word.text == "c") &&
          peek().kind == Token::lparen) {
        take();
        SoftSet argument = parse_union();
        expect(Token::rparen, "')'");
        return apply(word.text, argument, word.pos);
      }
      return SoftSet(bundle_.carrier, resolve_set_name(bundle_, word.text));
    }
    throw InputError("syntax error at position " + std::to_string(token.pos) +
                     ": expected a set name, operator expression, or '('");
  }

  void expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) {
      throw InputError("syntax error at position " + std::to_string(peek().pos) + ": expected " +
                       what);
    }
    take();
  }

  const SoftTopology& topology(std::size_t pos) const {
    if (!bundle_.topology.has_value()) {
      throw InputError("operator at position " + std::to_string(pos) +
                       " needs a valid topology in the space file");
    }
    return *bundle_.topology;
  }

  SoftSet apply(const std::string& op, const SoftSet& argument, std::size_t pos) {
    if (op == "cl") return closure(topology(pos), argument);
    if (op == "int") return interior(topology(pos), argument);
    if (op == "D") return derived_set(topology(pos), argument);
    if (!bundle_.ideal.has_value()) {
      throw InputError("operator at position " + std::to_string(pos) +
                       " needs an ideal in the space file");
    }
    return cluster_set(ClusterContext(topology(pos), *bundle_.ideal), argument);
  }

  const SpaceBundle& bundle_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

SoftSet eval_expression(const SpaceBundle& bundle, const std::string& text) {
  return Parser(bundle, text).run();
}

}  // namespace softclust
