#include "brieskorn/literal.hpp"

#include <cctype>

#include "brieskorn/errors.hpp"

namespace brieskorn::literal {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void parse_factor(Cursor& in, Term& term) {
  char c = in.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string num = in.digits();
    std::string den = "1";
    if (in.accept('/')) den = in.digits();
    term.coefficient *= parse_rational(num + "/" + den);
    return;
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string name = in.identifier();
    unsigned exponent = 1;
    if (in.accept('^')) exponent = static_cast<unsigned>(std::stoul(in.digits()));
    term.factors.emplace_back(std::move(name), exponent);
    return;
  }
  in.fail("expected number or identifier");
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text) {
  Cursor in(text);
  std::vector<Term> terms;
  if (in.done()) in.fail("empty literal");
  bool first = true;
  while (!in.done()) {
    Term term;
    bool negative = false;
    if (!first) {
      if (in.accept('-')) negative = true;
      else if (!in.accept('+')) in.fail("expected '+' or '-'");
    }
    while (true) {
      if (in.accept('-')) negative = !negative;
      else if (!in.accept('+')) break;
    }
    parse_factor(in, term);
    while (in.accept('*')) parse_factor(in, term);
    if (negative) term.coefficient = -term.coefficient;
    terms.push_back(std::move(term));
    first = false;
  }
  return terms;
}

}  // namespace brieskorn::literal
