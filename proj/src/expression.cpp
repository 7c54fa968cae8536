#include <cctype>
#include <cmath>
#include <numbers>

#include "orlicz/config.hpp"
#include "orlicz/error.hpp"

namespace orlicz {
namespace {

using Node = std::function<double(Point)>;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Node parse() {
    Node n = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ConfigParse, "expression at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Node sum() {
    Node lhs = product();
    for (;;) {
      if (eat('+')) {
        Node rhs = product();
        lhs = [lhs, rhs](Point p) { return lhs(p) + rhs(p); };
      } else if (eat('-')) {
        Node rhs = product();
        lhs = [lhs, rhs](Point p) { return lhs(p) - rhs(p); };
      } else {
        return lhs;
      }
    }
  }

  Node product() {
    Node lhs = unary();
    for (;;) {
      if (eat('*')) {
        Node rhs = unary();
        lhs = [lhs, rhs](Point p) { return lhs(p) * rhs(p); };
      } else if (eat('/')) {
        Node rhs = unary();
        lhs = [lhs, rhs](Point p) { return lhs(p) / rhs(p); };
      } else {
        return lhs;
      }
    }
  }

  Node unary() {
    if (eat('-')) {
      Node n = unary();
      return [n](Point p) { return -n(p); };
    }
    if (eat('+')) return unary();
    return power();
  }

  // Right associative: 2^3^2 = 2^9.
  Node power() {
    Node base = atom();
    if (eat('^')) {
      Node ex = unary();
      return [base, ex](Point p) { return std::pow(base(p), ex(p)); };
    }
    return base;
  }

  Node atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      Node n = sum();
      if (!eat(')')) fail("missing ')'");
      return n;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      const double v = std::stod(s_.substr(pos_), &used);
      pos_ += used;
      return [v](Point) { return v; };
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (id == "x") return [](Point p) { return p.x; };
      if (id == "y") return [](Point p) { return p.y; };
      if (id == "pi") return [](Point) { return std::numbers::pi; };
      if (id == "e") return [](Point) { return std::numbers::e; };
      double (*fn)(double) = nullptr;
      if (id == "sin") fn = [](double v) { return std::sin(v); };
      else if (id == "cos") fn = [](double v) { return std::cos(v); };
      else if (id == "tan") fn = [](double v) { return std::tan(v); };
      else if (id == "exp") fn = [](double v) { return std::exp(v); };
      else if (id == "log") fn = [](double v) { return std::log(v); };
      else if (id == "sqrt") fn = [](double v) { return std::sqrt(v); };
      else if (id == "abs") fn = [](double v) { return std::fabs(v); };
      else fail("unknown identifier '" + id + "'");
      if (!eat('(')) fail("expected '(' after " + id);
      Node arg = sum();
      if (!eat(')')) fail("missing ')'");
      return [fn, arg](Point p) { return fn(arg(p)); };
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

std::function<double(Point)> parse_expression(const std::string& text) {
  return Parser(text).parse();
}

}  // namespace orlicz
