#pragma once

// Expression language of the `calc` command.
//
//   expr    := product
//   product := unary ('*' unary)*
//   unary   := '[' poly ']' 'D' k          group element f D_k
//            | '1'                         identity
//            | '(' expr ')'
//            | 'inv(' expr ')'
//            | 'comm(' expr ',' expr ')'   a^-1 b^-1 a b
//            | 'conj(' expr ',' expr ')'   b^-1 a b
//            | 'lead(' expr ')'            leading term M(g)
//            | 'phi(' expr ')'             -> Lie element
//            | 'bracket(' expr ',' expr ')'-> Lie element (arguments via phi)
//            | 'tdeg(' expr ')'            -> ordinal

#include <string>
#include <string_view>
#include <variant>

#include "liering.hpp"
#include "ordinals.hpp"
#include "wreath.hpp"

namespace hyperwreath {

using CalcValue = std::variant<GroupElement, LieElement, Ordinal>;

inline std::string render(const CalcValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

namespace detail {

class CalcParser {
public:
  CalcParser(std::string_view text, int n) : text_(text), n_(n) {}

  CalcValue parse() {
    CalcValue v = product();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

private:
  CalcValue product() {
    skip();
    const std::size_t start = pos_;
    CalcValue acc = unary();
    while (true) {
      skip();
      if (!peek('*')) break;
      ++pos_;
      skip();
      const std::size_t rhs_at = pos_;
      CalcValue rhs = unary();
      acc = group(acc, start) * group(rhs, rhs_at);
    }
    return acc;
  }

  CalcValue unary() {
    skip();
    const std::size_t start = pos_;
    if (peek('[')) return parse_element_factor(text_, pos_, n_);
    if (peek('(')) {
      ++pos_;
      CalcValue v = product();
      expect(')');
      return v;
    }
    std::string name;
    while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') name += text_[pos_++];
    if (name.empty()) {
      if (peek('1')) {
        ++pos_;
        return GroupElement::identity(n_);
      }
      throw ParseError(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end",
                       pos_);
    }
    expect('(');
    skip();
    const std::size_t arg1 = pos_;
    CalcValue a = product();
    CalcValue result;
    if (name == "inv") {
      result = group(a, arg1).inverse();
    } else if (name == "lead") {
      const GroupElement g = group(a, arg1);
      if (g.is_identity()) throw ParseError("lead() of the identity", arg1);
      result = GroupElement::from_monomial(n_, leading_term(g));
    } else if (name == "phi") {
      result = phi(group(a, arg1));
    } else if (name == "tdeg") {
      if (const auto* l = std::get_if<LieElement>(&a)) {
        Ordinal best;
        for (const auto& [b, c] : l->terms()) best = std::max(best, tdeg_lie(b, n_));
        result = best;
      } else {
        result = tdeg(group(a, arg1));
      }
    } else if (name == "comm" || name == "conj" || name == "bracket") {
      expect(',');
      skip();
      const std::size_t arg2 = pos_;
      CalcValue b = product();
      if (name == "comm")
        result = comm(group(a, arg1), group(b, arg2));
      else if (name == "conj")
        result = conj(group(a, arg1), group(b, arg2));
      else
        result = bracket(lie(a, arg1), lie(b, arg2));
    } else {
      throw ParseError("unknown function '" + name + "'", start);
    }
    expect(')');
    return result;
  }

  GroupElement group(const CalcValue& v, std::size_t at) const {
    if (const auto* g = std::get_if<GroupElement>(&v)) return *g;
    throw ParseError("expected a group element", at);
  }

  LieElement lie(const CalcValue& v, std::size_t at) const {
    if (const auto* l = std::get_if<LieElement>(&v)) return *l;
    if (const auto* g = std::get_if<GroupElement>(&v)) return phi(*g);
    throw ParseError("expected a Lie element", at);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip() { skip_ws(text_, pos_); }
  void expect(char c) {
    skip();
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline CalcValue evaluate_expression(std::string_view text, int n) { return detail::CalcParser(text, n).parse(); }

} // namespace hyperwreath
