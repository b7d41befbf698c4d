#pragma once

// Text syntax shared by the CLI and tests.
//
//   ring spec:      gf(p) | gf(q,modulus) | perfect(p;t[,u...])
//   field literal:  sums of monomials over the generators, e.g. "g^2+1",
//                   "2*g+1", "t^(1/2)+t", "0"
//   ZR element:     signed integer combinations of brackets, e.g.
//                   "2*[g^2] - [1] + [0]", "4*[1]", "1 + 2*[g]"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cmr/integers.hpp"
#include "cmr/monoid_algebra.hpp"
#include "cmr/perfect_algebra.hpp"

namespace cmr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
  std::size_t position;
};

namespace parse_detail {

class Cursor {
 public:
  explicit Cursor(std::string_view src) : src_(src) {}

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool peek_alpha() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  Int read_int() {
    skip_ws();
    if (!peek_digit()) fail("expected integer");
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      digits += src_[pos_++];
    return Int(digits);
  }

  std::string read_ident() {
    skip_ws();
    if (!peek_alpha()) fail("expected identifier");
    std::string name;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      name += src_[pos_++];
    return name;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

// factor := IDENT ['^' (INT | '(' INT '/' INT ')')]
inline PerfectElement parse_factor(Cursor& cur, const ContextPtr& ctx) {
  std::size_t at = cur.pos();
  std::string name = cur.read_ident();
  Int num = 1;
  std::int64_t den = 1;
  if (cur.accept('^')) {
    if (cur.accept('(')) {
      num = cur.read_int();
      cur.expect('/');
      Int d = cur.read_int();
      cur.expect(')');
      // Denominator must be a power of p.
      Int t = d;
      den = d.convert_to<std::int64_t>();
      while (t > 1 && t % ctx->p == 0) t /= ctx->p;
      if (t != 1) cur.fail("exponent denominator must be a power of p");
    } else {
      num = cur.read_int();
    }
  }
  if (ctx->is_finite_field()) {
    if (ctx->degree < 2 || name != "g") throw ParseError("unknown generator '" + name + "'", at);
    if (den != 1) cur.fail("fractional exponents are not valid in a finite field literal");
    return ctx->generator().pow(num);
  }
  for (std::size_t i = 0; i < ctx->vars.size(); ++i) {
    if (ctx->vars[i] != name) continue;
    PerfectElement f = ctx->variable(i).pow(num);
    for (std::int64_t d = den; d > 1; d /= ctx->p) f = f.pth_root();
    return f;
  }
  throw ParseError("unknown generator '" + name + "'", at);
}

// rterm := INT ['*' factor ('*' factor)*] | factor ('*' factor)*
inline PerfectElement parse_field_term(Cursor& cur, const ContextPtr& ctx) {
  PerfectElement acc = ctx->one();
  bool have_factor = false;
  if (cur.peek_digit()) {
    Int c = cur.read_int();
    acc = ctx->from_scalar(mod_pos(c, ctx->p).convert_to<long>());
    have_factor = true;
    if (!cur.accept('*')) return acc;
  }
  do {
    acc = acc * parse_factor(cur, ctx);
    have_factor = true;
  } while (cur.accept('*'));
  if (!have_factor) cur.fail("expected term");
  return acc;
}

inline PerfectElement parse_field_sum(Cursor& cur, const ContextPtr& ctx) {
  bool negate = cur.accept('-');
  PerfectElement acc = parse_field_term(cur, ctx);
  if (negate) acc = -acc;
  while (true) {
    if (cur.accept('+')) {
      acc = acc + parse_field_term(cur, ctx);
    } else if (cur.accept('-')) {
      acc = acc - parse_field_term(cur, ctx);
    } else {
      return acc;
    }
  }
}

}  // namespace parse_detail

// Coefficient-algebra literal, e.g. "g^2+1" or "t^(1/2)+t".
inline PerfectElement parse_field_literal(std::string_view src, const ContextPtr& ctx) {
  parse_detail::Cursor cur(src);
  PerfectElement e = parse_detail::parse_field_sum(cur, ctx);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return e;
}

// Comma-separated field literals (Teichmueller digit lists).
inline std::vector<PerfectElement> parse_digit_list(std::string_view src, const ContextPtr& ctx) {
  parse_detail::Cursor cur(src);
  std::vector<PerfectElement> out;
  if (cur.at_end()) return out;
  out.push_back(parse_detail::parse_field_sum(cur, ctx));
  while (cur.accept(',')) out.push_back(parse_detail::parse_field_sum(cur, ctx));
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return out;
}

// ZR element: term := INT | INT '*' '[' relem ']' | '[' relem ']'.
inline MonoidAlgebraElement parse_element(std::string_view src, const ContextPtr& ctx) {
  parse_detail::Cursor cur(src);
  MonoidAlgebraElement acc(ctx);
  bool first = true;
  while (true) {
    if (first && cur.at_end()) cur.fail("empty element");
    Int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (cur.accept('+')) {
      if (first) cur.fail("unexpected '+'");
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    Int coeff = 1;
    bool have_coeff = false;
    if (cur.peek_digit()) {
      coeff = cur.read_int();
      have_coeff = true;
    }
    MonoidAlgebraElement term(ctx);
    if ((have_coeff && cur.accept('*')) || (!have_coeff && cur.peek() == '[')) {
      cur.expect('[');
      PerfectElement r = parse_detail::parse_field_sum(cur, ctx);
      cur.expect(']');
      term = MonoidAlgebraElement::bracket(r) * (sign * coeff);
    } else if (have_coeff) {
      term = MonoidAlgebraElement::from_int(ctx, sign * coeff);
    } else {
      cur.fail("expected term");
    }
    acc = acc + term;
    first = false;
    if (cur.at_end()) return acc;
  }
}

// Univariate polynomial over F_p in any single variable, lowest degree
// first; used for finite-field moduli in ring specs.
inline std::vector<std::uint32_t> parse_modulus_poly(parse_detail::Cursor& cur, long p) {
  std::map<unsigned, long> coeffs;
  std::string var;
  bool first = true;
  while (true) {
    long sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (cur.accept('+')) {
      if (first) cur.fail("unexpected '+'");
    } else if (!first) {
      break;
    }
    long c = 1;
    unsigned deg = 0;
    bool have_coeff = false;
    if (cur.peek_digit()) {
      c = mod_pos(cur.read_int(), p).convert_to<long>();
      have_coeff = true;
    }
    if (!have_coeff || cur.accept('*') || cur.peek_alpha()) {
      std::size_t at = cur.pos();
      std::string name = cur.read_ident();
      if (var.empty())
        var = name;
      else if (var != name)
        throw ParseError("modulus must be univariate", at);
      deg = 1;
      if (cur.accept('^')) deg = static_cast<unsigned>(cur.read_int().convert_to<long>());
    }
    coeffs[deg] = ((coeffs[deg] + sign * c) % p + p) % p;
    first = false;
    char nxt = cur.peek();
    if (nxt != '+' && nxt != '-') break;
  }
  unsigned degree = 0;
  for (const auto& [d, c] : coeffs)
    if (c != 0) degree = std::max(degree, d);
  std::vector<std::uint32_t> out(degree + 1, 0);
  for (const auto& [d, c] : coeffs)
    if (d <= degree) out[d] = static_cast<std::uint32_t>(c);
  return out;
}

// "gf(p)", "gf(q,modulus)", "perfect(p;t[,u...])". Small built-in moduli for
// gf(4), gf(8), gf(9), gf(27) keep test invocations self-contained.
inline ContextPtr parse_ring_spec(std::string_view src) {
  parse_detail::Cursor cur(src);
  std::string head = cur.read_ident();
  if (head == "gf") {
    cur.expect('(');
    Int q = cur.read_int();
    if (q < 2) cur.fail("field size must be >= 2");
    long p = 0;
    int k = 0;
    Int t = q;
    for (long d = 2; Int(d) * d <= t; ++d) {
      if (t % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) {
      p = t.convert_to<long>();
      k = 1;
    } else {
      while (t > 1) {
        if (t % p != 0) cur.fail("field size must be a prime power");
        t /= p;
        ++k;
      }
    }
    std::vector<std::uint32_t> mod;
    if (cur.accept(',')) {
      mod = parse_modulus_poly(cur, p);
    } else if (k == 1) {
      mod = {0, 1};
    } else if (q == 4) {
      mod = {1, 1, 1};  // x^2+x+1
    } else if (q == 8) {
      mod = {1, 1, 0, 1};  // x^3+x+1
    } else if (q == 9) {
      mod = {2, 2, 1};  // x^2+2x+2
    } else if (q == 27) {
      mod = {1, 2, 0, 1};  // x^3+2x+1
    } else {
      cur.fail("no built-in modulus for gf(" + q.str() + "); supply one");
    }
    cur.expect(')');
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    try {
      return AlgebraContext::finite_field(p, k, std::move(mod));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  if (head == "perfect") {
    cur.expect('(');
    Int p = cur.read_int();
    cur.expect(';');
    std::vector<std::string> names;
    names.push_back(cur.read_ident());
    while (cur.accept(',')) names.push_back(cur.read_ident());
    cur.expect(')');
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    try {
      return AlgebraContext::perfect_closure(p.convert_to<long>(), std::move(names));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  throw ParseError("unknown ring kind '" + head + "'", 0);
}

}  // namespace cmr
