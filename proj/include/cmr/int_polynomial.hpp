#pragma once

// Sparse multivariate polynomials with exact integer coefficients, just
// enough machinery for generating and checking universal Witt structure
// polynomials: ring operations, powers, composition, exact division by an
// integer, and evaluation over a perfect F_p-algebra.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmr/integers.hpp"
#include "cmr/perfect_algebra.hpp"

namespace cmr {

class IntPolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit IntPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static IntPolynomial constant(std::size_t nvars, const Int& c) {
    IntPolynomial r(nvars);
    if (c != 0) r.terms_.emplace(Exponents(nvars, 0), c);
    return r;
  }

  static IntPolynomial variable(std::size_t nvars, std::size_t i, unsigned exp = 1) {
    if (i >= nvars) throw std::invalid_argument("variable index out of range");
    IntPolynomial r(nvars);
    Exponents e(nvars, 0);
    e[i] = exp;
    if (exp == 0) return constant(nvars, 1);
    r.terms_.emplace(std::move(e), 1);
    return r;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  IntPolynomial operator+(const IntPolynomial& o) const {
    require_same(o);
    IntPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  IntPolynomial operator-() const {
    IntPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

  IntPolynomial operator*(const IntPolynomial& o) const {
    require_same(o);
    IntPolynomial r(nvars_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }

  IntPolynomial operator*(const Int& s) const {
    IntPolynomial r(nvars_);
    if (s == 0) return r;
    r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }

  friend IntPolynomial operator*(const Int& s, const IntPolynomial& x) { return x * s; }

  IntPolynomial pow(unsigned e) const {
    IntPolynomial acc = constant(nvars_, 1);
    IntPolynomial base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      if (e >>= 1) base = base * base;
    }
    return acc;
  }

  IntPolynomial div_exact(const Int& d) const {
    IntPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (c % d != 0) throw std::logic_error("IntPolynomial::div_exact: not divisible");
      r.terms_.emplace(e, c / d);
    }
    return r;
  }

  // Substitute images[i] for variable i; all images share one variable count.
  IntPolynomial compose(const std::vector<IntPolynomial>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("compose: arity mismatch");
    std::size_t m = images.empty() ? 0 : images[0].nvars_;
    std::vector<std::map<unsigned, IntPolynomial>> cache(nvars_);
    IntPolynomial acc(m);
    for (const auto& [e, c] : terms_) {
      IntPolynomial term = constant(m, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto it = cache[i].find(e[i]);
        if (it == cache[i].end()) it = cache[i].emplace(e[i], images[i].pow(e[i])).first;
        term = term * it->second;
      }
      acc = acc + term;
    }
    return acc;
  }

  // Evaluate over R with coefficients reduced mod p.
  PerfectElement eval(const std::vector<PerfectElement>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("eval: arity mismatch");
    const ContextPtr& ctx = point.empty() ? ContextPtr() : point[0].context();
    std::vector<std::vector<PerfectElement>> pows(nvars_);  // pows[i][e] = point[i]^e
    PerfectElement acc = ctx->zero();
    for (const auto& [e, c] : terms_) {
      long cm = mod_pos(c, ctx->p).convert_to<long>();
      if (cm == 0) continue;
      PerfectElement term = ctx->from_scalar(cm);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = pows[i];
        if (pw.empty()) pw.push_back(ctx->one());
        while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
        term = term * pw[e[i]];
      }
      acc = acc + term;
    }
    return acc;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Sorted monomial list, e.g. "X0^2*Y1 - 3*X1".
  std::string to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw std::invalid_argument("to_string: arity mismatch");
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      Int a = c < 0 ? -c : c;
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        s += a.str();
      } else {
        if (a != 1) s += a.str() + "*";
        s += mono;
      }
    }
    return s;
  }

 private:
  std::size_t nvars_;
  std::map<Exponents, Int> terms_;

  void require_same(const IntPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  void add_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
};

}  // namespace cmr
