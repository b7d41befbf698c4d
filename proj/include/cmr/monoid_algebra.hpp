#pragma once

// The monoid algebra ZR of the multiplicative monoid of a perfect
// F_p-algebra R: finite Z-linear combinations of brackets [r], with
// [r]*[s] = [r*s]. Note [1] is the ring identity while [0] is not zero.
// Coefficients are exact arbitrary-precision integers; ZR is Z-torsion-free,
// which is what makes the derivation delta = (F - (.)^p)/p exact.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "cmr/integers.hpp"
#include "cmr/perfect_algebra.hpp"

namespace cmr {

class MonoidAlgebraElement {
 public:
  MonoidAlgebraElement() = default;
  explicit MonoidAlgebraElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static MonoidAlgebraElement bracket(const PerfectElement& r) {
    MonoidAlgebraElement e(r.context());
    e.terms_.emplace(r, 1);
    return e;
  }

  static MonoidAlgebraElement from_int(const ContextPtr& ctx, const Int& n) {
    MonoidAlgebraElement e(ctx);
    if (n != 0) e.terms_.emplace(ctx->one(), n);
    return e;
  }

  const ContextPtr& context() const { return ctx_; }
  const std::map<PerfectElement, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MonoidAlgebraElement operator+(const MonoidAlgebraElement& o) const {
    require_same(o);
    MonoidAlgebraElement r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k, v);
    return r;
  }

  MonoidAlgebraElement operator-() const {
    MonoidAlgebraElement r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }

  MonoidAlgebraElement operator-(const MonoidAlgebraElement& o) const { return *this + (-o); }

  MonoidAlgebraElement operator*(const MonoidAlgebraElement& o) const {
    require_same(o);
    MonoidAlgebraElement r(ctx_);
    for (const auto& [k1, v1] : terms_)
      for (const auto& [k2, v2] : o.terms_) r.add_term(k1 * k2, v1 * v2);
    return r;
  }

  MonoidAlgebraElement operator*(const Int& n) const {
    MonoidAlgebraElement r(ctx_);
    if (n == 0) return r;
    r = *this;
    for (auto& [k, v] : r.terms_) v *= n;
    return r;
  }

  friend MonoidAlgebraElement operator*(const Int& n, const MonoidAlgebraElement& x) {
    return x * n;
  }

  MonoidAlgebraElement pow_u(unsigned e) const {
    MonoidAlgebraElement acc = from_int(ctx_, 1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  // All coefficients divisible by n, divided exactly.
  MonoidAlgebraElement div_exact(const Int& n) const {
    MonoidAlgebraElement r(ctx_);
    for (const auto& [k, v] : terms_) {
      if (v % n != 0) throw std::logic_error("div_exact: coefficient not divisible");
      r.terms_.emplace(k, v / n);
    }
    return r;
  }

  // Augmentation: sum n_r [r] -> sum n_r r in R. Its kernel is the ideal I.
  PerfectElement augmentation() const {
    PerfectElement acc = ctx_->zero();
    for (const auto& [k, v] : terms_) {
      long c = mod_pos(v, ctx_->p).convert_to<long>();
      if (c != 0) acc = acc + ctx_->from_scalar(c) * k;
    }
    return acc;
  }

  bool in_augmentation_ideal() const { return augmentation().is_zero(); }

  // Ring automorphism [r] -> [r^p] and its inverse; both preserve I.
  MonoidAlgebraElement frobenius() const {
    MonoidAlgebraElement r(ctx_);
    for (const auto& [k, v] : terms_) r.add_term(k.frobenius(), v);
    return r;
  }

  MonoidAlgebraElement frobenius_inv() const {
    MonoidAlgebraElement r(ctx_);
    for (const auto& [k, v] : terms_) r.add_term(k.pth_root(), v);
    return r;
  }

  // delta(x) = (F(x) - x^p) / p, exact by torsion-freeness. The x^p factor is
  // a genuine p-th power in ZR; there is no Frobenius shortcut for it.
  MonoidAlgebraElement delta() const {
    MonoidAlgebraElement d = frobenius() - pow_u(static_cast<unsigned>(ctx_->p));
    return d.div_exact(ctx_->p);
  }

  friend bool operator==(const MonoidAlgebraElement& a, const MonoidAlgebraElement& b) {
    a.require_same(b);
    return a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms_) {
      Int a = v < 0 ? -v : v;
      if (s.empty()) {
        if (v < 0) s += "-";
      } else {
        s += v < 0 ? " - " : " + ";
      }
      if (a != 1) s += a.str() + "*";
      s += "[" + k.to_string() + "]";
    }
    return s;
  }

 private:
  ContextPtr ctx_;
  std::map<PerfectElement, Int> terms_;

  void require_same(const MonoidAlgebraElement& o) const {
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
      throw std::invalid_argument("monoid-algebra context mismatch");
  }

  void add_term(const PerfectElement& k, const Int& v) {
    if (v == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }
};

}  // namespace cmr
