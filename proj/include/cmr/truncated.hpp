#pragma once

// Canonical arithmetic in ZR/I^n, the precision-n truncation of the I-adic
// completion of the monoid algebra ZR (I = kernel of the augmentation onto
// R). A class is stored as its unique representative sum c_b [b] over the
// distinguished basis of R with coefficients in [0, p^n); coefficients add
// componentwise mod p^n, so only multiplication and reduction need the lift
// machinery. Division by p is the fixed-point iteration
//   a_{k+1} = F^{-1}(delta(z) + p^(p-1) a_k^p),
// which contracts p-adically by a factor p^(p-1) per step.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmr/integers.hpp"
#include "cmr/monoid_algebra.hpp"
#include "cmr/perfect_algebra.hpp"

namespace cmr {

class TruncatedElement {
 public:
  TruncatedElement() = default;

  static TruncatedElement zero(const ContextPtr& ctx, int n) {
    check_precision(n);
    TruncatedElement t;
    t.ctx_ = ctx;
    t.prec_ = n;
    return t;
  }

  static TruncatedElement one(const ContextPtr& ctx, int n) {
    return reduce(MonoidAlgebraElement::from_int(ctx, 1), n);
  }

  static TruncatedElement from_int(const ContextPtr& ctx, int n, const Int& v) {
    return reduce(MonoidAlgebraElement::from_int(ctx, v), n);
  }

  // Canonical form of x mod I^n.
  static TruncatedElement reduce(const MonoidAlgebraElement& x, int n) {
    check_precision(n);
    return reduce_impl(x, n);
  }

  // The unique class a at precision n-1 with p*lift(a) = z mod I^n; requires
  // z in I. The postcondition is re-verified on every public call.
  static TruncatedElement divide_by_p(const MonoidAlgebraElement& z, int n) {
    if (n < 1) throw std::invalid_argument("divide_by_p: precision must be >= 1");
    TruncatedElement r = divide_impl(z, n);
    MonoidAlgebraElement back = r.lift() * Int(z.context()->p) - z;
    if (!reduce_impl(back, n).coeffs_.empty())
      throw std::logic_error("divide_by_p: post-verification failed");
    return r;
  }

  static TruncatedElement from_canonical(const ContextPtr& ctx, int n,
                                         std::map<PerfectElement, Int> coeffs) {
    check_precision(n);
    TruncatedElement t = zero(ctx, n);
    Int m = ipow(ctx->p, n);
    for (auto& [b, c] : coeffs) {
      if (b.basis_decompose() != std::map<PerfectElement, std::uint32_t>{{b, 1}})
        throw std::invalid_argument("from_canonical: key is not a basis element");
      if (c < 0 || c >= m) throw std::invalid_argument("from_canonical: coefficient range");
      if (c != 0) t.coeffs_.emplace(b, c);
    }
    return t;
  }

  const ContextPtr& context() const { return ctx_; }
  int precision() const { return prec_; }
  Int modulus() const { return ipow(ctx_->p, prec_); }
  const std::map<PerfectElement, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Canonical lift sum c_b [b] of the class back into ZR.
  MonoidAlgebraElement lift() const {
    MonoidAlgebraElement x(ctx_);
    for (const auto& [b, c] : coeffs_) x = x + MonoidAlgebraElement::bracket(b) * c;
    return x;
  }

  // Image of the class under the residue map to R (precision >= 1).
  PerfectElement residue() const {
    if (prec_ < 1) throw std::invalid_argument("residue: zero ring has no residue");
    return lift().augmentation();
  }

  TruncatedElement operator+(const TruncatedElement& o) const {
    require_same(o);
    TruncatedElement r = *this;
    Int m = modulus();
    for (const auto& [b, c] : o.coeffs_) r.add_coeff(b, c, m);
    return r;
  }

  TruncatedElement operator-() const {
    TruncatedElement r = zero(ctx_, prec_);
    Int m = modulus();
    for (const auto& [b, c] : coeffs_) r.coeffs_.emplace(b, m - c);
    return r;
  }

  TruncatedElement operator-(const TruncatedElement& o) const { return *this + (-o); }

  TruncatedElement operator*(const TruncatedElement& o) const {
    require_same(o);
    return reduce_impl(lift() * o.lift(), prec_);
  }

  TruncatedElement operator*(const Int& s) const {
    TruncatedElement r = zero(ctx_, prec_);
    Int m = modulus();
    for (const auto& [b, c] : coeffs_) {
      Int v = mod_pos(c * s, m);
      if (v != 0) r.coeffs_.emplace(b, v);
    }
    return r;
  }

  friend TruncatedElement operator*(const Int& s, const TruncatedElement& x) { return x * s; }

  // Canonical surjection ZR/I^n -> ZR/I^m for m <= n.
  TruncatedElement lower(int m) const {
    if (m < 0 || m > prec_) throw std::invalid_argument("lower: target precision out of range");
    TruncatedElement r = zero(ctx_, m);
    Int mod = ipow(ctx_->p, m);
    for (const auto& [b, c] : coeffs_) {
      Int v = c % mod;
      if (v != 0) r.coeffs_.emplace(b, v);
    }
    return r;
  }

  TruncatedElement frobenius() const { return reduce_impl(lift().frobenius(), prec_); }
  TruncatedElement frobenius_inv() const { return reduce_impl(lift().frobenius_inv(), prec_); }

  // V = p * F^{-1}; additive, with F(V(x)) = V(F(x)) = p*x.
  TruncatedElement verschiebung() const {
    return reduce_impl(lift().frobenius_inv() * Int(ctx_->p), prec_);
  }

  // Teichmueller digits (r_0, ..., r_{n-1}): x = sum p^i [r_i] mod I^n.
  std::vector<PerfectElement> teichmuller_digits() const {
    std::vector<PerfectElement> digits;
    TruncatedElement cur = *this;
    for (int i = 0; i < prec_; ++i) {
      PerfectElement r = cur.residue();
      digits.push_back(r);
      if (i + 1 < prec_)
        cur = divide_impl(cur.lift() - MonoidAlgebraElement::bracket(r), cur.prec_);
    }
    return digits;
  }

  static TruncatedElement from_digits(const ContextPtr& ctx,
                                      const std::vector<PerfectElement>& digits) {
    int n = static_cast<int>(digits.size());
    MonoidAlgebraElement x(ctx);
    Int pw = 1;
    for (const auto& r : digits) {
      x = x + MonoidAlgebraElement::bracket(r) * pw;
      pw *= ctx->p;
    }
    return reduce(x, n);
  }

  // Multiplicative inverse; the residue must be a unit in R (for a field:
  // nonzero). Hensel/Newton iteration y <- y(2 - xy).
  TruncatedElement invert() const {
    if (prec_ == 0) return *this;
    PerfectElement r = residue();
    if (!r.invertible())
      throw std::domain_error("invert: residue is not a unit (valuation > 0)");
    TruncatedElement y = reduce_impl(MonoidAlgebraElement::bracket(r.inverse()), prec_);
    TruncatedElement two = from_int(ctx_, prec_, 2);
    int steps = 1;
    while ((1 << (steps - 1)) < prec_) ++steps;
    for (int i = 0; i < steps; ++i) y = y * (two - *this * y);
    if (!(*this * y == one(ctx_, prec_))) throw std::logic_error("invert: verification failed");
    return y;
  }

  // Index of the first nonzero Teichmueller digit; nullopt means >= n (x = 0).
  // Finite-field coefficients only.
  std::optional<int> valuation() const {
    if (!ctx_->is_finite_field())
      throw std::invalid_argument("valuation: coefficient algebra is not a field");
    auto digits = teichmuller_digits();
    for (int i = 0; i < static_cast<int>(digits.size()); ++i)
      if (!digits[i].is_zero()) return i;
    return std::nullopt;
  }

  // Ring map ZR1/I^n -> ZR2/I^n induced by an algebra homomorphism.
  TruncatedElement induced(const AlgebraHom& h) const {
    if (!(*h.source() == *ctx_)) throw std::invalid_argument("induced: source mismatch");
    MonoidAlgebraElement y(h.target());
    for (const auto& [b, c] : coeffs_)
      y = y + MonoidAlgebraElement::bracket(h.apply(b)) * c;
    return reduce(y, prec_);
  }

  friend bool operator==(const TruncatedElement& a, const TruncatedElement& b) {
    a.require_same(b);
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [b, c] : coeffs_) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += c.str() + "*";
      s += "[" + b.to_string() + "]";
    }
    if (s.empty()) s = "0";
    return s + " (mod I^" + std::to_string(prec_) + ")";
  }

 private:
  ContextPtr ctx_;
  int prec_ = 0;
  std::map<PerfectElement, Int> coeffs_;

  static void check_precision(int n) {
    if (n < 0) throw std::invalid_argument("precision must be >= 0");
  }

  void require_same(const TruncatedElement& o) const {
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
      throw std::invalid_argument("truncated-ring context mismatch");
    if (prec_ != o.prec_) throw std::invalid_argument("truncated-ring precision mismatch");
  }

  void add_coeff(const PerfectElement& b, const Int& c, const Int& m) {
    auto it = coeffs_.find(b);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_.emplace(b, c);
      return;
    }
    it->second = mod_pos(it->second + c, m);
    if (it->second == 0) coeffs_.erase(it);
  }

  // Peel one p-adic layer: write pi(x) in the basis with digit lifts in
  // [0, p), divide the remainder by p, and recurse at precision n-1.
  static TruncatedElement reduce_impl(const MonoidAlgebraElement& x, int n) {
    TruncatedElement t = zero(x.context(), n);
    if (n == 0) return t;
    auto head = x.augmentation().basis_decompose();
    MonoidAlgebraElement z = x;
    for (const auto& [b, lam] : head)
      z = z - MonoidAlgebraElement::bracket(b) * Int(lam);
    TruncatedElement tail = divide_impl(z, n);
    for (const auto& [b, lam] : head) t.coeffs_.emplace(b, Int(lam));
    Int p(x.context()->p);
    for (const auto& [b, c] : tail.coeffs_) {
      auto it = t.coeffs_.find(b);
      if (it == t.coeffs_.end())
        t.coeffs_.emplace(b, p * c);
      else
        it->second += p * c;
    }
    return t;
  }

  static TruncatedElement divide_impl(const MonoidAlgebraElement& z, int n) {
    const ContextPtr& ctx = z.context();
    if (!z.in_augmentation_ideal())
      throw std::domain_error("divide_by_p: element is not in the augmentation ideal");
    if (n == 1) return zero(ctx, 0);
    const long p = ctx->p;
    const unsigned pu = static_cast<unsigned>(p);
    const Int pp1 = ipow(p, static_cast<int>(p) - 1);
    MonoidAlgebraElement dz = z.delta();
    MonoidAlgebraElement a = dz.frobenius_inv();
    // ceil((n-1)/(p-1)) + 1 steps; each improves p-adic agreement by p^(p-1).
    const int iters = (n + static_cast<int>(p) - 3) / (static_cast<int>(p) - 1) + 1;
    for (int k = 0; k < iters; ++k) {
      // Re-canonicalize between steps: replacing the iterate by any
      // representative of its class mod I^(n-1) leaves the limit class
      // unchanged and keeps support and coefficient growth bounded.
      a = reduce_impl(a, n - 1).lift();
      a = (dz + pp1 * a.pow_u(pu)).frobenius_inv();
    }
    return reduce_impl(a, n - 1);
  }
};

// Plain coefficientwise mod-p^n reduction, valid exactly for Z-combinations
// of bracketed basis monomials over a perfect polynomial closure (the
// monomial basis is closed under multiplication, so Z[basis] is a subring
// mapping isomorphically onto the truncation).
inline TruncatedElement monomial_fast_reduce(const MonoidAlgebraElement& x, int n) {
  const ContextPtr& ctx = x.context();
  if (ctx->kind != AlgebraKind::PerfectClosure)
    throw std::invalid_argument("monomial_fast_reduce: needs a perfect closure");
  std::map<PerfectElement, Int> coeffs;
  Int m = ipow(ctx->p, n);
  for (const auto& [r, c] : x.terms()) {
    if (r.basis_decompose() != std::map<PerfectElement, std::uint32_t>{{r, 1}})
      throw std::invalid_argument("monomial_fast_reduce: support is not basis monomials");
    Int v = mod_pos(c, m);
    if (v != 0) coeffs.emplace(r, v);
  }
  return TruncatedElement::from_canonical(ctx, n, std::move(coeffs));
}

}  // namespace cmr
