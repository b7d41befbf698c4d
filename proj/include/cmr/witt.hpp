#pragma once

// Classical truncated p-typical Witt rings W_n(R) as an independent oracle:
// coordinatewise arithmetic through universal structure polynomials derived
// from the ghost components w_m = sum_{i<=m} p^i Z_i^(p^(m-i)), plus the
// mutually inverse ring isomorphisms between ZR/I^n and W_n(R).

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmr/int_polynomial.hpp"
#include "cmr/integers.hpp"
#include "cmr/perfect_algebra.hpp"
#include "cmr/truncated.hpp"

namespace cmr {

// Ghost polynomial w_m in the variables offset..offset+m of an nvars-wide ring.
inline IntPolynomial ghost_poly(long p, int m, std::size_t nvars, std::size_t offset) {
  IntPolynomial w(nvars);
  for (int i = 0; i <= m; ++i) {
    unsigned e = static_cast<unsigned>(ipow(p, m - i).convert_to<long>());
    w = w + IntPolynomial::variable(nvars, offset + i, e) * ipow(p, i);
  }
  return w;
}

class WittContext {
 public:
  long p;
  int n;
  // 2n-variable polynomials: X_i = var i, Y_i = var n+i.
  std::vector<IntPolynomial> sum, prod, neg;

  // Term counts explode quickly; the oracle only needs desk scale.
  static std::shared_ptr<const WittContext> make(long p, int n) {
    if (!is_prime(p) || p > 5) throw std::invalid_argument("witt: p must be prime, <= 5");
    if (n < 1 || n > 4) throw std::invalid_argument("witt: length must be in [1,4]");
    auto ctx = std::shared_ptr<WittContext>(new WittContext());
    ctx->p = p;
    ctx->n = n;
    const std::size_t v = 2 * static_cast<std::size_t>(n);
    for (int m = 0; m < n; ++m) {
      IntPolynomial gx = ghost_poly(p, m, v, 0);
      IntPolynomial gy = ghost_poly(p, m, v, static_cast<std::size_t>(n));
      Int pm = ipow(p, m);
      auto solve_top = [&](IntPolynomial target, const std::vector<IntPolynomial>& lower) {
        for (int i = 0; i < m; ++i) {
          unsigned e = static_cast<unsigned>(ipow(p, m - i).convert_to<long>());
          target = target - lower[i].pow(e) * ipow(p, i);
        }
        // Integrality of the quotient is the classical theorem; a failure
        // here is a generator bug, not bad input.
        return target.div_exact(pm);
      };
      ctx->sum.push_back(solve_top(gx + gy, ctx->sum));
      ctx->prod.push_back(solve_top(gx * gy, ctx->prod));
      if (p == 2) {
        ctx->neg.push_back(solve_top(-gx, ctx->neg));
      } else {
        // Odd p: w_m(-X) = -w_m(X) termwise, so negation is coordinatewise.
        ctx->neg.push_back(-IntPolynomial::variable(v, static_cast<std::size_t>(m)));
      }
    }
    return ctx;
  }

  std::vector<std::string> var_names() const {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
    for (int i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i));
    return names;
  }

 private:
  WittContext() = default;
};

using WittContextPtr = std::shared_ptr<const WittContext>;

class WittVector {
 public:
  WittVector() = default;

  WittVector(WittContextPtr wctx, ContextPtr actx, std::vector<PerfectElement> coords)
      : wctx_(std::move(wctx)), actx_(std::move(actx)), coords_(std::move(coords)) {
    if (actx_->p != wctx_->p) throw std::invalid_argument("witt: characteristic mismatch");
    if (static_cast<int>(coords_.size()) != wctx_->n)
      throw std::invalid_argument("witt: coordinate length mismatch");
    for (const auto& c : coords_)
      if (!(*c.context() == *actx_)) throw std::invalid_argument("witt: coordinate context");
  }

  static WittVector zero(const WittContextPtr& wctx, const ContextPtr& actx) {
    return WittVector(wctx, actx,
                      std::vector<PerfectElement>(static_cast<std::size_t>(wctx->n),
                                                  actx->zero()));
  }

  static WittVector teichmuller(const WittContextPtr& wctx, const PerfectElement& r) {
    WittVector u = zero(wctx, r.context());
    u.coords_[0] = r;
    return u;
  }

  const std::vector<PerfectElement>& coords() const { return coords_; }
  const WittContextPtr& witt_context() const { return wctx_; }
  const ContextPtr& algebra_context() const { return actx_; }

  WittVector operator+(const WittVector& o) const { return binary(o, wctx_->sum); }
  WittVector operator*(const WittVector& o) const { return binary(o, wctx_->prod); }

  WittVector operator-() const {
    std::vector<PerfectElement> pt = coords_;
    for (int i = 0; i < wctx_->n; ++i) pt.push_back(actx_->zero());
    WittVector r = zero(wctx_, actx_);
    for (int m = 0; m < wctx_->n; ++m) r.coords_[m] = wctx_->neg[m].eval(pt);
    return r;
  }

  WittVector operator-(const WittVector& o) const { return *this + (-o); }

  // Integer scalar action via binary double-and-add over Witt addition.
  WittVector scalar(const Int& m) const {
    if (m < 0) return -scalar(-m);
    WittVector acc = zero(wctx_, actx_);
    for (int bit = static_cast<int>(msb_index(m)); bit >= 0; --bit) {
      acc = acc + acc;
      if (bit_test(m, static_cast<unsigned>(bit))) acc = acc + *this;
    }
    return acc;
  }

  friend bool operator==(const WittVector& a, const WittVector& b) {
    if (a.wctx_->p != b.wctx_->p || a.wctx_->n != b.wctx_->n) return false;
    return a.coords_ == b.coords_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += coords_[i].to_string();
    }
    return s + ")";
  }

 private:
  WittContextPtr wctx_;
  ContextPtr actx_;
  std::vector<PerfectElement> coords_;

  static int msb_index(const Int& m) {
    if (m == 0) return -1;
    return static_cast<int>(boost::multiprecision::msb(m));
  }
  static bool bit_test(const Int& m, unsigned i) { return boost::multiprecision::bit_test(m, i); }

  WittVector binary(const WittVector& o, const std::vector<IntPolynomial>& polys) const {
    if (!(*actx_ == *o.actx_) || wctx_->n != o.wctx_->n || wctx_->p != o.wctx_->p)
      throw std::invalid_argument("witt: context mismatch");
    std::vector<PerfectElement> pt = coords_;
    pt.insert(pt.end(), o.coords_.begin(), o.coords_.end());
    WittVector r = zero(wctx_, actx_);
    for (int m = 0; m < wctx_->n; ++m) r.coords_[m] = polys[m].eval(pt);
    return r;
  }
};

// Length-2 isomorphism: x -> (pi(L), pi(delta(L))) on the canonical lift L.
// Well-defined because delta maps I^2 into I.
inline WittVector alpha2(const TruncatedElement& x, const WittContextPtr& wctx) {
  if (x.precision() != 2 || wctx->n != 2) throw std::invalid_argument("alpha2: precision != 2");
  MonoidAlgebraElement lift = x.lift();
  std::vector<PerfectElement> coords{lift.augmentation(), lift.delta().augmentation()};
  return WittVector(wctx, x.context(), std::move(coords));
}

// General isomorphism ZR/I^n -> W_n(R): evaluate the canonical form
// sum c_b [b] with Witt arithmetic, brackets as Teichmueller vectors.
inline WittVector alpha_n(const TruncatedElement& x, const WittContextPtr& wctx) {
  if (wctx->n != x.precision() || wctx->p != x.context()->p)
    throw std::invalid_argument("alpha_n: context mismatch");
  WittVector acc = WittVector::zero(wctx, x.context());
  for (const auto& [b, c] : x.coeffs())
    acc = acc + WittVector::teichmuller(wctx, b).scalar(c);
  return acc;
}

// Inverse: (x_0, ..., x_{n-1}) -> sum p^i [x_i^(p^-i)] mod I^n.
inline TruncatedElement alpha_n_inverse(const WittVector& u) {
  std::vector<PerfectElement> digits;
  PerfectElement d = u.algebra_context()->zero();
  for (std::size_t i = 0; i < u.coords().size(); ++i) {
    d = u.coords()[i];
    for (std::size_t j = 0; j < i; ++j) d = d.pth_root();
    digits.push_back(d);
  }
  return TruncatedElement::from_digits(u.algebra_context(), digits);
}

}  // namespace cmr
