#pragma once

// Concrete perfect F_p-algebras: finite fields F_{p^k} in a power basis, and
// perfect polynomial closures F_p[t_1^(1/p^inf), ..., t_d^(1/p^inf)] with the
// monomial basis. Frobenius is bijective on both; p-th roots are exact.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmr/integers.hpp"

namespace cmr {

enum class AlgebraKind { FiniteField, PerfectClosure };

class AlgebraContext;
class PerfectElement;
using ContextPtr = std::shared_ptr<const AlgebraContext>;

// Exponent num/den with den a power of p, num >= 0, and p dividing num only
// when den == 1. Normalized form is unique, so exponents compare exactly.
struct ExpRat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  void normalize(long p) {
    if (num == 0) {
      den = 1;
      return;
    }
    while (den > 1 && num % p == 0) {
      num /= p;
      den /= p;
    }
  }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const ExpRat& a, const ExpRat& b) = default;
};

inline int cmp_exp(const ExpRat& a, const ExpRat& b) {
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

inline ExpRat exp_add(const ExpRat& a, const ExpRat& b, long p) {
  ExpRat r;
  r.den = std::max(a.den, b.den);
  r.num = a.num * (r.den / a.den) + b.num * (r.den / b.den);
  r.normalize(p);
  return r;
}

// Monomial in the closure variables; entry i is the exponent of t_i.
using Monomial = std::vector<ExpRat>;

// Graded order: total degree first, then componentwise exponents.
inline int cmp_monomial(const Monomial& a, const Monomial& b) {
  __int128 da = 0, db = 0;
  std::int64_t ca = 1, cb = 1;
  for (const auto& e : a) ca = std::max(ca, e.den);
  for (const auto& e : b) cb = std::max(cb, e.den);
  for (const auto& e : a) da += static_cast<__int128>(e.num) * (ca / e.den);
  for (const auto& e : b) db += static_cast<__int128>(e.num) * (cb / e.den);
  __int128 l = da * cb, r = db * ca;
  if (l != r) return l < r ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp_exp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

inline bool operator<(const Monomial& a, const Monomial& b) { return cmp_monomial(a, b) < 0; }

class PerfectElement {
 public:
  PerfectElement() = default;

  const ContextPtr& context() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  PerfectElement operator+(const PerfectElement& o) const;
  PerfectElement operator-() const;
  PerfectElement operator-(const PerfectElement& o) const { return *this + (-o); }
  PerfectElement operator*(const PerfectElement& o) const;
  PerfectElement pow(const Int& e) const;
  PerfectElement frobenius() const;
  PerfectElement pth_root() const;
  PerfectElement inverse() const;
  bool invertible() const;

  // Coordinates in the distinguished basis; finite support, no zeros.
  std::map<PerfectElement, std::uint32_t> basis_decompose() const;

  std::string to_string() const;

  friend bool operator==(const PerfectElement& a, const PerfectElement& b);
  friend bool operator<(const PerfectElement& a, const PerfectElement& b);

 private:
  friend class AlgebraContext;
  friend class AlgebraHom;

  ContextPtr ctx_;
  std::vector<std::uint32_t> ff_;            // finite field: power-basis coords
  std::map<Monomial, std::uint32_t> terms_;  // closure: monomial -> scalar

  void require_same(const PerfectElement& o) const;
};

class AlgebraContext : public std::enable_shared_from_this<AlgebraContext> {
 public:
  AlgebraKind kind;
  long p = 2;
  int degree = 1;                       // k; finite field only
  std::vector<std::uint32_t> modulus;   // k+1 coeffs, monic; finite field only
  std::vector<std::string> vars;        // closure only

  static ContextPtr finite_field(long p, int k, std::vector<std::uint32_t> mod_coeffs);
  static ContextPtr prime_field(long p) { return finite_field(p, 1, {0, 1}); }
  static ContextPtr perfect_closure(long p, std::vector<std::string> names);

  bool operator==(const AlgebraContext& o) const {
    return kind == o.kind && p == o.p && degree == o.degree && modulus == o.modulus &&
           vars == o.vars;
  }

  bool is_finite_field() const { return kind == AlgebraKind::FiniteField; }
  Int size() const { return ipow(p, degree); }  // finite field only

  PerfectElement zero() const;
  PerfectElement one() const { return from_scalar(1); }
  PerfectElement from_scalar(long c) const;
  PerfectElement generator() const;  // g, finite field with k >= 2
  PerfectElement from_ff_coeffs(std::vector<std::uint32_t> coeffs) const;
  PerfectElement variable(std::size_t i) const;  // t_i, closure
  PerfectElement from_monomial(Monomial m, std::uint32_t scalar = 1) const;

  // Power basis 1, g, ..., g^(k-1); finite field only (the closure basis is
  // the infinite set of monomials).
  std::vector<PerfectElement> basis() const;
  // All p^k elements in canonical ascending order; finite field only.
  std::vector<PerfectElement> all_elements() const;

  std::string description() const;

 private:
  AlgebraContext() = default;
  friend class PerfectElement;

  // FF helpers work on raw coefficient vectors mod p.
  std::vector<std::uint32_t> ff_mul(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b) const;
};

// --- AlgebraContext -------------------------------------------------------

namespace detail {

// Remainder of a by monic b over F_p (coefficient vectors, degree = size-1).
inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b, long p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    std::int64_t v = a[i];
    if (v == 0) continue;
    a[i] = 0;
    for (int t = 0; t < db; ++t) {
      std::int64_t w = (static_cast<std::int64_t>(a[i - db + t]) - v * b[t]) % p;
      if (w < 0) w += p;
      a[i - db + t] = static_cast<std::uint32_t>(w);
    }
  }
  a.resize(db);
  return a;
}

inline bool poly_is_zero(const std::vector<std::uint32_t>& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..k/2.
inline bool is_irreducible(const std::vector<std::uint32_t>& m, long p) {
  const int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    std::vector<std::uint32_t> f(d + 1, 0);
    f[d] = 1;
    Int count = ipow(p, d);
    for (Int idx = 0; idx < count; ++idx) {
      Int v = idx;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_is_zero(poly_mod(m, f, p))) return false;
    }
  }
  return true;
}

}  // namespace detail

inline ContextPtr AlgebraContext::finite_field(long p, int k,
                                               std::vector<std::uint32_t> mod_coeffs) {
  if (!is_prime(p)) throw std::invalid_argument("finite_field: p is not prime");
  if (k < 1) throw std::invalid_argument("finite_field: degree must be >= 1");
  if (static_cast<int>(mod_coeffs.size()) != k + 1)
    throw std::invalid_argument("finite_field: modulus degree mismatch");
  for (auto& c : mod_coeffs) c %= static_cast<std::uint32_t>(p);
  if (mod_coeffs[k] != 1) throw std::invalid_argument("finite_field: modulus must be monic");
  if (!detail::is_irreducible(mod_coeffs, p))
    throw std::invalid_argument("finite_field: modulus is reducible over F_p");
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext());
  ctx->kind = AlgebraKind::FiniteField;
  ctx->p = p;
  ctx->degree = k;
  ctx->modulus = std::move(mod_coeffs);
  return ctx;
}

inline ContextPtr AlgebraContext::perfect_closure(long p, std::vector<std::string> names) {
  if (!is_prime(p)) throw std::invalid_argument("perfect_closure: p is not prime");
  if (names.empty()) throw std::invalid_argument("perfect_closure: need at least one variable");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("perfect_closure: duplicate variable name");
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext());
  ctx->kind = AlgebraKind::PerfectClosure;
  ctx->p = p;
  ctx->vars = std::move(names);
  return ctx;
}

inline PerfectElement AlgebraContext::zero() const {
  PerfectElement e;
  e.ctx_ = shared_from_this();
  if (kind == AlgebraKind::FiniteField) e.ff_.assign(degree, 0);
  return e;
}

inline PerfectElement AlgebraContext::from_scalar(long c) const {
  PerfectElement e = zero();
  std::uint32_t r = static_cast<std::uint32_t>(((c % p) + p) % p);
  if (kind == AlgebraKind::FiniteField) {
    e.ff_[0] = r;
  } else if (r != 0) {
    e.terms_.emplace(Monomial(vars.size()), r);
  }
  return e;
}

inline PerfectElement AlgebraContext::generator() const {
  if (kind != AlgebraKind::FiniteField || degree < 2)
    throw std::invalid_argument("generator: context has no field generator");
  PerfectElement e = zero();
  e.ff_[1] = 1;
  return e;
}

inline PerfectElement AlgebraContext::from_ff_coeffs(std::vector<std::uint32_t> coeffs) const {
  if (kind != AlgebraKind::FiniteField) throw std::invalid_argument("from_ff_coeffs: not a field");
  if (static_cast<int>(coeffs.size()) != degree)
    throw std::invalid_argument("from_ff_coeffs: wrong length");
  PerfectElement e = zero();
  for (int i = 0; i < degree; ++i) e.ff_[i] = coeffs[i] % static_cast<std::uint32_t>(p);
  return e;
}

inline PerfectElement AlgebraContext::variable(std::size_t i) const {
  if (kind != AlgebraKind::PerfectClosure || i >= vars.size())
    throw std::invalid_argument("variable: bad index");
  Monomial m(vars.size());
  m[i] = ExpRat{1, 1};
  return from_monomial(std::move(m));
}

inline PerfectElement AlgebraContext::from_monomial(Monomial m, std::uint32_t scalar) const {
  if (kind != AlgebraKind::PerfectClosure)
    throw std::invalid_argument("from_monomial: not a perfect closure");
  if (m.size() != vars.size()) throw std::invalid_argument("from_monomial: wrong arity");
  PerfectElement e = zero();
  scalar %= static_cast<std::uint32_t>(p);
  if (scalar != 0) e.terms_.emplace(std::move(m), scalar);
  return e;
}

inline std::vector<PerfectElement> AlgebraContext::basis() const {
  if (kind != AlgebraKind::FiniteField)
    throw std::invalid_argument("basis: enumerable only for finite fields");
  std::vector<PerfectElement> b;
  for (int i = 0; i < degree; ++i) {
    PerfectElement e = zero();
    e.ff_[i] = 1;
    b.push_back(std::move(e));
  }
  return b;
}

inline std::vector<PerfectElement> AlgebraContext::all_elements() const {
  if (kind != AlgebraKind::FiniteField)
    throw std::invalid_argument("all_elements: infinite algebra");
  std::vector<PerfectElement> out;
  Int total = size();
  for (Int v = 0; v < total; ++v) {
    PerfectElement e = zero();
    Int w = v;
    for (int i = 0; i < degree; ++i) {
      e.ff_[i] = static_cast<std::uint32_t>(w % p);
      w /= p;
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<std::uint32_t> AlgebraContext::ff_mul(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint32_t> c(2 * degree - 1, 0);
  for (int i = 0; i < degree; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < degree; ++j) {
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return detail::poly_mod(std::move(c), modulus, p);
}

// --- PerfectElement -------------------------------------------------------

inline void PerfectElement::require_same(const PerfectElement& o) const {
  if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
    throw std::invalid_argument("coefficient-algebra context mismatch");
}

inline bool PerfectElement::is_zero() const {
  if (ctx_->kind == AlgebraKind::FiniteField) return detail::poly_is_zero(ff_);
  return terms_.empty();
}

inline bool PerfectElement::is_one() const { return *this == ctx_->one(); }

inline PerfectElement PerfectElement::operator+(const PerfectElement& o) const {
  require_same(o);
  PerfectElement r = *this;
  const long p = ctx_->p;
  if (ctx_->kind == AlgebraKind::FiniteField) {
    for (std::size_t i = 0; i < r.ff_.size(); ++i)
      r.ff_[i] = static_cast<std::uint32_t>((r.ff_[i] + o.ff_[i]) % p);
  } else {
    for (const auto& [m, c] : o.terms_) {
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, c);
      } else {
        it->second = static_cast<std::uint32_t>((it->second + c) % p);
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

inline PerfectElement PerfectElement::operator-() const {
  PerfectElement r = *this;
  const long p = ctx_->p;
  if (ctx_->kind == AlgebraKind::FiniteField) {
    for (auto& c : r.ff_) c = static_cast<std::uint32_t>((p - c) % p);
  } else {
    for (auto& [m, c] : r.terms_) c = static_cast<std::uint32_t>(p - c);
  }
  return r;
}

inline PerfectElement PerfectElement::operator*(const PerfectElement& o) const {
  require_same(o);
  PerfectElement r = ctx_->zero();
  const long p = ctx_->p;
  if (ctx_->kind == AlgebraKind::FiniteField) {
    r.ff_ = ctx_->ff_mul(ff_, o.ff_);
  } else {
    for (const auto& [m1, c1] : terms_) {
      for (const auto& [m2, c2] : o.terms_) {
        Monomial m(m1.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = exp_add(m1[i], m2[i], p);
        std::uint32_t c = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(c1) * c2) % p);
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
          if (c != 0) r.terms_.emplace(std::move(m), c);
        } else {
          it->second = static_cast<std::uint32_t>((it->second + c) % p);
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
  }
  return r;
}

inline PerfectElement PerfectElement::pow(const Int& e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  PerfectElement acc = ctx_->one();
  PerfectElement base = *this;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

inline PerfectElement PerfectElement::frobenius() const {
  const long p = ctx_->p;
  if (ctx_->kind == AlgebraKind::FiniteField) return pow(p);
  PerfectElement r = ctx_->zero();
  for (const auto& [m, c] : terms_) {
    Monomial mp = m;
    for (auto& e : mp) {
      e.num *= p;
      e.normalize(p);
    }
    r.terms_.emplace(std::move(mp), c);  // c^p = c in F_p
  }
  return r;
}

inline PerfectElement PerfectElement::pth_root() const {
  const long p = ctx_->p;
  if (ctx_->kind == AlgebraKind::FiniteField) {
    // Frobenius has order k, so its inverse is x -> x^(p^(k-1)).
    return pow(ipow(p, ctx_->degree - 1));
  }
  PerfectElement r = ctx_->zero();
  for (const auto& [m, c] : terms_) {
    Monomial mr = m;
    for (auto& e : mr) {
      e.den *= p;
      e.normalize(p);
    }
    r.terms_.emplace(std::move(mr), c);
  }
  return r;
}

inline bool PerfectElement::invertible() const {
  if (ctx_->kind == AlgebraKind::FiniteField) return !is_zero();
  // Units of the closure are the nonzero constants.
  return terms_.size() == 1 && terms_.begin()->first == Monomial(ctx_->vars.size());
}

inline PerfectElement PerfectElement::inverse() const {
  if (!invertible()) throw std::domain_error("inverse: element is not a unit");
  const long p = ctx_->p;
  if (ctx_->kind == AlgebraKind::FiniteField) return pow(ctx_->size() - 2);
  long c = terms_.begin()->second;
  Int ci = inv_mod_pow(c, p, 1);
  return ctx_->from_scalar(ci.convert_to<long>());
}

inline std::map<PerfectElement, std::uint32_t> PerfectElement::basis_decompose() const {
  std::map<PerfectElement, std::uint32_t> out;
  if (ctx_->kind == AlgebraKind::FiniteField) {
    for (int i = 0; i < ctx_->degree; ++i) {
      if (ff_[i] == 0) continue;
      PerfectElement b = ctx_->zero();
      b.ff_[i] = 1;
      out.emplace(std::move(b), ff_[i]);
    }
  } else {
    for (const auto& [m, c] : terms_) out.emplace(ctx_->from_monomial(m), c);
  }
  return out;
}

inline bool operator==(const PerfectElement& a, const PerfectElement& b) {
  a.require_same(b);
  return a.ff_ == b.ff_ && a.terms_ == b.terms_;
}

inline bool operator<(const PerfectElement& a, const PerfectElement& b) {
  a.require_same(b);
  if (a.ctx_->kind == AlgebraKind::FiniteField) {
    // Value order: compare coordinates from the top power down.
    return std::lexicographical_compare(a.ff_.rbegin(), a.ff_.rend(), b.ff_.rbegin(),
                                        b.ff_.rend());
  }
  auto ai = a.terms_.begin(), bi = b.terms_.begin();
  for (; ai != a.terms_.end() && bi != b.terms_.end(); ++ai, ++bi) {
    int c = cmp_monomial(ai->first, bi->first);
    if (c != 0) return c < 0;
    if (ai->second != bi->second) return ai->second < bi->second;
  }
  return ai == a.terms_.end() && bi != b.terms_.end();
}

namespace detail {

inline std::string monomial_literal(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].is_zero()) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i].num == 1 && m[i].den == 1) continue;
    if (m[i].is_integer())
      s += "^" + std::to_string(m[i].num);
    else
      s += "^(" + std::to_string(m[i].num) + "/" + std::to_string(m[i].den) + ")";
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

inline std::string PerfectElement::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto append = [&s](const std::string& piece) {
    if (!s.empty()) s += "+";
    s += piece;
  };
  if (ctx_->kind == AlgebraKind::FiniteField) {
    for (int i = ctx_->degree - 1; i >= 0; --i) {
      if (ff_[i] == 0) continue;
      std::string piece;
      if (i == 0) {
        piece = std::to_string(ff_[i]);
      } else {
        if (ff_[i] != 1) piece = std::to_string(ff_[i]) + "*";
        piece += "g";
        if (i > 1) piece += "^" + std::to_string(i);
      }
      append(piece);
    }
  } else {
    // Highest degree first, matching the finite-field convention.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono = detail::monomial_literal(it->first, ctx_->vars);
      std::string piece;
      if (mono == "1") {
        piece = std::to_string(it->second);
      } else {
        if (it->second != 1) piece = std::to_string(it->second) + "*";
        piece += mono;
      }
      append(piece);
    }
  }
  return s;
}

inline std::string AlgebraContext::description() const {
  if (kind == AlgebraKind::FiniteField) {
    if (degree == 1) return "gf(" + std::to_string(p) + ")";
    std::string mod;
    for (int i = degree; i >= 0; --i) {
      if (modulus[i] == 0) continue;
      if (!mod.empty()) mod += "+";
      if (i == 0) {
        mod += std::to_string(modulus[i]);
      } else {
        if (modulus[i] != 1) mod += std::to_string(modulus[i]) + "*";
        mod += "x";
        if (i > 1) mod += "^" + std::to_string(i);
      }
    }
    return "gf(" + ipow(p, degree).str() + "," + mod + ")";
  }
  std::string s = "perfect(" + std::to_string(p) + ";";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += vars[i];
  }
  return s + ")";
}

// Algebra homomorphism fixing F_p, given by images of the generators. For a
// finite-field source the generator image must satisfy the source modulus;
// perfect-closure sources are free on their variables.
class AlgebraHom {
 public:
  AlgebraHom(ContextPtr src, ContextPtr dst, std::vector<PerfectElement> gen_images)
      : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(gen_images)) {
    if (src_->p != dst_->p) throw std::invalid_argument("hom: characteristic mismatch");
    for (const auto& im : images_)
      if (!(*im.context() == *dst_)) throw std::invalid_argument("hom: image context mismatch");
    if (src_->kind == AlgebraKind::FiniteField) {
      std::size_t need = src_->degree >= 2 ? 1 : 0;
      if (images_.size() != need)
        throw std::invalid_argument("hom: expected one generator image");
      if (need == 1) {
        PerfectElement acc = dst_->zero();
        for (int i = 0; i <= src_->degree; ++i) {
          if (src_->modulus[i] == 0) continue;
          acc = acc + dst_->from_scalar(src_->modulus[i]) * images_[0].pow(i);
        }
        if (!acc.is_zero())
          throw std::invalid_argument("hom: generator image violates the modulus relation");
      }
    } else {
      if (images_.size() != src_->vars.size())
        throw std::invalid_argument("hom: expected one image per variable");
    }
  }

  static AlgebraHom identity(const ContextPtr& ctx) {
    std::vector<PerfectElement> im;
    if (ctx->kind == AlgebraKind::FiniteField) {
      if (ctx->degree >= 2) im.push_back(ctx->generator());
    } else {
      for (std::size_t i = 0; i < ctx->vars.size(); ++i) im.push_back(ctx->variable(i));
    }
    return AlgebraHom(ctx, ctx, std::move(im));
  }

  const ContextPtr& source() const { return src_; }
  const ContextPtr& target() const { return dst_; }

  PerfectElement apply(const PerfectElement& a) const {
    if (!(*a.context() == *src_)) throw std::invalid_argument("hom: element context mismatch");
    if (src_->kind == AlgebraKind::FiniteField) {
      PerfectElement acc = dst_->zero();
      for (int i = 0; i < src_->degree; ++i) {
        if (a.ff_[i] == 0) continue;
        PerfectElement term = dst_->from_scalar(a.ff_[i]);
        if (i > 0) term = term * images_[0].pow(i);
        acc = acc + term;
      }
      return acc;
    }
    PerfectElement acc = dst_->zero();
    for (const auto& [m, c] : a.terms_) {
      PerfectElement term = dst_->from_scalar(c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_zero()) continue;
        PerfectElement f = images_[i].pow(m[i].num);
        for (std::int64_t d = m[i].den; d > 1; d /= src_->p) f = f.pth_root();
        term = term * f;
      }
      acc = acc + term;
    }
    return acc;
  }

 private:
  ContextPtr src_, dst_;
  std::vector<PerfectElement> images_;
};

}  // namespace cmr
