#pragma once

// Shared generators for the property tests. Everything is seeded, so runs
// are deterministic.

#include <random>
#include <vector>

#include "cmr/cmr.hpp"

namespace ts {

using Rng = std::mt19937;

inline cmr::PerfectElement random_ff(const cmr::ContextPtr& ctx, Rng& rng) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(ctx->degree));
  std::uniform_int_distribution<long> d(0, ctx->p - 1);
  for (auto& x : c) x = static_cast<std::uint32_t>(d(rng));
  return ctx->from_ff_coeffs(c);
}

inline cmr::Monomial random_monomial(const cmr::ContextPtr& ctx, Rng& rng, int max_num = 8,
                                     int max_den_pow = 3) {
  cmr::Monomial m(ctx->vars.size());
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(0, max_den_pow);
  for (auto& e : m) {
    e.num = num(rng);
    e.den = 1;
    for (int i = den(rng); i > 0; --i) e.den *= ctx->p;
    e.normalize(ctx->p);
  }
  return m;
}

inline cmr::PerfectElement random_element(const cmr::ContextPtr& ctx, Rng& rng) {
  if (ctx->is_finite_field()) return random_ff(ctx, rng);
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<long> scal(1, ctx->p - 1);
  cmr::PerfectElement acc = ctx->zero();
  for (int i = nterms(rng); i > 0; --i)
    acc = acc + ctx->from_monomial(random_monomial(ctx, rng),
                                   static_cast<std::uint32_t>(scal(rng)));
  return acc;
}

inline cmr::MonoidAlgebraElement random_zr(const cmr::ContextPtr& ctx, Rng& rng,
                                           int max_terms = 4, long max_coeff = 5) {
  cmr::MonoidAlgebraElement x(ctx);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  for (int i = nterms(rng); i > 0; --i)
    x = x + cmr::MonoidAlgebraElement::bracket(random_element(ctx, rng)) * cmr::Int(coeff(rng));
  return x;
}

// Element of I: subtract the bracket of the augmentation image.
inline cmr::MonoidAlgebraElement random_ideal(const cmr::ContextPtr& ctx, Rng& rng) {
  cmr::MonoidAlgebraElement x = random_zr(ctx, rng);
  return x - cmr::MonoidAlgebraElement::bracket(x.augmentation());
}

inline cmr::MonoidAlgebraElement ideal_generator(const cmr::PerfectElement& r,
                                                 const cmr::PerfectElement& s) {
  using E = cmr::MonoidAlgebraElement;
  return E::bracket(r) + E::bracket(s) - E::bracket(r + s);
}

// Random n-fold product of ideal generators (an element of I^n).
inline cmr::MonoidAlgebraElement random_ideal_power(const cmr::ContextPtr& ctx, Rng& rng,
                                                    int n) {
  cmr::MonoidAlgebraElement x = cmr::MonoidAlgebraElement::from_int(ctx, 1);
  for (int i = 0; i < n; ++i)
    x = x * ideal_generator(random_element(ctx, rng), random_element(ctx, rng));
  return x;
}

inline cmr::TruncatedElement random_trunc(const cmr::ContextPtr& ctx, int n, Rng& rng) {
  return cmr::TruncatedElement::reduce(random_zr(ctx, rng), n);
}

}  // namespace ts
