// Acceptance suite: exact, oracle-based checks at desk scale. Prints one
// PASS/FAIL line per criterion; exit status is the number of failures.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cmr/cmr.hpp"
#include "test_support.hpp"

using namespace cmr;
using E = MonoidAlgebraElement;
using T = TruncatedElement;

namespace {

int g_fails = 0;

void criterion(int num, const std::string& desc, bool ok) {
  std::printf("%s %2d: %s\n", ok ? "PASS" : "FAIL", num, desc.c_str());
  if (!ok) ++g_fails;
}

ContextPtr f2() { return AlgebraContext::prime_field(2); }
ContextPtr f4() { return AlgebraContext::finite_field(2, 2, {1, 1, 1}); }
ContextPtr f8() { return AlgebraContext::finite_field(2, 3, {1, 1, 0, 1}); }
ContextPtr f9() { return AlgebraContext::finite_field(3, 2, {2, 2, 1}); }

// 1. Generated S1, P1 match the closed length-2 formulas for p = 2, 3, 5.
bool c1() {
  for (long p : {2L, 3L, 5L}) {
    auto w = WittContext::make(p, 2);
    auto X0 = IntPolynomial::variable(4, 0);
    auto X1 = IntPolynomial::variable(4, 1);
    auto Y0 = IntPolynomial::variable(4, 2);
    auto Y1 = IntPolynomial::variable(4, 3);
    IntPolynomial s1 = X1 + Y1;
    for (long nu = 1; nu < p; ++nu)
      s1 = s1 - X0.pow(static_cast<unsigned>(nu)) * Y0.pow(static_cast<unsigned>(p - nu)) *
                    (binomial(static_cast<unsigned>(p), static_cast<unsigned>(nu)) / p);
    IntPolynomial p1 = X0.pow(static_cast<unsigned>(p)) * Y1 +
                       Y0.pow(static_cast<unsigned>(p)) * X1 + X1 * Y1 * Int(p);
    if (!(w->sum[0] == X0 + Y0) || !(w->prod[0] == X0 * Y0)) return false;
    if (!(w->sum[1] == s1) || !(w->prod[1] == p1)) return false;
  }
  return true;
}

// 2. Ghost identities over Z for p in {2,3}, n <= 3.
bool c2() {
  for (long p : {2L, 3L}) {
    auto w = WittContext::make(p, 3);
    std::size_t v = 6;
    for (int m = 0; m < 3; ++m) {
      IntPolynomial ghost = ghost_poly(p, m, static_cast<std::size_t>(m) + 1, 0);
      std::vector<IntPolynomial> S(w->sum.begin(), w->sum.begin() + m + 1);
      std::vector<IntPolynomial> P(w->prod.begin(), w->prod.begin() + m + 1);
      if (!(ghost.compose(S) == ghost_poly(p, m, v, 0) + ghost_poly(p, m, v, 3))) return false;
      if (!(ghost.compose(P) == ghost_poly(p, m, v, 0) * ghost_poly(p, m, v, 3))) return false;
    }
  }
  return true;
}

// 3. alpha_n is a ring isomorphism: exhaustive on F2 at n = 3, and on 200
// random pairs for F4 and F9 at n = 2.
bool c3() {
  auto w3 = WittContext::make(2, 3);
  auto ctx2 = f2();
  std::vector<T> elems;
  std::vector<WittVector> images;
  for (Int c = 0; c < 8; ++c) {
    elems.push_back(T::from_int(ctx2, 3, c));
    images.push_back(alpha_n(elems.back(), w3));
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      if (images[i] == images[j]) return false;
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (!(alpha_n(x + y, w3) == alpha_n(x, w3) + alpha_n(y, w3))) return false;
      if (!(alpha_n(x * y, w3) == alpha_n(x, w3) * alpha_n(y, w3))) return false;
    }
  ts::Rng rng(1001);
  for (const auto& actx : {f4(), f9()}) {
    auto w2 = WittContext::make(actx->p, 2);
    for (int i = 0; i < 200; ++i) {
      auto x = ts::random_trunc(actx, 2, rng);
      auto y = ts::random_trunc(actx, 2, rng);
      if (!(alpha_n(x + y, w2) == alpha_n(x, w2) + alpha_n(y, w2))) return false;
      if (!(alpha_n(x * y, w2) == alpha_n(x, w2) * alpha_n(y, w2))) return false;
    }
  }
  return true;
}

// 4. alpha2 = (pi, delta-bar) agrees with alpha_n at n = 2 on all sums and
// products of F4 elements a[1] + b[g], a, b in [0,4).
bool c4() {
  auto ctx = f4();
  auto w2 = WittContext::make(2, 2);
  auto g = ctx->generator();
  std::vector<T> elems;
  for (Int a = 0; a < 4; ++a)
    for (Int b = 0; b < 4; ++b)
      elems.push_back(T::reduce(E::from_int(ctx, a) + E::bracket(g) * b, 2));
  for (const auto& x : elems)
    for (const auto& y : elems) {
      auto s = x + y;
      auto m = x * y;
      if (!(alpha2(s, w2) == alpha_n(s, w2))) return false;
      if (!(alpha2(m, w2) == alpha_n(m, w2))) return false;
    }
  return true;
}

// 5. Strictness at n = 3 over F4: p-injectivity and divide-after-multiply.
bool c5() {
  auto ctx = f4();
  ts::Rng rng(1005);
  for (int i = 0; i < 500; ++i) {
    E x = (i % 2 == 0) ? ts::random_zr(ctx, rng) : ts::random_ideal_power(ctx, rng, 2);
    if (T::reduce(x * Int(2), 3).is_zero() && !T::reduce(x, 2).is_zero()) return false;
    if (!(T::divide_by_p(x * Int(2), 3) == T::reduce(x, 2))) return false;
  }
  return true;
}

// 6. from_digits(teichmuller_expand(x)) = x: exhaustive on ZF2/I^4 and on
// 500 random elements of ZF4/I^3.
bool c6() {
  auto ctx2 = f2();
  for (Int c = 0; c < 16; ++c) {
    auto x = T::from_int(ctx2, 4, c);
    if (!(T::from_digits(ctx2, x.teichmuller_digits()) == x)) return false;
  }
  auto ctx = f4();
  ts::Rng rng(1006);
  for (int i = 0; i < 500; ++i) {
    auto x = ts::random_trunc(ctx, 3, rng);
    if (!(T::from_digits(ctx, x.teichmuller_digits()) == x)) return false;
  }
  return true;
}

// 7. Teichmueller-limit oracle on F8 (n <= 3) and the perfect closure
// (n = 2), including the golden value reduce([1+t], 2) = [1]+[t]+2[t^(1/2)].
bool c7() {
  auto ctx = f8();
  for (int n = 1; n <= 3; ++n) {
    unsigned e = static_cast<unsigned>(ipow(2, n - 1).convert_to<long>());
    for (const auto& r : ctx->all_elements()) {
      PerfectElement s = r;
      for (int j = 0; j < n - 1; ++j) s = s.pth_root();
      E lift(ctx);
      for (const auto& [b, c] : s.basis_decompose()) lift = lift + E::bracket(b) * Int(c);
      if (!(T::reduce(lift.pow_u(e), n) == T::reduce(E::bracket(r), n))) return false;
    }
  }
  auto cl = AlgebraContext::perfect_closure(2, {"t"});
  auto t = cl->variable(0);
  for (const auto& r : {t, cl->one() + t, t + t * t}) {
    PerfectElement s = r.pth_root();
    E lift(cl);
    for (const auto& [b, c] : s.basis_decompose()) lift = lift + E::bracket(b) * Int(c);
    if (!(T::reduce(lift.pow_u(2), 2) == T::reduce(E::bracket(r), 2))) return false;
  }
  auto golden = T::from_canonical(
      cl, 2, {{cl->one(), 1}, {t.pth_root(), 2}, {t, 1}});
  return T::reduce(E::bracket(cl->one() + t), 2) == golden;
}

// 8. Monomial fast path over F2[t^(2^-inf)]: general reduce at n = 3 equals
// coefficientwise reduction mod 8 on 200 random monomial combinations.
bool c8() {
  auto cl = AlgebraContext::perfect_closure(2, {"t"});
  ts::Rng rng(1008);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::uniform_int_distribution<int> nterms(1, 6);
  for (int i = 0; i < 200; ++i) {
    E x(cl);
    for (int j = nterms(rng); j > 0; --j)
      x = x + E::bracket(cl->from_monomial(ts::random_monomial(cl, rng))) * Int(coeff(rng));
    if (!(T::reduce(x, 3) == monomial_fast_reduce(x, 3))) return false;
  }
  return true;
}

// 9. Idempotent suite over F2, F3, F4 for n <= 3, with golden values and the
// explicit odd-p formula; the p = 2 formula discrepancy is a documented
// finding (see selftest), not a failure.
bool c9() {
  for (const char* spec : {"gf(2)", "gf(3)", "gf(4)"}) {
    auto monoid = FiniteMonoid::make(parse_ring_spec(spec));
    auto a1 = kernel_ideal_mod_pn(monoid, 1);
    auto e1 = unit_idempotent_mod_p(monoid, a1);
    for (int n = 1; n <= 3; ++n) {
      ZVec e;
      try {
        e = newton_lift_idempotent(monoid, e1, n);  // throws unless e^2 = e and e g = g
      } catch (const std::logic_error&) {
        return false;
      }
      if (!splitting_check(monoid, e, n).ok()) return false;
      if (monoid.ctx->p == 3 && !(explicit_e_prime_field(3, n, monoid) == e)) return false;
      if (monoid.ctx->p == 2 && monoid.ctx->degree == 1 && !(e == ZVec{1, 0})) return false;
    }
  }
  auto m3 = FiniteMonoid::make(parse_ring_spec("gf(3)"));
  auto e32 = newton_lift_idempotent(m3, unit_idempotent_mod_p(m3, kernel_ideal_mod_pn(m3, 1)), 2);
  if (!(e32 == ZVec{0, 5, 5})) return false;  // 5[1]+5[2] mod 9
  bool refused = false;
  try {
    explicit_e_prime_field(2, 2, FiniteMonoid::make(parse_ring_spec("gf(2)")));
  } catch (const std::domain_error&) {
    refused = true;
  }
  return refused;
}

// 10. DVR laws over F4 at n = 4 on 300 random pairs with v(x)+v(y) < 4, and
// inversion succeeding exactly at valuation 0.
bool c10() {
  auto ctx = f4();
  const int n = 4;
  ts::Rng rng(1010);
  std::uniform_int_distribution<int> val(0, n - 1);
  auto random_with_valuation = [&](int v) {
    std::vector<PerfectElement> digits(n, ctx->zero());
    for (int i = v; i < n; ++i) digits[static_cast<std::size_t>(i)] = ts::random_ff(ctx, rng);
    while (digits[static_cast<std::size_t>(v)].is_zero())
      digits[static_cast<std::size_t>(v)] = ts::random_ff(ctx, rng);
    return T::from_digits(ctx, digits);
  };
  int done = 0;
  while (done < 300) {
    int vx = val(rng), vy = val(rng);
    if (vx + vy >= n) continue;
    auto x = random_with_valuation(vx);
    auto y = random_with_valuation(vy);
    if (x.valuation() != vx || y.valuation() != vy) return false;
    auto vxy = (x * y).valuation();
    if (!vxy || *vxy != vx + vy) return false;
    auto vsum = (x + y).valuation();
    if (vsum && *vsum < std::min(vx, vy)) return false;
    if (vx == 0) {
      if (!(x * x.invert() == T::one(ctx, n))) return false;
    } else {
      try {
        x.invert();
        return false;
      } catch (const std::domain_error&) {
      }
    }
    ++done;
  }
  return true;
}

// 11. Graded additivity r -> p^n [r]: kernel of the bracket relation and
// injectivity on F4, n <= 2.
bool c11() {
  auto ctx = f4();
  auto all = ctx->all_elements();
  for (int n = 0; n <= 2; ++n) {
    Int pn = ipow(2, n);
    for (const auto& r : all)
      for (const auto& s : all) {
        if (!T::reduce(ts::ideal_generator(r, s) * pn, n + 1).is_zero()) return false;
        if (!(r == s) &&
            T::reduce(E::bracket(r) * pn, n + 1) == T::reduce(E::bracket(s) * pn, n + 1))
          return false;
      }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "length-2 witt structure polynomials match the closed form (p = 2, 3, 5)", c1());
  criterion(2, "ghost identities for sum and product polynomials (p = 2, 3; n <= 3)", c2());
  criterion(3, "alpha_n ring isomorphism (exhaustive F2 n = 3; 200 random pairs F4, F9 n = 2)",
            c3());
  criterion(4, "alpha2 = (pi, delta-bar) agrees with alpha_n on 256 F4 sums and products", c4());
  criterion(5, "strictness: p-injectivity and divide_by_p o (p*) = id (500 cases, F4 n = 3)",
            c5());
  criterion(6, "teichmuller round trip (exhaustive ZF2/I^4; 500 random ZF4/I^3)", c6());
  criterion(7, "teichmuller-limit oracle (F8 n <= 3; F2[t^(2^-inf)] n = 2 with golden value)",
            c7());
  criterion(8, "monomial fast path = general reduce (200 random combos, n = 3)", c8());
  criterion(9, "idempotent splitting suite (F2, F3, F4; n <= 3; golden values)", c9());
  std::printf("note  9: explicit prime-field formula is odd-p only; at p = 2 it degenerates to "
              "e = 0 while the kernel computation gives e = [0]\n");
  criterion(10, "DVR laws and unit inversion (300 random pairs, F4 n = 4)", c10());
  criterion(11, "graded additivity of r -> p^n [r] (exhaustive F4, n <= 2)", c11());
  if (g_fails == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", g_fails);
  return g_fails;
}
