#include <catch2/catch_amalgamated.hpp>

#include "cmr/cmr.hpp"
#include "test_support.hpp"

using namespace cmr;

static FiniteMonoid m2() { return FiniteMonoid::make(AlgebraContext::prime_field(2)); }
static FiniteMonoid m3() { return FiniteMonoid::make(AlgebraContext::prime_field(3)); }
static FiniteMonoid m4() {
  return FiniteMonoid::make(AlgebraContext::finite_field(2, 2, {1, 1, 1}));
}

TEST_CASE("howell forms over Z/p^n") {
  // span{(2,0),(0,4)} mod 8 = {(2a, 4b)}
  auto h = howell_form({{2, 0}, {0, 4}}, 2, 3, 2);
  CHECK(h.contains({2, 0}));
  CHECK(h.contains({6, 4}));
  CHECK_FALSE(h.contains({1, 0}));
  CHECK_FALSE(h.contains({2, 2}));
  CHECK(h.cardinality() == 8);  // 4 multiples of (2,0) times 2 of (0,4)

  auto full = howell_form({{1, 0}, {0, 1}}, 3, 2, 2);
  CHECK(full.cardinality() == 81);
  CHECK(full.contains({5, 7}));

  // Annihilator closure: span{(2,1)} mod 4 contains 2*(2,1) = (0,2).
  auto ann = howell_form({{2, 1}}, 2, 2, 2);
  CHECK(ann.contains({0, 2}));

  ts::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ZVec> gens;
    std::uniform_int_distribution<int> d(0, 26);
    for (int i = 0; i < 3; ++i) gens.push_back({Int(d(rng)), Int(d(rng)), Int(d(rng))});
    auto hb = howell_form(gens, 3, 3, 3);
    // Every generator and random combination is a member.
    for (const auto& g : gens) CHECK(hb.contains(g));
    ZVec combo(3, 0);
    for (const auto& g : gens) {
      Int k = d(rng);
      for (int c = 0; c < 3; ++c) combo[static_cast<std::size_t>(c)] += g[static_cast<std::size_t>(c)] * k;
    }
    CHECK(hb.contains(combo));
  }
}

TEST_CASE("kernel of the augmentation mod p^n") {
  auto monoid = m2();
  auto a1 = kernel_ideal_mod_pn(monoid, 1);
  // F2: kernel of (n0, n1) -> n1 is spanned by [0].
  CHECK(a1.cardinality() == 2);
  CHECK(a1.contains({1, 0}));
  CHECK_FALSE(a1.contains({0, 1}));

  auto monoid3 = m3();
  auto b1 = kernel_ideal_mod_pn(monoid3, 1);
  CHECK(b1.contains({1, 0, 0}));  // [0]
  CHECK(b1.contains({0, 1, 1}));  // [1]+[2]: 1 + 2 = 0 in F3
  CHECK(b1.cardinality() == 9);
  CHECK_FALSE(b1.contains({0, 1, 0}));

  auto a2 = kernel_ideal_mod_pn(monoid, 2);
  CHECK(a2.contains({0, 2}));  // 2*[1]
  CHECK(a2.contains({1, 0}));  // [0]
  CHECK_FALSE(a2.contains({0, 1}));
}

TEST_CASE("unit idempotent mod p") {
  auto monoid = m2();
  auto e1 = unit_idempotent_mod_p(monoid, kernel_ideal_mod_pn(monoid, 1));
  CHECK(e1 == ZVec{1, 0});  // [0]

  auto monoid3 = m3();
  auto f1 = unit_idempotent_mod_p(monoid3, kernel_ideal_mod_pn(monoid3, 1));
  CHECK(f1 == ZVec{0, 2, 2});  // 2[1]+2[2]

  auto monoid4 = m4();
  auto g1 = unit_idempotent_mod_p(monoid4, kernel_ideal_mod_pn(monoid4, 1));
  CHECK(g1 == ZVec{0, 1, 1, 1});  // [1]+[g]+[g+1]

  for (auto* m : {&monoid, &monoid3, &monoid4}) {
    auto a1 = kernel_ideal_mod_pn(*m, 1);
    auto e = unit_idempotent_mod_p(*m, a1);
    CHECK(m->mul(e, e, m->ctx->p) == e);
    for (const auto& g : a1.rows) CHECK(m->mul(e, g, m->ctx->p) == g);
  }
}

TEST_CASE("newton lift") {
  auto monoid3 = m3();
  auto e1 = unit_idempotent_mod_p(monoid3, kernel_ideal_mod_pn(monoid3, 1));
  auto e = newton_lift_idempotent(monoid3, e1, 2);
  CHECK(e == ZVec{0, 5, 5});  // 5[1]+5[2] mod 9
  CHECK(monoid3.vec_to_string(e, 9) == "5*[1] + 5*[2] (mod 9)");

  auto monoid = m2();
  auto z1 = unit_idempotent_mod_p(monoid, kernel_ideal_mod_pn(monoid, 1));
  for (int n = 1; n <= 3; ++n) CHECK(newton_lift_idempotent(monoid, z1, n) == ZVec{1, 0});

  auto monoid4 = m4();
  auto g1 = unit_idempotent_mod_p(monoid4, kernel_ideal_mod_pn(monoid4, 1));
  auto g = newton_lift_idempotent(monoid4, g1, 2);
  CHECK(g == ZVec{0, 3, 3, 3});
  for (int n = 1; n <= 3; ++n) {
    Int mod = ipow(2, n);
    auto en = newton_lift_idempotent(monoid4, g1, n);
    CHECK(monoid4.mul(en, en, mod) == en);
  }
}

TEST_CASE("idempotents are compatible across precisions") {
  for (auto monoid : {m2(), m3(), m4()}) {
    auto e1 = unit_idempotent_mod_p(monoid, kernel_ideal_mod_pn(monoid, 1));
    for (int n = 2; n <= 3; ++n) {
      auto en = newton_lift_idempotent(monoid, e1, n);
      auto em = newton_lift_idempotent(monoid, e1, n - 1);
      Int mod = ipow(monoid.ctx->p, n - 1);
      for (std::size_t i = 0; i < en.size(); ++i) CHECK(mod_pos(en[i], mod) == em[i]);
    }
  }
}

TEST_CASE("splitting check") {
  for (auto monoid : {m2(), m3(), m4()}) {
    auto e1 = unit_idempotent_mod_p(monoid, kernel_ideal_mod_pn(monoid, 1));
    for (int n = 1; n <= 3; ++n) {
      auto e = newton_lift_idempotent(monoid, e1, n);
      auto rep = splitting_check(monoid, e, n);
      CHECK(rep.ok());
      CHECK(rep.submodule_card == ipow(monoid.ctx->p, n * monoid.ctx->degree));
      // |(Z/p^n)R| = |A_n| * |ZR/I^n|
      CHECK(rep.ideal_power_card * rep.target_card ==
            ipow(monoid.ctx->p, n * static_cast<int>(monoid.size())));
    }
  }
  // Feeding e = 0 must produce a failure report, not an exception.
  auto monoid = m2();
  auto rep = splitting_check(monoid, monoid.zero_vec(), 2);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.unit_for_ideal_power);
  CHECK_FALSE(rep.complement_bijective);
}

TEST_CASE("teichmuller character") {
  CHECK(teichmuller_character(3, 2, 2) == 8);
  CHECK(teichmuller_character(3, 2, 1) == 1);
  CHECK(teichmuller_character(5, 3, 1) == 1);
  for (long r = 1; r < 5; ++r) {
    Int w = teichmuller_character(5, 3, r);
    CHECK(powmod(w, 5, ipow(5, 3)) == w);  // fixed point of Frobenius
    CHECK(mod_pos(w, 5) == r);
  }
  CHECK_THROWS_AS(teichmuller_character(3, 2, 6), std::domain_error);
}

TEST_CASE("explicit prime-field idempotent") {
  auto monoid3 = m3();
  auto e1 = unit_idempotent_mod_p(monoid3, kernel_ideal_mod_pn(monoid3, 1));
  for (int n = 1; n <= 3; ++n) {
    auto newton = newton_lift_idempotent(monoid3, e1, n);
    CHECK(explicit_e_prime_field(3, n, monoid3) == newton);
  }
  CHECK(explicit_e_prime_field(3, 2, monoid3) == ZVec{0, 5, 5});

  auto monoid5 = FiniteMonoid::make(AlgebraContext::prime_field(5));
  auto f1 = unit_idempotent_mod_p(monoid5, kernel_ideal_mod_pn(monoid5, 1));
  for (int n = 1; n <= 2; ++n)
    CHECK(explicit_e_prime_field(5, n, monoid5) == newton_lift_idempotent(monoid5, f1, n));

  // p = 2: the formula degenerates (e = 0 instead of [0]) and is refused.
  auto monoid = m2();
  CHECK_THROWS_AS(explicit_e_prime_field(2, 2, monoid), std::domain_error);
  CHECK_THROWS_AS(explicit_e_prime_field(3, 1, m4()), std::invalid_argument);
}
