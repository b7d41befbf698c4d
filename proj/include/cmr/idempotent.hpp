#pragma once

// For finite perfect R: the idempotent e in (Z/p^n)R whose part of the
// monoid algebra is the image A_n of I^n, with the complementary part
// (1-e)(Z/p^n)R mapping bijectively onto ZR/I^n. Includes the Teichmueller
// character and the explicit prime-field formula for odd p.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmr/integers.hpp"
#include "cmr/monoid_algebra.hpp"
#include "cmr/perfect_algebra.hpp"
#include "cmr/truncated.hpp"
#include "cmr/zmod_howell.hpp"

namespace cmr {

// Enumerated finite R with multiplication and addition tables; vectors over
// the element list represent monoid-algebra elements in (Z/p^n)R.
struct FiniteMonoid {
  ContextPtr ctx;
  std::vector<PerfectElement> elems;  // canonical ascending order
  std::map<PerfectElement, std::size_t> index;
  std::vector<std::vector<std::size_t>> mul_table, add_table;

  static FiniteMonoid make(const ContextPtr& ctx) {
    if (!ctx->is_finite_field())
      throw std::invalid_argument("finite monoid: coefficient algebra is infinite");
    FiniteMonoid m;
    m.ctx = ctx;
    m.elems = ctx->all_elements();
    for (std::size_t i = 0; i < m.elems.size(); ++i) m.index.emplace(m.elems[i], i);
    const std::size_t s = m.elems.size();
    m.mul_table.assign(s, std::vector<std::size_t>(s));
    m.add_table.assign(s, std::vector<std::size_t>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        m.mul_table[i][j] = m.index.at(m.elems[i] * m.elems[j]);
        m.add_table[i][j] = m.index.at(m.elems[i] + m.elems[j]);
      }
    return m;
  }

  std::size_t size() const { return elems.size(); }

  ZVec zero_vec() const { return ZVec(size(), 0); }

  ZVec bracket_vec(std::size_t i) const {
    ZVec v = zero_vec();
    v[i] = 1;
    return v;
  }

  ZVec mul(const ZVec& a, const ZVec& b, const Int& mod) const {
    ZVec r = zero_vec();
    for (std::size_t i = 0; i < size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < size(); ++j) {
        if (b[j] == 0) continue;
        std::size_t k = mul_table[i][j];
        r[k] = mod_pos(r[k] + a[i] * b[j], mod);
      }
    }
    return r;
  }

  MonoidAlgebraElement to_element(const ZVec& v) const {
    MonoidAlgebraElement x(ctx);
    for (std::size_t i = 0; i < size(); ++i)
      if (v[i] != 0) x = x + MonoidAlgebraElement::bracket(elems[i]) * v[i];
    return x;
  }

  std::string vec_to_string(const ZVec& v, const Int& mod) const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
      if (v[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (v[i] != 1) s += v[i].str() + "*";
      s += "[" + elems[i].to_string() + "]";
    }
    if (s.empty()) s = "0";
    return s + " (mod " + mod.str() + ")";
  }
};

// Image of I in (Z/p^n)R via the kernel of the augmentation-induced map
// (well-defined mod p^n because p^n ZR lies in I).
inline HowellBasis augmentation_kernel_mod(const FiniteMonoid& m, int n) {
  const long p = m.ctx->p;
  const int k = m.ctx->degree;
  const std::size_t s = m.size();
  // k x s matrix over F_p whose column i is the basis decomposition of elems[i].
  std::vector<std::vector<long>> a(static_cast<std::size_t>(k), std::vector<long>(s, 0));
  auto basis = m.ctx->basis();
  std::map<PerfectElement, std::size_t> bidx;
  for (std::size_t j = 0; j < basis.size(); ++j) bidx.emplace(basis[j], j);
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& [b, c] : m.elems[i].basis_decompose()) a[bidx.at(b)][i] = c;
  std::vector<ZVec> gens;
  for (const auto& v : nullspace_mod_p(a, p)) {
    ZVec g(s);
    for (std::size_t i = 0; i < s; ++i) g[i] = v[i];
    gens.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < s; ++i) {
    ZVec g = m.zero_vec();
    g[i] = p;
    gens.push_back(std::move(g));
  }
  return howell_form(std::move(gens), p, n, s);
}

// Image of I via the generating family {[r]+[s]-[r+s]} together with p*[1].
inline HowellBasis ideal_image_span(const FiniteMonoid& m, int n) {
  const long p = m.ctx->p;
  const std::size_t s = m.size();
  std::vector<ZVec> gens;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      ZVec g = m.zero_vec();
      g[i] += 1;
      g[j] += 1;
      g[m.add_table[i][j]] -= 1;
      gens.push_back(std::move(g));
    }
  ZVec g = m.zero_vec();
  g[m.index.at(m.ctx->one())] = p;
  gens.push_back(std::move(g));
  return howell_form(std::move(gens), p, n, s);
}

// Both routes to the image of I mod p^n must agree.
inline HowellBasis kernel_ideal_mod_pn(const FiniteMonoid& m, int n) {
  if (n < 1) throw std::invalid_argument("kernel_ideal_mod_pn: n >= 1 required");
  HowellBasis a = augmentation_kernel_mod(m, n);
  HowellBasis b = ideal_image_span(m, n);
  if (!same_module(a, b))
    throw std::logic_error("kernel_ideal_mod_pn: kernel and span computations disagree");
  return a;
}

// A_n: image of I^n in (Z/p^n)R, spanned by n-fold products of generators of
// the image of I (echelon rows lift into I, and p^n-multiples vanish).
inline HowellBasis ideal_power_image(const FiniteMonoid& m, int n) {
  HowellBasis a1 = kernel_ideal_mod_pn(m, n);
  const Int mod = ipow(m.ctx->p, n);
  std::vector<ZVec> prods;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  // Multisets of n generator indices.
  while (true) {
    ZVec v = a1.rows[idx[0]];
    for (int t = 1; t < n; ++t) v = m.mul(v, a1.rows[idx[static_cast<std::size_t>(t)]], mod);
    prods.push_back(std::move(v));
    int t = n - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] + 1 == a1.rows.size()) --t;
    if (t < 0) break;
    ++idx[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < n; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(t)];
  }
  return howell_form(std::move(prods), m.ctx->p, n, m.size());
}

// The unique e1 in A1 with e1*g = g for all generators; a linear solve over F_p.
inline ZVec unit_idempotent_mod_p(const FiniteMonoid& m, const HowellBasis& a1) {
  if (a1.n != 1) throw std::invalid_argument("unit_idempotent_mod_p: module must be mod p");
  const long p = m.ctx->p;
  const std::size_t s = m.size();
  const std::size_t ngen = a1.rows.size();
  std::vector<std::vector<long>> sys;
  std::vector<long> rhs;
  for (std::size_t i = 0; i < ngen; ++i) {
    std::vector<ZVec> prods;
    for (std::size_t j = 0; j < ngen; ++j) prods.push_back(m.mul(a1.rows[j], a1.rows[i], p));
    for (std::size_t c = 0; c < s; ++c) {
      std::vector<long> row(ngen);
      for (std::size_t j = 0; j < ngen; ++j) row[j] = prods[j][c].convert_to<long>();
      sys.push_back(std::move(row));
      rhs.push_back(a1.rows[i][c].convert_to<long>());
    }
  }
  auto sol = solve_mod_p(std::move(sys), std::move(rhs), p);
  if (!sol) throw std::logic_error("unit_idempotent_mod_p: no unit element found");
  ZVec e = m.zero_vec();
  for (std::size_t j = 0; j < ngen; ++j)
    for (std::size_t c = 0; c < s; ++c)
      e[c] = mod_pos(e[c] + Int((*sol)[j]) * a1.rows[j][c], p);
  if (!(m.mul(e, e, p) == e)) throw std::logic_error("unit_idempotent_mod_p: not idempotent");
  return e;
}

// Newton lift e <- 3e^2 - 2e^3 to the unique idempotent mod p^n over e1; the
// result is checked to be a unit for A_n.
inline ZVec newton_lift_idempotent(const FiniteMonoid& m, const ZVec& e1, int n) {
  const Int mod = ipow(m.ctx->p, n);
  ZVec e = e1;
  for (auto& x : e) x = mod_pos(x, mod);
  int steps = 1;
  while ((1 << (steps - 1)) < n) ++steps;  // ceil(log2 n) + 1
  for (int i = 0; i < steps; ++i) {
    ZVec e2 = m.mul(e, e, mod);
    ZVec e3 = m.mul(e2, e, mod);
    for (std::size_t c = 0; c < e.size(); ++c) e[c] = mod_pos(3 * e2[c] - 2 * e3[c], mod);
  }
  if (!(m.mul(e, e, mod) == e)) throw std::logic_error("newton_lift_idempotent: not idempotent");
  HowellBasis an = ideal_power_image(m, n);
  for (const auto& g : an.rows)
    if (!(m.mul(e, g, mod) == g))
      throw std::logic_error("newton_lift_idempotent: not a unit for the ideal-power image");
  return e;
}

struct SplittingReport {
  ZVec idempotent;
  bool e_in_ideal_power = false;
  bool unit_for_ideal_power = false;
  bool complement_bijective = false;
  bool exact_sequence_cardinality = false;
  Int submodule_card, image_card, target_card, ideal_power_card;
  // Row r: canonical coefficients of reduce((1-e)[r]) over the basis of R.
  std::vector<ZVec> matrix;

  bool ok() const {
    return e_in_ideal_power && unit_for_ideal_power && complement_bijective &&
           exact_sequence_cardinality;
  }
};

inline ZVec truncated_to_vec(const TruncatedElement& t) {
  auto basis = t.context()->basis();
  ZVec v(basis.size(), 0);
  std::map<PerfectElement, std::size_t> bidx;
  for (std::size_t j = 0; j < basis.size(); ++j) bidx.emplace(basis[j], j);
  for (const auto& [b, c] : t.coeffs()) v[bidx.at(b)] = c;
  return v;
}

// Verifies that e splits (Z/p^n)R into the image of I^n and a complement
// isomorphic to ZR/I^n. Failure is reported, not thrown.
inline SplittingReport splitting_check(const FiniteMonoid& m, const ZVec& e, int n) {
  const long p = m.ctx->p;
  const Int mod = ipow(p, n);
  const int k = m.ctx->degree;
  const std::size_t s = m.size();
  SplittingReport rep;
  rep.idempotent = e;
  HowellBasis an = ideal_power_image(m, n);
  rep.ideal_power_card = an.cardinality();
  rep.e_in_ideal_power = an.contains(e);
  rep.unit_for_ideal_power = true;
  for (const auto& g : an.rows)
    if (!(m.mul(e, g, mod) == g)) rep.unit_for_ideal_power = false;

  ZVec one_minus_e = m.zero_vec();
  one_minus_e[m.index.at(m.ctx->one())] = 1;
  for (std::size_t c = 0; c < s; ++c) one_minus_e[c] = mod_pos(one_minus_e[c] - e[c], mod);

  std::vector<ZVec> sub_gens, img_gens;
  for (std::size_t i = 0; i < s; ++i) {
    ZVec w = m.mul(one_minus_e, m.bracket_vec(i), mod);
    TruncatedElement y = TruncatedElement::reduce(m.to_element(w), n);
    img_gens.push_back(truncated_to_vec(y));
    rep.matrix.push_back(img_gens.back());
    sub_gens.push_back(std::move(w));
  }
  HowellBasis sub = howell_form(std::move(sub_gens), p, n, s);
  HowellBasis img = howell_form(std::move(img_gens), p, n, static_cast<std::size_t>(k));
  rep.submodule_card = sub.cardinality();
  rep.image_card = img.cardinality();
  rep.target_card = ipow(p, n * k);
  rep.complement_bijective =
      rep.submodule_card == rep.target_card && rep.image_card == rep.target_card;
  rep.exact_sequence_cardinality =
      rep.ideal_power_card * rep.target_card == ipow(p, n * static_cast<int>(s));
  return rep;
}

// Teichmueller representative of r in (Z/p^n)*: the p^(n-1)-th power of any
// integer lift, already stable under further p-th powers.
inline Int teichmuller_character(long p, int n, long r) {
  if (r % p == 0) throw std::domain_error("teichmuller_character: r must be a unit mod p");
  return powmod(mod_pos(r, p), ipow(p, n - 1), ipow(p, n));
}

// Explicit idempotent for R = F_p via the character sum
//   1 - e = (p-1)^{-1} sum_{r in F_p^*} w(r)^{-1} [r].
// Valid for odd p only: for p = 2 the sum collapses to [1] and the formula
// yields e = 0, while the kernel computation gives e = [0].
inline ZVec explicit_e_prime_field(long p, int n, const FiniteMonoid& m) {
  if (p == 2)
    throw std::domain_error(
        "explicit_e_prime_field: formula requires odd p (at p = 2 it collapses to e = 0, "
        "but the kernel idempotent is [0])");
  if (m.ctx->degree != 1 || m.ctx->p != p)
    throw std::invalid_argument("explicit_e_prime_field: R must be the prime field F_p");
  const Int mod = ipow(p, n);
  Int inv_pm1 = inv_mod_pow(p - 1, p, n);
  ZVec one_minus_e = m.zero_vec();
  for (long r = 1; r < p; ++r) {
    Int w = teichmuller_character(p, n, r);
    Int coeff = mod_pos(inv_pm1 * inv_mod_pow(w, p, n), mod);
    std::size_t i = m.index.at(m.ctx->from_scalar(r));
    one_minus_e[i] = mod_pos(one_minus_e[i] + coeff, mod);
  }
  ZVec e = m.zero_vec();
  e[m.index.at(m.ctx->one())] = 1;
  for (std::size_t c = 0; c < m.size(); ++c) e[c] = mod_pos(e[c] - one_minus_e[c], mod);
  return e;
}

}  // namespace cmr
