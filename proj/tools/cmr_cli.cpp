// Batch CLI over the library: deterministic, scriptable output.
//
//   cmr reduce --ring "gf(4,x^2+x+1)" --prec 2 "[g^2]"
//   cmr idempotent --ring "gf(3)" --prec 2
//   cmr valuation --ring "gf(2)" --prec 3 "4*[1]"
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <deque>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmr/cmr.hpp"

using nlohmann::ordered_json;

namespace {

struct Options {
  std::string ring;
  int prec = 0;
  std::string output = "text";
  std::vector<std::string> elements;
  std::string digits;
};

std::string read_all_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

std::string resolve_element_arg(const std::string& arg, bool& stdin_used) {
  if (arg != "-") return arg;
  if (stdin_used) throw std::invalid_argument("only one element may be read from stdin");
  stdin_used = true;
  return read_all_stdin();
}

ordered_json coeffs_json(const cmr::TruncatedElement& t) {
  ordered_json o = ordered_json::object();
  for (const auto& [b, c] : t.coeffs()) o[b.to_string()] = c.str();
  return o;
}

ordered_json base_json(const cmr::ContextPtr& ctx, int prec) {
  ordered_json o = ordered_json::object();
  o["ring"] = ctx->description();
  o["precision"] = prec;
  return o;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

void print_truncated(const Options& opt, const cmr::ContextPtr& ctx,
                     const cmr::TruncatedElement& t) {
  if (opt.output == "structured") {
    ordered_json o = base_json(ctx, t.precision());
    o["coeffs"] = coeffs_json(t);
    o["status"] = "ok";
    emit(o);
  } else {
    std::cout << t.to_string() << "\n";
  }
}

ordered_json witt_json(const cmr::WittVector& u) {
  ordered_json a = ordered_json::array();
  for (const auto& c : u.coords()) a.push_back(c.to_string());
  return a;
}

int run_reduce(const Options& opt) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  bool used = false;
  auto x = cmr::parse_element(resolve_element_arg(opt.elements[0], used), ctx);
  print_truncated(opt, ctx, cmr::TruncatedElement::reduce(x, opt.prec));
  return 0;
}

int run_binary_op(const Options& opt, bool multiply) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  bool used = false;
  auto x = cmr::TruncatedElement::reduce(
      cmr::parse_element(resolve_element_arg(opt.elements[0], used), ctx), opt.prec);
  auto y = cmr::TruncatedElement::reduce(
      cmr::parse_element(resolve_element_arg(opt.elements[1], used), ctx), opt.prec);
  print_truncated(opt, ctx, multiply ? x * y : x + y);
  return 0;
}

int run_invert(const Options& opt) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  bool used = false;
  auto x = cmr::parse_element(resolve_element_arg(opt.elements[0], used), ctx);
  print_truncated(opt, ctx, cmr::TruncatedElement::reduce(x, opt.prec).invert());
  return 0;
}

int run_divide_p(const Options& opt) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  if (opt.prec < 1) throw std::invalid_argument("divide-p: --prec must be >= 1");
  bool used = false;
  auto x = cmr::parse_element(resolve_element_arg(opt.elements[0], used), ctx);
  print_truncated(opt, ctx, cmr::TruncatedElement::divide_by_p(x, opt.prec));
  return 0;
}

int run_teich_expand(const Options& opt) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  bool used = false;
  auto x = cmr::parse_element(resolve_element_arg(opt.elements[0], used), ctx);
  auto digits = cmr::TruncatedElement::reduce(x, opt.prec).teichmuller_digits();
  if (opt.output == "structured") {
    ordered_json o = base_json(ctx, opt.prec);
    ordered_json a = ordered_json::array();
    for (const auto& d : digits) a.push_back(d.to_string());
    o["digits"] = a;
    o["status"] = "ok";
    emit(o);
  } else {
    std::string s = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i) s += ", ";
      s += digits[i].to_string();
    }
    std::cout << s << ")\n";
  }
  return 0;
}

int run_from_digits(const Options& opt) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  auto digits = cmr::parse_digit_list(opt.digits, ctx);
  if (static_cast<int>(digits.size()) != opt.prec)
    throw std::invalid_argument("from-digits: digit count must equal --prec");
  print_truncated(opt, ctx, cmr::TruncatedElement::from_digits(ctx, digits));
  return 0;
}

int run_valuation(const Options& opt) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  bool used = false;
  auto x = cmr::parse_element(resolve_element_arg(opt.elements[0], used), ctx);
  auto v = cmr::TruncatedElement::reduce(x, opt.prec).valuation();
  std::string text = v ? std::to_string(*v) : (">= " + std::to_string(opt.prec));
  if (opt.output == "structured") {
    ordered_json o = base_json(ctx, opt.prec);
    o["valuation"] = text;
    o["status"] = "ok";
    emit(o);
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

int run_witt_compare(const Options& opt) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  auto wctx = cmr::WittContext::make(ctx->p, opt.prec);
  bool used = false;
  auto x = cmr::TruncatedElement::reduce(
      cmr::parse_element(resolve_element_arg(opt.elements[0], used), ctx), opt.prec);
  auto y = cmr::TruncatedElement::reduce(
      cmr::parse_element(resolve_element_arg(opt.elements[1], used), ctx), opt.prec);
  auto ax = cmr::alpha_n(x, wctx);
  auto ay = cmr::alpha_n(y, wctx);
  auto sum_image = cmr::alpha_n(x + y, wctx);
  auto sum_direct = ax + ay;
  auto prod_image = cmr::alpha_n(x * y, wctx);
  auto prod_direct = ax * ay;
  bool sum_ok = sum_image == sum_direct;
  bool prod_ok = prod_image == prod_direct;
  if (opt.output == "structured") {
    ordered_json o = base_json(ctx, opt.prec);
    ordered_json w = ordered_json::object();
    w["x"] = witt_json(ax);
    w["y"] = witt_json(ay);
    w["sum"] = witt_json(sum_image);
    w["sum_direct"] = witt_json(sum_direct);
    w["product"] = witt_json(prod_image);
    w["product_direct"] = witt_json(prod_direct);
    w["agree"] = sum_ok && prod_ok;
    o["witt"] = w;
    o["status"] = sum_ok && prod_ok ? "ok" : "disagreement";
    emit(o);
  } else {
    std::cout << "alpha_n(x) = " << ax.to_string() << "\n";
    std::cout << "alpha_n(y) = " << ay.to_string() << "\n";
    std::cout << "alpha_n(x+y) = " << sum_image.to_string() << "\n";
    std::cout << "alpha_n(x)+alpha_n(y) = " << sum_direct.to_string() << "\n";
    std::cout << "sum: " << (sum_ok ? "agree" : "disagree") << "\n";
    std::cout << "alpha_n(x*y) = " << prod_image.to_string() << "\n";
    std::cout << "alpha_n(x)*alpha_n(y) = " << prod_direct.to_string() << "\n";
    std::cout << "product: " << (prod_ok ? "agree" : "disagree") << "\n";
  }
  return sum_ok && prod_ok ? 0 : 1;
}

int run_idempotent(const Options& opt) {
  auto ctx = cmr::parse_ring_spec(opt.ring);
  if (opt.prec < 1) throw std::invalid_argument("idempotent: --prec must be >= 1");
  auto monoid = cmr::FiniteMonoid::make(ctx);
  auto a1 = cmr::kernel_ideal_mod_pn(monoid, 1);
  auto e1 = cmr::unit_idempotent_mod_p(monoid, a1);
  auto e = cmr::newton_lift_idempotent(monoid, e1, opt.prec);
  auto rep = cmr::splitting_check(monoid, e, opt.prec);
  cmr::Int mod = cmr::ipow(ctx->p, opt.prec);
  if (opt.output == "structured") {
    ordered_json o = base_json(ctx, opt.prec);
    ordered_json idem = ordered_json::object();
    for (std::size_t i = 0; i < monoid.size(); ++i)
      if (e[i] != 0) idem["[" + monoid.elems[i].to_string() + "]"] = e[i].str();
    o["idempotent"] = idem;
    o["modulus"] = mod.str();
    o["splitting_ok"] = rep.ok();
    o["status"] = "ok";
    emit(o);
  } else {
    std::cout << monoid.vec_to_string(e, mod) << "\n";
  }
  return 0;
}

// Deterministic exhaustive suites on the small built-in rings.
int run_selftest(const Options& opt) {
  std::vector<std::string> lines;
  bool all_ok = true;
  auto suite = [&](const std::string& name, bool ok) {
    lines.push_back(std::string(ok ? "ok: " : "FAIL: ") + name);
    all_ok = all_ok && ok;
  };

  std::vector<cmr::ContextPtr> fields = {
      cmr::parse_ring_spec("gf(2)"), cmr::parse_ring_spec("gf(4)"),
      cmr::parse_ring_spec("gf(8)"), cmr::parse_ring_spec("gf(9)")};

  {
    bool ok = true;
    for (const auto& ctx : fields)
      for (const auto& a : ctx->all_elements())
        ok = ok && a.pth_root().pow(ctx->p) == a && a.pow(ctx->p).pth_root() == a;
    suite("pth-root round trip (exhaustive F2,F4,F8,F9)", ok);
  }
  {
    bool ok = true;
    auto f2 = fields[0];
    for (int n = 0; n <= 4; ++n) {
      cmr::Int m = cmr::ipow(2, n);
      for (cmr::Int c = 0; c < m; ++c) {
        auto x = cmr::TruncatedElement::from_int(f2, n, c);
        ok = ok && cmr::TruncatedElement::from_digits(f2, x.teichmuller_digits()) == x;
      }
    }
    suite("teichmuller digit round trip (exhaustive ZF2/I^n, n <= 4)", ok);
  }
  {
    bool ok = true;
    auto f2 = fields[0];
    auto w = cmr::WittContext::make(2, 3);
    std::vector<cmr::WittVector> images;
    for (cmr::Int c = 0; c < 8; ++c) {
      auto x = cmr::TruncatedElement::from_int(f2, 3, c);
      images.push_back(cmr::alpha_n(x, w));
      ok = ok && cmr::alpha_n_inverse(images.back()) == x;
    }
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        ok = ok && !(images[i] == images[j]);
    for (cmr::Int a = 0; a < 8; ++a)
      for (cmr::Int b = 0; b < 8; ++b) {
        auto x = cmr::TruncatedElement::from_int(f2, 3, a);
        auto y = cmr::TruncatedElement::from_int(f2, 3, b);
        ok = ok && cmr::alpha_n(x + y, w) == cmr::alpha_n(x, w) + cmr::alpha_n(y, w);
        ok = ok && cmr::alpha_n(x * y, w) == cmr::alpha_n(x, w) * cmr::alpha_n(y, w);
      }
    suite("alpha_n ring isomorphism (exhaustive F2, n = 3)", ok);
  }
  {
    bool ok = true;
    for (long p : {2L, 3L, 5L}) {
      auto w = cmr::WittContext::make(p, 2);
      std::size_t v = 4;
      auto x0 = cmr::IntPolynomial::variable(v, 0);
      auto x1 = cmr::IntPolynomial::variable(v, 1);
      auto y0 = cmr::IntPolynomial::variable(v, 2);
      auto y1 = cmr::IntPolynomial::variable(v, 3);
      cmr::IntPolynomial s1 = x1 + y1;
      for (long nu = 1; nu < p; ++nu)
        s1 = s1 - x0.pow(static_cast<unsigned>(nu)) * y0.pow(static_cast<unsigned>(p - nu)) *
                      (cmr::binomial(static_cast<unsigned>(p), static_cast<unsigned>(nu)) / p);
      cmr::IntPolynomial p1 = x0.pow(static_cast<unsigned>(p)) * y1 +
                              y0.pow(static_cast<unsigned>(p)) * x1 + x1 * y1 * cmr::Int(p);
      ok = ok && w->sum[1] == s1 && w->prod[1] == p1;
    }
    suite("length-2 witt structure polynomials match the closed form (p = 2,3,5)", ok);
  }
  {
    bool ok = true;
    for (const char* spec : {"gf(2)", "gf(3)", "gf(4)"}) {
      auto ctx = cmr::parse_ring_spec(spec);
      auto monoid = cmr::FiniteMonoid::make(ctx);
      auto a1 = cmr::kernel_ideal_mod_pn(monoid, 1);
      auto e1 = cmr::unit_idempotent_mod_p(monoid, a1);
      for (int n = 1; n <= 3; ++n) {
        auto e = cmr::newton_lift_idempotent(monoid, e1, n);
        auto rep = cmr::splitting_check(monoid, e, n);
        ok = ok && rep.ok();
        if (ctx->p == 3 && ctx->degree == 1)
          ok = ok && cmr::explicit_e_prime_field(3, n, monoid) == e;
        if (ctx->p == 2 && ctx->degree == 1) {
          cmr::ZVec zero_bracket = monoid.zero_vec();
          zero_bracket[monoid.index.at(ctx->zero())] = 1;
          ok = ok && e == zero_bracket;
        }
      }
    }
    bool refused = false;
    try {
      auto f2 = cmr::parse_ring_spec("gf(2)");
      auto monoid = cmr::FiniteMonoid::make(f2);
      cmr::explicit_e_prime_field(2, 2, monoid);
    } catch (const std::domain_error&) {
      refused = true;
    }
    ok = ok && refused;
    suite("idempotent splitting (F2, F3, F4; n <= 3)", ok);
    lines.push_back(
        "finding: the explicit prime-field idempotent formula collapses to e = 0 at p = 2, while "
        "the kernel computation gives e = [0]; the formula is restricted to odd p");
  }

  if (opt.output == "structured") {
    ordered_json o = ordered_json::object();
    o["selftest"] = lines;
    o["status"] = all_ok ? "ok" : "failed";
    emit(o);
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << (all_ok ? "selftest: all suites passed" : "selftest: FAILURES") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in truncated completed monoid rings"};
  app.require_subcommand(1);

  std::deque<Options> optstore;
  std::vector<std::pair<CLI::App*, std::function<int(const Options&)>>> handlers;

  auto add = [&](const std::string& name, const std::string& desc, bool need_ring, int n_elems,
                 bool digits, std::function<int(const Options&)> fn) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    Options& o = optstore.emplace_back();
    o.elements.resize(static_cast<std::size_t>(n_elems));
    if (need_ring) {
      cmd->add_option("--ring", o.ring, "ring spec, e.g. gf(4,x^2+x+1) or perfect(2;t)")
          ->required();
      cmd->add_option("--prec", o.prec, "precision n >= 0")->required();
    }
    cmd->add_option("--output", o.output, "output mode")
        ->check(CLI::IsMember({"text", "structured"}));
    for (int i = 0; i < n_elems; ++i)
      cmd->add_option("element" + std::to_string(i + 1), o.elements[static_cast<std::size_t>(i)],
                      "element literal ('-' reads stdin)")
          ->required();
    if (digits)
      cmd->add_option("--digits", o.digits, "comma-separated coefficient literals")->required();
    handlers.emplace_back(cmd, [&o, fn](const Options&) { return fn(o); });
  };

  add("reduce", "canonical form of an element mod I^n", true, 1, false, run_reduce);
  add("add", "sum of two elements at precision n", true, 2, false,
      [](const Options& o) { return run_binary_op(o, false); });
  add("mul", "product of two elements at precision n", true, 2, false,
      [](const Options& o) { return run_binary_op(o, true); });
  add("invert", "multiplicative inverse at precision n", true, 1, false, run_invert);
  add("teich-expand", "Teichmueller digit list", true, 1, false, run_teich_expand);
  add("from-digits", "element from Teichmueller digits", true, 0, true, run_from_digits);
  add("divide-p", "divide an augmentation-ideal element by p", true, 1, false, run_divide_p);
  add("valuation", "index of the first nonzero Teichmueller digit", true, 1, false,
      run_valuation);
  add("witt-compare", "compare alpha_n images of sum and product", true, 2, false,
      run_witt_compare);
  add("idempotent", "splitting idempotent for finite R", true, 0, false, run_idempotent);
  add("selftest", "run the exhaustive small-ring suites", false, 0, false, run_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* got = app.get_subcommands().at(0);
    for (auto& [cmd, fn] : handlers)
      if (cmd == got) return fn(Options{});
    std::cerr << "unknown subcommand\n";
    return 2;
  } catch (const cmr::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
