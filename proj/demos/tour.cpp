// A short tour: canonical forms, Teichmueller digits, and the Witt-side
// cross-check over F_4 at precision 2.

#include <iostream>

#include "cmr/cmr.hpp"

int main() {
  auto f4 = cmr::parse_ring_spec("gf(4,x^2+x+1)");

  auto x = cmr::parse_element("[g^2]", f4);  // bracket of g+1
  auto t = cmr::TruncatedElement::reduce(x, 2);
  std::cout << "reduce([g^2], 2)   = " << t.to_string() << "\n";

  auto y = cmr::TruncatedElement::reduce(cmr::parse_element("[1] + [g]", f4), 2);
  std::cout << "digits([1]+[g])    = ";
  for (const auto& d : y.teichmuller_digits()) std::cout << d.to_string() << " ";
  std::cout << "\n";

  auto wctx = cmr::WittContext::make(2, 2);
  std::cout << "alpha_2([1]+[g])   = " << cmr::alpha2(y, wctx).to_string() << "\n";
  std::cout << "alpha_n([1]+[g])   = " << cmr::alpha_n(y, wctx).to_string() << "\n";
  std::cout << "inverse round trip = "
            << (cmr::alpha_n_inverse(cmr::alpha_n(y, wctx)) == y ? "ok" : "mismatch") << "\n";

  auto closure = cmr::parse_ring_spec("perfect(2;t)");
  auto z = cmr::TruncatedElement::reduce(cmr::parse_element("[t+1]", closure), 2);
  std::cout << "reduce([1+t], 2)   = " << z.to_string() << "\n";
  return 0;
}
