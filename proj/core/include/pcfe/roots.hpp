#ifndef PCFE_ROOTS_HPP
#define PCFE_ROOTS_HPP

#include <functional>

namespace pcfe {

// Brent's method on [lo, hi]. Requires a sign change (throws BracketError
// otherwise); stops when |g(root)| <= tol or the interval width <= tol.
double find_root_bracketed(const std::function<double(double)>& g, double lo,
                           double hi, double tol = 1e-12);

}  // namespace pcfe

#endif
