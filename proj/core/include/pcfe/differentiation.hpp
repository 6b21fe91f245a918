#ifndef PCFE_DIFFERENTIATION_HPP
#define PCFE_DIFFERENTIATION_HPP

#include <functional>

namespace pcfe {

struct DerivativeResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// d^order/dtheta^order of g at theta0 (order 1..3) by central differences
// with Richardson extrapolation. Picks the tableau entry with the smallest
// estimated error, so step-size roundoff never silently dominates.
// Default step h0 = (1+|theta0|)*1e-2, 4 extrapolation levels.
DerivativeResult param_derivative(const std::function<double(double)>& g,
                                  double theta0, int order, double h0 = 0.0,
                                  int levels = 4);

}  // namespace pcfe

#endif
