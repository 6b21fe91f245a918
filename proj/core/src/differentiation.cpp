#include "pcfe/differentiation.hpp"

#include <cmath>
#include <vector>

#include "pcfe/errors.hpp"

namespace pcfe {
namespace {

double checked(const std::function<double(double)>& g, double t) {
    const double v = g(t);
    if (!std::isfinite(v)) {
        throw EvalDomainError("derivative target returned non-finite value", t);
    }
    return v;
}

// Central stencils, all with even error expansions in h^2.
double stencil(const std::function<double(double)>& g, double t, int order,
               double h) {
    switch (order) {
        case 1:
            return (checked(g, t + h) - checked(g, t - h)) / (2.0 * h);
        case 2:
            return (checked(g, t + h) - 2.0 * checked(g, t) + checked(g, t - h)) /
                   (h * h);
        case 3:
            return (checked(g, t + 2.0 * h) - 2.0 * checked(g, t + h) +
                    2.0 * checked(g, t - h) - checked(g, t - 2.0 * h)) /
                   (2.0 * h * h * h);
        default:
            throw ParamError("param_derivative: order must be 1, 2 or 3");
    }
}

}  // namespace

DerivativeResult param_derivative(const std::function<double(double)>& g,
                                  double theta0, int order, double h0,
                                  int levels) {
    if (order < 1 || order > 3) {
        throw ParamError("param_derivative: order must be 1, 2 or 3");
    }
    if (levels < 1) throw ParamError("param_derivative: levels must be >= 1");
    if (h0 <= 0.0) h0 = (1.0 + std::abs(theta0)) * 1e-2;

    // Neville tableau in h^2: columns gain two orders each.
    std::vector<std::vector<double>> a(levels);
    double best = 0.0;
    double best_err = std::numeric_limits<double>::infinity();
    double h = h0;
    for (int i = 0; i < levels; ++i, h *= 0.5) {
        a[i].resize(i + 1);
        a[i][0] = stencil(g, theta0, order, h);
        double factor = 4.0;
        for (int j = 1; j <= i; ++j, factor *= 4.0) {
            a[i][j] = (factor * a[i][j - 1] - a[i - 1][j - 1]) / (factor - 1.0);
            const double err = std::max(std::abs(a[i][j] - a[i][j - 1]),
                                        std::abs(a[i][j] - a[i - 1][j - 1]));
            if (err < best_err) {
                best_err = err;
                best = a[i][j];
            }
        }
        if (i == 0) {
            best = a[0][0];
        }
    }
    if (levels == 1) best_err = std::abs(best) * 1e-2;  // crude single-step bound
    return {best, best_err};
}

}  // namespace pcfe
