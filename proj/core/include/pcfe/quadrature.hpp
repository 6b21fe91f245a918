#ifndef PCFE_QUADRATURE_HPP
#define PCFE_QUADRATURE_HPP

#include <functional>
#include <span>

namespace pcfe {

// Tolerances and improper-integral handling for the adaptive engine.
// transform = SemiInfinite integrates over [semi_infinite_from, +inf) via the
// substitution x = a + t/(1-t), t in (0,1); lo/hi arguments are then ignored.
struct QuadratureSpec {
    enum class Transform { None, SemiInfinite };

    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    Transform transform = Transform::None;
    double semi_infinite_from = 0.0;

    static QuadratureSpec semi_infinite(double a, double abs_tol = 1e-10,
                                        double rel_tol = 1e-10) {
        QuadratureSpec s;
        s.abs_tol = abs_tol;
        s.rel_tol = rel_tol;
        s.transform = Transform::SemiInfinite;
        s.semi_infinite_from = a;
        return s;
    }
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;  // false = accuracy-not-reached flag
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7/15 over [lo, hi] (or [a, inf) when the spec says
// so). Throws EvalDomainError when the integrand returns NaN/inf.
IntegralResult integrate(const Integrand& g, double lo, double hi,
                         const QuadratureSpec& spec = {});

IntegralResult integrate_semi_infinite(const Integrand& g, double a,
                                       QuadratureSpec spec = {});

// Pre-splits [lo, hi] at the interior kink abscissae before adapting.
IntegralResult integrate_split(const Integrand& g, double lo, double hi,
                               std::span<const double> kinks,
                               const QuadratureSpec& spec = {});

struct Integral2dResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

using Integrand2d = std::function<double(double, double)>;

// Iterated integral over the rectangle [xlo,xhi] x [ylo,yhi].
Integral2dResult integrate2d(const Integrand2d& g, double xlo, double xhi,
                             double ylo, double yhi,
                             const QuadratureSpec& spec = {});

// Iterated integral with x-dependent inner bounds:
//   int_{xlo}^{xhi} int_{ylo(x)}^{yhi(x)} g(x,y) dy dx
Integral2dResult integrate2d(const Integrand2d& g, double xlo, double xhi,
                             const std::function<double(double)>& ylo,
                             const std::function<double(double)>& yhi,
                             const QuadratureSpec& spec = {});

}  // namespace pcfe

#endif
