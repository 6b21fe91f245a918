#include "pcfe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "pcfe/errors.hpp"

namespace pcfe {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

double checked_eval(const Integrand& g, double x) {
    const double v = g(x);
    if (!std::isfinite(v)) {
        throw EvalDomainError("integrand returned non-finite value", x);
    }
    return v;
}

struct PanelEstimate {
    double value;
    double error;
};

// One GK15 panel with the QUADPACK resasc-scaled error estimate.
PanelEstimate gk15(const Integrand& g, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    double fv1[7], fv2[7];
    const double fc = checked_eval(g, centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        fv1[j] = checked_eval(g, centr - absc);
        fv2[j] = checked_eval(g, centr + absc);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }

    const double result = resk * hlgth;
    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    double abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0) {
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) {
        abserr = std::max(eps * 50.0 * resabs, abserr);
    }
    return {result, abserr};
}

struct Segment {
    double a, b;
    double value, error;
};

struct WorseError {
    bool operator()(const Segment& x, const Segment& y) const {
        return x.error < y.error;
    }
};

// Deterministic left-to-right totals so the result is bit-stable for a
// fixed spec no matter how the heap happened to be laid out.
IntegralResult finalize(std::vector<Segment> segs, bool converged,
                        int subdivisions) {
    std::sort(segs.begin(), segs.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double v = 0.0, e = 0.0;
    for (const auto& s : segs) {
        v += s.value;
        e += s.error;
    }
    return {v, e, converged, subdivisions};
}

IntegralResult adapt(const Integrand& g, std::vector<Segment> segs,
                     const QuadratureSpec& spec) {
    double value = 0.0, error = 0.0;
    for (const auto& s : segs) {
        value += s.value;
        error += s.error;
    }
    WorseError cmp;
    std::make_heap(segs.begin(), segs.end(), cmp);
    int subdivisions = 0;

    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (subdivisions >= spec.max_subdivisions) {
            return finalize(std::move(segs), false, subdivisions);
        }
        std::pop_heap(segs.begin(), segs.end(), cmp);
        Segment worst = segs.back();
        segs.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at floating-point resolution; stop refining it.
            error -= worst.error;
            worst.error = 0.0;
            segs.push_back(worst);
            std::push_heap(segs.begin(), segs.end(), cmp);
            continue;
        }
        const PanelEstimate left = gk15(g, worst.a, mid);
        const PanelEstimate right = gk15(g, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        segs.push_back(Segment{worst.a, mid, left.value, left.error});
        std::push_heap(segs.begin(), segs.end(), cmp);
        segs.push_back(Segment{mid, worst.b, right.value, right.error});
        std::push_heap(segs.begin(), segs.end(), cmp);
        ++subdivisions;
    }
    return finalize(std::move(segs), true, subdivisions);
}

IntegralResult integrate_finite(const Integrand& g, double lo, double hi,
                                const QuadratureSpec& spec) {
    if (!(lo <= hi)) throw ParamError("integrate: lo must be <= hi");
    if (lo == hi) return {0.0, 0.0, true, 0};
    const PanelEstimate first = gk15(g, lo, hi);
    return adapt(g, {Segment{lo, hi, first.value, first.error}}, spec);
}

}  // namespace

IntegralResult integrate(const Integrand& g, double lo, double hi,
                         const QuadratureSpec& spec) {
    if (spec.transform == QuadratureSpec::Transform::SemiInfinite) {
        return integrate_semi_infinite(g, spec.semi_infinite_from, spec);
    }
    return integrate_finite(g, lo, hi, spec);
}

IntegralResult integrate_semi_infinite(const Integrand& g, double a,
                                       QuadratureSpec spec) {
    // x = a + t/(1-t) maps (0,1) onto (a, inf); GK nodes never touch t=1.
    spec.transform = QuadratureSpec::Transform::None;
    auto mapped = [&g, a](double t) {
        const double om = 1.0 - t;
        const double x = a + t / om;
        return g(x) / (om * om);
    };
    return integrate_finite(mapped, 0.0, 1.0, spec);
}

IntegralResult integrate_split(const Integrand& g, double lo, double hi,
                               std::span<const double> kinks,
                               const QuadratureSpec& spec) {
    std::vector<double> cuts{lo};
    for (double k : kinks) {
        if (k > lo && k < hi) cuts.push_back(k);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] == cuts[i + 1]) continue;
        const PanelEstimate p = gk15(g, cuts[i], cuts[i + 1]);
        segs.push_back(Segment{cuts[i], cuts[i + 1], p.value, p.error});
    }
    if (segs.empty()) return {0.0, 0.0, true, 0};
    return adapt(g, std::move(segs), spec);
}

Integral2dResult integrate2d(const Integrand2d& g, double xlo, double xhi,
                             double ylo, double yhi,
                             const QuadratureSpec& spec) {
    return integrate2d(
        g, xlo, xhi, [ylo](double) { return ylo; },
        [yhi](double) { return yhi; }, spec);
}

Integral2dResult integrate2d(const Integrand2d& g, double xlo, double xhi,
                             const std::function<double(double)>& ylo,
                             const std::function<double(double)>& yhi,
                             const QuadratureSpec& spec) {
    QuadratureSpec inner = spec;
    inner.transform = QuadratureSpec::Transform::None;
    inner.abs_tol = 0.1 * spec.abs_tol;

    bool inner_ok = true;
    double worst_inner_err = 0.0;
    auto outer_integrand = [&](double x) {
        const double a = ylo(x);
        const double b = yhi(x);
        // Inner bounds may come back reversed (signed inner integral).
        IntegralResult r = (a <= b)
            ? integrate([&g, x](double y) { return g(x, y); }, a, b, inner)
            : IntegralResult{};
        if (a > b) {
            r = integrate([&g, x](double y) { return g(x, y); }, b, a, inner);
            r.value = -r.value;
        }
        inner_ok = inner_ok && r.converged;
        worst_inner_err = std::max(worst_inner_err, r.error_estimate);
        return r.value;
    };

    const IntegralResult outer = integrate(outer_integrand, xlo, xhi, spec);
    Integral2dResult out;
    out.value = outer.value;
    out.error_estimate =
        outer.error_estimate + worst_inner_err * std::abs(xhi - xlo);
    out.converged = outer.converged && inner_ok;
    return out;
}

}  // namespace pcfe
