#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

double simpson_rule(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson_rule(fa, flm, fm, m - a);
    const double right = simpson_rule(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         double tol, int max_depth) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson_rule(fa, fm, fb, b - a);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double ln_bessel_k_integral(double nu, double z) {
    if (!(z > 0.0) || nu < 0.0)
        throw std::invalid_argument("ln_bessel_k_integral: need z > 0, nu >= 0");

    auto log_integrand = [&](double t) {
        // ln cosh(y) computed overflow-free
        const double y = nu * t;
        const double ln_cosh = y > 30.0 ? y - std::log(2.0)
                                        : std::log(std::cosh(y));
        return -z * std::cosh(t) + ln_cosh;
    };

    // locate the peak and the window where the integrand matters
    double peak = log_integrand(0.0);
    double t_peak = 0.0;
    for (double t = 0.0; t <= 60.0; t += 0.005) {
        const double lg = log_integrand(t);
        if (lg > peak) {
            peak = lg;
            t_peak = t;
        }
    }
    double t_hi = t_peak;
    while (t_hi < 120.0 && log_integrand(t_hi) > peak - 80.0) t_hi += 0.05;
    double t_lo = t_peak;
    while (t_lo > 0.0 && log_integrand(t_lo) > peak - 80.0) t_lo -= 0.05;
    t_lo = std::max(0.0, t_lo);

    // integrate panel by panel; a single whole-interval rule can step right
    // over a peak much narrower than the window and report it as zero
    const double m = peak;
    auto scaled = [&](double t) { return std::exp(log_integrand(t) - m); };
    const int panels = 96;
    const double w = (t_hi - t_lo) / panels;
    double integral = 0.0;
    for (int i = 0; i < panels; ++i)
        integral += integrate_simpson(scaled, t_lo + i * w, t_lo + (i + 1) * w, 1e-14, 30);
    return m + std::log(integral);
}

LineFit normal_equations_line(const std::vector<double>& xi) {
    const double n = static_cast<double>(xi.size());
    if (xi.size() < 2) throw std::invalid_argument("normal_equations_line: too short");
    double si = 0.0, sii = 0.0, sx = 0.0, six = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k) {
        const double i = static_cast<double>(k + 1);
        si += i;
        sii += i * i;
        sx += xi[k];
        six += i * xi[k];
    }
    const double det = n * sii - si * si;
    LineFit f;
    f.b = (n * six - si * sx) / det;
    f.a = (sx * sii - si * six) / det;
    return f;
}

}  // namespace oracle
