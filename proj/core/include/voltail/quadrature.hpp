#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace voltail {

// Raised when adaptive integration cannot reach the requested tolerance;
// carries the achieved absolute error estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(double achieved, double requested)
        : std::runtime_error("quadrature did not converge: achieved abs error " +
                             std::to_string(achieved) + ", requested " +
                             std::to_string(requested)),
          achieved_(achieved),
          requested_(requested) {}
    double achieved_abs_error() const { return achieved_; }
    double requested_abs_error() const { return requested_; }

private:
    double achieved_;
    double requested_;
};

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;   // error estimate, not a bound
    std::size_t evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 node-weight table on [0, 1] half-interval.
// Columns: abscissa, Gauss weight (0 for Kronrod-only nodes), Kronrod weight.
inline constexpr double kG7K15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
void gauss_kronrod_15(const F& f, double a, double b, double& value, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = kG7K15[0][1] * f0;
    double k15 = kG7K15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kG7K15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kG7K15[i][1] * fi;
        k15 += kG7K15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    value = k15;
    // standard QUADPACK-style error heuristic
    const double diff = std::fabs(k15 - g7);
    err = diff > 0.0 ? std::pow(200.0 * diff, 1.5) : 0.0;
    if (err > diff) err = diff;       // pow blows up for diff > ~5e-3
    if (!(err >= 0.0)) err = diff;
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. The interval is first
// cut into `presplit` equal panels (a narrow peak inside a wide interval can
// otherwise look identically zero to a single 15-point rule), then panels are
// bisected worst-first until the summed error estimate satisfies
// abs_tol + rel_tol*|integral|. Throws QuadratureError on failure.
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b,
                              double abs_tol = 1e-10, double rel_tol = 1e-8,
                              std::size_t presplit = 16,
                              std::size_t max_panels = 4000) {
    struct Panel {
        double a, b, value, err;
    };
    if (!(b > a)) throw std::invalid_argument("integrate_adaptive: empty interval");
    if (presplit < 1) presplit = 1;

    std::vector<Panel> panels;
    panels.reserve(256);
    std::size_t evals = 0;
    const double w = (b - a) / static_cast<double>(presplit);
    for (std::size_t i = 0; i < presplit; ++i) {
        Panel p;
        p.a = a + w * static_cast<double>(i);
        p.b = (i + 1 == presplit) ? b : a + w * static_cast<double>(i + 1);
        detail::gauss_kronrod_15(f, p.a, p.b, p.value, p.err);
        evals += 15;
        panels.push_back(p);
    }

    auto total = [&panels]() {
        double v = 0.0, e = 0.0;
        for (const auto& p : panels) {
            v += p.value;
            e += p.err;
        }
        return std::pair<double, double>(v, e);
    };

    for (;;) {
        auto [value, err] = total();
        const double tol = abs_tol + rel_tol * std::fabs(value);
        if (err <= tol) return {value, err, evals};
        if (panels.size() >= max_panels) throw QuadratureError(err, tol);

        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;

        Panel left = panels[worst];
        const double mid = 0.5 * (left.a + left.b);
        Panel right{mid, left.b, 0.0, 0.0};
        left.b = mid;
        detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.err);
        detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.err);
        evals += 30;
        panels[worst] = left;
        panels.push_back(right);
    }
}

}  // namespace voltail
