#pragma once

// Reference numerics for the test suites, deliberately independent of the
// library's adaptive quadrature: fixed-grid composite Simpson with Kahan
// accumulation, an interior-split variant for kinked integrands, and a
// central finite difference.

#include <cmath>
#include <functional>
#include <initializer_list>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

// Composite Simpson over `panels` equal panels, Kahan-summed.
inline double simpson(const Fn& g, double lo, double hi,
                      long panels = 1L << 20) {
    double sum = 0.0, carry = 0.0;
    const double width = hi - lo;
    for (long i = 0; i < panels; ++i) {
        double x0 = lo + width * static_cast<double>(i) / panels;
        double x1 = lo + width * static_cast<double>(i + 1) / panels;
        double xm = 0.5 * (x0 + x1);
        double piece = (x1 - x0) / 6.0 * (g(x0) + 4.0 * g(xm) + g(x1));
        double y = piece - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

// Composite Simpson with the range split at interior kink locations so each
// piece is smooth.
inline double simpson_split(const Fn& g, double lo, double hi,
                            std::initializer_list<double> kinks,
                            long panels_per_piece = 1L << 18) {
    std::vector<double> edges{lo};
    for (double k : kinks)
        edges.push_back(k);
    edges.push_back(hi);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        total += simpson(g, edges[i], edges[i + 1], panels_per_piece);
    return total;
}

// Central finite difference with a magnitude-scaled step.
inline double fd_derivative(const Fn& g, double x, double h = 1e-6) {
    double step = h * std::fmax(1.0, std::fabs(x));
    return (g(x + step) - g(x - step)) / (2.0 * step);
}

} // namespace oracle
