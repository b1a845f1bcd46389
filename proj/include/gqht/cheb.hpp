#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Chebyshev-T series helpers. Coefficient vectors are indexed by degree;
// trailing zeros are allowed. All routines work on [-1, 1].

namespace gqht::cheb {

/// Clenshaw evaluation of sum_k c[k] T_k(x).
template <class S>
S eval(const std::vector<S>& c, double x) {
    if (c.empty()) return S{};
    S b1{}, b2{};
    for (std::size_t j = c.size(); j-- > 1;) {
        S b0 = c[j] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c[0] + x * b1 - b2;
}

template <class S>
int degree(const std::vector<S>& c, double eps = 0.0) {
    for (std::size_t j = c.size(); j-- > 0;) {
        if (std::abs(c[j]) > eps) return static_cast<int>(j);
    }
    return -1;  // zero polynomial
}

/// Chebyshev points of the first kind, x_j = cos((2j+1)pi/2n), j = 0..n-1.
std::vector<double> nodes_first_kind(int n);

/// Interpolate f's samples at the n first-kind nodes into T-coefficients
/// c[0..n-1] (exact for polynomials of degree < n).
template <class S>
std::vector<S> fit_first_kind(const std::vector<S>& samples) {
    const int n = static_cast<int>(samples.size());
    if (n == 0) throw std::invalid_argument("fit: no samples");
    std::vector<S> c(n, S{});
    const double pi = std::acos(-1.0);
    for (int k = 0; k < n; ++k) {
        S acc{};
        for (int j = 0; j < n; ++j) {
            const double ang = (2 * j + 1) * pi / (2 * n);
            acc += samples[j] * std::cos(k * ang);
        }
        c[k] = acc * ((k == 0 ? 1.0 : 2.0) / n);
    }
    return c;
}

/// Product of two T-series via T_m T_n = (T_{m+n} + T_{|m-n|})/2.
std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b);

/// Rewrite a U-series sum_k u[k] U_k(x) as a T-series.
std::vector<double> u_basis_to_t(const std::vector<double>& u);

/// Zero out entries whose degree parity differs from `odd`; returns the
/// largest dropped magnitude (for diagnostics).
template <class S>
double enforce_parity(std::vector<S>& c, bool odd) {
    double dropped = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if ((k % 2 == 1) != odd) {
            dropped = std::max(dropped, static_cast<double>(std::abs(c[k])));
            c[k] = S{};
        }
    }
    return dropped;
}

}  // namespace gqht::cheb
