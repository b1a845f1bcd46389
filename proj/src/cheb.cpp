#include "gqht/cheb.hpp"

namespace gqht::cheb {

std::vector<double> nodes_first_kind(int n) {
    if (n <= 0) throw std::invalid_argument("nodes: n must be positive");
    const double pi = std::acos(-1.0);
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = std::cos((2 * j + 1) * pi / (2 * n));
    return x;
}

std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0.0) continue;
            const double half = 0.5 * a[i] * b[j];
            out[i + j] += half;
            out[i >= j ? i - j : j - i] += half;
        }
    }
    return out;
}

std::vector<double> u_basis_to_t(const std::vector<double>& u) {
    // U_n = 2(T_n + T_{n-2} + ... + T_2) + T_0   (n even)
    // U_n = 2(T_n + T_{n-2} + ... + T_1)         (n odd)
    std::vector<double> t(u.size(), 0.0);
    for (std::size_t n = 0; n < u.size(); ++n) {
        if (u[n] == 0.0) continue;
        for (std::size_t k = n;; k -= 2) {
            t[k] += (k == 0 ? 1.0 : 2.0) * u[n];
            if (k < 2) break;
        }
    }
    return t;
}

}  // namespace gqht::cheb
