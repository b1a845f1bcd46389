#include "gqht/qsp.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>

namespace gqht {

namespace {

constexpr double kPi = 3.14159265358979323846;

using mpf = boost::multiprecision::cpp_bin_float_50;
using mpc = boost::multiprecision::cpp_complex_50;

Su2Matrix z_phase(double phi) {
    const cplx e{std::cos(phi), std::sin(phi)};
    return Su2Matrix{e, 0.0, 0.0, std::conj(e)};
}

bool parity_matches(std::size_t k, std::size_t idx) { return (idx % 2) == (k % 2); }

}  // namespace

Su2Matrix signal_w(double x) {
    if (std::abs(x) > 1.0 + 1e-12) throw std::invalid_argument("signal value outside [-1,1]");
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    const cplx is{0.0, s};
    return Su2Matrix{x, is, is, x};
}

Su2Matrix qsp_unitary(const std::vector<double>& phases, double x) {
    if (phases.empty()) throw std::invalid_argument("empty phase list");
    Su2Matrix u = z_phase(phases[0]);
    const Su2Matrix w = signal_w(x);
    for (std::size_t j = 1; j < phases.size(); ++j) {
        u = u * w * z_phase(phases[j]);
    }
    return u;
}

double CompletedPair::unit_identity_residual(int grid) const {
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double x = -1.0 + 2.0 * i / (grid - 1);
        const double v = std::norm(eval_P(x)) + (1.0 - x * x) * std::norm(eval_Q(x));
        worst = std::max(worst, std::abs(v - 1.0));
    }
    return worst;
}

CompletedPair extract_polynomials(const std::vector<double>& phases) {
    const int k = static_cast<int>(phases.size()) - 1;
    if (k < 0) throw std::invalid_argument("empty phase list");
    CompletedPair pair;
    {
        const auto xs = cheb::nodes_first_kind(k + 1);
        std::vector<cplx> samples(k + 1);
        for (int i = 0; i <= k; ++i) samples[i] = qsp_unitary(phases, xs[i]).at(0, 0);
        pair.P = cheb::fit_first_kind(samples);
    }
    if (k >= 1) {
        const auto xs = cheb::nodes_first_kind(k);
        std::vector<cplx> samples(k);
        for (int i = 0; i < k; ++i) {
            const double s = std::sqrt(1.0 - xs[i] * xs[i]);
            samples[i] = qsp_unitary(phases, xs[i]).at(0, 1) / cplx{0.0, s};
        }
        pair.Q = cheb::fit_first_kind(samples);
    }
    cheb::enforce_parity(pair.P, k % 2 == 1);
    if (!pair.Q.empty()) cheb::enforce_parity(pair.Q, k % 2 == 0);

    // Independent residual check at fresh nodes.
    double resid = 0.0;
    for (double x : cheb::nodes_first_kind(2 * k + 7)) {
        const Su2Matrix u = qsp_unitary(phases, x);
        resid = std::max(resid, std::abs(u.at(0, 0) - pair.eval_P(x)));
        const double s = std::sqrt(1.0 - x * x);
        resid = std::max(resid, std::abs(u.at(0, 1) - cplx{0.0, s} * pair.eval_Q(x)));
    }
    if (resid > 1e-8) throw QspError("inconsistent sequence: fit residual " + std::to_string(resid));
    return pair;
}

CompletedPair gen_complex_poly(const ParityPolynomial& p) {
    if (p.norm_certificate > 1.0 + 1e-9) {
        throw std::invalid_argument("polynomial norm certificate exceeds 1");
    }
    const int k = std::max(cheb::degree(p.coeffs, 1e-13), 0);

    if (k == 0) {
        const double v = p.coeffs.empty() ? 0.0 : p.coeffs[0];
        const double a = std::sqrt(std::max(0.0, 1.0 - v * v));
        return CompletedPair{{cplx{v, a}}, {}};
    }

    // F = 1 - p^2 (Chebyshev basis), lifted by a small positive perturbation so
    // that all unit-circle roots split cleanly off the circle.
    std::vector<double> p_full(p.coeffs.begin(), p.coeffs.begin() + k + 1);
    std::vector<double> F = cheb::multiply(p_full, p_full);
    for (auto& c : F) c = -c;
    F[0] += 1.0;

    auto complete = [&](double eps) -> CompletedPair {
        std::vector<double> Fe = F;
        Fe[0] += eps;

        // q(z) = z^{2k} * L(z), with L the Laurent lift of F: the T-coefficients
        // of F are literally the symmetric z-coefficients of q.
        const int deg_q = 4 * k;
        std::vector<double> q(deg_q + 1, 0.0);
        q[2 * k] = Fe[0];
        for (int j = 1; j <= 2 * k; ++j) {
            q[2 * k + j] += 0.5 * Fe[j];
            q[2 * k - j] += 0.5 * Fe[j];
        }
        if (std::abs(q[deg_q]) < 1e-300) throw QspError("degenerate leading coefficient");

        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg_q, deg_q);
        for (int i = 1; i < deg_q; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < deg_q; ++i) companion(i, deg_q - 1) = -q[i] / q[deg_q];
        Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
        std::vector<cplx> roots(deg_q);
        for (int i = 0; i < deg_q; ++i) {
            roots[i] = {es.eigenvalues()(i).real(), es.eigenvalues()(i).imag()};
        }

        // Fejér–Riesz pick: match each root with its reciprocal-conjugate
        // partner and keep the one inside the unit disk.
        std::vector<bool> used(deg_q, false);
        std::vector<cplx> picked;
        for (int i = 0; i < deg_q; ++i) {
            if (used[i]) continue;
            const cplx want = 1.0 / std::conj(roots[i]);
            int best = -1;
            double best_d = std::numeric_limits<double>::infinity();
            for (int j = 0; j < deg_q; ++j) {
                if (j == i || used[j]) continue;
                const double d = std::abs(roots[j] - want);
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
            if (best < 0) throw QspError("root pairing failed");
            used[i] = used[best] = true;
            picked.push_back(std::abs(roots[i]) <= std::abs(roots[best]) ? roots[i]
                                                                         : roots[best]);
        }
        if (static_cast<int>(picked.size()) != 2 * k) throw QspError("root pairing count");

        // Expand g(z) = prod (z - r) in extended precision.
        std::vector<mpc> g{mpc(1)};
        for (const cplx& r : picked) {
            std::vector<mpc> next(g.size() + 1, mpc(0));
            const mpc rr{r.real(), r.imag()};
            for (std::size_t i = 0; i < g.size(); ++i) {
                next[i + 1] += g[i];
                next[i] -= g[i] * rr;
            }
            g = next;
        }

        const mpc g0 = g[0];
        const mpc c_mpc = mpc(q[deg_q]) / g0;
        const mpf c_re = c_mpc.real();
        if (c_re <= 0 || abs(c_mpc.imag()) > 1e-6 * abs(c_re)) {
            throw QspError("Fejér–Riesz scale is not positive real");
        }
        const mpf sc = sqrt(c_re);

        std::vector<double> a_coeffs(k + 1, 0.0);   // T basis
        std::vector<double> b_u(k, 0.0);            // U basis, index m-1
        a_coeffs[0] = static_cast<double>(mpf(sc * g[k].real()));
        for (int m = 1; m <= k; ++m) {
            const mpf gp = g[k + m].real(), gm = g[k - m].real();
            a_coeffs[m] = static_cast<double>(mpf(sc * (gp + gm)));
            b_u[m - 1] = static_cast<double>(mpf(sc * (gp - gm)));
        }
        cheb::enforce_parity(a_coeffs, k % 2 == 1);
        std::vector<double> b_t = cheb::u_basis_to_t(b_u);
        b_t.resize(k, 0.0);
        cheb::enforce_parity(b_t, k % 2 == 0);

        CompletedPair pair;
        pair.P.resize(k + 1);
        for (int i = 0; i <= k; ++i) {
            pair.P[i] = cplx{i < static_cast<int>(p_full.size()) ? p_full[i] : 0.0,
                             a_coeffs[i]};
        }
        pair.Q.resize(k);
        for (int i = 0; i < k; ++i) pair.Q[i] = cplx{0.0, b_t[i]};
        return pair;
    };

    for (double eps : {1e-12, 1e-10, 1e-8}) {
        try {
            CompletedPair pair = complete(eps);
            if (pair.unit_identity_residual() <= 1e-9) return pair;
        } catch (const QspError&) {
        }
    }
    throw QspError("completion failed to certify the unit identity");
}

SynthesizedPhases gen_phases(const CompletedPair& pair) {
    const int k = pair.k();
    if (k < 0) throw std::invalid_argument("empty pair");

    // Chebyshev -> monomial in 50-digit floats; coefficient cancellation in the
    // conversion and in the stripping recursion is the known failure mode.
    auto to_monomial = [](const std::vector<cplx>& t) {
        const int n = static_cast<int>(t.size());
        std::vector<mpc> mono(std::max(n, 1), mpc(0));
        std::vector<mpf> tprev{mpf(1)}, tcur{mpf(0), mpf(1)};  // T_0, T_1
        for (int deg = 0; deg < n; ++deg) {
            const std::vector<mpf>& tk = (deg == 0) ? tprev : tcur;
            const mpc coeff{t[deg].real(), t[deg].imag()};
            for (std::size_t i = 0; i < tk.size(); ++i) mono[i] += coeff * tk[i];
            if (deg >= 1) {
                std::vector<mpf> tnext(deg + 2, mpf(0));
                for (std::size_t i = 0; i < tcur.size(); ++i) tnext[i + 1] += 2 * tcur[i];
                for (std::size_t i = 0; i < tprev.size(); ++i) tnext[i] -= tprev[i];
                tprev = std::move(tcur);
                tcur = std::move(tnext);
            }
        }
        return mono;
    };

    std::vector<mpc> P = to_monomial(pair.P);
    std::vector<mpc> Q = pair.Q.empty() ? std::vector<mpc>{} : to_monomial(pair.Q);
    P.resize(k + 1, mpc(0));
    Q.resize(std::max(k, 1), mpc(0));

    double scale = 0.0;
    for (const auto& c : pair.P) scale = std::max(scale, std::abs(c));

    std::vector<double> phases(k + 1, 0.0);
    for (int deg = k; deg >= 1; --deg) {
        const mpc top_p = P[deg];
        const mpc top_q = Q[deg - 1];
        if (abs(top_q) == 0) throw QspError("layer stripping: vanishing Q leading coefficient");
        const mpc ratio = top_p / top_q;
        const mpf phi2 = atan2(mpf(ratio.imag()), mpf(ratio.real()));
        const mpf phi = phi2 / 2;
        phases[deg] = static_cast<double>(phi);
        const mpc em{cos(phi), -sin(phi)};  // e^{-i phi}
        const mpc ep{cos(phi), sin(phi)};   // e^{+i phi}

        // P' = x P e^{-i phi} + (1 - x^2) Q e^{+i phi};  Q' = x Q e^{+i phi} - P e^{-i phi}.
        std::vector<mpc> pn(deg + 2, mpc(0)), qn(deg + 1, mpc(0));
        for (int i = 0; i <= deg; ++i) pn[i + 1] += P[i] * em;
        for (int i = 0; i < deg; ++i) {
            pn[i] += Q[i] * ep;
            pn[i + 2] -= Q[i] * ep;
        }
        for (int i = 0; i < deg; ++i) qn[i + 1] += Q[i] * ep;
        for (int i = 0; i <= deg; ++i) qn[i] -= P[i] * em;

        for (int drop = deg; drop <= deg + 1; ++drop) {
            if (static_cast<double>(mpf(abs(pn[drop]))) > 1e-7 * std::max(scale, 1.0)) {
                throw QspError("layer stripping residual blow-up in P");
            }
        }
        for (int drop = deg - 1; drop <= deg; ++drop) {
            if (static_cast<double>(mpf(abs(qn[drop]))) > 1e-7 * std::max(scale, 1.0)) {
                throw QspError("layer stripping residual blow-up in Q");
            }
        }
        pn.resize(deg);
        qn.resize(std::max(deg - 1, 1));
        if (deg == 1) qn.assign(1, mpc(0));
        P = std::move(pn);
        Q = std::move(qn);
    }
    const mpc p0 = P[0];
    phases[0] = static_cast<double>(mpf(atan2(mpf(p0.imag()), mpf(p0.real()))));

    // Round trip in double precision.
    const CompletedPair back = extract_polynomials(phases);
    double err = 0.0;
    for (int i = 0; i <= k; ++i) err = std::max(err, std::abs(back.P[i] - pair.P[i]));
    for (int i = 0; i < k; ++i) err = std::max(err, std::abs(back.Q[i] - pair.Q[i]));
    if (err > 1e-8) {
        throw QspError("phase synthesis round trip failed: " + std::to_string(err));
    }

    SynthesizedPhases out;
    out.phases = phases;
    double re_q = 0.0, imag_all = 0.0;
    for (const auto& c : pair.Q) re_q = std::max(re_q, std::abs(c.real()));
    for (const auto& c : pair.P) imag_all = std::max(imag_all, std::abs(c.imag()));
    for (const auto& c : pair.Q) imag_all = std::max(imag_all, std::abs(c.imag()));
    if (re_q <= 1e-9) {
        out.prep = PureState::plus();
        out.meas = PureState::plus();
    } else {
        out.prep = PureState::ket0();
        out.meas = PureState::ket0();
    }
    (void)imag_all;
    return out;
}

}  // namespace gqht
