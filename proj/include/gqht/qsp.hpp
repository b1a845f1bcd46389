#pragma once

#include <vector>

#include "gqht/interp.hpp"
#include "gqht/su2.hpp"

// Quantum signal processing: forward evaluation of phase sequences,
// completion of a real parity polynomial into a valid (P, Q) pair, and phase
// synthesis by layer stripping, with round-trip verification.

namespace gqht {

/// Signal operator W(x) = [[x, i sqrt(1-x^2)], [i sqrt(1-x^2), x]].
/// For a channel R_x(theta) this equals sigma_z R_x(theta) sigma_z evaluated
/// at x = cos(theta/2).
Su2Matrix signal_w(double x);

/// Phase list Phi in R^{k+1} plus preparation/measurement states; evaluates
/// to e^{i phi_0 sigma_z} prod_{j=1..k} (W(x) e^{i phi_j sigma_z}).
struct QspSequence {
    std::vector<double> phases;  // size k+1
    PureState prep = PureState::ket0();
    PureState meas = PureState::ket0();

    int k() const { return static_cast<int>(phases.size()) - 1; }
};

Su2Matrix qsp_unitary(const std::vector<double>& phases, double x);

/// Complex polynomial pair in the Chebyshev basis. deg P = k, deg Q = k-1,
/// parities k mod 2 and opposite, |P|^2 + (1-x^2)|Q|^2 = 1 on [-1,1].
struct CompletedPair {
    std::vector<cplx> P;  // size k+1
    std::vector<cplx> Q;  // size k (empty when k = 0)

    int k() const { return static_cast<int>(P.size()) - 1; }
    cplx eval_P(double x) const { return cheb::eval(P, x); }
    cplx eval_Q(double x) const { return Q.empty() ? cplx{0.0, 0.0} : cheb::eval(Q, x); }

    /// max |P P* + (1-x^2) Q Q* - 1| over a uniform grid.
    double unit_identity_residual(int grid = 1000) const;
};

struct QspError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fit (P, Q) from samples of the QSP unitary at Chebyshev nodes. Throws
/// QspError if the fit residual exceeds 1e-8 (inconsistent sequence).
CompletedPair extract_polynomials(const std::vector<double>& phases);

/// Complete a certified real parity polynomial into (P, Q) with Re(P) = p and
/// Re(Q) = 0 (Fejér–Riesz factorization of 1 - p^2 via root finding of its
/// complexification on the unit disk).
CompletedPair gen_complex_poly(const ParityPolynomial& p);

struct SynthesizedPhases {
    std::vector<double> phases;
    PureState prep = PureState::ket0();
    PureState meas = PureState::ket0();
};

/// Layer stripping run in extended precision (50 significant digits), rounded
/// to double and verified by round trip against `pair` (coefficient max-norm
/// 1e-8). prep/meas are the states with <meas|U_Phi(x)|prep> equal to the
/// real target: |+>,|+> when Re(Q) = 0, |0>,|0> for a real pair.
SynthesizedPhases gen_phases(const CompletedPair& pair);

}  // namespace gqht
