#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

// Exact-as-possible 2x2 complex matrix algebra for single-qubit unitaries,
// Bloch-sphere rotations and channel equality up to global phase. Everything
// here is a value type; all operations are pure.

namespace gqht {

using cplx = std::complex<double>;

namespace tol {
inline constexpr double unitary = 1e-12;
inline constexpr double axis_norm = 1e-12;
inline constexpr double state_norm = 1e-12;
inline constexpr double group_match = 1e-9;
}  // namespace tol

/// Rotation axis on the Bloch sphere: a Pauli axis, an equatorial axis
/// sigma_xi = sigma_x cos(xi) + sigma_y sin(xi), or an arbitrary unit vector.
class Axis {
  public:
    static Axis x() { return Axis{1.0, 0.0, 0.0}; }
    static Axis y() { return Axis{0.0, 1.0, 0.0}; }
    static Axis z() { return Axis{0.0, 0.0, 1.0}; }
    static Axis equatorial(double xi);
    /// Throws std::invalid_argument unless (nx,ny,nz) has norm 1 within 1e-12.
    static Axis unit_vector(double nx, double ny, double nz);

    double nx() const { return nx_; }
    double ny() const { return ny_; }
    double nz() const { return nz_; }

  private:
    Axis(double nx, double ny, double nz) : nx_(nx), ny_(ny), nz_(nz) {}
    double nx_, ny_, nz_;
};

/// Normalized single-qubit pure state (2-vector of complex amplitudes).
class PureState {
  public:
    PureState(cplx a0, cplx a1);

    static PureState ket0() { return PureState{1.0, 0.0}; }
    static PureState ket1() { return PureState{0.0, 1.0}; }
    static PureState plus();
    static PureState minus();

    cplx amp0() const { return a_[0]; }
    cplx amp1() const { return a_[1]; }

    cplx inner(const PureState& other) const;  // <this|other>

  private:
    std::array<cplx, 2> a_;
};

/// 2x2 unitary, row-major entries. Constructors validate unitarity.
class Su2Matrix {
  public:
    Su2Matrix(cplx a, cplx b, cplx c, cplx d);

    static Su2Matrix identity() { return Su2Matrix{1.0, 0.0, 0.0, 1.0}; }
    static Su2Matrix pauli_x() { return Su2Matrix{0.0, 1.0, 1.0, 0.0}; }
    static Su2Matrix pauli_y();
    static Su2Matrix pauli_z() { return Su2Matrix{1.0, 0.0, 0.0, -1.0}; }

    cplx at(int row, int col) const { return e_[2 * row + col]; }

    Su2Matrix operator*(const Su2Matrix& rhs) const;
    Su2Matrix adjoint() const;
    PureState apply(const PureState& s) const;

    double max_abs_diff(const Su2Matrix& other) const;
    bool is_unitary(double eps = tol::unitary) const;
    cplx det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

  private:
    std::array<cplx, 4> e_;
};

/// exp(-i (theta/2) sigma_axis).
Su2Matrix rotation(const Axis& axis, double theta);

Su2Matrix multiply(const Su2Matrix& a, const Su2Matrix& b);
Su2Matrix adjoint(const Su2Matrix& a);
PureState apply(const Su2Matrix& a, const PureState& s);

/// True iff a = e^{i phi} b for some phase phi, within tol (max-entry norm).
bool equal_up_to_phase(const Su2Matrix& a, const Su2Matrix& b, double tolerance);

/// Distance min_phi max-entry |a - e^{i phi} b| using the largest-entry phase
/// alignment (the witness behind equal_up_to_phase).
double phase_aligned_distance(const Su2Matrix& a, const Su2Matrix& b);

/// |<meas| u |prep>|^2.
double transition_probability(const PureState& prep, const Su2Matrix& u,
                              const PureState& meas);

}  // namespace gqht
