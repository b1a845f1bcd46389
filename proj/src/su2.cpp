#include "gqht/su2.hpp"

#include <cmath>

namespace gqht {

namespace {

void require_finite(cplx v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

}  // namespace

Axis Axis::equatorial(double xi) {
    if (!std::isfinite(xi)) throw std::invalid_argument("equatorial axis: non-finite angle");
    return Axis{std::cos(xi), std::sin(xi), 0.0};
}

Axis Axis::unit_vector(double nx, double ny, double nz) {
    const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol::axis_norm) {
        throw std::invalid_argument("axis vector must have unit norm");
    }
    return Axis{nx, ny, nz};
}

PureState::PureState(cplx a0, cplx a1) : a_{a0, a1} {
    require_finite(a0, "PureState");
    require_finite(a1, "PureState");
    const double norm = std::sqrt(std::norm(a0) + std::norm(a1));
    if (std::abs(norm - 1.0) > 1e-9) {
        throw std::invalid_argument("state must be normalized");
    }
    // Renormalize residual drift so long gate chains stay exactly norm-1.
    a_[0] /= norm;
    a_[1] /= norm;
}

PureState PureState::plus() {
    const double s = 1.0 / std::sqrt(2.0);
    return PureState{s, s};
}

PureState PureState::minus() {
    const double s = 1.0 / std::sqrt(2.0);
    return PureState{s, -s};
}

cplx PureState::inner(const PureState& other) const {
    return std::conj(a_[0]) * other.a_[0] + std::conj(a_[1]) * other.a_[1];
}

Su2Matrix::Su2Matrix(cplx a, cplx b, cplx c, cplx d) : e_{a, b, c, d} {
    require_finite(a, "Su2Matrix");
    require_finite(b, "Su2Matrix");
    require_finite(c, "Su2Matrix");
    require_finite(d, "Su2Matrix");
}

Su2Matrix Su2Matrix::pauli_y() {
    return Su2Matrix{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0};
}

Su2Matrix Su2Matrix::operator*(const Su2Matrix& r) const {
    return Su2Matrix{e_[0] * r.e_[0] + e_[1] * r.e_[2], e_[0] * r.e_[1] + e_[1] * r.e_[3],
                     e_[2] * r.e_[0] + e_[3] * r.e_[2], e_[2] * r.e_[1] + e_[3] * r.e_[3]};
}

Su2Matrix Su2Matrix::adjoint() const {
    return Su2Matrix{std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

PureState Su2Matrix::apply(const PureState& s) const {
    return PureState{e_[0] * s.amp0() + e_[1] * s.amp1(),
                     e_[2] * s.amp0() + e_[3] * s.amp1()};
}

double Su2Matrix::max_abs_diff(const Su2Matrix& other) const {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(e_[i] - other.e_[i]));
    return m;
}

bool Su2Matrix::is_unitary(double eps) const {
    const Su2Matrix p = (*this) * adjoint();
    return p.max_abs_diff(identity()) <= eps;
}

Su2Matrix rotation(const Axis& axis, double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("rotation: non-finite angle");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cplx mi{0.0, -1.0};
    // cos(theta/2) I - i sin(theta/2) (n . sigma)
    return Su2Matrix{c + mi * (s * axis.nz()),
                     mi * s * cplx{axis.nx(), -axis.ny()},
                     mi * s * cplx{axis.nx(), axis.ny()},
                     c - mi * (s * axis.nz())};
}

Su2Matrix multiply(const Su2Matrix& a, const Su2Matrix& b) { return a * b; }
Su2Matrix adjoint(const Su2Matrix& a) { return a.adjoint(); }
PureState apply(const Su2Matrix& a, const PureState& s) { return a.apply(s); }

double phase_aligned_distance(const Su2Matrix& a, const Su2Matrix& b) {
    // Align on b's largest entry; for a unitary that entry has modulus >= 1/sqrt(2),
    // so the ratio is well conditioned.
    int k = 0;
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double m = std::abs(b.at(i / 2, i % 2));
        if (m > best) {
            best = m;
            k = i;
        }
    }
    const cplx bk = b.at(k / 2, k % 2);
    const cplx ak = a.at(k / 2, k % 2);
    if (std::abs(ak) == 0.0) return a.max_abs_diff(b);  // cannot align; report raw
    cplx phase = ak / bk;
    phase /= std::abs(phase);
    double m = 0.0;
    for (int i = 0; i < 4; ++i) {
        m = std::max(m, std::abs(a.at(i / 2, i % 2) - phase * b.at(i / 2, i % 2)));
    }
    return m;
}

bool equal_up_to_phase(const Su2Matrix& a, const Su2Matrix& b, double tolerance) {
    return phase_aligned_distance(a, b) <= tolerance;
}

double transition_probability(const PureState& prep, const Su2Matrix& u,
                              const PureState& meas) {
    return std::norm(meas.inner(u.apply(prep)));
}

}  // namespace gqht
