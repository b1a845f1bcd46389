#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gqht/cheb.hpp"

// Construction of definite-parity real polynomials interpolating prescribed
// {-1, 0, 1} targets on [-1, 1] with certified sup norm <= 1.

namespace gqht {

enum class Parity { Even, Odd };

struct InterpolationPoint {
    double x;      // in [-1, 1]
    double value;  // in {-1, 0, 1}
};

struct InterpolationTarget {
    std::vector<InterpolationPoint> points;
    Parity parity = Parity::Even;
    double min_gap = 0.0;  // min separation of the underlying angles on the circle

    /// Throws std::invalid_argument on duplicate points or values inconsistent
    /// with the declared parity.
    void validate() const;
};

/// Real polynomial in the Chebyshev basis with only matching-parity terms and
/// a certified bound max|p| <= norm_certificate on [-1, 1].
struct ParityPolynomial {
    Parity parity = Parity::Even;
    std::vector<double> coeffs;  // T-basis, indexed by degree
    int degree = 0;
    double norm_certificate = 0.0;

    double eval(double x) const { return cheb::eval(coeffs, x); }
};

struct InfeasibleTarget : std::runtime_error {
    explicit InfeasibleTarget(const std::string& msg, double residual)
        : std::runtime_error(msg), best_residual(residual) {}
    double best_residual;
};

/// Lowest-degree definite-parity interpolant found by the search (candidate
/// degrees step by 2; each candidate is fitted by equality-constrained
/// weighted least squares followed by Remez-style exchange, then certified on
/// a dense grid with local-maximum refinement). Throws InfeasibleTarget when
/// no degree up to 8*npoints + 16 certifies.
ParityPolynomial gen_real_poly(const InterpolationTarget& target);

/// Alternating {0,1} assignment over a set of circle angles (radians,
/// distinct mod 2pi): angles are grouped with their reflection partners
/// (theta, 2pi - theta), groups are alternately assigned 1/0 in order of
/// decreasing cos(theta/2), and the signed target for the requested parity is
/// returned. The group holding the smallest angle gets value 1.
InterpolationTarget alternating_target(const std::vector<double>& angles, Parity parity);

/// Smallest certified degree for the angle set over both parities.
int min_degree_both_parities(const std::vector<double>& angles);

/// Degree achieved by the fitter on the equispaced alternating target with
/// circle gap delta (angles k*delta covering the circle), for each delta.
std::vector<std::pair<double, int>> measure_degree_scaling(
    const std::vector<double>& delta_list);

}  // namespace gqht
