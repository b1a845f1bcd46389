#include "gqht/interp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace gqht {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInterpTol = 1e-9;
constexpr double kCertSlack = 1e-12;
constexpr double kMargin = 1e-6;  // strict-interior margin at free extrema

double tcheb(int k, double x) {
    // Direct T_k for matrix assembly; |x| <= 1 in all uses.
    return std::cos(k * std::acos(std::clamp(x, -1.0, 1.0)));
}

struct Constraint {
    double x;
    double value;
};

/// Reduce interpolation points to one representative per |x| orbit, checking
/// parity consistency. Returns constraints with x >= 0.
std::vector<Constraint> dedup_constraints(const InterpolationTarget& t) {
    const bool odd = t.parity == Parity::Odd;
    std::map<long long, Constraint> reps;  // keyed by rounded |x|
    std::vector<Constraint> out;
    for (const auto& p : t.points) {
        const double ax = std::abs(p.x);
        const double v = (p.x < 0.0 && odd) ? -p.value : p.value;
        const long long key = std::llround(ax * 1e12);
        auto it = reps.find(key);
        if (it == reps.end()) {
            reps[key] = {ax, v};
        } else if (std::abs(it->second.value - v) > 1e-9) {
            throw std::invalid_argument("target values inconsistent with declared parity");
        }
    }
    for (auto& [key, c] : reps) {
        if (odd && c.x < 1e-12) {
            if (std::abs(c.value) > 1e-9) {
                throw std::invalid_argument("odd polynomial cannot be nonzero at x = 0");
            }
            continue;  // automatically satisfied
        }
        out.push_back(c);
    }
    return out;
}

std::vector<int> basis_degrees(int d, Parity parity) {
    std::vector<int> ks;
    for (int k = (parity == Parity::Odd) ? 1 : 0; k <= d; k += 2) ks.push_back(k);
    return ks;
}

std::vector<double> assemble(const std::vector<int>& ks, const Eigen::VectorXd& c) {
    std::vector<double> coeffs(ks.empty() ? 0 : ks.back() + 1, 0.0);
    for (std::size_t i = 0; i < ks.size(); ++i) coeffs[ks[i]] = c(static_cast<int>(i));
    return coeffs;
}

/// min c^T H c subject to A c = b, solved through the bordered KKT system.
Eigen::VectorXd constrained_min(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A,
                                const Eigen::VectorXd& b) {
    const int m = static_cast<int>(H.rows());
    const int nc = static_cast<int>(A.rows());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + nc, m + nc);
    kkt.topLeftCorner(m, m) = 2.0 * H + 1e-13 * Eigen::MatrixXd::Identity(m, m);
    kkt.topRightCorner(m, nc) = A.transpose();
    kkt.bottomLeftCorner(nc, m) = A;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + nc);
    rhs.tail(nc) = b;
    const Eigen::VectorXd sol = kkt.fullPivLu().solve(rhs);
    return sol.head(m);
}

struct Extremum {
    double x;
    double value;  // signed p(x)
};

/// Local maxima of |p| on [-1,1]: grid scan plus golden-section refinement.
std::vector<Extremum> find_extrema(const std::vector<double>& coeffs, int grid_size) {
    std::vector<double> xs(grid_size);
    for (int i = 0; i < grid_size; ++i) xs[i] = std::cos(i * kPi / (grid_size - 1));
    std::vector<double> vals(grid_size);
    for (int i = 0; i < grid_size; ++i) vals[i] = cheb::eval(coeffs, xs[i]);

    std::vector<Extremum> out;
    out.push_back({1.0, vals.front()});
    out.push_back({-1.0, vals.back()});
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 1; i + 1 < grid_size; ++i) {
        if (std::abs(vals[i]) >= std::abs(vals[i - 1]) &&
            std::abs(vals[i]) >= std::abs(vals[i + 1])) {
            double lo = xs[i + 1], hi = xs[i - 1];  // xs descending
            double a = hi - golden * (hi - lo), b = lo + golden * (hi - lo);
            double fa = std::abs(cheb::eval(coeffs, a)), fb = std::abs(cheb::eval(coeffs, b));
            for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
                if (fa < fb) {
                    hi = b;  // NOLINT: golden section on |p|
                    b = a;
                    fb = fa;
                    a = hi - golden * (hi - lo);
                    fa = std::abs(cheb::eval(coeffs, a));
                } else {
                    lo = a;
                    a = b;
                    fa = fb;
                    b = lo + golden * (hi - lo);
                    fb = std::abs(cheb::eval(coeffs, b));
                }
            }
            const double xm = 0.5 * (lo + hi);
            out.push_back({xm, cheb::eval(coeffs, xm)});
        }
    }
    return out;
}

double certified_norm(const std::vector<double>& coeffs, int degree) {
    const int grid = 64 * (degree + 1) + 1;
    double m = 0.0;
    for (const auto& e : find_extrema(coeffs, grid)) m = std::max(m, std::abs(e.value));
    return m;
}

struct FitResult {
    bool ok = false;
    std::vector<double> coeffs;
    double certificate = 0.0;
};

FitResult try_degree(const std::vector<Constraint>& cons, Parity parity, int d) {
    const auto ks = basis_degrees(d, parity);
    const int m = static_cast<int>(ks.size());
    const int nc = static_cast<int>(cons.size());
    if (m < nc) return {};

    Eigen::MatrixXd A(nc, m);
    Eigen::VectorXd b(nc);
    for (int i = 0; i < nc; ++i) {
        for (int j = 0; j < m; ++j) A(i, j) = tcheb(ks[j], cons[i].x);
        b(i) = cons[i].value;
    }

    auto residual_ok = [&](const std::vector<double>& coeffs) {
        for (const auto& c : cons) {
            if (std::abs(cheb::eval(coeffs, c.x) - c.value) > kInterpTol) return false;
        }
        return true;
    };
    auto near_constraint = [&](double x) {
        for (const auto& c : cons) {
            if (std::abs(std::abs(x) - c.x) < 1e-7) return true;
        }
        return false;
    };

    const int fit_grid = 8 * (d + 1) + 33;
    const auto xs = cheb::nodes_first_kind(fit_grid);
    Eigen::MatrixXd B(fit_grid, m);
    for (int i = 0; i < fit_grid; ++i) {
        for (int j = 0; j < m; ++j) B(i, j) = tcheb(ks[j], xs[i]);
    }

    Eigen::VectorXd w = Eigen::VectorXd::Ones(fit_grid);
    Eigen::VectorXd c;
    std::vector<double> coeffs;
    auto certify = [&](const std::vector<double>& cf) -> FitResult {
        if (!residual_ok(cf)) return {};
        const double norm = certified_norm(cf, d);
        if (norm <= 1.0 + kCertSlack) return {true, cf, norm};
        return {};
    };

    if (m == nc) {
        c = A.fullPivLu().solve(b);
        if ((A * c - b).cwiseAbs().maxCoeff() > 1e-8) return {};  // singular / inconsistent
        coeffs = assemble(ks, c);
        return certify(coeffs);
    }

    // Lawson pass: iteratively reweighted LS drives the free extrema toward
    // the constrained minimax solution.
    FitResult best{};
    for (int iter = 0; iter < 80; ++iter) {
        Eigen::MatrixXd H = B.transpose() * w.asDiagonal() * B;
        c = constrained_min(H, A, b);
        Eigen::VectorXd p = B * c;
        for (int i = 0; i < fit_grid; ++i) w(i) *= std::max(std::abs(p(i)), 1e-8);
        w *= fit_grid / w.sum();
        if (iter % 10 == 9 || iter == 0) {
            coeffs = assemble(ks, c);
            FitResult r = certify(coeffs);
            if (r.ok) return r;
            if (!best.ok) best = {false, coeffs, certified_norm(coeffs, d)};
        }
    }

    // Remez-style exchange: pin worst free extrema at 1 - margin.
    coeffs = assemble(ks, c);
    std::vector<Extremum> working;
    for (int iter = 0; iter < 50; ++iter) {
        auto ext = find_extrema(coeffs, 16 * (d + 1) + 1);
        std::vector<Extremum> violators;
        for (const auto& e : ext) {
            if (std::abs(e.value) > 1.0 - kMargin + 1e-9 && !near_constraint(e.x)) {
                violators.push_back(e);
            }
        }
        if (violators.empty()) {
            FitResult r = certify(coeffs);
            if (r.ok) return r;
        }
        for (const auto& v : violators) {
            bool merged = false;
            for (auto& wk : working) {
                if (std::abs(wk.x - v.x) < 2e-3 / (d + 1)) {
                    wk = v;
                    merged = true;
                    break;
                }
            }
            if (!merged) working.push_back(v);
        }
        std::sort(working.begin(), working.end(), [](const Extremum& a, const Extremum& b) {
            return std::abs(a.value) > std::abs(b.value);
        });
        if (static_cast<int>(working.size()) > m - nc) working.resize(m - nc);
        if (working.empty()) break;

        Eigen::MatrixXd Aw(nc + working.size(), m);
        Eigen::VectorXd bw(nc + working.size());
        Aw.topRows(nc) = A;
        bw.head(nc) = b;
        for (std::size_t i = 0; i < working.size(); ++i) {
            for (int j = 0; j < m; ++j) {
                Aw(nc + static_cast<int>(i), j) = tcheb(ks[j], working[i].x);
            }
            bw(nc + static_cast<int>(i)) =
                (working[i].value >= 0 ? 1.0 : -1.0) * (1.0 - kMargin);
        }
        Eigen::MatrixXd H = B.transpose() * w.asDiagonal() * B;
        c = constrained_min(H, Aw, bw);
        coeffs = assemble(ks, c);
        FitResult r = certify(coeffs);
        if (r.ok) return r;
        if (!best.ok || certified_norm(coeffs, d) < best.certificate) {
            best = {false, coeffs, certified_norm(coeffs, d)};
        }
    }
    return best;  // not ok
}

}  // namespace

void InterpolationTarget::validate() const {
    if (points.empty()) throw std::invalid_argument("empty interpolation target");
    std::set<long long> seen;
    for (const auto& p : points) {
        if (std::abs(p.x) > 1.0 + 1e-12) throw std::invalid_argument("point outside [-1,1]");
        if (std::abs(p.value) > 1e-9 && std::abs(std::abs(p.value) - 1.0) > 1e-9) {
            throw std::invalid_argument("target values must lie in {-1, 0, 1}");
        }
        if (!seen.insert(std::llround(p.x * 1e12)).second) {
            throw std::invalid_argument("duplicate interpolation point");
        }
    }
    dedup_constraints(*this);  // throws on parity inconsistency
}

ParityPolynomial gen_real_poly(const InterpolationTarget& target) {
    target.validate();
    const auto cons = dedup_constraints(target);
    const int d_max = 8 * static_cast<int>(target.points.size()) + 16;
    const int d0 = target.parity == Parity::Odd ? 1 : 0;
    double best_residual = std::numeric_limits<double>::infinity();
    for (int d = d0; d <= d_max; d += 2) {
        FitResult r = try_degree(cons, target.parity, d);
        if (r.ok) {
            // Monotone feasibility check: the next admissible degree must
            // also certify.
            if (d + 2 <= d_max) {
                FitResult r2 = try_degree(cons, target.parity, d + 2);
                if (!r2.ok) {
                    throw std::runtime_error(
                        "feasibility not monotone in degree (fitter defect)");
                }
            }
            ParityPolynomial poly;
            poly.parity = target.parity;
            poly.coeffs = r.coeffs;
            poly.degree = cheb::degree(r.coeffs, 1e-13);
            if (poly.degree < 0) poly.degree = 0;
            poly.norm_certificate = r.certificate;
            return poly;
        }
        if (r.certificate > 0.0) best_residual = std::min(best_residual, r.certificate - 1.0);
    }
    throw InfeasibleTarget("no certified interpolant up to degree " + std::to_string(d_max),
                           best_residual);
}

InterpolationTarget alternating_target(const std::vector<double>& angles, Parity parity) {
    const double two_pi = 2.0 * kPi;
    std::vector<double> norm;
    for (double a : angles) {
        double v = std::fmod(a, two_pi);
        if (v < 0) v += two_pi;
        norm.push_back(v);
    }
    std::sort(norm.begin(), norm.end());

    // Group each angle with its reflection partner 2pi - theta when present.
    const int n = static_cast<int>(norm.size());
    std::vector<int> group(n, -1);
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        const int gid = static_cast<int>(groups.size());
        groups.push_back({i});
        group[i] = gid;
        const double partner = std::fmod(two_pi - norm[i], two_pi);
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(norm[j] - partner) < 1e-9) {
                group[j] = gid;
                groups.back().push_back(j);
                break;
            }
        }
    }

    double min_gap = two_pi;
    for (int i = 0; i < n; ++i) {
        const double next = (i + 1 < n) ? norm[i + 1] : norm[0] + two_pi;
        min_gap = std::min(min_gap, next - norm[i]);
    }

    InterpolationTarget t;
    t.parity = parity;
    t.min_gap = min_gap;
    for (std::size_t gid = 0; gid < groups.size(); ++gid) {
        const double assign = (gid % 2 == 0) ? 1.0 : 0.0;  // groups are in increasing
                                                           // canonical angle order
        for (int idx : groups[gid]) {
            const double x = std::cos(norm[idx] / 2.0);
            double v = assign;
            if (parity == Parity::Odd && x < 0.0) v = -v;
            t.points.push_back({x, v});
        }
    }
    return t;
}

int min_degree_both_parities(const std::vector<double>& angles) {
    int best = -1;
    for (Parity p : {Parity::Even, Parity::Odd}) {
        try {
            const ParityPolynomial poly = gen_real_poly(alternating_target(angles, p));
            if (best < 0 || poly.degree < best) best = poly.degree;
        } catch (const InfeasibleTarget&) {
        }
    }
    if (best < 0) throw std::runtime_error("no parity admits a certified interpolant");
    return best;
}

std::vector<std::pair<double, int>> measure_degree_scaling(
    const std::vector<double>& delta_list) {
    std::vector<std::pair<double, int>> out;
    for (double delta : delta_list) {
        if (delta <= 0 || delta > kPi) throw std::invalid_argument("delta out of range");
        const int n = static_cast<int>(std::llround(2.0 * kPi / delta));
        std::vector<double> angles;
        for (int k = 0; k < n; ++k) angles.push_back(k * 2.0 * kPi / n);
        out.emplace_back(delta, min_degree_both_parities(angles));
    }
    return out;
}

}  // namespace gqht
