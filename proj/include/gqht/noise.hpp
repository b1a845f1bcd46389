#pragma once

#include <cstdint>
#include <vector>

#include "gqht/oracle.hpp"
#include "gqht/su2.hpp"

// Perturbation experiments for noisy queried channels and noisy processing
// gates: the output trace distance of a serial protocol run against perturbed
// channels is bounded by (number of oracle uses) * epsilon.

namespace gqht {

struct NoiseSpec {
    enum class Kind { ChannelPerturbation, GatePerturbation };
    Kind kind = Kind::ChannelPerturbation;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
};

/// Ideal unitary composed with a random-axis rotation whose phase-aligned
/// operator-norm distance from the identity is certified <= epsilon.
Su2Matrix perturb(const Su2Matrix& u, const NoiseSpec& spec);

/// min_phi ||a - e^{i phi} b||_op for single-qubit unitaries (closed form via
/// the eigenphases of a b^dagger).
double unitary_operator_distance(const Su2Matrix& a, const Su2Matrix& b);

/// Trace distance between pure states, sqrt(1 - |<a|b>|^2); cross-checked
/// against the 2x2 density-matrix eigenvalue formula.
double trace_distance(const PureState& a, const PureState& b);
double trace_distance_density(const PureState& a, const PureState& b);

struct PeelingCheck {
    double distance = 0.0;
    double bound = 0.0;
    bool holds = false;
};

/// Evolves `prep` through the sequence with the ideal channel and with the
/// perturbed channel (identical fixed unitaries, no measurements) and checks
/// trace distance <= n_j * epsilon, n_j = number of oracle applications.
PeelingCheck check_peeling_bound(const QspSequence& seq, const CompoundQuery& cq,
                                 const Su2Matrix& ideal_channel, const NoiseSpec& spec,
                                 const PureState& prep);

/// Perturbs every processing gate (phase unitaries and fixed recipe gates)
/// with an independent <= epsilon rotation; used through RunOptions.
class GateNoiseModel {
  public:
    GateNoiseModel(double epsilon, std::uint64_t seed) : eps_(epsilon), seed_(seed) {}
    Su2Matrix perturb_gate(const Su2Matrix& g);

  private:
    double eps_;
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Runs the full decision protocol for `group` in sampled mode with perturbed
/// processing gates; returns the fraction of trials with recovered != hidden.
double gate_noise_experiment(const GroupId& group, double epsilon, int trials,
                             std::uint64_t seed);

}  // namespace gqht
