#include "gqht/oracle.hpp"

#include <cmath>
#include <random>

#include "gqht/noise.hpp"

namespace gqht {

int CompoundQuery::multiplicity() const {
    int m = 0;
    for (const auto& it : items) m += it.oracle ? 1 : 0;
    return m;
}

CompoundQuery CompoundQuery::bare() {
    CompoundQuery cq;
    cq.items.push_back({});
    cq.label = "E";
    return cq;
}

CompoundQuery CompoundQuery::pre_rotated(const Su2Matrix& pre, const std::string& name) {
    CompoundQuery cq;
    cq.items.push_back({false, pre});
    cq.items.push_back({});
    cq.label = "E*" + name;
    return cq;
}

CompoundQuery compose(const CompoundQuery& outer, const CompoundQuery& inner) {
    CompoundQuery cq;
    cq.label = outer.label;
    std::string::size_type pos;
    while ((pos = cq.label.find('E')) != std::string::npos) {
        cq.label.replace(pos, 1, "(" + inner.label + ")");
        break;  // replace only the first; labels are short descriptions
    }
    for (const auto& it : outer.items) {
        if (it.oracle) {
            cq.items.insert(cq.items.end(), inner.items.begin(), inner.items.end());
        } else {
            cq.items.push_back(it);
        }
    }
    if (cq.multiplicity() < 1) throw std::invalid_argument("compound query needs an oracle");
    return cq;
}

CompoundQuery powered(const CompoundQuery& cq, int power) {
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    CompoundQuery out;
    for (int i = 0; i < power; ++i) {
        out.items.insert(out.items.end(), cq.items.begin(), cq.items.end());
    }
    out.label = power == 1 ? cq.label : "(" + cq.label + ")^" + std::to_string(power);
    return out;
}

CompoundQuery conjugated(const Su2Matrix& v, const CompoundQuery& cq,
                         const std::string& name) {
    CompoundQuery out;
    out.items.push_back({false, v.adjoint()});
    out.items.insert(out.items.end(), cq.items.begin(), cq.items.end());
    out.items.push_back({false, v});
    out.label = name + "*(" + cq.label + ")*" + name + "^-1";
    return out;
}

HiddenChannelOracle::HiddenChannelOracle(const GroupRep& rep, const ElementLabel& hidden)
    : unitary_(rep.image(hidden)) {}

HiddenChannelOracle::HiddenChannelOracle(const std::vector<double>& angles,
                                         const Axis& axis, int hidden_index)
    : unitary_(Su2Matrix::identity()) {
    if (hidden_index < 0 || hidden_index >= static_cast<int>(angles.size())) {
        throw std::invalid_argument("hidden index out of range");
    }
    unitary_ = rotation(axis, angles[hidden_index]);
}

namespace {

Su2Matrix maybe_noisy(const Su2Matrix& g, GateNoiseModel* noise) {
    return noise ? noise->perturb_gate(g) : g;
}

Su2Matrix z_phase_gate(double phi) {
    const cplx e{std::cos(phi), std::sin(phi)};
    return Su2Matrix{e, 0.0, 0.0, std::conj(e)};
}

}  // namespace

double phase_probability(const std::function<PureState(const PureState&)>& channel,
                         const CompoundQuery& cq, const QspSequence& seq,
                         GateNoiseModel* gate_noise) {
    const int k = seq.k();
    if (k < 0) throw std::invalid_argument("empty phase list");
    const Su2Matrix sz = Su2Matrix::pauli_z();
    PureState state = seq.prep;
    // U = e^{i phi_0 Z} prod_j (W e^{i phi_j Z}) applied right to left; the
    // signal operator is sigma_z E sigma_z for an x-axis channel E.
    state = maybe_noisy(z_phase_gate(seq.phases[k]), gate_noise).apply(state);
    for (int j = k; j >= 1; --j) {
        state = sz.apply(state);
        for (const auto& item : cq.items) {
            state = item.oracle ? channel(state)
                                : maybe_noisy(item.gate, gate_noise).apply(state);
        }
        state = sz.apply(state);
        state = maybe_noisy(z_phase_gate(seq.phases[j - 1]), gate_noise).apply(state);
    }
    return std::norm(seq.meas.inner(state));
}

MeasurementOutcome run_qsp_phase(HiddenChannelOracle& oracle, const CompoundQuery& cq,
                                 const QspSequence& seq, const RunOptions& opts,
                                 std::uint64_t phase_index) {
    const auto channel = [&oracle](const PureState& s) { return oracle.apply(s); };
    const double p = phase_probability(channel, cq, seq, opts.gate_noise);

    MeasurementOutcome out;
    out.probability = p;
    out.deterministic = (p <= opts.eps_det) || (p >= 1.0 - opts.eps_det);
    if (opts.mode == RunMode::Deterministic) {
        if (!out.deterministic) throw NonDeterministicOutcome(p);
        out.bit = p >= 0.5 ? 1 : 0;
    } else {
        // Per-phase RNG stream derived from (seed, phase_index).
        std::seed_seq sq{static_cast<std::uint32_t>(opts.seed),
                         static_cast<std::uint32_t>(opts.seed >> 32),
                         static_cast<std::uint32_t>(phase_index + 1)};
        std::mt19937_64 rng(sq);
        std::bernoulli_distribution draw(std::clamp(p, 0.0, 1.0));
        out.bit = draw(rng) ? 1 : 0;
    }
    return out;
}

}  // namespace gqht
