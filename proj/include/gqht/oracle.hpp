#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gqht/groups.hpp"
#include "gqht/qsp.hpp"
#include "gqht/su2.hpp"

// Hidden-channel oracle with exact query accounting, compound-query
// construction, and projective measurement with deterministic-outcome
// certification.

namespace gqht {

/// Sub-circuit standing in for one signal application: a sequence of items,
/// each either a call to the hidden oracle or a fixed gate, in application
/// order (first item acts first).
struct CompoundQuery {
    struct Item {
        bool oracle = true;
        Su2Matrix gate = Su2Matrix::identity();
    };
    std::vector<Item> items;
    std::string label = "E";

    int multiplicity() const;

    static CompoundQuery bare();
    /// Fixed gate applied before every oracle call: effective channel E*pre.
    static CompoundQuery pre_rotated(const Su2Matrix& pre, const std::string& name);
};

/// Replace each oracle slot of `outer` by the whole `inner` recipe.
CompoundQuery compose(const CompoundQuery& outer, const CompoundQuery& inner);
/// The recipe repeated `power` times (effective channel raised to a power).
CompoundQuery powered(const CompoundQuery& cq, int power);
/// Conjugated recipe with effective channel V * E * V^dagger.
CompoundQuery conjugated(const Su2Matrix& v, const CompoundQuery& cq,
                         const std::string& name);

struct MeasurementOutcome {
    int bit = 0;           // the f-value: 1 iff the transition probability is ~1
    double probability = 0.0;
    bool deterministic = false;
};

struct NonDeterministicOutcome : std::runtime_error {
    explicit NonDeterministicOutcome(double p)
        : std::runtime_error("non-deterministic measurement outcome, p = " +
                             std::to_string(p)),
          probability(p) {}
    double probability;
};

/// Applies the hidden channel to states and counts every application. The
/// hidden label is sealed at construction; nothing on this interface reveals
/// it.
class HiddenChannelOracle {
  public:
    HiddenChannelOracle(const GroupRep& rep, const ElementLabel& hidden);
    HiddenChannelOracle(const std::vector<double>& angles, const Axis& axis,
                        int hidden_index);

    PureState apply(const PureState& s) {
        ++count_;
        return unitary_.apply(s);
    }
    long long query_count() const { return count_; }

  private:
    Su2Matrix unitary_;
    long long count_ = 0;
};

enum class RunMode { Deterministic, Sampled };

class GateNoiseModel;  // see noise.hpp

struct RunOptions {
    RunMode mode = RunMode::Deterministic;
    std::uint64_t seed = 0;
    double eps_det = 1e-7;
    GateNoiseModel* gate_noise = nullptr;  // perturbs processing gates when set
};

struct PhaseRecord {
    std::string query_map;
    std::vector<double> phases;
    int multiplicity = 1;
    int sequence_length = 0;  // k
    long long queries = 0;    // k * multiplicity
    int bit = 0;
    double probability = 0.0;
};

struct Transcript {
    std::string group;
    ElementLabel hidden;
    std::vector<PhaseRecord> records;
    std::vector<int> bits;
    long long total_queries = 0;
    ElementLabel recovered;
};

/// Transition probability of one QSP phase executed against an arbitrary
/// channel application function (used both for real runs and for classical
/// candidate prediction, with identical arithmetic).
double phase_probability(const std::function<PureState(const PureState&)>& channel,
                         const CompoundQuery& cq, const QspSequence& seq,
                         GateNoiseModel* gate_noise = nullptr);

/// Executes one phase against the oracle: interleaves the compound query with
/// the phase unitaries, measures, and certifies determinism (or samples).
/// Deterministic mode throws NonDeterministicOutcome when the probability is
/// not within eps_det of {0, 1}.
MeasurementOutcome run_qsp_phase(HiddenChannelOracle& oracle, const CompoundQuery& cq,
                                 const QspSequence& seq, const RunOptions& opts,
                                 std::uint64_t phase_index = 0);

}  // namespace gqht
