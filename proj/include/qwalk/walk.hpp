#pragma once

#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

enum class GeneratorKind { Adjacency, Laplacian };

/// Initial state of the walker: the equiprobable superposition over all
/// nodes, or a basis state localized on one node.
struct InitialState {
    enum class Kind { Uniform, Localized } kind = Kind::Uniform;
    int node = 1; // 1-based, used when localized

    static InitialState uniform() { return {Kind::Uniform, 1}; }
    static InitialState localized(int j) { return {Kind::Localized, j}; }
    bool operator==(const InitialState&) const = default;
};

/// Walk parameters: generator matrix, total time T and sampling step dt
/// (dimensionless), and the initial state. dt must divide T within one part
/// in 1e6 so the sampling grid lands exactly on T.
struct WalkConfig {
    GeneratorKind generator = GeneratorKind::Adjacency;
    double T = 0.0;
    double dt = 0.0;
    InitialState initial = InitialState::uniform();

    void validate() const;

    /// Number of sampling intervals (T / dt, rounded).
    int steps() const;

    bool operator==(const WalkConfig&) const = default;
};

/// Default configuration: T = 100*pi, dt = 1e-3 * T, adjacency generator,
/// uniform start.
WalkConfig default_walk_config();

/// Time-averaged node probabilities. Entries are nonnegative and sum to 1
/// within 1e-9.
class PopulationVector {
public:
    explicit PopulationVector(std::vector<double> p);

    int size() const { return static_cast<int>(p_.size()); }
    double operator[](int j) const { return p_[j]; }
    const std::vector<double>& values() const { return p_; }

private:
    std::vector<double> p_;
};

/// Equiprobable state: 1/sqrt(N) amplitude on every node.
AmplitudeVector uniform_state(int n);

/// Basis state |j> for 1-based node j.
AmplitudeVector localized_state(int n, int j);

/// Instantaneous probabilities p_j = |c_j|^2.
std::vector<double> probabilities(const AmplitudeVector& psi);

/// Builds the initial amplitude vector requested by a config.
AmplitudeVector initial_amplitudes(const Graph& g, const WalkConfig& cfg);

/// Phase sign realizing the generator's evolution: -1 for exp(-iAt),
/// +1 for exp(+iLt).
int phase_sign_of(GeneratorKind gen);

/// Time-averaged populations over [0, T]: instantaneous probabilities are
/// evaluated by direct spectral propagation at t = 0, dt, ..., T (no step
/// composition) and integrated with the composite trapezoidal rule / T.
/// The accumulation runs in ascending sample order, so results are
/// bit-reproducible and independent of any caller-side parallelism.
PopulationVector average_populations(const Graph& g, const WalkConfig& cfg);

/// Same average for an already-decomposed generator; lets callers reuse one
/// eigh across many walks.
PopulationVector average_populations(const SpectralDecomposition& d,
                                     const AmplitudeVector& psi0,
                                     double T, double dt, int phase_sign);

} // namespace qwalk
