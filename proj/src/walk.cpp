#include "qwalk/walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {
constexpr double kDivisibilityTol = 1e-6;
constexpr double kPopulationSumTol = 1e-9;
} // namespace

void WalkConfig::validate() const {
    if (!(T > 0.0)) throw std::invalid_argument("WalkConfig: T must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("WalkConfig: dt must be positive");
    if (dt > T) throw std::invalid_argument("WalkConfig: dt exceeds T");
    double ratio = T / dt;
    double nearest = std::round(ratio);
    if (nearest < 1.0 || std::abs(ratio - nearest) > kDivisibilityTol * ratio)
        throw std::invalid_argument("WalkConfig: dt does not divide T within 1e-6");
    if (initial.kind == InitialState::Kind::Localized && initial.node < 1)
        throw std::invalid_argument("WalkConfig: localized node must be >= 1");
}

int WalkConfig::steps() const {
    return static_cast<int>(std::round(T / dt));
}

WalkConfig default_walk_config() {
    WalkConfig cfg;
    cfg.generator = GeneratorKind::Adjacency;
    cfg.T = 100.0 * std::numbers::pi;
    cfg.dt = 1e-3 * cfg.T;
    cfg.initial = InitialState::uniform();
    return cfg;
}

PopulationVector::PopulationVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw std::invalid_argument("PopulationVector: empty");
    double sum = 0.0;
    for (double v : p_) {
        if (v < 0.0)
            throw std::invalid_argument("PopulationVector: negative entry " + std::to_string(v));
        sum += v;
    }
    if (std::abs(sum - 1.0) > kPopulationSumTol)
        throw std::invalid_argument("PopulationVector: sum " + std::to_string(sum) +
                                    " is not 1 within 1e-9");
}

AmplitudeVector uniform_state(int n) {
    if (n < 1) throw std::invalid_argument("uniform_state: need at least one node");
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    return AmplitudeVector(std::vector<std::complex<double>>(n, amp));
}

AmplitudeVector localized_state(int n, int j) {
    if (n < 1) throw std::invalid_argument("localized_state: need at least one node");
    if (j < 1 || j > n)
        throw std::invalid_argument("localized_state: node " + std::to_string(j) +
                                    " out of range [1," + std::to_string(n) + "]");
    std::vector<std::complex<double>> c(n, 0.0);
    c[j - 1] = 1.0;
    return AmplitudeVector(std::move(c));
}

std::vector<double> probabilities(const AmplitudeVector& psi) {
    std::vector<double> p(psi.size());
    for (int j = 0; j < psi.size(); ++j) p[j] = std::norm(psi[j]);
    return p;
}

AmplitudeVector initial_amplitudes(const Graph& g, const WalkConfig& cfg) {
    if (cfg.initial.kind == InitialState::Kind::Uniform)
        return uniform_state(g.node_count());
    return localized_state(g.node_count(), cfg.initial.node);
}

int phase_sign_of(GeneratorKind gen) {
    return gen == GeneratorKind::Adjacency ? -1 : +1;
}

PopulationVector average_populations(const Graph& g, const WalkConfig& cfg) {
    cfg.validate();
    if (g.node_count() < 1)
        throw std::invalid_argument("average_populations: empty graph");
    Matrix h = cfg.generator == GeneratorKind::Adjacency ? g.adjacency_matrix()
                                                         : g.laplacian_matrix();
    SpectralDecomposition d = eigh(h);
    return average_populations(d, initial_amplitudes(g, cfg), cfg.T, cfg.dt,
                               phase_sign_of(cfg.generator));
}

PopulationVector average_populations(const SpectralDecomposition& d,
                                     const AmplitudeVector& psi0,
                                     double T, double dt, int phase_sign) {
    int n = d.size();
    int steps = static_cast<int>(std::round(T / dt));
    if (steps < 1) throw std::invalid_argument("average_populations: T/dt below 1");

    // Trapezoid over t = 0, dt, ..., T; weights dt/T with half ends sum to 1,
    // so the result needs no renormalization.
    std::vector<double> acc(n, 0.0);
    for (int s = 0; s <= steps; ++s) {
        double t = (s == steps) ? T : s * dt;
        AmplitudeVector psi = propagate(d, psi0, t, phase_sign);
        double w = (s == 0 || s == steps) ? 0.5 : 1.0;
        for (int j = 0; j < n; ++j) acc[j] += w * std::norm(psi[j]);
    }
    double inv = 1.0 / static_cast<double>(steps);
    for (double& v : acc) v *= inv;
    return PopulationVector(std::move(acc));
}

} // namespace qwalk
