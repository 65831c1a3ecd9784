#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/matrix.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Populations recomputed after removing one edge, with the per-node change
/// against the intact-graph baseline and the resulting flow signs.
struct EdgeOutcome {
    int k = 0;                     // 1-based edge index in the baseline graph
    int u = 0, v = 0;              // removed pair, 1-based
    bool disconnects = false;      // removal left the graph disconnected
    std::vector<double> populations;
    std::vector<double> deltas;    // populations - baseline
    std::vector<std::int8_t> signs; // +1 where delta >= 0, else -1
    int near_zero_count = 0;       // |delta| < 1e-12: numerically meaningless signs
};

/// Baseline populations plus one EdgeOutcome per edge of the swept graph,
/// in edge-index order.
struct SweepResult {
    std::vector<double> baseline;
    std::vector<EdgeOutcome> per_edge;

    int node_count() const { return static_cast<int>(baseline.size()); }
    int edge_count() const { return static_cast<int>(per_edge.size()); }
};

/// Degree centrality paired with population per node, and their Spearman
/// rank correlation (average ranks on ties; absent when either column is
/// constant, e.g. on vertex-transitive graphs).
struct CentralityReport {
    std::vector<double> centrality;
    std::vector<double> population;
    std::optional<double> spearman_rho;
};

/// Populations of the adjacency and Laplacian walks from one localized
/// start under identical T, dt.
struct GeneratorComparison {
    std::vector<double> adjacency;
    std::vector<double> laplacian;
    double max_gap = 0.0; // max_j |adjacency[j] - laplacian[j]|
};

/// Within-community flow-sign coherence of a sweep: for each removed edge
/// and each community, the fraction of member nodes whose sign matches the
/// community majority, averaged over edges. `overall` weights communities
/// by size (equivalently: the node fraction agreeing with its community
/// majority, averaged over edges).
struct SignAgreement {
    std::vector<int> community_ids;      // sorted distinct labels
    std::vector<double> per_community;   // mean majority-agreement per community
    double overall = 0.0;
};

/// Side-by-side agreement of the uniform-start adjacency sweep and a
/// localized-start Laplacian sweep on the same graph and labeling.
struct SweepContrast {
    SignAgreement adjacency;
    SignAgreement laplacian;
};

/// Two-way labeling of nodes by the sign of their affinity with a chosen
/// reference node.
struct ReferencePartition {
    std::vector<bool> with_reference;  // 1-based node j -> with_reference[j-1]
    int ambiguous = 0;                 // exact zero affinities, labeled against
};

/// Spearman rank correlation with average ranks for ties; nullopt when either
/// input has zero rank variance.
std::optional<double> spearman_rank_correlation(const std::vector<double>& x,
                                                const std::vector<double>& y);

/// Pairs each node's degree centrality with its time-averaged population.
/// The underlying claim is specific to uniform-start adjacency walks, so
/// other configs are rejected. Requires N >= 2.
CentralityReport centrality_population_report(const Graph& g, const WalkConfig& cfg);

/// Removes each edge in turn and recomputes populations with the same
/// config. The per-edge runs are independent; `jobs` caps the worker count
/// and never affects the result, which is assembled in edge-index order.
SweepResult edge_removal_sweep(const Graph& g, const WalkConfig& cfg, int jobs = 1);

/// Node affinity: alpha_ij = (1/K) sum_k theta_i(k) theta_j(k), the mean
/// product of flow signs over all single-edge removals. Symmetric, unit
/// diagonal, entries in [-1, 1] quantized to multiples of 2/K offset from -1.
Matrix affinity(const SweepResult& s);

/// Affinity from a raw K x N sign matrix (entries +-1); affinity(SweepResult)
/// delegates here.
Matrix affinity_from_signs(const std::vector<std::vector<std::int8_t>>& signs);

/// Splits nodes by affinity with a reference node: j is with the reference
/// iff alpha(ref, j) > 0. Exact zeros count as ambiguous and fall on the
/// against side.
ReferencePartition partition_by_reference(const Matrix& alpha, int ref);

/// Adjacency vs Laplacian walk populations from a localized start.
GeneratorComparison compare_generators(const Graph& g, int start, double T, double dt);

/// Flow-sign agreement of a sweep against a ground-truth labeling
/// (1-based node j has community labels[j-1]).
SignAgreement flow_sign_agreement(const SweepResult& s, const std::vector<int>& labels);

/// Runs the uniform-start adjacency sweep and the localized-start Laplacian
/// sweep with the same T, dt, and reports within-community sign agreement
/// for both. Rejects an empty or wrongly sized labeling.
SweepContrast laplacian_response_contrast(const Graph& g, int start, double T, double dt,
                                          const std::vector<int>& labels, int jobs = 1);

} // namespace qwalk
