#include "qwalk/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace qwalk {

namespace {

constexpr double kNearZeroTol = 1e-12;

std::vector<double> average_ranks(const std::vector<double>& x) {
    int n = static_cast<int>(x.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        double avg = 0.5 * (i + j) + 1.0; // ranks are 1-based
        for (int t = i; t <= j; ++t) ranks[order[t]] = avg;
        i = j + 1;
    }
    return ranks;
}

} // namespace

std::optional<double> spearman_rank_correlation(const std::vector<double>& x,
                                                const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("spearman: size mismatch or empty input");
    std::vector<double> rx = average_ranks(x);
    std::vector<double> ry = average_ranks(y);
    int n = static_cast<int>(x.size());
    double mean = (n + 1) / 2.0;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        double dx = rx[i] - mean, dy = ry[i] - mean;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

CentralityReport centrality_population_report(const Graph& g, const WalkConfig& cfg) {
    if (g.node_count() < 2)
        throw std::invalid_argument("centrality report: undefined for N < 2");
    if (cfg.generator != GeneratorKind::Adjacency ||
        cfg.initial.kind != InitialState::Kind::Uniform)
        throw std::invalid_argument(
            "centrality report: requires the adjacency generator and a uniform start");

    CentralityReport report;
    report.centrality.resize(g.node_count());
    for (int j = 1; j <= g.node_count(); ++j)
        report.centrality[j - 1] = g.degree_centrality(j);
    report.population = average_populations(g, cfg).values();
    report.spearman_rho = spearman_rank_correlation(report.centrality, report.population);
    return report;
}

SweepResult edge_removal_sweep(const Graph& g, const WalkConfig& cfg, int jobs) {
    cfg.validate();
    if (g.edge_count() < 1)
        throw std::invalid_argument("edge_removal_sweep: graph has no edges");
    if (jobs < 1) jobs = 1;

    SweepResult result;
    result.baseline = average_populations(g, cfg).values();
    result.per_edge.resize(g.edge_count());
    std::vector<std::exception_ptr> errors(g.edge_count());

    std::atomic<int> cursor{0};
    auto worker = [&] {
        for (;;) {
            int idx = cursor.fetch_add(1);
            if (idx >= g.edge_count()) break;
            try {
                int k = idx + 1;
                Graph variant = g.remove_edge(k);
                EdgeOutcome out;
                out.k = k;
                auto [u, v] = g.edge_pair(k);
                out.u = u;
                out.v = v;
                out.disconnects = !variant.is_connected();
                out.populations = average_populations(variant, cfg).values();
                out.deltas.resize(g.node_count());
                out.signs.resize(g.node_count());
                for (int j = 0; j < g.node_count(); ++j) {
                    double d = out.populations[j] - result.baseline[j];
                    out.deltas[j] = d;
                    out.signs[j] = d >= 0.0 ? std::int8_t{1} : std::int8_t{-1};
                    if (std::abs(d) < kNearZeroTol) ++out.near_zero_count;
                }
                result.per_edge[idx] = std::move(out);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };

    int workers = std::min(jobs, g.edge_count());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // rethrow the lowest-index failure so the error surface is schedule-independent
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return result;
}

Matrix affinity_from_signs(const std::vector<std::vector<std::int8_t>>& signs) {
    if (signs.empty()) throw std::invalid_argument("affinity: no sign rows");
    int k_count = static_cast<int>(signs.size());
    int n = static_cast<int>(signs[0].size());
    for (const auto& row : signs) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("affinity: ragged sign matrix");
        for (std::int8_t s : row)
            if (s != 1 && s != -1)
                throw std::invalid_argument("affinity: signs must be +1 or -1");
    }

    // Integer accumulation keeps the diagonal exactly 1 and every entry an
    // exact multiple of 1/K.
    Matrix alpha(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long long acc = 0;
            for (int k = 0; k < k_count; ++k)
                acc += static_cast<int>(signs[k][i]) * static_cast<int>(signs[k][j]);
            double value = static_cast<double>(acc) / k_count;
            alpha(i, j) = value;
            alpha(j, i) = value;
        }
    }
    return alpha;
}

Matrix affinity(const SweepResult& s) {
    std::vector<std::vector<std::int8_t>> signs;
    signs.reserve(s.per_edge.size());
    for (const EdgeOutcome& e : s.per_edge) signs.push_back(e.signs);
    return affinity_from_signs(signs);
}

ReferencePartition partition_by_reference(const Matrix& alpha, int ref) {
    int n = alpha.rows();
    if (!alpha.is_square() || n < 1)
        throw std::invalid_argument("partition_by_reference: bad affinity matrix");
    if (ref < 1 || ref > n)
        throw std::invalid_argument("partition_by_reference: reference node out of range");

    ReferencePartition part;
    part.with_reference.resize(n);
    for (int j = 0; j < n; ++j) {
        double a = alpha(ref - 1, j);
        part.with_reference[j] = a > 0.0;
        if (a == 0.0) ++part.ambiguous;
    }
    part.with_reference[ref - 1] = true;
    return part;
}

GeneratorComparison compare_generators(const Graph& g, int start, double T, double dt) {
    WalkConfig cfg;
    cfg.T = T;
    cfg.dt = dt;
    cfg.initial = InitialState::localized(start);

    cfg.generator = GeneratorKind::Adjacency;
    GeneratorComparison cmp;
    cmp.adjacency = average_populations(g, cfg).values();
    cfg.generator = GeneratorKind::Laplacian;
    cmp.laplacian = average_populations(g, cfg).values();
    for (int j = 0; j < g.node_count(); ++j)
        cmp.max_gap = std::max(cmp.max_gap, std::abs(cmp.adjacency[j] - cmp.laplacian[j]));
    return cmp;
}

SignAgreement flow_sign_agreement(const SweepResult& s, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != s.node_count())
        throw std::invalid_argument("flow_sign_agreement: labeling size mismatch");
    if (s.edge_count() < 1)
        throw std::invalid_argument("flow_sign_agreement: empty sweep");

    std::map<int, std::vector<int>> members; // community id -> 0-based members
    for (int j = 0; j < s.node_count(); ++j) members[labels[j]].push_back(j);

    SignAgreement agreement;
    for (const auto& [id, _] : members) agreement.community_ids.push_back(id);
    agreement.per_community.assign(members.size(), 0.0);

    double overall_acc = 0.0;
    for (const EdgeOutcome& e : s.per_edge) {
        int agreeing_total = 0;
        int c = 0;
        for (const auto& [id, nodes] : members) {
            int plus = 0;
            for (int j : nodes)
                if (e.signs[j] > 0) ++plus;
            int majority = std::max(plus, static_cast<int>(nodes.size()) - plus);
            agreement.per_community[c] += static_cast<double>(majority) / nodes.size();
            agreeing_total += majority;
            ++c;
        }
        overall_acc += static_cast<double>(agreeing_total) / s.node_count();
    }
    for (double& v : agreement.per_community) v /= s.edge_count();
    agreement.overall = overall_acc / s.edge_count();
    return agreement;
}

SweepContrast laplacian_response_contrast(const Graph& g, int start, double T, double dt,
                                          const std::vector<int>& labels, int jobs) {
    if (labels.empty() || static_cast<int>(labels.size()) != g.node_count())
        throw std::invalid_argument("laplacian_response_contrast: ground-truth labeling "
                                    "must cover every node");

    WalkConfig adjacency_cfg;
    adjacency_cfg.generator = GeneratorKind::Adjacency;
    adjacency_cfg.T = T;
    adjacency_cfg.dt = dt;
    adjacency_cfg.initial = InitialState::uniform();

    WalkConfig laplacian_cfg = adjacency_cfg;
    laplacian_cfg.generator = GeneratorKind::Laplacian;
    laplacian_cfg.initial = InitialState::localized(start);

    SweepContrast contrast;
    contrast.adjacency = flow_sign_agreement(edge_removal_sweep(g, adjacency_cfg, jobs), labels);
    contrast.laplacian = flow_sign_agreement(edge_removal_sweep(g, laplacian_cfg, jobs), labels);
    return contrast;
}

} // namespace qwalk
