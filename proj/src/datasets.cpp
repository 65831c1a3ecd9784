#include "qwalk/datasets.hpp"

#include <fstream>
#include <ostream>
#include <string>

namespace qwalk {

namespace {

// Zachary (1977), standard public 78-edge list, 1-based labels.
constexpr std::pair<int, int> kKarateEdges[] = {
    {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {1, 8},   {1, 9},
    {1, 11},  {1, 12},  {1, 13},  {1, 14},  {1, 18},  {1, 20},  {1, 22},  {1, 32},
    {2, 3},   {2, 4},   {2, 8},   {2, 14},  {2, 18},  {2, 20},  {2, 22},  {2, 31},
    {3, 4},   {3, 8},   {3, 9},   {3, 10},  {3, 14},  {3, 28},  {3, 29},  {3, 33},
    {4, 8},   {4, 13},  {4, 14},  {5, 7},   {5, 11},  {6, 7},   {6, 11},  {6, 17},
    {7, 17},  {9, 31},  {9, 33},  {9, 34},  {10, 34}, {14, 34}, {15, 33}, {15, 34},
    {16, 33}, {16, 34}, {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33},
    {23, 34}, {24, 26}, {24, 28}, {24, 30}, {24, 33}, {24, 34}, {25, 26}, {25, 28},
    {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32}, {29, 34}, {30, 33},
    {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34}, {33, 34},
};

// The instructor's faction (community 1); everyone else sided with node 34.
constexpr int kFactionOne[] = {1, 2, 3, 4, 5, 6, 7, 8, 11, 12, 13, 14, 17, 18, 20, 22};

} // namespace

LabeledNetwork karate_club() {
    std::vector<std::pair<int, int>> pairs(std::begin(kKarateEdges), std::end(kKarateEdges));
    Graph g = Graph::from_edge_list(pairs, 34);
    std::vector<int> labels(34, 2);
    for (int j : kFactionOne) labels[j - 1] = 1;
    bool connected = g.is_connected();
    return LabeledNetwork{std::move(g), std::move(labels), connected};
}

LabeledNetwork load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open edge list file: " + path.string());
    std::vector<std::pair<int, int>> pairs;
    try {
        pairs = read_edge_list_text(in);
    } catch (const std::invalid_argument& e) {
        throw io_error(path.string() + ": " + e.what());
    }
    Graph g = [&] {
        try {
            return Graph::from_edge_list(pairs);
        } catch (const std::invalid_argument& e) {
            throw io_error(path.string() + ": " + e.what());
        }
    }();
    bool connected = g.is_connected();
    return LabeledNetwork{std::move(g), std::nullopt, connected};
}

void GeneratorParams::validate() const {
    if (communities < 2)
        throw std::invalid_argument("planted_partition: need at least 2 communities");
    if (size < 1)
        throw std::invalid_argument("planted_partition: community size must be >= 1");
    if (static_cast<long long>(communities) * size > 10000)
        throw std::invalid_argument("planted_partition: total node count exceeds 1e4");
    if (!(p_out >= 0.0 && p_out <= p_in && p_in <= 1.0 && p_in > 0.0))
        throw std::invalid_argument(
            "planted_partition: probabilities must satisfy 0 <= p_out <= p_in <= 1 with p_in > 0");
}

LabeledNetwork planted_partition(const GeneratorParams& params) {
    params.validate();
    int n = params.communities * params.size;

    std::vector<int> labels(n);
    for (int j = 0; j < n; ++j) labels[j] = j / params.size + 1;

    auto attempt = [&](std::uint64_t seed) {
        SplitMix64 rng(seed);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double p = labels[i] == labels[j] ? params.p_in : params.p_out;
                if (rng.next_double() < p) pairs.emplace_back(i + 1, j + 1);
            }
        }
        return Graph::from_edge_list(pairs, n);
    };

    Graph g = attempt(params.seed);
    for (std::uint64_t retry = 1; retry <= 100 && !g.is_connected(); ++retry)
        g = attempt(params.seed + retry);

    bool connected = g.is_connected();
    return LabeledNetwork{std::move(g), labels, connected};
}

void write_labels_text(std::ostream& out, const std::vector<int>& labels) {
    for (std::size_t j = 0; j < labels.size(); ++j)
        out << (j + 1) << ' ' << labels[j] << '\n';
}

} // namespace qwalk
