#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

/// Raised for unreadable or malformed input files.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A graph with optional per-node community ids (1-based node j maps to
/// labels[j-1]).
struct LabeledNetwork {
    Graph graph;
    std::optional<std::vector<int>> labels;
    bool connected = false;
};

/// Zachary's karate club: 34 nodes, 78 edges, embedded verbatim, with the
/// standard two-faction labels (community 1 around node 1, community 2
/// around node 34).
LabeledNetwork karate_club();

/// Loads a graph from an edge-list text file (format defined in graph.hpp).
/// No labels are attached. Parse errors carry the offending line number.
LabeledNetwork load_edge_list(const std::filesystem::path& path);

/// SplitMix64: the 64-bit mixing generator of Steele, Lea & Flood. Chosen as
/// the project PRNG because its output is fully specified by the algorithm,
/// making generated benchmark graphs byte-reproducible across platforms.
/// Do not change the algorithm; golden files depend on it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Parameters of the planted-partition generator: c communities of equal
/// size, intra-community edge probability p_in, inter-community p_out,
/// with 0 <= p_out <= p_in <= 1, p_in > 0 and c*size <= 1e4.
struct GeneratorParams {
    int communities = 2;
    int size = 10;
    double p_in = 0.5;
    double p_out = 0.05;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Draws each unordered node pair independently with probability p_in
/// (same community) or p_out (different), consuming one SplitMix64 double
/// per pair in lexicographic pair order. If the draw is disconnected the
/// generator retries with seed+1, ..., seed+100 and returns the last attempt
/// flagged `connected = false`. Labels are community ids 1..c in contiguous
/// blocks.
LabeledNetwork planted_partition(const GeneratorParams& params);

/// Writes the labels sidecar format: one "node_id community_id" line per node.
void write_labels_text(std::ostream& out, const std::vector<int>& labels);

} // namespace qwalk
