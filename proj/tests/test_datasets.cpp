#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "qwalk/datasets.hpp"

using namespace qwalk;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

std::string edge_text(const Graph& g) {
    std::ostringstream out;
    write_edge_list_text(out, g);
    return out.str();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

TEST_CASE("karate club network") {
    LabeledNetwork net = karate_club();
    CHECK(net.graph.node_count() == 34);
    CHECK(net.graph.edge_count() == 78);
    CHECK(net.connected);
    CHECK(net.graph.is_connected());
    CHECK_FALSE(net.graph.is_regular());

    // recount degrees independently by scanning edge incidences
    std::vector<int> recount(34, 0);
    for (const Edge& e : net.graph.edges()) {
        ++recount[e.u];
        ++recount[e.v];
    }
    CHECK(recount == net.graph.degrees());
    CHECK(recount[0] == 16);  // node 1
    CHECK(recount[33] == 17); // node 34
    CHECK(net.graph.degree_centrality(1) == doctest::Approx(16.0 / 33.0).epsilon(1e-15));

    REQUIRE(net.labels.has_value());
    const auto& labels = *net.labels;
    REQUIRE(labels.size() == 34);
    CHECK(labels[0] != labels[33]); // nodes 1 and 34 head different factions
    std::map<int, int> sizes;
    for (int l : labels) ++sizes[l];
    CHECK(sizes.size() == 2);
    CHECK(sizes[1] == 16);
    CHECK(sizes[2] == 18);

    // the edges the sweep scenarios name all exist, and removing one leaves 77
    CHECK(net.graph.edge_index(1, 3).has_value());
    CHECK(net.graph.edge_index(19, 33).has_value());
    REQUIRE(net.graph.edge_index(3, 9).has_value());
    Graph trimmed = net.graph.remove_edge(*net.graph.edge_index(3, 9));
    CHECK(trimmed.node_count() == 34);
    CHECK(trimmed.edge_count() == 77);
}

TEST_CASE("load_edge_list") {
    auto path = temp_file("qwalk_path3.edges", "1 2\n2 3\n");
    LabeledNetwork net = load_edge_list(path);
    CHECK(net.graph.node_count() == 3);
    CHECK(net.graph.edge_count() == 2);
    CHECK_FALSE(net.labels.has_value());
    CHECK(net.connected);
    std::filesystem::remove(path);

    auto selfloop = temp_file("qwalk_selfloop.edges", "1 1\n");
    try {
        load_edge_list(selfloop);
        FAIL("expected io_error");
    } catch (const io_error& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    std::filesystem::remove(selfloop);

    auto dup = temp_file("qwalk_dup.edges", "1 2\n2 1\n");
    CHECK_THROWS_AS(load_edge_list(dup), io_error);
    std::filesystem::remove(dup);

    CHECK_THROWS_AS(load_edge_list("/nonexistent/qwalk-no-such-file.edges"), io_error);
}

TEST_CASE("SplitMix64 matches the published reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);

    SplitMix64 rng42(42);
    CHECK(rng42.next() == 0xBDD732262FEB6E95ULL);
    CHECK(rng42.next() == 0x28EFE333B266F103ULL);

    SplitMix64 d(0);
    for (int i = 0; i < 1000; ++i) {
        double u = d.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("planted partition: deterministic extremes") {
    // p_in = 1, p_out = 0: two disjoint triangles regardless of seed
    GeneratorParams tri{2, 3, 1.0, 0.0, 7};
    LabeledNetwork net = planted_partition(tri);
    CHECK(net.graph.node_count() == 6);
    CHECK(net.graph.edge_count() == 6);
    CHECK_FALSE(net.connected);
    CHECK(edge_text(net.graph) == "1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n");
    CHECK(*net.labels == std::vector<int>{1, 1, 1, 2, 2, 2});

    // p_in = p_out = 1: the complete graph
    GeneratorParams complete{2, 3, 1.0, 1.0, 7};
    LabeledNetwork all = planted_partition(complete);
    CHECK(all.graph.edge_count() == 15);
    CHECK(all.connected);
}

TEST_CASE("planted partition parameter validation") {
    CHECK_THROWS_AS(planted_partition({1, 3, 0.5, 0.1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(planted_partition({2, 0, 0.5, 0.1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(planted_partition({2, 3, 0.1, 0.5, 0}), std::invalid_argument);
    CHECK_THROWS_AS(planted_partition({2, 3, 0.0, 0.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(planted_partition({2, 3, 1.1, 0.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(planted_partition({200, 51, 0.5, 0.1, 0}), std::invalid_argument);
}

TEST_CASE("planted partition is reproducible bit-exactly") {
    GeneratorParams params{2, 20, 0.5, 0.05, 42};
    LabeledNetwork a = planted_partition(params);
    LabeledNetwork b = planted_partition(params);
    CHECK(a.graph == b.graph);
    CHECK(*a.labels == *b.labels);

    // golden snapshot, frozen from the first implementation run
    CHECK(a.graph.node_count() == 40);
    CHECK(a.graph.edge_count() == 230);
    CHECK(a.connected);
    CHECK(fnv1a(edge_text(a.graph)) == 16805006890865096389ULL);
}

TEST_CASE("intra-community degree exceeds inter-community degree on average") {
    double intra = 0.0, inter = 0.0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GeneratorParams params{2, 12, 0.3, 0.05, seed};
        LabeledNetwork net = planted_partition(params);
        const auto& labels = *net.labels;
        for (const Edge& e : net.graph.edges()) {
            if (labels[e.u] == labels[e.v])
                intra += 2.0;
            else
                inter += 2.0;
        }
    }
    CHECK(intra > inter);
}

TEST_CASE("labels sidecar format") {
    std::ostringstream out;
    write_labels_text(out, {1, 1, 2});
    CHECK(out.str() == "1 1\n2 1\n3 2\n");
}
