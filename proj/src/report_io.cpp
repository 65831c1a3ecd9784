#include "qwalk/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qwalk/datasets.hpp"

namespace qwalk {

namespace {

/// Linear blend between two RGB colors.
std::string blend(double t, int r0, int g0, int b0, int r1, int g1, int b1) {
    auto mix = [t](int a, int b) { return static_cast<int>(std::lround(a + t * (b - a))); };
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(r0, r1), mix(g0, g1), mix(b0, b1));
    return buf;
}

/// Diverging blue (-1) -> white (0) -> red (+1).
std::string diverging_color(double v) {
    v = std::clamp(v, -1.0, 1.0);
    if (v < 0.0) return blend(v + 1.0, 33, 102, 172, 255, 255, 255);
    return blend(v, 255, 255, 255, 178, 24, 43);
}

} // namespace

nlohmann::ordered_json RunManifest::to_json_reproducible() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    nlohmann::ordered_json params;
    for (const auto& [key, value] : parameters) params[key] = value;
    doc["parameters"] = params;
    doc["tool_version"] = tool_version;
    return doc;
}

nlohmann::ordered_json RunManifest::to_json_full() const {
    nlohmann::ordered_json doc = to_json_reproducible();
    doc["duration_seconds"] = duration_seconds;
    return doc;
}

std::string format_csv_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot write " + tmp.string());
        out << content;
        if (!out.good()) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw io_error("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw io_error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

std::string centrality_csv(const CentralityReport& report) {
    std::ostringstream out;
    out << "node,centrality,population\n";
    for (std::size_t j = 0; j < report.centrality.size(); ++j)
        out << (j + 1) << ',' << format_csv_number(report.centrality[j]) << ','
            << format_csv_number(report.population[j]) << '\n';
    return out.str();
}

nlohmann::ordered_json centrality_json(const CentralityReport& report,
                                       const RunManifest& manifest) {
    nlohmann::ordered_json doc;
    doc["manifest"] = manifest.to_json_reproducible();
    doc["centrality"] = report.centrality;
    doc["population"] = report.population;
    if (report.spearman_rho)
        doc["spearman_rho"] = *report.spearman_rho;
    else
        doc["spearman_rho"] = nullptr;
    return doc;
}

std::string sweep_baseline_csv(const SweepResult& s) {
    std::ostringstream out;
    out << "node,population\n";
    for (int j = 0; j < s.node_count(); ++j)
        out << (j + 1) << ',' << format_csv_number(s.baseline[j]) << '\n';
    return out.str();
}

namespace {

std::string sweep_matrix_csv(const SweepResult& s, char prefix,
                             const std::function<std::string(const EdgeOutcome&, int)>& cell) {
    std::ostringstream out;
    out << "edge_index,u,v";
    for (int j = 1; j <= s.node_count(); ++j) out << ',' << prefix << j;
    out << '\n';
    for (const EdgeOutcome& e : s.per_edge) {
        out << e.k << ',' << e.u << ',' << e.v;
        for (int j = 0; j < s.node_count(); ++j) out << ',' << cell(e, j);
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string sweep_deltas_csv(const SweepResult& s) {
    return sweep_matrix_csv(s, 'd', [](const EdgeOutcome& e, int j) {
        return format_csv_number(e.deltas[j]);
    });
}

std::string sweep_signs_csv(const SweepResult& s) {
    return sweep_matrix_csv(s, 's', [](const EdgeOutcome& e, int j) {
        return std::string(e.signs[j] > 0 ? "1" : "-1");
    });
}

nlohmann::ordered_json sweep_json(const SweepResult& s, const RunManifest& manifest) {
    nlohmann::ordered_json doc;
    doc["manifest"] = manifest.to_json_reproducible();
    doc["baseline"] = s.baseline;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const EdgeOutcome& e : s.per_edge) {
        nlohmann::ordered_json entry;
        entry["edge_index"] = e.k;
        entry["u"] = e.u;
        entry["v"] = e.v;
        entry["disconnects"] = e.disconnects;
        entry["populations"] = e.populations;
        entry["deltas"] = e.deltas;
        std::vector<int> signs(e.signs.begin(), e.signs.end());
        entry["signs"] = signs;
        entry["near_zero_count"] = e.near_zero_count;
        edges.push_back(std::move(entry));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

std::vector<std::vector<std::int8_t>> signs_from_sweep_json(const nlohmann::json& doc) {
    if (!doc.contains("edges") || !doc["edges"].is_array() || doc["edges"].empty())
        throw io_error("sweep document has no edges array");
    std::vector<std::vector<std::int8_t>> signs;
    signs.reserve(doc["edges"].size());
    for (const auto& entry : doc["edges"]) {
        std::vector<std::int8_t> row;
        for (int v : entry.at("signs").get<std::vector<int>>())
            row.push_back(static_cast<std::int8_t>(v));
        signs.push_back(std::move(row));
    }
    return signs;
}

std::string affinity_csv(const Matrix& alpha) {
    std::ostringstream out;
    out << "node";
    for (int j = 1; j <= alpha.cols(); ++j) out << ',' << j;
    out << '\n';
    for (int i = 0; i < alpha.rows(); ++i) {
        out << (i + 1);
        for (int j = 0; j < alpha.cols(); ++j) out << ',' << format_csv_number(alpha(i, j));
        out << '\n';
    }
    return out.str();
}

std::string affinity_svg(const Matrix& alpha) {
    int n = alpha.rows();
    const int cell = n <= 64 ? 14 : 6;
    const int margin = 44;
    const int legend_w = 18, legend_gap = 26, legend_labels = 42;
    int grid = n * cell;
    int width = margin + grid + legend_gap + legend_w + legend_labels + 10;
    int height = margin + grid + 20;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out << "<rect x=\"" << (margin + j * cell) << "\" y=\"" << (margin + i * cell)
                << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
                << diverging_color(alpha(i, j)) << "\"/>\n";

    // Sparse tick labels along both axes.
    int stride = std::max(1, n / 17);
    for (int j = 0; j < n; j += stride) {
        out << "<text x=\"" << (margin + j * cell + cell / 2) << "\" y=\"" << (margin - 6)
            << "\" font-size=\"9\" text-anchor=\"middle\" font-family=\"sans-serif\">"
            << (j + 1) << "</text>\n";
        out << "<text x=\"" << (margin - 6) << "\" y=\"" << (margin + j * cell + cell / 2 + 3)
            << "\" font-size=\"9\" text-anchor=\"end\" font-family=\"sans-serif\">"
            << (j + 1) << "</text>\n";
    }

    // Legend: vertical strip from +1 (top) to -1 (bottom).
    int lx = margin + grid + legend_gap;
    const int strips = 64;
    double strip_h = static_cast<double>(grid) / strips;
    for (int srow = 0; srow < strips; ++srow) {
        double v = 1.0 - 2.0 * (srow + 0.5) / strips;
        out << "<rect x=\"" << lx << "\" y=\"" << (margin + srow * strip_h) << "\" width=\""
            << legend_w << "\" height=\"" << (strip_h + 0.5) << "\" fill=\""
            << diverging_color(v) << "\"/>\n";
    }
    for (double tick : {1.0, 0.5, 0.0, -0.5, -1.0}) {
        double y = margin + (1.0 - tick) / 2.0 * grid;
        out << "<text x=\"" << (lx + legend_w + 5) << "\" y=\"" << (y + 3)
            << "\" font-size=\"10\" font-family=\"sans-serif\">" << format_csv_number(tick)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string compare_csv(const GeneratorComparison& cmp) {
    std::ostringstream out;
    out << "node,pop_adjacency,pop_laplacian,diff\n";
    for (std::size_t j = 0; j < cmp.adjacency.size(); ++j)
        out << (j + 1) << ',' << format_csv_number(cmp.adjacency[j]) << ','
            << format_csv_number(cmp.laplacian[j]) << ','
            << format_csv_number(cmp.adjacency[j] - cmp.laplacian[j]) << '\n';
    return out.str();
}

} // namespace qwalk
