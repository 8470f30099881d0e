#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsph/errors.hpp"
#include "lsph/persistence.hpp"

namespace lsph {

namespace detail {

/// Shortest round-trip decimal form of a double; infinities print as "inf".
/// Used for every number we serialize so artifacts are byte-reproducible.
inline std::string format_double(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto out = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, out.ptr);
}

inline double parse_double(const std::string& text, const char* what) {
    if (text == "inf")
        return std::numeric_limits<double>::infinity();
    double value = 0.0;
    auto out = std::from_chars(text.data(), text.data() + text.size(), value);
    if (out.ec != std::errc() || out.ptr != text.data() + text.size())
        throw input_error(std::string("malformed ") + what + " value '" + text + "'");
    return value;
}

inline std::vector<PersistencePair> sorted_pairs(const PersistenceDiagram& diagram) {
    std::vector<PersistencePair> pairs = diagram.pairs;
    std::sort(pairs.begin(), pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return pairs;
}

} // namespace detail

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// CSV with header `dimension,birth,death`, LF line endings, `inf` for
/// essential deaths, pairs sorted by (dimension, birth, death).
inline std::string export_diagram_csv(const PersistenceDiagram& diagram) {
    std::string out = "dimension,birth,death\n";
    for (const PersistencePair& pair : detail::sorted_pairs(diagram)) {
        out += std::to_string(pair.dim);
        out += ',';
        out += detail::format_double(pair.birth);
        out += ',';
        out += detail::format_double(pair.death);
        out += '\n';
    }
    return out;
}

/// Parses the CSV schema written by export_diagram_csv. Metadata is not part
/// of the CSV format, so the result carries default metadata.
inline PersistenceDiagram parse_diagram_csv(const std::string& text) {
    PersistenceDiagram diagram;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "dimension,birth,death")
                throw input_error("diagram CSV must start with header 'dimension,birth,death'");
            saw_header = true;
            continue;
        }
        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
            throw input_error("diagram CSV row must have exactly 3 fields: '" + line + "'");
        PersistencePair pair;
        pair.dim = static_cast<int>(detail::parse_double(line.substr(0, c1), "dimension"));
        pair.birth = detail::parse_double(line.substr(c1 + 1, c2 - c1 - 1), "birth");
        pair.death = detail::parse_double(line.substr(c2 + 1), "death");
        diagram.pairs.push_back(pair);
    }
    if (!saw_header)
        throw input_error("diagram CSV is empty (missing header)");
    return diagram;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

/// JSON object {"metadata": {...}, "pairs": [{"birth","death","dim"}]} with
/// essential deaths encoded as the string "inf" (JSON has no infinity).
inline nlohmann::json diagram_to_json(const PersistenceDiagram& diagram) {
    nlohmann::json meta{
        {"essential_truncated", diagram.metadata.essential_truncated},
        {"grid_height", diagram.metadata.grid_height},
        {"grid_width", diagram.metadata.grid_width},
        {"max_filtration", diagram.metadata.max_filtration},
        {"source", diagram.metadata.source},
        {"speed", diagram.metadata.speed},
    };
    nlohmann::json pairs = nlohmann::json::array();
    for (const PersistencePair& pair : detail::sorted_pairs(diagram)) {
        nlohmann::json entry{{"birth", pair.birth}, {"dim", pair.dim}};
        if (pair.essential())
            entry["death"] = "inf";
        else
            entry["death"] = pair.death;
        pairs.push_back(std::move(entry));
    }
    return nlohmann::json{{"metadata", std::move(meta)}, {"pairs", std::move(pairs)}};
}

inline std::string export_diagram_json(const PersistenceDiagram& diagram) {
    return diagram_to_json(diagram).dump(2) + "\n";
}

inline PersistenceDiagram diagram_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
        throw input_error("diagram JSON must be an object with a \"pairs\" array");
    PersistenceDiagram diagram;
    if (doc.contains("metadata") && doc["metadata"].is_object()) {
        const nlohmann::json& meta = doc["metadata"];
        diagram.metadata.source = meta.value("source", std::string());
        diagram.metadata.speed = meta.value("speed", 1.0);
        diagram.metadata.grid_width = meta.value("grid_width", 0);
        diagram.metadata.grid_height = meta.value("grid_height", 0);
        diagram.metadata.max_filtration = meta.value("max_filtration", 0.0);
        diagram.metadata.essential_truncated = meta.value("essential_truncated", false);
    }
    for (const nlohmann::json& entry : doc["pairs"]) {
        if (!entry.is_object() || !entry.contains("dim") || !entry.contains("birth") ||
            !entry.contains("death"))
            throw input_error("diagram JSON pair must have dim, birth, and death");
        PersistencePair pair;
        pair.dim = entry["dim"].get<int>();
        pair.birth = entry["birth"].get<double>();
        if (entry["death"].is_string()) {
            if (entry["death"].get<std::string>() != "inf")
                throw input_error("diagram JSON death must be a number or \"inf\"");
            pair.death = std::numeric_limits<double>::infinity();
        } else {
            pair.death = entry["death"].get<double>();
        }
        diagram.pairs.push_back(pair);
    }
    return diagram;
}

inline PersistenceDiagram parse_diagram_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("diagram JSON is unparseable: ") + e.what());
    }
    return diagram_from_json(doc);
}

// ---------------------------------------------------------------------------
// Death-time bands
// ---------------------------------------------------------------------------

/// One death-time band [lower, upper) with per-dimension counts of finite
/// pairs; the final band's upper bound is infinity.
struct Band {
    double upper = std::numeric_limits<double>::infinity();
    std::array<std::int64_t, 2> count{0, 0}; // [0] = 0D pairs, [1] = 1D pairs
};

struct BandSummary {
    std::vector<double> bounds; // the finite split points, strictly increasing
    std::vector<Band> bands;    // bounds.size() + 1 entries
};

/// Bins finite pairs by death time into [0,b1), [b1,b2), ..., [bk,inf).
/// Essential pairs are not binned. Default bounds follow the analysis
/// convention of splitting deaths at 10 and 20 grid units.
inline BandSummary band_summary(const PersistenceDiagram& diagram,
                                const std::vector<double>& bounds = {10.0, 20.0}) {
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        if (!(bounds[i] < bounds[i + 1]))
            throw input_error("band bounds must be strictly increasing");
    BandSummary summary;
    summary.bounds = bounds;
    summary.bands.resize(bounds.size() + 1);
    for (std::size_t i = 0; i < bounds.size(); ++i)
        summary.bands[i].upper = bounds[i];
    for (const PersistencePair& pair : diagram.pairs) {
        if (pair.essential() || pair.dim < 0 || pair.dim > 1)
            continue;
        std::size_t band = bounds.size();
        for (std::size_t i = 0; i < bounds.size(); ++i)
            if (pair.death < bounds[i]) {
                band = i;
                break;
            }
        ++summary.bands[band].count[pair.dim];
    }
    return summary;
}

inline nlohmann::json band_summary_to_json(const BandSummary& summary) {
    nlohmann::json bands = nlohmann::json::array();
    for (const Band& band : summary.bands) {
        nlohmann::json entry{{"count_0d", band.count[0]}, {"count_1d", band.count[1]}};
        if (std::isinf(band.upper))
            entry["upper"] = "inf";
        else
            entry["upper"] = band.upper;
        bands.push_back(std::move(entry));
    }
    return nlohmann::json{{"bands", std::move(bands)}};
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

struct RenderOptions {
    int canvas_width = 640;
    int canvas_height = 640;
    std::string color_0d = "pink"; // conventional diagram colors; override per run
    std::string color_1d = "blue";
};

/// Renders the diagram as an SVG scatter plot in data coordinates: viewBox is
/// the data extent padded by 5%, finite pairs are circles (0D pink, 1D blue
/// by default), essential pairs are squares in the top margin, and the
/// identity line marks where birth = death.
inline std::string render_diagram_svg(const PersistenceDiagram& diagram,
                                      const RenderOptions& options = {}) {
    if (options.canvas_width < 1 || options.canvas_height < 1)
        throw input_error("canvas dimensions must be positive");

    double lo = 0.0, hi = 0.0;
    for (const PersistencePair& pair : diagram.pairs) {
        lo = std::min(lo, pair.birth);
        hi = std::max(hi, pair.birth);
        if (!pair.essential()) {
            lo = std::min(lo, pair.death);
            hi = std::max(hi, pair.death);
        }
    }
    if (hi <= lo) hi = lo + 1.0; // degenerate extent (empty or single-value diagram)
    double span = hi - lo;
    double pad = 0.05 * span;
    // SVG y grows downward; flip by plotting death d at y = lo + hi - d so
    // the viewBox stays [lo - pad, hi + pad] on both axes.
    auto flip = [&](double v) { return lo + hi - v; };
    auto num = [](double v) { return detail::format_double(v); };

    double stroke = span / 320.0;
    double radius = span / 60.0;
    double font = span / 18.0;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(options.canvas_width) + "\" height=\"" +
           std::to_string(options.canvas_height) + "\" viewBox=\"" + num(lo - pad) + " " +
           num(lo - pad) + " " + num(span + 2 * pad) + " " + num(span + 2 * pad) + "\">\n";
    svg += "  <rect class=\"background\" x=\"" + num(lo - pad) + "\" y=\"" + num(lo - pad) +
           "\" width=\"" + num(span + 2 * pad) + "\" height=\"" + num(span + 2 * pad) +
           "\" fill=\"white\"/>\n";
    // Axes along the left and bottom edges of the data extent.
    svg += "  <line class=\"axis\" x1=\"" + num(lo) + "\" y1=\"" + num(flip(lo)) + "\" x2=\"" +
           num(hi) + "\" y2=\"" + num(flip(lo)) + "\" stroke=\"black\" stroke-width=\"" +
           num(stroke) + "\"/>\n";
    svg += "  <line class=\"axis\" x1=\"" + num(lo) + "\" y1=\"" + num(flip(lo)) + "\" x2=\"" +
           num(lo) + "\" y2=\"" + num(flip(hi)) + "\" stroke=\"black\" stroke-width=\"" +
           num(stroke) + "\"/>\n";
    // Identity line g(x) = x.
    svg += "  <line class=\"diagonal\" x1=\"" + num(lo) + "\" y1=\"" + num(flip(lo)) +
           "\" x2=\"" + num(hi) + "\" y2=\"" + num(flip(hi)) +
           "\" stroke=\"gray\" stroke-width=\"" + num(stroke) + "\"/>\n";
    svg += "  <text class=\"axis-label\" x=\"" + num((lo + hi) / 2) + "\" y=\"" +
           num(flip(lo) + 0.8 * pad) + "\" font-size=\"" + num(font) +
           "\" text-anchor=\"middle\">birth</text>\n";
    svg += "  <text class=\"axis-label\" x=\"" + num(lo - 0.4 * pad) + "\" y=\"" +
           num(flip((lo + hi) / 2)) + "\" font-size=\"" + num(font) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 " + num(lo - 0.4 * pad) + " " +
           num(flip((lo + hi) / 2)) + ")\">death</text>\n";

    for (const PersistencePair& pair : detail::sorted_pairs(diagram)) {
        const std::string& color = pair.dim == 0 ? options.color_0d : options.color_1d;
        if (pair.essential()) {
            // Distinct square marker in the top margin, above every finite death.
            double side = 2.0 * radius;
            svg += "  <rect class=\"pair essential dim" + std::to_string(pair.dim) + "\" x=\"" +
                   num(pair.birth - radius) + "\" y=\"" + num(lo - pad / 2 - radius) +
                   "\" width=\"" + num(side) + "\" height=\"" + num(side) + "\" fill=\"" + color +
                   "\"/>\n";
        } else {
            svg += "  <circle class=\"pair dim" + std::to_string(pair.dim) + "\" cx=\"" +
                   num(pair.birth) + "\" cy=\"" + num(flip(pair.death)) + "\" r=\"" +
                   num(radius) + "\" fill=\"" + color + "\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace lsph
