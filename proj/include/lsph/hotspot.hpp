#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lsph/complex.hpp"
#include "lsph/diagram_io.hpp"
#include "lsph/levelset.hpp"
#include "lsph/persistence.hpp"
#include "lsph/region_map.hpp"

namespace lsph {

struct HotspotOptions {
    double threshold = 0.0;
    ThresholdDirection direction = ThresholdDirection::below;
    double resolution = 1.0; // cells per map unit
    double speed = 1.0;      // front propagation speed
    int padding = 0;         // background margin added around the rasterized mask
};

/// Interpretation of a thresholded region map's 1D persistence. Holes present
/// from the start (birth 0) are the candidate hotspots; later births come
/// from the geometry of the growing front. The two caveats are fixed: counts
/// of born-at-zero classes and counts of hotspots are related but not equal.
struct HotspotReport {
    double threshold = 0.0;
    ThresholdDirection direction = ThresholdDirection::below;
    std::vector<PersistencePair> born_at_zero_1d;
    std::vector<PersistencePair> late_born_1d;
    std::vector<std::string> excluded_region_ids; // regions failing the predicate
    std::vector<std::string> caveats;
};

inline std::vector<std::string> hotspot_caveats() {
    return {
        "born-at-zero 1D classes count every hole of the thresholded map, including holes of "
        "the map itself, so they are candidate hotspots rather than confirmed ones",
        "a hot zone adjacent to the map boundary is not enclosed by foreground and creates no "
        "1D class, so boundary hotspots are missed by these counts",
    };
}

/// Full region-map pipeline: rasterize the sub-threshold union, grow it by
/// the front propagation, and read the persistence diagram as a hotspot
/// report. Finite 1D pairs are split by birth time; regions failing the
/// predicate are listed separately, with no attempt to attribute individual
/// classes to individual regions.
inline std::pair<PersistenceDiagram, HotspotReport>
analyze_hotspots(const RegionMap& map, const HotspotOptions& options) {
    BinaryMask mask = rasterize_regions(map, options.threshold, options.direction,
                                        options.resolution);
    if (options.padding > 0)
        mask = pad_mask(mask, options.padding);
    ScalarField field = arrival_time_field(mask, options.speed);
    FilteredComplex complex = FilteredComplex::from_field(field);
    PersistenceDiagram diagram = compute_persistence(complex);

    HotspotReport report;
    report.threshold = options.threshold;
    report.direction = options.direction;
    report.caveats = hotspot_caveats();
    for (const PersistencePair& pair : diagram.pairs) {
        if (pair.dim != 1 || pair.essential())
            continue;
        if (pair.birth == 0.0)
            report.born_at_zero_1d.push_back(pair);
        else
            report.late_born_1d.push_back(pair);
    }
    for (const Region& region : map.regions)
        if (!predicate_holds(region.value, options.threshold, options.direction))
            report.excluded_region_ids.push_back(region.id);
    return {std::move(diagram), std::move(report)};
}

inline nlohmann::json report_to_json(const HotspotReport& report) {
    auto pair_list = [](const std::vector<PersistencePair>& pairs) {
        nlohmann::json out = nlohmann::json::array();
        for (const PersistencePair& pair : pairs)
            out.push_back(nlohmann::json{{"birth", pair.birth}, {"death", pair.death}});
        return out;
    };
    return nlohmann::json{
        {"born_at_zero_1d",
         {{"count", report.born_at_zero_1d.size()}, {"pairs", pair_list(report.born_at_zero_1d)}}},
        {"caveats", report.caveats},
        {"direction", direction_name(report.direction)},
        {"excluded_region_ids", report.excluded_region_ids},
        {"late_born_1d",
         {{"count", report.late_born_1d.size()}, {"pairs", pair_list(report.late_born_1d)}}},
        {"threshold", report.threshold},
    };
}

} // namespace lsph
