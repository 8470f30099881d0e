#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lsph/errors.hpp"
#include "lsph/region_map.hpp"

namespace lsph {

namespace detail {

inline Ring ring_from_geojson(const nlohmann::json& coords, const std::string& feature_id) {
    if (!coords.is_array())
        throw input_error("feature '" + feature_id + "': ring coordinates must be an array");
    Ring ring;
    ring.points.reserve(coords.size());
    for (const nlohmann::json& position : coords) {
        if (!position.is_array() || position.size() < 2 || !position[0].is_number() ||
            !position[1].is_number())
            throw input_error("feature '" + feature_id +
                              "': each position must be a [x, y] number pair");
        ring.points.push_back({position[0].get<double>(), position[1].get<double>()});
    }
    return ring;
}

inline PolygonShape polygon_from_geojson(const nlohmann::json& coords,
                                         const std::string& feature_id) {
    if (!coords.is_array() || coords.empty())
        throw input_error("feature '" + feature_id + "': polygon must list at least one ring");
    PolygonShape polygon;
    for (const nlohmann::json& ring : coords)
        polygon.rings.push_back(ring_from_geojson(ring, feature_id));
    return polygon;
}

/// Feature id resolution order: top-level "id", then properties "id", then a
/// positional fallback so error messages can always name the feature.
inline std::string feature_id(const nlohmann::json& feature, std::size_t index) {
    auto stringify = [](const nlohmann::json& v) -> std::string {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (feature.contains("id"))
        return stringify(feature["id"]);
    if (feature.contains("properties") && feature["properties"].is_object() &&
        feature["properties"].contains("id"))
        return stringify(feature["properties"]["id"]);
    return "feature-" + std::to_string(index);
}

} // namespace detail

/// Builds a RegionMap from a GeoJSON FeatureCollection of Polygon or
/// MultiPolygon features. Every feature must carry the named attribute as a
/// nonnegative number in its properties; coordinates are used as planar map
/// units with no projection.
inline RegionMap region_map_from_geojson(const nlohmann::json& doc,
                                         const std::string& attribute) {
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection")
        throw input_error("GeoJSON root must be a FeatureCollection");
    if (!doc.contains("features") || !doc["features"].is_array())
        throw input_error("FeatureCollection has no \"features\" array");

    RegionMap map;
    std::size_t index = 0;
    for (const nlohmann::json& feature : doc["features"]) {
        std::string id = detail::feature_id(feature, index);
        ++index;
        if (!feature.is_object() || feature.value("type", "") != "Feature")
            throw input_error("feature '" + id + "' is not a GeoJSON Feature");
        if (!feature.contains("geometry") || !feature["geometry"].is_object())
            throw input_error("feature '" + id + "' has no geometry");

        const nlohmann::json& properties =
            feature.contains("properties") ? feature["properties"] : nlohmann::json::object();
        if (!properties.is_object() || !properties.contains(attribute))
            throw input_error("feature '" + id + "' is missing attribute \"" + attribute + "\"");
        const nlohmann::json& value = properties[attribute];
        if (!value.is_number())
            throw input_error("feature '" + id + "': attribute \"" + attribute +
                              "\" is not a number");
        double v = value.get<double>();
        if (!(v >= 0.0))
            throw input_error("feature '" + id + "': attribute \"" + attribute +
                              "\" must be nonnegative, got " + value.dump());

        const nlohmann::json& geometry = feature["geometry"];
        std::string geo_type = geometry.value("type", "");
        if (!geometry.contains("coordinates"))
            throw input_error("feature '" + id + "' geometry has no coordinates");
        const nlohmann::json& coords = geometry["coordinates"];

        Region region;
        region.id = id;
        region.value = v;
        if (geo_type == "Polygon") {
            region.polygons.push_back(detail::polygon_from_geojson(coords, id));
        } else if (geo_type == "MultiPolygon") {
            if (!coords.is_array() || coords.empty())
                throw input_error("feature '" + id + "': MultiPolygon lists no polygons");
            for (const nlohmann::json& polygon : coords)
                region.polygons.push_back(detail::polygon_from_geojson(polygon, id));
        } else {
            throw input_error("feature '" + id + "': unsupported geometry type \"" + geo_type +
                              "\" (expected Polygon or MultiPolygon)");
        }
        map.regions.push_back(std::move(region));
    }
    if (map.regions.empty())
        throw input_error("FeatureCollection contains no features");
    return map;
}

/// Reads and parses a GeoJSON file; see region_map_from_geojson.
inline RegionMap load_region_map(const std::string& path, const std::string& attribute) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("'" + path + "' is not valid JSON: " + e.what());
    }
    return region_map_from_geojson(doc, attribute);
}

} // namespace lsph
