// Command-line frontend for the level-set persistence pipeline.
//
// Subcommands:
//   analyze-image  grayscale map image -> persistence diagram + band summary
//   analyze-geo    GeoJSON region map  -> diagram + hotspot report
//   validate       engine-vs-oracle self check on random instances
//
// Exit codes: 0 success, 1 validation failure, 2 input error,
//             3 empty initial manifold, 70 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lsph/lsph.hpp>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitEmptyManifold = 3;
constexpr int kExitInternalError = 70;

struct CommonConfig {
    std::string input;
    std::string out_dir = ".";
    double speed = 1.0;
    int pad = 0;
    std::vector<double> bands{10.0, 20.0};
    bool plot = false;
    bool truncate = false;
    lsph::RenderOptions render;
};

struct ImageConfig : CommonConfig {
    int threshold = 128;
    lsph::Polarity polarity = lsph::Polarity::dark_is_foreground;
    bool dump_field = false;
};

struct GeoConfig : CommonConfig {
    std::string attribute;
    double threshold = 0.0;
    lsph::ThresholdDirection direction = lsph::ThresholdDirection::below;
    double resolution = 1.0;
};

struct ValidateConfig {
    std::uint64_t seed = 20260825ull;
    int trials = 50;
    int max_side = 20;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw lsph::input_error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out)
        throw lsph::input_error("short write to '" + path.string() + "'");
}

/// Registers the options shared by both analysis subcommands.
void add_common_options(CLI::App* sub, CommonConfig& config) {
    sub->add_option("--speed", config.speed, "front propagation speed v")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--pad", config.pad,
                    "background margin (cells) added around the mask so holes can "
                    "form near the original boundary")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--bands", config.bands,
                    "death-time band bounds for the band summary (strictly increasing)")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_flag("--plot", config.plot, "also write an SVG scatter plot of the diagram");
    sub->add_option("--out-dir", config.out_dir, "directory for output artifacts")
        ->capture_default_str();
    sub->add_flag("--truncate-essential", config.truncate,
                  "clamp essential deaths to the field maximum instead of reporting inf");
    sub->add_option("--color-0d", config.render.color_0d, "plot color for 0D pairs")
        ->capture_default_str();
    sub->add_option("--color-1d", config.render.color_1d, "plot color for 1D pairs")
        ->capture_default_str();
}

/// Diagram + band summary artifacts common to both analysis subcommands.
/// Returns the list of files written (for the stdout summary).
std::vector<std::string> write_diagram_artifacts(const lsph::PersistenceDiagram& diagram,
                                                 const CommonConfig& config) {
    fs::create_directories(config.out_dir);
    fs::path dir(config.out_dir);
    std::vector<std::string> written;

    write_file(dir / "diagram.csv", lsph::export_diagram_csv(diagram));
    written.push_back((dir / "diagram.csv").string());
    write_file(dir / "diagram.json", lsph::export_diagram_json(diagram));
    written.push_back((dir / "diagram.json").string());

    lsph::BandSummary bands = lsph::band_summary(diagram, config.bands);
    write_file(dir / "bands.json", lsph::band_summary_to_json(bands).dump(2) + "\n");
    written.push_back((dir / "bands.json").string());

    if (config.plot) {
        write_file(dir / "diagram.svg", lsph::render_diagram_svg(diagram, config.render));
        written.push_back((dir / "diagram.svg").string());
    }
    return written;
}

void print_diagram_summary(const lsph::PersistenceDiagram& diagram, const CommonConfig& config) {
    int finite[2] = {0, 0};
    int essential[2] = {0, 0};
    for (const lsph::PersistencePair& pair : diagram.pairs)
        if (pair.dim >= 0 && pair.dim <= 1)
            ++(pair.essential() ? essential : finite)[pair.dim];
    std::cout << "pairs: 0D " << finite[0] << " finite + " << essential[0] << " essential, 1D "
              << finite[1] << " finite + " << essential[1] << " essential\n";

    lsph::BandSummary bands = lsph::band_summary(diagram, config.bands);
    std::cout << "death-time bands:\n";
    double lower = 0.0;
    for (const lsph::Band& band : bands.bands) {
        std::cout << "  [" << lsph::detail::format_double(lower) << ", "
                  << lsph::detail::format_double(band.upper) << "): 0D " << band.count[0]
                  << ", 1D " << band.count[1] << "\n";
        lower = band.upper;
    }
}

int run_analyze_image(const ImageConfig& config) {
    lsph::BinaryMask mask = lsph::load_mask_from_image(config.input, config.threshold,
                                                       config.polarity);
    if (config.pad > 0)
        mask = lsph::pad_mask(mask, config.pad);
    lsph::ScalarField field = lsph::arrival_time_field(mask, config.speed);

    fs::create_directories(config.out_dir);
    if (config.dump_field)
        lsph::write_pgm(lsph::field_heatmap(field), (fs::path(config.out_dir) / "field.pgm").string());

    lsph::FilteredComplex complex = lsph::FilteredComplex::from_field(field);
    lsph::PersistenceDiagram diagram = lsph::compute_persistence(complex);
    diagram.metadata.source = config.input;
    if (config.truncate)
        diagram = lsph::truncate_essential(diagram);

    std::cout << "input: " << config.input << " (" << mask.width() << "x" << mask.height()
              << " cells, " << mask.foreground_count() << " foreground)\n";
    print_diagram_summary(diagram, config);
    for (const std::string& path : write_diagram_artifacts(diagram, config))
        std::cout << "wrote " << path << "\n";
    if (config.dump_field)
        std::cout << "wrote " << (fs::path(config.out_dir) / "field.pgm").string() << "\n";
    return kExitOk;
}

int run_analyze_geo(const GeoConfig& config) {
    lsph::RegionMap map = lsph::load_region_map(config.input, config.attribute);

    lsph::HotspotOptions options;
    options.threshold = config.threshold;
    options.direction = config.direction;
    options.resolution = config.resolution;
    options.speed = config.speed;
    options.padding = config.pad;
    auto [diagram, report] = lsph::analyze_hotspots(map, options);
    diagram.metadata.source = config.input;
    if (config.truncate)
        diagram = lsph::truncate_essential(diagram);

    std::cout << "input: " << config.input << " (" << map.regions.size() << " regions, attribute \""
              << config.attribute << "\")\n";
    std::cout << "predicate: value " << lsph::direction_name(config.direction) << " "
              << lsph::detail::format_double(config.threshold) << ", " << config.resolution
              << " cells per map unit\n";
    std::cout << "excluded regions (" << report.excluded_region_ids.size() << "):";
    for (const std::string& id : report.excluded_region_ids)
        std::cout << " " << id;
    std::cout << "\n";
    std::cout << "1D classes: " << report.born_at_zero_1d.size()
              << " born at zero (candidate hotspots or map holes), " << report.late_born_1d.size()
              << " born later\n";
    for (const std::string& caveat : report.caveats)
        std::cout << "caveat: " << caveat << "\n";
    print_diagram_summary(diagram, config);

    std::vector<std::string> written = write_diagram_artifacts(diagram, config);
    fs::path report_path = fs::path(config.out_dir) / "report.json";
    write_file(report_path, lsph::report_to_json(report).dump(2) + "\n");
    written.push_back(report_path.string());
    for (const std::string& path : written)
        std::cout << "wrote " << path << "\n";
    return kExitOk;
}

int run_validate(const ValidateConfig& config) {
    lsph::ValidationOptions options;
    options.seed = config.seed;
    options.trials = config.trials;
    options.max_side = config.max_side;
    std::cout << "validate: seed " << options.seed << ", " << options.trials
              << " random masks up to " << options.max_side << "x" << options.max_side << "\n";
    lsph::ValidationResult result = lsph::run_oracle_validation(options);
    if (!result.ok) {
        std::cerr << "validation FAILED after " << result.trials_run << " trials:\n"
                  << result.failure;
        return kExitValidationFailure;
    }
    std::cout << "validation OK: " << result.trials_run << " trials, " << result.checks
              << " engine-vs-oracle Betti checks\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistent homology of 2D spatial data via level-set filtration"};
    app.require_subcommand(1);

    ImageConfig image_config;
    CLI::App* image = app.add_subcommand(
        "analyze-image", "compute the persistence diagram of a grayscale map image");
    image->add_option("input", image_config.input, "PNG or PGM (P5) image")->required();
    image->add_option("--threshold", image_config.threshold,
                      "luminance threshold for foreground extraction")
        ->check(CLI::Range(0, 255))
        ->capture_default_str();
    std::map<std::string, lsph::Polarity> polarity_names{
        {"dark", lsph::Polarity::dark_is_foreground},
        {"light", lsph::Polarity::light_is_foreground}};
    image->add_option("--polarity", image_config.polarity,
                      "which side of the threshold is foreground")
        ->transform(CLI::CheckedTransformer(polarity_names, CLI::ignore_case))
        ->default_str("dark");
    image->add_flag("--dump-field", image_config.dump_field,
                    "also write the arrival-time field as a PGM heatmap");
    add_common_options(image, image_config);

    GeoConfig geo_config;
    CLI::App* geo = app.add_subcommand(
        "analyze-geo", "compute diagram and hotspot report for a GeoJSON region map");
    geo->add_option("input", geo_config.input, "GeoJSON FeatureCollection of Polygon/MultiPolygon")
        ->required();
    geo->add_option("--attribute", geo_config.attribute,
                    "property key holding each region's value")
        ->required();
    geo->add_option("--threshold", geo_config.threshold, "region value threshold")->required();
    std::map<std::string, lsph::ThresholdDirection> direction_names{
        {"below", lsph::ThresholdDirection::below},
        {"at-or-above", lsph::ThresholdDirection::at_or_above}};
    geo->add_option("--direction", geo_config.direction,
                    "which regions count as foreground: value below (strict) or at-or-above "
                    "the threshold")
        ->transform(CLI::CheckedTransformer(direction_names, CLI::ignore_case))
        ->default_str("below");
    geo->add_option("--resolution", geo_config.resolution, "rasterization cells per map unit")
        ->check(CLI::PositiveNumber)
        ->required();
    add_common_options(geo, geo_config);

    ValidateConfig validate_config;
    CLI::App* validate = app.add_subcommand(
        "validate", "cross-check the persistence engine against the brute-force oracle");
    validate->add_option("--seed", validate_config.seed, "RNG seed for the instance sequence")
        ->capture_default_str();
    validate->add_option("--trials", validate_config.trials, "number of random masks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    validate->add_option("--max-side", validate_config.max_side, "maximum mask side length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (image->parsed())
            return run_analyze_image(image_config);
        if (geo->parsed())
            return run_analyze_geo(geo_config);
        return run_validate(validate_config);
    } catch (const lsph::empty_manifold_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmptyManifold;
    } catch (const lsph::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
