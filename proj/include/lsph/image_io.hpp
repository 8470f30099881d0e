#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <png.h>

#include "lsph/errors.hpp"
#include "lsph/levelset.hpp"
#include "lsph/mask.hpp"

namespace lsph {

/// 8-bit grayscale raster, row-major, one luminance byte per pixel.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;

    GrayImage(int w, int h, std::uint8_t fill = 0) : width(w), height(h) {
        if (w < 1 || h < 1)
            throw input_error("image dimensions must be at least 1x1");
        pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
    }

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }

    void set(int row, int col, std::uint8_t value) {
        pixels[static_cast<std::size_t>(row) * width + col] = value;
    }
};

/// Which luminance range counts as foreground when thresholding an image.
/// Street maps draw streets in dark ink on a light background, so
/// dark_is_foreground is the conventional default.
enum class Polarity {
    dark_is_foreground,  // foreground iff luminance <= threshold
    light_is_foreground, // foreground iff luminance >= threshold
};

namespace detail {

/// Integer rec.601 luma with round-half-up, exact in 32-bit arithmetic.
inline std::uint8_t luma(unsigned r, unsigned g, unsigned b) {
    return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

/// RAII stdio handle so error paths below can just throw.
struct File {
    std::FILE* fp = nullptr;
    explicit File(const std::string& path, const char* mode)
        : fp(std::fopen(path.c_str(), mode)) {}
    ~File() {
        if (fp) std::fclose(fp);
    }
    File(const File&) = delete;
    File& operator=(const File&) = delete;
};

/// Reads one PGM header token, skipping whitespace and '#' comment lines.
inline std::string pgm_token(std::FILE* fp) {
    int ch = std::fgetc(fp);
    while (ch != EOF) {
        if (ch == '#') { // comment runs to end of line
            while (ch != EOF && ch != '\n') ch = std::fgetc(fp);
        } else if (!std::isspace(ch)) {
            break;
        }
        ch = std::fgetc(fp);
    }
    std::string token;
    while (ch != EOF && !std::isspace(ch)) {
        token.push_back(static_cast<char>(ch));
        ch = std::fgetc(fp);
    }
    return token;
}

inline int pgm_int(std::FILE* fp, const std::string& path, const char* what) {
    std::string token = pgm_token(fp);
    if (token.empty())
        throw input_error("'" + path + "': truncated PGM header (missing " + what + ")");
    for (char c : token)
        if (c < '0' || c > '9')
            throw input_error("'" + path + "': malformed PGM " + what + " '" + token + "'");
    long value = std::strtol(token.c_str(), nullptr, 10);
    return static_cast<int>(value);
}

inline GrayImage load_pgm(const std::string& path) {
    File f(path, "rb");
    if (!f.fp)
        throw input_error("cannot open '" + path + "'");
    char magic[2] = {0, 0};
    if (std::fread(magic, 1, 2, f.fp) != 2 || magic[0] != 'P' || magic[1] != '5')
        throw input_error("'" + path + "': not a binary PGM (P5) file");
    int width = pgm_int(f.fp, path, "width");
    int height = pgm_int(f.fp, path, "height");
    int maxval = pgm_int(f.fp, path, "maxval");
    if (width < 1 || height < 1)
        throw input_error("'" + path + "': empty image");
    if (maxval < 1 || maxval > 255)
        throw input_error("'" + path + "': unsupported PGM maxval " + std::to_string(maxval) +
                          " (only 8-bit samples are supported)");
    // The maxval is followed by exactly one whitespace byte, then raw samples.
    GrayImage image(width, height);
    if (std::fread(image.pixels.data(), 1, image.pixels.size(), f.fp) != image.pixels.size())
        throw input_error("'" + path + "': truncated PGM pixel data");
    if (maxval != 255)
        for (std::uint8_t& p : image.pixels)
            p = static_cast<std::uint8_t>((p * 255 + maxval / 2) / maxval);
    return image;
}

inline GrayImage load_png(const std::string& path) {
    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&png, path.c_str()))
        throw input_error("cannot read PNG '" + path + "': " + png.message);
    // Ask libpng for plain 8-bit RGB; alpha (if any) is composited onto white,
    // matching the light-paper background of scanned street maps.
    png.format = PNG_FORMAT_RGB;
    std::vector<std::uint8_t> rgb(PNG_IMAGE_SIZE(png));
    png_color white{255, 255, 255};
    if (!png_image_finish_read(&png, &white, rgb.data(), 0, nullptr)) {
        std::string message = png.message;
        png_image_free(&png);
        throw input_error("cannot decode PNG '" + path + "': " + message);
    }
    if (png.width < 1 || png.height < 1)
        throw input_error("'" + path + "': empty image");
    GrayImage image(static_cast<int>(png.width), static_cast<int>(png.height));
    const std::uint8_t* p = rgb.data();
    for (std::uint8_t& out : image.pixels) {
        out = luma(p[0], p[1], p[2]);
        p += 3;
    }
    return image;
}

} // namespace detail

/// Loads an 8-bit grayscale image from a PNG or binary PGM (P5) file,
/// dispatching on the file's magic bytes. Color PNGs are converted with the
/// integer rec.601 luma, alpha composited onto white.
inline GrayImage load_gray_image(const std::string& path) {
    detail::File probe(path, "rb");
    if (!probe.fp)
        throw input_error("cannot open '" + path + "'");
    unsigned char magic[8] = {0};
    std::size_t got = std::fread(magic, 1, sizeof magic, probe.fp);
    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0)
        return detail::load_png(path);
    if (got >= 2 && magic[0] == 'P' && magic[1] == '5')
        return detail::load_pgm(path);
    throw input_error("'" + path + "': unrecognized image format (expected PNG or P5 PGM)");
}

/// Writes a grayscale image as a binary PGM (P5) with maxval 255.
inline void write_pgm(const GrayImage& image, const std::string& path) {
    detail::File f(path, "wb");
    if (!f.fp)
        throw input_error("cannot open '" + path + "' for writing");
    std::fprintf(f.fp, "P5\n%d %d\n255\n", image.width, image.height);
    if (std::fwrite(image.pixels.data(), 1, image.pixels.size(), f.fp) != image.pixels.size())
        throw input_error("short write to '" + path + "'");
}

/// Writes a grayscale image as an 8-bit gray PNG.
inline void write_png(const GrayImage& image, const std::string& path) {
    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width);
    png.height = static_cast<png_uint_32>(image.height);
    png.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&png, path.c_str(), 0, image.pixels.data(), 0, nullptr))
        throw input_error("cannot write PNG '" + path + "': " + std::string(png.message));
}

/// Thresholds an image into the initial foreground mask. With
/// dark_is_foreground a pixel is foreground iff luminance <= threshold; with
/// light_is_foreground iff luminance >= threshold.
inline BinaryMask mask_from_image(const GrayImage& image, int threshold, Polarity polarity) {
    if (image.width < 1 || image.height < 1)
        throw input_error("empty image");
    if (threshold < 0 || threshold > 255)
        throw input_error("luminance threshold must be in [0,255], got " +
                          std::to_string(threshold));
    BinaryMask mask(image.width, image.height);
    for (int r = 0; r < image.height; ++r)
        for (int c = 0; c < image.width; ++c) {
            int lum = image.at(r, c);
            bool fg = polarity == Polarity::dark_is_foreground ? lum <= threshold
                                                               : lum >= threshold;
            mask.set(r, c, fg);
        }
    if (mask.empty_foreground())
        throw empty_manifold_error();
    return mask;
}

/// Loads an image file and thresholds it; see mask_from_image.
inline BinaryMask load_mask_from_image(const std::string& path, int threshold,
                                       Polarity polarity = Polarity::dark_is_foreground) {
    return mask_from_image(load_gray_image(path), threshold, polarity);
}

/// Renders a mask back to a two-level image. Foreground is luminance 0 under
/// dark_is_foreground and 255 under light_is_foreground, so reloading with
/// threshold 128 and the same polarity reproduces the mask.
inline GrayImage image_from_mask(const BinaryMask& mask,
                                 Polarity polarity = Polarity::dark_is_foreground) {
    std::uint8_t fg = polarity == Polarity::dark_is_foreground ? 0 : 255;
    std::uint8_t bg = static_cast<std::uint8_t>(255 - fg);
    GrayImage image(mask.width(), mask.height(), bg);
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c)
            if (mask.at(r, c))
                image.set(r, c, fg);
    return image;
}

/// Debug heatmap of an arrival-time field: values scaled linearly so that 0
/// maps to black and the field maximum to white.
inline GrayImage field_heatmap(const ScalarField& field) {
    GrayImage image(field.width, field.height);
    double max = field.max_value();
    for (int r = 0; r < field.height; ++r)
        for (int c = 0; c < field.width; ++c) {
            double v = max > 0.0 ? field.at(r, c) / max : 0.0;
            image.set(r, c, static_cast<std::uint8_t>(v * 255.0 + 0.5));
        }
    return image;
}

} // namespace lsph
