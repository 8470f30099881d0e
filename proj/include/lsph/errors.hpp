#pragma once

#include <stdexcept>
#include <string>

namespace lsph {

// Bad caller input: malformed files, out-of-range parameters, degenerate geometry.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// The thresholded/loaded data contains no foreground at all. The arrival-time
// field is undefined in that case, so the pipeline refuses to start.
class empty_manifold_error : public std::runtime_error {
public:
    empty_manifold_error() : std::runtime_error("empty initial manifold") {}
    explicit empty_manifold_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lsph
