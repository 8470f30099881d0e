#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lsph/errors.hpp"

namespace lsph {

/// Rectangular grid of foreground/background cells. Foreground cells make up
/// the initial region that the front propagation grows from. Row-major
/// storage, addressed as (row in [0,height), col in [0,width)).
class BinaryMask {
public:
    BinaryMask() = default;

    BinaryMask(int width, int height, bool fill = false)
        : width_(width), height_(height), cells_(checked_size(width, height), fill ? 1 : 0) {}

    int width() const { return width_; }
    int height() const { return height_; }

    bool at(int row, int col) const {
        return cells_[static_cast<std::size_t>(row) * width_ + col] != 0;
    }

    void set(int row, int col, bool value) {
        cells_[static_cast<std::size_t>(row) * width_ + col] = value ? 1 : 0;
    }

    std::size_t size() const { return cells_.size(); }

    std::size_t foreground_count() const {
        std::size_t n = 0;
        for (std::uint8_t c : cells_) n += c;
        return n;
    }

    bool empty_foreground() const { return foreground_count() == 0; }

    const std::vector<std::uint8_t>& cells() const { return cells_; }

    friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.cells_ == b.cells_;
    }

private:
    // Validates before the cell vector is sized, so bad dimensions surface as
    // input errors rather than allocation failures.
    static std::size_t checked_size(int width, int height) {
        if (width < 1 || height < 1)
            throw input_error("mask dimensions must be at least 1x1");
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Grows the grid by `margin` background cells on every side; the original
/// cells land at offset (margin, margin). Used to keep features away from the
/// grid boundary, where holes cannot form.
inline BinaryMask pad_mask(const BinaryMask& mask, int margin) {
    if (margin < 0)
        throw input_error("pad margin must be nonnegative");
    if (margin == 0)
        return mask;
    BinaryMask out(mask.width() + 2 * margin, mask.height() + 2 * margin);
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c)
            if (mask.at(r, c))
                out.set(r + margin, c + margin, true);
    return out;
}

} // namespace lsph
