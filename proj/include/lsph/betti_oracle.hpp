#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "lsph/complex.hpp"

namespace lsph {

namespace detail {

// Rank of a GF(2) matrix given as dense bit columns, by plain Gaussian
// elimination. Desk-scale only.
class Gf2RankAccumulator {
public:
    explicit Gf2RankAccumulator(std::size_t rows)
        : words_((rows + 63) / 64), pivot_of_row_(rows, -1) {}

    std::size_t words() const { return words_; }

    void add_column(std::vector<std::uint64_t> col) {
        for (;;) {
            const int hb = highest_bit(col);
            if (hb < 0) return; // dependent column
            const int owner = pivot_of_row_[hb];
            if (owner < 0) {
                pivot_of_row_[hb] = static_cast<int>(pivots_.size());
                pivots_.push_back(std::move(col));
                ++rank_;
                return;
            }
            const std::vector<std::uint64_t>& p = pivots_[owner];
            for (std::size_t w = 0; w < words_; ++w) col[w] ^= p[w];
        }
    }

    long rank() const { return rank_; }

private:
    static int highest_bit(const std::vector<std::uint64_t>& col) {
        for (std::size_t w = col.size(); w-- > 0;) {
            if (col[w] != 0)
                return static_cast<int>(w * 64 + 63 - std::countl_zero(col[w]));
        }
        return -1;
    }

    std::size_t words_;
    std::vector<int> pivot_of_row_;
    std::vector<std::vector<std::uint64_t>> pivots_;
    long rank_ = 0;
};

} // namespace detail

inline constexpr std::size_t kOracleSimplexCap = 20000;

/// Betti number of the sublevel complex at t, computed from scratch by dense
/// GF(2) Gaussian elimination on the boundary matrices:
///   beta_d = dim C_d - rank(boundary_d) - rank(boundary_{d+1}).
/// Independent verification path for compute_persistence; refuses complexes
/// whose sublevel part exceeds a fixed desk-scale cap.
inline long brute_force_betti(const FilteredComplex& complex, double t, int dim) {
    if (dim != 0 && dim != 1)
        throw input_error("oracle supports dimensions 0 and 1 only");

    const std::size_t n = complex.size();
    std::size_t sublevel_total = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        if (complex.value(i) <= t) ++sublevel_total;
    if (sublevel_total > kOracleSimplexCap)
        throw input_error("oracle size cap exceeded: sublevel complex has " +
                          std::to_string(sublevel_total) + " simplices (cap " +
                          std::to_string(kOracleSimplexCap) + ")");

    // Dense ids per dimension for the sublevel simplices.
    constexpr std::uint32_t absent = 0xffffffffu;
    std::vector<std::uint32_t> dense(n, absent);
    std::size_t count[3] = {0, 0, 0};
    for (std::uint32_t i = 0; i < n; ++i) {
        if (complex.value(i) <= t)
            dense[i] = static_cast<std::uint32_t>(count[complex.simplex(i).dim]++);
    }

    std::array<std::uint32_t, 3> faces{};
    auto boundary_rank = [&](int p) -> long {
        // rank of boundary_p : C_p -> C_{p-1} on the sublevel complex
        detail::Gf2RankAccumulator acc(count[p - 1]);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (dense[i] == absent || complex.simplex(i).dim != p) continue;
            std::vector<std::uint64_t> col(acc.words(), 0);
            const int nf = complex.faces_of(i, faces);
            for (int j = 0; j < nf; ++j) {
                const std::uint32_t row = dense[faces[j]];
                col[row / 64] ^= (std::uint64_t{1} << (row % 64));
            }
            acc.add_column(std::move(col));
        }
        return acc.rank();
    };

    const long rank1 = count[1] > 0 ? boundary_rank(1) : 0;
    if (dim == 0)
        return static_cast<long>(count[0]) - rank1;
    const long rank2 = count[2] > 0 ? boundary_rank(2) : 0;
    return static_cast<long>(count[1]) - rank1 - rank2;
}

} // namespace lsph
