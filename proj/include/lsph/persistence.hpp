#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lsph/complex.hpp"

namespace lsph {

/// One homology class: born when its feature first appears in the growing
/// complex, dead when it gets filled in. Infinite death marks a class that
/// survives the whole filtration.
struct PersistencePair {
    int dim = 0;
    double birth = 0.0;
    double death = std::numeric_limits<double>::infinity();

    bool essential() const { return std::isinf(death); }

    friend bool operator==(const PersistencePair& a, const PersistencePair& b) {
        return a.dim == b.dim && a.birth == b.birth && a.death == b.death;
    }
};

struct DiagramMetadata {
    std::string source;
    double speed = 1.0;
    int grid_width = 0;
    int grid_height = 0;
    double max_filtration = 0.0;
    bool essential_truncated = false;
};

struct PersistenceDiagram {
    DiagramMetadata metadata;
    std::vector<PersistencePair> pairs; // sorted by (dim, birth, death)
};

namespace detail {

inline constexpr std::uint32_t kNoPivot = 0xffffffffu;

// Reduced columns that became pivot owners, stored back to back.
struct ColumnArena {
    std::vector<std::uint32_t> data;
    std::vector<std::uint32_t> offset;
    std::vector<std::uint32_t> length;

    std::uint32_t store(const std::vector<std::uint32_t>& col) {
        offset.push_back(static_cast<std::uint32_t>(data.size()));
        length.push_back(static_cast<std::uint32_t>(col.size()));
        data.insert(data.end(), col.begin(), col.end());
        return static_cast<std::uint32_t>(offset.size() - 1);
    }

    void clear() {
        data.clear();
        offset.clear();
        length.clear();
    }
};

// work <- work XOR other (symmetric difference of sorted index lists).
inline void xor_into(std::vector<std::uint32_t>& work, const std::uint32_t* other,
                     std::uint32_t n, std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    std::size_t a = 0, b = 0;
    while (a < work.size() && b < n) {
        if (work[a] < other[b])
            scratch.push_back(work[a++]);
        else if (other[b] < work[a])
            scratch.push_back(other[b++]);
        else {
            ++a;
            ++b;
        }
    }
    scratch.insert(scratch.end(), work.begin() + a, work.end());
    scratch.insert(scratch.end(), other + b, other + n);
    work.swap(scratch);
}

} // namespace detail

/// Persistence pairing of the ordered GF(2) boundary matrix by column
/// reduction with clearing: triangle columns first (their pivots settle the
/// 1D pairs and let the paired edge columns be skipped), then the remaining
/// edge columns (0D pairs). Zero-persistence pairs are dropped; simplices
/// that stay unpaired become essential classes with infinite death.
inline PersistenceDiagram compute_persistence(const FilteredComplex& complex) {
    complex.validate();

    const std::size_t n = complex.size();
    const std::vector<std::uint32_t>& order = complex.order();
    const std::vector<std::uint32_t>& rank = complex.rank();

    std::vector<std::uint32_t> pivot_owner(n, detail::kNoPivot);
    std::vector<std::uint8_t> cleared(n, 0); // ranks of edges paired by triangles
    std::vector<std::uint8_t> killed(n, 0);  // ranks claimed as any pivot

    struct RawPair {
        std::uint32_t birth_rank;
        std::uint32_t death_rank;
        int dim;
    };
    std::vector<RawPair> raw;
    std::vector<std::uint32_t> essential_ranks; // positive, never killed

    std::vector<std::uint32_t> work, scratch;
    std::array<std::uint32_t, 3> faces{};

    for (int phase = 2; phase >= 1; --phase) {
        detail::ColumnArena arena;
        for (std::uint32_t k = 0; k < n; ++k) {
            const std::uint32_t idx = order[k];
            if (complex.simplex(idx).dim != phase) continue;
            if (phase == 1 && cleared[k]) continue;

            const int nf = complex.faces_of(idx, faces);
            work.clear();
            for (int j = 0; j < nf; ++j) work.push_back(rank[faces[j]]);
            std::sort(work.begin(), work.end());

            for (;;) {
                if (work.empty()) {
                    // Positive simplex with no later pivot: for edges this is
                    // an essential 1-cycle (all triangle pivots are known by
                    // now). Positive triangles would be 2-cycles; they cannot
                    // arise from planar grids and are not reported.
                    if (phase == 1) essential_ranks.push_back(k);
                    break;
                }
                const std::uint32_t low = work.back();
                const std::uint32_t owner = pivot_owner[low];
                if (owner == detail::kNoPivot) {
                    pivot_owner[low] = arena.store(work);
                    killed[low] = 1;
                    if (phase == 2) cleared[low] = 1;
                    raw.push_back({low, k, phase - 1});
                    break;
                }
                detail::xor_into(work, arena.data.data() + arena.offset[owner],
                                 arena.length[owner], scratch);
            }
        }
        // Pivot rows of this phase are never consulted by the next one
        // (columns of dimension p hold only dimension p-1 rows), so the
        // owner table can be rebuilt from scratch.
        std::fill(pivot_owner.begin(), pivot_owner.end(), detail::kNoPivot);
    }

    PersistenceDiagram diagram;
    diagram.metadata.speed = complex.speed();
    diagram.metadata.grid_width = complex.grid_width();
    diagram.metadata.grid_height = complex.grid_height();
    diagram.metadata.max_filtration = complex.max_value();

    for (const RawPair& p : raw) {
        const double birth = complex.value(order[p.birth_rank]);
        const double death = complex.value(order[p.death_rank]);
        if (birth == death) continue; // artifact of the total order
        diagram.pairs.push_back({p.dim, birth, death});
    }
    for (std::uint32_t k : essential_ranks)
        diagram.pairs.push_back({1, complex.value(order[k]),
                                 std::numeric_limits<double>::infinity()});
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t idx = order[k];
        if (complex.simplex(idx).dim == 0 && !killed[k])
            diagram.pairs.push_back({0, complex.value(idx),
                                     std::numeric_limits<double>::infinity()});
    }

    std::sort(diagram.pairs.begin(), diagram.pairs.end(),
              [](const PersistencePair& a, const PersistencePair& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  if (a.birth != b.birth) return a.birth < b.birth;
                  return a.death < b.death;
              });
    return diagram;
}

/// Number of classes alive at time t: birth <= t < death, with infinite
/// death counting for every t.
inline long betti_at(const PersistenceDiagram& diagram, double t, int dim) {
    long count = 0;
    for (const PersistencePair& p : diagram.pairs)
        if (p.dim == dim && p.birth <= t && t < p.death) ++count;
    return count;
}

/// Variant of the diagram with essential deaths clamped to the final
/// filtration value. Classes whose birth already equals that value are
/// dropped (death must exceed birth).
inline PersistenceDiagram truncate_essential(const PersistenceDiagram& diagram) {
    PersistenceDiagram out;
    out.metadata = diagram.metadata;
    out.metadata.essential_truncated = true;
    const double cap = diagram.metadata.max_filtration;
    for (const PersistencePair& p : diagram.pairs) {
        if (!p.essential()) {
            out.pairs.push_back(p);
        } else if (p.birth < cap) {
            out.pairs.push_back({p.dim, p.birth, cap});
        }
    }
    return out;
}

} // namespace lsph
