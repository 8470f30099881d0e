#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lsph/levelset.hpp"

namespace lsph {

/// A vertex, edge, or triangle, identified by its strictly increasing tuple
/// of grid-vertex ids.
struct Simplex {
    std::array<std::uint32_t, 3> v{0, 0, 0};
    std::uint8_t dim = 0;

    int vertex_count() const { return dim + 1; }

    static Simplex vertex(std::uint32_t a) { return Simplex{{a, 0, 0}, 0}; }

    static Simplex edge(std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        return Simplex{{a, b, 0}, 1};
    }

    static Simplex triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        std::array<std::uint32_t, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        return Simplex{t, 2};
    }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        if (a.dim != b.dim) return false;
        for (int i = 0; i <= a.dim; ++i)
            if (a.v[i] != b.v[i]) return false;
        return true;
    }

    // Lexicographic on the vertex tuple; used for tie-breaking in the
    // filtration order (only ever compared between equal dimensions there).
    bool tuple_less(const Simplex& o) const {
        const int n = std::min(vertex_count(), o.vertex_count());
        for (int i = 0; i < n; ++i) {
            if (v[i] != o.v[i]) return v[i] < o.v[i];
        }
        return vertex_count() < o.vertex_count();
    }
};

/// GF(2) simplicial boundary: vertices have none, an edge bounds its two
/// endpoints, a triangle bounds its three edges.
inline std::vector<Simplex> boundary(const Simplex& s) {
    switch (s.dim) {
    case 0:
        return {};
    case 1:
        return {Simplex::vertex(s.v[0]), Simplex::vertex(s.v[1])};
    default:
        return {Simplex::edge(s.v[0], s.v[1]), Simplex::edge(s.v[0], s.v[2]),
                Simplex::edge(s.v[1], s.v[2])};
    }
}

namespace detail {

// Canonical storage layout of the triangulated width x height vertex grid.
// Vertex ids are row-major; every unit cell gets the diagonal from its
// (r,c) corner to (r+1,c+1), splitting it into two triangles. Blocks, in
// order: vertices, horizontal edges, vertical edges, diagonal edges,
// triangles (two per cell).
struct GridLayout {
    int w = 0;
    int h = 0;

    std::size_t n_vertices() const { return static_cast<std::size_t>(w) * h; }
    std::size_t n_hedges() const { return static_cast<std::size_t>(h) * (w - 1); }
    std::size_t n_vedges() const { return static_cast<std::size_t>(h - 1) * w; }
    std::size_t n_dedges() const { return static_cast<std::size_t>(h - 1) * (w - 1); }
    std::size_t n_triangles() const { return 2 * n_dedges(); }
    std::size_t total() const {
        return n_vertices() + n_hedges() + n_vedges() + n_dedges() + n_triangles();
    }

    std::size_t base_h() const { return n_vertices(); }
    std::size_t base_v() const { return base_h() + n_hedges(); }
    std::size_t base_d() const { return base_v() + n_vedges(); }
    std::size_t base_t() const { return base_d() + n_dedges(); }

    std::uint32_t vert(int r, int c) const {
        return static_cast<std::uint32_t>(static_cast<std::size_t>(r) * w + c);
    }
    std::uint32_t hedge(int r, int c) const {
        return static_cast<std::uint32_t>(base_h() + static_cast<std::size_t>(r) * (w - 1) + c);
    }
    std::uint32_t vedge(int r, int c) const {
        return static_cast<std::uint32_t>(base_v() + static_cast<std::size_t>(r) * w + c);
    }
    std::uint32_t dedge(int r, int c) const {
        return static_cast<std::uint32_t>(base_d() + static_cast<std::size_t>(r) * (w - 1) + c);
    }
    std::uint32_t tri(int r, int c, int which) const {
        return static_cast<std::uint32_t>(base_t() +
                                          2 * (static_cast<std::size_t>(r) * (w - 1) + c) + which);
    }

    // Face indices of the simplex stored at `idx`; returns the face count.
    int faces_of(std::uint32_t idx, std::array<std::uint32_t, 3>& out) const {
        const std::size_t i = idx;
        if (i < base_h()) return 0;
        if (i < base_v()) { // horizontal edge
            const std::size_t k = i - base_h();
            const int r = static_cast<int>(k / (w - 1)), c = static_cast<int>(k % (w - 1));
            out[0] = vert(r, c);
            out[1] = vert(r, c + 1);
            return 2;
        }
        if (i < base_d()) { // vertical edge
            const std::size_t k = i - base_v();
            const int r = static_cast<int>(k / w), c = static_cast<int>(k % w);
            out[0] = vert(r, c);
            out[1] = vert(r + 1, c);
            return 2;
        }
        if (i < base_t()) { // diagonal edge
            const std::size_t k = i - base_d();
            const int r = static_cast<int>(k / (w - 1)), c = static_cast<int>(k % (w - 1));
            out[0] = vert(r, c);
            out[1] = vert(r + 1, c + 1);
            return 2;
        }
        const std::size_t k = i - base_t();
        const int r = static_cast<int>((k / 2) / (w - 1)), c = static_cast<int>((k / 2) % (w - 1));
        if (k % 2 == 0) { // {v, v+1, v+w+1}
            out[0] = hedge(r, c);
            out[1] = vedge(r, c + 1);
            out[2] = dedge(r, c);
        } else { // {v, v+w, v+w+1}
            out[0] = vedge(r, c);
            out[1] = hedge(r + 1, c);
            out[2] = dedge(r, c);
        }
        return 3;
    }

    Simplex simplex_at(std::uint32_t idx) const {
        const std::size_t i = idx;
        if (i < base_h()) return Simplex::vertex(idx);
        std::array<std::uint32_t, 3> f{};
        if (i < base_t()) {
            faces_of(idx, f);
            return Simplex::edge(f[0], f[1]); // faces of an edge are its endpoints
        }
        const std::size_t k = i - base_t();
        const int r = static_cast<int>((k / 2) / (w - 1)), c = static_cast<int>((k / 2) % (w - 1));
        const std::uint32_t v = vert(r, c);
        if (k % 2 == 0) return Simplex::triangle(v, v + 1, v + w + 1);
        return Simplex::triangle(v, v + w, v + w + 1);
    }
};

struct SimplexKeyHash {
    std::size_t operator()(const std::array<std::uint32_t, 4>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : k) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace detail

/// All simplices of the triangulated width x height vertex grid, in the
/// canonical storage layout.
inline std::vector<Simplex> triangulate_grid(int width, int height) {
    if (width < 1 || height < 1)
        throw input_error("grid dimensions must be at least 1x1");
    detail::GridLayout g{width, height};
    std::vector<Simplex> out;
    out.reserve(g.total());
    for (std::uint32_t i = 0; i < g.total(); ++i)
        out.push_back(g.simplex_at(i));
    return out;
}

/// Simplices of the triangulated grid together with a filtration value per
/// simplex and the resulting total order. Immutable once built.
class FilteredComplex {
public:
    // Grid complex with lower-star values: each simplex takes the max of its
    // vertices' field values, so the sublevel complex at t is the full
    // subcomplex on vertices with f <= t.
    static FilteredComplex from_field(const ScalarField& field) {
        FilteredComplex k;
        k.speed_ = field.speed;
        k.grid_ = detail::GridLayout{field.width, field.height};
        k.simplices_ = triangulate_grid(field.width, field.height);
        k.values_.resize(k.simplices_.size());
        for (std::size_t i = 0; i < k.simplices_.size(); ++i) {
            const Simplex& s = k.simplices_[i];
            double v = field.values[s.v[0]];
            for (int j = 1; j <= s.dim; ++j)
                v = std::max(v, field.values[s.v[j]]);
            k.values_[i] = v;
        }
        k.sort_order();
        return k;
    }

    // Arbitrary complex from an explicit simplex list (small fixtures,
    // hand-built test cases). Faces are resolved by tuple lookup.
    FilteredComplex(std::vector<Simplex> simplices, std::vector<double> values)
        : simplices_(std::move(simplices)), values_(std::move(values)) {
        if (simplices_.size() != values_.size())
            throw std::logic_error("simplex/value count mismatch");
        std::unordered_map<std::array<std::uint32_t, 4>, std::uint32_t, detail::SimplexKeyHash>
            index;
        index.reserve(simplices_.size());
        for (std::uint32_t i = 0; i < simplices_.size(); ++i)
            index[key(simplices_[i])] = i;
        faces_.resize(simplices_.size());
        for (std::uint32_t i = 0; i < simplices_.size(); ++i) {
            const auto bd = lsph::boundary(simplices_[i]);
            for (std::size_t j = 0; j < bd.size(); ++j) {
                auto it = index.find(key(bd[j]));
                if (it == index.end())
                    throw std::logic_error("complex is not closed under faces");
                faces_[i][j] = it->second;
            }
        }
        sort_order();
    }

    std::size_t size() const { return simplices_.size(); }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    const Simplex& simplex(std::uint32_t i) const { return simplices_[i]; }
    double value(std::uint32_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    bool is_grid() const { return grid_.w > 0; }
    int grid_width() const { return grid_.w; }
    int grid_height() const { return grid_.h; }
    double speed() const { return speed_; }

    int faces_of(std::uint32_t i, std::array<std::uint32_t, 3>& out) const {
        if (is_grid()) return grid_.faces_of(i, out);
        const int n = simplices_[i].dim == 0 ? 0 : simplices_[i].dim + 1;
        for (int j = 0; j < n; ++j) out[j] = faces_[i][j];
        return n;
    }

    /// Filtration order: order()[k] is the index of the k-th simplex under
    /// (value, dimension, lexicographic vertex tuple).
    const std::vector<std::uint32_t>& order() const { return order_; }

    /// Position of each simplex in the filtration order (inverse of order()).
    const std::vector<std::uint32_t>& rank() const { return rank_; }

    double max_value() const {
        double m = 0.0;
        for (double v : values_)
            if (v > m) m = v;
        return m;
    }

    // Face closure and monotonicity. Violations mean a broken builder, not
    // bad user input.
    void validate() const {
        std::array<std::uint32_t, 3> f{};
        for (std::uint32_t i = 0; i < simplices_.size(); ++i) {
            const int n = faces_of(i, f);
            for (int j = 0; j < n; ++j) {
                if (simplices_[f[j]].dim != simplices_[i].dim - 1)
                    throw std::logic_error("face dimension mismatch");
                if (values_[f[j]] > values_[i])
                    throw std::logic_error("filtration values are not monotone on faces");
            }
        }
    }

private:
    FilteredComplex() = default;

    static std::array<std::uint32_t, 4> key(const Simplex& s) {
        return {s.v[0], s.dim >= 1 ? s.v[1] : 0xffffffffu, s.dim >= 2 ? s.v[2] : 0xffffffffu,
                s.dim};
    }

    void sort_order() {
        order_.resize(simplices_.size());
        std::iota(order_.begin(), order_.end(), 0u);
        std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (values_[a] != values_[b]) return values_[a] < values_[b];
            if (simplices_[a].dim != simplices_[b].dim)
                return simplices_[a].dim < simplices_[b].dim;
            return simplices_[a].tuple_less(simplices_[b]);
        });
        rank_.resize(order_.size());
        for (std::uint32_t k = 0; k < order_.size(); ++k)
            rank_[order_[k]] = k;
    }

    detail::GridLayout grid_{};
    double speed_ = 1.0;
    std::vector<Simplex> simplices_;
    std::vector<double> values_;
    std::vector<std::array<std::uint32_t, 3>> faces_; // generic complexes only
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> rank_;
};

/// Lower-star filtered complex of the arrival-time field.
inline FilteredComplex build_filtered_complex(const ScalarField& field) {
    return FilteredComplex::from_field(field);
}

} // namespace lsph
