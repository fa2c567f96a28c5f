#pragma once

// Finite simplicial complexes on at most 63 vertices, stored by facets, and
// their reduced homology over a field.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "depthforge/error.hpp"
#include "depthforge/linear_algebra.hpp"

namespace depthforge {

/// A face is a bitmask over the vertex set.
using Face = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 63;

class SimplicialComplex {
public:
    /// The void complex (no faces at all) on `vertex_count` vertices.
    explicit SimplicialComplex(std::size_t vertex_count = 0) : vertex_count_(vertex_count) {
        if (vertex_count > kMaxVertices)
            throw ResourceLimit("simplicial complex with " + std::to_string(vertex_count) + " vertices");
    }

    /// Complex generated by `faces`; non-maximal entries are discarded.
    SimplicialComplex(std::size_t vertex_count, std::vector<Face> faces) : SimplicialComplex(vertex_count) {
        std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
            const auto pa = std::popcount(a);
            const auto pb = std::popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        for (Face f : faces) {
            if (vertex_count < 64 && (f >> vertex_count) != 0)
                throw DimensionMismatch("face uses a vertex outside the complex");
            const bool covered = std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return (f & g) == f; });
            if (!covered) facets_.push_back(f);
        }
    }

    /// The complex {∅}: only the empty face.
    static SimplicialComplex empty_face_only(std::size_t vertex_count) {
        return SimplicialComplex(vertex_count, std::vector<Face>{0});
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }

    bool contains(Face f) const {
        return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return (f & g) == f; });
    }

    /// Some vertex lies in every facet: the complex is a cone, hence acyclic.
    bool is_cone() const {
        if (facets_.empty()) return false;
        Face common = facets_.front();
        for (Face g : facets_) common &= g;
        return common != 0;
    }

    /// All faces grouped by size: result[k] holds the faces with k vertices, sorted.
    std::vector<std::vector<Face>> faces_by_size() const {
        std::set<Face> all;
        for (Face g : facets_) {
            // Enumerate submasks of g, including 0.
            Face s = g;
            while (true) {
                all.insert(s);
                if (s == 0) break;
                s = (s - 1) & g;
            }
        }
        std::size_t top = 0;
        for (Face g : facets_) top = std::max<std::size_t>(top, std::popcount(g));
        std::vector<std::vector<Face>> out(facets_.empty() ? 0 : top + 1);
        for (Face f : all) out[std::popcount(f)].push_back(f);
        return out;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Face> facets_;
};

/// Ranks of reduced homology; index 0 holds H̃_{-1}, index k+1 holds H̃_k.
struct ReducedHomology {
    std::vector<std::size_t> ranks;

    std::size_t rank(int degree) const {
        const auto idx = static_cast<std::ptrdiff_t>(degree) + 1;
        if (idx < 0 || static_cast<std::size_t>(idx) >= ranks.size()) return 0;
        return ranks[static_cast<std::size_t>(idx)];
    }

    bool is_acyclic() const {
        return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
    }
};

/// Boundary map from faces of size k to faces of size k-1 with the usual
/// alternating signs (vertices taken in increasing order). Rows index the
/// larger faces.
inline IntMatrix boundary_matrix(const std::vector<Face>& upper, const std::vector<Face>& lower) {
    std::unordered_map<Face, std::size_t> index;
    for (std::size_t j = 0; j < lower.size(); ++j) index.emplace(lower[j], j);
    IntMatrix m(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t i = 0; i < upper.size(); ++i) {
        Face rest = upper[i];
        std::int64_t sign = 1;
        while (rest != 0) {
            const Face bit = rest & (~rest + 1);
            rest &= rest - 1;
            m[i][index.at(upper[i] & ~bit)] = sign;
            sign = -sign;
        }
    }
    return m;
}

/// Reduced homology ranks over `field`. The void complex has no homology;
/// the complex {∅} has H̃_{-1} = 1.
inline ReducedHomology reduced_homology_ranks(const SimplicialComplex& K, const FieldSpec& field) {
    ReducedHomology h;
    if (K.is_void()) {
        h.ranks = {0};
        return h;
    }
    if (K.is_cone()) {
        std::size_t top = 0;
        for (Face g : K.facets()) top = std::max<std::size_t>(top, std::popcount(g));
        h.ranks.assign(top + 1, 0);
        return h;
    }
    const auto faces = K.faces_by_size();
    const std::size_t levels = faces.size();
    // boundary_rank[k] = rank of the map out of faces of size k (k >= 1).
    std::vector<std::size_t> boundary_rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) boundary_rank[k] = rank(boundary_matrix(faces[k], faces[k - 1]), field);
    h.ranks.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) h.ranks[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    return h;
}

}  // namespace depthforge
