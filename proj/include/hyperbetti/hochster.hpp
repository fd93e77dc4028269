#pragma once

// Graded Betti numbers through the independence complex: beta_{i,j} is the sum,
// over vertex subsets W of size j, of the reduced homology of the complex of
// subsets of W containing no edge, taken in degree j - i - 1.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <unordered_map>
#include <vector>

#include "hyperbetti/betti_table.hpp"
#include "hyperbetti/hypergraph.hpp"
#include "hyperbetti/linalg.hpp"

namespace hyperbetti {

struct SimplicialComplexSlice {
    VertexSet ground;
    /// faces[k + 1] holds the k-dimensional faces, so faces[0] = { empty face }.
    std::vector<std::vector<VertexSet>> faces;

    std::size_t count(int dim) const {
        const auto idx = static_cast<std::size_t>(dim + 1);
        return dim < -1 || idx >= faces.size() ? 0 : faces[idx].size();
    }
    int dimension() const { return static_cast<int>(faces.size()) - 2; }
};

/// Subsets of w that contain no edge of H.
inline SimplicialComplexSlice independence_complex(const Hypergraph& h, VertexSet w) {
    h.check_vertex_set(w);
    const auto inside = h.edges_inside(w);
    std::vector<VertexSet> edges;
    for (auto b = inside; b != 0; b &= b - 1) edges.push_back(h.edges()[static_cast<std::size_t>(std::countr_zero(b))]);
    SimplicialComplexSlice c;
    c.ground = w;
    const auto verts = w.to_vector();
    std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t start, VertexSet face) {
        const auto dim_idx = face.size();
        if (c.faces.size() <= dim_idx) c.faces.resize(dim_idx + 1);
        c.faces[dim_idx].push_back(face);
        for (std::size_t t = start; t < verts.size(); ++t) {
            auto next = face;
            next.insert(verts[t]);
            if (std::any_of(edges.begin(), edges.end(), [&](VertexSet e) { return e.subset_of(next); })) continue;
            rec(t + 1, next);
        }
    };
    rec(0, VertexSet{});
    for (auto& level : c.faces) std::sort(level.begin(), level.end());
    return c;
}

/// Boundary matrix from k-faces to (k-1)-faces, rows indexed by (k-1)-faces.
inline IntMatrix boundary_matrix(const SimplicialComplexSlice& c, int k) {
    const auto& lower = c.faces[static_cast<std::size_t>(k)];
    const auto& upper = c.faces[static_cast<std::size_t>(k + 1)];
    std::unordered_map<std::uint64_t, std::size_t> row_of;
    for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r].bits(), r);
    IntMatrix m(lower.size(), upper.size());
    for (std::size_t col = 0; col < upper.size(); ++col) {
        int sign = 1;
        upper[col].for_each([&](VertexId v) {
            auto face = upper[col];
            face.erase(v);
            m(row_of.at(face.bits()), col) = sign;
            sign = -sign;
        });
    }
    return m;
}

/// dims[k + 1] = dim of reduced homology in degree k, for k = -1 .. dim C.
inline std::vector<std::size_t> reduced_homology_dims(const SimplicialComplexSlice& c, const FieldChoice& field) {
    const auto levels = c.faces.size();
    // ranks[k + 1] = rank of the boundary leaving the k-faces; the empty face maps to 0
    std::vector<std::size_t> ranks(levels + 1, 0);
    for (std::size_t idx = 1; idx < levels; ++idx)
        ranks[idx] = rank(boundary_matrix(c, static_cast<int>(idx) - 1), field);
    std::vector<std::size_t> dims(levels, 0);
    for (std::size_t idx = 0; idx < levels; ++idx) dims[idx] = c.faces[idx].size() - ranks[idx] - ranks[idx + 1];
    return dims;
}

inline constexpr std::size_t kDefaultHochsterCap = 14;

/// Betti table of R/I(H) over the given field. Subsets W having a vertex that
/// lies on no edge inside W are skipped: their complex is a cone.
inline BettiTable betti_table(const Hypergraph& h, const FieldChoice& field = FieldChoice::rationals(),
                              std::size_t cap = kDefaultHochsterCap) {
    const auto n = h.num_vertices();
    if (n > cap)
        throw Error(ErrorCode::SizeCapExceeded,
                    std::to_string(n) + " vertices exceed the Betti cap of " + std::to_string(cap));
    BettiTable table(field, n);
    table.set(0, 0, 1);
    const std::uint64_t full = VertexSet::range(n).bits();
    for (std::uint64_t w = full; w != 0; w = (w - 1) & full) {
        const VertexSet ws(w);
        const auto inside = h.edges_inside(ws);
        if (h.union_of(inside) != ws) continue;
        const auto dims = reduced_homology_dims(independence_complex(h, ws), field);
        const int j = static_cast<int>(ws.size());
        for (std::size_t idx = 0; idx < dims.size(); ++idx) {
            const int k = static_cast<int>(idx) - 1;
            table.add(j - k - 1, j, dims[idx]);
        }
    }
    return table;
}

} // namespace hyperbetti
