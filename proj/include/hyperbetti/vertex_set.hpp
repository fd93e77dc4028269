#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperbetti {

using VertexId = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

/// Set of vertex ids backed by a single 64-bit word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(const std::vector<VertexId>& ids) {
        VertexSet s;
        for (auto v : ids) s.insert(v);
        return s;
    }
    static constexpr VertexSet range(std::size_t n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet singleton(VertexId v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1u; }
    constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    /// Smallest member; undefined on the empty set.
    constexpr VertexId front() const { return static_cast<VertexId>(std::countr_zero(bits_)); }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<VertexId>(std::countr_zero(b)));
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<VertexId>(std::countr_zero(b)));
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Bitmask over edge indices; families and chains are stored this way internally.
using EdgeMask = std::uint64_t;

inline constexpr std::size_t kMaxEdges = 64;

inline std::vector<std::size_t> mask_to_indices(EdgeMask mask) {
    std::vector<std::size_t> out;
    for (auto b = mask; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

inline EdgeMask indices_to_mask(const std::vector<std::size_t>& idx) {
    EdgeMask m = 0;
    for (auto i : idx) m |= EdgeMask{1} << i;
    return m;
}

} // namespace hyperbetti
