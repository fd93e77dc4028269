#pragma once

// Edge-family classes (matchings and their semi-induced / self-* relatives),
// exhaustive family census, and the matching-type invariants built on it.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <set>
#include <vector>

#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

struct FamilyType {
    std::size_t i = 0;  ///< number of edges
    std::size_t j = 0;  ///< size of their union
    friend auto operator<=>(const FamilyType&, const FamilyType&) = default;
};

/// Ordered tuple of distinct edge indices. Order only matters for self-ordered sets.
struct EdgeFamily {
    std::vector<std::size_t> indices;
    std::size_t union_size = 0;

    std::size_t size() const { return indices.size(); }
    FamilyType type() const { return {indices.size(), union_size}; }
    std::vector<std::size_t> sorted_indices() const {
        auto s = indices;
        std::sort(s.begin(), s.end());
        return s;
    }
    EdgeMask mask() const { return indices_to_mask(indices); }
    friend bool operator==(const EdgeFamily&, const EdgeFamily&) = default;
};

inline EdgeFamily make_family(const Hypergraph& h, std::vector<std::size_t> indices) {
    EdgeMask seen = 0;
    for (auto s : indices) {
        h.check_edge(s);
        if (seen & (EdgeMask{1} << s))
            throw Error(ErrorCode::InvalidArgument, "edge index " + std::to_string(s) + " repeated in family");
        seen |= EdgeMask{1} << s;
    }
    EdgeFamily f;
    f.union_size = h.union_of(seen).size();
    f.indices = std::move(indices);
    return f;
}

inline EdgeFamily family_from_mask(const Hypergraph& h, EdgeMask mask) {
    EdgeFamily f;
    f.indices = mask_to_indices(mask);
    f.union_size = h.union_of(mask).size();
    return f;
}

/// Lexicographic comparison of the sorted index lists.
inline bool lex_less(const EdgeFamily& a, const EdgeFamily& b) { return a.sorted_indices() < b.sorted_indices(); }

struct FamilyClassification {
    bool matching = false;
    bool semi_induced = false;
    bool no_member_covered = false;  ///< no member lies in the union of the others
    bool self_semi_induced = false;
    bool self_contained_semi_induced = false;
    bool induced = false;
    bool self_disjoint = false;
    std::optional<EdgeFamily> self_disjoint_core;
    bool self_semi_disjoint = false;
    std::optional<EdgeFamily> self_semi_disjoint_core;
    bool self_ordered = false;
};

namespace detail {

/// Per-member private vertices: member minus the union of the other members.
inline std::vector<VertexSet> private_parts(const Hypergraph& h, const std::vector<std::size_t>& members) {
    std::vector<VertexSet> out;
    out.reserve(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
        VertexSet rest;
        for (std::size_t b = 0; b < members.size(); ++b)
            if (b != a) rest |= h.edges()[members[b]];
        out.push_back(h.edges()[members[a]] - rest);
    }
    return out;
}

inline bool all_nonempty(const std::vector<VertexSet>& parts) {
    return std::all_of(parts.begin(), parts.end(), [](VertexSet p) { return !p.empty(); });
}

inline bool pairwise_disjoint(const Hypergraph& h, EdgeMask mask) {
    std::size_t total = 0;
    for (auto b = mask; b != 0; b &= b - 1) total += h.edges()[static_cast<std::size_t>(std::countr_zero(b))].size();
    return total == h.union_of(mask).size();
}

inline bool semi_induced_mask(const Hypergraph& h, EdgeMask mask) {
    return h.edges_inside(h.union_of(mask)) == mask;
}

/// Searches for a core S0 inside the family: an induced (or, with semi = true,
/// semi-induced) matching such that every remaining member differs from some
/// core member by exactly one vertex. Larger cores are tried first; S0 may be
/// the whole family. Returns the core as a mask over edge indices.
inline std::optional<EdgeMask> find_core(const Hypergraph& h, const std::vector<std::size_t>& members, bool semi) {
    const auto k = members.size();
    if (k == 0) return EdgeMask{0};
    std::vector<std::uint64_t> near(k, 0);  // near[a]: positions b with |S_a \ S_b| = 1
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && (h.edges()[members[a]] - h.edges()[members[b]]).size() == 1) near[a] |= std::uint64_t{1} << b;
    for (std::size_t size = k; size >= 1; --size) {
        // combinations of `size` positions, lexicographic
        std::vector<std::size_t> pick(size);
        for (std::size_t t = 0; t < size; ++t) pick[t] = t;
        while (true) {
            std::uint64_t pos = 0;
            for (auto p : pick) pos |= std::uint64_t{1} << p;
            bool covered = true;
            for (std::size_t a = 0; a < k && covered; ++a)
                if (!((pos >> a) & 1u) && (near[a] & pos) == 0) covered = false;
            if (covered) {
                EdgeMask core = 0;
                for (auto p : pick) core |= EdgeMask{1} << members[p];
                if (semi_induced_mask(h, core) && (semi || pairwise_disjoint(h, core))) return core;
            }
            std::size_t t = size;
            while (t > 0 && pick[t - 1] == k - size + t - 1) --t;
            if (t == 0) break;
            ++pick[t - 1];
            for (std::size_t u = t; u < size; ++u) pick[u] = pick[u - 1] + 1;
        }
    }
    return std::nullopt;
}

/// Literal check of the self-ordered condition for the given member order.
inline bool self_ordered_in_order(const Hypergraph& h, const std::vector<std::size_t>& order) {
    const auto i = order.size();
    if (i <= 1) return true;
    const auto priv = private_parts(h, order);
    if (!all_nonempty(priv)) return false;
    const EdgeMask fam = indices_to_mask(order);
    // suffix[k] = union of members after position k
    std::vector<VertexSet> suffix(i);
    for (std::size_t k = i - 1; k-- > 0;) suffix[k] = suffix[k + 1] | h.edges()[order[k + 1]];
    for (std::size_t s = 0; s < h.num_edges(); ++s) {
        if (fam & (EdgeMask{1} << s)) continue;
        bool ok = false;
        for (std::size_t k = 0; k + 1 < i && !ok; ++k)
            ok = h.edges()[order[k]].subset_of(h.edges()[s] | suffix[k]);
        if (!ok) return false;
    }
    return true;
}

/// Finds some order of the members making them a self-ordered set, by
/// depth-first search over prefixes with memoisation of (prefix, covered).
inline std::optional<std::vector<std::size_t>> find_self_order(const Hypergraph& h,
                                                               const std::vector<std::size_t>& members) {
    const auto k = members.size();
    if (k <= 1) return members;
    const auto priv = private_parts(h, members);
    if (!all_nonempty(priv)) return std::nullopt;
    const EdgeMask fam = indices_to_mask(members);
    std::vector<std::size_t> outside;
    for (std::size_t s = 0; s < h.num_edges(); ++s)
        if (!(fam & (EdgeMask{1} << s))) outside.push_back(s);
    // Necessary: each outside edge must be absorbable with the largest possible suffix.
    for (auto s : outside) {
        bool any = false;
        for (std::size_t a = 0; a < k && !any; ++a) any = priv[a].subset_of(h.edges()[s]);
        if (!any) return std::nullopt;
    }
    const std::uint64_t all_out = outside.size() >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << outside.size()) - 1);
    auto union_positions = [&](std::uint64_t pos) {
        VertexSet u;
        for (auto b = pos; b != 0; b &= b - 1) u |= h.edges()[members[static_cast<std::size_t>(std::countr_zero(b))]];
        return u;
    };
    // covers(a, rest): outside edges absorbed when member a precedes exactly the positions in rest
    auto covers = [&](std::size_t a, std::uint64_t rest) {
        const auto u = union_positions(rest);
        std::uint64_t c = 0;
        for (std::size_t t = 0; t < outside.size(); ++t)
            if (h.edges()[members[a]].subset_of(h.edges()[outside[t]] | u)) c |= std::uint64_t{1} << t;
        return c;
    };
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    std::set<std::pair<std::uint64_t, std::uint64_t>> dead;  // (placed, covered) states known to fail
    std::vector<std::size_t> order;
    std::function<bool(std::uint64_t, std::uint64_t)> go = [&](std::uint64_t placed, std::uint64_t covered) -> bool {
        const std::uint64_t remaining = full & ~placed;
        if (std::popcount(remaining) == 1) {
            if (covered != all_out) return false;
            order.push_back(members[static_cast<std::size_t>(std::countr_zero(remaining))]);
            return true;
        }
        const std::pair kk{placed, covered};
        if (dead.count(kk)) return false;
        // Upper bound: anything still uncovered must be coverable by some remaining member.
        std::uint64_t reachable = covered;
        for (auto b = remaining; b != 0; b &= b - 1) {
            const auto a = static_cast<std::size_t>(std::countr_zero(b));
            reachable |= covers(a, remaining & ~(std::uint64_t{1} << a));
        }
        if (reachable != all_out) {
            dead.insert(kk);
            return false;
        }
        for (auto b = remaining; b != 0; b &= b - 1) {
            const auto a = static_cast<std::size_t>(std::countr_zero(b));
            const auto rest = remaining & ~(std::uint64_t{1} << a);
            order.push_back(members[a]);
            if (go(placed | (std::uint64_t{1} << a), covered | covers(a, rest))) return true;
            order.pop_back();
        }
        dead.insert(kk);
        return false;
    };
    if (go(0, 0)) return order;
    return std::nullopt;
}

} // namespace detail

/// Literal self-ordered test for the family in the order given.
inline bool is_self_ordered(const Hypergraph& h, const EdgeFamily& fam) {
    for (auto s : fam.indices) h.check_edge(s);
    return detail::self_ordered_in_order(h, fam.indices);
}

/// Evaluates every family predicate literally.
inline FamilyClassification classify(const Hypergraph& h, const EdgeFamily& fam) {
    if (fam.indices.empty()) throw Error(ErrorCode::InvalidArgument, "classify needs a nonempty family");
    const auto checked = make_family(h, fam.indices);
    const auto& members = checked.indices;
    const EdgeMask mask = checked.mask();
    const VertexSet uni = h.union_of(mask);
    const auto priv = detail::private_parts(h, members);

    FamilyClassification c;
    c.matching = detail::pairwise_disjoint(h, mask);
    c.semi_induced = detail::semi_induced_mask(h, mask);
    c.no_member_covered = detail::all_nonempty(priv);
    c.self_semi_induced = c.semi_induced && c.no_member_covered;
    c.induced = c.semi_induced && c.matching;
    if (c.no_member_covered) {
        bool sc = true;
        const EdgeMask outside_inside = h.edges_inside(uni) & ~mask;
        for (auto b = outside_inside; b != 0 && sc; b &= b - 1) {
            const auto& s = h.edges()[static_cast<std::size_t>(std::countr_zero(b))];
            sc = std::any_of(priv.begin(), priv.end(), [&](VertexSet p) { return p.subset_of(s); });
        }
        c.self_contained_semi_induced = sc;
        if (auto core = detail::find_core(h, members, false)) {
            c.self_disjoint = true;
            c.self_disjoint_core = family_from_mask(h, *core);
        }
        if (auto core = detail::find_core(h, members, true)) {
            c.self_semi_disjoint = true;
            c.self_semi_disjoint_core = family_from_mask(h, *core);
        }
    }
    c.self_ordered = detail::self_ordered_in_order(h, members);
    return c;
}

/// Count and first (lexicographically least) witness per family type.
struct ClassTally {
    std::map<FamilyType, std::uint64_t> count;
    std::map<FamilyType, EdgeFamily> witness;

    void add(const FamilyType& t, const EdgeFamily& f) {
        if (++count[t] == 1) witness.emplace(t, f);
    }
    bool has(const FamilyType& t) const { return count.count(t) != 0; }
    std::uint64_t at(const FamilyType& t) const {
        auto it = count.find(t);
        return it == count.end() ? 0 : it->second;
    }
};

/// Everything the invariants and the bound checks need, gathered in one pass
/// over all families in which no member lies in the union of the others (every
/// class of interest lives inside that downward-closed system). The empty family
/// is included as type (0,0) in every class.
///
/// Counts are exact for matching, induced, self semi-induced and self-contained
/// semi-induced families. For the self disjoint, self semi-disjoint and self
/// ordered classes only existence per type is recorded (count 1).
struct FamilyCensus {
    ClassTally matching;
    ClassTally induced;
    ClassTally self_semi_induced;
    ClassTally self_contained;
    ClassTally self_disjoint;
    ClassTally self_semi_disjoint;
    ClassTally self_ordered;  ///< witnesses carry a valid order
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> induced_uniform;  ///< (t, i) -> #induced matchings of i t-sets
    std::uint64_t families_visited = 0;
};

inline constexpr std::size_t kDefaultEdgeBudget = 16;

struct CensusOptions {
    std::size_t edge_budget = kDefaultEdgeBudget;
    bool self_ordered = true;  ///< the ordered search dominates run time on dense inputs
};

/// Visits every nonempty family with no member inside the union of the others,
/// in lexicographic order of sorted index tuples.
template <typename Visitor>
void for_each_uncovered_family(const Hypergraph& h, Visitor&& visit) {
    const auto m = h.num_edges();
    std::vector<std::size_t> members;
    std::vector<VertexSet> priv;
    std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t start, VertexSet uni) {
        for (std::size_t e = start; e < m; ++e) {
            const auto& edge = h.edges()[e];
            const auto own = edge - uni;
            if (own.empty()) continue;
            bool ok = true;
            for (const auto& p : priv)
                if ((p - edge).empty()) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            const auto saved = priv;
            for (auto& p : priv) p -= edge;
            priv.push_back(own);
            members.push_back(e);
            visit(static_cast<const std::vector<std::size_t>&>(members), static_cast<const std::vector<VertexSet>&>(priv),
                  uni | edge);
            rec(e + 1, uni | edge);
            members.pop_back();
            priv = saved;
        }
    };
    rec(0, VertexSet{});
}

inline FamilyCensus family_census(const Hypergraph& h, const CensusOptions& opt = {}) {
    if (h.num_edges() > opt.edge_budget)
        throw Error(ErrorCode::BudgetExceeded, std::to_string(h.num_edges()) + " edges exceed the enumeration budget of " +
                                                   std::to_string(opt.edge_budget));
    FamilyCensus c;
    const EdgeFamily empty{};
    for (auto* t : {&c.matching, &c.induced, &c.self_semi_induced, &c.self_contained, &c.self_disjoint,
                    &c.self_semi_disjoint, &c.self_ordered})
        t->add({0, 0}, empty);
    c.induced_uniform[{0, 0}] = 1;

    for_each_uncovered_family(h, [&](const std::vector<std::size_t>& members, const std::vector<VertexSet>& priv,
                                     VertexSet uni) {
        ++c.families_visited;
        const EdgeMask mask = indices_to_mask(members);
        const FamilyType type{members.size(), uni.size()};
        EdgeFamily fam;
        fam.indices = members;
        fam.union_size = uni.size();

        std::size_t total = 0;
        std::size_t common = h.edges()[members.front()].size();
        bool same_size = true;
        for (auto s : members) {
            total += h.edges()[s].size();
            same_size = same_size && h.edges()[s].size() == common;
        }
        const bool matching = total == uni.size();
        const EdgeMask inside = h.edges_inside(uni);
        const bool semi = inside == mask;
        if (matching) c.matching.add(type, fam);
        if (semi) c.self_semi_induced.add(type, fam);
        if (semi && matching) {
            c.induced.add(type, fam);
            if (same_size) ++c.induced_uniform[{common, members.size()}];
        }
        bool sc = true;
        for (auto b = inside & ~mask; b != 0 && sc; b &= b - 1) {
            const auto& s = h.edges()[static_cast<std::size_t>(std::countr_zero(b))];
            sc = std::any_of(priv.begin(), priv.end(), [&](VertexSet p) { return p.subset_of(s); });
        }
        if (sc) c.self_contained.add(type, fam);

        if (!c.self_disjoint.has(type) && detail::find_core(h, members, false)) c.self_disjoint.add(type, fam);
        if (!c.self_semi_disjoint.has(type) && detail::find_core(h, members, true)) c.self_semi_disjoint.add(type, fam);
        if (opt.self_ordered && !c.self_ordered.has(type)) {
            if (auto order = detail::find_self_order(h, members)) {
                EdgeFamily ordered = fam;
                ordered.indices = *order;
                c.self_ordered.add(type, ordered);
            }
        }
    });
    return c;
}

struct InvariantReport {
    std::size_t m = 0, a = 0, b = 0, b_prime = 0, c = 0, c_prime = 0;
    std::size_t d1 = 0, d2 = 0, d1_prime = 0, d2_prime = 0, e = 0;
    std::map<std::size_t, std::size_t> a_t;  ///< edge size t -> largest induced matching of t-sets
    std::map<std::string, EdgeFamily> witness;
    std::optional<std::size_t> d_G, d_G_prime;  ///< graphs only
};

namespace detail {

enum class Measure { Size, Excess };

/// Largest i (or j - i) over the recorded types, with the lex-least witness.
inline std::pair<std::size_t, EdgeFamily> best_of(const ClassTally& t, Measure how) {
    std::size_t best = 0;
    EdgeFamily wit{};
    bool first = true;
    for (const auto& [type, f] : t.witness) {
        const auto v = how == Measure::Size ? type.i : type.j - type.i;
        if (first || v > best || (v == best && lex_less(f, wit))) {
            best = v;
            wit = f;
            first = false;
        }
    }
    return {best, wit};
}

} // namespace detail

inline InvariantReport invariants_from_census(const FamilyCensus& c) {
    using detail::best_of;
    using detail::Measure;
    InvariantReport r;
    auto put = [&](const char* name, std::size_t& slot, const ClassTally& t, Measure how) {
        auto [v, w] = best_of(t, how);
        slot = v;
        r.witness[name] = w;
    };
    put("m", r.m, c.matching, Measure::Size);
    put("a", r.a, c.induced, Measure::Size);
    put("b", r.b, c.self_semi_induced, Measure::Size);
    put("b_prime", r.b_prime, c.self_semi_induced, Measure::Excess);
    put("c", r.c, c.self_ordered, Measure::Size);
    put("c_prime", r.c_prime, c.self_ordered, Measure::Excess);
    put("d1", r.d1, c.self_disjoint, Measure::Size);
    put("d2", r.d2, c.self_semi_disjoint, Measure::Size);
    put("d1_prime", r.d1_prime, c.self_disjoint, Measure::Excess);
    put("d2_prime", r.d2_prime, c.self_semi_disjoint, Measure::Excess);
    put("e", r.e, c.self_contained, Measure::Size);
    for (const auto& [key, n] : c.induced_uniform) {
        const auto [t, i] = key;
        if (t == 0 || n == 0) continue;
        r.a_t[t] = std::max(r.a_t[t], i);
    }
    return r;
}

// Bouquets ------------------------------------------------------------------

struct Bouquet {
    VertexId root = 0;
    VertexSet flowers;
    friend bool operator==(const Bouquet&, const Bouquet&) = default;
    friend auto operator<=>(const Bouquet& a, const Bouquet& b) {
        if (auto c = a.root <=> b.root; c != 0) return c;
        return a.flowers <=> b.flowers;
    }
};

/// Single-flower bouquets are an edge without a distinguished end; the smaller id is taken as root.
inline Bouquet normalized(Bouquet b) {
    if (b.flowers.size() == 1 && b.flowers.front() < b.root) return Bouquet{b.flowers.front(), VertexSet::singleton(b.root)};
    return b;
}

struct BouquetInvariants {
    std::size_t d_G = 0;        ///< most flowers over strongly disjoint bouquet sets
    std::size_t d_G_prime = 0;  ///< most bouquets over strongly disjoint bouquet sets
    std::vector<Bouquet> witness_d_G;
    std::vector<Bouquet> witness_d_G_prime;
};

namespace detail {

inline void require_graph(const Hypergraph& g) {
    for (const auto& e : g.edges())
        if (e.size() != 2) throw Error(ErrorCode::NotAGraph, "every edge must have exactly two vertices");
}

inline std::vector<std::size_t> stem_indices(const Hypergraph& g, const Bouquet& b) {
    std::vector<std::size_t> out;
    b.flowers.for_each([&](VertexId f) {
        auto s = g.find_edge(VertexSet::singleton(b.root) | VertexSet::singleton(f));
        if (!s) throw Error(ErrorCode::NotStronglyDisjoint, "stem is not an edge of the graph");
        out.push_back(*s);
    });
    return out;
}

/// Whether one stem per bouquet can be picked so that the picks form an induced matching.
inline bool has_induced_stem_selection(const Hypergraph& g, const std::vector<std::vector<std::size_t>>& stems) {
    std::vector<std::size_t> pick(stems.size(), 0);
    while (true) {
        EdgeMask m = 0;
        for (std::size_t k = 0; k < stems.size(); ++k) m |= EdgeMask{1} << stems[k][pick[k]];
        if (pairwise_disjoint(g, m) && semi_induced_mask(g, m)) return true;
        std::size_t k = 0;
        while (k < stems.size() && ++pick[k] == stems[k].size()) pick[k++] = 0;
        if (k == stems.size()) return false;
    }
}

} // namespace detail

inline bool is_strongly_disjoint(const Hypergraph& g, const std::vector<Bouquet>& bouquets) {
    detail::require_graph(g);
    VertexSet used;
    std::vector<std::vector<std::size_t>> stems;
    for (const auto& b : bouquets) {
        if (b.flowers.empty() || b.flowers.contains(b.root)) return false;
        const auto vs = b.flowers | VertexSet::singleton(b.root);
        if (vs.intersects(used)) return false;
        used |= vs;
        try {
            stems.push_back(detail::stem_indices(g, b));
        } catch (const Error&) {
            return false;
        }
    }
    return stems.empty() || detail::has_induced_stem_selection(g, stems);
}

/// d_G and d'_G by enumerating vertex-disjoint star packings (edge sets whose
/// components are stars) and testing for an induced-matching stem selection.
inline BouquetInvariants bouquet_invariants(const Hypergraph& g) {
    detail::require_graph(g);
    struct Star {
        VertexSet verts;
        std::optional<VertexId> root;  // unset while the star is a single edge
        std::vector<std::size_t> edges;
    };
    BouquetInvariants best;
    std::vector<Star> stars;
    VertexSet covered;
    auto to_bouquets = [&]() {
        std::vector<Bouquet> out;
        for (const auto& s : stars) {
            Bouquet b;
            if (s.root) {
                b.root = *s.root;
                b.flowers = s.verts - VertexSet::singleton(*s.root);
            } else {
                b.root = s.verts.front();
                b.flowers = s.verts - VertexSet::singleton(b.root);
            }
            out.push_back(b);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto evaluate = [&]() {
        std::size_t flowers = 0;
        std::vector<std::vector<std::size_t>> stems;
        for (const auto& s : stars) {
            flowers += s.edges.size();
            stems.push_back(s.edges);
        }
        const bool beats_i = flowers > best.d_G;
        const bool beats_j = stars.size() > best.d_G_prime;
        if (!beats_i && !beats_j) return;
        if (!detail::has_induced_stem_selection(g, stems)) return;
        if (beats_i) {
            best.d_G = flowers;
            best.witness_d_G = to_bouquets();
        }
        if (beats_j) {
            best.d_G_prime = stars.size();
            best.witness_d_G_prime = to_bouquets();
        }
    };
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        for (std::size_t e = start; e < g.num_edges(); ++e) {
            const auto edge = g.edges()[e];
            const auto u = edge.front();
            const auto v = (edge - VertexSet::singleton(u)).front();
            const bool cu = covered.contains(u), cv = covered.contains(v);
            if (cu && cv) continue;
            if (!cu && !cv) {
                stars.push_back({edge, std::nullopt, {e}});
                covered |= edge;
                evaluate();
                rec(e + 1);
                covered -= edge;
                stars.pop_back();
                continue;
            }
            const VertexId hub = cu ? u : v;
            const VertexId leaf = cu ? v : u;
            // by index: the recursion below may reallocate `stars`
            const auto k = static_cast<std::size_t>(
                std::find_if(stars.begin(), stars.end(), [&](const Star& s) { return s.verts.contains(hub); }) -
                stars.begin());
            if (stars[k].root && *stars[k].root != hub) continue;
            const auto saved = stars[k];
            stars[k].root = hub;
            stars[k].verts.insert(leaf);
            stars[k].edges.push_back(e);
            covered.insert(leaf);
            evaluate();
            rec(e + 1);
            covered.erase(leaf);
            stars[k] = saved;
        }
    };
    rec(0);
    return best;
}

/// Edge set of a strongly disjoint bouquet set; type (flowers, flowers + bouquets).
inline EdgeFamily bouquets_to_family(const Hypergraph& g, const std::vector<Bouquet>& bouquets) {
    if (!is_strongly_disjoint(g, bouquets))
        throw Error(ErrorCode::NotStronglyDisjoint, "bouquets are not strongly disjoint");
    std::vector<std::size_t> idx;
    for (const auto& b : bouquets) {
        auto s = detail::stem_indices(g, b);
        idx.insert(idx.end(), s.begin(), s.end());
    }
    std::sort(idx.begin(), idx.end());
    return make_family(g, idx);
}

/// Groups a self disjoint edge family of a graph into bouquets by shared root.
inline std::vector<Bouquet> family_to_bouquets(const Hypergraph& g, const EdgeFamily& fam) {
    detail::require_graph(g);
    if (fam.indices.empty()) return {};
    if (!classify(g, fam).self_disjoint) throw Error(ErrorCode::NotSelfDisjoint, "family is not self disjoint");
    // No member is covered by the others, so the family is a vertex-disjoint union of stars.
    std::vector<Bouquet> out;
    std::vector<std::size_t> todo = fam.sorted_indices();
    VertexSet done;
    for (auto s : todo) {
        const auto e = g.edges()[s];
        if (e.subset_of(done)) continue;
        // component containing e
        VertexSet comp = e;
        std::vector<std::size_t> comp_edges;
        bool grew = true;
        while (grew) {
            grew = false;
            comp_edges.clear();
            for (auto t : todo)
                if (g.edges()[t].intersects(comp)) {
                    comp_edges.push_back(t);
                    if (!g.edges()[t].subset_of(comp)) {
                        comp |= g.edges()[t];
                        grew = true;
                    }
                }
        }
        done |= comp;
        Bouquet b;
        if (comp_edges.size() == 1) {
            b.root = comp.front();
        } else {
            VertexSet common = comp;
            for (auto t : comp_edges) common &= g.edges()[t];
            b.root = common.front();
        }
        b.flowers = comp - VertexSet::singleton(b.root);
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Full invariant report; graphs additionally get d_G and d'_G.
inline InvariantReport compute_invariants(const Hypergraph& h, std::size_t budget = kDefaultEdgeBudget) {
    auto r = invariants_from_census(family_census(h, {budget, true}));
    const bool graph = std::all_of(h.edges().begin(), h.edges().end(), [](VertexSet e) { return e.size() == 2; });
    if (graph) {
        const auto bq = bouquet_invariants(h);
        r.d_G = bq.d_G;
        r.d_G_prime = bq.d_G_prime;
    }
    return r;
}

} // namespace hyperbetti
