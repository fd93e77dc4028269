#pragma once

// Reduced Taylor complex of I(H), Lyubeznik admissibility, the basis-vector
// sets B_{i,j}, family-count bounds on Betti numbers and nonvanishing
// certificates.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperbetti/betti_table.hpp"
#include "hyperbetti/families.hpp"
#include "hyperbetti/hypergraph.hpp"
#include "hyperbetti/linalg.hpp"

namespace hyperbetti {

/// order[p] is the edge index placed at position p.
struct EdgeOrdering {
    std::vector<std::size_t> order;

    static EdgeOrdering identity(std::size_t m) {
        EdgeOrdering o;
        o.order.resize(m);
        std::iota(o.order.begin(), o.order.end(), std::size_t{0});
        return o;
    }

    /// Given edges first (in the order listed), then the remaining edges in index order.
    static EdgeOrdering leading(std::size_t m, const std::vector<std::size_t>& first) {
        EdgeOrdering o;
        EdgeMask used = 0;
        for (auto s : first) {
            o.order.push_back(s);
            used |= EdgeMask{1} << s;
        }
        for (std::size_t s = 0; s < m; ++s)
            if (!(used & (EdgeMask{1} << s))) o.order.push_back(s);
        o.validate(m);
        return o;
    }

    void validate(std::size_t m) const {
        if (order.size() != m) throw Error(ErrorCode::InvalidArgument, "ordering must list every edge once");
        std::vector<bool> seen(m, false);
        for (auto s : order) {
            if (s >= m || seen[s]) throw Error(ErrorCode::InvalidArgument, "ordering is not a permutation");
            seen[s] = true;
        }
    }

    std::size_t position_of(std::size_t edge) const {
        for (std::size_t p = 0; p < order.size(); ++p)
            if (order[p] == edge) return p;
        throw Error(ErrorCode::IndexOutOfRange, "edge not in ordering");
    }
};

/// Taylor generator e_{l_1..l_i}: strictly increasing positions under an ordering.
struct SymbolChain {
    std::vector<std::size_t> positions;
    std::size_t degree = 0;

    std::size_t size() const { return positions.size(); }
    friend bool operator==(const SymbolChain&, const SymbolChain&) = default;
    friend auto operator<=>(const SymbolChain& a, const SymbolChain& b) { return a.positions <=> b.positions; }
};

inline EdgeMask chain_edges(const EdgeOrdering& ord, const SymbolChain& chain) {
    EdgeMask m = 0;
    for (auto p : chain.positions) m |= EdgeMask{1} << ord.order[p];
    return m;
}

inline SymbolChain make_chain(const Hypergraph& h, const EdgeOrdering& ord, std::vector<std::size_t> positions) {
    ord.validate(h.num_edges());
    for (std::size_t t = 0; t < positions.size(); ++t) {
        if (positions[t] >= h.num_edges()) throw Error(ErrorCode::IndexOutOfRange, "chain position out of range");
        if (t > 0 && positions[t] <= positions[t - 1])
            throw Error(ErrorCode::InvalidArgument, "chain positions must be strictly increasing");
    }
    SymbolChain c;
    c.positions = std::move(positions);
    c.degree = h.union_of(chain_edges(ord, c)).size();
    return c;
}

/// Chain of the given edge indices under the identity ordering.
inline SymbolChain chain_of_edges(const Hypergraph& h, std::vector<std::size_t> edges) {
    std::sort(edges.begin(), edges.end());
    return make_chain(h, EdgeOrdering::identity(h.num_edges()), std::move(edges));
}

struct ChainTerm {
    SymbolChain chain;
    int coefficient = 0;
    friend bool operator==(const ChainTerm&, const ChainTerm&) = default;
};

/// Image of a generator under the reduced Taylor differential: position k
/// (1-based) contributes (-1)^k times the chain without it whenever that
/// member lies in the union of the others.
inline std::vector<ChainTerm> reduced_boundary(const Hypergraph& h, const EdgeOrdering& ord, const SymbolChain& chain) {
    std::vector<ChainTerm> out;
    const auto i = chain.size();
    for (std::size_t k = 0; k < i; ++k) {
        VertexSet others;
        for (std::size_t t = 0; t < i; ++t)
            if (t != k) others |= h.edges()[ord.order[chain.positions[t]]];
        if (!h.edges()[ord.order[chain.positions[k]]].subset_of(others)) continue;
        ChainTerm term;
        term.chain.positions = chain.positions;
        term.chain.positions.erase(term.chain.positions.begin() + static_cast<std::ptrdiff_t>(k));
        term.chain.degree = chain.degree;
        term.coefficient = ((k + 1) % 2 == 0) ? 1 : -1;
        out.push_back(std::move(term));
    }
    return out;
}

/// No member lies in the union of the others; independent of the ordering.
inline bool in_kernel(const Hypergraph& h, const EdgeOrdering& ord, const SymbolChain& chain) {
    std::vector<std::size_t> members;
    for (auto p : chain.positions) members.push_back(ord.order[p]);
    return detail::all_nonempty(detail::private_parts(h, members));
}

inline constexpr std::size_t kDefaultTaylorCap = 12;

/// All 2^m Taylor generators (identity ordering) sliced by (i, j), with the
/// reduced differential between slices of equal degree.
class TaylorComplex {
public:
    explicit TaylorComplex(const Hypergraph& h, std::size_t cap = kDefaultTaylorCap) : h_(&h) {
        if (h.num_edges() > cap)
            throw Error(ErrorCode::BudgetExceeded, std::to_string(h.num_edges()) +
                                                       " edges exceed the Taylor complex budget of " + std::to_string(cap));
        const EdgeMask full = h.all_edges_mask();
        slices_[{0, 0}].push_back(0);
        for (EdgeMask c = 1; c <= full && c != 0; ++c) {
            slices_[{std::popcount(c), static_cast<int>(h.union_of(c).size())}].push_back(c);
            if (c == full) break;
        }
        for (auto& [k, v] : slices_) {
            std::sort(v.begin(), v.end());
            for (std::size_t r = 0; r < v.size(); ++r) index_[v[r]] = r;
        }
    }

    const std::vector<EdgeMask>& basis(int i, int j) const {
        static const std::vector<EdgeMask> none;
        auto it = slices_.find({i, j});
        return it == slices_.end() ? none : it->second;
    }

    const std::map<std::pair<int, int>, std::vector<EdgeMask>>& slices() const { return slices_; }

    /// Matrix of the differential from slice (i, j) to slice (i - 1, j).
    IntMatrix boundary(int i, int j) const {
        const auto& cols = basis(i, j);
        const auto& rows = basis(i - 1, j);
        IntMatrix m(rows.size(), cols.size());
        for (std::size_t col = 0; col < cols.size(); ++col) {
            const auto c = cols[col];
            int k = 0;
            for (auto b = c; b != 0; b &= b - 1) {
                ++k;
                const auto e = static_cast<std::size_t>(std::countr_zero(b));
                const EdgeMask rest = c & ~(EdgeMask{1} << e);
                if (h_->edges()[e].subset_of(h_->union_of(rest))) m(index_.at(rest), col) = (k % 2 == 0) ? 1 : -1;
            }
        }
        return m;
    }

    std::size_t row_index(EdgeMask chain) const { return index_.at(chain); }

    BettiTable betti(const FieldChoice& field) const {
        BettiTable t(field, h_->num_vertices());
        std::map<std::pair<int, int>, std::size_t> ranks;  // rank of boundary leaving slice (i, j)
        for (const auto& [k, v] : slices_)
            ranks[k] = k.first == 0 ? 0 : rank(boundary(k.first, k.second), field);
        for (const auto& [k, v] : slices_) {
            const auto up = ranks.find({k.first + 1, k.second});
            const std::size_t incoming = up == ranks.end() ? 0 : up->second;
            t.set(k.first, k.second, v.size() - ranks[k] - incoming);
        }
        return t;
    }

private:
    const Hypergraph* h_;
    std::map<std::pair<int, int>, std::vector<EdgeMask>> slices_;
    std::map<EdgeMask, std::size_t> index_;
};

inline BettiTable betti_via_taylor(const Hypergraph& h, const FieldChoice& field = FieldChoice::rationals(),
                                   std::size_t cap = kDefaultTaylorCap) {
    return TaylorComplex(h, cap).betti(field);
}

/// Whether the basis vector of `chain` lies in the image of the differential
/// arriving from slice (i + 1, j).
inline bool basis_vector_in_image(const TaylorComplex& tc, EdgeMask chain, int j, const FieldChoice& field) {
    const int i = std::popcount(chain);
    const auto incoming = tc.boundary(i + 1, j);
    std::vector<int> v(tc.basis(i, j).size(), 0);
    v[tc.row_index(chain)] = 1;
    return in_column_space(incoming, v, field);
}

/// B_{i,j}: generators of size i and degree j in the kernel whose basis vector
/// is not in the image of the incoming differential.
inline std::vector<SymbolChain> b_set(const TaylorComplex& tc, const Hypergraph& h, int i, int j,
                                      const FieldChoice& field) {
    std::vector<SymbolChain> out;
    const auto incoming = tc.boundary(i + 1, j);
    const auto& basis = tc.basis(i, j);
    const auto in_image = unit_vectors_in_column_space(incoming, field);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const auto members = mask_to_indices(basis[r]);
        if (!detail::all_nonempty(detail::private_parts(h, members))) continue;
        if (in_image[r]) continue;
        SymbolChain c;
        c.positions = members;
        c.degree = static_cast<std::size_t>(j);
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<SymbolChain> b_set(const Hypergraph& h, int i, int j, const FieldChoice& field = FieldChoice::rationals(),
                                      std::size_t cap = kDefaultTaylorCap) {
    return b_set(TaylorComplex(h, cap), h, i, j, field);
}

namespace detail {

template <typename F>
void for_each_subset_of_size(std::size_t m, std::size_t k, F&& f) {
    if (k > m) return;
    if (k == 0) {
        f(EdgeMask{0});
        return;
    }
    if (m >= 64) throw Error(ErrorCode::BudgetExceeded, "too many edges for subset enumeration");
    // Gosper's hack
    EdgeMask s = (EdgeMask{1} << k) - 1;
    const EdgeMask limit = EdgeMask{1} << m;
    while (s < limit) {
        f(s);
        const EdgeMask c = s & (~s + 1);
        const EdgeMask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

} // namespace detail

/// Every i-subset of edges whose union has j vertices has no member inside
/// the union of the others (so every such generator is a cycle).
inline bool kernel_basis_condition(const Hypergraph& h, std::size_t i, std::size_t j) {
    bool ok = true;
    detail::for_each_subset_of_size(h.num_edges(), i, [&](EdgeMask a) {
        if (!ok || h.union_of(a).size() != j) return;
        ok = detail::all_nonempty(detail::private_parts(h, mask_to_indices(a)));
    });
    return ok;
}

/// For every i-subset A with |union A| = j and every further edge E inside
/// that union, no member of A lies in the union of E and the other members.
inline bool image_separation_condition(const Hypergraph& h, std::size_t i, std::size_t j) {
    bool ok = true;
    detail::for_each_subset_of_size(h.num_edges(), i, [&](EdgeMask a) {
        if (!ok) return;
        const auto u = h.union_of(a);
        if (u.size() != j) return;
        const auto outside = h.edges_inside(u) & ~a;
        if (outside == 0) return;
        const auto priv = detail::private_parts(h, mask_to_indices(a));
        for (auto b = outside; b != 0 && ok; b &= b - 1) {
            const auto& e = h.edges()[static_cast<std::size_t>(std::countr_zero(b))];
            for (const auto& p : priv)
                if (p.subset_of(e)) {
                    ok = false;
                    break;
                }
        }
    });
    return ok;
}

struct FamilyBettiBounds {
    std::size_t i = 0, j = 0;
    std::uint64_t beta = 0;
    bool kernel_condition = false;
    bool image_condition = false;
    std::optional<std::uint64_t> lower;  ///< #self semi-induced matchings of type (i,j), when image_condition
    std::optional<std::uint64_t> upper;  ///< #self-contained semi-induced matchings of type (i,j), when kernel_condition
    std::optional<std::size_t> b_set_size;

    bool applicable() const { return kernel_condition || image_condition; }
    /// Under the kernel condition beta <= |B| and beta <= upper; under the image
    /// condition beta >= |B| and beta >= lower.
    bool holds() const {
        if (lower && *lower > beta) return false;
        if (upper && beta > *upper) return false;
        if (b_set_size && kernel_condition && beta > *b_set_size) return false;
        if (b_set_size && image_condition && beta < *b_set_size) return false;
        return true;
    }
};

inline FamilyBettiBounds family_betti_bounds(const Hypergraph& h, const FamilyCensus& census, const BettiTable& table,
                                             std::size_t i, std::size_t j, const TaylorComplex* tc = nullptr) {
    FamilyBettiBounds r;
    r.i = i;
    r.j = j;
    r.beta = table.at(static_cast<int>(i), static_cast<int>(j));
    r.kernel_condition = kernel_basis_condition(h, i, j);
    r.image_condition = image_separation_condition(h, i, j);
    const FamilyType t{i, j};
    if (r.image_condition) r.lower = census.self_semi_induced.at(t);
    if (r.kernel_condition) r.upper = census.self_contained.at(t);
    if (tc) r.b_set_size = b_set(*tc, h, static_cast<int>(i), static_cast<int>(j), table.field()).size();
    return r;
}

/// Convenience form computing the census, table and Taylor complex itself.
inline FamilyBettiBounds betti_bounds_from_families(const Hypergraph& h, std::size_t i, std::size_t j,
                                                    const FieldChoice& field = FieldChoice::rationals()) {
    const auto census = family_census(h);
    const TaylorComplex tc(h);
    const auto table = tc.betti(field);
    return family_betti_bounds(h, census, table, i, j, &tc);
}

// Lyubeznik admissibility -----------------------------------------------------

/// The admissibility condition "S_q not inside the union from l_t to l_i" is
/// read with the union over the symbol's own members (classical Lyubeznik) or
/// over every edge whose position lies in [l_t, l_i]; t ranges over all
/// positions or over all but the last.
struct LyubeznikReading {
    enum class Union { SymbolMembers, PositionRange };
    enum class Positions { All, AllButLast };
    Union union_over = Union::SymbolMembers;
    Positions positions = Positions::All;
};

inline bool is_l_admissible(const Hypergraph& h, const EdgeOrdering& ord, const SymbolChain& chain,
                            const LyubeznikReading& reading = {}) {
    const auto i = chain.size();
    const auto last_t = reading.positions == LyubeznikReading::Positions::All ? i : (i == 0 ? 0 : i - 1);
    for (std::size_t t = 0; t < last_t; ++t) {
        VertexSet u;
        if (reading.union_over == LyubeznikReading::Union::SymbolMembers) {
            for (std::size_t k = t; k < i; ++k) u |= h.edges()[ord.order[chain.positions[k]]];
        } else {
            for (std::size_t p = chain.positions[t]; p <= chain.positions[i - 1]; ++p) u |= h.edges()[ord.order[p]];
        }
        for (std::size_t q = 0; q < chain.positions[t]; ++q)
            if (h.edges()[ord.order[q]].subset_of(u)) return false;
    }
    return true;
}

namespace detail {

inline SymbolChain chain_from_position_mask(const Hypergraph& h, const EdgeOrdering& ord, std::uint64_t pos) {
    SymbolChain c;
    c.positions = mask_to_indices(pos);
    VertexSet u;
    for (auto p : c.positions) u |= h.edges()[ord.order[p]];
    c.degree = u.size();
    return c;
}

} // namespace detail

/// Admissible, and no strictly larger admissible symbol contains it.
inline bool is_maximal_l_admissible(const Hypergraph& h, const EdgeOrdering& ord, const SymbolChain& chain,
                                    const LyubeznikReading& reading = {}) {
    if (!is_l_admissible(h, ord, chain, reading)) return false;
    const std::uint64_t full = h.all_edges_mask();
    const std::uint64_t own = indices_to_mask(chain.positions);
    const std::uint64_t rest = full & ~own;
    for (std::uint64_t add = rest; add != 0; add = (add - 1) & rest)
        if (is_l_admissible(h, ord, detail::chain_from_position_mask(h, ord, own | add), reading)) return false;
    return true;
}

/// Length of the longest admissible symbol: the Lyubeznik resolution for this
/// ordering has that length, so it bounds the projective dimension.
inline std::size_t max_admissible_length(const Hypergraph& h, const EdgeOrdering& ord,
                                         const LyubeznikReading& reading = {}, std::size_t cap = 16) {
    if (h.num_edges() > cap) throw Error(ErrorCode::BudgetExceeded, "too many edges for admissible-symbol search");
    const std::uint64_t full = h.all_edges_mask();
    std::size_t best = 0;
    for (std::uint64_t c = full; c != 0; c = (c - 1) & full) {
        const auto len = static_cast<std::size_t>(std::popcount(c));
        if (len <= best) continue;
        if (is_l_admissible(h, ord, detail::chain_from_position_mask(h, ord, c), reading)) best = len;
    }
    return best;
}

// Certificates ------------------------------------------------------------------

enum class CertificateKind { SemiInduced, SelfOrdered, SelfSemiDisjoint, InducedMatching };

inline std::string to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::SemiInduced: return "semi_induced";
    case CertificateKind::SelfOrdered: return "self_ordered";
    case CertificateKind::SelfSemiDisjoint: return "self_semi_disjoint";
    case CertificateKind::InducedMatching: return "induced_matching";
    }
    return "unknown";
}

/// Claim: the family (of the stated kind) forces beta_{i,j} != 0 at its type.
struct Certificate {
    CertificateKind kind = CertificateKind::SemiInduced;
    EdgeFamily family;
    FamilyType claimed;
    std::optional<EdgeOrdering> ordering;
};

enum class Verdict { Verified, PremiseFails, BettiVanishes };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::PremiseFails: return "premise_fails";
    case Verdict::BettiVanishes: return "betti_vanishes";
    }
    return "unknown";
}

struct CertificateResult {
    Verdict verdict = Verdict::PremiseFails;
    std::string detail;
    std::optional<EdgeOrdering> ordering;  ///< Lyubeznik ordering used, when relevant
    std::optional<Hypergraph> restricted;  ///< hypergraph the ordering refers to, when restricted
};

/// Re-validates the combinatorial premise (including the maximal admissible
/// symbol behind self ordered and self semi-disjoint certificates), then reads
/// the table entry at the claimed degree.
inline CertificateResult certify_nonvanishing(const Hypergraph& h, const Certificate& cert, const BettiTable& table) {
    CertificateResult res;
    auto fail = [&](const std::string& why) {
        res.verdict = Verdict::PremiseFails;
        res.detail = why;
        return res;
    };
    if (cert.family.indices.empty()) return fail("empty family");
    EdgeFamily fam;
    try {
        fam = make_family(h, cert.family.indices);
    } catch (const Error& e) {
        return fail(e.what());
    }
    if (fam.type() != cert.claimed) return fail("claimed type differs from the family's type");
    const auto cls = classify(h, fam);
    switch (cert.kind) {
    case CertificateKind::InducedMatching:
        if (!cls.induced) return fail("family is not an induced matching");
        break;
    case CertificateKind::SemiInduced:
        if (!cls.self_semi_induced) return fail("family is not a self semi-induced matching");
        break;
    case CertificateKind::SelfOrdered: {
        if (!cls.self_ordered) return fail("family is not self ordered in the given order");
        if (fam.size() >= 2) {
            const auto ord = EdgeOrdering::leading(h.num_edges(), fam.indices);
            std::vector<std::size_t> pos(fam.size());
            std::iota(pos.begin(), pos.end(), std::size_t{0});
            const auto chain = make_chain(h, ord, pos);
            if (!in_kernel(h, ord, chain)) return fail("symbol is not a cycle");
            if (!is_maximal_l_admissible(h, ord, chain)) return fail("symbol is not maximal L-admissible");
            res.ordering = ord;
        }
        break;
    }
    case CertificateKind::SelfSemiDisjoint: {
        if (!cls.self_semi_disjoint || !cls.self_semi_disjoint_core) return fail("family is not self semi-disjoint");
        // Work inside the induced subhypergraph on the family's union.
        const auto w = h.union_of(fam.mask());
        const auto sub = induced_subhypergraph(h, w);
        const auto kept = induced_edge_indices(h, w);
        auto local = [&](std::size_t s) {
            return static_cast<std::size_t>(std::find(kept.begin(), kept.end(), s) - kept.begin());
        };
        const EdgeMask core = cls.self_semi_disjoint_core->mask();
        std::vector<std::size_t> front, tail, middle;
        for (auto s : fam.sorted_indices()) ((core >> s) & 1u ? tail : front).push_back(local(s));
        for (std::size_t s = 0; s < sub.num_edges(); ++s) {
            const auto global = kept[s];
            if (!((fam.mask() >> global) & 1u)) middle.push_back(s);
        }
        EdgeOrdering ord;
        ord.order = front;
        ord.order.insert(ord.order.end(), middle.begin(), middle.end());
        ord.order.insert(ord.order.end(), tail.begin(), tail.end());
        ord.validate(sub.num_edges());
        std::vector<std::size_t> pos;
        for (std::size_t p = 0; p < front.size(); ++p) pos.push_back(p);
        for (std::size_t p = 0; p < tail.size(); ++p) pos.push_back(front.size() + middle.size() + p);
        const auto chain = make_chain(sub, ord, pos);
        if (!in_kernel(sub, ord, chain)) return fail("symbol is not a cycle");
        if (!is_maximal_l_admissible(sub, ord, chain)) return fail("symbol is not maximal L-admissible");
        res.ordering = ord;
        res.restricted = sub;
        break;
    }
    }
    const auto beta = table.at(static_cast<int>(fam.type().i), static_cast<int>(fam.type().j));
    if (beta == 0) {
        res.verdict = Verdict::BettiVanishes;
        res.detail = "beta_{" + std::to_string(fam.type().i) + "," + std::to_string(fam.type().j) + "} = 0";
        return res;
    }
    res.verdict = Verdict::Verified;
    res.detail = "beta_{" + std::to_string(fam.type().i) + "," + std::to_string(fam.type().j) + "} = " + std::to_string(beta);
    return res;
}

} // namespace hyperbetti
