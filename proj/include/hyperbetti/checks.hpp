#pragma once

// Every property check that applies to a single instance, run against the
// exact Betti table. Failures are report content, never exceptions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperbetti/betti_table.hpp"
#include "hyperbetti/families.hpp"
#include "hyperbetti/hochster.hpp"
#include "hyperbetti/hypergraph.hpp"
#include "hyperbetti/linalg.hpp"
#include "hyperbetti/taylor.hpp"
#include "hyperbetti/triangulated.hpp"

namespace hyperbetti {

enum class CheckStatus { Pass, Fail, NotApplicable };

inline std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;      ///< first violation, or why the check did not apply
    std::uint64_t cases = 0; ///< individual comparisons made
};

struct CertificateRecord {
    CertificateKind kind;
    EdgeFamily family;
    Verdict verdict;
};

struct CheckOptions {
    FieldChoice field = FieldChoice::rationals();
    bool both_fields = true;  ///< engine comparison over Q and GF(2) as well as `field`
    std::size_t hochster_cap = kDefaultHochsterCap;
    std::size_t taylor_cap = kDefaultTaylorCap;
    std::size_t edge_budget = kDefaultEdgeBudget;
    std::size_t triangulated_cap = kDefaultTriangulatedCap;
    std::uint64_t family_limit = 20000;  ///< per-family checks skipped above this many families
    std::size_t lyubeznik_cap = 12;
};

struct InstanceCheckReport {
    std::vector<CheckResult> checks;
    std::optional<InvariantReport> invariants;
    std::optional<BettiTable> table;
    std::vector<CertificateRecord> certificates;

    bool ok() const {
        return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

/// Accumulates comparisons for one named check; the first failure is kept.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) { r_.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        ++r_.cases;
        if (!ok && r_.status != CheckStatus::Fail) {
            r_.status = CheckStatus::Fail;
            r_.detail = what;
        }
    }
    template <typename A, typename B>
    void expect_le(const A& a, const B& b, const std::string& what) {
        std::ostringstream os;
        os << what << " (" << a << " > " << b << ")";
        expect(a <= b, os.str());
    }
    template <typename A, typename B>
    void expect_eq(const A& a, const B& b, const std::string& what) {
        std::ostringstream os;
        os << what << " (" << a << " != " << b << ")";
        expect(a == b, os.str());
    }

    CheckResult done() {
        if (r_.status != CheckStatus::Fail) r_.status = r_.cases == 0 ? CheckStatus::NotApplicable : CheckStatus::Pass;
        return r_;
    }
    static CheckResult not_applicable(std::string name, std::string why) {
        CheckResult r;
        r.name = std::move(name);
        r.detail = std::move(why);
        return r;
    }

private:
    CheckResult r_;
};

inline std::string type_str(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

inline std::string family_str(const EdgeFamily& f) {
    std::string s = "{";
    for (std::size_t k = 0; k < f.indices.size(); ++k) s += (k ? " " : "") + std::to_string(f.indices[k]);
    return s + "}";
}

/// Some i-subset of edges has a union of exactly j vertices.
inline bool type_occurs(const Hypergraph& h, std::size_t i, std::size_t j) {
    bool found = false;
    for_each_subset_of_size(h.num_edges(), i, [&](EdgeMask a) {
        if (!found && h.union_of(a).size() == j) found = true;
    });
    return found;
}

/// Every i-subset of edges has all members outside the union of the rest.
inline bool every_subset_uncovered(const Hypergraph& h, std::size_t i) {
    bool ok = true;
    for_each_subset_of_size(h.num_edges(), i, [&](EdgeMask a) {
        if (ok) ok = all_nonempty(private_parts(h, mask_to_indices(a)));
    });
    return ok;
}

inline bool is_graph(const Hypergraph& h) {
    return h.num_edges() > 0 &&
           std::all_of(h.edges().begin(), h.edges().end(), [](VertexSet e) { return e.size() == 2; });
}

} // namespace detail

/// Runs all applicable checks on one instance.
inline InstanceCheckReport run_checks(const Hypergraph& h, const CheckOptions& opt = {}) {
    using detail::CheckBuilder;
    using detail::type_str;
    InstanceCheckReport rep;
    const auto n = h.num_vertices();
    const auto m = h.num_edges();

    // Exact tables ---------------------------------------------------------------
    const bool hochster_ok = n <= opt.hochster_cap;
    const bool taylor_ok = m <= opt.taylor_cap;
    std::optional<TaylorComplex> tc;
    if (taylor_ok) tc.emplace(h, opt.taylor_cap);
    if (hochster_ok)
        rep.table = betti_table(h, opt.field, opt.hochster_cap);
    else if (tc)
        rep.table = tc->betti(opt.field);

    {
        CheckBuilder c("engines_agree");
        if (hochster_ok && tc) {
            std::vector<FieldChoice> fields{opt.field};
            if (opt.both_fields)
                for (auto f : {FieldChoice::rationals(), FieldChoice::prime(2)})
                    if (!(f == opt.field)) fields.push_back(f);
            for (const auto& f : fields) {
                const auto a = f == opt.field ? *rep.table : betti_table(h, f, opt.hochster_cap);
                c.expect(a.same_entries(tc->betti(f)), "Hochster and Taylor tables differ over " + f.name());
            }
            rep.checks.push_back(c.done());
        } else {
            rep.checks.push_back(CheckBuilder::not_applicable("engines_agree", "instance exceeds an engine cap"));
        }
    }

    // Families ---------------------------------------------------------------------
    if (m > opt.edge_budget) {
        rep.checks.push_back(CheckBuilder::not_applicable("families", "edge count exceeds the enumeration budget"));
        return rep;
    }
    const auto census = family_census(h, {opt.edge_budget, true});
    auto inv = invariants_from_census(census);
    const bool graph = detail::is_graph(h);
    std::optional<BouquetInvariants> bouquets;
    if (graph) {
        bouquets = bouquet_invariants(h);
        inv.d_G = bouquets->d_G;
        inv.d_G_prime = bouquets->d_G_prime;
    }
    rep.invariants = inv;

    {
        CheckBuilder c("implication_chain");
        if (census.families_visited <= opt.family_limit) {
            for_each_uncovered_family(h, [&](const std::vector<std::size_t>& members, const std::vector<VertexSet>&,
                                             VertexSet uni) {
                EdgeFamily f;
                f.indices = members;
                f.union_size = uni.size();
                const auto k = classify(h, f);
                const auto tag = detail::family_str(f);
                c.expect(!k.induced || (k.matching && k.self_semi_induced && k.self_disjoint),
                         "induced matching " + tag + " misses an implied class");
                c.expect(!k.self_semi_induced || (k.semi_induced && k.self_contained_semi_induced),
                         "self semi-induced matching " + tag + " misses an implied class");
                c.expect(!k.self_disjoint || k.self_semi_disjoint, "self disjoint set " + tag + " is not self semi-disjoint");
                c.expect(!k.self_ordered || k.self_contained_semi_induced,
                         "self ordered set " + tag + " is not self-contained semi-induced");
                if (graph) c.expect(!k.self_semi_disjoint || k.self_disjoint, "graph: self semi-disjoint " + tag + " not self disjoint");
            });
            for (const auto& [t, f] : census.self_ordered.witness)
                if (t.i > 0) c.expect(classify(h, f).self_contained_semi_induced, "self ordered witness not self-contained");
        }
        rep.checks.push_back(c.done());
    }

    {
        CheckBuilder c("invariant_inequalities");
        c.expect_le(inv.a, inv.m, "a <= m");
        c.expect_le(inv.a, inv.b, "a <= b");
        c.expect_le(inv.b, std::min(inv.d2, inv.e), "b <= min(d2, e)");
        c.expect_le(inv.a, inv.d1, "a <= d1");
        c.expect_le(inv.d1, inv.d2, "d1 <= d2");
        c.expect_le(inv.c, inv.e, "c <= e");
        c.expect_le(inv.b_prime, inv.d2_prime, "b' <= d2'");
        c.expect_le(inv.d1_prime, inv.d2_prime, "d1' <= d2'");
        rep.checks.push_back(c.done());
    }

    {
        CheckBuilder c("uncovered_family_admissibility");
        if (census.families_visited <= opt.family_limit && m <= opt.lyubeznik_cap) {
            const auto id = EdgeOrdering::identity(m);
            for_each_uncovered_family(h, [&](const std::vector<std::size_t>& members, const std::vector<VertexSet>&,
                                             VertexSet uni) {
                const auto tag = detail::family_str(make_family(h, members));
                // family first: admissible (no member covered)
                const auto first = EdgeOrdering::leading(m, members);
                std::vector<std::size_t> pos(members.size());
                for (std::size_t p = 0; p < pos.size(); ++p) pos[p] = p;
                const auto chain = make_chain(h, first, pos);
                c.expect(is_l_admissible(h, first, chain), "family-first symbol " + tag + " not admissible");
                c.expect(in_kernel(h, first, chain), "uncovered family " + tag + " not a cycle");
                // self semi-induced iff admissible under every ordering; the
                // ordering that puts the edges inside the union first refutes it
                const EdgeMask mask = indices_to_mask(members);
                const EdgeMask inside = h.edges_inside(uni) & ~mask;
                std::vector<std::size_t> lead = mask_to_indices(inside);
                lead.insert(lead.end(), members.begin(), members.end());
                const auto blocking = EdgeOrdering::leading(m, lead);
                std::vector<std::size_t> bpos;
                for (std::size_t p = 0; p < members.size(); ++p) bpos.push_back(lead.size() - members.size() + p);
                const bool ssi = inside == 0;
                c.expect(is_l_admissible(h, blocking, make_chain(h, blocking, bpos)) == ssi,
                         "admissibility of " + tag + " disagrees with self semi-induced");
                if (ssi) {
                    std::vector<std::size_t> ipos = members;  // identity positions are edge indices
                    c.expect(is_l_admissible(h, id, make_chain(h, id, ipos)), "self semi-induced " + tag + " not admissible");
                }
            });
            for (const auto& [t, f] : census.self_ordered.witness) {
                if (t.i < 2) continue;
                const auto ord = EdgeOrdering::leading(m, f.indices);
                std::vector<std::size_t> pos(f.size());
                for (std::size_t p = 0; p < pos.size(); ++p) pos[p] = p;
                c.expect(is_maximal_l_admissible(h, ord, make_chain(h, ord, pos)),
                         "self ordered " + detail::family_str(f) + " not maximal admissible");
            }
            for (const auto& [t, f] : census.self_semi_disjoint.witness) {
                if (t.i == 0) continue;
                const auto cls = classify(h, f);
                const auto core = cls.self_semi_disjoint_core->mask();
                std::vector<std::size_t> front, back;
                for (auto s : f.sorted_indices()) ((core >> s) & 1u ? back : front).push_back(s);
                // (S \ S0), (E \ S), S0  and  (S \ S0), S0, (E \ S)
                std::vector<std::size_t> order1 = front, order2 = front;
                for (std::size_t s = 0; s < m; ++s)
                    if (!((f.mask() >> s) & 1u)) order1.push_back(s);
                order1.insert(order1.end(), back.begin(), back.end());
                order2.insert(order2.end(), back.begin(), back.end());
                for (const auto& lead : {order1, order2}) {
                    const auto ord = EdgeOrdering::leading(m, lead);
                    std::vector<std::size_t> pos;
                    for (auto s : f.sorted_indices()) pos.push_back(ord.position_of(s));
                    std::sort(pos.begin(), pos.end());
                    c.expect(is_l_admissible(h, ord, make_chain(h, ord, pos)),
                             "self semi-disjoint " + detail::family_str(f) + " not admissible");
                }
            }
        }
        rep.checks.push_back(c.done());
    }

    if (!rep.table) {
        rep.checks.push_back(CheckBuilder::not_applicable("betti", "instance exceeds both engine caps"));
        return rep;
    }
    const auto& table = *rep.table;
    const auto pd = static_cast<std::size_t>(table.pd());
    const auto reg = static_cast<std::size_t>(table.reg());

    {
        CheckBuilder c("nonvanishing_certificates");
        auto run = [&](CertificateKind kind, const ClassTally& tally) {
            for (const auto& [t, f] : tally.witness) {
                if (t.i == 0) continue;
                const auto res = certify_nonvanishing(h, {kind, f, t, std::nullopt}, table);
                rep.certificates.push_back({kind, f, res.verdict});
                c.expect(res.verdict == Verdict::Verified,
                         to_string(kind) + " certificate " + detail::family_str(f) + ": " + res.detail);
            }
        };
        run(CertificateKind::InducedMatching, census.induced);
        run(CertificateKind::SemiInduced, census.self_semi_induced);
        run(CertificateKind::SelfOrdered, census.self_ordered);
        run(CertificateKind::SelfSemiDisjoint, census.self_semi_disjoint);
        rep.checks.push_back(c.done());
    }

    {
        CheckBuilder c("pd_reg_lower_bounds");
        c.expect_le(std::max(inv.b, inv.c), pd, "max(b, c) <= pd");
        c.expect_le(std::max(inv.b_prime, inv.c_prime), reg, "max(b', c') <= reg");
        c.expect_le(inv.d2, pd, "d2 <= pd");
        c.expect_le(inv.d2_prime, reg, "d2' <= reg");
        rep.checks.push_back(c.done());
    }

    const auto t_max = h.max_edge_size();
    {
        CheckBuilder c("reg_induced_bound");
        if (m > 0) {
            const auto at = inv.a_t.count(t_max) ? inv.a_t.at(t_max) : 0;
            c.expect_le((t_max - 1) * at, reg, "(t-1) a_{H,t} <= reg");
        }
        rep.checks.push_back(c.done());
    }

    {
        CheckBuilder c("induced_matching_count");
        if (m > 0) {
            for (std::size_t i = 1; i <= m && t_max * i <= n; ++i) {
                const auto it = census.induced_uniform.find({t_max, i});
                const std::uint64_t count = it == census.induced_uniform.end() ? 0 : it->second;
                c.expect_eq(table.at(static_cast<int>(i), static_cast<int>(t_max * i)), count,
                            "beta_{i,ti} vs induced matchings of t-sets at i = " + std::to_string(i));
            }
        }
        rep.checks.push_back(c.done());
    }

    {
        CheckBuilder c("b_set_sandwich");
        CheckBuilder cond("conditional_bounds");
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                if (!detail::type_occurs(h, i, j)) continue;
                const auto fb = family_betti_bounds(h, census, table, i, j, tc ? &*tc : nullptr);
                if (fb.b_set_size) {
                    const auto lo = census.self_semi_induced.at({i, j});
                    const auto hi = census.self_contained.at({i, j});
                    c.expect_le(lo, *fb.b_set_size, "#self semi-induced <= |B| at " + type_str(i, j));
                    c.expect_le(*fb.b_set_size, hi, "|B| <= #self-contained at " + type_str(i, j));
                }
                if (fb.applicable()) cond.expect(fb.holds(), "bound violated at " + type_str(i, j));
            }
        }
        rep.checks.push_back(c.done());
        rep.checks.push_back(cond.done());
    }

    {
        CheckBuilder c("pd_upper_bound");
        bool all = true;
        for (std::size_t i = std::max<std::size_t>(inv.e, 1); i <= m && all; ++i) all = detail::every_subset_uncovered(h, i);
        if (all) c.expect_le(pd, inv.e, "pd <= e");
        rep.checks.push_back(c.done());
    }

    {
        CheckBuilder c("lyubeznik_length");
        if (m <= opt.lyubeznik_cap) {
            const auto id = EdgeOrdering::identity(m);
            c.expect_le(pd, max_admissible_length(h, id, {}, opt.lyubeznik_cap), "pd <= longest admissible symbol");
        }
        rep.checks.push_back(c.done());
    }

    const auto prof = uniformity_profile(h);
    {
        CheckBuilder c("uniform_d1_prime");
        if (prof.is_uniform && m > 0) c.expect_eq(inv.d1_prime, (prof.d - 1) * inv.a, "d1' = (d-1) a");
        rep.checks.push_back(c.done());
    }

    if (graph) {
        CheckBuilder c("graph_bouquets");
        c.expect_eq(*inv.d_G, inv.d1, "d_G = d1");
        c.expect_eq(inv.d1, inv.d2, "d1 = d2");
        c.expect_eq(*inv.d_G_prime, inv.d1_prime, "d_G' = d1'");
        c.expect_eq(inv.d1_prime, inv.d2_prime, "d1' = d2'");
        rep.checks.push_back(c.done());
    }

    // Special triangulated instances ------------------------------------------------
    const bool special = prof.is_uniform && prof.is_special_class && m > 0 && n <= opt.triangulated_cap && is_triangulated(h, opt.triangulated_cap);
    if (special) {
        {
            CheckBuilder c("recursive_agrees");
            c.expect(betti_recursive(h, opt.field).same_entries(table), "recursive table differs");
            rep.checks.push_back(c.done());
        }
        {
            CheckBuilder c("self_disjoint_equivalence");
            const auto eq = check_betti_self_disjoint_equivalence(h, table, census);
            c.expect(eq.equivalence, "beta != 0 and self disjoint sets disagree at " +
                                         (eq.first_violation ? type_str(eq.first_violation->i, eq.first_violation->j) : ""));
            c.expect(eq.pd_ok(), "pd = d1 = d2 fails");
            c.expect(eq.reg_ok(), "reg = d1' = d2' fails");
            rep.checks.push_back(c.done());
        }
        {
            CheckBuilder c("special_d_prime");
            c.expect_eq(inv.d1_prime, (prof.d - 1) * inv.a, "d1' = (d-1) a");
            c.expect_eq(inv.d2_prime, (prof.d - 1) * inv.a, "d2' = (d-1) a");
            rep.checks.push_back(c.done());
        }
        if (graph) {
            CheckBuilder c("chordal_bouquets");
            c.expect_eq(pd, *inv.d_G, "pd = d_G");
            c.expect_eq(reg, *inv.d_G_prime, "reg = d_G'");
            c.expect_eq(*inv.d_G_prime, inv.a, "d_G' = a_G");
            rep.checks.push_back(c.done());
        }
        {
            CheckBuilder c("splitting_lemmas");
            for (VertexId x = 0; x < n; ++x) {
                if (!is_simplicial_vertex(h, x)) continue;
                for (std::size_t s = 0; s < m; ++s) {
                    if (!h.edge(s).contains(x)) continue;
                    const auto dec = split(h, x, s);
                    const auto tag = " at x=" + h.label(x) + ", S=" + std::to_string(s);
                    const auto p1 = uniformity_profile(dec.H1), p2 = uniformity_profile(dec.H2);
                    // H1 can lose every simplicial vertex once d >= 3 (one face
                    // removed from a simplex boundary); only graphs keep it.
                    c.expect(p1.is_special_class && (!graph || is_triangulated(dec.H1, opt.triangulated_cap)),
                             "H1 leaves the class" + tag);
                    c.expect(p2.is_special_class && is_triangulated(dec.H2, opt.triangulated_cap), "H2 leaves the class" + tag);
                    c.expect(check_induced_matching_persistence(h, x, s).ok(), "persistence fails" + tag);
                    c.expect(check_self_disjoint_extension(h, dec).ok(), "extension fails" + tag);
                }
            }
            rep.checks.push_back(c.done());
        }
    }
    return rep;
}

} // namespace hyperbetti
