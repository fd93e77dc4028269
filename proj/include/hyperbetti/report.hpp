#pragma once

// JSON rendering of invariants, tables and check reports; seeded fuzz
// campaigns with greedy shrinking of the first failure.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperbetti/checks.hpp"
#include "hyperbetti/generators.hpp"
#include "hyperbetti/io.hpp"

namespace hyperbetti {

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::json to_json(const EdgeFamily& f) { return f.indices; }

inline nlohmann::json to_json(const InvariantReport& r) {
    nlohmann::json j;
    j["m"] = r.m;
    j["a"] = r.a;
    j["b"] = r.b;
    j["b_prime"] = r.b_prime;
    j["c"] = r.c;
    j["c_prime"] = r.c_prime;
    j["d1"] = r.d1;
    j["d2"] = r.d2;
    j["d1_prime"] = r.d1_prime;
    j["d2_prime"] = r.d2_prime;
    j["e"] = r.e;
    nlohmann::json at = nlohmann::json::object();
    for (const auto& [t, v] : r.a_t) at[std::to_string(t)] = v;
    j["a_t"] = at;
    if (r.d_G) j["d_G"] = *r.d_G;
    if (r.d_G_prime) j["d_G_prime"] = *r.d_G_prime;
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, f] : r.witness) w[k] = to_json(f);
    j["witness"] = w;
    return j;
}

inline nlohmann::json to_json(const BettiTable& t) {
    nlohmann::json j;
    j["field"] = t.field().name();
    j["entries"] = nlohmann::json::array();
    for (const auto& [k, v] : t.entries()) j["entries"].push_back({k.first, k.second, v});
    j["pd"] = t.pd();
    j["reg"] = t.reg();
    return j;
}

inline nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["status"] = to_string(c.status);
    j["cases"] = c.cases;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

inline nlohmann::json to_json(const InstanceCheckReport& r) {
    nlohmann::json j;
    j["status"] = r.ok() ? "pass" : "fail";
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
    if (r.invariants) j["invariants"] = to_json(*r.invariants);
    if (r.table) j["betti"] = to_json(*r.table);
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : r.certificates)
        j["certificates"].push_back({{"kind", to_string(c.kind)}, {"family", to_json(c.family)},
                                     {"type", {c.family.type().i, c.family.type().j}}, {"verdict", to_string(c.verdict)}});
    return j;
}

// Fuzzing ---------------------------------------------------------------------------

struct InstanceClass {
    enum class Kind { General, Uniform, Special, Chordal, FreeVertex };
    Kind kind = Kind::General;
    std::size_t d = 2;

    /// "general", "uniform:d", "special:d", "chordal" or "free".
    static InstanceClass parse(const std::string& s) {
        auto with_d = [&](Kind k, const std::string& rest) {
            try {
                std::size_t used = 0;
                const auto d = std::stoul(rest, &used);
                if (used != rest.size() || d < 2) throw std::invalid_argument("d");
                return InstanceClass{k, d};
            } catch (const std::logic_error&) {
                throw Error(ErrorCode::InvalidArgument, "bad edge size in class '" + s + "'");
            }
        };
        if (s == "general") return {Kind::General, 2};
        if (s == "chordal") return {Kind::Chordal, 2};
        if (s == "free") return {Kind::FreeVertex, 2};
        if (s.rfind("uniform:", 0) == 0) return with_d(Kind::Uniform, s.substr(8));
        if (s.rfind("special:", 0) == 0) return with_d(Kind::Special, s.substr(8));
        throw Error(ErrorCode::InvalidArgument, "unknown class '" + s + "'");
    }

    std::string name() const {
        switch (kind) {
        case Kind::General: return "general";
        case Kind::Uniform: return "uniform:" + std::to_string(d);
        case Kind::Special: return "special:" + std::to_string(d);
        case Kind::Chordal: return "chordal";
        case Kind::FreeVertex: return "free";
        }
        return "general";
    }
};

/// Instance `index` of a campaign; depends only on (class, n, m, seed, index).
inline Hypergraph generate_instance(const InstanceClass& cls, std::size_t n, std::size_t m, std::uint64_t seed,
                                    std::uint64_t index) {
    Rng rng(instance_seed(seed, index));
    switch (cls.kind) {
    case InstanceClass::Kind::General: return random_hypergraph(rng, n, m);
    case InstanceClass::Kind::Uniform: return random_uniform_hypergraph(rng, n, m, cls.d);
    case InstanceClass::Kind::Special: return random_special_triangulated(rng, n, cls.d, m == 0 ? kMaxEdges : m);
    case InstanceClass::Kind::Chordal: return random_chordal_graph(rng, n, m == 0 ? kMaxEdges : m);
    case InstanceClass::Kind::FreeVertex: return random_free_vertex_hypergraph(rng, m, n > m ? n - m : 1);
    }
    return random_hypergraph(rng, n, m);
}

namespace detail {

inline bool fails_check(const Hypergraph& h, const std::string& check, const CheckOptions& opt) {
    try {
        const auto r = run_checks(h, opt);
        const auto* c = r.find(check);
        return c && c->status == CheckStatus::Fail;
    } catch (const Error&) {
        return false;
    }
}

} // namespace detail

/// Greedy single-deletion shrinking: drop an edge, or a vertex with its edges,
/// while `fails` keeps holding. The result is minimal under both moves.
template <typename Pred>
Hypergraph shrink_while(Hypergraph h, Pred&& fails) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t s = 0; s < h.num_edges() && !progress; ++s) {
            auto cand = delete_edge(h, s);
            if (fails(cand)) {
                h = std::move(cand);
                progress = true;
            }
        }
        for (VertexId v = 0; v < h.num_vertices() && !progress; ++v) {
            auto cand = induced_subhypergraph(h, h.vertices() - VertexSet::singleton(v));
            if (fails(cand)) {
                h = std::move(cand);
                progress = true;
            }
        }
    }
    return h;
}

inline Hypergraph shrink_failure(const Hypergraph& h, const std::string& check, const CheckOptions& opt) {
    return shrink_while(h, [&](const Hypergraph& g) { return detail::fails_check(g, check, opt); });
}

struct FuzzParams {
    InstanceClass cls;
    std::size_t vertices = 6;
    std::size_t edges = 5;
    std::size_t count = 10;
    std::uint64_t seed = 1;
    CheckOptions options;
};

struct CheckTally {
    std::uint64_t pass = 0, fail = 0, not_applicable = 0, cases = 0;
};

struct FuzzFailure {
    std::uint64_t index = 0;
    std::uint64_t instance_seed = 0;
    std::string check;
    std::string detail;
    Hypergraph instance;
    std::optional<Hypergraph> shrunk;
};

struct FuzzReport {
    FuzzParams params;
    std::uint64_t instances = 0;
    std::uint64_t skipped = 0;  ///< instances the generator could not produce within caps
    std::map<std::string, CheckTally> summary;
    std::vector<FuzzFailure> failures;
    bool ok() const { return failures.empty(); }
};

inline FuzzReport run_fuzz(const FuzzParams& p) {
    FuzzReport rep;
    rep.params = p;
    for (std::uint64_t k = 0; k < p.count; ++k) {
        Hypergraph h;
        try {
            h = generate_instance(p.cls, p.vertices, p.edges, p.seed, k);
        } catch (const Error&) {
            ++rep.skipped;
            continue;
        }
        ++rep.instances;
        const auto r = run_checks(h, p.options);
        for (const auto& c : r.checks) {
            auto& t = rep.summary[c.name];
            t.cases += c.cases;
            if (c.status == CheckStatus::Pass) ++t.pass;
            if (c.status == CheckStatus::NotApplicable) ++t.not_applicable;
            if (c.status == CheckStatus::Fail) {
                ++t.fail;
                FuzzFailure f;
                f.index = k;
                f.instance_seed = instance_seed(p.seed, k);
                f.check = c.name;
                f.detail = c.detail;
                f.instance = h;
                if (rep.failures.empty()) f.shrunk = shrink_failure(h, c.name, p.options);
                rep.failures.push_back(std::move(f));
            }
        }
    }
    return rep;
}

inline nlohmann::json to_json(const FuzzReport& r) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "fuzz";
    j["class"] = r.params.cls.name();
    j["vertices"] = r.params.vertices;
    j["edges"] = r.params.edges;
    j["count"] = r.params.count;
    j["seed"] = r.params.seed;
    j["field"] = r.params.options.field.name();
    j["instances"] = r.instances;
    j["skipped"] = r.skipped;
    nlohmann::json s = nlohmann::json::object();
    for (const auto& [name, t] : r.summary)
        s[name] = {{"pass", t.pass}, {"fail", t.fail}, {"not_applicable", t.not_applicable}, {"cases", t.cases}};
    j["summary"] = s;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : r.failures) {
        nlohmann::json fj{{"index", f.index}, {"instance_seed", f.instance_seed}, {"check", f.check},
                          {"detail", f.detail}, {"instance", to_json(f.instance)}};
        if (f.shrunk) fj["shrunk"] = to_json(*f.shrunk);
        j["failures"].push_back(fj);
    }
    j["status"] = r.ok() ? "pass" : "fail";
    return j;
}

} // namespace hyperbetti
