// Command-line front end: invariants, Betti tables, family classification,
// per-instance checks and seeded fuzz campaigns.
//
// Exit codes: 0 all checks pass, 1 a violation was found, 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperbetti/checks.hpp"
#include "hyperbetti/families.hpp"
#include "hyperbetti/hochster.hpp"
#include "hyperbetti/io.hpp"
#include "hyperbetti/report.hpp"
#include "hyperbetti/taylor.hpp"
#include "hyperbetti/triangulated.hpp"

using namespace hyperbetti;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::size_t vertex_cap() {
    if (const char* env = std::getenv("BETTI_CAP_N")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidArgument, std::string("BETTI_CAP_N is not a number: ") + env);
        }
    }
    return kDefaultHochsterCap;
}

std::string family_text(const Hypergraph& h, const EdgeFamily& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < f.indices.size(); ++k) {
        if (k) os << ", ";
        bool first = true;
        h.edge(f.indices[k]).for_each([&](VertexId v) {
            os << (first ? "" : " ") << h.label(v);
            first = false;
        });
    }
    os << '}';
    return os.str();
}

void print_invariants(const Hypergraph& h, const InvariantReport& r) {
    auto row = [](const std::string& name, std::size_t v, const std::string& wit) {
        std::cout << std::left << std::setw(10) << name << std::right << std::setw(4) << v << "  " << wit << '\n';
    };
    auto wit = [&](const std::string& key) {
        auto it = r.witness.find(key);
        return it == r.witness.end() ? std::string() : family_text(h, it->second);
    };
    row("m", r.m, wit("m"));
    row("a", r.a, wit("a"));
    for (const auto& [t, v] : r.a_t) row("a_" + std::to_string(t), v, "");
    row("b", r.b, wit("b"));
    row("b'", r.b_prime, wit("b_prime"));
    row("c", r.c, wit("c"));
    row("c'", r.c_prime, wit("c_prime"));
    row("d1", r.d1, wit("d1"));
    row("d2", r.d2, wit("d2"));
    row("d1'", r.d1_prime, wit("d1_prime"));
    row("d2'", r.d2_prime, wit("d2_prime"));
    row("e", r.e, wit("e"));
    if (r.d_G) row("d_G", *r.d_G, "");
    if (r.d_G_prime) row("d_G'", *r.d_G_prime, "");
}

std::vector<std::size_t> parse_family(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != tok.size() || tok[0] == '-') throw Error(ErrorCode::InvalidArgument, "bad edge index '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty family");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded Betti numbers of hypergraph edge ideals and their combinatorial bounds"};
    app.require_subcommand(1);

    std::string file;
    std::string method = "hochster";
    std::string field_name = "q";
    std::string family;
    bool ordered = false;
    bool json = false;
    bool timing = false;
    std::size_t budget = kDefaultEdgeBudget;
    std::string cls = "general";
    std::size_t vertices = 6, edges = 5, count = 10;
    std::uint64_t seed = 1;
    std::string out_path;

    auto* inv = app.add_subcommand("invariants", "matching-type invariants with witnesses");
    inv->add_option("FILE", file, "instance (edge list or json)")->required();
    inv->add_option("--budget", budget, "edge budget for family enumeration");
    inv->add_flag("--json", json, "print json only");

    auto* bet = app.add_subcommand("betti", "graded Betti table");
    bet->add_option("FILE", file, "instance")->required();
    bet->add_option("--method", method, "hochster | taylor | recursive")
        ->check(CLI::IsMember({"hochster", "taylor", "recursive"}));
    bet->add_option("--field", field_name, "q | gf2 | gf:P");
    bet->add_flag("--json", json, "print json only");

    auto* cla = app.add_subcommand("classify", "which classes an edge family belongs to");
    cla->add_option("FILE", file, "instance")->required();
    cla->add_option("--family", family, "edge indices (0-based, file order), e.g. \"0 2 3\"")->required();
    cla->add_flag("--ordered", ordered, "test the self-ordered condition in the order given");
    cla->add_flag("--json", json, "print json only");

    auto* chk = app.add_subcommand("check", "run every applicable property check");
    chk->add_option("FILE", file, "instance")->required();
    chk->add_option("--field", field_name, "q | gf2 | gf:P");
    chk->add_option("--budget", budget, "edge budget for family enumeration");

    auto* fuz = app.add_subcommand("fuzz", "seeded random campaign");
    fuz->add_option("--class", cls, "general | uniform:d | special:d | chordal | free");
    fuz->add_option("--vertices", vertices, "vertices per instance");
    fuz->add_option("--edges", edges, "edges per instance (upper bound for special/chordal)");
    fuz->add_option("--count", count, "number of instances");
    fuz->add_option("--seed", seed, "campaign seed");
    fuz->add_option("--field", field_name, "q | gf2 | gf:P");
    fuz->add_option("--out", out_path, "also write the report to this file");
    fuz->add_flag("--timing", timing, "add wall-clock fields to the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        const auto field = FieldChoice::parse(field_name);

        if (*inv) {
            const auto h = read_instance(file);
            const auto r = compute_invariants(h, budget);
            if (json) {
                std::cout << to_json(r).dump(2) << '\n';
            } else {
                print_invariants(h, r);
                std::cout << to_json(r).dump() << '\n';
            }
            return kExitPass;
        }

        if (*bet) {
            const auto h = read_instance(file);
            BettiTable t;
            if (method == "hochster")
                t = betti_table(h, field, vertex_cap());
            else if (method == "taylor")
                t = betti_via_taylor(h, field);
            else
                t = betti_recursive(h, field);
            if (json) {
                std::cout << to_json(t).dump(2) << '\n';
            } else {
                std::cout << t.render() << "pd = " << t.pd() << ", reg = " << t.reg() << "  (" << method << ", "
                          << field.name() << ")\n";
            }
            return kExitPass;
        }

        if (*cla) {
            const auto h = read_instance(file);
            const auto f = make_family(h, parse_family(family));
            const auto c = classify(h, f);
            bool self_ordered = c.self_ordered;
            std::optional<std::vector<std::size_t>> order;
            if (!ordered) {
                order = detail::find_self_order(h, f.sorted_indices());
                self_ordered = order.has_value();
            }
            nlohmann::json j{{"family", f.indices},
                             {"type", {f.type().i, f.type().j}},
                             {"matching", c.matching},
                             {"semi_induced", c.semi_induced},
                             {"induced", c.induced},
                             {"self_semi_induced", c.self_semi_induced},
                             {"self_contained_semi_induced", c.self_contained_semi_induced},
                             {"self_disjoint", c.self_disjoint},
                             {"self_semi_disjoint", c.self_semi_disjoint},
                             {"self_ordered", self_ordered}};
            if (c.self_disjoint_core) j["self_disjoint_core"] = c.self_disjoint_core->indices;
            if (c.self_semi_disjoint_core) j["self_semi_disjoint_core"] = c.self_semi_disjoint_core->indices;
            if (order) j["self_order"] = *order;
            if (json) {
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "family " << family_text(h, f) << " of type (" << f.type().i << "," << f.type().j << ")\n";
                for (const char* k : {"matching", "semi_induced", "induced", "self_semi_induced", "self_contained_semi_induced",
                                      "self_disjoint", "self_semi_disjoint", "self_ordered"})
                    std::cout << "  " << std::left << std::setw(30) << k << (j[k].get<bool>() ? "yes" : "no") << '\n';
                if (order) std::cout << "  self order: " << nlohmann::json(*order).dump() << '\n';
            }
            return kExitPass;
        }

        if (*chk) {
            const auto h = read_instance(file);
            CheckOptions opt;
            opt.field = field;
            opt.hochster_cap = vertex_cap();
            opt.edge_budget = budget;
            const auto r = run_checks(h, opt);
            auto j = to_json(r);
            j["schema_version"] = kReportSchemaVersion;
            j["command"] = "check";
            j["field"] = field.name();
            j["instance"] = to_json(h);
            std::cout << j.dump(2) << '\n';
            return r.ok() ? kExitPass : kExitViolation;
        }

        if (*fuz) {
            FuzzParams p;
            p.cls = InstanceClass::parse(cls);
            p.vertices = vertices;
            p.edges = edges;
            p.count = count;
            p.seed = seed;
            p.options.field = field;
            p.options.hochster_cap = vertex_cap();
            const auto start = std::chrono::steady_clock::now();
            const auto r = run_fuzz(p);
            auto j = to_json(r);
            if (timing) {
                const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                j["runtime_seconds"] = secs;
                j["timestamp"] = static_cast<std::int64_t>(std::time(nullptr));
            }
            const auto text = j.dump(2);
            std::cout << text << '\n';
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
                out << text << '\n';
            }
            return r.ok() ? kExitPass : kExitViolation;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
