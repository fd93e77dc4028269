#pragma once

// Instance files. Two formats:
//
//   edgelist: one edge per line (or per "/"-separated chunk), vertex labels
//             separated by whitespace. Vertices are numbered in order of first
//             appearance. An optional "vertices: a b c" line fixes the order
//             and may introduce isolated vertices. "#" starts a comment.
//
//   json:     {"vertices": ["x1", ...], "edges": [[0, 1], ...]} with edges given
//             by vertex index. This is the canonical format.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

enum class InstanceFormat { EdgeList, Json };

namespace detail {

inline Error parse_error(std::size_t line, std::size_t column, const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

struct Token {
    std::string text;
    std::size_t column;
};

inline std::vector<Token> tokenize(const std::string& s, std::size_t offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const auto start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back({s.substr(start, i - start), offset + start + 1});
    }
    return out;
}

} // namespace detail

inline Hypergraph parse_edgelist(const std::string& text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::vector<VertexId>> edges;
    bool declared = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    auto vertex = [&](const detail::Token& t, std::size_t line) -> VertexId {
        if (auto it = ids.find(t.text); it != ids.end()) return it->second;
        if (declared) throw detail::parse_error(line, t.column, "undeclared vertex '" + t.text + "'");
        ids.emplace(t.text, static_cast<VertexId>(labels.size()));
        labels.push_back(t.text);
        return static_cast<VertexId>(labels.size() - 1);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line.compare(first, 9, "vertices:") == 0) {
            if (declared || !labels.empty())
                throw detail::parse_error(line_no, first + 1, "vertices: must come first and only once");
            declared = true;
            for (const auto& t : detail::tokenize(line.substr(first + 9), first + 9)) {
                if (t.text.find('/') != std::string::npos)
                    throw detail::parse_error(line_no, t.column, "'/' is not allowed in a label");
                if (!ids.emplace(t.text, static_cast<VertexId>(labels.size())).second)
                    throw detail::parse_error(line_no, t.column, "duplicate vertex '" + t.text + "'");
                labels.push_back(t.text);
            }
            continue;
        }
        std::size_t start = 0;
        while (start <= line.size()) {
            auto slash = line.find('/', start);
            if (slash == std::string::npos) slash = line.size();
            const auto chunk = detail::tokenize(line.substr(start, slash - start), start);
            if (!chunk.empty()) {
                std::vector<VertexId> e;
                for (const auto& t : chunk) e.push_back(vertex(t, line_no));
                edges.push_back(std::move(e));
            } else if (slash < line.size()) {
                throw detail::parse_error(line_no, slash + 1, "empty edge before '/'");
            }
            start = slash + 1;
        }
    }
    if (labels.size() > kMaxVertices) throw Error(ErrorCode::SizeCapExceeded, "at most 64 vertices are supported");
    return Hypergraph::build(std::move(labels), edges);
}

inline Hypergraph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Translate the byte offset into line and column.
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw detail::parse_error(line, col, "malformed json");
    }
    try {
        if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
            throw detail::parse_error(1, 1, "expected an object with \"vertices\" and \"edges\"");
        std::vector<std::string> labels;
        for (const auto& v : j.at("vertices")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        std::vector<std::vector<VertexId>> edges;
        for (const auto& e : j.at("edges")) {
            std::vector<VertexId> edge;
            for (const auto& v : e) {
                const auto id = v.get<long long>();
                if (id < 0) throw Error(ErrorCode::UnknownVertex, "negative vertex index");
                edge.push_back(static_cast<VertexId>(id));
            }
            edges.push_back(std::move(edge));
        }
        return Hypergraph::build(std::move(labels), edges);
    } catch (const nlohmann::json::exception& e) {
        throw detail::parse_error(1, 1, std::string("bad instance: ") + e.what());
    }
}

inline InstanceFormat detect_format(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text[first] == '{' ? InstanceFormat::Json : InstanceFormat::EdgeList;
}

inline Hypergraph parse_instance(const std::string& text) {
    return detect_format(text) == InstanceFormat::Json ? parse_json(text) : parse_edgelist(text);
}

inline Hypergraph read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

inline nlohmann::json to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["vertices"] = h.labels();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : h.edges()) j["edges"].push_back(e.to_vector());
    return j;
}

/// Canonical single-line json.
inline std::string serialize_json(const Hypergraph& h) { return to_json(h).dump(); }

inline std::string serialize_edgelist(const Hypergraph& h) {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& l : h.labels()) os << ' ' << l;
    os << '\n';
    for (const auto& e : h.edges()) {
        bool first = true;
        e.for_each([&](VertexId v) {
            os << (first ? "" : " ") << h.label(v);
            first = false;
        });
        os << '\n';
    }
    return os.str();
}

inline std::string serialize(const Hypergraph& h, InstanceFormat f) {
    return f == InstanceFormat::Json ? serialize_json(h) : serialize_edgelist(h);
}

} // namespace hyperbetti
