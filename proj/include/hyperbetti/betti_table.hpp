#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "hyperbetti/linalg.hpp"

namespace hyperbetti {

/// Graded Betti numbers beta_{i,j} of R/I(H); only nonzero entries are stored.
class BettiTable {
public:
    using Key = std::pair<int, int>;  // (homological degree i, internal degree j)

    BettiTable() = default;
    BettiTable(FieldChoice field, std::size_t n) : field_(field), n_(n) {}

    std::uint64_t at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }
    void add(int i, int j, std::uint64_t v) {
        if (v == 0) return;
        entries_[{i, j}] += v;
    }
    void set(int i, int j, std::uint64_t v) {
        if (v == 0)
            entries_.erase({i, j});
        else
            entries_[{i, j}] = v;
    }

    const std::map<Key, std::uint64_t>& entries() const { return entries_; }
    const FieldChoice& field() const { return field_; }
    std::size_t num_vertices() const { return n_; }

    /// Largest i with a nonzero entry; 0 for the table of the zero ideal.
    int pd() const {
        int best = 0;
        for (const auto& [k, v] : entries_) best = std::max(best, k.first);
        return best;
    }
    /// Largest j - i over nonzero entries.
    int reg() const {
        int best = 0;
        for (const auto& [k, v] : entries_) best = std::max(best, k.second - k.first);
        return best;
    }

    /// Entries compared, field and vertex count ignored.
    bool same_entries(const BettiTable& o) const { return entries_ == o.entries_; }

    /// Macaulay2-style display: rows are j - i, columns are i.
    std::string render() const {
        std::ostringstream os;
        const int p = pd(), r = reg();
        os << std::setw(7) << "";
        for (int i = 0; i <= p; ++i) os << std::setw(7) << i;
        os << "\n" << std::setw(7) << "total:";
        for (int i = 0; i <= p; ++i) {
            std::uint64_t t = 0;
            for (const auto& [k, v] : entries_)
                if (k.first == i) t += v;
            os << std::setw(7) << t;
        }
        os << '\n';
        for (int row = 0; row <= r; ++row) {
            os << std::setw(7) << (std::to_string(row) + ":");
            for (int i = 0; i <= p; ++i) {
                const auto v = at(i, i + row);
                os << std::setw(7) << (v == 0 ? std::string(".") : std::to_string(v));
            }
            os << '\n';
        }
        return os.str();
    }

private:
    FieldChoice field_{};
    std::size_t n_ = 0;
    std::map<Key, std::uint64_t> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const BettiTable& t) { return os << t.render(); }

} // namespace hyperbetti
