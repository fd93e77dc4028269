#pragma once

// Exact rank computations for small integer matrices, over the rationals
// (fraction-free Bareiss elimination on GMP integers) or over a prime field.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hyperbetti/error.hpp"

namespace hyperbetti {

struct FieldChoice {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldChoice rationals() { return {}; }
    static FieldChoice prime(std::uint32_t p) {
        if (p < 2) throw Error(ErrorCode::InvalidArgument, "field characteristic must be prime");
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
            if (p % d == 0) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
        return {Kind::PrimeField, p};
    }

    /// "q", "gf2" or "gf:P".
    static FieldChoice parse(const std::string& s) {
        if (s == "q" || s == "Q") return rationals();
        if (s == "gf2") return prime(2);
        if (s.rfind("gf:", 0) == 0) {
            try {
                return prime(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
            } catch (const std::logic_error&) {
                throw Error(ErrorCode::InvalidArgument, "bad field '" + s + "'");
            }
        }
        throw Error(ErrorCode::InvalidArgument, "unknown field '" + s + "' (expected q, gf2 or gf:P)");
    }

    std::string name() const {
        if (kind == Kind::Rationals) return "q";
        return p == 2 ? "gf2" : "gf:" + std::to_string(p);
    }

    friend bool operator==(const FieldChoice&, const FieldChoice&) = default;
};

/// Dense row-major matrix of small signed integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Copy with one extra column appended.
    IntMatrix with_column(const std::vector<int>& col) const {
        IntMatrix out(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
            out(r, cols_) = col[r];
        }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<int> data_;
};

namespace detail {

inline std::size_t rank_rational(const IntMatrix& a) {
    const auto rows = a.rows(), cols = a.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = a(r, c);
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const mpz_class& p = m[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const mpz_class f = m[r][c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                m[r][k] = p * m[r][k] - f * m[rank][k];
                mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

inline std::size_t rank_mod_p(const IntMatrix& a, std::uint32_t p) {
    const auto rows = a.rows(), cols = a.cols();
    if (rows == 0 || cols == 0) return 0;
    const auto P = static_cast<std::int64_t>(p);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = ((a(r, c) % P) + P) % P;
    auto inverse = [P](std::int64_t x) {
        std::int64_t result = 1, e = P - 2;
        x %= P;
        while (e > 0) {
            if (e & 1) result = result * x % P;
            x = x * x % P;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const auto inv = inverse(m[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const auto f = m[r][c] * inv % P;
            for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % P + P) % P;
        }
        ++rank;
    }
    return rank;
}

/// Column reduction on sparse columns, keyed by the lowest nonzero row. Exact
/// over either field; fill-in stays small on boundary matrices.
template <class T, class Ops>
std::size_t rank_sparse(const IntMatrix& a, const Ops& ops) {
    using Column = std::vector<std::pair<std::size_t, T>>;  // increasing row
    std::vector<Column> pivots(a.rows());
    std::vector<bool> has(a.rows(), false);
    std::size_t rank = 0;
    Column v, tmp;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        v.clear();
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, c) != 0 && !ops.is_zero(ops.from_int(a(r, c)))) v.emplace_back(r, ops.from_int(a(r, c)));
        while (!v.empty() && has[v.back().first]) {
            const auto& p = pivots[v.back().first];
            const T f = ops.div(v.back().second, p.back().second);
            tmp.clear();
            std::size_t i = 0, k = 0;
            while (i < v.size() || k < p.size()) {
                if (k == p.size() || (i < v.size() && v[i].first < p[k].first)) {
                    tmp.push_back(v[i++]);
                } else if (i == v.size() || p[k].first < v[i].first) {
                    tmp.emplace_back(p[k].first, ops.neg_mul(f, p[k].second));
                    ++k;
                } else {
                    T x = ops.sub_mul(v[i].second, f, p[k].second);
                    if (!ops.is_zero(x)) tmp.emplace_back(v[i].first, std::move(x));
                    ++i;
                    ++k;
                }
            }
            std::swap(v, tmp);
        }
        if (v.empty()) continue;
        has[v.back().first] = true;
        pivots[v.back().first] = v;
        ++rank;
    }
    return rank;
}

struct RationalOps {
    mpq_class from_int(int x) const { return mpq_class(x); }
    bool is_zero(const mpq_class& x) const { return sgn(x) == 0; }
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return a / b; }
    mpq_class neg_mul(const mpq_class& f, const mpq_class& b) const { return -(f * b); }
    mpq_class sub_mul(const mpq_class& a, const mpq_class& f, const mpq_class& b) const { return a - f * b; }
};

struct ModPOps {
    std::int64_t p;
    std::int64_t from_int(int x) const { return ((x % p) + p) % p; }
    bool is_zero(std::int64_t x) const { return x == 0; }
    std::int64_t inverse(std::int64_t x) const {
        std::int64_t result = 1, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return result;
    }
    std::int64_t div(std::int64_t a, std::int64_t b) const { return a * inverse(b) % p; }
    std::int64_t neg_mul(std::int64_t f, std::int64_t b) const { return (p - f * b % p) % p; }
    std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) const { return ((a - f * b % p) % p + p) % p; }
};

} // namespace detail

/// Rank over the chosen field; exact in both cases.
inline std::size_t rank(const IntMatrix& a, const FieldChoice& field) {
    if (field.kind == FieldChoice::Kind::Rationals) return detail::rank_sparse<mpq_class>(a, detail::RationalOps{});
    return detail::rank_sparse<std::int64_t>(a, detail::ModPOps{static_cast<std::int64_t>(field.p)});
}

/// Dense elimination (fraction-free Bareiss over the rationals); kept as a
/// second implementation for cross-checking.
inline std::size_t rank_dense(const IntMatrix& a, const FieldChoice& field) {
    return field.kind == FieldChoice::Kind::Rationals ? detail::rank_rational(a) : detail::rank_mod_p(a, field.p);
}

/// Whether v lies in the column space of a (exact solve via rank comparison).
inline bool in_column_space(const IntMatrix& a, const std::vector<int>& v, const FieldChoice& field) {
    if (a.cols() == 0) {
        for (int x : v)
            if (field.kind == FieldChoice::Kind::Rationals ? x != 0 : x % static_cast<int>(field.p) != 0) return false;
        return true;
    }
    return rank(a.with_column(v), field) == rank(a, field);
}

/// For each k, whether the unit vector e_k lies in the column space of a.
/// e_k is in the row space of a^T exactly when it is a row of its reduced echelon form.
inline std::vector<bool> unit_vectors_in_column_space(const IntMatrix& a, const FieldChoice& field) {
    const auto n = a.rows(), cols = a.cols();
    std::vector<bool> out(n, false);
    if (n == 0 || cols == 0) return out;
    auto solve = [&](auto zero, auto convert, auto divide) {
        using T = decltype(zero);
        std::vector<std::vector<T>> m(cols, std::vector<T>(n, zero));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < cols; ++c) m[c][r] = convert(a(r, c));
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t c = 0; c < n && rank < cols; ++c) {
            std::size_t piv = rank;
            while (piv < cols && m[piv][c] == zero) ++piv;
            if (piv == cols) continue;
            std::swap(m[piv], m[rank]);
            const T p = m[rank][c];
            for (auto& x : m[rank]) x = divide(x, p);
            for (std::size_t r = 0; r < cols; ++r) {
                if (r == rank || m[r][c] == zero) continue;
                const T f = m[r][c];
                for (std::size_t k = 0; k < n; ++k) m[r][k] = convert(0) + m[r][k] - f * m[rank][k];
            }
            pivot_col.push_back(c);
            ++rank;
        }
        for (std::size_t r = 0; r < rank; ++r) {
            std::size_t nonzero = 0;
            for (std::size_t k = 0; k < n; ++k) nonzero += !(m[r][k] == zero);
            if (nonzero == 1) out[pivot_col[r]] = true;
        }
    };
    if (field.kind == FieldChoice::Kind::Rationals) {
        solve(mpq_class(0), [](int x) { return mpq_class(x); }, [](const mpq_class& x, const mpq_class& p) { return mpq_class(x / p); });
    } else {
        const auto P = static_cast<std::int64_t>(field.p);
        struct Zp {
            std::int64_t v, p;
            bool operator==(const Zp& o) const { return v == o.v; }
            Zp operator+(const Zp& o) const { return {(v + o.v) % p, p}; }
            Zp operator-(const Zp& o) const { return {((v - o.v) % p + p) % p, p}; }
            Zp operator*(const Zp& o) const { return {v * o.v % p, p}; }
        };
        auto inverse = [P](std::int64_t x) {
            std::int64_t result = 1, e = P - 2;
            while (e > 0) {
                if (e & 1) result = result * x % P;
                x = x * x % P;
                e >>= 1;
            }
            return result;
        };
        solve(Zp{0, P}, [P](int x) { return Zp{((x % P) + P) % P, P}; },
              [&](const Zp& x, const Zp& p) { return Zp{x.v * inverse(p.v) % P, P}; });
    }
    return out;
}

} // namespace hyperbetti
