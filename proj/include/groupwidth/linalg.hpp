#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "groupwidth/field.hpp"

namespace gw::linalg {

using BigInt = boost::multiprecision::cpp_int;

template <class T>
struct Term {
    std::size_t index;
    T value;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse vector: terms sorted by index, no explicit zeros.
template <class T>
using SparseVector = std::vector<Term<T>>;

/// Arithmetic in F_p with residues stored as 32-bit values.
class ModPrime {
public:
    using Scalar = std::uint32_t;

    explicit ModPrime(std::uint32_t p) : p_(p) {}

    std::uint32_t modulus() const noexcept { return p_; }

    Scalar from_int(long long v) const noexcept
    {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Scalar>(r);
    }

    Scalar from_big(const BigInt& v) const
    {
        BigInt r = v % p_;
        if (r < 0) r += p_;
        return r.convert_to<Scalar>();
    }

    bool is_zero(Scalar a) const noexcept { return a == 0; }
    Scalar add(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} + b) % p_); }
    Scalar sub(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} + p_ - b) % p_); }
    Scalar mul(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} * b) % p_); }

    Scalar inv(Scalar a) const noexcept
    {
        // Fermat: a^(p-2)
        std::uint64_t result = 1;
        std::uint64_t base = a;
        std::uint32_t e = p_ - 2;
        while (e) {
            if (e & 1u) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<Scalar>(result);
    }

    /// Scales the row so its leading coefficient is 1.
    void normalize(SparseVector<Scalar>& row) const
    {
        if (row.empty() || row.front().value == 1) return;
        const Scalar s = inv(row.front().value);
        for (auto& t : row) t.value = mul(t.value, s);
    }

    /// target <- target - target[col] * pivot, where pivot[col] == 1.
    void eliminate(SparseVector<Scalar>& target, const SparseVector<Scalar>& pivot, std::size_t col) const
    {
        const Scalar a = coefficient(target, col);
        if (a == 0) return;
        SparseVector<Scalar> out;
        out.reserve(target.size() + pivot.size());
        auto i = target.begin();
        auto j = pivot.begin();
        while (i != target.end() || j != pivot.end()) {
            if (j == pivot.end() || (i != target.end() && i->index < j->index)) {
                out.push_back(*i++);
            } else if (i == target.end() || j->index < i->index) {
                out.push_back({j->index, sub(0, mul(a, j->value))});
                ++j;
            } else {
                const Scalar v = sub(i->value, mul(a, j->value));
                if (v != 0) out.push_back({i->index, v});
                ++i;
                ++j;
            }
        }
        target = std::move(out);
    }

    static Scalar coefficient(const SparseVector<Scalar>& row, std::size_t col)
    {
        auto it = std::lower_bound(row.begin(), row.end(), col, [](const Term<Scalar>& t, std::size_t c) { return t.index < c; });
        return (it != row.end() && it->index == col) ? it->value : Scalar{0};
    }

private:
    std::uint32_t p_;
};

/**
 * Fraction-free integer elimination for rank computations over Q.
 *
 * A combination step replaces the target row by b*target - a*pivot (a, b the
 * entries in the eliminated column) and then divides the row by the gcd of
 * its entries, so all quantities stay integral and no rounding ever occurs.
 * Rows are kept primitive with a positive leading entry.
 */
class FractionFree {
public:
    using Scalar = BigInt;

    Scalar from_int(long long v) const { return Scalar(v); }
    Scalar from_big(const BigInt& v) const { return v; }
    bool is_zero(const Scalar& a) const { return a.is_zero(); }

    void normalize(SparseVector<Scalar>& row) const
    {
        if (row.empty()) return;
        BigInt g = 0;
        for (const auto& t : row) {
            g = boost::multiprecision::gcd(g, t.value);
            if (g == 1) break;
        }
        if (row.front().value < 0) g = -g;
        if (g != 1) {
            for (auto& t : row) t.value /= g;
        }
    }

    void eliminate(SparseVector<Scalar>& target, const SparseVector<Scalar>& pivot, std::size_t col) const
    {
        const Scalar a = coefficient(target, col);
        if (a.is_zero()) return;
        const Scalar b = coefficient(pivot, col);
        SparseVector<Scalar> out;
        out.reserve(target.size() + pivot.size());
        auto i = target.begin();
        auto j = pivot.begin();
        while (i != target.end() || j != pivot.end()) {
            if (j == pivot.end() || (i != target.end() && i->index < j->index)) {
                out.push_back({i->index, b * i->value});
                ++i;
            } else if (i == target.end() || j->index < i->index) {
                out.push_back({j->index, -(a * j->value)});
                ++j;
            } else {
                Scalar v = b * i->value - a * j->value;
                if (!v.is_zero()) out.push_back({i->index, std::move(v)});
                ++i;
                ++j;
            }
        }
        target = std::move(out);
        normalize(target);
    }

    static Scalar coefficient(const SparseVector<Scalar>& row, std::size_t col)
    {
        auto it = std::lower_bound(row.begin(), row.end(), col, [](const Term<Scalar>& t, std::size_t c) { return t.index < c; });
        return (it != row.end() && it->index == col) ? it->value : Scalar{0};
    }
};

/**
 * Row echelon form built incrementally.
 *
 * Each stored row is indexed by its leading column; inserting a vector
 * reduces its leading term against the stored rows until it either vanishes
 * (dependent) or lands on a free leading column (independent, stored).
 */
template <class Policy>
class Echelon {
public:
    using Scalar = typename Policy::Scalar;
    using Row = SparseVector<Scalar>;

    Echelon(Policy policy, std::size_t dimension) : policy_(std::move(policy)), rows_(dimension) {}

    std::size_t dimension() const noexcept { return rows_.size(); }
    std::size_t rank() const noexcept { return rank_; }

    /// True when `row` was independent of the rows already present.
    bool insert(Row row)
    {
        reduce(row);
        if (row.empty()) return false;
        policy_.normalize(row);
        const std::size_t lead = row.front().index;
        rows_[lead] = std::move(row);
        ++rank_;
        return true;
    }

    /// Reduces the leading term until it is zero or not a pivot column.
    void reduce(Row& row) const
    {
        while (!row.empty()) {
            const std::size_t lead = row.front().index;
            if (rows_[lead].empty()) return;
            policy_.eliminate(row, rows_[lead], lead);
        }
    }

    bool has_pivot(std::size_t col) const { return !rows_[col].empty(); }
    const Row& pivot_row(std::size_t col) const { return rows_[col]; }
    const Policy& policy() const noexcept { return policy_; }

private:
    Policy policy_;
    std::vector<Row> rows_;
    std::size_t rank_ = 0;
};

/// Integer matrix stored by columns; boundary matrices are built this way.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    /// Builds from dense row-major data.
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& dense);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    /// Entries must be added in increasing row order within a column.
    void push(std::size_t row, std::size_t col, long long value);

    long long at(std::size_t row, std::size_t col) const;
    const SparseVector<long long>& column(std::size_t col) const { return columns_[col]; }

    /// Exact product; the inner dimensions must agree.
    IntMatrix operator*(const IntMatrix& rhs) const;

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector<long long>> columns_;
};

/// Converts an integer sparse vector into a policy's scalar type, dropping zeros.
template <class Policy>
SparseVector<typename Policy::Scalar> convert(const Policy& policy, const SparseVector<long long>& v)
{
    SparseVector<typename Policy::Scalar> out;
    out.reserve(v.size());
    for (const auto& t : v) {
        auto s = policy.from_int(t.value);
        if (!policy.is_zero(s)) out.push_back({t.index, std::move(s)});
    }
    return out;
}

/// Exact rank: fraction-free integer elimination over Q, modular elimination over F_p.
std::size_t rank(const IntMatrix& matrix, const FieldSpec& field);

}  // namespace gw::linalg
