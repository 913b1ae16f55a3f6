#include "groupwidth/linalg.hpp"

#include <stdexcept>

namespace gw::linalg {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& dense)
{
    const std::size_t rows = dense.size();
    const std::size_t cols = rows ? dense.front().size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (dense[r].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) {
            if (dense[r][c] != 0) m.push(r, c, dense[r][c]);
        }
    }
    return m;
}

void IntMatrix::push(std::size_t row, std::size_t col, long long value)
{
    if (row >= rows_ || col >= columns_.size()) throw std::out_of_range("IntMatrix::push");
    auto& column = columns_[col];
    if (!column.empty() && column.back().index >= row) throw std::invalid_argument("IntMatrix::push out of order");
    if (value != 0) column.push_back({row, value});
}

long long IntMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& column = columns_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Term<long long>& t, std::size_t r) { return t.index < r; });
    return (it != column.end() && it->index == row) ? it->value : 0;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols() != rhs.rows()) throw std::invalid_argument("IntMatrix dimension mismatch");
    IntMatrix out(rows_, rhs.cols());
    std::vector<long long> acc(rows_);
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& t : rhs.column(c)) {
            for (const auto& s : columns_[t.index]) acc[s.index] += s.value * t.value;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (acc[r] != 0) out.push(r, c, acc[r]);
        }
    }
    return out;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

namespace {

template <class Policy>
std::size_t column_rank(const IntMatrix& m, Policy policy)
{
    Echelon<Policy> echelon(std::move(policy), m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        echelon.insert(convert(echelon.policy(), m.column(c)));
        if (echelon.rank() == m.rows()) break;
    }
    return echelon.rank();
}

}  // namespace

std::size_t rank(const IntMatrix& matrix, const FieldSpec& field)
{
    if (field.is_rational()) return column_rank(matrix, FractionFree{});
    return column_rank(matrix, ModPrime(field.characteristic()));
}

}  // namespace gw::linalg
