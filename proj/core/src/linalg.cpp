#include "lch/linalg.hpp"

#include <algorithm>

#include "lch/errors.hpp"

namespace lch {

bool FqMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](FieldElem x) { return x == 0; });
}

FqMatrix multiply(const FqMatrix& a, const FqMatrix& b)
{
    if (a.cols() != b.rows())
        throw StructuralError("matrix dimensions do not match for multiplication");
    const auto& f = *a.field();
    FqMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            FieldElem aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return out;
}

namespace {

// Reduces m to row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(FqMatrix& m, std::size_t col_limit)
{
    const auto& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(pivot, c), m.at(row, c));
        FieldElem inv = f.inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols(); ++c)
            m.at(row, c) = f.mul(m.at(row, c), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0)
                continue;
            FieldElem factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(FqMatrix m) { return eliminate(m, m.cols()).size(); }

std::optional<std::vector<FieldElem>> solve(const FqMatrix& a, std::span<const FieldElem> b)
{
    if (b.size() != a.rows())
        throw StructuralError("right-hand side has the wrong length");
    FqMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    auto pivots = eliminate(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        if (aug.at(r, a.cols()) != 0)
            return std::nullopt;
    std::vector<FieldElem> x(a.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

}  // namespace lch
