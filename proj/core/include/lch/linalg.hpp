#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lch/field.hpp"

namespace lch {

/// Dense matrix over F_q, row-major.
class FqMatrix {
public:
    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
    {
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    friend bool operator==(const FqMatrix& a, const FqMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElem> data_;
};

FqMatrix multiply(const FqMatrix& a, const FqMatrix& b);

/// Rank by Gaussian elimination on a copy.
std::size_t rank(FqMatrix m);

/// Some x with A x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<FieldElem>> solve(const FqMatrix& a, std::span<const FieldElem> b);

}  // namespace lch
