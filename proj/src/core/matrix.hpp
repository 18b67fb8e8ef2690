#pragma once

#include "polynomial.hpp"

namespace duality {

// Matrix of polynomials presenting a map between free modules; columns
// are images of the source basis.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          entries_(static_cast<size_t>(rows) * cols, Polynomial(ring_)) {}

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Polynomial& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Polynomial& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    std::vector<Polynomial> column(int c) const {
        std::vector<Polynomial> v;
        v.reserve(rows_);
        for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
        return v;
    }
    void set_column(int c, const std::vector<Polynomial>& v) {
        for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    PolyMatrix transpose() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;

    PolyMatrix drop_row(int r) const;
    PolyMatrix drop_col(int c) const;

    // Determinant by cofactor expansion (square, desk-scale).
    Polynomial det() const;

    // All r x r minors (deterministic enumeration order).
    std::vector<Polynomial> minors(int r) const;

    // Largest r such that some r x r minor is nonzero.
    int rank() const;

private:
    RingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> entries_;
};

PolyMatrix identity_matrix(const RingPtr& ring, int n);

} // namespace duality
