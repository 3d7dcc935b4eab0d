#pragma once

// Dense exact vectors and matrices plus the lattice algorithms built on the
// column Hermite normal form: kernels, integral preimages, saturated lattice
// bases and canonical reduction modulo a subspace.

#include "torfan/exact.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace torfan {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(std::size_t cols, std::span<const std::vector<T>> rows) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    [[nodiscard]] std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    [[nodiscard]] std::vector<T> apply(std::span<const T> v) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T s{};
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---- vector helpers ------------------------------------------------------

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> x);
Rational dot(std::span<const Rational> a, std::span<const Rational> x);
bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);
/// gcd of all coordinates (0 for the zero vector).
Integer content(std::span<const Integer> v);
/// Divides by the content in place; the zero vector is left untouched.
void make_primitive(IntVector& v);
/// a*x - b*y, coordinatewise.
IntVector combine(const Integer& a, std::span<const Integer> x, const Integer& b, std::span<const Integer> y);
RatVector to_rational(std::span<const Integer> v);
/// Smallest positive integer multiple of v; returns the vector and the multiplier used.
IntVector clear_denominators(std::span<const Rational> v, Integer* multiplier = nullptr);

/// Integer vector on the same ray with coordinate gcd 1. Throws PreconditionError on 0.
IntVector primitive(std::span<const Rational> v);
IntVector primitive(std::span<const Integer> v);

std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);

// ---- Hermite normal form and lattices -------------------------------------

struct HermiteResult {
    IntMatrix h;        // h = m * u, column echelon form
    IntMatrix u;        // unimodular
    IntMatrix u_inv;    // u^{-1}
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;  // pivot row of each of the first `rank` columns
};

/// Column Hermite normal form: pivots positive, entries left of a pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& m);

/// Basis of ker(m) ∩ Z^n (columns of u beyond the rank).
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Some integer nu with m * nu = rhs, or nullopt if none exists over Z.
std::optional<IntVector> integral_preimage(const IntMatrix& m, std::span<const Integer> rhs);

std::size_t rank(const IntMatrix& m);
std::size_t rank(std::size_t dim, std::span<const IntVector> vectors);

IntMatrix rows_to_matrix(std::size_t cols, std::span<const IntVector> rows);

/// Canonical basis (reduced row HNF) of the lattice generated by the vectors.
std::vector<IntVector> lattice_basis(std::size_t dim, std::span<const IntVector> generators);
/// Membership of v in the lattice spanned by `basis`.
bool in_lattice(std::size_t dim, std::span<const IntVector> basis, std::span<const Integer> v);

/// Canonical basis (reduced row HNF) of span(vectors) ∩ Z^dim.
std::vector<IntVector> saturated_basis(std::size_t dim, std::span<const IntVector> vectors);

/// Canonical basis of {y : <v, y> = 0 for all v}.
std::vector<IntVector> annihilator(std::size_t dim, std::span<const IntVector> vectors);

/// Canonical basis of span(a) ∩ span(b).
std::vector<IntVector> subspace_intersection(std::size_t dim, std::span<const IntVector> a,
                                             std::span<const IntVector> b);

/// Unique representative of v + span(basis) vanishing on the pivot columns of `basis`,
/// which must be a canonical basis from saturated_basis. Positive multiples of v give
/// positive multiples of the result; it is not made primitive.
IntVector reduce_modulo(std::span<const Integer> v, std::span<const IntVector> basis);

bool in_span(std::size_t dim, std::span<const IntVector> basis, std::span<const Integer> v);

/// Some rational solution of a x = b, or nullopt.
std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b);

}  // namespace torfan
