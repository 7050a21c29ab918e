#pragma once

#include "homalg/exactnum/scalar.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace homalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
// y += c * x
void axpy(Vector& y, const Scalar& c, const Vector& x);

// Dense row-major matrix. As a linear map it sends e_j to column j.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

Vector mat_apply(const Matrix& m, const Vector& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Scalar& c, const Matrix& m);
Matrix mat_pow(const Matrix& m, unsigned k);
Matrix direct_sum(const Matrix& a, const Matrix& b);

Scalar determinant(const Matrix& m);
// Throws Singular when the determinant is identically zero.
Matrix mat_invert(const Matrix& m);
// Solves m x = b for square invertible m.
Vector mat_solve(const Matrix& m, const Vector& b);

Matrix substitute(const Matrix& m, const std::map<std::string, mpq_class>& values);
Vector substitute(const Vector& v, const std::map<std::string, mpq_class>& values);

} // namespace homalg
