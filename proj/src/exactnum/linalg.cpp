#include "homalg/exactnum/linalg.hpp"

#include "homalg/errors.hpp"

#include <utility>

namespace homalg {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ShapeMismatch(what);
}

} // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = Scalar(1);
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "vector sizes differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "vector sizes differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
    Vector r(v.size());
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = c * v[i];
    return r;
}

void axpy(Vector& y, const Scalar& c, const Vector& x) {
    require(y.size() == x.size(), "vector sizes differ");
    if (c.is_zero()) return;
    const bool one = c.is_one();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        if (one)
            y[i] += x[i];
        else
            y[i] += c * x[i];
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == m.cols(), "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        require(cols[j].size() == m.rows(), "ragged matrix columns");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
}

Vector mat_apply(const Matrix& m, const Vector& v) {
    require(m.cols() == v.size(), "matrix-vector shape mismatch");
    Vector r(m.rows());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Scalar& a = m(i, j);
            if (a.is_zero()) continue;
            r[i] += a * v[j];
        }
    }
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matrix product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
    return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
    return r;
}

Matrix mat_scale(const Scalar& c, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r(i, j) = c * m(i, j);
    return r;
}

Matrix mat_pow(const Matrix& m, unsigned k) {
    require(m.is_square(), "power of a non-square matrix");
    Matrix r = Matrix::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) r = mat_mul(r, m);
    return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

namespace {

// Gauss-Jordan on [m | rhs]; returns the determinant and reduces rhs to m^-1 rhs
// when m is invertible.
Scalar eliminate(Matrix m, Matrix* rhs) {
    const std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            if (rhs)
                for (std::size_t j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(p, j), (*rhs)(c, j));
            det = -det;
        }
        Scalar piv = m(c, c);
        det *= piv;
        Scalar ip = piv.inv();
        for (std::size_t j = 0; j < n; ++j)
            if (!m(c, j).is_zero()) m(c, j) *= ip;
        if (rhs)
            for (std::size_t j = 0; j < rhs->cols(); ++j)
                if (!(*rhs)(c, j).is_zero()) (*rhs)(c, j) *= ip;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            Scalar f = m(r, c);
            for (std::size_t j = 0; j < n; ++j)
                if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
            if (rhs)
                for (std::size_t j = 0; j < rhs->cols(); ++j)
                    if (!(*rhs)(c, j).is_zero()) (*rhs)(r, j) -= f * (*rhs)(c, j);
        }
    }
    return det;
}

} // namespace

Scalar determinant(const Matrix& m) {
    require(m.is_square(), "determinant of a non-square matrix");
    return eliminate(m, nullptr);
}

Matrix mat_invert(const Matrix& m) {
    require(m.is_square(), "inverse of a non-square matrix");
    Matrix inv = Matrix::identity(m.rows());
    Scalar det = eliminate(m, &inv);
    if (det.is_zero()) throw Singular("matrix is singular", det.to_string());
    return inv;
}

Vector mat_solve(const Matrix& m, const Vector& b) {
    require(m.is_square() && m.rows() == b.size(), "linear system shape mismatch");
    Matrix rhs = Matrix::from_columns({b});
    Scalar det = eliminate(m, &rhs);
    if (det.is_zero()) throw Singular("linear system is singular", det.to_string());
    return rhs.column(0);
}

Matrix substitute(const Matrix& m, const std::map<std::string, mpq_class>& values) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).substitute(values);
    return r;
}

Vector substitute(const Vector& v, const std::map<std::string, mpq_class>& values) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].substitute(values);
    return r;
}

} // namespace homalg
