#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace commute {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. The workhorse carrier for everything
/// in this library; dimensions stay small (n <= 64), so no blocking or
/// sparsity anywhere.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return a_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(Complex c);

    Matrix adjoint() const;

    /// max_ij |a_ij|
    double max_abs() const;
    double frobenius_norm() const;

    /// ||A - A*||_max
    double asymmetry() const;
    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const Matrix& o) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex c, Matrix a);
Matrix operator*(Matrix a, Complex c);
Matrix operator*(double c, Matrix a);

/// AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);

/// ||U*U - I||_max
double unitary_defect(const Matrix& u);

}  // namespace commute
