#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qg/cyclotomic.hpp"

namespace qg {

using Vec = std::vector<FieldElement>;

Vec zero_vec(long conductor, int n);
Vec unit_vec(long conductor, int n, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const FieldElement& c, const Vec& v);
bool is_zero_vec(const Vec& v);
FieldElement dot(const Vec& a, const Vec& b);

/// Dense matrix over a cyclotomic field. Rows x cols, row-major storage.
/// A linear map sends coordinate columns to coordinate columns: column j is
/// the image of the j-th basis vector.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), conductor_(1) {}
    Matrix(int rows, int cols, long conductor);

    static Matrix identity(int n, long conductor);
    static Matrix from_columns(const std::vector<Vec>& cols, long conductor, int dim);
    static Matrix from_rows(const std::vector<Vec>& rows, long conductor, int dim);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long conductor() const { return conductor_; }

    FieldElement& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const FieldElement& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;
    void set_row(int r, const Vec& v);
    void set_col(int c, const Vec& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator*(const FieldElement& c) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transposed() const;
    FieldElement trace() const;
    bool is_zero() const;
    bool is_identity() const;

    std::string str() const;

private:
    int rows_, cols_;
    long conductor_;
    std::vector<FieldElement> a_;
};

/// In-place reduced row echelon form with deterministic pivoting
/// (leftmost nonzero column, topmost available row). Returns pivot columns.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

struct LinearSolution {
    Vec particular;              // one solution of A x = b
    std::vector<Vec> kernel;     // canonical basis of ker A
};

/// Exact solution set of A x = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b);

/// Canonical basis of the kernel of A (same convention as solve_linear).
std::vector<Vec> kernel_basis(const Matrix& a);

/// Inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Row-echelon canonical basis of the span of the given vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, long conductor, int dim);

/// True when the two spans coincide (computed via canonical bases).
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, long conductor, int dim);

/// Coordinates of v in the given (independent) spanning set, or nullopt.
std::optional<Vec> coords_in_span(const std::vector<Vec>& basis, const Vec& v, long conductor, int dim);

/// Monic minimal polynomial of a square matrix, ascending coefficients.
std::vector<FieldElement> minimal_polynomial(const Matrix& m);

} // namespace qg
