#include "qg/linalg.hpp"

#include <sstream>

namespace qg {

Vec zero_vec(long conductor, int n) { return Vec(n, FieldElement::zero(conductor)); }

Vec unit_vec(long conductor, int n, int i) {
    Vec v = zero_vec(conductor, n);
    v[i] = FieldElement::one(conductor);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const FieldElement& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

FieldElement dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("dot: size mismatch");
    FieldElement s = a.empty() ? FieldElement() : FieldElement::zero(a[0].conductor());
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Matrix::Matrix(int rows, int cols, long conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      a_(static_cast<size_t>(rows) * cols, FieldElement::zero(conductor)) {}

Matrix Matrix::identity(int n, long conductor) {
    Matrix m(n, n, conductor);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(conductor);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, long conductor, int dim) {
    Matrix m(dim, static_cast<int>(cols.size()), conductor);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        if (static_cast<int>(cols[c].size()) != dim) throw ShapeError("from_columns: bad column length");
        for (int r = 0; r < dim; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, long conductor, int dim) {
    Matrix m(static_cast<int>(rows.size()), dim, conductor);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (static_cast<int>(rows[r].size()) != dim) throw ShapeError("from_rows: bad row length");
        for (int c = 0; c < dim; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(int r) const {
    Vec v(cols_, FieldElement::zero(conductor_));
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(int c) const {
    Vec v(rows_, FieldElement::zero(conductor_));
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void Matrix::set_row(int r, const Vec& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_col(int c, const Vec& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix add: shape mismatch");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sub: shape mismatch");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix mul: shape mismatch");
    Matrix m(rows_, o.cols_, conductor_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                m.at(i, j) += x * o.at(k, j);
            }
        }
    return m;
}

Vec Matrix::operator*(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ShapeError("matrix-vector mul: shape mismatch");
    Vec r = zero_vec(conductor_, rows_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            if (at(i, j).is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

Matrix Matrix::operator*(const FieldElement& c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= c;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix m(cols_, rows_, conductor_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

FieldElement Matrix::trace() const {
    FieldElement t = FieldElement::zero(conductor_);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        FieldElement inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElement f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw ShapeError("solve_linear: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.conductor());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // inconsistent
    LinearSolution sol;
    sol.particular = zero_vec(a.conductor(), a.cols());
    for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec k = zero_vec(a.conductor(), a.cols());
        k[c] = FieldElement::one(a.conductor());
        for (size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -aug.at(static_cast<int>(r), c);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
    auto sol = solve_linear(a, zero_vec(a.conductor(), a.rows()));
    return sol->kernel;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse: matrix not square");
    int n = a.rows();
    Matrix aug(n, 2 * n, a.conductor());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = FieldElement::one(a.conductor());
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    Matrix inv(n, n, a.conductor());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, long conductor, int dim) {
    if (vectors.empty()) return {};
    Matrix m = Matrix::from_rows(vectors, conductor, dim);
    auto pivots = rref(m);
    std::vector<Vec> basis;
    for (size_t r = 0; r < pivots.size(); ++r) basis.push_back(m.row(static_cast<int>(r)));
    return basis;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, long conductor, int dim) {
    return span_basis(a, conductor, dim) == span_basis(b, conductor, dim);
}

std::optional<Vec> coords_in_span(const std::vector<Vec>& basis, const Vec& v, long conductor, int dim) {
    Matrix m = Matrix::from_columns(basis, conductor, dim);
    auto sol = solve_linear(m, v);
    if (!sol) return std::nullopt;
    return sol->particular;
}

std::vector<FieldElement> minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("minimal_polynomial: matrix not square");
    int n = m.rows();
    long cond = m.conductor();
    // Stack vectorized powers I, M, M^2, ... until linearly dependent.
    std::vector<Vec> powers;
    Matrix p = Matrix::identity(n, cond);
    for (int deg = 0; deg <= n; ++deg) {
        Vec flat;
        flat.reserve(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.push_back(p.at(i, j));
        Matrix sys = Matrix::from_columns(powers, cond, n * n);
        auto sol = powers.empty() ? std::nullopt : solve_linear(sys, flat);
        if (sol) {
            std::vector<FieldElement> poly(deg + 1, FieldElement::zero(cond));
            for (int i = 0; i < deg; ++i) poly[i] = -sol->particular[i];
            poly[deg] = FieldElement::one(cond);
            return poly;
        }
        powers.push_back(std::move(flat));
        p = p * m;
    }
    throw InternalError("minimal polynomial search exceeded the dimension bound");
}

} // namespace qg
