#include "qg/algebra.hpp"

#include <sstream>
#include <thread>

namespace qg {

void parallel_for(long count, const std::function<void(long)>& fn) {
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 4);
    if (count < 16 || workers < 2) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (long i = w; i < count; i += workers) fn(i);
        });
    for (auto& th : pool) th.join();
}

Sp sp_from_dense(const Vec& v) {
    Sp s;
    for (long i = 0; i < static_cast<long>(v.size()); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

Vec sp_to_dense(const Sp& s, long conductor, long dim) {
    Vec v = zero_vec(conductor, static_cast<int>(dim));
    for (const auto& [i, c] : s) v[i] = c;
    return v;
}

Sp sp_scale(const FieldElement& c, const Sp& s) {
    if (c.is_zero()) return {};
    Sp r;
    r.reserve(s.size());
    for (const auto& [i, x] : s) r.emplace_back(i, c * x);
    return r;
}

Sp sp_add(const Sp& a, const Sp& b) {
    SpAcc acc;
    acc.add(a);
    acc.add(b);
    return acc.done();
}

Sp sp_unit(long index, const FieldElement& coeff) {
    if (coeff.is_zero()) return {};
    return {{index, coeff}};
}

bool sp_is_zero(const Sp& s) { return s.empty(); }

void SpAcc::add(long index, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = m_.find(index);
    if (it == m_.end())
        m_.emplace(index, c);
    else
        it->second += c;
}

void SpAcc::add(const Sp& s, const FieldElement& scale) {
    if (scale.is_zero()) return;
    for (const auto& [i, c] : s) add(i, c * scale);
}

void SpAcc::add(const Sp& s) {
    for (const auto& [i, c] : s) add(i, c);
}

Sp SpAcc::done() const {
    Sp r;
    for (const auto& [i, c] : m_)
        if (!c.is_zero()) r.emplace_back(i, c);
    return r;
}

long tensor_index(const std::vector<long>& legs, long n) {
    long idx = 0;
    for (long l : legs) idx = idx * n + l;
    return idx;
}

std::vector<long> tensor_split(long index, long n, int k) {
    std::vector<long> legs(k);
    for (int i = k - 1; i >= 0; --i) {
        legs[i] = index % n;
        index /= n;
    }
    return legs;
}

Sp tensor_join(const Sp& x, int k1, const Sp& y, int k2, long n) {
    (void)k1;
    long scale = 1;
    for (int i = 0; i < k2; ++i) scale *= n;
    SpAcc acc;
    for (const auto& [ix, cx] : x)
        for (const auto& [iy, cy] : y) acc.add(ix * scale + iy, cx * cy);
    return acc.done();
}

Sp permute_legs(const Sp& x, int k, const std::vector<int>& perm, long n) {
    SpAcc acc;
    for (const auto& [idx, c] : x) {
        auto legs = tensor_split(idx, n, k);
        std::vector<long> out(k);
        for (int p = 0; p < k; ++p) out[p] = legs[perm[p]];
        acc.add(tensor_index(out, n), c);
    }
    return acc.done();
}

Sp contract_leg(const Sp& x, int k, int leg, const Vec& covector, long n) {
    SpAcc acc;
    for (const auto& [idx, c] : x) {
        auto legs = tensor_split(idx, n, k);
        const FieldElement& w = covector[legs[leg]];
        if (w.is_zero()) continue;
        std::vector<long> out;
        out.reserve(k - 1);
        for (int i = 0; i < k; ++i)
            if (i != leg) out.push_back(legs[i]);
        acc.add(tensor_index(out, n), c * w);
    }
    return acc.done();
}

Sp apply_matrix_leg(const Sp& x, int k, int leg, const Matrix& m, long n) {
    SpAcc acc;
    for (const auto& [idx, c] : x) {
        auto legs = tensor_split(idx, n, k);
        long src = legs[leg];
        for (int r = 0; r < m.rows(); ++r) {
            if (m.at(r, static_cast<int>(src)).is_zero()) continue;
            auto out = legs;
            out[leg] = r;
            acc.add(tensor_index(out, n), c * m.at(r, static_cast<int>(src)));
        }
    }
    return acc.done();
}

Sp MultTable::mul(const Sp& x, const Sp& y) const {
    SpAcc acc;
    for (const auto& [i, cx] : x)
        for (const auto& [j, cy] : y) acc.add(t[i][j], cx * cy);
    return acc.done();
}

Vec MultTable::mul(const Vec& x, const Vec& y) const {
    return sp_to_dense(mul(sp_from_dense(x), sp_from_dense(y)), conductor, n);
}

void MultTable::build_pair_table() {
    if (pair_table || n > 16) return;
    long n2 = static_cast<long>(n) * n;
    auto tbl = std::make_shared<std::vector<std::vector<Sp>>>(n2, std::vector<Sp>(n2));
    for (long a = 0; a < n2; ++a) {
        long a0 = a / n, a1 = a % n;
        for (long b = 0; b < n2; ++b) {
            const Sp& r0 = t[a0][b / n];
            if (r0.empty()) continue;
            const Sp& r1 = t[a1][b % n];
            if (r1.empty()) continue;
            Sp cell;
            cell.reserve(r0.size() * r1.size());
            for (const auto& [i0, c0] : r0)
                for (const auto& [i1, c1] : r1) cell.emplace_back(i0 * n + i1, c0 * c1);
            SpAcc acc;
            acc.add(cell);
            (*tbl)[a][b] = acc.done();
        }
    }
    pair_table = std::move(tbl);
}

Sp MultTable::mul_k(int k, const Sp& x, const Sp& y) const {
    if (k == 1) return mul(x, y);
    long total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    if (k == 2 && pair_table) {
        const auto& tbl = *pair_table;
        Vec acc = zero_vec(conductor, static_cast<int>(total));
        FieldElement cxy = FieldElement::zero(conductor);
        for (const auto& [ix, cx] : x)
            for (const auto& [iy, cy] : y) {
                const Sp& cell = tbl[ix][iy];
                if (cell.empty()) continue;
                cxy = cx * cy;
                for (const auto& [pi, pc] : cell) acc[pi].addmul(cxy, pc);
            }
        return sp_from_dense(acc);
    }
    // dense accumulation when the result space is small and the operands big
    bool dense = total <= 16384 && x.size() * y.size() > 64;
    Vec acc_dense;
    SpAcc acc;
    if (dense) acc_dense = zero_vec(conductor, static_cast<int>(total));
    for (const auto& [ix, cx] : x) {
        auto lx = tensor_split(ix, n, k);
        for (const auto& [iy, cy] : y) {
            auto ly = tensor_split(iy, n, k);
            FieldElement c = cx * cy;
            // product of the per-leg structure rows, expanded leg by leg
            std::vector<std::pair<long, FieldElement>> partial = {{0, std::move(c)}};
            for (int leg = 0; leg < k && !partial.empty(); ++leg) {
                const Sp& row = t[lx[leg]][ly[leg]];
                std::vector<std::pair<long, FieldElement>> next;
                next.reserve(partial.size() * row.size());
                for (const auto& [pidx, pc] : partial)
                    for (const auto& [ri, rc] : row) next.emplace_back(pidx * n + ri, pc * rc);
                partial = std::move(next);
            }
            if (dense)
                for (auto& [pi, pc] : partial) acc_dense[pi] += pc;
            else
                for (auto& [pi, pc] : partial) acc.add(pi, pc);
        }
    }
    return dense ? sp_from_dense(acc_dense) : acc.done();
}

Matrix MultTable::left_mult(const Vec& x) const {
    Matrix m(n, n, conductor);
    Sp sx = sp_from_dense(x);
    for (int j = 0; j < n; ++j) {
        SpAcc acc;
        for (const auto& [i, c] : sx) acc.add(t[i][j], c);
        for (const auto& [r, c] : acc.done()) m.at(static_cast<int>(r), j) = c;
    }
    return m;
}

Matrix MultTable::right_mult(const Vec& x) const {
    Matrix m(n, n, conductor);
    Sp sx = sp_from_dense(x);
    for (int j = 0; j < n; ++j) {
        SpAcc acc;
        for (const auto& [i, c] : sx) acc.add(t[j][i], c);
        for (const auto& [r, c] : acc.done()) m.at(static_cast<int>(r), j) = c;
    }
    return m;
}

Vec MultTable::power(const Vec& x, long e) const {
    Vec acc = unit;
    Vec base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::optional<Vec> MultTable::inverse(const Vec& x) const {
    auto sol = solve_linear(left_mult(x), unit);
    if (!sol) return std::nullopt;
    // left inverse equals right inverse in a finite-dimensional unital algebra
    return sol->particular;
}

bool MultTable::is_associative_unital(std::string* why) const {
    for (int i = 0; i < n; ++i) {
        Vec ei = unit_vec(conductor, n, i);
        if (mul(unit, ei) != ei || mul(ei, unit) != ei) {
            if (why) *why = "unit fails on basis element " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Sp ei = {{i, FieldElement::one(conductor)}};
                Sp ej = {{j, FieldElement::one(conductor)}};
                Sp ek = {{k, FieldElement::one(conductor)}};
                if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek))) {
                    if (why)
                        *why = "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(k) + ")";
                    return false;
                }
            }
    return true;
}

std::vector<Vec> center_basis(const MultTable& a) {
    // [x, e_i] = 0 for all i
    Matrix sys(a.n * a.n, a.n, a.conductor);
    for (int i = 0; i < a.n; ++i) {
        Vec ei = unit_vec(a.conductor, a.n, i);
        Matrix d = a.left_mult(ei) - a.right_mult(ei);
        for (int r = 0; r < a.n; ++r)
            for (int c = 0; c < a.n; ++c) sys.at(i * a.n + r, c) = d.at(r, c);
    }
    return span_basis(kernel_basis(sys), a.conductor, a.n);
}

std::vector<Vec> centralizer_basis(const MultTable& a, const std::vector<Vec>& elems) {
    std::vector<Vec> rows;
    Matrix sys(static_cast<int>(elems.size()) * a.n, a.n, a.conductor);
    for (size_t e = 0; e < elems.size(); ++e) {
        Matrix d = a.left_mult(elems[e]) - a.right_mult(elems[e]);
        for (int r = 0; r < a.n; ++r)
            for (int c = 0; c < a.n; ++c) sys.at(static_cast<int>(e) * a.n + r, c) = d.at(r, c);
    }
    return span_basis(kernel_basis(sys), a.conductor, a.n);
}

std::vector<Vec> subalgebra_closure(const MultTable& a, std::vector<Vec> gens) {
    gens.push_back(a.unit);
    std::vector<Vec> basis = span_basis(gens, a.conductor, a.n);
    for (;;) {
        std::vector<Vec> bigger = basis;
        for (const auto& x : basis)
            for (const auto& y : basis) bigger.push_back(a.mul(x, y));
        auto next = span_basis(bigger, a.conductor, a.n);
        if (next.size() == basis.size()) return next;
        basis = std::move(next);
    }
}

Poly relative_minimal_polynomial(const MultTable& a, const Vec& x, const std::vector<Vec>& subspace,
                                 const Vec& unit_elem) {
    int c = static_cast<int>(subspace.size());
    Matrix op(c, c, a.conductor);
    for (int j = 0; j < c; ++j) {
        Vec img = a.mul(x, subspace[j]);
        auto coords = coords_in_span(subspace, img, a.conductor, a.n);
        if (!coords) throw InternalError("subspace is not invariant under multiplication");
        op.set_col(j, *coords);
    }
    // minimal polynomial of the operator; the subspace's unit realizes t^0
    (void)unit_elem;
    return minimal_polynomial(op);
}

Vec algebra_poly_eval(const MultTable& a, const Poly& p, const Vec& x, const Vec& unit_elem) {
    Vec acc = zero_vec(a.conductor, a.n);
    for (size_t i = p.size(); i-- > 0;) {
        acc = a.mul(x, acc);
        if (!p[i].is_zero()) acc = add(acc, scale(p[i], unit_elem));
    }
    return acc;
}

QuotientSpace QuotientSpace::make(long conductor, long big, const std::vector<Vec>& subspace) {
    QuotientSpace q;
    q.conductor = conductor;
    q.big = big;
    if (!subspace.empty()) {
        Matrix m = Matrix::from_rows(subspace, conductor, static_cast<int>(big));
        auto piv = rref(m);
        for (size_t r = 0; r < piv.size(); ++r) {
            q.rows.push_back(m.row(static_cast<int>(r)));
            q.pivots.push_back(piv[r]);
        }
    }
    std::vector<bool> is_pivot(big, false);
    for (long p : q.pivots) is_pivot[p] = true;
    for (long i = 0; i < big; ++i)
        if (!is_pivot[i]) q.section.push_back(i);
    return q;
}

Vec QuotientSpace::project(const Vec& x) const {
    Vec red = x;
    for (size_t r = 0; r < rows.size(); ++r) {
        const FieldElement& c = red[pivots[r]];
        if (c.is_zero()) continue;
        FieldElement f = c;
        for (long i = 0; i < big; ++i)
            if (!rows[r][i].is_zero()) red[i] -= f * rows[r][i];
    }
    Vec out = zero_vec(conductor, static_cast<int>(section.size()));
    for (size_t i = 0; i < section.size(); ++i) out[i] = red[section[i]];
    return out;
}

Sp QuotientSpace::project_sp(const Sp& x) const {
    return sp_from_dense(project(sp_to_dense(x, conductor, big)));
}

Vec QuotientSpace::lift(const Vec& small) const {
    Vec out = zero_vec(conductor, static_cast<int>(big));
    for (size_t i = 0; i < section.size(); ++i) out[section[i]] = small[i];
    return out;
}

Sp QuotientSpace::lift_sp(const Sp& small) const {
    Sp out;
    for (const auto& [i, c] : small) out.emplace_back(section[i], c);
    return out;
}

bool QuotientSpace::contains(const Vec& x) const { return is_zero_vec(project(x)); }

} // namespace qg
