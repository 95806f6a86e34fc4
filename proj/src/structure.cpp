#include "qg/structure.hpp"

namespace qg {

std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b, long conductor,
                                 int dim) {
    if (a.empty() || b.empty()) return {};
    // x = A s = B t  <=>  [A | -B] (s,t)^T = 0
    Matrix sys(dim, static_cast<int>(a.size() + b.size()), conductor);
    for (size_t j = 0; j < a.size(); ++j)
        for (int i = 0; i < dim; ++i) sys.at(i, static_cast<int>(j)) = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (int i = 0; i < dim; ++i) sys.at(i, static_cast<int>(a.size() + j)) = -b[j][i];
    std::vector<Vec> result;
    for (const auto& k : kernel_basis(sys)) {
        Vec x = zero_vec(conductor, dim);
        for (size_t j = 0; j < a.size(); ++j) x = add(x, scale(k[j], a[j]));
        result.push_back(std::move(x));
    }
    return span_basis(result, conductor, dim);
}

CounitalData counital_data(const QuantumGroupoid& h) {
    const int n = h.dim();
    const long cond = h.conductor();
    CounitalData cd;
    cd.eps_t = h.eps_t();
    cd.eps_s = h.eps_s();
    if (cd.eps_t * cd.eps_t != cd.eps_t || cd.eps_s * cd.eps_s != cd.eps_s)
        throw Error("counital maps are not idempotent; input fails the quantum groupoid axioms");

    std::vector<Vec> t_cols, s_cols;
    for (int i = 0; i < n; ++i) {
        t_cols.push_back(cd.eps_t.col(i));
        s_cols.push_back(cd.eps_s.col(i));
    }
    cd.ht_basis = span_basis(t_cols, cond, n);
    cd.hs_basis = span_basis(s_cols, cond, n);

    cd.e_t = apply_matrix_leg(h.delta_unit(), 2, 0, h.antipode(), n);
    cd.e_s = apply_matrix_leg(h.delta_unit(), 2, 1, h.antipode(), n);
    cd.ad1_left = h.ad1_left();
    cd.ad1_right = h.ad1_right();
    if (cd.ad1_left * cd.ad1_left != cd.ad1_left || cd.ad1_right * cd.ad1_right != cd.ad1_right)
        throw Error("adjoint unit actions are not projections; input fails the axioms");

    // S restricts to an algebra anti-isomorphism H_t -> H_s
    std::vector<Vec> s_of_ht;
    for (const auto& z : cd.ht_basis) s_of_ht.push_back(h.apply_antipode(z));
    if (!same_span(s_of_ht, cd.hs_basis, cond, n))
        throw Error("antipode does not map H_t onto H_s");
    return cd;
}

QuantumGroupoid dual(const QuantumGroupoid& h) {
    const int n = h.dim();
    const long cond = h.conductor();
    MultTable dm;
    dm.conductor = cond;
    dm.n = n;
    dm.t.assign(n, std::vector<Sp>(n));
    // (xi^a xi^b)_c = coefficient of e_a (x) e_b in Delta(e_c)
    for (int c = 0; c < n; ++c)
        for (const auto& [idx, coef] : h.comul_table()[c]) {
            auto legs = tensor_split(idx, n, 2);
            dm.t[legs[0]][legs[1]].emplace_back(c, coef);
        }
    for (auto& row : dm.t)
        for (auto& cell : row) {
            SpAcc acc;
            acc.add(cell);
            cell = acc.done();
        }
    dm.unit = h.counit();

    std::vector<Sp> dcomul(n);
    // <e_a (x) e_b, Delta(xi^c)> = coefficient of e_c in e_a e_b
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (const auto& [c, coef] : h.algebra().t[a][b])
                dcomul[c].emplace_back(static_cast<long>(a) * n + b, coef);
    for (auto& d : dcomul) {
        SpAcc acc;
        acc.add(d);
        d = acc.done();
    }

    Vec dcounit = h.unit();
    Matrix ds = h.antipode().transposed();
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(h.label(i) + "^");
    QuantumGroupoid out(std::move(dm), std::move(dcomul), std::move(dcounit), std::move(ds),
                        std::move(labels));
    if (h.star) {
        // <phi*, x> = conj <phi, S(x)*>
        Matrix m = h.antipode().transposed() * conj_coeffs(h.star->matrix).transposed();
        out.star = StarData{m};
    }
    auto rep = validate_axioms(out);
    if (!rep.all_passed()) throw InternalError("dual of a valid quantum groupoid failed validation:\n" + rep.summary());
    return out;
}

QuantumGroupoid variant(const QuantumGroupoid& h, Variant which) {
    const int n = h.dim();
    const long cond = h.conductor();
    MultTable m;
    m.conductor = cond;
    m.n = n;
    m.t.assign(n, std::vector<Sp>(n));
    bool op = (which == Variant::Op || which == Variant::OpCop);
    bool cop = (which == Variant::Cop || which == Variant::OpCop);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.t[i][j] = op ? h.algebra().t[j][i] : h.algebra().t[i][j];
    m.unit = h.unit();
    std::vector<Sp> comul(n);
    for (int i = 0; i < n; ++i)
        comul[i] = cop ? permute_legs(h.comul_table()[i], 2, {1, 0}, n) : h.comul_table()[i];
    Matrix s = h.antipode();
    if (which != Variant::OpCop) {
        auto inv = inverse(s);
        if (!inv) throw AntipodeNotInvertible();
        s = *inv;
    }
    QuantumGroupoid out(std::move(m), std::move(comul), h.counit(), std::move(s), h.labels());
    auto rep = validate_axioms(out);
    if (!rep.all_passed())
        throw InternalError("structural variant failed validation:\n" + rep.summary());
    return out;
}

CenterReport center_and_connectedness(const QuantumGroupoid& h) {
    CenterReport r;
    r.center = center_basis(h.algebra());
    auto cd = counital_data(h);
    auto meet_t = intersect_spans(cd.ht_basis, r.center, h.conductor(), h.dim());
    auto meet_s = intersect_spans(cd.hs_basis, r.center, h.conductor(), h.dim());
    if (meet_t.size() != meet_s.size())
        throw InternalError("H_t and H_s meet the center in different dimensions");
    r.connected = (meet_t.size() == 1);
    return r;
}

std::optional<Vec> haar_integral(const QuantumGroupoid& h) {
    const int n = h.dim();
    const long cond = h.conductor();
    // x h = eps_t(x) h and h x = h eps_s(x) for all basis x
    Matrix sys(2 * n * n, n, cond);
    for (int x = 0; x < n; ++x) {
        Vec ex = unit_vec(cond, n, x);
        Matrix d1 = h.algebra().left_mult(ex) - h.algebra().left_mult(h.eps_t().col(x));
        Matrix d2 = h.algebra().right_mult(ex) - h.algebra().right_mult(h.eps_s().col(x));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                sys.at(x * n + r, c) = d1.at(r, c);
                sys.at((n + x) * n + r, c) = d2.at(r, c);
            }
    }
    std::vector<Vec> integrals = kernel_basis(sys);
    if (integrals.empty()) return std::nullopt;

    // impose eps_t(h) = eps_s(h) = 1 on the integral space
    int k = static_cast<int>(integrals.size());
    Matrix norm(2 * n, k, cond);
    for (int j = 0; j < k; ++j) {
        Vec t = h.eps_t() * integrals[j];
        Vec s = h.eps_s() * integrals[j];
        for (int i = 0; i < n; ++i) {
            norm.at(i, j) = t[i];
            norm.at(n + i, j) = s[i];
        }
    }
    Vec rhs = zero_vec(cond, 2 * n);
    for (int i = 0; i < n; ++i) {
        rhs[i] = h.unit()[i];
        rhs[n + i] = h.unit()[i];
    }
    auto sol = solve_linear(norm, rhs);
    if (!sol) return std::nullopt;
    if (!sol->kernel.empty())
        throw InternalError("normalized two-sided integral is not unique");
    Vec out = zero_vec(cond, n);
    for (int j = 0; j < k; ++j) out = add(out, scale(sol->particular[j], integrals[j]));
    return out;
}

bool is_morphism(const Matrix& f, const QuantumGroupoid& h, const QuantumGroupoid& k) {
    const int nh = h.dim();
    const long cond = h.conductor();
    if (f.rows() != k.dim() || f.cols() != nh) throw ShapeError("morphism matrix has wrong shape");
    if (f * h.unit() != k.unit()) return false;
    for (int i = 0; i < nh; ++i) {
        if (k.eps(f.col(i)) != h.counit()[i]) return false;
        if (k.apply_antipode(f.col(i)) != f * h.antipode().col(i)) return false;
        for (int j = 0; j < nh; ++j) {
            Vec lhs = f * h.mul(unit_vec(cond, nh, i), unit_vec(cond, nh, j));
            Vec rhs = k.mul(f.col(i), f.col(j));
            if (lhs != rhs) return false;
        }
        Sp dfi = k.comul(sp_from_dense(f.col(i)));
        SpAcc acc; // (f (x) f) Delta_H(e_i), re-indexed over K (x) K
        for (const auto& [idx, c] : h.comul_table()[i]) {
            auto legs = tensor_split(idx, nh, 2);
            Vec fa = f.col(static_cast<int>(legs[0]));
            Vec fb = f.col(static_cast<int>(legs[1]));
            for (int p = 0; p < k.dim(); ++p) {
                if (fa[p].is_zero()) continue;
                for (int q = 0; q < k.dim(); ++q) {
                    if (fb[q].is_zero()) continue;
                    acc.add(static_cast<long>(p) * k.dim() + q, c * fa[p] * fb[q]);
                }
            }
        }
        if (dfi != acc.done()) return false;
    }
    return true;
}

} // namespace qg
