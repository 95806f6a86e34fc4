#include "qg/rep.hpp"

namespace qg {

Matrix HModule::act(const Vec& x) const {
    Matrix m(rank, rank, parent->conductor());
    for (int a = 0; a < parent->dim(); ++a)
        if (!x[a].is_zero()) m = m + action[a] * x[a];
    return m;
}

bool HModule::is_valid(std::string* why) const {
    const auto& h = *parent;
    if (act(h.unit()) != Matrix::identity(rank, h.conductor())) {
        if (why) *why = "unit does not act as the identity";
        return false;
    }
    for (int a = 0; a < h.dim(); ++a)
        for (int b = 0; b < h.dim(); ++b) {
            Matrix lhs(rank, rank, h.conductor());
            for (const auto& [m, c] : h.algebra().t[a][b]) lhs = lhs + action[m] * c;
            if (lhs != action[a] * action[b]) {
                if (why) *why = "action is not multiplicative at (" + h.label(a) + ", " + h.label(b) + ")";
                return false;
            }
        }
    return true;
}

HModule regular_module(const QuantumGroupoid& h) {
    HModule m;
    m.parent = &h;
    m.rank = h.dim();
    for (int a = 0; a < h.dim(); ++a)
        m.action.push_back(h.algebra().left_mult(unit_vec(h.conductor(), h.dim(), a)));
    m.label = "regular";
    return m;
}

namespace {

/// rho_V (x) rho_W applied to an element of H (x) H.
Matrix pair_action(const HModule& v, const HModule& w, const Sp& x) {
    long cond = v.parent->conductor();
    int n = v.parent->dim();
    int m = v.rank * w.rank;
    Matrix out(m, m, cond);
    for (const auto& [idx, c] : x) {
        auto legs = tensor_split(idx, n, 2);
        const Matrix& a = v.action[legs[0]];
        const Matrix& b = w.action[legs[1]];
        for (int i = 0; i < v.rank; ++i)
            for (int j = 0; j < v.rank; ++j) {
                if (a.at(i, j).is_zero()) continue;
                FieldElement ca = c * a.at(i, j);
                for (int k = 0; k < w.rank; ++k)
                    for (int l = 0; l < w.rank; ++l) {
                        if (b.at(k, l).is_zero()) continue;
                        out.at(i * w.rank + k, j * w.rank + l).addmul(ca, b.at(k, l));
                    }
            }
    }
    return out;
}

} // namespace

ProductModule tensor_module(const HModule& v, const HModule& w) {
    if (v.parent != w.parent) throw ParentMismatch();
    const auto& h = *v.parent;
    long cond = h.conductor();
    Matrix p = pair_action(v, w, h.delta_unit());
    // canonical basis of the image of the idempotent
    std::vector<Vec> cols;
    for (int c = 0; c < p.cols(); ++c) cols.push_back(p.col(c));
    std::vector<Vec> basis = span_basis(cols, cond, p.rows());
    ProductModule out;
    out.ambient_rank = p.rows();
    out.embed = Matrix::from_columns(basis, cond, p.rows());
    out.mod.parent = &h;
    out.mod.rank = static_cast<int>(basis.size());
    out.mod.label = v.label + "(x)" + w.label;
    for (int a = 0; a < h.dim(); ++a) {
        Matrix amb = pair_action(v, w, h.comul_table()[a]);
        Matrix act(out.mod.rank, out.mod.rank, cond);
        for (int j = 0; j < out.mod.rank; ++j) {
            Vec img = amb * basis[j];
            auto coords = coords_in_span(basis, img, cond, p.rows());
            if (!coords) throw InternalError("tensor product basis is not invariant");
            act.set_col(j, *coords);
        }
        out.mod.action.push_back(std::move(act));
    }
    return out;
}

Vec truncate_coords(const ProductModule& p, const Vec& ambient) {
    std::vector<Vec> basis;
    for (int c = 0; c < p.embed.cols(); ++c) basis.push_back(p.embed.col(c));
    auto coords = coords_in_span(basis, ambient, p.embed.conductor(), p.ambient_rank);
    if (!coords) throw InternalError("vector does not lie in the truncated subspace");
    return *coords;
}

UnitModule unit_module(const QuantumGroupoid& h) {
    auto cd = counital_data(h);
    long cond = h.conductor();
    int n = h.dim();
    UnitModule um;
    um.basis = cd.ht_basis;
    int r = static_cast<int>(um.basis.size());
    um.mod.parent = &h;
    um.mod.rank = r;
    um.mod.label = "unit";
    for (int a = 0; a < n; ++a) {
        Matrix act(r, r, cond);
        for (int j = 0; j < r; ++j) {
            Vec img = h.eps_t() * h.mul(unit_vec(cond, n, a), um.basis[j]);
            auto coords = coords_in_span(um.basis, img, cond, n);
            if (!coords) throw InternalError("unit module action left the counital subalgebra");
            act.set_col(j, *coords);
        }
        um.mod.action.push_back(std::move(act));
    }
    return um;
}

UnitorData unitors(const HModule& v, const UnitModule& unit) {
    const auto& h = *v.parent;
    long cond = h.conductor();
    int n = h.dim();
    UnitorData u;
    u.unit_v = tensor_module(unit.mod, v);
    u.v_unit = tensor_module(v, unit.mod);
    int rz = unit.mod.rank;

    // l(z (x) w) = rho(z) w on the truncated subspace; l_inv(w) = sum S(1_(1)) (x) 1_(2).w
    Matrix l(v.rank, u.unit_v.mod.rank, cond);
    for (int j = 0; j < u.unit_v.mod.rank; ++j) {
        Vec amb = u.unit_v.embed.col(j);
        Vec out = zero_vec(cond, v.rank);
        for (int a = 0; a < rz; ++a) {
            Vec zelt = zero_vec(cond, n);
            for (int t = 0; t < n; ++t) zelt[t] = unit.basis[a][t];
            Matrix rho = v.act(zelt);
            for (int k = 0; k < v.rank; ++k) {
                const FieldElement& c = amb[a * v.rank + k];
                if (c.is_zero()) continue;
                for (int i = 0; i < v.rank; ++i) out[i].addmul(c, rho.at(i, k));
            }
        }
        l.set_col(j, out);
    }
    Matrix linv(u.unit_v.mod.rank, v.rank, cond);
    for (int k = 0; k < v.rank; ++k) {
        Vec amb = zero_vec(cond, rz * v.rank);
        for (const auto& [idx, c] : h.delta_unit()) {
            auto legs = tensor_split(idx, n, 2);
            Vec s1 = h.antipode().col(static_cast<int>(legs[0]));
            auto zc = coords_in_span(unit.basis, s1, cond, n);
            if (!zc) throw InternalError("S(1_(1)) left the counital subalgebra");
            const Matrix& rho = v.action[legs[1]];
            for (int a = 0; a < rz; ++a) {
                if ((*zc)[a].is_zero()) continue;
                FieldElement f = c * (*zc)[a];
                for (int i = 0; i < v.rank; ++i)
                    if (!rho.at(i, k).is_zero()) amb[a * v.rank + i].addmul(f, rho.at(i, k));
            }
        }
        linv.set_col(k, truncate_coords(u.unit_v, amb));
    }
    u.l = l;
    u.l_inv = linv;
    if (!(l * linv).is_identity() || !(linv * l).is_identity())
        throw InternalError("left unitor is not invertible");

    // r(w (x) z) = rho(S(z)) w; r_inv(w) = sum 1_(1).w (x) 1_(2)
    Matrix rmat(v.rank, u.v_unit.mod.rank, cond);
    for (int j = 0; j < u.v_unit.mod.rank; ++j) {
        Vec amb = u.v_unit.embed.col(j);
        Vec out = zero_vec(cond, v.rank);
        for (int a = 0; a < rz; ++a) {
            Vec zelt = zero_vec(cond, n);
            for (int t = 0; t < n; ++t) zelt[t] = unit.basis[a][t];
            Matrix rho = v.act(h.apply_antipode(zelt));
            for (int k = 0; k < v.rank; ++k) {
                const FieldElement& c = amb[k * rz + a];
                if (c.is_zero()) continue;
                for (int i = 0; i < v.rank; ++i) out[i].addmul(c, rho.at(i, k));
            }
        }
        rmat.set_col(j, out);
    }
    Matrix rinv(u.v_unit.mod.rank, v.rank, cond);
    for (int k = 0; k < v.rank; ++k) {
        // group by the V-index first: only the total second tensorand lies in H_t
        Vec amb = zero_vec(cond, v.rank * rz);
        for (int i = 0; i < v.rank; ++i) {
            Vec hvec = zero_vec(cond, n);
            for (const auto& [idx, c] : h.delta_unit()) {
                auto legs = tensor_split(idx, n, 2);
                const FieldElement& rik = v.action[legs[0]].at(i, k);
                if (!rik.is_zero()) hvec[legs[1]].addmul(c, rik);
            }
            auto zc = coords_in_span(unit.basis, hvec, cond, n);
            if (!zc) throw InternalError("1_(2) component left the counital subalgebra");
            for (int a = 0; a < rz; ++a) amb[i * rz + a] = (*zc)[a];
        }
        rinv.set_col(k, truncate_coords(u.v_unit, amb));
    }
    u.r = rmat;
    u.r_inv = rinv;
    if (!(rmat * rinv).is_identity() || !(rinv * rmat).is_identity())
        throw InternalError("right unitor is not invertible");
    return u;
}

DualModuleData dual_module_with_duality(const HModule& v, const UnitModule& unit) {
    const auto& h = *v.parent;
    long cond = h.conductor();
    int n = h.dim();
    DualModuleData out;
    out.dual.parent = &h;
    out.dual.rank = v.rank;
    out.dual.label = v.label + "*";
    for (int a = 0; a < n; ++a)
        out.dual.action.push_back(v.act(h.antipode().col(a)).transposed());

    out.v_vstar = tensor_module(v, out.dual);
    out.vstar_v = tensor_module(out.dual, v);

    int rz = unit.mod.rank;
    // b(z) = Delta(z) . sum_i f_i (x) xi^i, expressed in the truncated basis
    Matrix b(out.v_vstar.mod.rank, rz, cond);
    for (int a = 0; a < rz; ++a) {
        Vec zelt = zero_vec(cond, n);
        for (int t = 0; t < n; ++t) zelt[t] = unit.basis[a][t];
        Sp dz = h.comul(sp_from_dense(zelt));
        Matrix op = pair_action(v, out.dual, dz);
        Vec canonical = zero_vec(cond, v.rank * v.rank);
        for (int i = 0; i < v.rank; ++i) canonical[i * v.rank + i] = FieldElement::one(cond);
        b.set_col(a, truncate_coords(out.v_vstar, op * canonical));
    }
    // d(phi (x) w) = sum phi(1_(1) . w) 1_(2) in the counital basis
    Matrix d(rz, out.vstar_v.mod.rank, cond);
    for (int j = 0; j < out.vstar_v.mod.rank; ++j) {
        Vec amb = out.vstar_v.embed.col(j); // coordinates phi_a w_b at a * rank + b
        Vec acc = zero_vec(cond, n);
        for (const auto& [idx, c] : h.delta_unit()) {
            auto legs = tensor_split(idx, n, 2);
            const Matrix& rho = v.action[legs[0]];
            FieldElement val = FieldElement::zero(cond);
            for (int a = 0; a < v.rank; ++a)
                for (int bb = 0; bb < v.rank; ++bb) {
                    if (amb[a * v.rank + bb].is_zero() || rho.at(a, bb).is_zero()) continue;
                    val.addmul(amb[a * v.rank + bb], rho.at(a, bb));
                }
            if (!val.is_zero()) acc[legs[1]].addmul(val, c);
        }
        auto coords = coords_in_span(unit.basis, acc, cond, n);
        if (!coords) throw InternalError("evaluation morphism left the counital subalgebra");
        d.set_col(j, *coords);
    }
    out.duality.b = b;
    out.duality.d = d;

    // zig-zag identities, composed through ambient coordinates
    {
        // V -> H_t (x) V -> (V (x) V*) (x) V -> V (x) H_t -> V
        Matrix a1(rz * v.rank, v.rank, cond); // l_inv ambient
        for (int k = 0; k < v.rank; ++k) {
            Vec amb = zero_vec(cond, rz * v.rank);
            for (const auto& [idx, c] : h.delta_unit()) {
                auto legs = tensor_split(idx, n, 2);
                Vec s1 = h.antipode().col(static_cast<int>(legs[0]));
                auto zc = coords_in_span(unit.basis, s1, cond, n);
                if (!zc) throw InternalError("S(1_(1)) left the counital subalgebra");
                const Matrix& rho = v.action[legs[1]];
                for (int a = 0; a < rz; ++a) {
                    if ((*zc)[a].is_zero()) continue;
                    FieldElement f = c * (*zc)[a];
                    for (int i = 0; i < v.rank; ++i)
                        if (!rho.at(i, k).is_zero()) amb[a * v.rank + i].addmul(f, rho.at(i, k));
                }
            }
            a1.set_col(k, amb);
        }
        // a2: z (x) w -> b_amb(z) (x) w, ambient (rV rV* rV)
        int rv = v.rank;
        Matrix a2(rv * rv * rv, rz * rv, cond);
        for (int a = 0; a < rz; ++a) {
            Vec zelt = zero_vec(cond, n);
            for (int t = 0; t < n; ++t) zelt[t] = unit.basis[a][t];
            Matrix op = pair_action(v, out.dual, h.comul(sp_from_dense(zelt)));
            Vec canonical = zero_vec(cond, rv * rv);
            for (int i = 0; i < rv; ++i) canonical[i * rv + i] = FieldElement::one(cond);
            Vec bz = op * canonical;
            for (int k = 0; k < rv; ++k)
                for (long t = 0; t < rv * rv; ++t) a2.at(static_cast<int>(t) * rv + k, a * rv + k) = bz[t];
        }
        // a3: v (x) phi (x) w -> v (x) d_amb(phi (x) w)
        Matrix d_amb(rz, rv * rv, cond);
        for (long j = 0; j < static_cast<long>(rv) * rv; ++j) {
            Vec amb = zero_vec(cond, rv * rv);
            amb[j] = FieldElement::one(cond);
            Vec acc = zero_vec(cond, n);
            for (const auto& [idx, c] : h.delta_unit()) {
                auto legs = tensor_split(idx, n, 2);
                const Matrix& rho = v.action[legs[0]];
                int a = static_cast<int>(j) / rv, bb = static_cast<int>(j) % rv;
                if (rho.at(a, bb).is_zero()) continue;
                acc[legs[1]].addmul(c, rho.at(a, bb));
            }
            auto coords = coords_in_span(unit.basis, acc, cond, n);
            if (!coords) throw InternalError("evaluation morphism left the counital subalgebra");
            d_amb.set_col(static_cast<int>(j), *coords);
        }
        Matrix a3(rv * rz, rv * rv * rv, cond);
        for (int i = 0; i < rv; ++i)
            for (long j = 0; j < static_cast<long>(rv) * rv; ++j)
                for (int a = 0; a < rz; ++a)
                    a3.at(i * rz + a, static_cast<int>(i * rv * rv + j)) = d_amb.at(a, static_cast<int>(j));
        // a4: v (x) z -> rho(S(z)) v
        Matrix a4(rv, rv * rz, cond);
        for (int a = 0; a < rz; ++a) {
            Vec zelt = zero_vec(cond, n);
            for (int t = 0; t < n; ++t) zelt[t] = unit.basis[a][t];
            Matrix rho = v.act(h.apply_antipode(zelt));
            for (int k = 0; k < rv; ++k)
                for (int i = 0; i < rv; ++i) a4.at(i, k * rz + a) = rho.at(i, k);
        }
        Matrix zig = a4 * (a3 * (a2 * a1));
        if (!zig.is_identity()) throw InternalError("first zig-zag identity fails");

        // V* -> V* (x) H_t -> V* (x) V (x) V* -> H_t (x) V* -> V*
        Matrix c1(rv * rz, rv, cond); // r_inv on V*: phi -> 1_(1).phi (x) 1_(2)
        for (int k = 0; k < rv; ++k) {
            Vec amb = zero_vec(cond, rv * rz);
            for (int i = 0; i < rv; ++i) {
                Vec hvec = zero_vec(cond, n);
                for (const auto& [idx, c] : h.delta_unit()) {
                    auto legs = tensor_split(idx, n, 2);
                    const FieldElement& rik = out.dual.action[legs[0]].at(i, k);
                    if (!rik.is_zero()) hvec[legs[1]].addmul(c, rik);
                }
                auto zc = coords_in_span(unit.basis, hvec, cond, n);
                if (!zc) throw InternalError("1_(2) component left the counital subalgebra");
                for (int a = 0; a < rz; ++a) amb[i * rz + a] = (*zc)[a];
            }
            c1.set_col(k, amb);
        }
        Matrix c2(rv * rv * rv, rv * rz, cond); // phi (x) z -> phi (x) b_amb'(z), b' into V (x) V*
        for (int a = 0; a < rz; ++a) {
            Vec zelt = zero_vec(cond, n);
            for (int t = 0; t < n; ++t) zelt[t] = unit.basis[a][t];
            Matrix op = pair_action(v, out.dual, h.comul(sp_from_dense(zelt)));
            Vec canonical = zero_vec(cond, rv * rv);
            for (int i = 0; i < rv; ++i) canonical[i * rv + i] = FieldElement::one(cond);
            Vec bz = op * canonical;
            for (int k = 0; k < rv; ++k)
                for (long t = 0; t < static_cast<long>(rv) * rv; ++t)
                    c2.at(k * rv * rv + static_cast<int>(t), k * rz + a) = bz[t];
        }
        Matrix c3(rz * rv, rv * rv * rv, cond); // phi (x) w (x) psi -> d(phi (x) w) (x) psi
        for (long j = 0; j < static_cast<long>(rv) * rv; ++j) {
            Vec amb = zero_vec(cond, rv * rv);
            amb[j] = FieldElement::one(cond);
            Vec acc = zero_vec(cond, n);
            for (const auto& [idx, c] : h.delta_unit()) {
                auto legs = tensor_split(idx, n, 2);
                const Matrix& rho = v.action[legs[0]];
                int a = static_cast<int>(j) / rv, bb = static_cast<int>(j) % rv;
                if (rho.at(a, bb).is_zero()) continue;
                acc[legs[1]].addmul(c, rho.at(a, bb));
            }
            auto coords = coords_in_span(unit.basis, acc, cond, n);
            for (int a = 0; a < rz; ++a)
                for (int k = 0; k < rv; ++k)
                    c3.at(a * rv + k, static_cast<int>(j) * rv + k) = (*coords)[a];
        }
        Matrix c4(rv, rz * rv, cond); // z (x) phi -> rho*(z) phi
        for (int a = 0; a < rz; ++a) {
            Vec zelt = zero_vec(cond, n);
            for (int t = 0; t < n; ++t) zelt[t] = unit.basis[a][t];
            Matrix rho = out.dual.act(zelt);
            for (int k = 0; k < rv; ++k)
                for (int i = 0; i < rv; ++i) c4.at(i, a * rv + k) = rho.at(i, k);
        }
        Matrix zag = c4 * (c3 * (c2 * c1));
        if (!zag.is_identity()) throw InternalError("second zig-zag identity fails");
    }
    return out;
}

std::vector<Matrix> hom_space(const HModule& v, const HModule& w) {
    if (v.parent != w.parent) throw ParentMismatch();
    const auto& h = *v.parent;
    long cond = h.conductor();
    int n = h.dim();
    int unknowns = w.rank * v.rank; // X_{ij}, i in W, j in V
    Matrix sys(n * unknowns, unknowns, cond);
    for (int a = 0; a < n; ++a) {
        // rho_W(e_a) X - X rho_V(e_a) = 0
        for (int i = 0; i < w.rank; ++i)
            for (int j = 0; j < v.rank; ++j) {
                int row = a * unknowns + i * v.rank + j;
                for (int k = 0; k < w.rank; ++k)
                    sys.at(row, k * v.rank + j) += w.action[a].at(i, k);
                for (int k = 0; k < v.rank; ++k)
                    sys.at(row, i * v.rank + k) -= v.action[a].at(k, j);
            }
    }
    std::vector<Matrix> basis;
    for (const auto& k : span_basis(kernel_basis(sys), cond, unknowns)) {
        Matrix m(w.rank, v.rank, cond);
        for (int i = 0; i < w.rank; ++i)
            for (int j = 0; j < v.rank; ++j) m.at(i, j) = k[i * v.rank + j];
        basis.push_back(std::move(m));
    }
    return basis;
}

IrreducibleData irreducibles(const QuantumGroupoid& h) {
    IrreducibleData out;
    out.wedderburn = wedderburn(h.algebra());
    for (int i = 0; i < out.wedderburn.blocks(); ++i) {
        HModule m;
        m.parent = &h;
        m.rank = out.wedderburn.block_dims[i];
        m.action = out.wedderburn.actions[i];
        m.label = "V" + std::to_string(i);
        out.modules.push_back(std::move(m));
        out.characters.push_back(out.wedderburn.characters[i]);
    }
    return out;
}

} // namespace qg
