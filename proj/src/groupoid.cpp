#include "qg/groupoid.hpp"

namespace qg {

QuantumGroupoid::QuantumGroupoid(MultTable mul, std::vector<Sp> comul, Vec counit, Matrix antipode,
                                 std::vector<std::string> labels)
    : mul_(std::move(mul)), comul_(std::move(comul)), counit_(std::move(counit)),
      antipode_(std::move(antipode)), labels_(std::move(labels)) {
    int n = mul_.n;
    if (static_cast<int>(comul_.size()) != n) throw ShapeError("comultiplication table has wrong length");
    if (static_cast<int>(counit_.size()) != n) throw ShapeError("counit has wrong length");
    if (antipode_.rows() != n || antipode_.cols() != n) throw ShapeError("antipode has wrong shape");
    if (static_cast<int>(mul_.unit.size()) != n) throw ShapeError("unit has wrong length");
    if (static_cast<int>(mul_.t.size()) != n) throw ShapeError("multiplication table has wrong shape");
    mul_.build_pair_table();

    delta1_ = this->comul(sp_from_dense(mul_.unit));
    delta1_op_ = permute_legs(delta1_, 2, {1, 0}, n);

    long cond = mul_.conductor;
    eps_t_ = Matrix(n, n, cond);
    eps_s_ = Matrix(n, n, cond);
    for (int h = 0; h < n; ++h) {
        // eps_t(h) = sum eps(1_(1) h) 1_(2);  eps_s(h) = sum 1_(1) eps(h 1_(2))
        SpAcc t_acc, s_acc;
        Sp eh = {{h, FieldElement::one(cond)}};
        for (const auto& [idx, c] : delta1_) {
            auto legs = tensor_split(idx, n, 2);
            Sp left_h = mul_.mul(Sp{{legs[0], c}}, eh);
            FieldElement w = FieldElement::zero(cond);
            for (const auto& [i, cc] : left_h) w += cc * counit_[i];
            t_acc.add(legs[1], w);
            Sp h_right = mul_.mul(eh, Sp{{legs[1], c}});
            FieldElement w2 = FieldElement::zero(cond);
            for (const auto& [i, cc] : h_right) w2 += cc * counit_[i];
            s_acc.add(legs[0], w2);
        }
        for (const auto& [i, c] : t_acc.done()) eps_t_.at(static_cast<int>(i), h) = c;
        for (const auto& [i, c] : s_acc.done()) eps_s_.at(static_cast<int>(i), h) = c;
    }
}

std::string QuantumGroupoid::label(int i) const {
    if (i < static_cast<int>(labels_.size()) && !labels_[i].empty()) return labels_[i];
    return "e" + std::to_string(i);
}

Sp QuantumGroupoid::comul(const Sp& x) const {
    SpAcc acc;
    for (const auto& [i, c] : x) acc.add(comul_[i], c);
    return acc.done();
}

Sp QuantumGroupoid::comul_leg(const Sp& x, int k, int leg) const {
    int n = mul_.n;
    SpAcc acc;
    for (const auto& [idx, c] : x) {
        auto legs = tensor_split(idx, n, k);
        for (const auto& [didx, dc] : comul_[legs[leg]]) {
            auto dlegs = tensor_split(didx, n, 2);
            std::vector<long> out;
            out.reserve(k + 1);
            for (int i = 0; i < k; ++i) {
                if (i == leg) {
                    out.push_back(dlegs[0]);
                    out.push_back(dlegs[1]);
                } else {
                    out.push_back(legs[i]);
                }
            }
            acc.add(tensor_index(out, n), c * dc);
        }
    }
    return acc.done();
}

FieldElement QuantumGroupoid::eps(const Sp& x) const {
    FieldElement s = FieldElement::zero(mul_.conductor);
    for (const auto& [i, c] : x) s += c * counit_[i];
    return s;
}

FieldElement QuantumGroupoid::eps(const Vec& x) const { return dot(counit_, x); }

Sp QuantumGroupoid::apply_antipode(const Sp& x) const {
    return apply_matrix_leg(x, 1, 0, antipode_, mul_.n);
}

Sp QuantumGroupoid::delta_unit_k(int k) const {
    Sp d = {{0, FieldElement::one(mul_.conductor)}};
    // start from 1 on one leg, apply comultiplication k-1 times to the last leg
    d = sp_from_dense(mul_.unit);
    for (int legs = 1; legs < k; ++legs) d = comul_leg(d, legs, legs - 1);
    return d;
}

Matrix QuantumGroupoid::ad1_left() const {
    int n = mul_.n;
    Matrix m(n, n, mul_.conductor);
    for (int h = 0; h < n; ++h) {
        SpAcc acc;
        Sp eh = {{h, FieldElement::one(mul_.conductor)}};
        for (const auto& [idx, c] : delta1_) {
            auto legs = tensor_split(idx, n, 2);
            Sp s2 = apply_antipode(Sp{{legs[1], FieldElement::one(mul_.conductor)}});
            Sp prod = mul_.mul(mul_.mul(Sp{{legs[0], c}}, eh), s2);
            acc.add(prod);
        }
        for (const auto& [i, c] : acc.done()) m.at(static_cast<int>(i), h) = c;
    }
    return m;
}

Matrix QuantumGroupoid::ad1_right() const {
    int n = mul_.n;
    Matrix m(n, n, mul_.conductor);
    for (int h = 0; h < n; ++h) {
        SpAcc acc;
        Sp eh = {{h, FieldElement::one(mul_.conductor)}};
        for (const auto& [idx, c] : delta1_) {
            auto legs = tensor_split(idx, n, 2);
            Sp s1 = apply_antipode(Sp{{legs[0], FieldElement::one(mul_.conductor)}});
            Sp prod = mul_.mul(mul_.mul(sp_scale(c, s1), eh), Sp{{legs[1], FieldElement::one(mul_.conductor)}});
            acc.add(prod);
        }
        for (const auto& [i, c] : acc.done()) m.at(static_cast<int>(i), h) = c;
    }
    return m;
}

Vec QuantumGroupoid::apply_star(const Vec& x) const {
    if (!star) throw Error("no star structure attached");
    return star->matrix * conj_coeffs(x);
}

Vec conj_coeffs(const Vec& x) {
    Vec r = x;
    for (auto& c : r) c = c.conjugate();
    return r;
}

Matrix conj_coeffs(const Matrix& m) {
    Matrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).conjugate();
    return r;
}

} // namespace qg
