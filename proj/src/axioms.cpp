#include "qg/axioms.hpp"

#include <sstream>

namespace qg {

bool AxiomReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string AxiomReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name;
        if (!c.passed && !c.witness.empty()) os << "  witness: " << c.witness;
        os << "\n";
    }
    return os.str();
}

namespace {

Sp basis_sp(long cond, int i) { return {{i, FieldElement::one(cond)}}; }

} // namespace

AxiomReport validate_axioms(const QuantumGroupoid& h) {
    AxiomReport rep;
    const int n = h.dim();
    const long cond = h.conductor();
    const MultTable& A = h.algebra();
    auto push = [&](const std::string& name, bool ok, const std::string& witness) {
        rep.checks.push_back({name, ok, ok ? "" : witness});
    };

    // associativity and unit
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n && ok; ++i) {
            Vec ei = unit_vec(cond, n, i);
            if (A.mul(A.unit, ei) != ei || A.mul(ei, A.unit) != ei) {
                ok = false;
                wit = h.label(i);
            }
        }
        push("algebra-unit", ok, wit);
        ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n; ++k) {
                    Sp l = A.mul(A.t[i][j], basis_sp(cond, k));
                    Sp r = A.mul(basis_sp(cond, i), A.t[j][k]);
                    if (l != r) {
                        ok = false;
                        wit = "(" + h.label(i) + ", " + h.label(j) + ", " + h.label(k) + ")";
                        break;
                    }
                }
        push("algebra-associativity", ok, wit);
    }

    // coassociativity and counit law
    {
        bool ok = true;
        std::string wit;
        std::vector<char> bad(n, 0);
        parallel_for(n, [&](long i) {
            Sp d = h.comul(basis_sp(cond, static_cast<int>(i)));
            if (h.comul_leg(d, 2, 0) != h.comul_leg(d, 2, 1)) bad[i] = 1;
        });
        for (int i = 0; i < n && ok; ++i)
            if (bad[i]) {
                ok = false;
                wit = h.label(i);
            }
        push("coalgebra-coassociativity", ok, wit);
        ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Sp d = h.comul(basis_sp(cond, i));
            Sp l = contract_leg(d, 2, 0, h.counit(), n);
            Sp r = contract_leg(d, 2, 1, h.counit(), n);
            Sp self = basis_sp(cond, i);
            if (l != self || r != self) {
                ok = false;
                wit = h.label(i);
            }
        }
        push("coalgebra-counit", ok, wit);
    }

    // Delta is an algebra map (not necessarily unit-preserving); this is the
    // heaviest exhaustive sweep, so the basis pairs run in parallel.
    {
        std::vector<char> bad(static_cast<size_t>(n) * n, 0);
        parallel_for(static_cast<long>(n) * n, [&](long p) {
            int i = static_cast<int>(p / n), j = static_cast<int>(p % n);
            Sp di = h.comul(basis_sp(cond, i));
            Sp dj = h.comul(basis_sp(cond, j));
            if (h.mul2(di, dj) != h.comul(A.t[i][j])) bad[p] = 1;
        });
        bool ok = true;
        std::string wit;
        for (long p = 0; p < static_cast<long>(n) * n && ok; ++p)
            if (bad[p]) {
                ok = false;
                wit = "(" + h.label(static_cast<int>(p / n)) + ", " + h.label(static_cast<int>(p % n)) + ")";
            }
        push("comultiplication-multiplicative", ok, wit);
    }

    // unit coproduct compatibility:
    // (Delta (x) id)Delta(1) = (Delta(1) (x) 1)(1 (x) Delta(1)) = (1 (x) Delta(1))(Delta(1) (x) 1).
    // Only the middle legs of the two right-hand products interact, so they
    // are assembled directly instead of through a generic three-leg product.
    {
        const Sp& d1 = h.delta_unit();
        Sp lhs = h.comul_leg(d1, 2, 0);
        long n3 = static_cast<long>(n) * n * n;
        Vec rhs1 = zero_vec(cond, static_cast<int>(n3));
        Vec rhs2 = zero_vec(cond, static_cast<int>(n3));
        for (const auto& [ix, cx] : d1) {
            auto lx = tensor_split(ix, n, 2);
            for (const auto& [iy, cy] : d1) {
                auto ly = tensor_split(iy, n, 2);
                FieldElement c = cx * cy;
                // (x1 (x) x2 (x) 1)(1 (x) y1 (x) y2) = x1 (x) x2 y1 (x) y2
                for (const auto& [m, mc] : A.t[lx[1]][ly[0]])
                    rhs1[(lx[0] * n + m) * n + ly[1]].addmul(c, mc);
                // (1 (x) y1 (x) y2)(x1 (x) x2 (x) 1) = x1 (x) y1 x2 (x) y2
                for (const auto& [m, mc] : A.t[ly[0]][lx[1]])
                    rhs2[(lx[0] * n + m) * n + ly[1]].addmul(c, mc);
            }
        }
        Sp r1 = sp_from_dense(rhs1);
        bool ok = (lhs == r1) && (r1 == sp_from_dense(rhs2));
        push("unit-coproduct-compatibility", ok, "Delta(1)");
    }

    // weak multiplicativity of the counit:
    // eps(fgh) = eps(f g_(1)) eps(g_(2) h) = eps(f g_(2)) eps(g_(1) h)
    {
        bool ok = true;
        std::string wit;
        // pair table eps(e_f e_g)
        Matrix ep(n, n, cond);
        for (int f = 0; f < n; ++f)
            for (int g = 0; g < n; ++g) ep.at(f, g) = h.eps(A.t[f][g]);
        for (int g = 0; g < n && ok; ++g) {
            Sp dg = h.comul(basis_sp(cond, g));
            for (int f = 0; f < n && ok; ++f) {
                for (int k = 0; k < n; ++k) {
                    FieldElement lhs = FieldElement::zero(cond);
                    for (const auto& [m, c] : A.t[f][g]) lhs += c * ep.at(static_cast<int>(m), k);
                    FieldElement mid = FieldElement::zero(cond);
                    FieldElement swp = FieldElement::zero(cond);
                    for (const auto& [idx, c] : dg) {
                        auto legs = tensor_split(idx, n, 2);
                        mid += c * ep.at(f, static_cast<int>(legs[0])) * ep.at(static_cast<int>(legs[1]), k);
                        swp += c * ep.at(f, static_cast<int>(legs[1])) * ep.at(static_cast<int>(legs[0]), k);
                    }
                    if (lhs != mid || lhs != swp) {
                        ok = false;
                        wit = "(" + h.label(f) + ", " + h.label(g) + ", " + h.label(k) + ")";
                        break;
                    }
                }
            }
        }
        push("counit-weak-multiplicativity", ok, wit);
    }

    // antipode counital identities
    {
        bool ok_l = true, ok_r = true;
        std::string wit_l, wit_r;
        for (int i = 0; i < n; ++i) {
            Sp d = h.comul(basis_sp(cond, i));
            SpAcc left, right;
            for (const auto& [idx, c] : d) {
                auto legs = tensor_split(idx, n, 2);
                Sp s2 = h.apply_antipode(basis_sp(cond, static_cast<int>(legs[1])));
                left.add(A.mul(Sp{{legs[0], c}}, s2));
                Sp s1 = h.apply_antipode(basis_sp(cond, static_cast<int>(legs[0])));
                right.add(A.mul(sp_scale(c, s1), basis_sp(cond, static_cast<int>(legs[1]))));
            }
            Vec lt = sp_to_dense(left.done(), cond, n);
            Vec rt = sp_to_dense(right.done(), cond, n);
            if (ok_l && lt != h.eps_t().col(i)) {
                ok_l = false;
                wit_l = h.label(i);
            }
            if (ok_r && rt != h.eps_s().col(i)) {
                ok_r = false;
                wit_r = h.label(i);
            }
        }
        push("antipode-left-counital", ok_l, wit_l);
        push("antipode-right-counital", ok_r, wit_r);
    }

    // antipode anti-homomorphism properties
    {
        bool ok = true;
        std::string wit;
        Vec s_unit = h.apply_antipode(h.unit());
        if (s_unit != h.unit()) {
            ok = false;
            wit = "S(1) != 1";
        }
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j) {
                Sp lhs = h.apply_antipode(A.t[i][j]);
                Sp rhs = A.mul(h.apply_antipode(basis_sp(cond, j)), h.apply_antipode(basis_sp(cond, i)));
                if (lhs != rhs) {
                    ok = false;
                    wit = "(" + h.label(i) + ", " + h.label(j) + ")";
                    break;
                }
            }
        push("antipode-anti-multiplicative", ok, wit);

        ok = true;
        wit.clear();
        for (int i = 0; i < n && ok; ++i) {
            FieldElement es = h.eps(h.apply_antipode(basis_sp(cond, i)));
            if (es != h.counit()[i]) {
                ok = false;
                wit = h.label(i) + " (counit)";
                break;
            }
            Sp ds = h.comul(h.apply_antipode(basis_sp(cond, i)));
            Sp d = h.comul(basis_sp(cond, i));
            Sp ss = apply_matrix_leg(apply_matrix_leg(d, 2, 0, h.antipode(), n), 2, 1, h.antipode(), n);
            Sp rhs = permute_legs(ss, 2, {1, 0}, n);
            if (ds != rhs) {
                ok = false;
                wit = h.label(i);
            }
        }
        push("antipode-anti-comultiplicative", ok, wit);
    }

    return rep;
}

} // namespace qg
