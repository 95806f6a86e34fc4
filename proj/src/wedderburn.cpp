#include "qg/wedderburn.hpp"

#include <algorithm>
#include <cmath>

namespace qg {

Matrix trace_form(const MultTable& a) {
    // Tr(L_{e_i} L_{e_j}) = Tr(L_{e_i e_j})
    long cond = a.conductor;
    std::vector<Vec> left_traces; // Tr(L_{e_k}) per basis element
    Vec tr(a.n, FieldElement::zero(cond));
    for (int k = 0; k < a.n; ++k) {
        FieldElement s = FieldElement::zero(cond);
        for (int j = 0; j < a.n; ++j) {
            // coefficient of e_j in e_k e_j
            for (const auto& [idx, c] : a.t[k][j])
                if (idx == j) s += c;
        }
        tr[k] = s;
    }
    Matrix g(a.n, a.n, cond);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            FieldElement s = FieldElement::zero(cond);
            for (const auto& [k, c] : a.t[i][j]) s += c * tr[k];
            g.at(i, j) = s;
        }
    return g;
}

bool is_semisimple(const MultTable& a) { return rank(trace_form(a)) == a.n; }

namespace {

struct Block {
    Vec e;                       // idempotent
    std::vector<Vec> ze;         // basis of Z*e
    std::string unsplit_witness; // last non-linear factor seen on this block
};

std::vector<Vec> center_times(const MultTable& a, const std::vector<Vec>& z, const Vec& e) {
    std::vector<Vec> prods;
    prods.reserve(z.size());
    for (const auto& zi : z) prods.push_back(a.mul(zi, e));
    return span_basis(prods, a.conductor, a.n);
}

// Split one block by the eigenstructure of x restricted to Z*e. Returns the
// refined idempotents, or an empty list when x does not separate anything.
std::vector<Block> split_block(const MultTable& a, const std::vector<Vec>& z, const Block& blk,
                               const Vec& x) {
    Vec xe = a.mul(x, blk.e);
    Poly p = relative_minimal_polynomial(a, xe, blk.ze, blk.e);
    if (poly_deg(p) <= 1) return {};
    auto roots = roots_in_field(p);
    // factor p = prod (t - lambda)^m * q with q rootless
    std::vector<Poly> factors;
    Poly rem = p;
    long cond = a.conductor;
    for (const auto& lam : roots) {
        Poly lin = {-lam, FieldElement::one(cond)};
        Poly f = {FieldElement::one(cond)};
        for (;;) {
            Poly q, r;
            poly_divmod(rem, lin, q, r);
            if (!r.empty()) break;
            rem = q;
            f = poly_mul(f, lin);
        }
        factors.push_back(f);
    }
    std::string rootless;
    if (poly_deg(rem) >= 1) {
        rootless = poly_str(rem);
        factors.push_back(rem);
    }
    if (factors.size() <= 1) return {};

    std::vector<Block> out;
    for (const auto& f : factors) {
        Poly g, q, r;
        poly_divmod(p, f, g, r);
        if (!r.empty()) throw InternalError("factor does not divide the minimal polynomial");
        Poly gg, u, v;
        poly_xgcd(f, g, gg, u, v);
        if (poly_deg(gg) != 0) throw InternalError("minimal polynomial factors are not coprime");
        // idempotent for factor f: (v*g)(x) restricted to the block
        Poly vg = poly_mul(v, g);
        Vec eps = algebra_poly_eval(a, vg, xe, blk.e);
        if (is_zero_vec(eps)) throw InternalError("vanishing idempotent during center splitting");
        Block nb;
        nb.e = eps;
        nb.ze = center_times(a, z, eps);
        nb.unsplit_witness = (poly_deg(f) >= 2 && !rootless.empty() && poly_str(f) == rootless)
                                 ? rootless
                                 : blk.unsplit_witness;
        out.push_back(std::move(nb));
    }
    // sanity: idempotents sum to the original and are orthogonal
    Vec sum = zero_vec(a.conductor, a.n);
    for (const auto& b : out) sum = add(sum, b.e);
    if (sum != blk.e) throw InternalError("center splitting lost the block idempotent");
    for (const auto& b : out)
        if (a.mul(b.e, b.e) != b.e) throw InternalError("center splitting produced a non-idempotent");
    return out;
}

// Primitive idempotent inside the (split simple) block with unit e, found by
// iteratively shrinking corners f*B*f. Candidate elements are drawn from a
// deterministic sequence; every split is certified by exact arithmetic.
Vec primitive_idempotent(const MultTable& a, const Vec& e, std::string* notsplit_witness) {
    Vec f = e;
    for (;;) {
        // corner basis of f*H*f
        std::vector<Vec> corner;
        for (int i = 0; i < a.n; ++i) {
            Vec ei = unit_vec(a.conductor, a.n, i);
            corner.push_back(a.mul(f, a.mul(ei, f)));
        }
        corner = span_basis(corner, a.conductor, a.n);
        if (corner.size() == 1) return f;

        // candidate sequence: basis, pairwise sums, pairwise products, shifted sums
        std::vector<Vec> cands;
        for (const auto& c : corner) cands.push_back(c);
        for (size_t i = 0; i < corner.size(); ++i)
            for (size_t j = i + 1; j < corner.size(); ++j) cands.push_back(add(corner[i], corner[j]));
        for (size_t i = 0; i < corner.size(); ++i)
            for (size_t j = 0; j < corner.size(); ++j) cands.push_back(a.mul(corner[i], corner[j]));
        for (long m = 2; m <= static_cast<long>(corner.size()) + 2; ++m)
            for (size_t i = 0; i < corner.size(); ++i)
                for (size_t j = 0; j < corner.size(); ++j) {
                    if (i == j) continue;
                    cands.push_back(add(corner[i], scale(FieldElement::integer(m, a.conductor), corner[j])));
                }

        bool advanced = false;
        bool saw_rootless = false;
        std::string witness;
        for (const auto& x : cands) {
            Poly p = relative_minimal_polynomial(a, x, corner, f);
            if (poly_deg(p) <= 1) continue;
            auto roots = roots_in_field(p);
            if (roots.empty()) {
                saw_rootless = true;
                witness = poly_str(p);
                continue;
            }
            // peel the first eigenvalue's idempotent off
            const FieldElement& lam = roots[0];
            Poly lin = {-lam, FieldElement::one(a.conductor)};
            Poly powf = {FieldElement::one(a.conductor)};
            Poly rem = p;
            for (;;) {
                Poly q, r;
                poly_divmod(rem, lin, q, r);
                if (!r.empty()) break;
                rem = q;
                powf = poly_mul(powf, lin);
            }
            if (poly_deg(rem) < 1) continue; // x acts with a single eigenvalue
            Poly g = rem, gg, u, v;
            poly_xgcd(powf, g, gg, u, v);
            if (poly_deg(gg) != 0) continue;
            Vec eps = algebra_poly_eval(a, poly_mul(v, g), x, f);
            if (is_zero_vec(eps) || eps == f) continue;
            if (a.mul(eps, eps) != eps) throw InternalError("corner split produced a non-idempotent");
            f = eps;
            advanced = true;
            break;
        }
        if (!advanced) {
            if (saw_rootless && notsplit_witness) {
                *notsplit_witness = witness;
                return {};
            }
            throw InternalError("primitive idempotent search exhausted its candidate sequence");
        }
    }
}

} // namespace

WedderburnData wedderburn(const MultTable& a) {
    if (!is_semisimple(a)) throw NotSemisimpleError();
    long cond = a.conductor;
    std::vector<Vec> z = center_basis(a);

    std::vector<Block> blocks;
    {
        Block b;
        b.e = a.unit;
        b.ze = z;
        blocks.push_back(std::move(b));
    }

    // deterministic splitting sequence over the center
    std::vector<Vec> sequence;
    for (const auto& zi : z) sequence.push_back(zi);
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) sequence.push_back(add(z[i], z[j]));
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i; j < z.size(); ++j) sequence.push_back(a.mul(z[i], z[j]));
    for (long m = 2; m <= static_cast<long>(z.size()) + 2; ++m)
        for (size_t i = 0; i < z.size(); ++i)
            for (size_t j = 0; j < z.size(); ++j) {
                if (i == j) continue;
                sequence.push_back(add(z[i], scale(FieldElement::integer(m, cond), z[j])));
            }

    for (const auto& x : sequence) {
        bool all_primitive = true;
        for (const auto& b : blocks)
            if (b.ze.size() > 1) all_primitive = false;
        if (all_primitive) break;
        std::vector<Block> next;
        for (const auto& b : blocks) {
            if (b.ze.size() <= 1) {
                next.push_back(b);
                continue;
            }
            auto parts = split_block(a, z, b, x);
            if (parts.empty())
                next.push_back(b);
            else
                for (auto& p : parts) next.push_back(std::move(p));
        }
        blocks = std::move(next);
    }

    for (const auto& b : blocks) {
        if (b.ze.size() > 1) {
            std::string w = b.unsplit_witness.empty() ? "(center block of dimension " +
                                                            std::to_string(b.ze.size()) + ")"
                                                      : b.unsplit_witness;
            throw NotSplitError(w);
        }
    }

    WedderburnData wd;
    for (const auto& b : blocks) {
        // block algebra dimension and matrix size
        std::vector<Vec> ideal;
        for (int i = 0; i < a.n; ++i) ideal.push_back(a.mul(unit_vec(cond, a.n, i), b.e));
        ideal = span_basis(ideal, cond, a.n);
        long bd = static_cast<long>(ideal.size());
        long d = std::lround(std::sqrt(static_cast<double>(bd)));
        if (d * d != bd)
            throw NotSplitError("(block of dimension " + std::to_string(bd) + " is not a matrix algebra)");

        // character from the regular trace on the ideal: chi(x) = Tr(L_x|ideal)/d
        Vec chi(a.n, FieldElement::zero(cond));
        FieldElement dinv = FieldElement::integer(d, cond).inverse();
        for (int i = 0; i < a.n; ++i) {
            Vec ei = unit_vec(cond, a.n, i);
            FieldElement tr = FieldElement::zero(cond);
            for (size_t j = 0; j < ideal.size(); ++j) {
                Vec img = a.mul(ei, ideal[j]);
                auto coords = coords_in_span(ideal, img, cond, a.n);
                if (!coords) throw InternalError("block ideal is not left-invariant");
                tr += (*coords)[j];
            }
            chi[i] = tr * dinv;
        }

        std::string notsplit;
        Vec f = primitive_idempotent(a, b.e, &notsplit);
        if (f.empty()) throw NotSplitError(notsplit);

        // minimal left ideal H*f and the action on it
        std::vector<Vec> mod;
        for (int i = 0; i < a.n; ++i) mod.push_back(a.mul(unit_vec(cond, a.n, i), f));
        mod = span_basis(mod, cond, a.n);
        if (static_cast<long>(mod.size()) != d)
            throw InternalError("minimal left ideal has unexpected dimension");
        std::vector<Matrix> act;
        for (int i = 0; i < a.n; ++i) {
            Matrix rho(static_cast<int>(d), static_cast<int>(d), cond);
            for (long j = 0; j < d; ++j) {
                Vec img = a.mul(unit_vec(cond, a.n, i), mod[j]);
                auto coords = coords_in_span(mod, img, cond, a.n);
                if (!coords) throw InternalError("module basis is not invariant");
                rho.set_col(static_cast<int>(j), *coords);
            }
            act.push_back(std::move(rho));
        }

        wd.idempotents.push_back(b.e);
        wd.block_dims.push_back(static_cast<int>(d));
        wd.characters.push_back(chi);
        wd.actions.push_back(std::move(act));
        wd.module_bases.push_back(std::move(mod));
    }

    // canonical order: ascending dimension, then lexicographic character values
    std::vector<int> order(wd.blocks());
    for (int i = 0; i < wd.blocks(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (wd.block_dims[x] != wd.block_dims[y]) return wd.block_dims[x] < wd.block_dims[y];
        for (int k = 0; k < a.n; ++k) {
            int c = wd.characters[x][k].cmp(wd.characters[y][k]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    WedderburnData sorted;
    for (int i : order) {
        sorted.idempotents.push_back(wd.idempotents[i]);
        sorted.block_dims.push_back(wd.block_dims[i]);
        sorted.characters.push_back(wd.characters[i]);
        sorted.actions.push_back(wd.actions[i]);
        sorted.module_bases.push_back(wd.module_bases[i]);
    }

    // re-verify the defining identities by direct multiplication
    Vec sum = zero_vec(cond, a.n);
    long dimsum = 0;
    for (int i = 0; i < sorted.blocks(); ++i) {
        sum = add(sum, sorted.idempotents[i]);
        dimsum += static_cast<long>(sorted.block_dims[i]) * sorted.block_dims[i];
        for (int j = 0; j < sorted.blocks(); ++j) {
            Vec prod = a.mul(sorted.idempotents[i], sorted.idempotents[j]);
            if (i == j ? prod != sorted.idempotents[i] : !is_zero_vec(prod))
                throw InternalError("central idempotents are not orthogonal");
        }
        Matrix lm = a.left_mult(sorted.idempotents[i]);
        Matrix rm = a.right_mult(sorted.idempotents[i]);
        if (lm != rm) throw InternalError("central idempotent fails to be central");
        FieldElement chi1 = dot(sorted.characters[i], a.unit);
        if (chi1 != FieldElement::integer(sorted.block_dims[i], cond))
            throw InternalError("character value at the unit disagrees with the block dimension");
    }
    if (sum != a.unit) throw InternalError("central idempotents do not sum to the unit");
    if (dimsum != a.n) throw NotSplitError("(sum of squared block dimensions misses the algebra dimension)");
    return sorted;
}

} // namespace qg
