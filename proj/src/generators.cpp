#include "qg/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "qg/axioms.hpp"
#include "qg/structure.hpp"
#include "qg/wedderburn.hpp"

namespace qg {

// ---------------------------------------------------------------------------
// groupoids
// ---------------------------------------------------------------------------

void GroupoidSpec::validate() const {
    int m = size();
    if (static_cast<int>(composition.size()) != m || static_cast<int>(inverses.size()) != m)
        throw InvalidGroupoid("composition/inverse tables do not match the morphism count");
    if (static_cast<int>(identities.size()) != static_cast<int>(objects.size()))
        throw InvalidGroupoid("one identity morphism required per object");
    for (int o = 0; o < static_cast<int>(objects.size()); ++o) {
        int id = identities[o];
        if (morphisms[id].source != o || morphisms[id].target != o)
            throw InvalidGroupoid("identity morphism has wrong endpoints");
    }
    for (int g = 0; g < m; ++g) {
        for (int h = 0; h < m; ++h) {
            bool composable = morphisms[g].source == morphisms[h].target;
            int gh = composition[g][h];
            if (composable != (gh >= 0))
                throw InvalidGroupoid("composability does not match the composition table");
            if (gh >= 0) {
                if (morphisms[gh].source != morphisms[h].source ||
                    morphisms[gh].target != morphisms[g].target)
                    throw InvalidGroupoid("composite has wrong endpoints");
            }
        }
        int gi = inverses[g];
        if (composition[g][gi] != identities[morphisms[g].target] ||
            composition[gi][g] != identities[morphisms[g].source])
            throw InvalidGroupoid("inverse table is wrong");
        if (composition[g][identities[morphisms[g].source]] != g ||
            composition[identities[morphisms[g].target]][g] != g)
            throw InvalidGroupoid("identities fail to be neutral");
    }
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g)
            for (int h = 0; h < m; ++h) {
                int gh = composition[g][h];
                int fg = composition[f][g];
                if (gh >= 0 && fg >= 0 && composition[f][gh] != composition[fg][h])
                    throw InvalidGroupoid("composition is not associative");
            }
}

GroupoidSpec GroupoidSpec::pair_groupoid(int n) {
    GroupoidSpec g;
    for (int i = 0; i < n; ++i) g.objects.push_back("X" + std::to_string(i));
    // morphism (i <- j), index i*n + j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.morphisms.push_back({j, i, "(" + std::to_string(i) + "<-" + std::to_string(j) + ")"});
    g.composition.assign(n * n, std::vector<int>(n * n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) g.composition[i * n + j][k * n + l] = i * n + l;
    g.inverses.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.inverses[i * n + j] = j * n + i;
    for (int i = 0; i < n; ++i) g.identities.push_back(i * n + i);
    g.validate();
    return g;
}

GroupoidSpec GroupoidSpec::cyclic_group(int n) {
    GroupoidSpec g;
    g.objects.push_back("*");
    for (int i = 0; i < n; ++i) g.morphisms.push_back({0, 0, "g^" + std::to_string(i)});
    g.morphisms[0].label = "1";
    g.composition.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.composition[i][j] = (i + j) % n;
    for (int i = 0; i < n; ++i) g.inverses.push_back((n - i) % n);
    g.identities.push_back(0);
    g.validate();
    return g;
}

GroupoidSpec GroupoidSpec::symmetric_group_3() {
    // permutations of {0,1,2} listed deterministically
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                             {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::string> names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
    auto find = [&](const std::array<int, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw InternalError("permutation lookup failed");
    };
    GroupoidSpec g;
    g.objects.push_back("*");
    for (size_t i = 0; i < perms.size(); ++i) g.morphisms.push_back({0, 0, names[i]});
    g.composition.assign(6, std::vector<int>(6, -1));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            g.composition[a][b] = find(c);
        }
    for (int a = 0; a < 6; ++a) {
        std::array<int, 3> inv{};
        for (int x = 0; x < 3; ++x) inv[perms[a][x]] = x;
        g.inverses.push_back(find(inv));
    }
    g.identities.push_back(0);
    g.validate();
    return g;
}

GroupoidSpec GroupoidSpec::disjoint_units(int n) {
    GroupoidSpec g;
    for (int i = 0; i < n; ++i) {
        g.objects.push_back("X" + std::to_string(i));
        g.morphisms.push_back({i, i, "id" + std::to_string(i)});
        g.identities.push_back(i);
        g.inverses.push_back(i);
    }
    g.composition.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) g.composition[i][i] = i;
    g.validate();
    return g;
}

QuantumGroupoid groupoid_algebra(const GroupoidSpec& g, bool dual_side) {
    g.validate();
    const long cond = 1;
    const int n = g.size();
    MultTable mt;
    mt.conductor = cond;
    mt.n = n;
    mt.t.assign(n, std::vector<Sp>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = g.composition[i][j];
            if (c >= 0) mt.t[i][j] = {{c, FieldElement::one(cond)}};
        }
    mt.unit = zero_vec(cond, n);
    for (int id : g.identities) mt.unit[id] = FieldElement::one(cond);

    std::vector<Sp> comul(n);
    Vec counit = zero_vec(cond, n);
    Matrix s(n, n, cond);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        comul[i] = {{static_cast<long>(i) * n + i, FieldElement::one(cond)}};
        counit[i] = FieldElement::one(cond);
        s.at(g.inverses[i], i) = FieldElement::one(cond);
        labels.push_back(g.morphisms[i].label);
    }
    QuantumGroupoid h(std::move(mt), std::move(comul), std::move(counit), std::move(s), std::move(labels));
    // involution from morphism inversion: x* = x^{-1} on the basis
    Matrix st(n, n, cond);
    for (int i = 0; i < n; ++i) st.at(g.inverses[i], i) = FieldElement::one(cond);
    h.star = StarData{st};
    if (!dual_side) return h;
    QuantumGroupoid d = dual(h);
    std::vector<std::string> plabels;
    for (int i = 0; i < n; ++i) plabels.push_back("p_" + g.morphisms[i].label);
    QuantumGroupoid out(d.algebra(), d.comul_table(), d.counit(), d.antipode(), plabels);
    out.star = d.star;
    return out;
}

// ---------------------------------------------------------------------------
// multi-matrix algebras B = sum of matrix blocks, with separability data
// ---------------------------------------------------------------------------

namespace {

struct MultiMatrix {
    long cond = 1;
    std::vector<int> sizes;
    int dim = 0;
    std::vector<int> offset; // block start index
    MultTable table;
    Sp sep;        // symmetric separability idempotent in B (x) B
    Vec omega;     // trace of the left regular representation, as a covector
    Matrix bstar;  // blockwise transpose (the matrix-unit involution)

    int idx(int alpha, int i, int j) const { return offset[alpha] + i * sizes[alpha] + j; }
};

MultiMatrix multi_matrix(const std::vector<int>& sizes, long cond) {
    MultiMatrix b;
    b.cond = cond;
    b.sizes = sizes;
    for (int s : sizes) {
        if (s <= 0) throw BadPartition("block sizes must be positive");
        b.offset.push_back(b.dim);
        b.dim += s * s;
    }
    b.table.conductor = cond;
    b.table.n = b.dim;
    b.table.t.assign(b.dim, std::vector<Sp>(b.dim));
    b.table.unit = zero_vec(cond, b.dim);
    b.omega = zero_vec(cond, b.dim);
    b.bstar = Matrix(b.dim, b.dim, cond);
    for (size_t a = 0; a < sizes.size(); ++a) {
        int na = sizes[a];
        for (int i = 0; i < na; ++i) {
            b.table.unit[b.idx(a, i, i)] = FieldElement::one(cond);
            b.omega[b.idx(a, i, i)] = FieldElement::integer(na, cond);
            for (int j = 0; j < na; ++j) {
                b.bstar.at(b.idx(a, j, i), b.idx(a, i, j)) = FieldElement::one(cond);
                for (int k = 0; k < na; ++k)
                    for (int l = 0; l < na; ++l)
                        if (j == k)
                            b.table.t[b.idx(a, i, j)][b.idx(a, k, l)] = {
                                {b.idx(a, i, l), FieldElement::one(cond)}};
            }
        }
    }
    SpAcc sep;
    for (size_t a = 0; a < sizes.size(); ++a) {
        int na = sizes[a];
        FieldElement w = FieldElement::integer(na, cond).inverse();
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j)
                sep.add(static_cast<long>(b.idx(a, i, j)) * b.dim + b.idx(a, j, i), w);
    }
    b.sep = sep.done();
    return b;
}

std::string block_label(const MultiMatrix& b, int p) {
    for (size_t a = 0; a < b.sizes.size(); ++a) {
        int na = b.sizes[a];
        if (p < b.offset[a] + na * na) {
            int loc = p - b.offset[a];
            return "E" + std::to_string(a) + "_" + std::to_string(loc / na) + std::to_string(loc % na);
        }
    }
    return "?";
}

} // namespace

QuantumGroupoid elementary(const std::vector<int>& partition) {
    if (partition.empty()) throw BadPartition("partition must be nonempty");
    const long cond = 1;
    MultiMatrix b = multi_matrix(partition, cond);
    const int nb = b.dim;
    const int n = nb * nb; // dim End(B)
    auto hidx = [&](int p, int q) { return static_cast<long>(p) * nb + q; };

    MultTable mt;
    mt.conductor = cond;
    mt.n = n;
    mt.t.assign(n, std::vector<Sp>(n));
    mt.unit = zero_vec(cond, n);
    for (int p = 0; p < nb; ++p) {
        mt.unit[hidx(p, p)] = FieldElement::one(cond);
        for (int q = 0; q < nb; ++q)
            for (int r = 0; r < nb; ++r)
                for (int s = 0; s < nb; ++s)
                    if (q == r) mt.t[hidx(p, q)][hidx(r, s)] = {{hidx(p, s), FieldElement::one(cond)}};
    }

    // Delta(T)(x (x) y) = (T(xy) e') (x) e''
    std::vector<Sp> comul(n);
    for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q) {
            SpAcc acc;
            for (int r = 0; r < nb; ++r)
                for (int s = 0; s < nb; ++s) {
                    FieldElement m_rsq = FieldElement::zero(cond);
                    for (const auto& [u, c] : b.table.t[r][s])
                        if (u == q) m_rsq += c;
                    if (m_rsq.is_zero()) continue;
                    for (const auto& [sidx, sc] : b.sep) {
                        auto legs = tensor_split(sidx, nb, 2);
                        Sp left = b.table.mul(Sp{{p, FieldElement::one(cond)}},
                                              Sp{{legs[0], FieldElement::one(cond)}});
                        for (const auto& [u2, c2] : left)
                            acc.add(hidx(static_cast<int>(u2), r) * static_cast<long>(n) +
                                        hidx(static_cast<int>(legs[1]), s),
                                    m_rsq * sc * c2);
                    }
                }
            comul[hidx(p, q)] = acc.done();
        }

    Vec counit = zero_vec(cond, n);
    for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q) counit[hidx(p, q)] = b.table.unit[q] * b.omega[p];

    // S(T) = G^{-1} T^t G with G the omega-form Gram matrix
    Matrix g(nb, nb, cond);
    for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q) {
            Vec prod = b.table.mul(unit_vec(cond, nb, p), unit_vec(cond, nb, q));
            g.at(p, q) = dot(b.omega, prod);
        }
    Matrix ginv = *inverse(g);
    Matrix s(n, n, cond);
    for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q)
            for (int x = 0; x < nb; ++x)
                for (int y = 0; y < nb; ++y) {
                    FieldElement v = ginv.at(x, q) * g.at(p, y);
                    if (!v.is_zero()) s.at(static_cast<int>(hidx(x, y)), static_cast<int>(hidx(p, q))) = v;
                }

    std::vector<std::string> labels;
    for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q)
            labels.push_back("T[" + block_label(b, p) + "," + block_label(b, q) + "]");

    QuantumGroupoid h(std::move(mt), std::move(comul), std::move(counit), std::move(s),
                      std::move(labels));

    // canonical corner R-matrix
    SpAcc racc;
    for (size_t a = 0; a < partition.size(); ++a) {
        int na = partition[a];
        FieldElement w = FieldElement::integer(na, cond).inverse();
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j)
                for (int k = 0; k < na; ++k)
                    for (int l = 0; l < na; ++l) {
                        long first = hidx(b.idx(a, j, l), b.idx(a, i, k));
                        long second = hidx(b.idx(a, i, j), b.idx(a, k, l));
                        racc.add(first * n + second, w);
                    }
    }
    Sp r = racc.done();
    Sp rbar = apply_matrix_leg(r, 2, 0, h.antipode(), n);
    h.r_matrix = RMatrixData{r, rbar};
    h.ribbon = h.unit();

    // Hermitian-adjoint star: T* = Gh^{-1} T^t Gh with Gh = omega(x* y), diagonal
    Matrix gh(nb, nb, cond);
    for (int p = 0; p < nb; ++p) {
        Vec ps = b.bstar * unit_vec(cond, nb, p);
        for (int q = 0; q < nb; ++q) gh.at(p, q) = dot(b.omega, b.table.mul(ps, unit_vec(cond, nb, q)));
    }
    Matrix ghinv = *inverse(gh);
    Matrix st(n, n, cond);
    for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q)
            for (int x = 0; x < nb; ++x)
                for (int y = 0; y < nb; ++y) {
                    FieldElement v = ghinv.at(x, q) * gh.at(p, y);
                    if (!v.is_zero()) st.at(static_cast<int>(hidx(x, y)), static_cast<int>(hidx(p, q))) = v;
                }
    h.star = StarData{st};
    return h;
}

BopbResult bopb(const std::vector<int>& blocks, const std::vector<FieldElement>& q_diag, long conductor) {
    MultiMatrix b = multi_matrix(blocks, conductor);
    const long cond = conductor;
    const int nb = b.dim;
    const int n = nb * nb;
    auto hidx = [&](int p, int q) { return static_cast<long>(p) * nb + q; };

    // q as an element of B (diagonal entries blockwise); default q = 1
    Vec q = b.table.unit;
    if (!q_diag.empty()) {
        int expected = 0;
        for (int sz : blocks) expected += sz;
        if (static_cast<int>(q_diag.size()) != expected)
            throw QNotInvertible("q must list one diagonal entry per matrix row");
        q = zero_vec(cond, nb);
        int at = 0;
        for (size_t a = 0; a < blocks.size(); ++a)
            for (int i = 0; i < blocks[a]; ++i) q[b.idx(static_cast<int>(a), i, i)] = q_diag[at++];
    }
    auto qinv_opt = b.table.inverse(q);
    if (!qinv_opt) throw QNotInvertible("q is not invertible");
    Vec qinv = *qinv_opt;
    // pi(q) = sum e' q e'' must be 1
    {
        SpAcc acc;
        for (const auto& [sidx, sc] : b.sep) {
            auto legs = tensor_split(sidx, nb, 2);
            Sp prod = b.table.mul(b.table.mul(Sp{{legs[0], sc}}, sp_from_dense(q)),
                                  Sp{{legs[1], FieldElement::one(cond)}});
            acc.add(prod);
        }
        if (sp_to_dense(acc.done(), cond, nb) != b.table.unit)
            throw QNotNormalized("pi(q) != 1; rescale q blockwise");
    }

    MultTable mt;
    mt.conductor = cond;
    mt.n = n;
    mt.t.assign(n, std::vector<Sp>(n));
    mt.unit = zero_vec(cond, n);
    for (int p = 0; p < nb; ++p)
        for (int s = 0; s < nb; ++s) mt.unit[hidx(p, s)] = b.table.unit[p] * b.table.unit[s];
    for (int p = 0; p < nb; ++p)
        for (int q1 = 0; q1 < nb; ++q1)
            for (int r = 0; r < nb; ++r)
                for (int s = 0; s < nb; ++s) {
                    // (b (x) c)(b' (x) c') = b'b (x) cc'
                    Sp left = b.table.t[r][p];
                    Sp right = b.table.t[q1][s];
                    SpAcc acc;
                    for (const auto& [u, cu] : left)
                        for (const auto& [v, cv] : right) acc.add(hidx(static_cast<int>(u), static_cast<int>(v)), cu * cv);
                    mt.t[hidx(p, q1)][hidx(r, s)] = acc.done();
                }

    // Delta(b (x) c) = (b (x) e' q^{-1}) (x) (e'' (x) c)
    std::vector<Sp> comul(n);
    for (int p = 0; p < nb; ++p)
        for (int c = 0; c < nb; ++c) {
            SpAcc acc;
            for (const auto& [sidx, sc] : b.sep) {
                auto legs = tensor_split(sidx, nb, 2);
                Sp eq = b.table.mul(Sp{{legs[0], sc}}, sp_from_dense(qinv));
                for (const auto& [u, cu] : eq)
                    acc.add(hidx(p, static_cast<int>(u)) * static_cast<long>(n) + hidx(static_cast<int>(legs[1]), c), cu);
            }
            comul[hidx(p, c)] = acc.done();
        }

    Vec counit = zero_vec(cond, n);
    for (int p = 0; p < nb; ++p)
        for (int c = 0; c < nb; ++c) {
            Vec prod = b.table.mul(q, b.table.mul(unit_vec(cond, nb, p), unit_vec(cond, nb, c)));
            counit[hidx(p, c)] = dot(b.omega, prod);
        }

    Matrix s(n, n, cond);
    for (int p = 0; p < nb; ++p)
        for (int c = 0; c < nb; ++c) {
            // S(b (x) c) = q^{-1} c q (x) b
            Vec qcq = b.table.mul(qinv, b.table.mul(unit_vec(cond, nb, c), q));
            for (int u = 0; u < nb; ++u)
                if (!qcq[u].is_zero()) s.at(static_cast<int>(hidx(u, p)), static_cast<int>(hidx(p, c))) = qcq[u];
        }

    std::vector<std::string> labels;
    for (int p = 0; p < nb; ++p)
        for (int c = 0; c < nb; ++c)
            labels.push_back(block_label(b, p) + "(x)" + block_label(b, c));

    QuantumGroupoid h(std::move(mt), std::move(comul), std::move(counit), std::move(s),
                      std::move(labels));

    // star (b (x) c)* = b* (x) q c* q^{-1}, valid when q is self-adjoint
    Vec qstar = b.bstar * conj_coeffs(q);
    if (qstar == q) {
        Matrix st(n, n, cond);
        for (int p = 0; p < nb; ++p)
            for (int c = 0; c < nb; ++c) {
                Vec bs = b.bstar * unit_vec(cond, nb, p);
                Vec cs = b.table.mul(q, b.table.mul(b.bstar * unit_vec(cond, nb, c), qinv));
                for (int u = 0; u < nb; ++u)
                    for (int v = 0; v < nb; ++v) {
                        FieldElement val = bs[u] * cs[v];
                        if (!val.is_zero())
                            st.at(static_cast<int>(hidx(u, v)), static_cast<int>(hidx(p, c))) = val;
                    }
            }
        h.star = StarData{st};
    }

    BopbResult res{std::move(h), zero_vec(cond, n)};
    for (int p = 0; p < nb; ++p)
        for (int c = 0; c < nb; ++c) res.g_q[hidx(p, c)] = q[p] * q[c];
    return res;
}

QuantumGroupoid transformation_groupoid(const GroupoidSpec& group,
                                        const std::vector<std::vector<int>>& action, int n_points) {
    group.validate();
    if (group.objects.size() != 1) throw InvalidAction("the acting structure must be a group (one object)");
    const int ng = group.size();
    const int nx = n_points;
    if (static_cast<int>(action.size()) != ng) throw InvalidAction("action table must cover every group element");
    for (const auto& row : action) {
        if (static_cast<int>(row.size()) != nx) throw InvalidAction("action table row has wrong length");
        for (int v : row)
            if (v < 0 || v >= nx) throw InvalidAction("action image out of range");
    }
    int e = group.identities[0];
    for (int x = 0; x < nx; ++x)
        if (action[e][x] != x) throw InvalidAction("identity must act trivially");
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int x = 0; x < nx; ++x)
                if (action[group.composition[g][h]][x] != action[g][action[h][x]])
                    throw InvalidAction("table is not a group action");

    const long cond = 1;
    const int n = nx * ng * nx;
    auto idx = [&](int x, int g, int y) { return (static_cast<long>(x) * ng + g) * nx + y; };
    MultTable mt;
    mt.conductor = cond;
    mt.n = n;
    mt.t.assign(n, std::vector<Sp>(n));
    mt.unit = zero_vec(cond, n);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < nx; ++y) mt.unit[idx(x, e, y)] = FieldElement::one(cond);
    for (int x = 0; x < nx; ++x)
        for (int g = 0; g < ng; ++g)
            for (int y = 0; y < nx; ++y)
                for (int x2 = 0; x2 < nx; ++x2)
                    for (int g2 = 0; g2 < ng; ++g2)
                        for (int y2 = 0; y2 < nx; ++y2) {
                            // (x,g,y)(x',g',y') = [x = g.x'] [y' = g'^{-1}.y] (x, gg', y')
                            if (action[g][x2] != x) continue;
                            if (action[group.inverses[g2]][y] != y2) continue;
                            mt.t[idx(x, g, y)][idx(x2, g2, y2)] = {
                                {idx(x, group.composition[g][g2], y2), FieldElement::one(cond)}};
                        }

    std::vector<Sp> comul(n);
    Vec counit = zero_vec(cond, n);
    Matrix s(n, n, cond);
    std::vector<std::string> labels(n);
    for (int x = 0; x < nx; ++x)
        for (int g = 0; g < ng; ++g)
            for (int y = 0; y < nx; ++y) {
                SpAcc acc;
                for (int z = 0; z < nx; ++z)
                    acc.add(idx(x, g, z) * static_cast<long>(n) + idx(action[g][z], g, y),
                            FieldElement::one(cond));
                comul[idx(x, g, y)] = acc.done();
                counit[idx(x, g, y)] =
                    (action[g][y] == x) ? FieldElement::one(cond) : FieldElement::zero(cond);
                s.at(static_cast<int>(idx(y, group.inverses[g], x)), static_cast<int>(idx(x, g, y))) =
                    FieldElement::one(cond);
                labels[idx(x, g, y)] = "d" + std::to_string(x) + "|" + group.morphisms[g].label + "|d" +
                                       std::to_string(y);
            }
    return QuantumGroupoid(std::move(mt), std::move(comul), std::move(counit), std::move(s),
                           std::move(labels));
}

// ---------------------------------------------------------------------------
// Temperley-Lieb quotient of dimension 13
// ---------------------------------------------------------------------------

namespace {

constexpr int kStrands = 4;
using Diagram = std::array<int, 2 * kStrands>; // planar pairing; top 0..3, bottom 4..7

Diagram identity_diagram() {
    Diagram d{};
    for (int i = 0; i < kStrands; ++i) {
        d[i] = i + kStrands;
        d[i + kStrands] = i;
    }
    return d;
}

Diagram cup_cap(int i) { // e_i for i in 1..3
    Diagram d = identity_diagram();
    d[i - 1] = i;
    d[i] = i - 1;
    d[kStrands + i - 1] = kStrands + i;
    d[kStrands + i] = kStrands + i - 1;
    return d;
}

/// Compose x over y (x's bottom glued to y's top). Combined graph nodes:
/// x points 0..7, y points 8..15, glue edges x(4+i) ~ y-top (8+i). Returns
/// the outer pairing and the number of closed internal loops.
std::pair<Diagram, int> compose(const Diagram& x, const Diagram& y) {
    auto pairing = [&](int node) { return node < 8 ? x[node] : 8 + y[node - 8]; };
    auto glue = [](int node) -> int {
        if (node >= 4 && node < 8) return node + 4;
        if (node >= 8 && node < 12) return node - 4;
        return -1; // external
    };
    auto ext_id = [](int node) { return node < 4 ? node : node - 8; };
    Diagram out{};
    std::array<bool, 16> visited{};
    const int externals[8] = {0, 1, 2, 3, 12, 13, 14, 15};
    for (int start : externals) {
        int cur = start;
        for (;;) {
            visited[cur] = true;
            int nxt = pairing(cur);
            visited[nxt] = true;
            int g = glue(nxt);
            if (g < 0) {
                out[ext_id(start)] = ext_id(nxt);
                break;
            }
            cur = g;
        }
    }
    int loops = 0;
    for (int node = 4; node < 12; ++node) {
        if (visited[node]) continue;
        int cur = node;
        int steps = 0;
        do {
            visited[cur] = true;
            int nxt = pairing(cur);
            visited[nxt] = true;
            cur = glue(nxt);
            if (cur < 0 || ++steps > 32) throw InternalError("diagram loop tracing failed");
        } while (cur != node);
        ++loops;
    }
    return {out, loops};
}

/// Loops of the Markov closure (top i joined to bottom i).
int closure_loops(const Diagram& d) {
    std::array<bool, 8> vis{};
    int loops = 0;
    for (int i = 0; i < 8; ++i) {
        if (vis[i]) continue;
        int cur = i;
        do {
            vis[cur] = true;
            int nxt = d[cur];
            vis[nxt] = true;
            cur = (nxt + kStrands) % (2 * kStrands);
        } while (cur != i);
        ++loops;
    }
    return loops;
}

Diagram rotate(const Diagram& d) { // 180-degree rotation: e_i -> e_{4-i}, an anti-automorphism
    auto map = [](int p) { return p < 4 ? (4 + (3 - p)) : (3 - (p - 4)); };
    Diagram out{};
    for (int p = 0; p < 8; ++p) out[map(p)] = map(d[p]);
    return out;
}

struct TLBuild {
    QuantumGroupoid h;
    TLData data;
};

/// Matrix units of every Wedderburn block of `sub`, as vectors in the
/// coordinates `sub` was built on.
std::vector<std::vector<std::vector<Vec>>> block_matrix_units(const MultTable& sub,
                                                              const WedderburnData& wd) {
    std::vector<std::vector<std::vector<Vec>>> units;
    long cond = sub.conductor;
    for (int alpha = 0; alpha < wd.blocks(); ++alpha) {
        int d = wd.block_dims[alpha];
        // basis of the block ideal
        std::vector<Vec> ideal;
        for (int i = 0; i < sub.n; ++i) ideal.push_back(sub.mul(unit_vec(cond, sub.n, i), wd.idempotents[alpha]));
        ideal = span_basis(ideal, cond, sub.n);
        if (static_cast<int>(ideal.size()) != d * d) throw InternalError("block ideal dimension mismatch");
        // solve rho(x) = E_ij over the ideal
        Matrix sys(d * d, d * d, cond);
        for (size_t b = 0; b < ideal.size(); ++b) {
            Matrix rho(d, d, cond);
            for (int a = 0; a < sub.n; ++a)
                if (!ideal[b][a].is_zero()) rho = rho + wd.actions[alpha][a] * ideal[b][a];
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) sys.at(r * d + c, static_cast<int>(b)) = rho.at(r, c);
        }
        std::vector<std::vector<Vec>> blk(d, std::vector<Vec>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Vec rhs = zero_vec(cond, d * d);
                rhs[i * d + j] = FieldElement::one(cond);
                auto sol = solve_linear(sys, rhs);
                if (!sol) throw InternalError("matrix unit solve failed");
                Vec u = zero_vec(cond, sub.n);
                for (size_t b = 0; b < ideal.size(); ++b) u = add(u, scale(sol->particular[b], ideal[b]));
                blk[i][j] = u;
            }
        units.push_back(std::move(blk));
    }
    return units;
}

TLBuild build_temperley_lieb() {
    const long cond = 5;
    const FieldElement one = FieldElement::one(cond);
    // delta = 2 cos(pi/5) = -z^2 - z^3, lambda = delta^{-2}
    FieldElement delta = FieldElement::from_polynomial(cond, {{2, mpq_class(-1)}, {3, mpq_class(-1)}});
    FieldElement lambda = (delta * delta).inverse();

    // enumerate the 14 diagrams together with reduced words
    std::map<Diagram, int> index;
    std::vector<Diagram> diagrams;
    std::vector<std::vector<int>> words;
    auto add_diagram = [&](const Diagram& d, const std::vector<int>& w) {
        if (index.count(d)) return false;
        index[d] = static_cast<int>(diagrams.size());
        diagrams.push_back(d);
        words.push_back(w);
        return true;
    };
    add_diagram(identity_diagram(), {});
    for (size_t head = 0; head < diagrams.size(); ++head) {
        Diagram d = diagrams[head];
        std::vector<int> w = words[head];
        for (int g = 1; g <= 3; ++g) {
            auto [nd, loops] = compose(d, cup_cap(g));
            if (loops != 0) continue;
            auto nw = w;
            nw.push_back(g);
            add_diagram(nd, nw);
        }
    }
    const int big = static_cast<int>(diagrams.size());
    if (big != 14) throw InternalError("expected 14 diagrams on four strands");

    // diagram algebra with loop value delta
    MultTable A;
    A.conductor = cond;
    A.n = big;
    A.t.assign(big, std::vector<Sp>(big));
    A.unit = unit_vec(cond, big, index[identity_diagram()]);
    for (int i = 0; i < big; ++i)
        for (int j = 0; j < big; ++j) {
            auto [d, loops] = compose(diagrams[i], diagrams[j]);
            A.t[i][j] = {{index[d], delta.pow(loops)}};
        }

    // normalized Markov trace and its radical
    Vec tau_big = zero_vec(cond, big);
    for (int i = 0; i < big; ++i) tau_big[i] = delta.pow(closure_loops(diagrams[i]) - kStrands);
    Matrix gram(big, big, cond);
    for (int i = 0; i < big; ++i)
        for (int j = 0; j < big; ++j) {
            const auto& [k, c] = A.t[i][j][0];
            gram.at(i, j) = c * tau_big[k];
        }
    std::vector<Vec> radical = kernel_basis(gram);
    if (radical.size() != 1) throw InternalError("trace radical should be one-dimensional at this level");
    QuotientSpace Q = QuotientSpace::make(cond, big, radical);
    const int n = static_cast<int>(Q.dim());
    if (n != 13) throw InternalError("quotient dimension is not 13");

    // the rotation anti-automorphism must preserve the radical
    {
        Vec rj = zero_vec(cond, big);
        for (int i = 0; i < big; ++i)
            if (!radical[0][i].is_zero()) rj[index[rotate(diagrams[i])]] = radical[0][i];
        if (!Q.contains(rj)) throw InternalError("rotation does not preserve the trace radical");
    }

    MultTable mt;
    mt.conductor = cond;
    mt.n = n;
    mt.t.assign(n, std::vector<Sp>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& [k, c] = A.t[Q.section[i]][Q.section[j]][0];
            mt.t[i][j] = sp_scale(c, sp_from_dense(Q.project(unit_vec(cond, big, static_cast<int>(k)))));
        }
    mt.unit = Q.project(A.unit);

    Vec tau = zero_vec(cond, n);
    for (int i = 0; i < n; ++i) tau[i] = tau_big[Q.section[i]];

    Matrix sigma(n, n, cond);
    for (int i = 0; i < n; ++i) {
        int rot = index[rotate(diagrams[Q.section[i]])];
        sigma.set_col(i, Q.project(unit_vec(cond, big, rot)));
    }

    // idempotent generators e_i = (diagram E_i) / delta
    FieldElement delta_inv = delta.inverse();
    auto gen = [&](int i) {
        return scale(delta_inv, Q.project(sp_to_dense(Sp{{index[cup_cap(i)], one}}, cond, big)));
    };
    Vec ge1 = gen(1), ge2 = gen(2), ge3 = gen(3);

    // P1 = (sigma (x) id) of the separability idempotent of the span of {1, e1}
    Sp sep11;
    {
        Vec p1 = ge1;
        Vec p2 = sub(mt.unit, ge1);
        SpAcc acc;
        acc.add(tensor_join(sp_from_dense(p1), 1, sp_from_dense(p1), 1, n));
        acc.add(tensor_join(sp_from_dense(p2), 1, sp_from_dense(p2), 1, n));
        sep11 = acc.done();
    }
    Sp P1 = apply_matrix_leg(sep11, 2, 0, sigma, n);

    // index element w of the span of {1, e3}: tau(w y) = Tr L_y on that span
    Vec w_elem;
    {
        // basis {1, e3}: L_1 has trace 2; L_{e3} has trace 1
        FieldElement t1 = dot(tau, mt.unit), t3 = dot(tau, ge3);
        FieldElement t33 = dot(tau, mt.mul(ge3, ge3)); // = tau(e3)
        Matrix sys(2, 2, cond);
        sys.at(0, 0) = t1;
        sys.at(0, 1) = t3;
        sys.at(1, 0) = t3;
        sys.at(1, 1) = t33;
        Vec rhs = {FieldElement::integer(2, cond), FieldElement::one(cond)};
        auto sol = solve_linear(sys, rhs);
        if (!sol || !sol->kernel.empty()) throw InternalError("index element is not uniquely determined");
        w_elem = add(scale(sol->particular[0], mt.unit), scale(sol->particular[1], ge3));
    }
    auto winv_opt = mt.inverse(w_elem);
    if (!winv_opt) throw InternalError("index element is not invertible");
    Vec w_inv = *winv_opt;

    // Jones projection f = lambda^{-1} e2 e1 e3 e2 (the normalization that makes
    // f idempotent: (e2 e1 e3 e2)^2 = lambda e2 e1 e3 e2), counit lambda^{-2} tau(h f w)
    Vec f = scale(lambda.inverse(), mt.mul(mt.mul(ge2, ge1), mt.mul(ge3, ge2)));
    FieldElement lam_m2 = (lambda * lambda).inverse();
    Vec counit = zero_vec(cond, n);
    for (int i = 0; i < n; ++i) {
        Vec x = mt.mul(mt.mul(unit_vec(cond, n, i), f), w_elem);
        counit[i] = lam_m2 * dot(tau, x);
    }

    // antipode S(h) = w^{-1} sigma(h) w
    Matrix s(n, n, cond);
    for (int i = 0; i < n; ++i) s.set_col(i, mt.mul(mt.mul(w_inv, sigma.col(i)), w_elem));

    // Delta(e1) = (e1 (x) 1) P1 and Delta(e3) = (1 (x) e3) P1 on the counital
    // sector. Delta(e2) lies in the twisted-separability family of the
    // three-strand subalgebra: (sigma (x) id) sum_blocks E_ij z (x) E_ji with
    // z a single element of that subalgebra; the counit laws and both antipode
    // identities pin z uniquely, and the resulting element is an idempotent
    // satisfying every Temperley-Lieb relation against Delta(e1), Delta(e3)
    // (asserted below).
    Sp one_sp = sp_from_dense(mt.unit);
    auto pair_mul = [&](const Sp& x, const Sp& y) { return mt.mul_k(2, x, y); };
    std::vector<Sp> dgen(4);
    dgen[1] = pair_mul(tensor_join(sp_from_dense(ge1), 1, one_sp, 1, n), P1);
    dgen[3] = pair_mul(tensor_join(one_sp, 1, sp_from_dense(ge3), 1, n), P1);
    {
        std::vector<Vec> a12 = subalgebra_closure(mt, {ge1, ge2});
        if (a12.size() != 5) throw InternalError("three-strand subalgebra should have dimension 5");
        MultTable sub12;
        sub12.conductor = cond;
        sub12.n = static_cast<int>(a12.size());
        sub12.t.assign(sub12.n, std::vector<Sp>(sub12.n));
        for (int i = 0; i < sub12.n; ++i)
            for (int j = 0; j < sub12.n; ++j) {
                auto coords = coords_in_span(a12, mt.mul(a12[i], a12[j]), cond, n);
                if (!coords) throw InternalError("subalgebra closure is not closed");
                sub12.t[i][j] = sp_from_dense(*coords);
            }
        auto uc = coords_in_span(a12, mt.unit, cond, n);
        if (!uc) throw InternalError("unit missing from subalgebra");
        sub12.unit = *uc;
        WedderburnData wd = wedderburn(sub12);
        auto sub_units = block_matrix_units(sub12, wd);
        // ambient matrix units
        std::vector<std::vector<std::vector<Vec>>> units(wd.blocks());
        for (int alpha = 0; alpha < wd.blocks(); ++alpha) {
            int d = wd.block_dims[alpha];
            units[alpha].assign(d, std::vector<Vec>(d));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Vec amb = zero_vec(cond, n);
                    for (int b = 0; b < sub12.n; ++b)
                        amb = add(amb, scale(sub_units[alpha][i][j][b], a12[b]));
                    units[alpha][i][j] = amb;
                }
        }
        // family member for z = basis element b of the subalgebra
        int zc = static_cast<int>(a12.size());
        std::vector<Sp> fam(zc);
        for (int b = 0; b < zc; ++b) {
            SpAcc acc;
            for (int alpha = 0; alpha < wd.blocks(); ++alpha) {
                int d = wd.block_dims[alpha];
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        acc.add(tensor_join(sp_from_dense(sigma * mt.mul(units[alpha][i][j], a12[b])), 1,
                                            sp_from_dense(units[alpha][j][i]), 1, n));
            }
            fam[b] = acc.done();
        }
        // eps_t(e2), eps_s(e2) from P1 and the counit
        Vec et = zero_vec(cond, n), es = zero_vec(cond, n);
        for (const auto& [idx, c] : P1) {
            auto legs = tensor_split(idx, n, 2);
            Vec l0 = sp_to_dense(Sp{{legs[0], FieldElement::one(cond)}}, cond, n);
            Vec l1 = sp_to_dense(Sp{{legs[1], FieldElement::one(cond)}}, cond, n);
            et = add(et, scale(c * dot(counit, mt.mul(l0, ge2)), l1));
            es = add(es, scale(c * dot(counit, mt.mul(ge2, l1)), l0));
        }
        std::vector<Vec> rows;
        Vec rhs;
        for (int b = 0; b < zc; ++b) {
            Vec c1 = sp_to_dense(contract_leg(fam[b], 2, 0, counit, n), cond, n);
            Vec c2 = sp_to_dense(contract_leg(fam[b], 2, 1, counit, n), cond, n);
            SpAcc accL, accR;
            for (const auto& [idx, c] : fam[b]) {
                auto legs = tensor_split(idx, n, 2);
                accL.add(sp_from_dense(mt.mul(sp_to_dense(Sp{{legs[0], c}}, cond, n),
                                              s.col(static_cast<int>(legs[1])))));
                accR.add(sp_from_dense(mt.mul(s.col(static_cast<int>(legs[0])),
                                              sp_to_dense(Sp{{legs[1], c}}, cond, n))));
            }
            Vec c3 = sp_to_dense(accL.done(), cond, n);
            Vec c4 = sp_to_dense(accR.done(), cond, n);
            if (b == 0) {
                rows.assign(4 * n, zero_vec(cond, zc));
                rhs = zero_vec(cond, 4 * n);
            }
            for (int t = 0; t < n; ++t) {
                rows[4 * t + 0][b] = c1[t];
                rows[4 * t + 1][b] = c2[t];
                rows[4 * t + 2][b] = c3[t];
                rows[4 * t + 3][b] = c4[t];
            }
        }
        for (int t = 0; t < n; ++t) {
            rhs[4 * t + 0] = ge2[t];
            rhs[4 * t + 1] = ge2[t];
            rhs[4 * t + 2] = et[t];
            rhs[4 * t + 3] = es[t];
        }
        Matrix A = Matrix::from_rows(rows, cond, zc);
        auto sol = solve_linear(A, rhs);
        if (!sol || !sol->kernel.empty())
            throw InternalError("coproduct of the middle generator is not uniquely determined");
        Sp X;
        for (int b = 0; b < zc; ++b) X = sp_add(X, sp_scale(sol->particular[b], fam[b]));
        // certify the derived coproduct exactly
        if (pair_mul(X, X) != X) throw InternalError("middle coproduct is not idempotent");
        auto lam_sp = [&](const Sp& v) { return sp_scale(lambda, v); };
        if (pair_mul(pair_mul(dgen[1], X), dgen[1]) != lam_sp(dgen[1]) ||
            pair_mul(pair_mul(X, dgen[1]), X) != lam_sp(X) ||
            pair_mul(pair_mul(X, dgen[3]), X) != lam_sp(X) ||
            pair_mul(pair_mul(dgen[3], X), dgen[3]) != lam_sp(dgen[3]) ||
            pair_mul(X, P1) != X || pair_mul(P1, X) != X)
            throw InternalError("middle coproduct fails the defining relations");
        dgen[2] = X;
    }
    // a basis diagram is delta^len times the product of its idempotent letters
    std::vector<Sp> comul(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        const auto& word = words[Q.section[i]];
        Sp d = P1;
        std::string lbl = word.empty() ? "1" : "";
        for (size_t k = 0; k < word.size(); ++k) {
            d = (k == 0) ? dgen[word[k]] : pair_mul(d, dgen[word[k]]);
            lbl += (k ? "*E" : "E") + std::to_string(word[k]);
        }
        comul[i] = sp_scale(delta.pow(static_cast<long>(word.size())), d);
        labels[i] = lbl;
    }

    TLBuild out{QuantumGroupoid(mt, comul, counit, s, labels), TLData{}};
    out.data.lambda = lambda;
    out.data.delta = delta;
    out.data.markov_trace = tau;
    out.data.jones_projection = f;
    out.data.index_element = w_elem;
    out.data.sigma = sigma;
    return out;
}

} // namespace

TLData temperley_lieb_data() { return build_temperley_lieb().data; }

QuantumGroupoid temperley_lieb(int n) {
    if (n != 2) throw UnsupportedN("only the dimension-13 quotient (n = 2) is built in");
    return build_temperley_lieb().h;
}

} // namespace qg
