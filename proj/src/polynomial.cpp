#include "qg/polynomial.hpp"

#include <algorithm>
#include <mpfr.h>
#include <numeric>
#include <sstream>

namespace qg {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), FieldElement::zero(b.empty() ? 1 : b[0].conductor()));
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), FieldElement::zero(b.empty() ? 1 : b[0].conductor()));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    long cond = a[0].conductor();
    Poly r(a.size() + b.size() - 1, FieldElement::zero(cond));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return poly_trim(r);
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    Poly bb = poly_trim(b);
    if (bb.empty()) throw InternalError("polynomial division by zero");
    r = poly_trim(a);
    q.clear();
    FieldElement lead_inv = bb.back().inverse();
    while (r.size() >= bb.size()) {
        FieldElement c = r.back() * lead_inv;
        size_t shift = r.size() - bb.size();
        if (q.size() < shift + 1) q.resize(shift + 1, FieldElement::zero(c.conductor()));
        q[shift] += c;
        for (size_t i = 0; i < bb.size(); ++i) r[shift + i] -= c * bb[i];
        r = poly_trim(r);
        if (r.empty()) break;
    }
}

Poly poly_monic(Poly p) {
    p = poly_trim(std::move(p));
    if (p.empty() || p.back().is_one()) return p;
    FieldElement inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return poly_monic(a);
}

void poly_xgcd(Poly a, Poly b, Poly& g, Poly& u, Poly& v) {
    long cond = 1;
    if (!a.empty()) cond = a[0].conductor();
    else if (!b.empty()) cond = b[0].conductor();
    Poly u0 = {FieldElement::one(cond)}, v0 = {}, u1 = {}, v1 = {FieldElement::one(cond)};
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        Poly v2 = poly_sub(v0, poly_mul(q, v1));
        a = b; b = r;
        u0 = u1; v0 = v1;
        u1 = u2; v1 = v2;
    }
    g = a;
    u = u0;
    v = v0;
    if (!g.empty() && !g.back().is_one()) {
        FieldElement inv = g.back().inverse();
        for (auto& c : g) c *= inv;
        for (auto& c : u) c *= inv;
        for (auto& c : v) c *= inv;
    }
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    long cond = p[0].conductor();
    Poly d(p.size() - 1, FieldElement::zero(cond));
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * FieldElement::integer(static_cast<long>(i), cond);
    return poly_trim(d);
}

FieldElement poly_eval(const Poly& p, const FieldElement& x) {
    if (p.empty()) return FieldElement::zero(x.conductor());
    FieldElement acc = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Poly poly_squarefree_part(const Poly& p) {
    Poly pp = poly_monic(p);
    if (poly_deg(pp) <= 1) return pp;
    Poly g = poly_gcd(pp, poly_derivative(pp));
    if (poly_deg(g) == 0) return pp;
    Poly q, r;
    poly_divmod(pp, g, q, r);
    return poly_monic(q);
}

std::string poly_str(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << p[i].str() << ")";
        if (i > 0) os << "*" << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Root extraction. Strategy: the roots of p that lie in Q(zeta_N) are located
// with high-precision complex arithmetic by matching Galois-conjugate root
// tuples (the coordinates of a root in the power basis are rational, so the
// phi(N) conjugate equations form an invertible Vandermonde system), then the
// rational coordinates are recovered by continued fractions and certified by
// exact evaluation. Everything returned is exactly verified; the numerics can
// only cause a missed root, never a wrong one.
// ---------------------------------------------------------------------------

namespace {

constexpr mpfr_prec_t kPrec = 384;

struct MC {
    mpfr_t re, im;
    MC() {
        mpfr_init2(re, kPrec);
        mpfr_init2(im, kPrec);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    MC(const MC& o) : MC() {
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
    }
    MC& operator=(const MC& o) {
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
        return *this;
    }
    ~MC() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

MC mc_from_q(const mpq_class& q) {
    MC r;
    mpfr_set_q(r.re, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

MC mc_add(const MC& a, const MC& b) {
    MC r;
    mpfr_add(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_add(r.im, a.im, b.im, MPFR_RNDN);
    return r;
}

MC mc_sub(const MC& a, const MC& b) {
    MC r;
    mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
    return r;
}

MC mc_mul(const MC& a, const MC& b) {
    MC r;
    mpfr_t t1, t2;
    mpfr_init2(t1, kPrec);
    mpfr_init2(t2, kPrec);
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_sub(r.re, t1, t2, MPFR_RNDN);
    mpfr_mul(t1, a.re, b.im, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
    mpfr_add(r.im, t1, t2, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return r;
}

void mc_abs2(mpfr_t out, const MC& a) {
    mpfr_t t;
    mpfr_init2(t, kPrec);
    mpfr_mul(out, a.re, a.re, MPFR_RNDN);
    mpfr_mul(t, a.im, a.im, MPFR_RNDN);
    mpfr_add(out, out, t, MPFR_RNDN);
    mpfr_clear(t);
}

MC mc_div(const MC& a, const MC& b) {
    MC r;
    mpfr_t d;
    mpfr_init2(d, kPrec);
    mc_abs2(d, b);
    MC conj;
    mpfr_set(conj.re, b.re, MPFR_RNDN);
    mpfr_neg(conj.im, b.im, MPFR_RNDN);
    MC num = mc_mul(a, conj);
    mpfr_div(r.re, num.re, d, MPFR_RNDN);
    mpfr_div(r.im, num.im, d, MPFR_RNDN);
    mpfr_clear(d);
    return r;
}

/// zeta_N^k at full working precision.
MC mc_root_of_unity(long n, long k) {
    MC r;
    mpfr_t angle, pi;
    mpfr_init2(angle, kPrec);
    mpfr_init2(pi, kPrec);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_si(angle, pi, 2 * (k % n), MPFR_RNDN);
    mpfr_div_si(angle, angle, n, MPFR_RNDN);
    mpfr_sin_cos(r.im, r.re, angle, MPFR_RNDN);
    mpfr_clear(angle);
    mpfr_clear(pi);
    return r;
}

MC embed_elem(const FieldElement& x) {
    MC acc;
    const auto& c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        acc = mc_add(acc, mc_mul(mc_from_q(c[i]), mc_root_of_unity(x.conductor(), static_cast<long>(i))));
    }
    return acc;
}

std::vector<MC> embed_poly(const Poly& p) {
    std::vector<MC> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(embed_elem(c));
    return out;
}

MC poly_eval_mc(const std::vector<MC>& p, const MC& x) {
    MC acc = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) acc = mc_add(mc_mul(acc, x), p[i]);
    return acc;
}

/// Durand-Kerner iteration on a monic polynomial; deterministic seeds.
std::vector<MC> numeric_roots(std::vector<MC> p) {
    int d = static_cast<int>(p.size()) - 1;
    if (d <= 0) return {};
    // normalize to monic
    for (int i = 0; i < d; ++i) p[i] = mc_div(p[i], p[d]);
    {
        MC one;
        mpfr_set_si(one.re, 1, MPFR_RNDN);
        p[d] = one;
    }
    std::vector<MC> roots(d);
    MC seed;
    mpfr_set_d(seed.re, 0.4, MPFR_RNDN);
    mpfr_set_d(seed.im, 0.9, MPFR_RNDN);
    MC cur;
    mpfr_set_si(cur.re, 1, MPFR_RNDN);
    for (int i = 0; i < d; ++i) {
        cur = mc_mul(cur, seed);
        roots[i] = cur;
    }
    mpfr_t tol, err, t;
    mpfr_init2(tol, kPrec);
    mpfr_init2(err, kPrec);
    mpfr_init2(t, kPrec);
    mpfr_set_ui_2exp(tol, 1, -(kPrec - 64), MPFR_RNDN);
    for (int iter = 0; iter < 500; ++iter) {
        mpfr_set_zero(err, 1);
        for (int i = 0; i < d; ++i) {
            MC num = poly_eval_mc(p, roots[i]);
            MC den;
            mpfr_set_si(den.re, 1, MPFR_RNDN);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                den = mc_mul(den, mc_sub(roots[i], roots[j]));
            }
            MC delta = mc_div(num, den);
            roots[i] = mc_sub(roots[i], delta);
            mc_abs2(t, delta);
            mpfr_max(err, err, t, MPFR_RNDN);
        }
        if (mpfr_cmp(err, tol) < 0) break;
    }
    mpfr_clear(tol);
    mpfr_clear(err);
    mpfr_clear(t);
    return roots;
}

/// Continued-fraction reconstruction of a rational from an mpfr value.
std::optional<mpq_class> rationalize(const mpfr_t x, const mpz_class& max_den) {
    mpfr_t v, f;
    mpfr_init2(v, kPrec);
    mpfr_init2(f, kPrec);
    mpfr_set(v, x, MPFR_RNDN);
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    std::optional<mpq_class> result;
    for (int step = 0; step < 128; ++step) {
        mpfr_floor(f, v);
        mpz_class a;
        mpfr_get_z(a.get_mpz_t(), f, MPFR_RNDN);
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        // error of the current convergent
        mpfr_t approx, diff;
        mpfr_init2(approx, kPrec);
        mpfr_init2(diff, kPrec);
        mpq_class conv(p1, q1);
        conv.canonicalize();
        mpfr_set_q(approx, conv.get_mpq_t(), MPFR_RNDN);
        mpfr_sub(diff, x, approx, MPFR_RNDN);
        mpfr_abs(diff, diff, MPFR_RNDN);
        mpfr_t eps;
        mpfr_init2(eps, kPrec);
        mpfr_set_ui_2exp(eps, 1, -200, MPFR_RNDN);
        bool good = mpfr_cmp(diff, eps) < 0;
        mpfr_clear(eps);
        mpfr_clear(approx);
        if (good) {
            result = conv;
            mpfr_clear(diff);
            break;
        }
        mpfr_sub(v, v, f, MPFR_RNDN);
        if (mpfr_zero_p(v)) {
            mpfr_clear(diff);
            break;
        }
        mpfr_ui_div(v, 1, v, MPFR_RNDN);
        mpfr_clear(diff);
    }
    mpfr_clear(v);
    mpfr_clear(f);
    return result;
}

std::vector<long> unit_group(long n) {
    std::vector<long> units;
    for (long a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) units.push_back(a % n == 0 ? n : a);
    if (n == 1) units = {1};
    return units;
}

} // namespace

std::vector<FieldElement> roots_in_field(const Poly& p_in) {
    Poly p = poly_squarefree_part(poly_trim(p_in));
    std::vector<FieldElement> found;
    if (poly_deg(p) <= 0) return found;
    long n = p[0].conductor();
    if (poly_deg(p) == 1) {
        found.push_back(-(p[0] / p[1]));
        return found;
    }
    long phi = FieldElement::euler_phi(n);
    std::vector<long> units = unit_group(n);
    int d = poly_deg(p);

    // numeric roots of every Galois conjugate of p
    std::vector<std::vector<MC>> conj_roots;
    for (long a : units) {
        Poly pa(p.size(), FieldElement::zero(n));
        for (size_t i = 0; i < p.size(); ++i) pa[i] = p[i].galois(a);
        conj_roots.push_back(numeric_roots(embed_poly(pa)));
    }

    // Vandermonde matrix V[a_idx][i] = zeta^(a*i), inverted once numerically.
    // For each assignment of one numeric root per conjugate polynomial, solve
    // V x = r for the rational coordinate vector x and verify exactly.
    size_t combos = 1;
    for (long k = 0; k < phi; ++k) {
        combos *= static_cast<size_t>(d);
        if (combos > 2000000) throw Error("root search space too large for exact reconstruction");
    }
    std::vector<std::vector<MC>> vmat(phi, std::vector<MC>(phi));
    for (long ai = 0; ai < phi; ++ai)
        for (long i = 0; i < phi; ++i) vmat[ai][i] = mc_root_of_unity(n, (units[ai] * i) % n);

    mpz_class max_den = mpz_class(1) << 62;
    auto push_unique = [&](const FieldElement& x) {
        for (const auto& y : found)
            if (y == x) return;
        found.push_back(x);
    };

    std::vector<size_t> choice(phi, 0);
    for (size_t combo = 0; combo < combos; ++combo) {
        size_t rem = combo;
        for (long k = 0; k < phi; ++k) {
            choice[k] = rem % d;
            rem /= d;
        }
        // Gaussian elimination on a copy of V with the chosen rhs.
        std::vector<std::vector<MC>> m(phi, std::vector<MC>(phi + 1));
        for (long r = 0; r < phi; ++r) {
            for (long c = 0; c < phi; ++c) m[r][c] = vmat[r][c];
            m[r][phi] = conj_roots[r][choice[r]];
        }
        bool singular = false;
        mpfr_t mag, best;
        mpfr_init2(mag, kPrec);
        mpfr_init2(best, kPrec);
        for (long c = 0; c < phi && !singular; ++c) {
            long pivot = -1;
            mpfr_set_zero(best, 1);
            for (long r = c; r < phi; ++r) {
                mc_abs2(mag, m[r][c]);
                if (pivot < 0 || mpfr_cmp(mag, best) > 0) {
                    pivot = r;
                    mpfr_set(best, mag, MPFR_RNDN);
                }
            }
            if (pivot < 0 || mpfr_zero_p(best)) {
                singular = true;
                break;
            }
            std::swap(m[c], m[pivot]);
            for (long r = 0; r < phi; ++r) {
                if (r == c) continue;
                MC f = mc_div(m[r][c], m[c][c]);
                for (long cc = c; cc <= phi; ++cc) m[r][cc] = mc_sub(m[r][cc], mc_mul(f, m[c][cc]));
            }
        }
        mpfr_clear(mag);
        mpfr_clear(best);
        if (singular) continue;
        std::vector<mpq_class> coords(phi);
        bool ok = true;
        for (long c = 0; c < phi && ok; ++c) {
            MC x = mc_div(m[c][phi], m[c][c]);
            // imaginary part must be negligible for a genuine rational coordinate
            mpfr_t ai, eps;
            mpfr_init2(ai, kPrec);
            mpfr_init2(eps, kPrec);
            mpfr_abs(ai, x.im, MPFR_RNDN);
            mpfr_set_ui_2exp(eps, 1, -120, MPFR_RNDN);
            if (mpfr_cmp(ai, eps) > 0) ok = false;
            mpfr_clear(ai);
            mpfr_clear(eps);
            if (!ok) break;
            auto q = rationalize(x.re, max_den);
            if (!q) {
                ok = false;
                break;
            }
            coords[c] = *q;
        }
        if (!ok) continue;
        FieldElement cand = FieldElement::from_coeffs(n, coords);
        if (poly_eval(p, cand).is_zero()) push_unique(cand);
    }
    std::sort(found.begin(), found.end(), [](const FieldElement& a, const FieldElement& b) {
        return a.cmp(b) < 0;
    });
    return found;
}

std::vector<FieldElement> square_roots(const FieldElement& c) {
    long n = c.conductor();
    if (c.is_zero()) return {FieldElement::zero(n)};
    Poly p = {-c, FieldElement::zero(n), FieldElement::one(n)};
    return roots_in_field(p);
}

} // namespace qg
