#include "qg/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qg {

namespace {

// Dense rational polynomials, ascending coefficients. Only used internally
// for cyclotomic reduction and inversion.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder; divisor need not be monic.
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.clear();
    if (b.empty()) throw InternalError("polynomial division by zero");
    while (r.size() >= b.size()) {
        mpq_class c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
        q[shift] += c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
        if (r.empty()) break;
    }
}

// Extended gcd: returns g monic with u*a + v*b = g.
void poly_xgcd(QPoly a, QPoly b, QPoly& g, QPoly& u, QPoly& v) {
    QPoly u0 = {mpq_class(1)}, v0 = {}, u1 = {}, v1 = {mpq_class(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly q, r;
        poly_divmod(a, b, q, r);
        QPoly u2 = u0, v2 = v0;
        QPoly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
        u2.resize(std::max(u2.size(), qu.size()), mpq_class(0));
        v2.resize(std::max(v2.size(), qv.size()), mpq_class(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        for (size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
        trim(u2);
        trim(v2);
        a = b;
        b = r;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    g = a;
    u = u0;
    v = v0;
    if (!g.empty() && g.back() != 1) {
        mpq_class lead = g.back();
        for (auto& c : g) c /= lead;
        for (auto& c : u) c /= lead;
        for (auto& c : v) c /= lead;
    }
}

struct CyclotomicContext {
    long n = 1;
    long phi = 1;
    std::vector<mpz_class> poly;       // Phi_n, ascending, monic
    std::vector<QPoly> zeta_power;     // zeta^k reduced, k in [0, 2n]
};

std::vector<mpz_class> cyclotomic_z(long n, std::map<long, std::vector<mpz_class>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact division over Z.
    QPoly num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto pd = cyclotomic_z(d, memo);
        QPoly div(pd.size());
        for (size_t i = 0; i < pd.size(); ++i) div[i] = mpq_class(pd[i]);
        QPoly q, r;
        poly_divmod(num, div, q, r);
        if (!r.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
        num = q;
    }
    std::vector<mpz_class> res(num.size());
    for (size_t i = 0; i < num.size(); ++i) {
        if (num[i].get_den() != 1) throw InternalError("cyclotomic polynomial has non-integer coefficient");
        res[i] = num[i].get_num();
    }
    memo[n] = res;
    return res;
}

const CyclotomicContext& context(long n) {
    if (n < 1) throw Error("conductor must be >= 1");
    static std::map<long, CyclotomicContext> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    CyclotomicContext ctx;
    ctx.n = n;
    static std::map<long, std::vector<mpz_class>> memo;
    ctx.poly = cyclotomic_z(n, memo);
    ctx.phi = static_cast<long>(ctx.poly.size()) - 1;
    ctx.zeta_power.resize(2 * n + 1);
    for (long k = 0; k <= 2 * n; ++k) {
        if (k < ctx.phi) {
            QPoly row(ctx.phi, mpq_class(0));
            row[k] = 1;
            ctx.zeta_power[k] = std::move(row);
        } else {
            // zeta^k = zeta * zeta^(k-1), with the overflow coefficient folded
            // back through the monic relation zeta^phi = -(c_0 + ... + c_{phi-1} zeta^{phi-1}).
            const QPoly& prev = ctx.zeta_power[k - 1];
            QPoly row(ctx.phi, mpq_class(0));
            for (long i = 0; i + 1 < ctx.phi; ++i) row[i + 1] = prev[i];
            mpq_class top = prev[ctx.phi - 1];
            if (top != 0) {
                for (long i = 0; i < ctx.phi; ++i) row[i] -= top * mpq_class(ctx.poly[i]);
            }
            ctx.zeta_power[k] = std::move(row);
        }
    }
    return cache.emplace(n, std::move(ctx)).first->second;
}

} // namespace

long FieldElement::euler_phi(long n) { return context(n).phi; }

std::vector<mpz_class> FieldElement::cyclotomic_polynomial(long n) { return context(n).poly; }

FieldElement::FieldElement() : n_(1), c_(1, mpq_class(0)) {}

FieldElement FieldElement::zero(long n) {
    return FieldElement(n, std::vector<mpq_class>(context(n).phi, mpq_class(0)));
}

FieldElement FieldElement::one(long n) {
    auto v = std::vector<mpq_class>(context(n).phi, mpq_class(0));
    v[0] = 1;
    return FieldElement(n, std::move(v));
}

FieldElement FieldElement::rational(const mpq_class& q, long n) {
    auto v = std::vector<mpq_class>(context(n).phi, mpq_class(0));
    v[0] = q;
    return FieldElement(n, std::move(v));
}

FieldElement FieldElement::integer(long val, long n) { return rational(mpq_class(val), n); }

FieldElement FieldElement::zeta(long n, long power) {
    return from_polynomial(n, {{power, mpq_class(1)}});
}

FieldElement FieldElement::from_coeffs(long n, std::vector<mpq_class> coeffs) {
    const auto& ctx = context(n);
    if (static_cast<long>(coeffs.size()) != ctx.phi)
        throw ShapeError("coefficient vector length must be phi(N)");
    for (auto& c : coeffs) c.canonicalize();
    return FieldElement(n, std::move(coeffs));
}

FieldElement FieldElement::from_polynomial(long n,
                                           const std::vector<std::pair<long, mpq_class>>& terms) {
    const auto& ctx = context(n);
    std::vector<mpq_class> acc(ctx.phi, mpq_class(0));
    for (const auto& [pw, coeff] : terms) {
        long p = pw % n;
        if (p < 0) p += n;
        const QPoly& row = ctx.zeta_power[p];
        for (long i = 0; i < ctx.phi; ++i) acc[i] += coeff * row[i];
    }
    return FieldElement(n, std::move(acc));
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class FieldElement::to_rational() const {
    if (!is_rational()) throw Error("field element is not rational: " + str());
    return c_[0];
}

FieldElement FieldElement::promoted(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw Error("cannot promote conductor " + std::to_string(n_) +
                                 " into conductor " + std::to_string(m));
    long step = m / n_;
    std::vector<std::pair<long, mpq_class>> terms;
    for (long i = 0; i < static_cast<long>(c_.size()); ++i)
        if (c_[i] != 0) terms.emplace_back(i * step, c_[i]);
    return from_polynomial(m, terms);
}

void FieldElement::align(FieldElement& a, FieldElement& b) {
    if (a.n_ == b.n_) return;
    long l = std::lcm(a.n_, b.n_);
    a = a.promoted(l);
    b = b.promoted(l);
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (n_ == o.n_) {
        FieldElement a = *this;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (o.c_[i] != 0) a.c_[i] += o.c_[i];
        return a;
    }
    FieldElement a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (n_ == o.n_) {
        FieldElement a = *this;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (o.c_[i] != 0) a.c_[i] -= o.c_[i];
        return a;
    }
    FieldElement a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const FieldElement* pa = this;
    const FieldElement* pb = &o;
    FieldElement sa, sb;
    if (n_ != o.n_) {
        sa = *this;
        sb = o;
        align(sa, sb);
        pa = &sa;
        pb = &sb;
    }
    const auto& ctx = context(pa->n_);
    long phi = ctx.phi;
    if (phi == 1) {
        std::vector<mpq_class> acc(1);
        acc[0] = pa->c_[0] * pb->c_[0];
        return FieldElement(pa->n_, std::move(acc));
    }
    std::vector<mpq_class> raw(2 * phi - 1, mpq_class(0));
    for (long i = 0; i < phi; ++i) {
        if (pa->c_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (pb->c_[j] == 0) continue;
            raw[i + j] += pa->c_[i] * pb->c_[j];
        }
    }
    std::vector<mpq_class> acc(phi, mpq_class(0));
    for (long k = 0; k < 2 * phi - 1; ++k) {
        if (raw[k] == 0) continue;
        if (k < phi) {
            acc[k] += raw[k];
        } else {
            const QPoly& row = ctx.zeta_power[k];
            for (long i = 0; i < phi; ++i)
                if (row[i] != 0) acc[i] += raw[k] * row[i];
        }
    }
    return FieldElement(pa->n_, std::move(acc));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (n_ == o.n_) {
        for (size_t i = 0; i < c_.size(); ++i)
            if (o.c_[i] != 0) c_[i] += o.c_[i];
        return *this;
    }
    return *this = *this + o;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (n_ == o.n_) {
        for (size_t i = 0; i < c_.size(); ++i)
            if (o.c_[i] != 0) c_[i] -= o.c_[i];
        return *this;
    }
    return *this = *this - o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }

void FieldElement::addmul(const FieldElement& a, const FieldElement& b) {
    if (a.n_ != b.n_ || a.n_ != n_) {
        *this += a * b;
        return;
    }
    const auto& ctx = context(n_);
    long phi = ctx.phi;
    if (phi == 1) {
        c_[0] += a.c_[0] * b.c_[0];
        return;
    }
    static thread_local std::vector<mpq_class> raw;
    raw.assign(2 * phi - 1, mpq_class(0));
    mpq_class prod;
    for (long i = 0; i < phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (b.c_[j] == 0) continue;
            prod = a.c_[i] * b.c_[j];
            raw[i + j] += prod;
        }
    }
    for (long k = 0; k < phi; ++k)
        if (raw[k] != 0) c_[k] += raw[k];
    for (long k = phi; k < 2 * phi - 1; ++k) {
        if (raw[k] == 0) continue;
        const QPoly& row = ctx.zeta_power[k];
        for (long i = 0; i < phi; ++i)
            if (row[i] != 0) c_[i] += raw[k] * row[i];
    }
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    FieldElement a = *this, b = o;
    align(a, b);
    return a.c_ == b.c_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return rational(mpq_class(1) / c_[0], n_);
    const auto& ctx = context(n_);
    QPoly f(c_.begin(), c_.end());
    trim(f);
    QPoly modulus(ctx.poly.size());
    for (size_t i = 0; i < ctx.poly.size(); ++i) modulus[i] = mpq_class(ctx.poly[i]);
    QPoly g, u, v;
    poly_xgcd(f, modulus, g, u, v);
    if (g.size() != 1) throw InternalError("cyclotomic polynomial failed to be coprime to a nonzero element");
    // g == 1, so u*f = 1 mod Phi_N.
    u.resize(2 * ctx.phi, mpq_class(0));
    std::vector<mpq_class> acc(ctx.phi, mpq_class(0));
    for (long k = 0; k < static_cast<long>(u.size()); ++k) {
        if (u[k] == 0) continue;
        const QPoly& row = ctx.zeta_power[k];
        for (long i = 0; i < ctx.phi; ++i) acc[i] += u[k] * row[i];
    }
    return FieldElement(n_, std::move(acc));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = one(n_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::galois(long a) const {
    long g = std::gcd(((a % n_) + n_) % n_, n_);
    if (n_ > 1 && g != 1) throw Error("galois exponent must be coprime to the conductor");
    std::vector<std::pair<long, mpq_class>> terms;
    for (long i = 0; i < static_cast<long>(c_.size()); ++i)
        if (c_[i] != 0) terms.emplace_back(i * a, c_[i]);
    return from_polynomial(n_, terms);
}

FieldElement FieldElement::conjugate() const {
    if (n_ <= 2) return *this;
    return galois(n_ - 1);
}

std::string rational_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class c = c_[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (i == 0) {
            os << rational_str(c);
        } else {
            if (c != 1) os << rational_str(c) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    os << " (mod Phi_" << n_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.str(); }

FieldElement FieldElement::parse(const std::string& text, long expected_conductor) {
    std::string body = text;
    long n = expected_conductor;
    auto mod_pos = body.find("(mod Phi_");
    if (mod_pos != std::string::npos) {
        auto close = body.find(')', mod_pos);
        if (close == std::string::npos) throw ParseError("unterminated '(mod Phi_N)' in '" + text + "'");
        std::string num = body.substr(mod_pos + 9, close - mod_pos - 9);
        try {
            n = std::stol(num);
        } catch (...) {
            throw ParseError("bad conductor in '" + text + "'");
        }
        if (expected_conductor > 0 && n != expected_conductor)
            throw ParseError("conductor " + std::to_string(n) + " does not match declared conductor " +
                             std::to_string(expected_conductor));
        body = body.substr(0, mod_pos);
    }
    if (n <= 0) throw ParseError("no conductor available for '" + text + "'");

    std::vector<std::pair<long, mpq_class>> terms;
    size_t i = 0;
    auto skip_ws = [&] { while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i; };
    skip_ws();
    bool any = false;
    while (i < body.size()) {
        int sign = 1;
        if (body[i] == '+' || body[i] == '-') {
            if (body[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-' in '" + text + "'");
        }
        // coefficient part
        std::string digits;
        while (i < body.size() && (std::isdigit(static_cast<unsigned char>(body[i])) || body[i] == '/')) {
            digits += body[i];
            ++i;
        }
        skip_ws();
        mpq_class coeff = digits.empty() ? mpq_class(1) : parse_rational(digits);
        if (sign < 0) coeff = -coeff;
        long power = 0;
        bool saw_z = false;
        if (i < body.size() && (body[i] == '*' || body[i] == 'z')) {
            if (body[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= body.size() || body[i] != 'z') throw ParseError("expected 'z' in '" + text + "'");
            ++i;
            saw_z = true;
            power = 1;
            if (i < body.size() && body[i] == '^') {
                ++i;
                std::string pw;
                if (i < body.size() && body[i] == '-') { pw += body[i]; ++i; }
                while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
                    pw += body[i];
                    ++i;
                }
                if (pw.empty()) throw ParseError("missing exponent in '" + text + "'");
                power = std::stol(pw);
            }
        }
        if (digits.empty() && !saw_z) throw ParseError("empty term in '" + text + "'");
        terms.emplace_back(power, coeff);
        any = true;
        skip_ws();
    }
    if (!any) throw ParseError("empty field element in '" + text + "'");
    return from_polynomial(n, terms);
}

std::complex<double> FieldElement::embed() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double angle = tau * static_cast<double>(i) / static_cast<double>(n_);
        acc += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

int FieldElement::cmp(const FieldElement& o) const {
    if (n_ != o.n_) {
        FieldElement a = *this, b = o;
        align(a, b);
        return a.cmp(b);
    }
    for (size_t i = 0; i < c_.size(); ++i) {
        int c = ::cmp(c_[i], o.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace qg
