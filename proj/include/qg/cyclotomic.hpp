#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

#include "qg/errors.hpp"

namespace qg {

/**
 * An element of the cyclotomic field Q(zeta_N), stored in the power basis
 * 1, z, ..., z^(phi(N)-1) reduced modulo the N-th cyclotomic polynomial.
 *
 * The representation is canonical: two elements with the same conductor are
 * equal iff their coefficient vectors are equal. All arithmetic is exact.
 * Elements with different conductors are promoted to the lcm before
 * combining (Q(zeta_M) embeds in Q(zeta_N) via z_M = z_N^(N/M) when M | N).
 */
class FieldElement {
public:
    FieldElement(); // zero over Q (conductor 1)

    static FieldElement zero(long conductor);
    static FieldElement one(long conductor);
    static FieldElement rational(const mpq_class& q, long conductor = 1);
    static FieldElement integer(long v, long conductor = 1);
    /// Primitive root z_N^power.
    static FieldElement zeta(long conductor, long power = 1);
    /// Coefficients in the power basis; length must be phi(N). Canonical as given.
    static FieldElement from_coeffs(long conductor, std::vector<mpq_class> coeffs);
    /// Canonicalize a raw polynomial sum c_k * z^(p_k) with arbitrary powers.
    static FieldElement from_polynomial(long conductor,
                                        const std::vector<std::pair<long, mpq_class>>& terms);

    long conductor() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// The rational value; throws Error if the element is irrational.
    mpq_class to_rational() const;

    FieldElement operator-() const;
    /// this += a * b with minimal temporaries (same-conductor fast path).
    void addmul(const FieldElement& a, const FieldElement& b);
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Exact multiplicative inverse. Throws DivisionByZero on zero.
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    /// Reinterpret in Q(zeta_M); requires conductor | M.
    FieldElement promoted(long m) const;
    /// Galois action z -> z^a; requires gcd(a, N) = 1.
    FieldElement galois(long a) const;
    /// Complex conjugation z -> z^(N-1).
    FieldElement conjugate() const;

    /// Canonical string "c0 + c1*z + ... (mod Phi_N)".
    std::string str() const;
    /// Parse the canonical grammar; also accepts raw powers z^k with k >= phi(N).
    /// When expected_conductor > 0 and the string carries no "(mod Phi_N)"
    /// suffix, that conductor is assumed; a mismatching suffix is an error.
    static FieldElement parse(const std::string& text, long expected_conductor = 0);

    /// Numeric embedding at zeta_N -> exp(2*pi*i/N).
    std::complex<double> embed() const;

    /// Deterministic total order (conductor, then lexicographic on coefficients).
    int cmp(const FieldElement& o) const;

    static long euler_phi(long n);
    /// Coefficients of the N-th cyclotomic polynomial (ascending, monic).
    static std::vector<mpz_class> cyclotomic_polynomial(long n);

private:
    long n_;                   // conductor
    std::vector<mpq_class> c_; // phi(n_) coefficients

    FieldElement(long n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}
    static void align(FieldElement& a, FieldElement& b);
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Format a rational as "p" or "p/q".
std::string rational_str(const mpq_class& q);
/// Parse "p" or "p/q" (base 10). Throws ParseError on malformed input.
mpq_class parse_rational(const std::string& s);

} // namespace qg
