#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qg/cyclotomic.hpp"

namespace qg {

/// Dense univariate polynomial over a cyclotomic field, ascending coefficients.
/// The zero polynomial is the empty vector.
using Poly = std::vector<FieldElement>;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p); // -1 for zero
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_monic(Poly p);
Poly poly_gcd(Poly a, Poly b); // monic
/// g = gcd(a,b) monic with u*a + v*b = g.
void poly_xgcd(Poly a, Poly b, Poly& g, Poly& u, Poly& v);
Poly poly_derivative(const Poly& p);
FieldElement poly_eval(const Poly& p, const FieldElement& x);
/// p with repeated factors stripped: p / gcd(p, p').
Poly poly_squarefree_part(const Poly& p);
std::string poly_str(const Poly& p, const std::string& var = "t");

/**
 * All roots of p that lie in the coefficient field Q(zeta_N), each verified
 * by exact evaluation. Candidates are located numerically (high-precision
 * Galois-conjugate matching), then reconstructed as exact field elements;
 * only candidates with p(x) = 0 exactly are returned. Deterministic order.
 */
std::vector<FieldElement> roots_in_field(const Poly& p);

/// Square roots of c in its own field (0, 1, or 2 values; sorted, exact).
std::vector<FieldElement> square_roots(const FieldElement& c);

} // namespace qg
