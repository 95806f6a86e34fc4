#pragma once

#include "qg/rep.hpp"

namespace qg {

/// Validated quasitriangular data: the corner element R with its generalized
/// inverse, the derived invertible element implementing S^2, and the map into
/// the centralizer of the source subalgebra used by the factorizability test.
struct QTData {
    const QuantumGroupoid* parent = nullptr;
    RMatrixData r;
    Vec u, u_inv; // u = S(R'') R'
    Vec v, v_inv; // v = S(u)
    Matrix f_map; // phi -> (phi (x) id)(R21 R) as a matrix dual -> H
    std::vector<Vec> ws_basis; // basis of { phi : phi = phi o Ad1^r } in dual coordinates
};

struct RValidation {
    std::vector<AxiomCheck> checks; // definitional requirements with witnesses
    std::optional<QTData> data;     // set when every definitional check passes
    bool ok() const { return data.has_value(); }
    std::string summary() const;
};

/**
 * Validates a candidate R against the defining conditions (corner membership,
 * intertwining of the two coproducts, both coproduct factorization laws, and
 * existence of the generalized inverse). When those pass, a battery of
 * derived identities (Yang-Baxter, counital images, antipode symmetries, the
 * source/target commutation rules, and the S^2-implementer identities) is
 * asserted; their failure aborts with InternalError since it can only come
 * from a bug, not from input data. rbar may be empty, in which case the
 * generalized inverse is solved for.
 */
RValidation validate_r(const QuantumGroupoid& h, const Sp& r, const Sp& rbar = {});

/// Convenience: validate the R attached to the groupoid.
RValidation validate_attached_r(const QuantumGroupoid& h);

struct FactorizabilityReport {
    bool factorizable = false;
    int rank_on_ws = 0;
    int centralizer_dim = 0;
};

FactorizabilityReport factorizability(const QTData& qt);

/**
 * All ribbon elements: central invertible nu with S(nu) = nu and
 * Delta(nu) = R21 R (nu (x) nu). The search enumerates square roots of the
 * inverse of the central element v u blockwise and filters exactly; an empty
 * result is legitimate. Throws SquareRootNotInField when a block scalar has
 * no square root in the field, NotSemisimpleError/NotSplitError from the
 * block decomposition.
 */
std::vector<Vec> find_ribbons(const QTData& qt);

/// The dimension-doubling extension H + H nu with a formal ribbon element
/// adjoined; the result carries the same R and the new ribbon attached.
QuantumGroupoid ribbon_extension(const QTData& qt);

struct BraidingData {
    Matrix c;      // trunc(V (x) W) -> trunc(W (x) V)
    Matrix c_inv;  // inverse, from the generalized inverse of R
    ProductModule vw, wv;
};

/// The braiding on a pair of modules, with hexagon-style compatibility and
/// naturality left to the callers' tests. theta_V is the action of nu.
BraidingData braiding(const HModule& v, const HModule& w, const QTData& qt);
Matrix twist(const HModule& v, const Vec& nu);

/// Scalar quantum trace of an endomorphism in truncated coordinates
/// (connected case): (dim H_t)^{-1} Tr(rho(u nu) f). Throws NotConnectedError
/// on a disconnected groupoid.
FieldElement quantum_trace(const Matrix& f, const HModule& v, const QTData& qt, const Vec& nu);
FieldElement quantum_dim(const HModule& v, const QTData& qt, const Vec& nu);

/// H_t-valued quantum trace for the general (possibly disconnected) case:
/// returns the matrix of z -> Tr(rho(S(1_(1)) u nu) f) z 1_(2) on H_t.
Matrix quantum_trace_map(const Matrix& f, const HModule& v, const QTData& qt, const Vec& nu,
                         const UnitModule& unit);

} // namespace qg
