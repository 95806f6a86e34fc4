#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qg/algebra.hpp"

namespace qg {

struct RMatrixData {
    Sp r;    // element of H (x) H
    Sp rbar; // generalized inverse in the opposite corner
};

struct StarData {
    /// x* = matrix * (coefficientwise conjugate of x); antilinear.
    Matrix matrix;
};

/**
 * A finite quantum groupoid (weak Hopf algebra): an algebra and coalgebra on
 * one space with an antipode. Structure tensors are stored sparsely; the
 * comultiplication need not preserve the unit, so Delta(1) is kept cached.
 * Optional quasitriangular, ribbon and star data ride along when a generator
 * provides them. Values are immutable after construction.
 */
class QuantumGroupoid {
public:
    QuantumGroupoid(MultTable mul, std::vector<Sp> comul, Vec counit, Matrix antipode,
                    std::vector<std::string> labels = {});

    int dim() const { return mul_.n; }
    long conductor() const { return mul_.conductor; }
    const MultTable& algebra() const { return mul_; }
    const Vec& unit() const { return mul_.unit; }
    const Vec& counit() const { return counit_; }
    const Matrix& antipode() const { return antipode_; }
    const std::vector<Sp>& comul_table() const { return comul_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int i) const;

    // element operations
    Vec mul(const Vec& x, const Vec& y) const { return mul_.mul(x, y); }
    Sp mul(const Sp& x, const Sp& y) const { return mul_.mul(x, y); }
    Sp mul2(const Sp& x, const Sp& y) const { return mul_.mul_k(2, x, y); }
    Sp mul3(const Sp& x, const Sp& y) const { return mul_.mul_k(3, x, y); }
    /// Delta applied to an element of H (1 leg -> 2 legs), or to one leg of a tensor.
    Sp comul(const Sp& x) const;
    Sp comul_leg(const Sp& x, int k, int leg) const;
    FieldElement eps(const Sp& x) const;
    FieldElement eps(const Vec& x) const;
    Vec apply_antipode(const Vec& x) const { return antipode_ * x; }
    Sp apply_antipode(const Sp& x) const;

    const Sp& delta_unit() const { return delta1_; }          // Delta(1)
    const Sp& delta_unit_op() const { return delta1_op_; }    // Delta^op(1)
    Sp delta_unit_k(int k) const;                             // iterated Delta^(k)(1), k >= 1 legs

    /// Target and source counital projections as matrices.
    const Matrix& eps_t() const { return eps_t_; }
    const Matrix& eps_s() const { return eps_s_; }
    Matrix ad1_left() const;  // h -> 1_(1) h S(1_(2))
    Matrix ad1_right() const; // h -> S(1_(1)) h 1_(2)

    // attached data
    std::optional<RMatrixData> r_matrix;
    std::optional<Vec> ribbon;
    std::optional<StarData> star;

    /// Apply the star involution (requires attached star data).
    Vec apply_star(const Vec& x) const;

private:
    MultTable mul_;
    std::vector<Sp> comul_;
    Vec counit_;
    Matrix antipode_;
    std::vector<std::string> labels_;

    Sp delta1_, delta1_op_;
    Matrix eps_t_, eps_s_;
};

/// Conjugate every coefficient (the antilinear part of a star structure).
Vec conj_coeffs(const Vec& x);
Matrix conj_coeffs(const Matrix& m);

} // namespace qg
