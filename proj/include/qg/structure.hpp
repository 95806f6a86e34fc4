#pragma once

#include "qg/axioms.hpp"
#include "qg/groupoid.hpp"

namespace qg {

/// Counital maps, subalgebras, separability elements and adjoint projections.
struct CounitalData {
    Matrix eps_t, eps_s;
    std::vector<Vec> ht_basis, hs_basis; // row-echelon canonical
    Sp e_t, e_s;                         // separability elements of H_t, H_s
    Matrix ad1_left, ad1_right;
};

/// Computes the counital data and verifies the projection identities and that
/// the antipode restricts to an anti-isomorphism H_t -> H_s.
CounitalData counital_data(const QuantumGroupoid& h);

/// The dual quantum groupoid on the dual basis. Applying it twice reproduces
/// the original structure tensors on the nose.
QuantumGroupoid dual(const QuantumGroupoid& h);

enum class Variant { Op, Cop, OpCop };

/// Opposite / co-opposite / both; the antipode becomes S^{-1} for the first
/// two. Output is validated. Throws AntipodeNotInvertible when needed.
QuantumGroupoid variant(const QuantumGroupoid& h, Variant which);

struct CenterReport {
    std::vector<Vec> center;     // canonical basis of Z(H)
    bool connected = false;      // dim(H_t intersect Z) == 1
};

CenterReport center_and_connectedness(const QuantumGroupoid& h);

/// Normalized two-sided integral, or nullopt when none exists. Uniqueness is
/// asserted (a violation raises InternalError).
std::optional<Vec> haar_integral(const QuantumGroupoid& h);

/// Checks that f (a dim(K) x dim(H) matrix) preserves multiplication, unit,
/// comultiplication, counit, and commutes with the antipodes.
bool is_morphism(const Matrix& f, const QuantumGroupoid& h, const QuantumGroupoid& k);

/// Canonical basis of the intersection of two spans.
std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b, long conductor,
                                 int dim);

} // namespace qg
