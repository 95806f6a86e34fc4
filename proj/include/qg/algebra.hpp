#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "qg/linalg.hpp"
#include "qg/polynomial.hpp"

namespace qg {

/// Sparse element: sorted (index, nonzero coefficient) pairs.
using Sp = std::vector<std::pair<long, FieldElement>>;

Sp sp_from_dense(const Vec& v);
Vec sp_to_dense(const Sp& s, long conductor, long dim);
Sp sp_scale(const FieldElement& c, const Sp& s);
Sp sp_add(const Sp& a, const Sp& b);
Sp sp_unit(long index, const FieldElement& coeff);
bool sp_is_zero(const Sp& s);

/// Accumulator for building sparse elements with many small contributions.
class SpAcc {
public:
    void add(long index, const FieldElement& c);
    void add(const Sp& s, const FieldElement& scale);
    void add(const Sp& s);
    Sp done() const;

private:
    std::map<long, FieldElement> m_;
};

// --- tensor-leg index helpers (all legs have the same dimension n) ---

long tensor_index(const std::vector<long>& legs, long n);
std::vector<long> tensor_split(long index, long n, int k);

/// x on k1 legs, y on k2 legs -> x (x) y on k1+k2 legs.
Sp tensor_join(const Sp& x, int k1, const Sp& y, int k2, long n);
/// Permute legs: result leg p carries old leg perm[p].
Sp permute_legs(const Sp& x, int k, const std::vector<int>& perm, long n);
/// Contract one leg with a covector (k -> k-1 legs).
Sp contract_leg(const Sp& x, int k, int leg, const Vec& covector, long n);
/// Apply a linear map (square matrix) to one leg.
Sp apply_matrix_leg(const Sp& x, int k, int leg, const Matrix& m, long n);

/// Structure constants of a finite-dimensional associative unital algebra.
struct MultTable {
    long conductor = 1;
    int n = 0;
    std::vector<std::vector<Sp>> t; // t[i][j] = e_i * e_j
    Vec unit;
    /// Cached structure constants of the tensor-square algebra (small n only).
    std::shared_ptr<const std::vector<std::vector<Sp>>> pair_table;

    /// Populate pair_table when n <= 16; cheap no-op otherwise.
    void build_pair_table();

    Sp mul(const Sp& x, const Sp& y) const;
    Vec mul(const Vec& x, const Vec& y) const;
    /// Product in the k-fold tensor power of the algebra.
    Sp mul_k(int k, const Sp& x, const Sp& y) const;
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& x) const;
    Vec power(const Vec& x, long e) const;
    /// Multiplicative inverse by linear solve; nullopt when not invertible.
    std::optional<Vec> inverse(const Vec& x) const;
    bool is_associative_unital(std::string* why = nullptr) const;
};

/// Canonical basis of the center.
std::vector<Vec> center_basis(const MultTable& a);
/// Canonical basis of the centralizer of a set of elements.
std::vector<Vec> centralizer_basis(const MultTable& a, const std::vector<Vec>& elems);
/// Canonical basis of the unital subalgebra generated by the given elements.
std::vector<Vec> subalgebra_closure(const MultTable& a, std::vector<Vec> gens);

/// Monic minimal polynomial of left multiplication by x on the span of
/// `subspace` (which must be invariant); the constant term acts via the
/// subspace's own unit, i.e. this is the minimal polynomial of x relative
/// to the identity `unit_elem`.
Poly relative_minimal_polynomial(const MultTable& a, const Vec& x, const std::vector<Vec>& subspace,
                                 const Vec& unit_elem);

/// Evaluate a polynomial at an algebra element, using `unit_elem` for the
/// constant term.
Vec algebra_poly_eval(const MultTable& a, const Poly& p, const Vec& x, const Vec& unit_elem);

/// Run fn(i) for i in [0, count) on a couple of worker threads when count is
/// large; falls back to a serial loop otherwise. fn must be thread-safe.
void parallel_for(long count, const std::function<void(long)>& fn);

/// Quotient of a coordinate space by a subspace, with the canonical section
/// spanned by the non-pivot coordinates of the subspace's RREF basis.
struct QuotientSpace {
    long conductor = 1;
    long big = 0;
    std::vector<Vec> rows;      // RREF basis of the subspace
    std::vector<long> pivots;   // pivot column per row
    std::vector<long> section;  // non-pivot coordinates, ascending

    static QuotientSpace make(long conductor, long big, const std::vector<Vec>& subspace);
    long dim() const { return big - static_cast<long>(rows.size()); }
    /// Coordinates of x + J in the section basis.
    Vec project(const Vec& x) const;
    Sp project_sp(const Sp& x) const;
    /// The canonical representative of a section-coordinate vector.
    Vec lift(const Vec& small) const;
    Sp lift_sp(const Sp& small) const;
    bool contains(const Vec& x) const; // x in the subspace?
};

} // namespace qg
