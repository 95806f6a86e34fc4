#pragma once

#include "qg/algebra.hpp"

namespace qg {

/**
 * Full decomposition of a split semisimple algebra: central primitive
 * idempotents, block dimensions, irreducible characters, and one explicit
 * irreducible action per block. Blocks are ordered by ascending dimension,
 * then lexicographically by character values on the algebra basis.
 */
struct WedderburnData {
    std::vector<Vec> idempotents;               // e_1..e_m, central primitive
    std::vector<int> block_dims;                // d_1..d_m
    std::vector<Vec> characters;                // chi_i as covectors on the basis
    std::vector<std::vector<Matrix>> actions;   // actions[i][a] = rho_i(e_a)
    std::vector<std::vector<Vec>> module_bases; // ambient basis of each minimal left ideal

    int blocks() const { return static_cast<int>(idempotents.size()); }
};

/**
 * Decompose an associative unital algebra given by structure constants.
 * The center is split by factoring minimal polynomials of center elements
 * drawn from a fixed deterministic sequence (basis elements, pairwise sums,
 * pairwise products, then shifted sums), so all outputs are reproducible.
 *
 * Throws NotSemisimpleError when the trace form is degenerate and
 * NotSplitError (naming the offending polynomial) when an eigenvalue does
 * not lie in the declared cyclotomic field.
 */
WedderburnData wedderburn(const MultTable& a);

/// The trace form Tr(L_x L_y) as a matrix on the basis.
Matrix trace_form(const MultTable& a);
bool is_semisimple(const MultTable& a);

} // namespace qg
