#pragma once

#include "qg/groupoid.hpp"

namespace qg {

/// A finite groupoid: objects, invertible morphisms, composition table.
struct GroupoidSpec {
    struct Morphism {
        int source = 0, target = 0;
        std::string label;
    };
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    /// composition[g][h] = index of g o h when source(g) == target(h), else -1.
    std::vector<std::vector<int>> composition;
    std::vector<int> inverses;
    std::vector<int> identities; // identity morphism per object

    int size() const { return static_cast<int>(morphisms.size()); }
    /// Category axioms plus invertibility; throws InvalidGroupoid.
    void validate() const;

    static GroupoidSpec pair_groupoid(int n_objects);
    static GroupoidSpec cyclic_group(int n);
    static GroupoidSpec symmetric_group_3();
    /// Disjoint union of one-object trivial groupoids (identity morphisms only).
    static GroupoidSpec disjoint_units(int n_objects);
};

/// Groupoid algebra kG (dual=false) or its function-algebra dual (dual=true),
/// with the involution from morphism inversion attached.
QuantumGroupoid groupoid_algebra(const GroupoidSpec& g, bool dual_side = false);

/// H = End(B) for the multi-matrix algebra B determined by the partition,
/// with counital subalgebra isomorphic to B, the canonical corner R-matrix,
/// ribbon element 1, and the Hermitian-adjoint star structure attached.
QuantumGroupoid elementary(const std::vector<int>& partition);

struct BopbResult {
    QuantumGroupoid h;
    Vec g_q; // q (x) q, the implementer of S^2
};

/// B^op (x) B for a multi-matrix algebra B = sum of blocks of the given
/// sizes, twisted by an invertible q with pi(q) = 1. `q_diag` lists the
/// diagonal entries of q blockwise (empty means q = 1).
BopbResult bopb(const std::vector<int>& blocks, const std::vector<FieldElement>& q_diag = {},
                long conductor = 1);

/// Double crossed product of the group algebra of `group` acting on a set of
/// `n_points` points via `action[g][x]`.
QuantumGroupoid transformation_groupoid(const GroupoidSpec& group,
                                        const std::vector<std::vector<int>>& action, int n_points);

/// The dimension-13 quantum groupoid on the level-5 Temperley-Lieb quotient
/// (only n = 2 is supported; conductor 5).
QuantumGroupoid temperley_lieb(int n = 2);

/// The loop parameter data used by temperley_lieb, exposed for tests.
struct TLData {
    FieldElement lambda;  // e_i e_{i+-1} e_i = lambda e_i
    FieldElement delta;   // diagram loop value, delta^2 = 1/lambda
    Vec markov_trace;     // tau as a covector on the quotient basis
    Vec jones_projection; // f
    Vec index_element;    // w
    Matrix sigma;         // the rotation anti-automorphism on the quotient
};
TLData temperley_lieb_data();

} // namespace qg
