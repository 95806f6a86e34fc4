#pragma once

#include "qg/structure.hpp"
#include "qg/wedderburn.hpp"

namespace qg {

/// A left module over a quantum groupoid, given by its action matrices.
struct HModule {
    const QuantumGroupoid* parent = nullptr;
    int rank = 0;
    std::vector<Matrix> action; // action[a] = rho(e_a), rank x rank
    std::string label;

    Matrix act(const Vec& x) const; // rho(x)
    /// rho(1) = id and rho(e_a e_b) = rho(e_a) rho(e_b) on all basis pairs.
    bool is_valid(std::string* why = nullptr) const;
};

HModule regular_module(const QuantumGroupoid& h);

/// Truncated tensor product: the image of the Delta(1)-action inside the
/// plain tensor product, with its canonical (row-echelon) basis kept as an
/// explicit embedding into ambient coordinates.
struct ProductModule {
    HModule mod;
    Matrix embed; // (rank_V * rank_W) x mod.rank, columns = basis vectors
    int ambient_rank = 0;
};

ProductModule tensor_module(const HModule& v, const HModule& w);

/// Coordinates of an ambient vector lying in the truncated subspace.
Vec truncate_coords(const ProductModule& p, const Vec& ambient);

/// The unit object: H_t with the action h . z = eps_t(h z), carrying the
/// counital basis as its coordinate system.
struct UnitModule {
    HModule mod;
    std::vector<Vec> basis; // H_t basis vectors inside H
};
UnitModule unit_module(const QuantumGroupoid& h);

struct DualityMorphisms {
    Matrix b; // unit-module rank -> rank(V (x) V*)
    Matrix d; // rank(V* (x) V) -> unit-module rank
};

struct DualModuleData {
    HModule dual;
    DualityMorphisms duality;
    ProductModule v_vstar;  // V (x) V*
    ProductModule vstar_v;  // V* (x) V
};

/// Dual module with the antipode-twisted action and the evaluation /
/// coevaluation morphisms; the zig-zag identities are verified exactly.
DualModuleData dual_module_with_duality(const HModule& v, const UnitModule& unit);

/// Canonical basis of the space of intertwiners V -> W.
std::vector<Matrix> hom_space(const HModule& v, const HModule& w);

struct IrreducibleData {
    std::vector<HModule> modules;
    std::vector<Vec> characters; // chi_i as covectors on H
    WedderburnData wedderburn;
};

/// One irreducible per Wedderburn block, in the canonical block order.
IrreducibleData irreducibles(const QuantumGroupoid& h);

/// Left unitor l_V on the truncated product unit (x) V, its inverse, and the
/// right-hand analogues; all verified to be mutually inverse.
struct UnitorData {
    Matrix l, l_inv; // trunc(unit (x) V) <-> V
    Matrix r, r_inv; // trunc(V (x) unit) <-> V
    ProductModule unit_v, v_unit;
};
UnitorData unitors(const HModule& v, const UnitModule& unit);

} // namespace qg
