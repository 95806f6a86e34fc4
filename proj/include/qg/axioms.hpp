#pragma once

#include "qg/groupoid.hpp"

namespace qg {

struct AxiomCheck {
    std::string name;
    bool passed = false;
    std::string witness; // basis elements where the identity breaks, empty on pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const;
    const AxiomCheck* find(const std::string& name) const;
    std::string summary() const;
};

/**
 * Exhaustive exact verification of the defining identities of a quantum
 * groupoid on all basis tuples: associativity/unitality, coassociativity and
 * the counit law, multiplicativity of the comultiplication, the coproduct
 * compatibility of the unit, the weak multiplicativity of the counit, both
 * antipode counital identities, and the antipode's anti-(co)multiplicativity.
 * Failures carry a witness tuple.
 */
AxiomReport validate_axioms(const QuantumGroupoid& h);

} // namespace qg
