#pragma once

#include <memory>
#include <string>
#include <vector>

#include "parabraid/fock.hpp"
#include "parabraid/ideals.hpp"

namespace parabraid {

// A Fock-like submodule F(p) re-expressed as an abstract graded carrier:
// the basis vectors become the carrier basis and the raising/lowering images
// become exact matrices on it.
struct Carrier {
    int order = 1;
    int modes = 1;
    int cutoff = 0;
    std::shared_ptr<const SubmoduleBasis> closure;
    SpacePtr space;      // degrees/labels from the closure basis
    GenAssignment ops;   // restricted B_i^+/-
    int vacuum_index = 0;
};

// Carrier of F(p); order 2 is the Gamma(2) carrier of the self-contained
// relation set.
Carrier focklike_carrier(int order, int modes, int cutoff);
inline Carrier gamma2_carrier(int modes, int cutoff) { return focklike_carrier(2, modes, cutoff); }

// All Gamma(2) relators evaluated on a carrier (safe domain only).
RelatorReport verify_gamma2_relations(const Carrier& carrier);

struct GeneralizedAnsatzReport {
    int factors = 1;  // q
    int modes = 1;
    int cutoff = 0;
    bool slot_relations_pass = false;   // Gamma(2) relations inside each slot
    bool cross_relations_pass = false;  // anticommutators across distinct slots
    bool paraboson_pass = false;        // composite images satisfy the paraboson relators
    bool vacuum_eigenvalue_pass = false;
    Rational vacuum_eigenvalue;         // lambda with B_i^- B_j^+ |0..0> = lambda d_ij |0..0>
    std::vector<RelatorCheck> slot_checks;
    std::vector<RelatorCheck> paraboson_checks;
    std::vector<std::string> cross_failures;
    bool pass() const {
        return slot_relations_pass && cross_relations_pass && paraboson_pass &&
               vacuum_eigenvalue_pass;
    }
};

// q-fold braided tensor power of the Gamma(2) carrier with slot generators
// embedded through the graded sign rule; checks the mixed relation set, the
// paraboson relations of the summed images, and the vacuum eigenvalue.
GeneralizedAnsatzReport generalized_ansatz(int factors, int modes, int cutoff);

// Paraboson relators inside the truncated Gamma(2) ideal.
InclusionReport gamma2_ideal_check(int modes, int bound);

}  // namespace parabraid
