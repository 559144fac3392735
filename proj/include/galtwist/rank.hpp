// SPDX-License-Identifier: Apache-2.0
//
// Mordell-Weil structure predictor. The endomorphism rank and the torsion
// of the target abelian variety are user-supplied descriptors, never
// computed: rk = 1 models a generic elliptic factor, rk = 2 one with
// complex multiplication.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galtwist {

struct AbelianVarietyDescriptor {
    std::string label = "A";
    std::optional<unsigned> dimension;    // informational
    unsigned rk_end = 1;                  // rank of End_k as a Z-module
    std::vector<unsigned> torsion;        // cyclic orders of A[n](k), possibly empty
    bool assert_no_extra_factor = true;   // no further component isogenous to A

    void validate() const {
        if (rk_end < 1) throw std::invalid_argument("rk_end must be >= 1");
        for (unsigned t : torsion)
            if (t < 2) throw std::invalid_argument("torsion orders must be >= 2");
    }
};

/// Named presets for common descriptor choices.
inline AbelianVarietyDescriptor descriptor_preset(const std::string& name) {
    AbelianVarietyDescriptor d;
    if (name == "generic-elliptic") {
        d.label = "E";
        d.dimension = 1;
        d.rk_end = 1;
    } else if (name == "cm-elliptic") {
        d.label = "E_CM";
        d.dimension = 1;
        d.rk_end = 2;
    } else {
        throw std::invalid_argument("unknown descriptor preset: " + name);
    }
    return d;
}

struct MWPrediction {
    unsigned rank = 0;
    std::string group_shape;
    bool lower_bound_only = false;
    std::vector<std::string> notes;
};

/// rank = m * rk(End_k(A)); a lower bound when the no-extra-factor
/// hypothesis is not asserted.
inline unsigned predict_mw_rank(const AbelianVarietyDescriptor& A, unsigned m,
                                std::vector<std::string>* notes = nullptr) {
    A.validate();
    if (!A.assert_no_extra_factor && notes)
        notes->push_back("no-extra-factor hypothesis not asserted: the value is only a lower bound");
    return m * A.rk_end;
}

/// Structure (End_k(A))^m + A[n](k) with the torsion echoed from the
/// descriptor; n is the cover degree.
inline MWPrediction predict_mw_group(const AbelianVarietyDescriptor& A, unsigned m, unsigned n) {
    A.validate();
    MWPrediction p;
    p.rank = m * A.rk_end;
    std::string tors;
    if (A.torsion.empty()) {
        tors = "0";
    } else {
        for (std::size_t k = 0; k < A.torsion.size(); ++k)
            tors += (k ? " x " : "") + ("Z/" + std::to_string(A.torsion[k]));
    }
    p.group_shape = "(End_k(" + A.label + "))^" + std::to_string(m) + " + " + A.label + "[" +
                    std::to_string(n) + "](k) = Z^" + std::to_string(p.rank) + " + " + tors;
    if (!A.assert_no_extra_factor) {
        p.lower_bound_only = true;
        p.notes.push_back("contains at least the stated free part (no-extra-factor not asserted)");
    }
    p.notes.push_back("free rank counts m copies of End_k(" + A.label + "), rk = " +
                      std::to_string(A.rk_end));
    return p;
}

/// Dihedral special case: the quotient tower identifies the relevant
/// abelian variety with (Jac C)^m, so the rank formula is the same.
inline unsigned dihedral_jacobian_rank(const AbelianVarietyDescriptor& jac, unsigned m,
                                       std::vector<std::string>* notes = nullptr) {
    if (notes)
        notes->push_back("identification: P(C_m/Y_m) = (Jac C)^m (Albanese of a curve = Jacobian)");
    return predict_mw_rank(jac, m, notes);
}

}  // namespace galtwist
