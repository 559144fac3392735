// SPDX-License-Identifier: Apache-2.0
//
// Structured variable names. Covers are written in a fixed cast of symbols:
// base coordinates x, cover radicals w (abelian) / u, z (dihedral), quotient
// coordinates z_{i,j} / U_i / Z_i, twist coordinates Z_{i,j}, and the
// W-coordinates s_i. Up to two numeric indices are carried in the name:
// "x2" is index (2), "w2_1" is index pair (2,1). Anything else is a generic
// symbol. The ordering (role, indices, spelling) is total and fixed; the
// canonical term order of every polynomial printed by the engine hangs off it.
#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace galtwist {

enum class VarRole : std::uint8_t {
    X = 0,     // base coordinates
    S,         // dihedral W-coordinates
    ULow,      // dihedral quadratic radical u
    W,         // abelian cover radicals
    ZLow,      // dihedral cyclic radical z; abelian quotient coordinates z_{i,j}
    UCap,      // dihedral quotient/twist coordinate U
    ZCap,      // twist coordinates Z_{i,j}; dihedral quotient/twist Z_i
    Generic,
};

struct VarName {
    VarRole role = VarRole::Generic;
    int i = -1;  // first index, -1 when absent
    int j = -1;  // second index, -1 when absent (requires i >= 0)
    std::string generic;  // spelling, Generic role only

    VarName() = default;

    static VarName make(VarRole r, int i_ = -1, int j_ = -1) {
        if (r == VarRole::Generic) throw std::invalid_argument("generic VarName needs a spelling");
        if (j_ >= 0 && i_ < 0) throw std::invalid_argument("VarName: second index without first");
        VarName v;
        v.role = r;
        v.i = i_;
        v.j = j_;
        return v;
    }
    static VarName named(std::string spelling) {
        VarName v;
        v.role = VarRole::Generic;
        v.generic = std::move(spelling);
        return v;
    }

    // Conventional constructors used by the cover machinery.
    static VarName x(int e) { return make(VarRole::X, e); }                 // base coordinate
    static VarName x(int copy, int e) { return make(VarRole::X, copy, e); }  // copy i, coordinate e
    static VarName x_free() { return make(VarRole::X); }                     // dihedral "x"
    static VarName s(int i_) { return make(VarRole::S, i_); }
    static VarName s_free() { return make(VarRole::S); }
    static VarName u(int i_) { return make(VarRole::ULow, i_); }
    static VarName u_free() { return make(VarRole::ULow); }
    static VarName w(int copy, int layer) { return make(VarRole::W, copy, layer); }
    static VarName z(int i_) { return make(VarRole::ZLow, i_); }
    static VarName z_quot(int i_, int layer) { return make(VarRole::ZLow, i_, layer); }
    static VarName U(int i_ = -1) { return make(VarRole::UCap, i_); }
    static VarName Z(int i_ = -1) { return make(VarRole::ZCap, i_); }
    static VarName Z_twist(int i_, int layer) { return make(VarRole::ZCap, i_, layer); }

    bool operator==(const VarName& o) const {
        return role == o.role && i == o.i && j == o.j && generic == o.generic;
    }
    bool operator<(const VarName& o) const {
        return std::tie(role, i, j, generic) < std::tie(o.role, o.i, o.j, o.generic);
    }

    std::string str() const {
        if (role == VarRole::Generic) return generic;
        std::string s(1, role_letter(role));
        if (i >= 0) s += std::to_string(i);
        if (j >= 0) {
            s += '_';
            s += std::to_string(j);
        }
        return s;
    }

    static char role_letter(VarRole r) {
        switch (r) {
            case VarRole::X: return 'x';
            case VarRole::S: return 's';
            case VarRole::ULow: return 'u';
            case VarRole::W: return 'w';
            case VarRole::ZLow: return 'z';
            case VarRole::UCap: return 'U';
            case VarRole::ZCap: return 'Z';
            default: throw std::logic_error("role_letter");
        }
    }

    /// Classify an identifier. "x1", "w2_3", "Z1", "u" get structured roles;
    /// everything else (including "zeta...") is a generic symbol.
    static VarName from_string(const std::string& name) {
        if (name.empty()) throw std::invalid_argument("empty variable name");
        VarRole r;
        switch (name[0]) {
            case 'x': r = VarRole::X; break;
            case 's': r = VarRole::S; break;
            case 'u': r = VarRole::ULow; break;
            case 'w': r = VarRole::W; break;
            case 'z': r = VarRole::ZLow; break;
            case 'U': r = VarRole::UCap; break;
            case 'Z': r = VarRole::ZCap; break;
            default: return named(name);
        }
        std::size_t pos = 1;
        int a = -1, b = -1;
        if (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) {
            a = 0;
            while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos])))
                a = a * 10 + (name[pos++] - '0');
        }
        if (pos < name.size() && name[pos] == '_' && a >= 0) {
            std::size_t q = pos + 1;
            if (q < name.size() && std::isdigit(static_cast<unsigned char>(name[q]))) {
                b = 0;
                while (q < name.size() && std::isdigit(static_cast<unsigned char>(name[q])))
                    b = b * 10 + (name[q++] - '0');
                pos = q;
            }
        }
        if (pos != name.size()) return named(name);  // e.g. "zeta6", "wave"
        return make(r, a, b);
    }
};

}  // namespace galtwist
