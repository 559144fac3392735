// SPDX-License-Identifier: Apache-2.0
//
// Group actions on cover rings. A Kummer layer acts by scaling its radical
// variables by a root of unity and fixing everything below; the abelian
// Galois group of a cover tower is the product of its layer actions, with
// each generator scaling w[i][j] by the *same* primitive n_j-th root in
// every copy i (the diagonal subgroup of the product group). Abstract
// finite groups appear as composition tables for the cocycle check.
#pragma once

#include "galtwist/multipoly.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace galtwist {

struct UndefinedActionError : std::invalid_argument {
    explicit UndefinedActionError(const VarName& v)
        : std::invalid_argument("group action undefined on variable " + v.str()) {}
};

/// Scales selected variables by powers of a fixed root of unity and fixes a
/// set of roles outright; any other variable has no defined image.
struct ScalingAction {
    std::string name;
    unsigned root_order = 1;
    std::map<VarName, int> scale_exponent;  // v -> k means v |-> zeta^k v
    std::set<VarRole> fixed_roles;
    std::set<VarName> fixed_vars;

    bool fixes(const VarName& v) const {
        return fixed_roles.count(v.role) > 0 || fixed_vars.count(v) > 0;
    }
};

inline CycloNumber lift_coeff(const Rational& c) { return CycloNumber(c); }
inline CycloNumber lift_coeff(const CycloNumber& c) { return c; }

inline MultiPoly<CycloNumber> lift_to_cyclo_generic(const MultiPoly<Rational>& p) {
    return lift_to_cyclo(p);
}
inline const MultiPoly<CycloNumber>& lift_to_cyclo_generic(const MultiPoly<CycloNumber>& p) {
    return p;
}

/// Applies a scaling action; the result always carries cyclotomic
/// coefficients. Ring homomorphism by construction.
template <class K>
MultiPoly<CycloNumber> apply_action(const ScalingAction& g, const MultiPoly<K>& p) {
    MultiPoly<CycloNumber> out;
    const CycloNumber zeta = CycloNumber::zeta(g.root_order);
    const long n = static_cast<long>(g.root_order);
    for (const auto& [m, c] : p.terms()) {
        long k = 0;
        for (const auto& [v, e] : m) {
            auto it = g.scale_exponent.find(v);
            if (it != g.scale_exponent.end())
                k += static_cast<long>(it->second) * e;
            else if (!g.fixes(v))
                throw UndefinedActionError(v);
        }
        CycloNumber factor = zeta.pow(((k % n) + n) % n);
        out.add_term(m, factor * lift_coeff(c));
    }
    return out;
}

template <class K>
bool is_invariant_under(const ScalingAction& g, const MultiPoly<K>& p) {
    return apply_action(g, p) == lift_to_cyclo_generic(p);
}

/// The diagonal Kummer action of the abelian Galois group on the m-fold
/// fiber product: generator j scales w[i][j] by zeta_{n_j} for every copy i
/// and fixes the base coordinates.
class KummerAction {
public:
    KummerAction(std::vector<unsigned> layer_orders, unsigned copies)
        : orders_(std::move(layer_orders)), copies_(copies) {
        if (copies_ < 1) throw std::invalid_argument("KummerAction: copies >= 1 required");
        for (unsigned n : orders_)
            if (n < 2) throw std::invalid_argument("KummerAction: layer order >= 2 required");
    }

    unsigned layers() const { return static_cast<unsigned>(orders_.size()); }
    unsigned copies() const { return copies_; }
    const std::vector<unsigned>& orders() const { return orders_; }

    /// Action of the j-th generator (1-based).
    ScalingAction generator(unsigned j) const {
        if (j < 1 || j > orders_.size()) throw std::invalid_argument("generator index out of range");
        ScalingAction g;
        g.name = "g" + std::to_string(j);
        g.root_order = orders_[j - 1];
        for (unsigned i = 1; i <= copies_; ++i) g.scale_exponent[VarName::w(i, j)] = 1;
        g.fixed_roles.insert(VarRole::X);
        for (unsigned i = 1; i <= copies_; ++i)
            for (unsigned jj = 1; jj <= orders_.size(); ++jj)
                if (jj != j) g.fixed_vars.insert(VarName::w(i, jj));
        return g;
    }

    /// g = (k_1, ..., k_r) acting through each generator k_j times.
    template <class K>
    MultiPoly<CycloNumber> apply_element(const std::vector<long>& k, const MultiPoly<K>& p) const {
        if (k.size() != orders_.size()) throw std::invalid_argument("element arity mismatch");
        MultiPoly<CycloNumber> cur = lift_to_cyclo_generic(p);
        for (unsigned j = 1; j <= orders_.size(); ++j) {
            ScalingAction g = generator(j);
            long times = ((k[j - 1] % orders_[j - 1]) + orders_[j - 1]) % orders_[j - 1];
            for (long t = 0; t < times; ++t) cur = apply_action(g, cur);
        }
        return cur;
    }

    template <class K>
    bool is_invariant(const MultiPoly<K>& p) const {
        for (unsigned j = 1; j <= orders_.size(); ++j)
            if (!is_invariant_under(generator(j), p)) return false;
        return true;
    }

private:
    std::vector<unsigned> orders_;
    unsigned copies_;
};

/// Finite group given by its composition table.
class GroupElementTable {
public:
    GroupElementTable(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                      int identity)
        : labels_(std::move(labels)), table_(std::move(table)), identity_(identity) {}

    std::size_t size() const { return labels_.size(); }
    int identity() const { return identity_; }
    const std::string& label(int g) const { return labels_.at(g); }

    int mul(int a, int b) const { return table_.at(a).at(b); }

    /// Identity, inverses and associativity. Associativity is checked in
    /// full for small tables and on a deterministic sample beyond that.
    bool is_group() const {
        const int n = static_cast<int>(size());
        if (identity_ < 0 || identity_ >= n) return false;
        for (int a = 0; a < n; ++a)
            if (mul(a, identity_) != a || mul(identity_, a) != a) return false;
        for (int a = 0; a < n; ++a) {
            bool has_inverse = false;
            for (int b = 0; b < n; ++b)
                if (mul(a, b) == identity_ && mul(b, a) == identity_) has_inverse = true;
            if (!has_inverse) return false;
        }
        if (n <= 24) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        } else {
            for (int s = 0; s < 24 * 24; ++s) {
                int a = (s * 7919) % n, b = (s * 104729) % n, c = (s * 1299709) % n;
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
            }
        }
        return true;
    }

    /// Z_{f_1} x ... x Z_{f_r} with componentwise addition.
    static GroupElementTable abelian(const std::vector<unsigned>& factors) {
        unsigned n = 1;
        for (unsigned f : factors) {
            if (f < 1) throw std::invalid_argument("abelian factor must be >= 1");
            n *= f;
        }
        auto decode = [&](unsigned idx) {
            std::vector<unsigned> t(factors.size());
            for (std::size_t k = 0; k < factors.size(); ++k) {
                t[k] = idx % factors[k];
                idx /= factors[k];
            }
            return t;
        };
        auto encode = [&](const std::vector<unsigned>& t) {
            unsigned idx = 0, s = 1;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                idx += t[k] * s;
                s *= factors[k];
            }
            return idx;
        };
        std::vector<std::string> labels(n);
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (unsigned a = 0; a < n; ++a) {
            auto ta = decode(a);
            std::string lab = "(";
            for (std::size_t k = 0; k < ta.size(); ++k)
                lab += (k ? "," : "") + std::to_string(ta[k]);
            labels[a] = lab + ")";
            for (unsigned b = 0; b < n; ++b) {
                auto tb = decode(b);
                std::vector<unsigned> tc(factors.size());
                for (std::size_t k = 0; k < factors.size(); ++k)
                    tc[k] = (ta[k] + tb[k]) % factors[k];
                table[a][b] = static_cast<int>(encode(tc));
            }
        }
        return GroupElementTable(std::move(labels), std::move(table), 0);
    }

    static GroupElementTable cyclic(unsigned n) { return abelian({n}); }

    /// D_n of order 2n; element b*n + a stands for sigma^a tau^b, with
    /// tau sigma tau = sigma^{-1}.
    static GroupElementTable dihedral(unsigned n) {
        if (n < 1) throw std::invalid_argument("dihedral order parameter must be >= 1");
        const unsigned N = 2 * n;
        std::vector<std::string> labels(N);
        std::vector<std::vector<int>> table(N, std::vector<int>(N));
        auto idx = [&](unsigned a, unsigned b) { return b * n + a; };
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < 2; ++b)
                labels[idx(a, b)] =
                    "sigma^" + std::to_string(a) + (b ? "*tau" : "");
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < 2; ++b)
                for (unsigned c = 0; c < n; ++c)
                    for (unsigned d = 0; d < 2; ++d) {
                        // (sigma^a tau^b)(sigma^c tau^d) = sigma^{a + (-1)^b c} tau^{b+d}
                        unsigned a2 = b ? (a + n - c % n) % n : (a + c) % n;
                        unsigned b2 = (b + d) % 2;
                        table[idx(a, b)][idx(c, d)] = static_cast<int>(idx(a2, b2));
                    }
        return GroupElementTable(std::move(labels), std::move(table), 0);
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    int identity_;
};

/// Cocycle condition for a trivial Galois action on the automorphism set:
/// a_{gh} = a_g . a_h for all g, h — i.e. a is a homomorphism into aut.
/// The inclusion a_g = g always passes.
inline bool cocycle_check(const GroupElementTable& group, const std::vector<int>& a,
                          const GroupElementTable& aut) {
    if (a.size() != group.size()) throw std::invalid_argument("cocycle map arity mismatch");
    for (int v : a)
        if (v < 0 || v >= static_cast<int>(aut.size()))
            throw std::invalid_argument("cocycle map value outside automorphism table");
    for (std::size_t g = 0; g < group.size(); ++g)
        for (std::size_t h = 0; h < group.size(); ++h)
            if (a[group.mul(static_cast<int>(g), static_cast<int>(h))] !=
                aut.mul(a[g], a[h]))
                return false;
    return true;
}

/// The two layer actions of a dihedral cover tower on m copies:
/// sigma scales every z_i by zeta_n and fixes x, s, u; tau negates every
/// u_i and fixes x, s, z. tau's action on the z-layer is not part of the
/// coordinate model and stays undefined.
inline std::pair<ScalingAction, ScalingAction> dihedral_layer_actions(unsigned n, unsigned copies = 1) {
    if (n < 2) throw std::invalid_argument("dihedral_layer_actions: n >= 2 required");
    ScalingAction sigma;
    sigma.name = "sigma";
    sigma.root_order = n;
    for (unsigned i = 1; i <= copies; ++i) sigma.scale_exponent[VarName::z(i)] = 1;
    sigma.scale_exponent[VarName::make(VarRole::ZLow)] = 1;  // free-standing z
    sigma.fixed_roles = {VarRole::X, VarRole::S, VarRole::ULow};

    ScalingAction tau;
    tau.name = "tau";
    tau.root_order = 2;
    for (unsigned i = 1; i <= copies; ++i) tau.scale_exponent[VarName::u(i)] = 1;
    tau.scale_exponent[VarName::make(VarRole::ULow)] = 1;  // free-standing u
    tau.fixed_roles = {VarRole::X, VarRole::S};  // z stays outside tau's domain
    return {sigma, tau};
}

}  // namespace galtwist
