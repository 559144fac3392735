// SPDX-License-Identifier: Apache-2.0
//
// Constructions for abelian and dihedral covers: m-fold fiber products,
// invariant quotient generators, quotient and twist presentations, and the
// distinguished rational points on the twist.
//
// Exponents are never transcribed from a formula sheet. Every exponent
// (invariance exponent a, quotient exponent c, twist exponent t) is derived
// by searching the small candidate range and validating each candidate with
// the appropriate oracle: the diagonal Kummer action for a, normal-form
// reduction in the cover ring for c and t. The derived values are reported
// next to the divisibility-chain formulas n_j - d_j and d_j (d_j = n_j/n_1)
// so disagreements are visible instead of silently resolved.
#pragma once

#include "galtwist/coverring.hpp"
#include "galtwist/galois.hpp"
#include "galtwist/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galtwist {

using PolyQ = MultiPoly<Rational>;
using RelationSystemQ = CoverRelationSystem<Rational>;

struct SpecIssues {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

struct AbelianLayer {
    unsigned n = 0;
    PolyQ f;
};

/// An abelian cover of P^ell in normal form w_j^{n_j} = f_j(x_1..x_ell)
/// with n_1 | n_2 | ... | n_r, fiber-multiplied m times.
struct AbelianCoverSpec {
    unsigned ell = 1;
    std::vector<AbelianLayer> layers;
    unsigned m = 1;

    unsigned rank() const { return static_cast<unsigned>(layers.size()); }
    std::vector<unsigned> orders() const {
        std::vector<unsigned> v;
        for (const auto& l : layers) v.push_back(l.n);
        return v;
    }

    SpecIssues validate() const {
        SpecIssues issues;
        if (ell < 1) issues.errors.push_back("ell must be >= 1");
        if (m < 1) issues.errors.push_back("m must be >= 1");
        if (layers.empty()) issues.errors.push_back("at least one cover layer required");
        for (std::size_t j = 0; j < layers.size(); ++j) {
            const auto& layer = layers[j];
            std::string tag = "layer " + std::to_string(j + 1);
            if (layer.n < 2) issues.errors.push_back(tag + ": order must be >= 2");
            if (layer.f.is_zero()) issues.errors.push_back(tag + ": f is zero");
            for (const VarName& v : layer.f.variables()) {
                bool base = v.role == VarRole::X && v.j < 0 && v.i >= 1 &&
                            v.i <= static_cast<int>(ell);
                if (!base)
                    issues.errors.push_back(tag + ": variable " + v.str() +
                                            " is not a base coordinate x1..x" + std::to_string(ell));
            }
            if (!layer.f.is_zero() && layer.f.is_constant())
                issues.warnings.push_back(tag + ": constant f (degenerate cover layer)");
        }
        for (std::size_t j = 0; j + 1 < layers.size(); ++j)
            if (layers[j].n != 0 && layers[j + 1].n % layers[j].n != 0)
                issues.errors.push_back("divisibility chain violated: n_" + std::to_string(j + 1) +
                                        " = " + std::to_string(layers[j].n) + " does not divide n_" +
                                        std::to_string(j + 2) + " = " + std::to_string(layers[j + 1].n));
        return issues;
    }
};

/// A dihedral cover of P^1: u^2 = f(x), z^n = g(x, u) with g of u-degree
/// at most 1 after reduction modulo u^2 = f.
struct DihedralCoverSpec {
    unsigned n = 2;
    PolyQ f;
    PolyQ g;
    unsigned m = 1;

    bool g_depends_on_u() const { return g.degree_in(VarName::u_free()) > 0; }

    /// g reduced modulo u^2 = f; callers should store the reduced form.
    PolyQ reduce_g() const {
        RelationSystemQ sys({{VarName::u_free(), 2, f}},
                            level_map());
        return normal_form(g, sys);
    }

    std::map<VarName, int> level_map() const {
        std::map<VarName, int> levels;
        for (const VarName& v : f.variables()) levels[v] = 0;
        for (const VarName& v : g.variables())
            if (!(v == VarName::u_free())) levels[v] = 0;
        levels[VarName::u_free()] = 1;
        return levels;
    }

    SpecIssues validate() const {
        SpecIssues issues;
        if (n < 2) issues.errors.push_back("n must be >= 2");
        if (m < 1) issues.errors.push_back("m must be >= 1");
        if (f.is_zero()) issues.errors.push_back("f is zero");
        for (const VarName& v : f.variables())
            if (!(v == VarName::x_free()))
                issues.errors.push_back("f: variable " + v.str() + " is not the base coordinate x");
        if (g.is_zero()) issues.errors.push_back("g is zero");
        for (const VarName& v : g.variables())
            if (!(v == VarName::x_free()) && !(v == VarName::u_free()))
                issues.errors.push_back("g: variable " + v.str() + " is not x or u");
        if (issues.errors.empty()) {
            if (reduce_g().is_zero())
                issues.errors.push_back("g vanishes modulo u^2 = f");
            if (!f.is_zero() && f.is_constant())
                issues.warnings.push_back("constant f (degenerate quadratic layer)");
        }
        return issues;
    }
};

/// Affine presentation: named variables and the polynomials that vanish.
/// `relations` is the function-field model used for normal-form reduction;
/// `point_slots` maps free variables of a twist chart to point coordinates.
struct PresentedVariety {
    std::string name;
    std::vector<VarName> variables;
    std::vector<PolyQ> equations;
    std::optional<RelationSystemQ> relations;
    std::map<VarName, int> point_slots;
    std::vector<std::string> notes;
};

/// Point with fraction coordinates (num, den) in cover-ring variables;
/// denominators are nonzero polynomials.
struct SymbolicPoint {
    std::string label;
    std::vector<std::pair<PolyQ, PolyQ>> coords;
};

struct InvariantGenerator {
    VarName name;
    PolyQ monomial;
    unsigned copy = 0;   // i in 1..m-1
    unsigned layer = 0;  // j in 1..r
};

struct InvariantGenerators {
    std::vector<unsigned> a;  // per layer, derived invariance exponent
    std::vector<InvariantGenerator> generators;
};

struct QuotientPresentation {
    PresentedVariety variety;
    std::vector<unsigned> a;  // invariance exponents backing the z-definitions
    std::vector<unsigned> c;  // derived quotient exponents
    std::vector<std::string> notes;
};

struct TwistPresentation {
    PresentedVariety variety;
    std::vector<unsigned> t;  // derived twist exponents (empty when m = 1)
    std::vector<std::string> notes;
};

namespace detail {

/// Substitutes copy-indexed coordinates into a base polynomial:
/// x_e -> x_{copy,e} for the abelian chart.
inline PolyQ instantiate_abelian(const PolyQ& f, unsigned copy) {
    std::map<VarName, PolyQ> sigma;
    for (const VarName& v : f.variables())
        sigma.emplace(v, PolyQ::variable(VarName::x(static_cast<int>(copy), v.i)));
    return f.substitute(sigma);
}

/// x -> x_copy, u -> u_copy for the dihedral chart.
inline PolyQ instantiate_dihedral(const PolyQ& p, unsigned copy) {
    std::map<VarName, PolyQ> sigma;
    sigma.emplace(VarName::x_free(), PolyQ::variable(VarName::x(static_cast<int>(copy))));
    sigma.emplace(VarName::u_free(), PolyQ::variable(VarName::u(static_cast<int>(copy))));
    return p.substitute(sigma);
}

struct ExponentSearch {
    unsigned value = 0;
    bool unique = true;
    bool found = false;
};

/// Smallest e in [lo, hi] with pred(e), recording whether it was unique.
template <class Pred>
ExponentSearch search_exponent(unsigned lo, unsigned hi, Pred&& pred) {
    ExponentSearch r;
    for (unsigned e = lo; e <= hi; ++e) {
        if (!pred(e)) continue;
        if (!r.found) {
            r.found = true;
            r.value = e;
        } else {
            r.unique = false;
        }
    }
    return r;
}

}  // namespace detail

/// The m-fold fiber product U_m: w_{i,j}^{n_j} = f_j(x_{i,1..ell}).
inline PresentedVariety fiber_product(const AbelianCoverSpec& spec) {
    SpecIssues issues = spec.validate();
    if (!issues.ok()) throw std::invalid_argument("malformed cover spec: " + issues.errors.front());
    PresentedVariety v;
    v.name = "product U_" + std::to_string(spec.m);
    std::map<VarName, int> levels;
    std::vector<CoverRelation<Rational>> relations;
    for (unsigned i = 1; i <= spec.m; ++i)
        for (unsigned e = 1; e <= spec.ell; ++e) {
            v.variables.push_back(VarName::x(i, e));
            levels[VarName::x(i, e)] = 0;
        }
    for (unsigned i = 1; i <= spec.m; ++i)
        for (unsigned j = 1; j <= spec.rank(); ++j) {
            VarName w = VarName::w(i, j);
            v.variables.push_back(w);
            levels[w] = 1;
            PolyQ fi = detail::instantiate_abelian(spec.layers[j - 1].f, i);
            v.equations.push_back(PolyQ::variable(w).pow(spec.layers[j - 1].n) - fi);
            relations.push_back({w, static_cast<int>(spec.layers[j - 1].n), fi});
        }
    v.relations = RelationSystemQ(std::move(relations), std::move(levels));
    return v;
}

/// Quotient coordinates z_{i,j} = w_{1,j}^{a_j} w_{i+1,j} with a_j derived
/// from the invariance condition under the diagonal Kummer action.
inline InvariantGenerators invariant_generators(const AbelianCoverSpec& spec) {
    if (spec.m < 2) throw std::invalid_argument("invariant_generators requires m >= 2");
    KummerAction action(spec.orders(), spec.m);
    InvariantGenerators out;
    for (unsigned j = 1; j <= spec.rank(); ++j) {
        unsigned nj = spec.layers[j - 1].n;
        auto search = detail::search_exponent(1, nj - 1, [&](unsigned a) {
            PolyQ cand = PolyQ::variable(VarName::w(1, j)).pow(a) * PolyQ::variable(VarName::w(2, j));
            return action.is_invariant(cand);
        });
        if (!search.found)
            throw std::logic_error("no invariance exponent for layer " + std::to_string(j));
        if (!search.unique)
            throw std::logic_error("invariance exponent not unique for layer " + std::to_string(j));
        out.a.push_back(search.value);
    }
    for (unsigned i = 1; i < spec.m; ++i)
        for (unsigned j = 1; j <= spec.rank(); ++j) {
            InvariantGenerator gen;
            gen.name = VarName::z_quot(i, j);
            gen.monomial = PolyQ::variable(VarName::w(1, j)).pow(out.a[j - 1]) *
                           PolyQ::variable(VarName::w(static_cast<int>(i) + 1, j));
            gen.copy = i;
            gen.layer = j;
            out.generators.push_back(std::move(gen));
        }
    return out;
}

/// The quotient V_m: z_{i,j}^{n_j} = f_j(x_1)^{c_j} f_j(x_{i+1}), with c_j
/// derived as the exponent that turns the equation into an identity after
/// substituting the defining monomial and reducing in the cover ring.
inline QuotientPresentation quotient_presentation(const AbelianCoverSpec& spec) {
    if (spec.m < 2) throw std::invalid_argument("quotient_presentation requires m >= 2");
    PresentedVariety product = fiber_product(spec);
    InvariantGenerators gens = invariant_generators(spec);
    QuotientPresentation out;
    out.a = gens.a;

    for (unsigned j = 1; j <= spec.rank(); ++j) {
        unsigned nj = spec.layers[j - 1].n;
        PolyQ f1 = detail::instantiate_abelian(spec.layers[j - 1].f, 1);
        PolyQ f2 = detail::instantiate_abelian(spec.layers[j - 1].f, 2);
        PolyQ zdef = PolyQ::variable(VarName::w(1, j)).pow(gens.a[j - 1]) *
                     PolyQ::variable(VarName::w(2, j));
        PolyQ lhs = zdef.pow(nj);
        auto search = detail::search_exponent(0, 2 * nj, [&](unsigned c) {
            return is_zero_mod(lhs - f1.pow(c) * f2, *product.relations);
        });
        if (!search.found)
            throw std::logic_error("no consistent quotient exponent for layer " + std::to_string(j));
        if (!search.unique)
            out.notes.push_back("layer " + std::to_string(j) +
                                ": quotient exponent not unique (degenerate f); smallest kept");
        out.c.push_back(search.value);
    }

    PresentedVariety& v = out.variety;
    v.name = "quotient V_" + std::to_string(spec.m);
    std::map<VarName, int> levels;
    std::vector<CoverRelation<Rational>> relations;
    for (unsigned i = 1; i <= spec.m; ++i)
        for (unsigned e = 1; e <= spec.ell; ++e) {
            v.variables.push_back(VarName::x(i, e));
            levels[VarName::x(i, e)] = 0;
        }
    for (unsigned i = 1; i < spec.m; ++i)
        for (unsigned j = 1; j <= spec.rank(); ++j) {
            VarName z = VarName::z_quot(i, j);
            v.variables.push_back(z);
            levels[z] = 1;
            unsigned nj = spec.layers[j - 1].n;
            PolyQ rhs = detail::instantiate_abelian(spec.layers[j - 1].f, 1).pow(out.c[j - 1]) *
                        detail::instantiate_abelian(spec.layers[j - 1].f, static_cast<int>(i) + 1);
            v.equations.push_back(PolyQ::variable(z).pow(nj) - rhs);
            relations.push_back({z, static_cast<int>(nj), rhs});
        }
    v.relations = RelationSystemQ(std::move(relations), std::move(levels));
    return out;
}

/// The twist chart: f_j(x_1)^{t_j} Z_{i,j}^{n_j} = f_j(x_{i+1}), with t_j
/// derived as the exponent for which the trivializing substitution
/// Z_{i,j} -> w_{i+1,j}/w_{1,j} lands in the relation ideal.
inline TwistPresentation twist_presentation(const AbelianCoverSpec& spec) {
    SpecIssues issues = spec.validate();
    if (!issues.ok()) throw std::invalid_argument("malformed cover spec: " + issues.errors.front());
    TwistPresentation out;
    PresentedVariety& v = out.variety;
    v.name = "twist";
    if (spec.m < 2) {
        v.notes.push_back("m = 1: the twist chart has no equations (no second copy to twist against)");
        out.notes = v.notes;
        return out;
    }
    PresentedVariety product = fiber_product(spec);
    for (unsigned j = 1; j <= spec.rank(); ++j) {
        unsigned nj = spec.layers[j - 1].n;
        PolyQ f1 = detail::instantiate_abelian(spec.layers[j - 1].f, 1);
        PolyQ f2 = detail::instantiate_abelian(spec.layers[j - 1].f, 2);
        PolyQ w1n = PolyQ::variable(VarName::w(1, j)).pow(nj);
        PolyQ w2n = PolyQ::variable(VarName::w(2, j)).pow(nj);
        auto search = detail::search_exponent(0, 2 * nj, [&](unsigned t) {
            return is_zero_mod(f1.pow(t) * w2n - f2 * w1n, *product.relations);
        });
        if (!search.found)
            throw std::logic_error("no consistent twist exponent for layer " + std::to_string(j));
        if (!search.unique)
            out.notes.push_back("layer " + std::to_string(j) +
                                ": twist exponent not unique (degenerate f); smallest kept");
        out.t.push_back(search.value);
    }

    for (unsigned i = 1; i <= spec.m; ++i)
        for (unsigned e = 1; e <= spec.ell; ++e) v.variables.push_back(VarName::x(i, e));
    for (unsigned i = 1; i < spec.m; ++i)
        for (unsigned j = 1; j <= spec.rank(); ++j) v.variables.push_back(VarName::Z_twist(i, j));

    for (unsigned i = 1; i < spec.m; ++i)
        for (unsigned j = 1; j <= spec.rank(); ++j) {
            unsigned nj = spec.layers[j - 1].n;
            PolyQ f1 = detail::instantiate_abelian(spec.layers[j - 1].f, 1);
            PolyQ fi = detail::instantiate_abelian(spec.layers[j - 1].f, static_cast<int>(i) + 1);
            v.equations.push_back(f1.pow(out.t[j - 1]) *
                                      PolyQ::variable(VarName::Z_twist(i, j)).pow(nj) -
                                  fi);
        }

    for (unsigned i = 1; i < spec.m; ++i) {
        for (unsigned e = 1; e <= spec.ell; ++e)
            v.point_slots[VarName::x(static_cast<int>(i) + 1, e)] = static_cast<int>(e) - 1;
        for (unsigned j = 1; j <= spec.rank(); ++j)
            v.point_slots[VarName::Z_twist(i, j)] = static_cast<int>(spec.ell + j) - 1;
    }
    out.notes = v.notes;
    return out;
}

/// The m distinguished rational points on the twist chart. P_1 has all
/// twist coordinates 1; P_{i+1} carries the coordinates of the (i+1)-st
/// copy and the radical ratios w_{i+1,j}/w_{1,j}.
inline std::vector<SymbolicPoint> rational_points(const AbelianCoverSpec& spec) {
    SpecIssues issues = spec.validate();
    if (!issues.ok()) throw std::invalid_argument("malformed cover spec: " + issues.errors.front());
    std::vector<SymbolicPoint> points;
    const PolyQ one = PolyQ::constant(Rational(1));
    for (unsigned p = 1; p <= spec.m; ++p) {
        SymbolicPoint pt;
        pt.label = "P" + std::to_string(p);
        for (unsigned e = 1; e <= spec.ell; ++e)
            pt.coords.emplace_back(PolyQ::variable(VarName::x(p, e)), one);
        for (unsigned j = 1; j <= spec.rank(); ++j) {
            if (p == 1)
                pt.coords.emplace_back(one, one);
            else
                pt.coords.emplace_back(PolyQ::variable(VarName::w(p, j)),
                                       PolyQ::variable(VarName::w(1, j)));
        }
        points.push_back(std::move(pt));
    }
    return points;
}

// ---------------------------------------------------------------------------
// Dihedral pipeline
// ---------------------------------------------------------------------------

struct DihedralLayerInfo {
    std::string layer;    // "u" or "z"
    unsigned order = 0;   // 2 resp. n
    unsigned a = 0;       // invariance exponent of the quotient coordinate
    unsigned c = 0;       // quotient exponent
    unsigned t = 0;       // twist exponent
};

struct DihedralArtifacts {
    PresentedVariety product;          // C_m
    InvariantGenerators generators;    // U_i then Z_i
    QuotientPresentation quotient;
    TwistPresentation twist;
    std::vector<SymbolicPoint> points;
    std::vector<DihedralLayerInfo> layer_info;
    std::vector<std::string> notes;
};

/// Builds the whole dihedral tower with the same derivation discipline as
/// the abelian path, applied layer-wise: the Z_2-layer (u, U) and the
/// Z_n-layer (z, Z). For u-free g the W-coordinates s_i are identified with
/// the base coordinates x_i; when g involves u the s-slot of each point
/// carries the u-coordinate and the Z-layer statements are convention-
/// dependent (flagged in the notes).
inline DihedralArtifacts dihedral_pipeline(const DihedralCoverSpec& raw_spec) {
    SpecIssues issues = raw_spec.validate();
    if (!issues.ok()) throw std::invalid_argument("malformed dihedral spec: " + issues.errors.front());

    DihedralCoverSpec spec = raw_spec;
    spec.g = raw_spec.reduce_g();
    const bool with_u = spec.g_depends_on_u();
    DihedralArtifacts out;
    if (with_u)
        out.notes.push_back(
            "g involves u: s-coordinates are read as the pair (x, u); Z-layer statements are "
            "convention-dependent");

    // Product C_m with the stratified relation system x < u < z.
    PresentedVariety& prod = out.product;
    prod.name = "product C_" + std::to_string(spec.m);
    std::map<VarName, int> levels;
    std::vector<CoverRelation<Rational>> relations;
    for (unsigned i = 1; i <= spec.m; ++i) {
        levels[VarName::x(static_cast<int>(i))] = 0;
        prod.variables.push_back(VarName::x(static_cast<int>(i)));
    }
    for (unsigned i = 1; i <= spec.m; ++i) {
        VarName u = VarName::u(static_cast<int>(i));
        prod.variables.push_back(u);
        levels[u] = 1;
        PolyQ fi = detail::instantiate_dihedral(spec.f, i);
        prod.equations.push_back(PolyQ::variable(u).pow(2) - fi);
        relations.push_back({u, 2, fi});
    }
    for (unsigned i = 1; i <= spec.m; ++i) {
        VarName z = VarName::z(static_cast<int>(i));
        prod.variables.push_back(z);
        levels[z] = 2;
        PolyQ gi = detail::instantiate_dihedral(spec.g, i);
        prod.equations.push_back(PolyQ::variable(z).pow(spec.n) - gi);
        relations.push_back({z, static_cast<int>(spec.n), gi});
    }
    prod.relations = RelationSystemQ(std::move(relations), std::move(levels));

    if (spec.m < 2) {
        out.twist.variety.name = "twist";
        out.quotient.variety.name = "quotient Y_1 chart";
        out.notes.push_back("m = 1: no quotient generators and no twist equations");
        out.twist.variety.notes.push_back(
            "m = 1: the twist chart has no equations (no second copy to twist against)");
        SymbolicPoint p1;
        p1.label = "P1";
        const PolyQ one = PolyQ::constant(Rational(1));
        p1.coords.emplace_back(PolyQ::variable(VarName::x(1)), one);
        p1.coords.emplace_back(with_u ? PolyQ::variable(VarName::u(1)) : PolyQ::variable(VarName::x(1)),
                               one);
        p1.coords.emplace_back(one, one);
        p1.coords.emplace_back(one, one);
        out.points.push_back(std::move(p1));
        return out;
    }

    auto [sigma, tau] = dihedral_layer_actions(spec.n, spec.m);

    // Layer-wise invariance exponents: U_i = u_1^{a_u} u_{i+1} under tau,
    // Z_i = z_1^{a_z} z_{i+1} under sigma.
    auto a_u_search = detail::search_exponent(1, 1, [&](unsigned a) {
        PolyQ cand = PolyQ::variable(VarName::u(1)).pow(a) * PolyQ::variable(VarName::u(2));
        return is_invariant_under(tau, cand) && is_invariant_under(sigma, cand);
    });
    auto a_z_search = detail::search_exponent(1, spec.n - 1, [&](unsigned a) {
        PolyQ cand = PolyQ::variable(VarName::z(1)).pow(a) * PolyQ::variable(VarName::z(2));
        return is_invariant_under(sigma, cand);
    });
    if (!a_u_search.found || !a_z_search.found)
        throw std::logic_error("no invariance exponent for a dihedral layer");
    if (!a_z_search.unique) throw std::logic_error("dihedral z-layer invariance exponent not unique");
    const unsigned a_u = a_u_search.value, a_z = a_z_search.value;

    for (unsigned i = 1; i < spec.m; ++i) {
        InvariantGenerator gen;
        gen.name = VarName::U(static_cast<int>(i));
        gen.monomial =
            PolyQ::variable(VarName::u(1)).pow(a_u) * PolyQ::variable(VarName::u(static_cast<int>(i) + 1));
        gen.copy = i;
        gen.layer = 1;
        out.generators.generators.push_back(std::move(gen));
    }
    for (unsigned i = 1; i < spec.m; ++i) {
        InvariantGenerator gen;
        gen.name = VarName::Z(static_cast<int>(i));
        gen.monomial =
            PolyQ::variable(VarName::z(1)).pow(a_z) * PolyQ::variable(VarName::z(static_cast<int>(i) + 1));
        gen.copy = i;
        gen.layer = 2;
        out.generators.generators.push_back(std::move(gen));
    }
    out.generators.a = {a_u, a_z};

    // Quotient exponents via the rewriting oracle.
    PolyQ f1 = detail::instantiate_dihedral(spec.f, 1);
    PolyQ f2 = detail::instantiate_dihedral(spec.f, 2);
    PolyQ g1 = detail::instantiate_dihedral(spec.g, 1);
    PolyQ g2 = detail::instantiate_dihedral(spec.g, 2);
    const RelationSystemQ& ring = *prod.relations;

    PolyQ Udef = PolyQ::variable(VarName::u(1)).pow(a_u) * PolyQ::variable(VarName::u(2));
    auto c_u_search = detail::search_exponent(0, 4, [&](unsigned c) {
        return is_zero_mod(Udef.pow(2) - f1.pow(c) * f2, ring);
    });
    PolyQ Zdef = PolyQ::variable(VarName::z(1)).pow(a_z) * PolyQ::variable(VarName::z(2));
    auto c_z_search = detail::search_exponent(0, 2 * spec.n, [&](unsigned c) {
        return is_zero_mod(Zdef.pow(spec.n) - g1.pow(c) * g2, ring);
    });
    if (!c_u_search.found || !c_z_search.found)
        throw std::logic_error("no consistent dihedral quotient exponent");
    const unsigned c_u = c_u_search.value, c_z = c_z_search.value;

    QuotientPresentation& quot = out.quotient;
    quot.a = {a_u, a_z};
    quot.c = {c_u, c_z};
    if (!c_u_search.unique || !c_z_search.unique)
        quot.notes.push_back("quotient exponent not unique (degenerate layer); smallest kept");
    quot.variety.name = "quotient Y_" + std::to_string(spec.m) + " chart";
    for (unsigned i = 1; i <= spec.m; ++i) quot.variety.variables.push_back(VarName::x(static_cast<int>(i)));
    if (with_u)
        for (unsigned i = 1; i <= spec.m; ++i)
            quot.variety.variables.push_back(VarName::u(static_cast<int>(i)));
    for (unsigned i = 1; i < spec.m; ++i) quot.variety.variables.push_back(VarName::U(static_cast<int>(i)));
    for (unsigned i = 1; i < spec.m; ++i) quot.variety.variables.push_back(VarName::Z(static_cast<int>(i)));
    {
        std::map<VarName, int> qlevels;
        std::vector<CoverRelation<Rational>> qrelations;
        for (unsigned i = 1; i <= spec.m; ++i) qlevels[VarName::x(static_cast<int>(i))] = 0;
        if (with_u)
            for (unsigned i = 1; i <= spec.m; ++i) qlevels[VarName::u(static_cast<int>(i))] = 0;
        for (unsigned i = 1; i < spec.m; ++i) {
            PolyQ rhs = f1.pow(c_u) * detail::instantiate_dihedral(spec.f, i + 1);
            quot.variety.equations.push_back(
                PolyQ::variable(VarName::U(static_cast<int>(i))).pow(2) - rhs);
            qrelations.push_back({VarName::U(static_cast<int>(i)), 2, rhs});
            qlevels[VarName::U(static_cast<int>(i))] = 1;
        }
        for (unsigned i = 1; i < spec.m; ++i) {
            PolyQ rhs = g1.pow(c_z) * detail::instantiate_dihedral(spec.g, i + 1);
            quot.variety.equations.push_back(
                PolyQ::variable(VarName::Z(static_cast<int>(i))).pow(spec.n) - rhs);
            qrelations.push_back({VarName::Z(static_cast<int>(i)), static_cast<int>(spec.n), rhs});
            qlevels[VarName::Z(static_cast<int>(i))] = 1;
        }
        quot.variety.relations = RelationSystemQ(std::move(qrelations), std::move(qlevels));
    }

    // Twist exponents: trivialize U -> u_2/u_1, Z -> z_2/z_1.
    auto t_u_search = detail::search_exponent(0, 4, [&](unsigned t) {
        return is_zero_mod(f1.pow(t) * PolyQ::variable(VarName::u(2)).pow(2) -
                               f2 * PolyQ::variable(VarName::u(1)).pow(2),
                           ring);
    });
    auto t_z_search = detail::search_exponent(0, 2 * spec.n, [&](unsigned t) {
        return is_zero_mod(g1.pow(t) * PolyQ::variable(VarName::z(2)).pow(spec.n) -
                               g2 * PolyQ::variable(VarName::z(1)).pow(spec.n),
                           ring);
    });
    if (!t_u_search.found || !t_z_search.found)
        throw std::logic_error("no consistent dihedral twist exponent");
    const unsigned t_u = t_u_search.value, t_z = t_z_search.value;

    TwistPresentation& twist = out.twist;
    twist.t = {t_u, t_z};
    twist.variety.name = "twist";
    twist.variety.notes = out.notes;
    // Free chart variables x (and u when g needs it), U, Z; the copy-1
    // coordinates enter as constants of the invariant function field.
    twist.variety.variables.push_back(VarName::x_free());
    if (with_u) twist.variety.variables.push_back(VarName::u_free());
    twist.variety.variables.push_back(VarName::x(1));
    if (with_u) twist.variety.variables.push_back(VarName::u(1));
    twist.variety.variables.push_back(VarName::U());
    twist.variety.variables.push_back(VarName::Z());

    twist.variety.equations.push_back(f1.pow(t_u) * PolyQ::variable(VarName::U()).pow(2) - spec.f);
    twist.variety.equations.push_back(g1.pow(t_z) * PolyQ::variable(VarName::Z()).pow(spec.n) - spec.g);

    twist.variety.point_slots[VarName::x_free()] = 0;
    twist.variety.point_slots[with_u ? VarName::u_free() : VarName::s_free()] = 1;
    twist.variety.point_slots[VarName::U()] = 2;
    twist.variety.point_slots[VarName::Z()] = 3;

    // Points: P_1 = (x_1, s_1, 1, 1); P_{i+1} = (x_{i+1}, s_{i+1},
    // U_i/f(x_1), Z_i/g(s_1)) with the generators written out in radicals.
    const PolyQ one = PolyQ::constant(Rational(1));
    for (unsigned p = 1; p <= spec.m; ++p) {
        SymbolicPoint pt;
        pt.label = "P" + std::to_string(p);
        pt.coords.emplace_back(PolyQ::variable(VarName::x(static_cast<int>(p))), one);
        pt.coords.emplace_back(with_u ? PolyQ::variable(VarName::u(static_cast<int>(p)))
                                      : PolyQ::variable(VarName::x(static_cast<int>(p))),
                               one);
        if (p == 1) {
            pt.coords.emplace_back(one, one);
            pt.coords.emplace_back(one, one);
        } else {
            pt.coords.emplace_back(PolyQ::variable(VarName::u(1)).pow(a_u) *
                                       PolyQ::variable(VarName::u(static_cast<int>(p))),
                                   f1);
            pt.coords.emplace_back(PolyQ::variable(VarName::z(1)).pow(a_z) *
                                       PolyQ::variable(VarName::z(static_cast<int>(p))),
                                   g1);
        }
        out.points.push_back(std::move(pt));
    }

    out.layer_info.push_back({"u", 2, a_u, c_u, t_u});
    out.layer_info.push_back({"z", spec.n, a_z, c_z, t_z});
    return out;
}

}  // namespace galtwist
