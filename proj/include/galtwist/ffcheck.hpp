// SPDX-License-Identifier: Apache-2.0
//
// Finite-field oracle. Constructions are reduced modulo a small prime,
// genuine cover points are sampled by exhaustive root search, and the
// twisted point coordinates are checked against the twist equations by
// plain evaluation. This path is deliberately independent of the symbolic
// rewriting path: nothing here reduces modulo the relation ideal.
#pragma once

#include "galtwist/construct.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace galtwist {

struct BadPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadReductionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of F_p. p = 0 marks a modulus-free integer literal (the additive
/// and multiplicative identities of generic code); any arithmetic with a
/// committed element adopts its modulus.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t prime) : v(prime ? value % prime : value), p(prime) {}

    bool is_literal() const { return p == 0; }

    static std::uint64_t common_mod(const Fp& a, const Fp& b) {
        if (a.p && b.p && a.p != b.p) throw std::invalid_argument("Fp modulus mismatch");
        return a.p ? a.p : b.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t m = common_mod(a, b);
        if (!m) return Fp(a.v + b.v, 0);
        return Fp((a.v % m + b.v % m) % m, m);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t m = common_mod(a, b);
        if (!m) throw std::invalid_argument("Fp subtraction needs a modulus");
        return Fp((a.v % m + m - b.v % m) % m, m);
    }
    Fp operator-() const {
        if (!p) throw std::invalid_argument("Fp negation needs a modulus");
        return Fp((p - v % p) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t m = common_mod(a, b);
        if (!m) return Fp(a.v * b.v, 0);
        return Fp((a.v % m) * (b.v % m) % m, m);
    }
    Fp inverse() const {
        if (!p) throw std::invalid_argument("Fp inverse needs a modulus");
        if (v % p == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p), new_r = static_cast<long long>(v % p);
        while (new_r != 0) {
            long long q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        long long tt = t % static_cast<long long>(p);
        if (tt < 0) tt += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(tt), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp pow(std::uint64_t e) const {
        if (!p) throw std::invalid_argument("Fp pow needs a modulus");
        Fp acc(1, p), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint64_t m = a.p ? a.p : b.p;
        if (!m) return a.v == b.v;
        return a.v % m == b.v % m;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    bool is_zero() const { return p ? v % p == 0 : v == 0; }
};

template <>
struct CoeffTraits<Fp> {
    static bool is_zero(const Fp& c) { return c.is_zero(); }
    static Fp one() { return Fp(1, 0); }
    static Fp one_like(const Fp& c) { return Fp(1, c.p); }
    static std::string str(const Fp& c) { return std::to_string(c.v); }
    static std::pair<bool, Fp> print_sign(const Fp& c) { return {false, c}; }
    static bool is_one(const Fp& c) { return c.p ? c.v % c.p == 1 : c.v == 1; }
    static bool needs_parens(const Fp&) { return false; }
};

/// Rational coefficient mod p; the denominator must be a unit.
inline Fp reduce_mod_p(const Rational& q, std::uint64_t p) {
    BigInt num = numerator(q) % BigInt(p);
    BigInt den = denominator(q) % BigInt(p);
    if (den == 0) throw BadReductionError("denominator vanishes mod " + std::to_string(p));
    std::uint64_t n = static_cast<std::uint64_t>(num < 0 ? num + BigInt(p) : num);
    std::uint64_t d = static_cast<std::uint64_t>(den);
    return Fp(n, p) * Fp(d, p).inverse();
}

inline MultiPoly<Fp> reduce_mod_p(const MultiPoly<Rational>& poly, std::uint64_t p) {
    MultiPoly<Fp> out;
    for (const auto& [m, c] : poly.terms()) out.add_term(m, reduce_mod_p(c, p));
    return out;
}

/// Full evaluation; every variable of the polynomial must be assigned.
inline Fp evaluate(const MultiPoly<Fp>& poly, const std::map<VarName, Fp>& assignment,
                   std::uint64_t p) {
    Fp acc(0, p);
    for (const auto& [m, c] : poly.terms()) {
        Fp term = c;
        for (const auto& [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("evaluate: unassigned variable " + v.str());
            term = term * it->second.pow(static_cast<std::uint64_t>(e));
        }
        acc = acc + term;
    }
    return acc;
}

inline Fp evaluate(const MultiPoly<Rational>& poly, const std::map<VarName, Fp>& assignment,
                   std::uint64_t p) {
    return evaluate(reduce_mod_p(poly, p), assignment, p);
}

/// A sampled point of the cover over F_p: assignments for all base and
/// radical variables satisfying every cover equation.
struct FFSample {
    std::uint64_t p = 0;
    std::map<VarName, Fp> assignment;
};

namespace detail {

inline std::vector<std::uint64_t> nth_roots(Fp value, unsigned n, std::uint64_t p) {
    std::vector<std::uint64_t> roots;
    for (std::uint64_t w = 0; w < p; ++w)
        if (Fp(w, p).pow(n) == value) roots.push_back(w);
    return roots;
}

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

/// Randomized search for a genuine cover point over F_p: draw the base
/// coordinates, then solve each radical equation by exhaustive root search.
/// Returns nothing when the trial budget is exhausted.
inline std::optional<FFSample> sample_cover_point(const AbelianCoverSpec& spec, std::uint64_t p,
                                                  unsigned trials, std::mt19937_64& rng) {
    if (!detail::is_prime_u64(p)) throw BadPrimeError("p = " + std::to_string(p) + " is not prime");
    for (const auto& layer : spec.layers)
        if (layer.n % p == 0)
            throw BadPrimeError("p = " + std::to_string(p) + " divides the layer order " +
                                std::to_string(layer.n));
    std::uniform_int_distribution<std::uint64_t> draw(0, p - 1);
    for (unsigned trial = 0; trial < trials; ++trial) {
        FFSample sample;
        sample.p = p;
        bool ok = true;
        for (unsigned i = 1; i <= spec.m && ok; ++i) {
            for (unsigned e = 1; e <= spec.ell; ++e)
                sample.assignment[VarName::x(i, e)] = Fp(draw(rng), p);
            for (unsigned j = 1; j <= spec.rank() && ok; ++j) {
                PolyQ fi = detail::instantiate_abelian(spec.layers[j - 1].f, i);
                Fp val = evaluate(fi, sample.assignment, p);
                auto roots = detail::nth_roots(val, spec.layers[j - 1].n, p);
                if (roots.empty()) {
                    ok = false;
                    break;
                }
                std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
                sample.assignment[VarName::w(i, j)] = Fp(roots[pick(rng)], p);
            }
        }
        if (ok) return sample;
    }
    return std::nullopt;
}

inline std::optional<FFSample> sample_cover_point(const DihedralCoverSpec& spec, std::uint64_t p,
                                                  unsigned trials, std::mt19937_64& rng) {
    if (!detail::is_prime_u64(p)) throw BadPrimeError("p = " + std::to_string(p) + " is not prime");
    if (2 % p == 0 || spec.n % p == 0)
        throw BadPrimeError("p = " + std::to_string(p) + " divides a layer order");
    PolyQ g = spec.reduce_g();
    std::uniform_int_distribution<std::uint64_t> draw(0, p - 1);
    for (unsigned trial = 0; trial < trials; ++trial) {
        FFSample sample;
        sample.p = p;
        bool ok = true;
        for (unsigned i = 1; i <= spec.m && ok; ++i) {
            sample.assignment[VarName::x(static_cast<int>(i))] = Fp(draw(rng), p);
            Fp fval = evaluate(detail::instantiate_dihedral(spec.f, i), sample.assignment, p);
            auto uroots = detail::nth_roots(fval, 2, p);
            if (uroots.empty()) {
                ok = false;
                break;
            }
            std::uniform_int_distribution<std::size_t> upick(0, uroots.size() - 1);
            sample.assignment[VarName::u(static_cast<int>(i))] = Fp(uroots[upick(rng)], p);
            Fp gval = evaluate(detail::instantiate_dihedral(g, i), sample.assignment, p);
            auto zroots = detail::nth_roots(gval, spec.n, p);
            if (zroots.empty()) {
                ok = false;
                break;
            }
            std::uniform_int_distribution<std::size_t> zpick(0, zroots.size() - 1);
            sample.assignment[VarName::z(static_cast<int>(i))] = Fp(zroots[zpick(rng)], p);
        }
        if (ok) return sample;
    }
    return std::nullopt;
}

/// Confirms that a sample satisfies every cover equation (the FFSample
/// invariant); useful as a self-check after sampling.
inline bool sample_satisfies_cover(const FFSample& sample, const PresentedVariety& product) {
    for (const PolyQ& eq : product.equations)
        if (!evaluate(eq, sample.assignment, sample.p).is_zero()) return false;
    return true;
}

enum class FFCheckOutcome { Pass, Fail, ZeroDenominator };

/// Evaluates each constructed point's coordinates on the sample and checks
/// every twist equation by brute-force evaluation mod p. A vanishing
/// symbolic denominator invalidates the sample (resample) rather than
/// failing the check.
inline FFCheckOutcome check_twist_point_ff(const FFSample& sample, const PresentedVariety& twist_chart,
                                           const std::vector<SymbolicPoint>& points) {
    const std::uint64_t p = sample.p;
    for (const auto& pt : points) {
        std::vector<Fp> slots;
        for (const auto& [num, den] : pt.coords) {
            Fp d = evaluate(den, sample.assignment, p);
            if (d.is_zero()) return FFCheckOutcome::ZeroDenominator;
            slots.push_back(evaluate(num, sample.assignment, p) / d);
        }
        for (const PolyQ& eq : twist_chart.equations) {
            std::map<VarName, Fp> assignment = sample.assignment;
            for (const auto& [var, slot] : twist_chart.point_slots) {
                if (slot < 0 || slot >= static_cast<int>(slots.size()))
                    throw std::invalid_argument("point slot out of range for " + var.str());
                assignment[var] = slots[slot];
            }
            if (!evaluate(eq, assignment, p).is_zero()) return FFCheckOutcome::Fail;
        }
    }
    return FFCheckOutcome::Pass;
}

struct EnumerationResult {
    std::uint64_t count = 0;
    std::vector<std::map<VarName, std::uint64_t>> solutions;
    bool truncated = false;  // solution list capped, count still exact
};

/// Exact solution count of a polynomial system over F_p by full
/// enumeration, desk scale only.
inline EnumerationResult enumerate_solutions(const std::vector<MultiPoly<Fp>>& eqs, std::uint64_t p,
                                             const std::vector<VarName>& vars,
                                             std::uint64_t budget = 10'000'000,
                                             std::size_t max_solutions = 100'000) {
    double size = 1;
    for (std::size_t k = 0; k < vars.size(); ++k) size *= static_cast<double>(p);
    if (size > static_cast<double>(budget))
        throw BudgetExceededError("enumeration budget exceeded: p^" + std::to_string(vars.size()) +
                                  " > " + std::to_string(budget));
    EnumerationResult res;
    std::vector<std::uint64_t> tuple(vars.size(), 0);
    while (true) {
        std::map<VarName, Fp> assignment;
        for (std::size_t k = 0; k < vars.size(); ++k) assignment[vars[k]] = Fp(tuple[k], p);
        bool all_zero = true;
        for (const auto& eq : eqs)
            if (!evaluate(eq, assignment, p).is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            ++res.count;
            if (res.solutions.size() < max_solutions) {
                std::map<VarName, std::uint64_t> sol;
                for (std::size_t k = 0; k < vars.size(); ++k) sol[vars[k]] = tuple[k];
                res.solutions.push_back(std::move(sol));
            } else {
                res.truncated = true;
            }
        }
        std::size_t k = 0;
        for (; k < tuple.size(); ++k) {
            if (++tuple[k] < p) break;
            tuple[k] = 0;
        }
        if (k == tuple.size()) break;
    }
    return res;
}

}  // namespace galtwist
