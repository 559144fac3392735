// SPDX-License-Identifier: Apache-2.0
//
// Sparse multivariate polynomials over an exact coefficient domain
// (Rational, CycloNumber, or a prime field). Terms live in a map keyed by
// monomial under descending graded-lex order, so iteration starts at the
// leading term and printing is canonical: parse(format(p)) == p.
#pragma once

#include "galtwist/cyclotomic.hpp"
#include "galtwist/rational.hpp"
#include "galtwist/varname.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace galtwist {

/// Exponent map; zero exponents are never stored.
using Monomial = std::map<VarName, int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) {
        int& x = r[v];
        x += e;
        if (x == 0) r.erase(v);
    }
    return r;
}

/// True iff a divides b; on success q = b / a.
inline bool mono_divides(const Monomial& a, const Monomial& b, Monomial& q) {
    q = b;
    for (const auto& [v, e] : a) {
        auto it = q.find(v);
        if (it == q.end() || it->second < e) return false;
        it->second -= e;
        if (it->second == 0) q.erase(it);
    }
    return true;
}

/// Graded-lex: compare total degree first, then lexicographically on the
/// fixed variable order (higher exponent on an earlier variable wins).
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) return 1;   // a has the earlier variable
        if (ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    if (ia != a.end()) return 1;
    if (ib != b.end()) return -1;
    return 0;
}

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

// ---------------------------------------------------------------------------
// Coefficient domain hooks. A domain needs zero tests, a "one" witness and
// deterministic printing; domains whose elements carry runtime context (a
// prime modulus) only provide one_like.
// ---------------------------------------------------------------------------
template <class K>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
    static bool is_zero(const Rational& c) { return c == 0; }
    static Rational one() { return Rational(1); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static std::string str(const Rational& c) { return to_string(c); }
    // Splits the printing sign: (negative?, magnitude).
    static std::pair<bool, Rational> print_sign(const Rational& c) {
        return c < 0 ? std::make_pair(true, Rational(-c)) : std::make_pair(false, c);
    }
    static bool is_one(const Rational& c) { return c == 1; }
    static bool needs_parens(const Rational&) { return false; }
};

template <>
struct CoeffTraits<CycloNumber> {
    static bool is_zero(const CycloNumber& c) { return c.is_zero(); }
    static CycloNumber one() { return CycloNumber(1); }
    static CycloNumber one_like(const CycloNumber&) { return CycloNumber(1); }
    static std::string str(const CycloNumber& c) { return c.str(); }
    static std::pair<bool, CycloNumber> print_sign(const CycloNumber& c) {
        // Only a single negative basis term counts as "negative" for printing;
        // multi-term coefficients print inside parentheses with their own signs.
        int nonzero = 0;
        bool neg = false;
        for (const Rational& q : c.coeffs())
            if (q != 0) {
                ++nonzero;
                neg = q < 0;
            }
        if (nonzero == 1 && neg) return {true, -c};
        return {false, c};
    }
    static bool is_one(const CycloNumber& c) { return c.is_one(); }
    static bool needs_parens(const CycloNumber& c) {
        int nonzero = 0;
        for (const Rational& q : c.coeffs())
            if (q != 0) ++nonzero;
        if (nonzero > 1) return true;
        // "1/2*zeta6^2" is a product: fine unparenthesized as a factor chain.
        return false;
    }
};

/// Raised by exact_divide on failure; the remainder at the point of failure
/// acts as a non-divisibility witness.
template <class K>
struct DivisionResult;

template <class K>
class MultiPoly {
public:
    using Terms = std::map<Monomial, K, GrlexDescending>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(const K& c) {
        MultiPoly p;
        if (!CoeffTraits<K>::is_zero(c)) p.terms_.emplace(Monomial{}, c);
        return p;
    }
    static MultiPoly variable(const VarName& v, int exp = 1) {
        if (exp < 0) throw std::invalid_argument("variable exponent must be >= 0");
        MultiPoly p;
        Monomial m;
        if (exp > 0) m[v] = exp;
        p.terms_.emplace(std::move(m), CoeffTraits<K>::one());
        return p;
    }
    static MultiPoly term(Monomial m, const K& c) {
        MultiPoly p;
        if (!CoeffTraits<K>::is_zero(c)) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    std::optional<K> constant_value() const {
        if (terms_.empty()) return std::nullopt;  // zero has no K witness in context-carrying domains
        if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
        return std::nullopt;
    }

    int total_deg() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;  // -1 for the zero polynomial
    }
    int degree_in(const VarName& v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it != m.end()) d = std::max(d, it->second);
        }
        return d;
    }
    std::set<VarName> variables() const {
        std::set<VarName> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) vs.insert(v);
        return vs;
    }

    void add_term(const Monomial& m, const K& c) {
        if (CoeffTraits<K>::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (CoeffTraits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, K(-c));
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), K(ca * cb));
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(long e) const {
        if (e < 0) throw std::invalid_argument("pow: negative exponent");
        K unit = terms_.empty() ? CoeffTraits<K>::one()
                                : CoeffTraits<K>::one_like(terms_.begin()->second);
        MultiPoly base = *this, acc = constant(unit);
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first)) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Simultaneous (capture-free) substitution; variables absent from the
    /// map are left untouched.
    MultiPoly substitute(const std::map<VarName, MultiPoly>& sigma) const {
        MultiPoly result;
        for (const auto& [m, c] : terms_) {
            MultiPoly acc = constant(c);
            Monomial untouched;
            for (const auto& [v, e] : m) {
                auto it = sigma.find(v);
                if (it == sigma.end())
                    untouched[v] = e;
                else
                    acc = acc * it->second.pow(e);
            }
            if (!untouched.empty()) acc = acc * term(std::move(untouched), CoeffTraits<K>::one());
            result += acc;
        }
        return result;
    }

    /// Fraction-wise substitution: every variable in `sigma` is replaced by
    /// num/den and the whole polynomial is multiplied by den^{deg_v} per
    /// variable (the minimal clearing power), so the result is a polynomial.
    MultiPoly substitute_cleared(const std::map<VarName, std::pair<MultiPoly, MultiPoly>>& sigma) const {
        std::map<VarName, int> clear_deg;
        for (const auto& [v, fraction] : sigma) {
            int d = degree_in(v);
            if (d > 0) clear_deg[v] = d;
        }
        MultiPoly result;
        for (const auto& [m, c] : terms_) {
            MultiPoly acc = constant(c);
            Monomial untouched;
            for (const auto& [v, e] : m) {
                auto it = sigma.find(v);
                if (it == sigma.end()) untouched[v] = e;
                else acc = acc * it->second.first.pow(e);
            }
            for (const auto& [v, d] : clear_deg) {
                auto it = m.find(v);
                int missing = d - (it == m.end() ? 0 : it->second);
                if (missing > 0) acc = acc * sigma.at(v).second.pow(missing);
            }
            if (!untouched.empty()) acc = acc * term(std::move(untouched), CoeffTraits<K>::one());
            result += acc;
        }
        return result;
    }

    DivisionResult<K> exact_divide(const MultiPoly& divisor) const;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            auto [neg, mag] = CoeffTraits<K>::print_sign(c);
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            bool unit = CoeffTraits<K>::is_one(mag);
            std::string cs = CoeffTraits<K>::str(mag);
            if (CoeffTraits<K>::needs_parens(mag)) cs = "(" + cs + ")";
            if (m.empty()) {
                out << cs;
            } else {
                if (!unit) out << cs << "*";
                bool first_var = true;
                for (const auto& [v, e] : m) {
                    if (!first_var) out << "*";
                    first_var = false;
                    out << v.str();
                    if (e >= 2) out << "^" << e;
                }
            }
        }
        return out.str();
    }

private:
    Terms terms_;
};

template <class K>
struct DivisionResult {
    bool divisible = false;
    MultiPoly<K> quotient;
    MultiPoly<K> remainder;  // nonzero witness when !divisible
};

/// Leading-term division under graded-lex. For an exact multiple this
/// terminates with remainder zero; otherwise the first irreducible leading
/// term stops the loop and the partial remainder is returned as a witness.
template <class K>
DivisionResult<K> MultiPoly<K>::exact_divide(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    DivisionResult<K> res;
    MultiPoly rem = *this;
    const auto& lead = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& top = *rem.terms_.begin();
        Monomial q;
        if (!mono_divides(lead.first, top.first, q)) {
            res.divisible = false;
            res.remainder = rem;
            return res;
        }
        K coeff = K(top.second / lead.second);
        MultiPoly t = MultiPoly::term(q, coeff);
        res.quotient += t;
        rem -= t * divisor;
    }
    res.divisible = true;
    return res;
}

/// Coefficient-wise lift of a rational polynomial into a cyclotomic domain.
inline MultiPoly<CycloNumber> lift_to_cyclo(const MultiPoly<Rational>& p) {
    MultiPoly<CycloNumber> r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, CycloNumber(c));
    return r;
}

}  // namespace galtwist
