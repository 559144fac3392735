// SPDX-License-Identifier: Apache-2.0
//
// Cyclotomic field arithmetic: elements of Q(zeta_n) represented by their
// coordinates in the power basis 1, zeta, ..., zeta^{phi(n)-1} modulo the
// n-th cyclotomic polynomial Phi_n. The representation is canonical, so
// equality of field elements is coefficient equality after embedding both
// operands into a common order (the lcm of the two orders).
#pragma once

#include "galtwist/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace galtwist {

namespace detail {

// Dense univariate polynomials, coefficient of x^k at index k.
using UPolyZ = std::vector<BigInt>;
using UPolyQ = std::vector<Rational>;

inline void upoly_trim(UPolyZ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void upoly_trim(UPolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPolyZ upoly_mul(const UPolyZ& a, const UPolyZ& b) {
    if (a.empty() || b.empty()) return {};
    UPolyZ r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    upoly_trim(r);
    return r;
}

// Exact division by a monic divisor; also used to assert remainder 0.
inline UPolyZ upoly_div_exact_monic(UPolyZ num, const UPolyZ& den) {
    if (den.empty() || den.back() != 1) throw std::invalid_argument("divisor must be monic");
    if (num.size() < den.size()) {
        upoly_trim(num);
        if (!num.empty()) throw std::invalid_argument("inexact univariate division");
        return {};
    }
    UPolyZ q(num.size() - den.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt c = num[k + den.size() - 1];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    upoly_trim(num);
    if (!num.empty()) throw std::invalid_argument("inexact univariate division");
    return q;
}

}  // namespace detail

inline unsigned euler_phi(unsigned n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Phi_n as an integer-coefficient polynomial (index k = coefficient of x^k),
/// computed by exact division of x^n - 1 by the product of Phi_d over the
/// proper divisors d of n. Results are memoized; degree always equals phi(n).
inline const detail::UPolyZ& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
    static std::map<unsigned, detail::UPolyZ> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Compute non-recursively over sorted divisors so the cache fills bottom-up.
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (unsigned d : divisors) {
        if (cache.count(d)) continue;
        detail::UPolyZ xd_minus_1(d + 1);
        xd_minus_1[0] = -1;
        xd_minus_1[d] = 1;
        detail::UPolyZ acc{1};
        for (unsigned e : divisors) {
            if (e >= d || d % e != 0) continue;
            acc = detail::upoly_mul(acc, cache.at(e));
        }
        detail::UPolyZ phi = detail::upoly_div_exact_monic(std::move(xd_minus_1), acc);
        if (phi.size() != euler_phi(d) + 1) throw std::logic_error("cyclotomic degree mismatch");
        cache.emplace(d, std::move(phi));
    }
    return cache.at(n);
}

/// Element of Q(zeta_n), reduced modulo Phi_n. Immutable value type.
class CycloNumber {
public:
    CycloNumber() : order_(1), coeffs_(1, Rational(0)) {}
    CycloNumber(long v) : order_(1), coeffs_(1, Rational(v)) {}
    CycloNumber(const Rational& v) : order_(1), coeffs_(1, v) {}

    /// zeta_n, a primitive n-th root of unity.
    static CycloNumber zeta(unsigned n) {
        if (n == 0) throw std::invalid_argument("zeta(0)");
        std::vector<Rational> raw(2, Rational(0));
        raw[1] = 1;
        return from_raw(n, std::move(raw));
    }

    /// Element with the given power-basis coordinates (reduced mod Phi_n).
    static CycloNumber from_raw(unsigned n, std::vector<Rational> raw) {
        CycloNumber r;
        r.order_ = n;
        r.coeffs_ = reduce(std::move(raw), n);
        return r;
    }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }
    bool is_one() const {
        if (coeffs_[0] != 1) return false;
        return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    /// True when the element lies in Q; the power basis makes this a tail check.
    std::optional<Rational> as_rational() const {
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return std::nullopt;
        return coeffs_[0];
    }

    /// Image under zeta_m -> zeta_n^{n/m}; requires order() | n.
    CycloNumber embedded(unsigned n) const {
        if (n % order_ != 0) throw std::invalid_argument("embed: target order not a multiple");
        if (n == order_) return *this;
        unsigned step = n / order_;
        std::vector<Rational> raw((coeffs_.size() - 1) * step + 1, Rational(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * step] = coeffs_[k];
        return from_raw(n, std::move(raw));
    }

    /// Inverse image in Q(zeta_m) when the element lies in the subfield, for m | order().
    std::optional<CycloNumber> projected(unsigned m) const {
        if (order_ % m != 0) throw std::invalid_argument("project: order not a multiple of target");
        if (m == order_) return *this;
        unsigned cols = euler_phi(m), rows = static_cast<unsigned>(coeffs_.size());
        // Columns: coordinates of embed(zeta_m^i) in the order_ basis.
        std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols + 1, Rational(0)));
        for (unsigned i = 0; i < cols; ++i) {
            std::vector<Rational> raw(i * (order_ / m) + 1, Rational(0));
            raw.back() = 1;
            auto col = reduce(std::move(raw), order_);
            for (unsigned r = 0; r < rows; ++r) mat[r][i] = col[r];
        }
        for (unsigned r = 0; r < rows; ++r) mat[r][cols] = coeffs_[r];
        // Gaussian elimination; the system is consistent iff the element descends.
        std::vector<int> pivot_of_col(cols, -1);
        unsigned rank = 0;
        for (unsigned c = 0; c < cols && rank < rows; ++c) {
            unsigned sel = rank;
            while (sel < rows && mat[sel][c] == 0) ++sel;
            if (sel == rows) continue;
            std::swap(mat[sel], mat[rank]);
            Rational inv = mat[rank][c];
            for (unsigned cc = c; cc <= cols; ++cc) mat[rank][cc] /= inv;
            for (unsigned r = 0; r < rows; ++r) {
                if (r == rank || mat[r][c] == 0) continue;
                Rational f = mat[r][c];
                for (unsigned cc = c; cc <= cols; ++cc) mat[r][cc] -= f * mat[rank][cc];
            }
            pivot_of_col[c] = static_cast<int>(rank);
            ++rank;
        }
        for (unsigned r = rank; r < rows; ++r)
            if (mat[r][cols] != 0) return std::nullopt;
        std::vector<Rational> sol(cols, Rational(0));
        for (unsigned c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) sol[c] = mat[pivot_of_col[c]][cols];
        return from_raw(m, std::move(sol));
    }

    CycloNumber operator-() const {
        CycloNumber r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = common(a, b);
        for (std::size_t k = 0; k < y.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
        return x;
    }
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = common(a, b);
        std::vector<Rational> raw(2 * x.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                raw[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return from_raw(x.order_, std::move(raw));
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x];
    /// Phi_n is irreducible over Q, so every nonzero element is a unit.
    CycloNumber inverse() const {
        if (is_zero()) throw std::domain_error("CycloNumber: division by zero");
        detail::UPolyQ r0;
        for (const BigInt& c : cyclotomic_polynomial(order_)) r0.emplace_back(c);
        detail::UPolyQ r1(coeffs_.begin(), coeffs_.end());
        detail::upoly_trim(r1);
        detail::UPolyQ t0, t1{Rational(1)};
        while (!r1.empty()) {
            // Divide r0 by r1 over Q.
            detail::UPolyQ q, rem = r0;
            if (rem.size() >= r1.size()) {
                q.resize(rem.size() - r1.size() + 1);
                for (std::size_t k = q.size(); k-- > 0;) {
                    Rational c = rem[k + r1.size() - 1] / r1.back();
                    q[k] = c;
                    if (c == 0) continue;
                    for (std::size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
                }
                detail::upoly_trim(rem);
            }
            detail::UPolyQ t2 = t0;  // t2 = t0 - q*t1
            {
                detail::UPolyQ qt1;
                if (!q.empty() && !t1.empty()) {
                    qt1.resize(q.size() + t1.size() - 1);
                    for (std::size_t i = 0; i < q.size(); ++i)
                        for (std::size_t j = 0; j < t1.size(); ++j) qt1[i + j] += q[i] * t1[j];
                }
                if (t2.size() < qt1.size()) t2.resize(qt1.size());
                for (std::size_t i = 0; i < qt1.size(); ++i) t2[i] -= qt1[i];
                detail::upoly_trim(t2);
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is a nonzero constant gcd; t0 / r0[0] inverts *this.
        if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: nontrivial gcd");
        std::vector<Rational> raw(t0.begin(), t0.end());
        for (auto& c : raw) c /= r0[0];
        return from_raw(order_, std::move(raw));
    }

    friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

    CycloNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloNumber base = *this, acc(1);
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = common(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    /// "zetaN^k" basis rendering, highest power first; parseable by the
    /// polynomial grammar. A rational-valued element prints as a rational.
    std::string str() const {
        if (auto q = as_rational()) return to_string(*q);
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (k == 0) {
                out << to_string(a);
            } else {
                if (a != 1) out << to_string(a) << "*";
                out << "zeta" << order_;
                if (k >= 2) out << "^" << k;
            }
        }
        return first ? "0" : out.str();
    }

private:
    static std::vector<Rational> reduce(std::vector<Rational> raw, unsigned n) {
        const auto& phi = cyclotomic_polynomial(n);
        const std::size_t deg = phi.size() - 1;
        while (raw.size() > deg) {
            Rational lead = raw.back();
            std::size_t shift = raw.size() - 1 - deg;
            if (lead != 0)
                for (std::size_t i = 0; i < phi.size(); ++i)
                    raw[shift + i] -= lead * Rational(phi[i]);
            while (!raw.empty() && raw.size() > deg && raw.back() == 0) raw.pop_back();
        }
        raw.resize(deg, Rational(0));  // deg = phi(n) >= 1
        return raw;
    }

    static std::pair<CycloNumber, CycloNumber> common(const CycloNumber& a, const CycloNumber& b) {
        if (a.order_ == b.order_) return {a, b};
        unsigned n = static_cast<unsigned>(std::lcm(a.order_, b.order_));
        return {a.embedded(n), b.embedded(n)};
    }

    unsigned order_;
    std::vector<Rational> coeffs_;  // size phi(order_), except phi(1) = 1
};

}  // namespace galtwist
