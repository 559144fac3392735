// SPDX-License-Identifier: Apache-2.0
#include "galtwist/coverring.hpp"
#include "galtwist/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <climits>
#include <random>

using namespace galtwist;

namespace {

using PolyQ = MultiPoly<Rational>;
using System = CoverRelationSystem<Rational>;

VarName V(const char* s) { return VarName::from_string(s); }

System single_w_system() {
    return System({{V("w"), 2, parse_rational("x^3 + 1")}},
                  {{V("x"), 0}, {V("w"), 1}});
}

System two_copy_system() {
    return System({{V("w1"), 2, parse_rational("x1^3 + 1")},
                   {V("w2"), 2, parse_rational("x2^3 + 1")}},
                  {{V("x1"), 0}, {V("x2"), 0}, {V("w1"), 1}, {V("w2"), 1}});
}

// Stratified tower: u over x, z over u.
System tower_system() {
    return System({{V("u"), 2, parse_rational("x^3 + 1")},
                   {V("z"), 2, parse_rational("u + 1")}},
                  {{V("x"), 0}, {V("u"), 1}, {V("z"), 2}});
}

// Dershowitz–Manna comparison on the multisets of head-variable levels
// (one entry per unit of exponent): X > Y iff X != Y and every extra
// element of Y is dominated by some extra element of X.
using LevelMultiset = std::map<int, long>;

LevelMultiset head_levels(const Monomial& m, const System& sys) {
    LevelMultiset ms;
    for (const auto& [v, e] : m)
        if (sys.find(v)) ms[sys.level_of(v)] += e;
    return ms;
}

bool multiset_strictly_greater(const LevelMultiset& x, const LevelMultiset& y) {
    std::map<int, long> diff;  // positive: extra in x, negative: extra in y
    for (const auto& [lvl, cnt] : x) diff[lvl] += cnt;
    for (const auto& [lvl, cnt] : y) diff[lvl] -= cnt;
    std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });
    if (diff.empty()) return false;  // equal multisets
    int max_extra_x = INT_MIN;
    for (const auto& [lvl, d] : diff)
        if (d > 0) max_extra_x = std::max(max_extra_x, lvl);
    if (max_extra_x == INT_MIN) return false;  // x adds nothing
    for (const auto& [lvl, d] : diff)
        if (d < 0 && lvl >= max_extra_x) return false;  // an extra y element not dominated
    return true;
}

PolyQ random_poly(std::mt19937_64& rng, const std::vector<VarName>& vars) {
    std::uniform_int_distribution<int> nterms(1, 5);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expd(0, 6);
    PolyQ p;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m;
        for (const auto& v : vars) {
            int e = expd(rng);
            if (e > 0) m[v] = e;
        }
        p += PolyQ::term(m, Rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("single reduction steps") {
    auto sys = single_w_system();
    // w^3 -> (x^3 + 1) * w
    CHECK(normal_form(parse_rational("w^3"), sys) == parse_rational("(x^3 + 1)*w"));
    // z^4 under z^3 = g
    System zsys({{V("z"), 3, parse_rational("x + 2")}}, {{V("x"), 0}, {V("z"), 1}});
    CHECK(normal_form(parse_rational("z^4"), zsys) == parse_rational("(x + 2)*z"));
}

TEST_CASE("stratified reduction goes down the tower") {
    auto sys = tower_system();
    // (u*z)^2 = u^2 z^2 -> u^2 (u+1) = u^3 + u^2 -> (x^3+1)u + (x^3+1)
    CHECK(normal_form(parse_rational("(u*z)^2"), sys) ==
          parse_rational("(x^3 + 1)*u + (x^3 + 1)"));
}

TEST_CASE("ideal membership via normal form") {
    auto sys = single_w_system();
    CHECK(is_zero_mod(parse_rational("w^2 - (x^3 + 1)"), sys));
    CHECK_FALSE(is_zero_mod(parse_rational("w - x"), sys));

    auto two = two_copy_system();
    CHECK(is_zero_mod(parse_rational("w1^2*w2^2 - (x1^3 + 1)*(x2^3 + 1)"), two));
}

TEST_CASE("normal form is idempotent and head exponents end below relation exponents") {
    auto sys = tower_system();
    std::mt19937_64 rng(5);
    std::vector<VarName> vars{V("x"), V("u"), V("z")};
    for (int trial = 0; trial < 50; ++trial) {
        PolyQ p = random_poly(rng, vars);
        PolyQ nf = normal_form(p, sys);
        CHECK(normal_form(nf, sys) == nf);
        for (const auto& [m, c] : nf.terms())
            for (const auto& [v, e] : m)
                if (const auto* rel = sys.find(v)) CHECK(e < rel->exponent);
    }
}

TEST_CASE("confluence: randomized reduction orders agree") {
    auto sys = tower_system();
    auto two = two_copy_system();
    std::mt19937_64 rng(31337);
    std::vector<VarName> tower_vars{V("x"), V("u"), V("z")};
    std::vector<VarName> product_vars{V("x1"), V("x2"), V("w1"), V("w2")};
    int checked = 0;
    for (int trial = 0; trial < 1100; ++trial) {
        bool use_tower = trial % 2 == 0;
        const System& sys_ref = use_tower ? sys : two;
        PolyQ p = random_poly(rng, use_tower ? tower_vars : product_vars);
        PolyQ nf_first = normal_form(p, sys_ref);
        auto chooser = [&rng](std::size_t n) {
            return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        };
        PolyQ nf_rand1 = normal_form(p, sys_ref, chooser);
        PolyQ nf_rand2 = normal_form(p, sys_ref, chooser);
        REQUIRE(nf_first == nf_rand1);
        REQUIRE(nf_rand1 == nf_rand2);
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("each reduction step strictly decreases the level multiset of the rewritten term") {
    auto sys = tower_system();
    std::mt19937_64 rng(777);
    std::vector<VarName> vars{V("x"), V("u"), V("z")};
    for (int trial = 0; trial < 60; ++trial) {
        PolyQ p = random_poly(rng, vars);
        while (true) {
            auto redexes = collect_redexes(p, sys);
            if (redexes.empty()) break;
            const auto& r = redexes.front();
            LevelMultiset before = head_levels(r.monomial, sys);
            PolyQ next = reduce_at(p, sys, r);
            // every *new* term created by the rewrite must be strictly smaller
            for (const auto& [m, c] : next.terms()) {
                if (p.terms().find(m) != p.terms().end()) continue;
                CHECK(multiset_strictly_greater(before, head_levels(m, sys)));
            }
            p = next;
        }
    }
}

TEST_CASE("normal form is ring-compatible") {
    auto sys = two_copy_system();
    std::mt19937_64 rng(9);
    std::vector<VarName> vars{V("x1"), V("x2"), V("w1"), V("w2")};
    for (int trial = 0; trial < 40; ++trial) {
        PolyQ a = random_poly(rng, vars), b = random_poly(rng, vars);
        CHECK(normal_form(a * b, sys) ==
              normal_form(normal_form(a, sys) * normal_form(b, sys), sys));
        CHECK(normal_form(a + b, sys) == normal_form(normal_form(a, sys) + normal_form(b, sys), sys));
    }
}

TEST_CASE("malformed systems are rejected") {
    // rhs at the same level as the head
    CHECK_THROWS_AS(System({{V("w"), 2, parse_rational("w + 1")}}, {{V("w"), 1}}),
                    std::invalid_argument);
    // duplicate heads
    CHECK_THROWS_AS(System({{V("w"), 2, parse_rational("x")}, {V("w"), 3, parse_rational("x")}},
                           {{V("x"), 0}, {V("w"), 1}}),
                    std::invalid_argument);
    // exponent below 2
    CHECK_THROWS_AS(System({{V("w"), 1, parse_rational("x")}}, {{V("x"), 0}, {V("w"), 1}}),
                    std::invalid_argument);
    // missing level
    CHECK_THROWS_AS(System({{V("w"), 2, parse_rational("y")}}, {{V("w"), 1}}),
                    std::invalid_argument);
}
