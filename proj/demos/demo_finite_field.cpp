// SPDX-License-Identifier: Apache-2.0
//
// Samples cover points of w^2 = x^3 + 1 over F_7 and checks the twisted
// point coordinates against the twist equations by brute-force evaluation.
#include "galtwist/galtwist.hpp"

#include <iostream>
#include <random>

using namespace galtwist;

int main() {
    AbelianCoverSpec spec;
    spec.ell = 1;
    spec.m = 2;
    spec.layers.push_back({2, parse_rational("x1^3 + 1")});

    TwistPresentation twist = twist_presentation(spec);
    std::vector<SymbolicPoint> points = rational_points(spec);

    std::mt19937_64 rng(7);
    unsigned valid = 0, passed = 0, attempts = 500;
    while (attempts--) {
        auto sample = sample_cover_point(spec, 7, 1, rng);
        if (!sample) continue;
        switch (check_twist_point_ff(*sample, twist.variety, points)) {
            case FFCheckOutcome::Pass:
                ++valid, ++passed;
                break;
            case FFCheckOutcome::Fail:
                ++valid;
                break;
            case FFCheckOutcome::ZeroDenominator:
                break;  // resample
        }
    }
    std::cout << "p = 7: " << passed << "/" << valid << " sampled twist points satisfy the twist\n";

    // exact count of {w^2 = x} over F_3 by enumeration
    auto eq = reduce_mod_p(parse_rational("w^2 - x"), 3);
    auto res = enumerate_solutions({eq}, 3, {VarName::from_string("x"), VarName::from_string("w")});
    std::cout << "solutions of w^2 = x over F_3: " << res.count << "\n";
    return (valid > 0 && passed == valid && res.count == 3) ? 0 : 1;
}
