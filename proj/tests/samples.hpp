#pragma once

// Fixed parameter suites shared by the unit and acceptance tests.

#include "cherloc/box_order.hpp"

#include <string>
#include <utility>
#include <vector>

namespace samples {

using cherloc::Params;
using cherloc::Rational;

inline Rational q(long a, long b = 1) { return cherloc::make_rational(a, b); }

inline std::vector<Rational> rational_kappas() { return {q(1), q(-1), q(1, 2), q(-1, 2), q(3, 2), q(2, 3)}; }

/// Two h-vectors per ell: the zero vector and one that links components.
inline std::vector<std::vector<Rational>> rational_h(int ell) {
    switch (ell) {
        case 1: return {{q(0)}, {q(1, 3)}};
        case 2: return {{q(0), q(0)}, {q(1, 4), q(-1, 4)}};
        case 3: return {{q(0), q(0), q(0)}, {q(1, 3), q(0), q(-1, 3)}};
        default: {
            std::vector<Rational> zero(static_cast<std::size_t>(ell), q(0)), ramp;
            for (int i = 0; i < ell; ++i) ramp.push_back(q(i, ell));
            return {zero, ramp};
        }
    }
}

/// Formal kappa; entries are (constant, kappa coefficient).
inline std::vector<std::vector<std::pair<Rational, Rational>>> formal_h(int ell) {
    switch (ell) {
        case 1: return {{{q(0), q(0)}}, {{q(1, 2), q(1)}}};
        case 2: return {{{q(0), q(0)}, {q(0), q(0)}}, {{q(1, 4), q(0)}, {q(-1, 4), q(0)}},
                        {{q(1, 4), q(1)}, {q(-1, 4), q(0)}}};
        default: {
            std::vector<std::pair<Rational, Rational>> zero(static_cast<std::size_t>(ell), {q(0), q(0)}), linked;
            for (int i = 0; i < ell; ++i) linked.push_back({q(i, ell), i == 1 ? q(1) : q(0)});
            return {zero, linked};
        }
    }
}

/// Every rational kappa with every h-vector, plus the formal vectors.
inline std::vector<Params> parameter_suite(int ell) {
    std::vector<Params> out;
    for (const auto& k : rational_kappas())
        for (const auto& h : rational_h(ell)) out.push_back(Params::rational(k, h));
    for (const auto& h : formal_h(ell)) out.push_back(Params::formal(h));
    return out;
}

}  // namespace samples
