#pragma once

/**
 * @file loci.hpp
 * @brief Generic stability conditions, the aspherical hyperplane
 *        arrangement, and the map p -> theta_p.
 */

#include "cherloc/box_order.hpp"
#include "cherloc/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cherloc {

struct Stability {
    std::vector<ParamScalar> theta;

    int ell() const { return static_cast<int>(theta.size()); }
    friend bool operator==(const Stability&, const Stability&) = default;
};

/// Which index pairs (i, j) the difference conditions range over.
/// Literal: distinct i, j in {1, ..., ell-1}. IncludeZero: distinct i, j in {0, ..., ell-1}.
enum class IndexMode { Literal, IncludeZero };

inline const char* to_string(IndexMode m) { return m == IndexMode::Literal ? "literal" : "include-zero"; }

struct GenericityWitness {
    enum class Kind { Sum, Difference };
    Kind kind = Kind::Sum;
    int i = -1;
    int j = -1;
    long m = 0;  // theta_i - theta_j == m * sum(theta)
};

struct GenericityResult {
    bool generic = true;
    std::optional<GenericityWitness> witness;

    explicit operator bool() const { return generic; }
};

/**
 * theta is generic iff sum(theta) != 0 and theta_i - theta_j != m * sum(theta)
 * for all distinct i, j in the index range and all integers |m| < n.
 */
inline GenericityResult is_generic(const Stability& s, int n, IndexMode mode = IndexMode::Literal) {
    if (n < 1) throw std::invalid_argument("is_generic: n must be positive");
    if (s.theta.empty()) throw std::invalid_argument("is_generic: empty stability condition");
    ParamScalar sum = s.theta.front() - s.theta.front();
    for (const auto& t : s.theta) sum += t;
    if (sum.is_zero()) return {false, GenericityWitness{GenericityWitness::Kind::Sum}};

    const int first = mode == IndexMode::Literal ? 1 : 0;
    for (int i = first; i < s.ell(); ++i)
        for (int j = first; j < s.ell(); ++j) {
            if (i == j) continue;
            ParamScalar diff = s.theta[static_cast<std::size_t>(i)] - s.theta[static_cast<std::size_t>(j)];
            for (long m = -(n - 1); m <= n - 1; ++m)
                if (diff == sum * Rational(m))
                    return {false, GenericityWitness{GenericityWitness::Kind::Difference, i, j, m}};
        }
    return {true, std::nullopt};
}

/**
 * Exact test of 1 <= N <= i + (sqrt(n + m^2/4) - m/2 - 1) * ell, rearranged
 * as (N - i)/ell + 1 + m/2 <= sqrt(n + m^2/4) and squared when the left side
 * is positive.
 */
inline bool is_N_in_bound(long long n, long long m, long long i, long long ell, long long N) {
    if (ell < 1) throw std::invalid_argument("is_N_in_bound: ell must be positive");
    if (N < 1) return false;
    Rational lhs = Rational(BigInt(N - i), BigInt(ell)) + 1 + Rational(BigInt(m), BigInt(2));
    if (lhs <= 0) return true;
    Rational rhs_sq = Rational(BigInt(n)) + Rational(BigInt(m) * m, BigInt(4));
    return lhs * lhs <= rhs_sq;
}

/// kappa = r/s with 0 < r <= s, 1 < s <= n.
struct KappaFraction {
    long r = 0;
    long s = 0;
    friend bool operator==(const KappaFraction&, const KappaFraction&) = default;
};

/// N/ell = h_j - h_i + m*kappa with j = (i - N) mod ell.
struct ContentHyperplane {
    long i = 0;
    long m = 0;
    long N = 0;
    long j = 0;
    friend bool operator==(const ContentHyperplane&, const ContentHyperplane&) = default;
};

using HyperplaneWitness = std::variant<KappaFraction, ContentHyperplane>;

/// Every aspherical hyperplane containing p; empty iff p is spherical.
inline std::vector<HyperplaneWitness> aspherical_witnesses(const Params& p, int n) {
    if (n < 1) throw std::invalid_argument("aspherical_witnesses: n must be positive");
    std::vector<HyperplaneWitness> out;
    if (!p.is_formal()) {
        const Rational& kappa = p.mode().value();
        for (long s = 2; s <= n; ++s)
            for (long r = 1; r <= s; ++r)
                if (kappa == Rational(BigInt(r), BigInt(s))) out.emplace_back(KappaFraction{r, s});
    }
    const long ell = p.ell();
    for (long i = 0; i < ell; ++i)
        for (long m = -(n - 1); m <= n - 1; ++m)
            for (long N = 1; is_N_in_bound(n, m, i, ell, N); ++N) {
                if (N % ell == 0) continue;
                long j = ((i - N) % ell + ell) % ell;
                ParamScalar rhs = p.h(static_cast<int>(j)) - p.h(static_cast<int>(i)) + p.kappa() * Rational(m);
                if (rhs == p.mode().constant(Rational(BigInt(N), BigInt(ell))))
                    out.emplace_back(ContentHyperplane{i, m, N, j});
            }
    return out;
}

inline bool is_spherical(const Params& p, int n) { return aspherical_witnesses(p, n).empty(); }

/// (-kappa + h_0 - h_{ell-1}, h_1 - h_0, ..., h_{ell-1} - h_{ell-2}).
inline Stability theta_of_p(const Params& p) {
    const int ell = p.ell();
    Stability s;
    s.theta.push_back(-p.kappa() + p.h(0) - p.h(ell - 1));
    for (int i = 1; i < ell; ++i) s.theta.push_back(p.h(i) - p.h(i - 1));
    return s;
}

}  // namespace cherloc
