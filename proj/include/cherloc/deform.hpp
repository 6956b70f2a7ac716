#pragma once

/**
 * @file deform.hpp
 * @brief Deforming p by an integral shift to p' with the same box order and
 *        a generic theta_{p'}, and the certificate that records the run.
 *
 * Rational kappa: with L = lcm(den kappa, den(h_i + i/ell), ell) and
 * M = 1 + tL, set kappa' = M*kappa and h'_i = kappa' s'_i - i/ell where
 * s_i = (h_i + i/ell)/kappa and s'_i = s_i - m_i/(M*kappa). Writing
 * m_i = 2(M-1)i/ell + r_i, a difference D = k + (i-i')/ell between equivalent
 * boxes becomes M*k + (i-i')/ell - (r_i - r_i'), so the order survives as soon
 * as r is non-increasing and M exceeds |r_i - r_i'| + 1. The r_i have pairwise
 * distinct gaps, which keeps theta_{p'} off the difference hyperplanes.
 *
 * Formal kappa: kappa' = kappa and h'_i = h_i - m_i. Equivalent boxes in
 * components i, i' differ by the rational a_i - a_i' (a = constant part of h),
 * so m must be non-increasing in a; m_i = -(K*rank(a_i) + s*i(i+1)/2) does
 * this and separates the gaps of theta.
 *
 * Every candidate is checked exhaustively on all boxes that can occur for
 * P_ell(n); the construction only decides the order in which candidates are
 * tried.
 */

#include "cherloc/box_order.hpp"
#include "cherloc/loci.hpp"
#include "cherloc/multipartition.hpp"
#include "cherloc/order.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cherloc {

/// s = constant + inv_kappa * kappa^{-1}.
struct SCoordinate {
    Rational constant{0};
    Rational inv_kappa{0};
    friend bool operator==(const SCoordinate&, const SCoordinate&) = default;
};

/// s_i = (h_i + i/ell)/kappa, written without dividing by a formal kappa.
inline std::vector<SCoordinate> s_coordinates(const Params& p) {
    if (p.kappa_is_zero()) throw std::invalid_argument("s_coordinates: kappa must be nonzero");
    std::vector<SCoordinate> out;
    for (int i = 0; i < p.ell(); ++i) {
        Rational shifted = p.h(i).constant() + Rational(i, p.ell());
        if (p.is_formal())
            out.push_back({p.h(i).kappa_coeff(), shifted});
        else
            out.push_back({shifted / p.mode().value(), Rational(0)});
    }
    return out;
}

/// s - s' in kappa^{-1} Z (formal kappa): equal constant parts, integral kappa^{-1} parts.
inline bool same_s_class(const SCoordinate& s, const SCoordinate& s2) {
    return s.constant == s2.constant && is_integer(s.inv_kappa - s2.inv_kappa);
}

/// Class id per index (ids numbered by first occurrence).
inline std::vector<int> s_classes(const Params& p) {
    auto s = s_coordinates(p);
    std::vector<int> cls(s.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (cls[j] < 0 && same_s_class(s[i], s[j])) cls[j] = next;
        ++next;
    }
    return cls;
}

struct DeformPlan {
    bool formal = false;
    BigInt M{1};                // kappa' = M*kappa (rational case)
    std::vector<BigInt> m;      // integer shifts, see file comment
    BigInt kappa_shift{0};      // kappa' = kappa + kappa_shift (formal case)
    int candidate = 0;          // 1-based position in the candidate schedule
    std::vector<int> s_classes; // formal case only

    friend bool operator==(const DeformPlan&, const DeformPlan&) = default;
};

struct PreservationResult {
    bool preserved = true;
    std::optional<std::pair<Box, Box>> witness;
    std::string relation;  // "equivalence" or "strict order"

    explicit operator bool() const { return preserved; }
};

/// Compares ~ and < for p and p' on every ordered pair of relevant boxes.
inline PreservationResult verify_preservation(const Params& p, const Params& p2, int n,
                                              BoxOrderMode mode = BoxOrderMode::Literal) {
    if (p.ell() != p2.ell()) throw std::invalid_argument("verify_preservation: parameters have different ell");
    auto all = relevant_boxes(p.ell(), n);
    for (const auto& b : all)
        for (const auto& b2 : all) {
            if (box_equiv(p, b, b2) != box_equiv(p2, b, b2)) return {false, std::make_pair(b, b2), "equivalence"};
            if (box_less(p, b, b2, mode) != box_less(p2, b, b2, mode))
                return {false, std::make_pair(b, b2), "strict order"};
        }
    return {};
}

/**
 * p' - p integral: kappa' - kappa in Z and h'_i - h_i = common_summand + h_shift[i]
 * with integer h_shift. h is only defined up to a common summand.
 */
struct IntegralDifference {
    bool integral = false;
    BigInt kappa_shift{0};
    std::vector<BigInt> h_shift;
    Rational common_summand{0};
    std::string reason;

    explicit operator bool() const { return integral; }
};

inline IntegralDifference integral_difference(const Params& p, const Params& p2) {
    IntegralDifference out;
    if (p.ell() != p2.ell() || p.is_formal() != p2.is_formal()) {
        out.reason = "parameters are not comparable";
        return out;
    }
    ParamScalar dk = p2.kappa() - p.kappa();
    if (!dk.is_rational() || !is_integer(dk.constant())) {
        out.reason = "kappa' - kappa is not an integer";
        return out;
    }
    out.kappa_shift = numerator_of(dk.constant());
    std::vector<Rational> d;
    for (int i = 0; i < p.ell(); ++i) {
        ParamScalar di = p2.h(i) - p.h(i);
        if (!di.is_rational()) {
            out.reason = "h'_" + std::to_string(i) + " - h_" + std::to_string(i) + " has a kappa component";
            return out;
        }
        d.push_back(di.constant());
    }
    out.common_summand = d[0] - Rational(floor_of(d[0]));
    for (std::size_t i = 0; i < d.size(); ++i) {
        Rational k = d[i] - out.common_summand;
        if (!is_integer(k)) {
            out.reason = "h'_i - h_i are not congruent modulo Z";
            out.h_shift.clear();
            return out;
        }
        out.h_shift.push_back(numerator_of(k));
    }
    out.integral = true;
    return out;
}

struct DeformOptions {
    IndexMode index_mode = IndexMode::Literal;
    BoxOrderMode box_mode = BoxOrderMode::Literal;
    int retry_bound = 64;
};

struct DeformOutcome {
    std::optional<Params> p_prime;
    DeformPlan plan;
    std::vector<std::string> diagnostics;  // one line per rejected candidate

    explicit operator bool() const { return p_prime.has_value(); }
};

namespace detail {

inline std::string describe(const Box& b) {
    std::ostringstream os;
    os << b;
    return os.str();
}

/// Empty string when the candidate is acceptable, otherwise the first failed check.
inline std::string reject_reason(const Params& p, const Params& candidate, int n, const DeformOptions& opt) {
    if (!integral_difference(p, candidate)) return "difference not integral";
    if (auto pres = verify_preservation(p, candidate, n, opt.box_mode); !pres)
        return "box " + pres.relation + " changes at " + describe(pres.witness->first) + " vs " +
               describe(pres.witness->second);
    if (auto g = is_generic(theta_of_p(candidate), n, opt.index_mode); !g) return "theta_{p'} not generic";
    return {};
}

inline std::string candidate_prefix(int k) { return "candidate " + std::to_string(k) + ": "; }

}  // namespace detail

inline DeformOutcome deform_rational(const Params& p, int n, const DeformOptions& opt = {}) {
    if (p.is_formal()) throw std::invalid_argument("deform_rational: kappa is formal");
    if (p.kappa_is_zero()) throw std::invalid_argument("deform_rational: kappa must be nonzero");
    if (n < 1) throw std::invalid_argument("deform_rational: n must be positive");

    const Rational& kappa = p.mode().value();
    const int ell = p.ell();
    BigInt L = lcm_of(denominator_of(kappa), BigInt(ell));
    std::vector<Rational> kappa_s;  // kappa * s_i = h_i + i/ell
    for (int i = 0; i < ell; ++i) {
        kappa_s.push_back(p.h(i).constant() + Rational(i, ell));
        L = lcm_of(L, denominator_of(kappa_s.back()));
    }

    DeformOutcome out;
    for (int k = 1; k <= opt.retry_bound; ++k) {
        const BigInt M = 1 + BigInt(k) * L;
        std::vector<BigInt> m;
        bool increasing = true;
        for (int i = 0; i < ell; ++i) {
            m.push_back(2 * (M - 1) * i / ell - BigInt(i) * (i + 1) / 2);
            if (i > 0 && m[static_cast<std::size_t>(i)] <= m[static_cast<std::size_t>(i - 1)]) increasing = false;
        }
        if (!increasing) {
            out.diagnostics.push_back(detail::candidate_prefix(k) + "M=" + M.str() + ": m not strictly increasing");
            continue;
        }
        // h'_i = kappa' s'_i - i/ell = M (h_i + i/ell) - m_i - i/ell
        std::vector<Rational> h2;
        for (int i = 0; i < ell; ++i)
            h2.push_back(Rational(M) * kappa_s[static_cast<std::size_t>(i)] - Rational(m[static_cast<std::size_t>(i)]) -
                         Rational(i, ell));
        Params candidate = Params::rational(Rational(M) * kappa, h2);
        std::string why = detail::reject_reason(p, candidate, n, opt);
        if (why.empty()) {
            out.p_prime = std::move(candidate);
            out.plan = DeformPlan{false, M, std::move(m), BigInt(0), k, {}};
            return out;
        }
        out.diagnostics.push_back(detail::candidate_prefix(k) + "M=" + M.str() + ": " + why);
    }
    return out;
}

inline DeformOutcome deform_formal(const Params& p, int n, const DeformOptions& opt = {}) {
    if (!p.is_formal()) throw std::invalid_argument("deform_formal: kappa is rational");
    if (n < 1) throw std::invalid_argument("deform_formal: n must be positive");

    const int ell = p.ell();
    std::vector<Rational> a;
    for (int i = 0; i < ell; ++i) a.push_back(p.h(i).constant());

    std::set<Rational> distinct(a.begin(), a.end());
    std::vector<BigInt> rank;
    for (const auto& v : a) rank.push_back(BigInt(std::distance(distinct.begin(), distinct.find(v))));

    // C exceeds every |alpha_i - alpha_j| over i, j >= 1, alpha_i = a_i - a_{i-1}
    Rational spread(0);
    for (int i = 1; i < ell; ++i)
        for (int j = 1; j < ell; ++j) {
            Rational d = (a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i - 1)]) -
                         (a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(j - 1)]);
            spread = std::max(spread, d < 0 ? Rational(-d) : d);
        }
    const BigInt C = 1 + ceil_of(spread);

    DeformOutcome out;
    for (int k = 1; k <= opt.retry_bound; ++k) {
        const BigInt s = BigInt(k) * C;
        const BigInt K = s * ell * (ell - 1) / 2 + C;
        std::vector<BigInt> m;
        std::vector<ParamScalar> h2;
        for (int i = 0; i < ell; ++i) {
            m.push_back(-(K * rank[static_cast<std::size_t>(i)] + s * i * (i + 1) / 2));
            h2.push_back(p.h(i) - Rational(m.back()));
        }
        Params candidate(p.mode(), h2);
        std::string why = detail::reject_reason(p, candidate, n, opt);
        if (why.empty()) {
            out.p_prime = std::move(candidate);
            out.plan = DeformPlan{true, BigInt(1), std::move(m), BigInt(0), k, s_classes(p)};
            return out;
        }
        out.diagnostics.push_back(detail::candidate_prefix(k) + "s=" + s.str() + ": " + why);
    }
    return out;
}

enum class CheckStatus { Pass, Fail, Skipped, Info };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Info: return "info";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Statements the certificate relies on but cannot check by computation.
inline std::vector<std::string> assumed_lemmas() {
    return {
        "Morse-theoretic refinement: for generic theta_p the c-function order <=_c^p refines the geometric "
        "order <=^{theta_p} (c_p(lambda) is the moment-map image of the fixed point z_lambda)",
        "Content order implies c-function order: lambda <=^p mu implies lambda <=_c^p mu "
        "(from the known values of c_p(lambda))",
    };
}

struct Certificate {
    int n = 0;
    Params p;
    Params p_prime;
    Stability theta;
    DeformPlan plan;
    IntegralDifference difference;
    IndexMode index_mode = IndexMode::Literal;
    BoxOrderMode box_mode = BoxOrderMode::Literal;
    std::vector<CheckResult> checks;
    bool spherical_p = true;
    std::vector<HyperplaneWitness> aspherical_witnesses_p;
    std::vector<std::string> assumed_lemmas;
    std::vector<std::string> notes;

    /// Every non-informational, non-skipped check passed.
    bool all_passed() const {
        return std::none_of(checks.begin(), checks.end(),
                            [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
    }
};

struct LocalizeOptions {
    IndexMode index_mode = IndexMode::Literal;
    BoxOrderMode box_mode = BoxOrderMode::Literal;
    int retry_bound = 64;
    int oracle_bound = 6;  // relation double-check only for n <= oracle_bound
    unsigned workers = 1;
};

struct LocalizeResult {
    std::optional<Certificate> certificate;
    std::vector<std::string> diagnostics;

    explicit operator bool() const { return certificate.has_value(); }
};

/// Produces theta = theta_{p'} together with every check that can be run for (ell, n).
inline LocalizeResult localize(const Params& p, int n, const LocalizeOptions& opt = {}) {
    if (p.kappa_is_zero()) throw std::invalid_argument("localize: kappa must be nonzero");
    if (n < 1) throw std::invalid_argument("localize: n must be positive");

    DeformOptions dopt{opt.index_mode, opt.box_mode, opt.retry_bound};
    DeformOutcome d = p.is_formal() ? deform_formal(p, n, dopt) : deform_rational(p, n, dopt);
    LocalizeResult out;
    if (!d) {
        out.diagnostics = std::move(d.diagnostics);
        out.diagnostics.push_back("retry bound " + std::to_string(opt.retry_bound) + " exhausted");
        return out;
    }
    const Params& p2 = *d.p_prime;

    std::vector<CheckResult> checks;
    IntegralDifference diff = integral_difference(p, p2);
    checks.push_back({"integral_difference", diff ? CheckStatus::Pass : CheckStatus::Fail, diff.reason});

    PreservationResult pres = verify_preservation(p, p2, n, opt.box_mode);
    std::string pres_detail;
    if (!pres)
        pres_detail = pres.relation + " differs at " + detail::describe(pres.witness->first) + ", " +
                      detail::describe(pres.witness->second);
    else
        pres_detail = "all " + std::to_string(relevant_boxes(p.ell(), n).size()) + "^2 relevant box pairs agree";
    checks.push_back({"box_order_preserved", pres ? CheckStatus::Pass : CheckStatus::Fail, pres_detail});

    Stability theta = theta_of_p(p2);
    GenericityResult gen = is_generic(theta, n, opt.index_mode);
    checks.push_back({std::string("theta_generic(") + to_string(opt.index_mode) + ")",
                      gen ? CheckStatus::Pass : CheckStatus::Fail, gen ? "" : "theta_{p'} lies on a wall"});

    std::string rel_name = "order_relation_equal(" + std::to_string(n) + ")";
    if (n <= opt.oracle_bound) {
        bool equal = relation_p(OrderInstance(p, n, opt.box_mode), opt.workers).matrix() ==
                     relation_p(OrderInstance(p2, n, opt.box_mode), opt.workers).matrix();
        checks.push_back({rel_name, equal ? CheckStatus::Pass : CheckStatus::Fail,
                          equal ? "" : "relations on P_ell(n) differ"});
    } else {
        checks.push_back({rel_name, CheckStatus::Skipped, "n exceeds oracle bound"});
    }

    auto witnesses = aspherical_witnesses(p, n);
    checks.push_back({"spherical(p)", CheckStatus::Info, witnesses.empty() ? "spherical" : "aspherical"});

    out.certificate = Certificate{n,
                                  p,
                                  p2,
                                  std::move(theta),
                                  std::move(d.plan),
                                  std::move(diff),
                                  opt.index_mode,
                                  opt.box_mode,
                                  std::move(checks),
                                  witnesses.empty(),
                                  std::move(witnesses),
                                  assumed_lemmas(),
                                  {"p' carries kappa' in its kappa slot",
                                   "h vectors are stored normalized to sum zero"}};
    if (!out.certificate->all_passed()) {
        out.diagnostics.push_back("a certificate check failed");
        out.certificate.reset();
    }
    return out;
}

}  // namespace cherloc
