#pragma once

/**
 * @file box_order.hpp
 * @brief Cherednik parameters, box contents, and the content order on boxes.
 *
 * For p = (kappa; h_0, ..., h_{ell-1}) a box b = (x, y, i) has content
 * cont_p(b) = h_i + kappa*(y - x). Two boxes are equivalent when
 * cont_p(b) - cont_p(b') lies in Z + (i - i')/ell, and b < b' when they are
 * equivalent and the difference is a negative rational.
 */

#include "cherloc/multipartition.hpp"
#include "cherloc/scalar.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cherloc {

/**
 * p = (kappa; h_0, ..., h_{ell-1}). The h_i are only defined up to a common
 * summand; the stored representative always satisfies sum h_i = 0.
 */
class Params {
public:
    Params(KappaMode mode, const std::vector<ParamScalar>& h) : mode_(std::move(mode)) {
        if (h.empty()) throw std::invalid_argument("Params: ell must be positive");
        kappa_ = mode_.kappa();
        ParamScalar sum = mode_.zero();
        for (const auto& hi : h) {
            h_.push_back(mode_.adopt(hi));
            sum += h_.back();
        }
        ParamScalar mean = sum * Rational(1, static_cast<long>(h_.size()));
        for (auto& hi : h_) hi -= mean;
    }

    static Params rational(const Rational& kappa, const std::vector<Rational>& h) {
        KappaMode mode = KappaMode::rational(kappa);
        std::vector<ParamScalar> hs;
        for (const auto& v : h) hs.push_back(mode.constant(v));
        return Params(mode, hs);
    }

    /// Formal kappa; each h_i given as (constant part, kappa coefficient).
    static Params formal(const std::vector<std::pair<Rational, Rational>>& h) {
        KappaMode mode = KappaMode::formal();
        std::vector<ParamScalar> hs;
        for (const auto& [a, b] : h) hs.push_back(mode.scalar(a, b));
        return Params(mode, hs);
    }

    int ell() const { return static_cast<int>(h_.size()); }
    const KappaMode& mode() const { return mode_; }
    bool is_formal() const { return mode_.is_formal(); }
    const ParamScalar& kappa() const { return kappa_; }
    const std::vector<ParamScalar>& h() const { return h_; }
    const ParamScalar& h(int i) const { return h_.at(static_cast<std::size_t>(i)); }
    bool kappa_is_zero() const { return kappa_.is_zero(); }

    friend bool operator==(const Params& p, const Params& q) {
        return p.mode_ == q.mode_ && p.h_ == q.h_;
    }

private:
    KappaMode mode_;
    ParamScalar kappa_;
    std::vector<ParamScalar> h_;
};

/// Literal: the content order exactly. Step1Tiebreak additionally orders
/// equal-content equivalent boxes by component index.
enum class BoxOrderMode { Literal, Step1Tiebreak };

namespace detail {

inline void check_box(const Params& p, const Box& b) {
    if (b.i < 0 || b.i >= p.ell()) throw std::out_of_range("box component index outside [0, ell)");
}

inline Rational component_offset(int i, int j, int ell) { return Rational(i - j, ell); }

}  // namespace detail

/// h_i + kappa*(y - x).
inline ParamScalar cont(const Params& p, const Box& b) {
    detail::check_box(p, b);
    return p.h(b.i) + p.kappa() * Rational(b.y - b.x);
}

inline bool box_equiv(const Params& p, const Box& b, const Box& b2) {
    detail::check_box(p, b2);
    return is_in_integers_plus(cont(p, b) - cont(p, b2), detail::component_offset(b.i, b2.i, p.ell()));
}

/// Strict content order. Contents are compared exactly; a non-rational difference is never negative.
inline bool box_less(const Params& p, const Box& b, const Box& b2, BoxOrderMode mode = BoxOrderMode::Literal) {
    detail::check_box(p, b2);
    ParamScalar diff = cont(p, b) - cont(p, b2);
    if (!is_in_integers_plus(diff, detail::component_offset(b.i, b2.i, p.ell()))) return false;
    Sign s = rational_sign(diff);
    if (s == Sign::Negative) return true;
    return mode == BoxOrderMode::Step1Tiebreak && s == Sign::Zero && b.i < b2.i;
}

inline bool box_leq(const Params& p, const Box& b, const Box& b2, BoxOrderMode mode = BoxOrderMode::Literal) {
    return b == b2 || box_less(p, b, b2, mode);
}

}  // namespace cherloc
