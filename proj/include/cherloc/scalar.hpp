#pragma once

/**
 * @file scalar.hpp
 * @brief The coefficient field Q + Q*kappa.
 *
 * A ParamScalar is a + b*kappa with exact rational a, b. The kappa of a
 * computation is either a fixed rational (then kappa is substituted eagerly
 * and b is always 0) or a formal transcendental (then a + b*kappa is
 * rational iff b == 0). Scalars remember which of the two contexts produced
 * them; mixing contexts is a usage error.
 */

#include "cherloc/rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace cherloc {

enum class Sign { Negative, Zero, Positive, NotRational };

inline const char* to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "negative";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "positive";
        case Sign::NotRational: return "not-rational";
    }
    return "?";
}

class KappaMode;

class ParamScalar {
public:
    /// Rational-context zero.
    ParamScalar() = default;

    const Rational& constant() const { return a_; }
    const Rational& kappa_coeff() const { return b_; }
    bool is_formal() const { return formal_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend ParamScalar operator+(const ParamScalar& x, const ParamScalar& y) {
        check_same_context(x, y);
        return ParamScalar(x.a_ + y.a_, x.b_ + y.b_, x.formal_);
    }
    friend ParamScalar operator-(const ParamScalar& x, const ParamScalar& y) {
        check_same_context(x, y);
        return ParamScalar(x.a_ - y.a_, x.b_ - y.b_, x.formal_);
    }
    friend ParamScalar operator-(const ParamScalar& x) { return ParamScalar(-x.a_, -x.b_, x.formal_); }

    friend ParamScalar operator+(const ParamScalar& x, const Rational& c) {
        return ParamScalar(x.a_ + c, x.b_, x.formal_);
    }
    friend ParamScalar operator-(const ParamScalar& x, const Rational& c) {
        return ParamScalar(x.a_ - c, x.b_, x.formal_);
    }
    friend ParamScalar operator*(const ParamScalar& x, const Rational& c) {
        return ParamScalar(x.a_ * c, x.b_ * c, x.formal_);
    }
    friend ParamScalar operator*(const Rational& c, const ParamScalar& x) { return x * c; }

    ParamScalar& operator+=(const ParamScalar& y) { return *this = *this + y; }
    ParamScalar& operator-=(const ParamScalar& y) { return *this = *this - y; }

    friend bool operator==(const ParamScalar& x, const ParamScalar& y) {
        check_same_context(x, y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ParamScalar& x) {
        os << "(" << to_string(x.a_) << ", " << to_string(x.b_) << ")";
        return os;
    }

private:
    friend class KappaMode;

    ParamScalar(Rational a, Rational b, bool formal) : a_(std::move(a)), b_(std::move(b)), formal_(formal) {}

    static void check_same_context(const ParamScalar& x, const ParamScalar& y) {
        if (x.formal_ != y.formal_)
            throw std::logic_error("ParamScalar: operands come from different kappa modes");
    }

    Rational a_{0};
    Rational b_{0};
    bool formal_ = false;
};

/// Whether kappa is a fixed rational or a formal transcendental.
class KappaMode {
public:
    static KappaMode rational(Rational value) { return KappaMode(std::move(value)); }
    static KappaMode formal() { return KappaMode(); }

    bool is_formal() const { return !value_.has_value(); }

    const Rational& value() const {
        if (!value_) throw std::logic_error("KappaMode: formal kappa has no rational value");
        return *value_;
    }

    /// Canonical a + b*kappa in this mode.
    ParamScalar scalar(const Rational& a, const Rational& b = Rational(0)) const {
        if (value_) return ParamScalar(a + b * *value_, Rational(0), false);
        return ParamScalar(a, b, true);
    }
    ParamScalar constant(const Rational& a) const { return scalar(a); }
    ParamScalar zero() const { return scalar(Rational(0)); }
    ParamScalar kappa() const { return scalar(Rational(0), Rational(1)); }

    /// Re-expresses a scalar produced in another mode (substitutes kappa when this mode is rational).
    ParamScalar adopt(const ParamScalar& x) const { return scalar(x.constant(), x.kappa_coeff()); }

    friend bool operator==(const KappaMode& x, const KappaMode& y) { return x.value_ == y.value_; }

private:
    KappaMode() = default;
    explicit KappaMode(Rational value) : value_(std::move(value)) {}

    std::optional<Rational> value_;
};

/// x in {z + c : z integer}. A formal scalar with nonzero kappa part is never rational.
inline bool is_in_integers_plus(const ParamScalar& x, const Rational& c) {
    if (!x.is_rational()) return false;
    return is_integer(x.constant() - c);
}

inline Sign rational_sign(const ParamScalar& x) {
    if (!x.is_rational()) return Sign::NotRational;
    if (x.constant() < 0) return Sign::Negative;
    if (x.constant() > 0) return Sign::Positive;
    return Sign::Zero;
}

}  // namespace cherloc
