#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "dynrel/error.hpp"

namespace dynrel {

/// Extended nonnegative failure instant: a finite time >= 0 or +infinity.
/// ALWAYS (already failed) is time 0; NEVER (fail-safe) is +infinity.
/// +infinity compares strictly greater than every finite value and equal
/// to itself, which is exactly IEEE-754 semantics for the wrapped double.
class ExtTime {
public:
    ExtTime() : v_(std::numeric_limits<double>::infinity()) {}

    static ExtTime finite(double t) {
        if (!(t >= 0.0) || std::isinf(t)) {
            throw DomainError("ExtTime::finite: value must be a finite nonnegative real, got " +
                              std::to_string(t));
        }
        return ExtTime(t);
    }

    /// Finite nonnegative value or +infinity; rejects NaN and negatives.
    static ExtTime of(double t) {
        if (std::isnan(t) || t < 0.0) {
            throw DomainError("ExtTime::of: value must be nonnegative or +infinity");
        }
        return ExtTime(t);
    }

    static ExtTime always() { return ExtTime(0.0); }
    static ExtTime never() { return ExtTime(std::numeric_limits<double>::infinity()); }

    bool is_finite() const { return std::isfinite(v_); }
    bool is_never() const { return std::isinf(v_); }

    /// Underlying value; +infinity for NEVER.
    double value() const { return v_; }

    friend bool operator==(ExtTime a, ExtTime b) { return a.v_ == b.v_; }
    friend auto operator<=>(ExtTime a, ExtTime b) { return a.v_ <=> b.v_; }

    friend ExtTime min(ExtTime a, ExtTime b) { return a.v_ < b.v_ ? a : b; }
    friend ExtTime max(ExtTime a, ExtTime b) { return a.v_ < b.v_ ? b : a; }

    /// Shift by a finite nonnegative delay; NEVER stays NEVER.
    ExtTime delayed_by(double dt) const {
        if (!(dt >= 0.0)) throw DomainError("ExtTime::delayed_by: negative delay");
        return ExtTime(v_ + dt);
    }

private:
    explicit ExtTime(double v) : v_(v) {}
    double v_;
};

}  // namespace dynrel
