#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace gx {

/// A nonnegative real stored as its natural logarithm.
///
/// The solution formulas multiply quantities spanning hundreds of orders
/// of magnitude (residues like 1e-6 against constants like 1e20, times
/// exponentials exp(t/lambda) with |t| up to a few hundred), so all
/// determinant and formula arithmetic is done on logs. Exact zero is
/// encoded as -infinity; it absorbs multiplication and is the identity
/// for addition. Subtraction is deliberately not provided: every formula
/// evaluated through this type is a positively-weighted sum.
class LogReal {
public:
    LogReal() : lg_(-inf()) {}

    static LogReal zero() { return LogReal(); }
    static LogReal one() { return from_log(0.0); }

    static LogReal from_log(double lg) {
        LogReal r;
        r.lg_ = lg;
        return r;
    }

    /// v must be >= 0; v == 0 maps to the exact zero element.
    static LogReal from_value(double v) {
        return from_log(v > 0.0 ? std::log(v) : -inf());
    }

    double log() const { return lg_; }
    double value() const { return std::exp(lg_); }
    bool is_zero() const { return lg_ == -inf(); }

    friend LogReal operator*(LogReal a, LogReal b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return from_log(a.lg_ + b.lg_);
    }

    /// b must be nonzero.
    friend LogReal operator/(LogReal a, LogReal b) {
        if (a.is_zero()) return zero();
        return from_log(a.lg_ - b.lg_);
    }

    friend LogReal operator+(LogReal a, LogReal b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        double hi = a.lg_, lo = b.lg_;
        if (hi < lo) std::swap(hi, lo);
        return from_log(hi + std::log1p(std::exp(lo - hi)));
    }

    LogReal& operator*=(LogReal o) { return *this = *this * o; }
    LogReal& operator+=(LogReal o) { return *this = *this + o; }

    friend bool operator<(LogReal a, LogReal b) { return a.lg_ < b.lg_; }
    friend bool operator==(LogReal a, LogReal b) { return a.lg_ == b.lg_; }

private:
    static constexpr double inf() { return std::numeric_limits<double>::infinity(); }
    double lg_;
};

/// log(sum(exp(terms))). Terms are reduced in descending order so the
/// result does not depend on the caller's term ordering. Empty input
/// gives the log of zero (-inf).
double log_sum_exp(std::vector<double> terms);

/// Accumulates positively-weighted terms and reduces them once.
class LogSum {
public:
    void add(LogReal term) {
        if (!term.is_zero()) terms_.push_back(term.log());
    }
    void add_scaled(LogReal coeff, LogReal term) { add(coeff * term); }
    LogReal total() const { return LogReal::from_log(log_sum_exp(terms_)); }

private:
    std::vector<double> terms_;
};

}  // namespace gx
