#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "buresgeom/errors.hpp"

namespace buresgeom {

/// Number of the form rational * 2^(a/2) * pi^(b/2) with a float mirror.
///
/// Powers of two are kept out of the rational part, so two exact values are
/// equal iff their three components are equal. Both exponents count in half
/// units: Gamma at half-integer arguments contributes sqrt(pi), and flag
/// manifold volumes at beta = 1 contribute sqrt(2). Values built from
/// non-half-integer parameters carry only the float (is_exact() == false).
class ExactValue {
public:
    ExactValue() : exact_(true), rat_(1) { sync(); }

    static ExactValue one() { return ExactValue(); }
    static ExactValue from_long(long v);
    static ExactValue from_ratio(long num, long den);
    static ExactValue from_mpq(mpq_class q);
    static ExactValue approx(double v);
    /// Gamma(twice/2) for twice >= 1.
    static ExactValue gamma_half(long twice);
    /// (k)! for k >= 0.
    static ExactValue factorial(long k);
    static ExactValue pow2_half(long half_exp);
    static ExactValue pi_pow_half(long half_exp);
    static ExactValue pi() { return pi_pow_half(2); }

    bool is_exact() const { return exact_; }
    double value() const { return value_; }
    const mpq_class& rational() const { return rat_; }
    long two_half_exp() const { return two_half_; }
    long pi_half_exp() const { return pi_half_; }

    ExactValue operator*(const ExactValue& o) const;
    ExactValue operator/(const ExactValue& o) const;
    bool operator==(const ExactValue& o) const;

    /// Canonical string <int>[/<int>][*pi^e | /pi^e], e.g. "35/pi",
    /// "71680/pi^2", "1/8*pi^2". Absent for float-only values and for the
    /// (internal-only) values carrying an odd power of sqrt(2).
    std::optional<std::string> exact_string() const;

private:
    void normalize();
    void sync();

    bool exact_;
    mpq_class rat_{1};
    long two_half_ = 0;
    long pi_half_ = 0;
    double value_ = 1.0;
};

} // namespace buresgeom
