#include "buresgeom/exact.hpp"

#include <cmath>

namespace buresgeom {

namespace {
const double kPi = std::acos(-1.0);
}

ExactValue ExactValue::from_long(long v) {
    ExactValue e;
    e.rat_ = v;
    e.normalize();
    e.sync();
    return e;
}

ExactValue ExactValue::from_ratio(long num, long den) {
    if (den == 0) {
        throw DomainError("ExactValue: zero denominator");
    }
    ExactValue e;
    e.rat_ = mpq_class(num, den);
    e.rat_.canonicalize();
    e.normalize();
    e.sync();
    return e;
}

ExactValue ExactValue::from_mpq(mpq_class q) {
    ExactValue e;
    e.rat_ = std::move(q);
    e.rat_.canonicalize();
    e.normalize();
    e.sync();
    return e;
}

ExactValue ExactValue::approx(double v) {
    ExactValue e;
    e.exact_ = false;
    e.value_ = v;
    return e;
}

ExactValue ExactValue::gamma_half(long twice) {
    if (twice < 1) {
        throw DomainError("gamma_half: argument must be >= 1/2");
    }
    ExactValue e;
    if (twice % 2 == 0) {
        // Gamma(n) = (n-1)!
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(twice / 2 - 1));
        e.rat_ = mpq_class(f);
    } else {
        // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
        const long k = (twice - 1) / 2;
        mpz_class num, den;
        mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * k));
        mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
        e.rat_ = mpq_class(num) / mpq_class(den);
        e.two_half_ = -4 * k;
        e.pi_half_ = 1;
    }
    e.normalize();
    e.sync();
    return e;
}

ExactValue ExactValue::factorial(long k) {
    if (k < 0) {
        throw DomainError("factorial: negative argument");
    }
    return gamma_half(2 * (k + 1));
}

ExactValue ExactValue::pow2_half(long half_exp) {
    ExactValue e;
    e.two_half_ = half_exp;
    e.sync();
    return e;
}

ExactValue ExactValue::pi_pow_half(long half_exp) {
    ExactValue e;
    e.pi_half_ = half_exp;
    e.sync();
    return e;
}

ExactValue ExactValue::operator*(const ExactValue& o) const {
    if (!exact_ || !o.exact_) {
        return approx(value_ * o.value_);
    }
    ExactValue e;
    e.rat_ = rat_ * o.rat_;
    e.two_half_ = two_half_ + o.two_half_;
    e.pi_half_ = pi_half_ + o.pi_half_;
    e.normalize();
    e.sync();
    return e;
}

ExactValue ExactValue::operator/(const ExactValue& o) const {
    if (!exact_ || !o.exact_) {
        return approx(value_ / o.value_);
    }
    if (o.rat_ == 0) {
        throw DomainError("ExactValue: division by zero");
    }
    ExactValue e;
    e.rat_ = rat_ / o.rat_;
    e.two_half_ = two_half_ - o.two_half_;
    e.pi_half_ = pi_half_ - o.pi_half_;
    e.normalize();
    e.sync();
    return e;
}

bool ExactValue::operator==(const ExactValue& o) const {
    if (exact_ && o.exact_) {
        return rat_ == o.rat_ && two_half_ == o.two_half_ && pi_half_ == o.pi_half_;
    }
    return value_ == o.value_;
}

void ExactValue::normalize() {
    if (!exact_) {
        return;
    }
    if (rat_ == 0) {
        two_half_ = 0;
        pi_half_ = 0;
        return;
    }
    const mpz_class two(2);
    mpz_class num = rat_.get_num();
    mpz_class den = rat_.get_den();
    mpz_class reduced;
    unsigned long twos = mpz_remove(reduced.get_mpz_t(), num.get_mpz_t(), two.get_mpz_t());
    two_half_ += 2 * static_cast<long>(twos);
    num = reduced;
    twos = mpz_remove(reduced.get_mpz_t(), den.get_mpz_t(), two.get_mpz_t());
    two_half_ -= 2 * static_cast<long>(twos);
    den = reduced;
    rat_ = mpq_class(num) / mpq_class(den);
}

void ExactValue::sync() {
    if (!exact_) {
        return;
    }
    value_ = rat_.get_d() * std::pow(2.0, 0.5 * static_cast<double>(two_half_)) *
             std::pow(kPi, 0.5 * static_cast<double>(pi_half_));
}

std::optional<std::string> ExactValue::exact_string() const {
    if (!exact_ || two_half_ % 2 != 0) {
        return std::nullopt;
    }
    if (rat_ == 0) {
        return std::string("0");
    }
    mpq_class folded = rat_;
    const long k = two_half_ / 2;
    if (k >= 0) {
        mpq_mul_2exp(folded.get_mpq_t(), folded.get_mpq_t(), static_cast<unsigned long>(k));
    } else {
        mpq_div_2exp(folded.get_mpq_t(), folded.get_mpq_t(), static_cast<unsigned long>(-k));
    }
    const mpz_class num = folded.get_num();
    const mpz_class den = folded.get_den();

    auto pi_part = [](long e) {
        if (e == 2) {
            return std::string("pi");
        }
        if (e % 2 == 0) {
            return "pi^" + std::to_string(e / 2);
        }
        return "pi^" + std::to_string(e) + "/2";
    };

    std::string s;
    if (pi_half_ > 0 && num == 1 && den == 1) {
        s = pi_part(pi_half_);
        return s;
    }
    s = num.get_str();
    if (den != 1) {
        s += "/" + den.get_str();
    }
    if (pi_half_ > 0) {
        s += "*" + pi_part(pi_half_);
    } else if (pi_half_ < 0) {
        s += "/" + pi_part(-pi_half_);
    }
    return s;
}

} // namespace buresgeom
