#include "buresgeom/measures.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "buresgeom/matcore.hpp"

namespace buresgeom {

namespace {

const double kPi = std::acos(-1.0);
const double kInf = std::numeric_limits<double>::infinity();

bool is_half_integer(double x, long& twice) {
    const double t = 2.0 * x;
    const double r = std::round(t);
    if (std::abs(t - r) < 1e-9) {
        twice = static_cast<long>(r);
        return true;
    }
    return false;
}

/// Product accumulator running an exact track (while all factors are exact
/// powers and half-integer Gammas) and a log track in parallel.
class ValueProduct {
public:
    void mul_gamma(double arg, const char* what) {
        if (!(arg > 0.0)) {
            throw DomainError(std::string("Gamma pole in ") + what + " (argument " +
                              std::to_string(arg) + ")");
        }
        log_ += log_gamma(arg);
        long twice = 0;
        if (exact_ && is_half_integer(arg, twice) && twice >= 1) {
            acc_ = acc_ * ExactValue::gamma_half(twice);
        } else {
            exact_ = false;
        }
    }

    void div_gamma(double arg, const char* what) {
        if (!(arg > 0.0)) {
            throw DomainError(std::string("Gamma pole in ") + what + " (argument " +
                              std::to_string(arg) + ")");
        }
        log_ -= log_gamma(arg);
        long twice = 0;
        if (exact_ && is_half_integer(arg, twice) && twice >= 1) {
            acc_ = acc_ / ExactValue::gamma_half(twice);
        } else {
            exact_ = false;
        }
    }

    void mul_two_pow(double exp) {
        log_ += exp * std::log(2.0);
        long twice = 0;
        if (exact_ && is_half_integer(exp, twice)) {
            acc_ = acc_ * ExactValue::pow2_half(twice);
        } else {
            exact_ = false;
        }
    }

    void mul_pi_pow(double exp) {
        log_ += exp * std::log(kPi);
        long twice = 0;
        if (exact_ && is_half_integer(exp, twice)) {
            acc_ = acc_ * ExactValue::pi_pow_half(twice);
        } else {
            exact_ = false;
        }
    }

    void mul_long(long v) {
        log_ += std::log(static_cast<double>(v));
        if (exact_) {
            acc_ = acc_ * ExactValue::from_long(v);
        }
    }

    void div_factorial(long k) {
        log_ -= log_gamma(static_cast<double>(k) + 1.0);
        if (exact_) {
            acc_ = acc_ / ExactValue::factorial(k);
        }
    }

    void mul_value(const ExactValue& v) {
        log_ += std::log(v.value());
        if (exact_ && v.is_exact()) {
            acc_ = acc_ * v;
        } else {
            exact_ = false;
        }
    }

    void div_value(const ExactValue& v) {
        log_ -= std::log(v.value());
        if (exact_ && v.is_exact()) {
            acc_ = acc_ / v;
        } else {
            exact_ = false;
        }
    }

    double log_value() const { return log_; }

    ExactValue result() const {
        return exact_ ? acc_ : ExactValue::approx(std::exp(log_));
    }

private:
    bool exact_ = true;
    ExactValue acc_;
    double log_ = 0.0;
};

void require_beta(double beta, bool conjectural, const char* where) {
    if (!(beta > 0.0)) {
        throw DomainError(std::string(where) + ": beta must be positive");
    }
    if (beta != 1.0 && beta != 2.0 && !conjectural) {
        throw DomainError(std::string(where) +
                          ": beta outside {1,2} requires the conjectural flag");
    }
}

} // namespace

void validate_params(const EnsembleParams& params) {
    if (params.n < 1) {
        throw DomainError("EnsembleParams: n must be >= 1");
    }
    if (!(params.alpha > 0.0)) {
        throw DomainError("EnsembleParams: alpha must be positive");
    }
    require_beta(params.beta, params.conjectural, "EnsembleParams");
}

SimplexPoint SimplexPoint::make(Eigen::VectorXd lambdas) {
    std::vector<std::string> violations;
    if (lambdas.size() < 1) {
        violations.push_back("empty eigenvalue vector");
        throw ValidationError(std::move(violations));
    }
    if (lambdas.minCoeff() < 0.0) {
        violations.push_back("negative eigenvalue " + std::to_string(lambdas.minCoeff()));
    }
    const double sum = lambdas.sum();
    if (std::abs(sum - 1.0) > 1e-12) {
        violations.push_back("eigenvalues sum to " + std::to_string(sum));
    }
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    return SimplexPoint{std::move(lambdas)};
}

ExactValue flag_volume(int n, double beta, bool conjectural) {
    if (n < 0) {
        throw DomainError("flag_volume: n must be >= 0");
    }
    require_beta(beta, conjectural, "flag_volume");
    ValueProduct p;
    for (int j = 1; j <= n; ++j) {
        const double e = 0.5 * (j - 1) * beta;
        p.mul_two_pow(e);
        p.mul_pi_pow(e);
        p.mul_gamma(0.5 * beta, "flag_volume Gamma(beta/2)");
        p.div_gamma(0.5 * j * beta, "flag_volume Gamma(j beta/2)");
    }
    return p.result();
}

ExactValue hall_constant(int n) {
    if (n < 1) {
        throw DomainError("hall_constant: n must be >= 1");
    }
    ValueProduct p;
    p.mul_two_pow(static_cast<double>(n) * n - n);
    p.mul_gamma(0.5 * n * n, "hall_constant Gamma(N^2/2)");
    p.mul_pi_pow(-0.5 * n);
    for (int j = 1; j <= n + 1; ++j) {
        p.div_gamma(static_cast<double>(j), "hall_constant Gamma(j)");
    }
    return p.result();
}

namespace {

ValueProduct generalized_constant_product(const EnsembleParams& params) {
    validate_params(params);
    const int n = params.n;
    const double a = params.alpha;
    const double b = params.beta;
    ValueProduct p;
    p.mul_gamma(0.5 * n * (2.0 * a - 1.0 + 0.5 * (n - 1) * b), "C_N leading Gamma");
    p.mul_two_pow(n * (0.5 * (n - 1) * b + 2.0 * (a - 1.0)));
    p.mul_pi_pow(-0.5 * n);
    for (int j = 1; j <= n; ++j) {
        p.mul_gamma(1.0 + 0.5 * b, "C_N Gamma(1 + beta/2)");
        p.mul_gamma(0.5 * (n - j) * b + a, "C_N Gamma((N-j) beta/2 + alpha)");
        p.div_gamma(1.0 + 0.5 * j * b, "C_N Gamma(1 + j beta/2)");
        p.div_gamma(0.5 * (n - j) * b + 2.0 * a - 1.0, "C_N Gamma((N-j) beta/2 + 2 alpha - 1)");
    }
    return p;
}

} // namespace

ExactValue generalized_constant(const EnsembleParams& params) {
    return generalized_constant_product(params).result();
}

double generalized_constant_log(const EnsembleParams& params) {
    return generalized_constant_product(params).log_value();
}

long dim_submanifold(int n, int rank_defect, double beta) {
    if (rank_defect < 0 || rank_defect > n - 1) {
        throw DomainError("dim_submanifold: rank defect out of range [0, N-1]");
    }
    if (beta == 1.0 || beta == 2.0) {
        const long b = static_cast<long>(beta);
        const long num = static_cast<long>(n - rank_defect) * (2 + (n + rank_defect - 1) * b);
        // (N-k) and (N+k-1) have opposite parity, so num is even
        return num / 2 - 1;
    }
    const double d = (n - rank_defect) * (1.0 + 0.5 * (n + rank_defect - 1) * beta) - 1.0;
    const double r = std::round(d);
    if (std::abs(d - r) > 1e-9) {
        throw DomainError("dim_submanifold: non-integer dimension at this beta");
    }
    return static_cast<long>(r);
}

ExactValue submanifold_volume(int n, int rank_defect, double beta, bool conjectural) {
    if (rank_defect < 0 || rank_defect > n - 1) {
        throw DomainError("submanifold_volume: rank defect out of range [0, N-1]");
    }
    require_beta(beta, conjectural, "submanifold_volume");
    const double d = (n - rank_defect) * (1.0 + 0.5 * (n + rank_defect - 1) * beta) - 1.0;
    ValueProduct p;
    p.mul_two_pow(-d);
    p.mul_pi_pow(0.5 * (d + 1.0));
    p.div_gamma(0.5 * (d + 1.0), "submanifold_volume Gamma((d+1)/2)");
    for (int j = 1; j <= n - rank_defect; ++j) {
        p.mul_gamma(0.5 * j * beta, "submanifold_volume Gamma(j beta/2)");
        p.mul_gamma(1.0 + 0.5 * (2 * rank_defect + j - 1) * beta,
                    "submanifold_volume Gamma(1 + (2k+j-1) beta/2)");
        p.div_gamma(0.5 * (rank_defect + j) * beta, "submanifold_volume Gamma((k+j) beta/2)");
        p.div_gamma(1.0 + 0.5 * (rank_defect + j - 1) * beta,
                    "submanifold_volume Gamma(1 + (k+j-1) beta/2)");
    }
    return p.result();
}

ExactValue submanifold_volume_compact(int n, int rank_defect, double beta, bool conjectural) {
    if (rank_defect < 0 || rank_defect > n - 1) {
        throw DomainError("submanifold_volume_compact: rank defect out of range [0, N-1]");
    }
    require_beta(beta, conjectural, "submanifold_volume_compact");
    const int m = n - rank_defect;
    const double d = m * (1.0 + 0.5 * (n + rank_defect - 1) * beta) - 1.0;
    EnsembleParams inner;
    inner.n = m;
    inner.alpha = 1.0 + 0.5 * rank_defect * beta;
    inner.beta = beta;
    inner.conjectural = conjectural;
    ValueProduct p;
    p.mul_two_pow(-d + 0.25 * m * (n + rank_defect - 1) * beta);
    p.div_factorial(m);
    p.div_value(generalized_constant(inner));
    p.mul_value(flag_volume(n, beta, conjectural));
    p.div_value(flag_volume(rank_defect, beta, conjectural));
    return p.result();
}

ExactValue bures_volume(int n, double beta, bool conjectural) {
    if (n < 1) {
        throw DomainError("bures_volume: n must be >= 1");
    }
    return submanifold_volume(n, 0, beta, conjectural);
}

double hemisphere_volume(long d, double r) {
    if (d < 0) {
        throw DomainError("hemisphere_volume: dimension must be >= 0");
    }
    if (!(r > 0.0)) {
        throw DomainError("hemisphere_volume: radius must be positive");
    }
    const double half_dp1 = 0.5 * (static_cast<double>(d) + 1.0);
    return std::exp(half_dp1 * std::log(kPi) - log_gamma(half_dp1) + d * std::log(r));
}

ExactValue surface_to_volume_ratio(int n) {
    if (n < 2) {
        throw DomainError("surface_to_volume_ratio: n must be >= 2");
    }
    ValueProduct p;
    p.mul_long(2);
    p.mul_pi_pow(-0.5);
    p.mul_gamma(0.5 * n * n, "surface_to_volume_ratio Gamma(N^2/2)");
    p.div_gamma(0.5 * n * n - 0.5, "surface_to_volume_ratio Gamma(N^2/2 - 1/2)");
    p.mul_long(n);
    return p.result();
}

ExactValue pure_state_volume(int n, double beta, bool conjectural) {
    if (n < 1) {
        throw DomainError("pure_state_volume: n must be >= 1");
    }
    require_beta(beta, conjectural, "pure_state_volume");
    ValueProduct p;
    p.mul_pi_pow(0.5 * (n - 1) * beta);
    p.mul_gamma(0.5 * beta, "pure_state_volume Gamma(beta/2)");
    p.div_gamma(0.5 * n * beta, "pure_state_volume Gamma(N beta/2)");
    return p.result();
}

double joint_logdensity(const SimplexPoint& point, const EnsembleParams& params) {
    validate_params(params);
    if (point.size() != params.n) {
        throw DomainError("joint_logdensity: point size does not match N");
    }
    const Eigen::VectorXd& l = point.lambdas;
    const double a = params.alpha;
    const double b = params.beta;

    // Boundary classification: total vanishing order of the singular factors.
    // Positive order means the density vanishes (-inf), negative order an
    // integrable divergence (+inf).
    double order = 0.0;
    bool singular = false;
    for (int i = 0; i < params.n; ++i) {
        if (l[i] == 0.0) {
            singular = true;
            order += a - 1.5;
        }
    }
    for (int i = 0; i < params.n; ++i) {
        for (int j = i + 1; j < params.n; ++j) {
            if (l[i] == l[j]) {
                singular = true;
                order += b;
            }
            if (l[i] + l[j] == 0.0) {
                singular = true;
                order -= 0.5 * b;
            }
        }
    }
    if (singular) {
        return order > 0.0 ? -kInf : (order < 0.0 ? kInf : -kInf);
    }

    double sum = generalized_constant_log(params);
    for (int i = 0; i < params.n; ++i) {
        sum += (a - 1.5) * std::log(l[i]);
    }
    for (int i = 0; i < params.n; ++i) {
        for (int j = i + 1; j < params.n; ++j) {
            sum += b * std::log(std::abs(l[i] - l[j])) - 0.5 * b * std::log(l[i] + l[j]);
        }
    }
    return sum;
}

double selberg_lorentz(double gamma, double beta, int n) {
    if (n < 1) {
        throw DomainError("selberg_lorentz: n must be >= 1");
    }
    if (!(beta > 0.0)) {
        throw DomainError("selberg_lorentz: beta must be positive");
    }
    if (!(2.0 * gamma - (n - 1) * beta - 1.0 > 0.0)) {
        throw DomainError("selberg_lorentz: divergent integral, needs 2 gamma - (2N-2) beta/2 - 1 > 0");
    }
    double sum = n * std::log(kPi) + n * (0.5 * (n - 1) * beta + 2.0 - 2.0 * gamma) * std::log(2.0);
    for (int j = 0; j <= n - 1; ++j) {
        const double arg_num2 = 2.0 * gamma - 0.5 * (n + j - 1) * beta - 1.0;
        const double arg_den2 = gamma - 0.5 * j * beta;
        if (!(arg_num2 > 0.0) || !(arg_den2 > 0.0)) {
            throw DomainError("selberg_lorentz: Gamma pole at j = " + std::to_string(j));
        }
        sum += log_gamma(1.0 + 0.5 * (j + 1) * beta) + log_gamma(arg_num2);
        sum -= log_gamma(1.0 + 0.5 * beta) + 2.0 * log_gamma(arg_den2);
    }
    return std::exp(sum);
}

} // namespace buresgeom
