#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace buresgeom {

/// Input outside an operation's domain (bad dimension, Gamma pole, r >= 1, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A value object failed one or more of its invariants. Carries every
/// violation, not just the first one found.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "validation failed:";
        for (const auto& item : v) {
            s += " [" + item + "]";
        }
        return s;
    }

    std::vector<std::string> violations_;
};

} // namespace buresgeom
