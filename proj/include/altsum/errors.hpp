#ifndef ALTSUM_ERRORS_HPP
#define ALTSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace altsum {

/// Bad argument (wrong range, inconsistent sizes, malformed input).
struct argument_error : std::invalid_argument {
    explicit argument_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Evaluation outside a function's domain (log of a nonpositive number, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// A requested operation needs data the summand bundle does not provide.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// No (m, c) selection could satisfy the requested accuracy.
struct planning_error : std::runtime_error {
    explicit planning_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The double-run agreement check failed even after a retry.
struct accuracy_error : std::runtime_error {
    explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace altsum

#endif
