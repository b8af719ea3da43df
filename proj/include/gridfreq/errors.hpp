#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gridfreq {

/// Input-constraint violations, all collected before throwing so a caller
/// sees every problem at once. what() joins them with "; ".
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v);
    std::vector<std::string> violations_;
};

/// Non-finite value produced during integration; carries the step time.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& message, double t_seconds);

    double time_seconds() const noexcept { return t_; }

private:
    double t_;
};

/// File-level problems: missing file, malformed syntax, wrong shape.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gridfreq
