#include "gridfreq/errors.hpp"

#include <sstream>

namespace gridfreq {

std::string ValidationError::join(const std::vector<std::string>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << "; ";
        os << v[i];
    }
    return os.str();
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

NumericError::NumericError(const std::string& message, double t_seconds)
    : std::runtime_error(message + " at t = " + std::to_string(t_seconds) + " s"),
      t_(t_seconds) {}

} // namespace gridfreq
