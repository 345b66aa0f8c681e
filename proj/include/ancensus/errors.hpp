#ifndef ANCENSUS_ERRORS_HPP
#define ANCENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ancensus {

// Thrown when an iterative numeric method fails to reach its tolerance
// within the configured budget. Callers must never treat the partial
// result as an answer.
class numeric_failure : public std::runtime_error {
public:
    explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ancensus

#endif
