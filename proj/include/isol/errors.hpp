#ifndef ISOL_ERRORS_HPP
#define ISOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isol {

// Violated precondition or mathematically meaningless request
// (division by an interval containing zero, non-square-free input, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A computation exceeded its precision, depth, or subdivision budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isol

#endif
