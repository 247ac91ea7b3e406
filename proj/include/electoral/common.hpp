#ifndef ELECTORAL_COMMON_HPP
#define ELECTORAL_COMMON_HPP

#include <stdexcept>
#include <string>

namespace electoral {

/// Thrown when an argument falls outside the policy space [0,1] or
/// violates a structural precondition (e.g. t_l >= t_r).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a computation cannot be carried out at double precision
/// (e.g. a vanishing denominator in a certificate ratio).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline void require_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(x));
}

}  // namespace electoral

#endif  // ELECTORAL_COMMON_HPP
