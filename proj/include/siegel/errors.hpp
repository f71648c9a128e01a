#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

/// A function factor was evaluated on one of its poles. `factor` names it,
/// e.g. "zeta(1)" or "Gamma(0 - 1/2)".
class PoleError : public std::domain_error {
 public:
  explicit PoleError(std::string factor)
      : std::domain_error("pole hit in factor " + factor), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

/// Argument outside the region where the requested evaluation is implemented
/// (convergence region, unsupported degree or rank, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A required input that the library cannot compute itself was not supplied.
class MissingInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariant violation inside the library; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace siegel
