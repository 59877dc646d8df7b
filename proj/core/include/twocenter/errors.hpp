#ifndef TWOCENTER_ERRORS_HPP
#define TWOCENTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twocenter {

/// A companion-matrix solve produced a root with a non-negligible imaginary
/// part, or two roots collapsed onto each other. For the parameter families
/// handled here all roots are real and simple, so this signals either a bug
/// or parameters outside the supported family.
class RootRealityError : public std::runtime_error {
public:
  explicit RootRealityError(const std::string& what) : std::runtime_error(what) {}
};

/// Equal charges: the angular equation degenerates and admits no polynomial
/// truncation. Callers must route to the Mathieu machinery instead.
class SymmetricCaseError : public std::runtime_error {
public:
  explicit SymmetricCaseError(const std::string& what) : std::runtime_error(what) {}
};

class BranchOutOfRange : public std::out_of_range {
public:
  explicit BranchOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// Root continuation across the scan grid became ambiguous even after the
/// grid was refined repeatedly.
class BranchCrossingError : public std::runtime_error {
public:
  explicit BranchCrossingError(const std::string& what) : std::runtime_error(what) {}
};

/// An adaptive truncation failed to stabilize within its hard cap.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The normalization integral does not converge (the candidate is not
/// square-integrable).
class NormalizationDivergence : public std::runtime_error {
public:
  explicit NormalizationDivergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace twocenter

#endif
