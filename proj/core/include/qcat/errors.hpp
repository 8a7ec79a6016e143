#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcat {

/// Base class for every domain error raised by the library. `code()` is a
/// stable identifier used as the reason code in CSV/JSON output.
class Error : public std::runtime_error {
 public:
  Error(std::string_view code, const std::string& message);

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// The argument lies outside the radius of convergence of a q-series.
class DivergentSeries : public Error {
 public:
  explicit DivergentSeries(const std::string& message);
};

/// |alpha|^2 is not inside the radius of convergence, so the state has no norm.
class NonNormalizable : public Error {
 public:
  explicit NonNormalizable(const std::string& message);
};

/// The requested superposition vanishes identically (odd cat at alpha = 0).
class NullState : public Error {
 public:
  explicit NullState(const std::string& message);
};

class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(const std::string& message);
};

/// Mandel parameter requested for a state with zero mean excitation.
class UndefinedAtVacuum : public Error {
 public:
  explicit UndefinedAtVacuum(const std::string& message);
};

class NoRoot : public Error {
 public:
  explicit NoRoot(const std::string& message);
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual);
};

/// q-factorial left the range of double; `n()` is the first overflowing index.
class FactorialOverflow : public Error {
 public:
  explicit FactorialOverflow(std::size_t n);

  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t n_;
};

}  // namespace qcat
