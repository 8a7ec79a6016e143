#include "qcat/errors.hpp"

namespace qcat {

Error::Error(std::string_view code, const std::string& message)
    : std::runtime_error(std::string(code) + ": " + message), code_(code) {}

DivergentSeries::DivergentSeries(const std::string& message)
    : Error("DivergentSeries", message) {}

NonNormalizable::NonNormalizable(const std::string& message)
    : Error("NonNormalizable", message) {}

NullState::NullState(const std::string& message) : Error("NullState", message) {}

ConvergenceFailure::ConvergenceFailure(const std::string& message)
    : Error("ConvergenceFailure", message) {}

UndefinedAtVacuum::UndefinedAtVacuum(const std::string& message)
    : Error("UndefinedAtVacuum", message) {}

NoRoot::NoRoot(const std::string& message) : Error("NoRoot", message) {}

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : Error("DimensionMismatch", "expected dimension " + std::to_string(expected) +
                                     ", got " + std::to_string(actual)) {}

FactorialOverflow::FactorialOverflow(std::size_t n)
    : Error("FactorialOverflow",
            "q-factorial exceeds the double range at n = " + std::to_string(n)),
      n_(n) {}

}  // namespace qcat
