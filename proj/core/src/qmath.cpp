#include "qcat/qmath.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace qcat {

DeformationParameter::DeformationParameter(double q) : q_(q) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("deformation parameter q must lie in (0, 1], got " +
                                std::to_string(q));
  }
  tau_ = std::log(q);
  // (1 - q)(1 + q) keeps the radius accurate as q -> 1.
  radius_ = q == 1.0 ? std::numeric_limits<double>::infinity() : 1.0 / ((1.0 - q) * (1.0 + q));
}

double q_integer(std::size_t n, const DeformationParameter& q) {
  if (q.undeformed()) {
    return static_cast<double>(n);
  }
  const double q2 = q.q_squared();
  double value = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    value = 1.0 + q2 * value;
  }
  return value;
}

namespace {

// Memoized q-factorials per q. Tables only grow; a reader holding the shared
// lock sees a consistent prefix.
class QFactorialCache {
 public:
  double get(std::size_t n, const DeformationParameter& q) {
    {
      std::shared_lock lock(mutex_);
      auto it = tables_.find(q.q());
      if (it != tables_.end() && n < it->second.values.size()) {
        return it->second.values[n];
      }
    }
    std::unique_lock lock(mutex_);
    Table& table = tables_[q.q()];
    if (table.values.empty()) {
      table.values.push_back(1.0);
      table.last_qint = 0.0;
    }
    const double q2 = q.q_squared();
    while (table.values.size() <= n) {
      const std::size_t k = table.values.size();
      table.last_qint = q.undeformed() ? static_cast<double>(k) : 1.0 + q2 * table.last_qint;
      const double next = table.values.back() * table.last_qint;
      if (!std::isfinite(next)) {
        throw FactorialOverflow(k);
      }
      table.values.push_back(next);
    }
    return table.values[n];
  }

 private:
  struct Table {
    std::vector<double> values;
    double last_qint = 0.0;
  };
  std::shared_mutex mutex_;
  std::map<double, Table> tables_;
};

QFactorialCache& factorial_cache() {
  static QFactorialCache cache;
  return cache;
}

}  // namespace

double q_factorial(std::size_t n, const DeformationParameter& q) {
  return factorial_cache().get(n, q);
}

QSeriesValue q_exponential(double x, const DeformationParameter& q, double tol) {
  return walk_q_series(x, q, tol, [](std::size_t, long double) {});
}

ParitySums q_exponential_parity(double x, const DeformationParameter& q, double tol) {
  long double even = 0.0L;
  long double odd = 0.0L;
  const QSeriesValue total = walk_q_series(x, q, tol, [&](std::size_t n, long double term) {
    (n % 2 == 0 ? even : odd) += term;
  });
  ParitySums out;
  out.even = static_cast<double>(even);
  out.odd = static_cast<double>(odd);
  out.terms_used = total.terms_used;
  out.tail_bound = total.tail_bound;
  out.converged = total.converged;
  return out;
}

double overlap_ratio(double x, const DeformationParameter& q, double tol) {
  if (!(x >= 0.0)) {
    throw std::invalid_argument("overlap_ratio requires x >= 0");
  }
  if (q.undeformed()) {
    return std::exp(-2.0 * x);
  }
  // E_q(-x)/E_q(x) = (even - odd)/(even + odd), both parts accumulated in one
  // extended-precision pass.
  long double even = 0.0L;
  long double odd = 0.0L;
  const QSeriesValue total = walk_q_series(x, q, tol, [&](std::size_t n, long double term) {
    (n % 2 == 0 ? even : odd) += term;
  });
  if (!total.converged) {
    throw ConvergenceFailure("E_q series did not reach tolerance at x = " + std::to_string(x));
  }
  return static_cast<double>((even - odd) / (even + odd));
}

}  // namespace qcat
