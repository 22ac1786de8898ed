#include "qinfo/stats.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qinfo {

int worker_count() {
  const char* env = std::getenv("QINFO_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) return 1;
  if (v > 64) v = 64;
  return static_cast<int>(v);
}

int block_count(long long n) {
  if (n < 1) throw std::invalid_argument("need at least one draw");
  return n < 64 ? static_cast<int>(n) : 64;
}

long long block_offset(long long n, int blocks, int b) {
  long long base = n / blocks;
  long long extra = n % blocks;
  return base * b + (b < extra ? b : extra);
}

double RunningStats::stderr_mean() const {
  if (n < 2) throw std::invalid_argument("stderr needs n >= 2");
  double m = mean();
  double var = (sum_sq - static_cast<double>(n) * m * m) /
               static_cast<double>(n - 1);
  if (var < 0.0) var = 0.0;  // rounding near a constant sample
  return std::sqrt(var / static_cast<double>(n));
}

double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf) {
  std::size_t n = sorted_samples.size();
  if (n == 0) throw std::invalid_argument("KS statistic needs samples");
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double f = cdf(sorted_samples[i]);
    double hi = static_cast<double>(i + 1) / static_cast<double>(n) - f;
    double lo = f - static_cast<double>(i) / static_cast<double>(n);
    if (hi > worst) worst = hi;
    if (lo > worst) worst = lo;
  }
  return worst;
}

double ks_critical(std::size_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("bad KS parameters");
  }
  // Asymptotic two-sided critical value c(alpha)/sqrt(n).
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) /
         std::sqrt(static_cast<double>(n));
}

}  // namespace qinfo
