#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace qinfo {

// Worker cap from QINFO_THREADS (positive integer), default 1, clamped to
// [1, 64]. Thread count never changes results: Monte Carlo work is split
// into a fixed block grid and merged in block order regardless of workers.
int worker_count();

// Number of substream blocks for n Monte Carlo draws: 64, or n when smaller.
int block_count(long long n);

// First draw index of each block when n draws are split as evenly as the
// block count allows; block b covers [offset(b), offset(b+1)).
long long block_offset(long long n, int blocks, int b);

// Runs fn(b) for b in [0, blocks) on up to worker_count() threads and
// returns the results indexed by block, so reductions stay order-stable.
template <typename T>
std::vector<T> run_blocks(int blocks, const std::function<T(int)>& fn) {
  std::vector<T> results(blocks);
  int workers = worker_count();
  if (workers > blocks) workers = blocks;
  if (workers <= 1) {
    for (int b = 0; b < blocks; ++b) results[b] = fn(b);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int b = w; b < blocks; b += workers) results[b] = fn(b);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

// Mean/stderr accumulator, mergeable in fixed order.
struct RunningStats {
  long long n = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    ++n;
    sum += x;
    sum_sq += x * x;
  }
  void merge(const RunningStats& other) {
    n += other.n;
    sum += other.sum;
    sum_sq += other.sum_sq;
  }
  double mean() const { return sum / static_cast<double>(n); }
  double stderr_mean() const;
};

// Two-sided one-sample Kolmogorov-Smirnov statistic of sorted samples
// against a CDF, and the asymptotic critical value at significance alpha.
double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf);
double ks_critical(std::size_t n, double alpha);

}  // namespace qinfo
