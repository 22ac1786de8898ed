#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qinfo/hilbert.hpp"
#include "qinfo/sampling.hpp"
#include "qinfo/stats.hpp"

using namespace qinfo;

TEST_CASE("random streams are deterministic per (seed, stream_id)") {
  RandomStream a(42, 0);
  RandomStream b(42, 0);
  for (int i = 0; i < 100; ++i) {
    double ua = a.uniform();
    CHECK(ua == b.uniform());
    CHECK(ua >= 0.0);
    CHECK(ua < 1.0);
  }

  RandomStream c(42, 1);
  RandomStream d(43, 0);
  bool differs_c = false;
  bool differs_d = false;
  RandomStream base(42, 0);
  for (int i = 0; i < 100; ++i) {
    double u = base.uniform();
    differs_c = differs_c || (u != c.uniform());
    differs_d = differs_d || (u != d.uniform());
  }
  CHECK(differs_c);
  CHECK(differs_d);
}

TEST_CASE("substreams are deterministic and mutually distinct") {
  RandomStream parent(42, 7);
  RandomStream s0 = parent.substream(3);
  RandomStream s1 = parent.substream(3);
  RandomStream s2 = parent.substream(4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    double u = s0.uniform();
    CHECK(u == s1.uniform());
    differs = differs || (u != s2.uniform());
  }
  CHECK(differs);
}

TEST_CASE("normal draws match the standard normal distribution") {
  RandomStream rng(42, 22);
  const int n = 10000;
  std::vector<double> draws(n);
  RunningStats stats;
  for (int i = 0; i < n; ++i) {
    draws[static_cast<std::size_t>(i)] = rng.normal();
    stats.add(draws[static_cast<std::size_t>(i)]);
  }
  CHECK(std::abs(stats.mean()) <= 0.03);
  double var = stats.sum_sq / n - stats.mean() * stats.mean();
  CHECK(std::abs(var - 1.0) <= 0.05);

  std::sort(draws.begin(), draws.end());
  auto normal_cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
  CHECK(ks_statistic(draws, normal_cdf) <= ks_critical(n, 0.01));
}

TEST_CASE("pure state samples are normalized and reproducible") {
  RandomStream a(42, 0);
  RandomStream b(42, 0);
  StateVector sa = sample_pure_state(2, a);
  StateVector sb = sample_pure_state(2, b);
  // Bit-identical, not merely close.
  for (int i = 0; i < 2; ++i) {
    CHECK(sa.amplitude(i).real() == sb.amplitude(i).real());
    CHECK(sa.amplitude(i).imag() == sb.amplitude(i).imag());
  }

  RandomStream rng(42, 23);
  for (int trial = 0; trial < 100; ++trial) {
    StateVector psi = sample_pure_state(5, rng);
    CHECK(std::abs(psi.amplitudes().norm() - 1.0) <= 1e-12);
  }

  StateVector single = sample_pure_state(1, rng);
  CHECK(std::abs(std::abs(single.amplitude(0)) - 1.0) <= 1e-12);
}

TEST_CASE("mean overlap with a fixed basis vector is 1/D") {
  RandomStream rng(42, 24);
  const int n = 100000;
  const int dim = 4;
  RunningStats stats;
  for (int i = 0; i < n; ++i) {
    StateVector psi = sample_pure_state(dim, rng);
    stats.add(std::norm(psi.amplitude(0)));
  }
  // Var |<e|psi>|^2 = (D-1)/(D^2 (D+1)) under the uniform measure.
  double se = std::sqrt((dim - 1.0) / (dim * dim * (dim + 1.0)) / n);
  CHECK(std::abs(stats.mean() - 0.25) <= 3.0 * se);
}

TEST_CASE("angle to a fiducial follows the resolution-fraction CDF") {
  RandomStream rng(42, 25);
  const int n = 100000;
  const int dim = 3;
  StateVector fiducial = sample_pure_state(dim, rng);
  std::vector<double> angles(n);
  for (int i = 0; i < n; ++i) {
    angles[static_cast<std::size_t>(i)] = hilbert_angle(fiducial, sample_pure_state(dim, rng));
  }
  std::sort(angles.begin(), angles.end());
  auto cdf = [](double phi) { return std::pow(std::sin(phi), 4.0); };
  CHECK(ks_statistic(angles, cdf) <= ks_critical(n, 0.01));
}

TEST_CASE("sampled unitaries are unitary and their columns form a basis") {
  RandomStream rng(42, 26);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix u = sample_unitary(8, rng);
    Matrix defect = u.adjoint() * u - Matrix::Identity(8, 8);
    CHECK(defect.norm() <= 1e-9);
  }
  CHECK_NOTHROW(sample_basis(6, rng));

  Matrix tiny = sample_unitary(1, rng);
  CHECK(std::abs(std::abs(tiny(0, 0)) - 1.0) <= 1e-12);
}

TEST_CASE("first unitary column is distributed like a uniform state") {
  RandomStream rng(42, 27);
  const int n = 20000;
  const int dim = 3;
  StateVector e0 = MeasurementBasis::computational(dim).vector(0);
  std::vector<double> angles(n);
  for (int i = 0; i < n; ++i) {
    Matrix u = sample_unitary(dim, rng);
    angles[static_cast<std::size_t>(i)] = hilbert_angle(e0, StateVector::normalized(u.col(0)));
  }
  std::sort(angles.begin(), angles.end());
  auto cdf = [](double phi) { return std::pow(std::sin(phi), 4.0); };
  CHECK(ks_statistic(angles, cdf) <= ks_critical(n, 0.01));
}

TEST_CASE("the uniform state measure is unitarily invariant") {
  RandomStream rng(42, 28);
  Matrix v = sample_unitary(3, rng);
  const int n = 20000;
  StateVector e0 = MeasurementBasis::computational(3).vector(0);
  std::vector<double> angles(n);
  RunningStats overlap;
  for (int i = 0; i < n; ++i) {
    StateVector rotated{v * sample_pure_state(3, rng).amplitudes()};
    angles[static_cast<std::size_t>(i)] = hilbert_angle(e0, rotated);
    overlap.add(std::norm(rotated.amplitude(0)));
  }
  std::sort(angles.begin(), angles.end());
  auto cdf = [](double phi) { return std::pow(std::sin(phi), 4.0); };
  CHECK(ks_statistic(angles, cdf) <= ks_critical(n, 0.01));
  double se = std::sqrt(2.0 / (9.0 * 4.0) / n);
  CHECK(std::abs(overlap.mean() - 1.0 / 3.0) <= 3.0 * se);
}

TEST_CASE("sampling rejects invalid dimensions") {
  RandomStream rng(42, 29);
  CHECK_THROWS_AS(sample_pure_state(0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_unitary(0, rng), std::invalid_argument);
}

TEST_CASE("block grids partition the draw range") {
  CHECK(block_count(1) == 1);
  CHECK(block_count(63) == 63);
  CHECK(block_count(64) == 64);
  CHECK(block_count(1000000) == 64);
  CHECK_THROWS_AS(block_count(0), std::invalid_argument);

  for (long long n : {1LL, 7LL, 64LL, 100LL, 100001LL}) {
    int blocks = block_count(n);
    CHECK(block_offset(n, blocks, 0) == 0);
    CHECK(block_offset(n, blocks, blocks) == n);
    for (int b = 0; b < blocks; ++b) {
      CHECK(block_offset(n, blocks, b) < block_offset(n, blocks, b + 1));
    }
  }
}

TEST_CASE("run_blocks keeps results in block order under any worker count") {
  std::function<int(int)> square = [](int b) { return b * b; };
  std::vector<int> serial = run_blocks<int>(16, square);
  setenv("QINFO_THREADS", "8", 1);
  std::vector<int> threaded = run_blocks<int>(16, square);
  unsetenv("QINFO_THREADS");
  REQUIRE(serial.size() == 16);
  CHECK(serial == threaded);
  for (int b = 0; b < 16; ++b) CHECK(serial[static_cast<std::size_t>(b)] == b * b);
}

TEST_CASE("running stats merge independently of the split") {
  RandomStream rng(42, 30);
  std::vector<double> xs(1000);
  for (double& x : xs) x = rng.normal();

  RunningStats whole;
  for (double x : xs) whole.add(x);

  RunningStats left;
  RunningStats right;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    (i < 500 ? left : right).add(xs[i]);
  }
  left.merge(right);
  CHECK(left.n == whole.n);
  CHECK(left.mean() == doctest::Approx(whole.mean()).epsilon(1e-13));
  CHECK(left.stderr_mean() == doctest::Approx(whole.stderr_mean()).epsilon(1e-12));
  CHECK(whole.stderr_mean() > 0.0);
}

TEST_CASE("ks critical values follow the asymptotic formula") {
  CHECK(ks_critical(100000, 0.01) == doctest::Approx(1.6276 / std::sqrt(100000.0)).epsilon(1e-4));
  CHECK(ks_critical(400, 0.05) == doctest::Approx(1.3581 / std::sqrt(400.0)).epsilon(1e-4));

  // A sample drawn from the wrong distribution fails the test.
  RandomStream rng(42, 31);
  std::vector<double> unif(2000);
  for (double& u : unif) u = rng.uniform();
  std::sort(unif.begin(), unif.end());
  auto uniform_cdf = [](double x) { return x; };
  auto skewed_cdf = [](double x) { return x * x; };
  CHECK(ks_statistic(unif, uniform_cdf) <= ks_critical(unif.size(), 0.01));
  CHECK(ks_statistic(unif, skewed_cdf) > ks_critical(unif.size(), 0.01));
}
