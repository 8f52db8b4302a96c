#ifndef GROUPOIDLAB_TESTS_EIG_ORACLE_H_
#define GROUPOIDLAB_TESTS_EIG_ORACLE_H_

// Independent eigenvalue oracle: bisection on the eigenvalue-counting
// function computed from the inertia of A - xI (Sylvester's law via an
// LDL^H sweep). Shares no code with the Jacobi solver under test.

#include <cmath>
#include <random>
#include <vector>

#include <groupoidlab/spectra.hpp>

namespace oracle {

// number of eigenvalues of the Hermitian matrix strictly below x, or -1
// when the unpivoted sweep hits a (numerically) singular leading minor
inline int count_below(gl::CMatrix m, double x) {
  int const n = m.n;
  for (int i = 0; i < n; ++i) {
    m.at(i, i) -= x;
  }
  int negatives = 0;
  for (int k = 0; k < n; ++k) {
    double d = m.at(k, k).real();
    if (std::abs(d) < 1e-14) {
      return -1;
    }
    if (d < 0.0) {
      ++negatives;
    }
    for (int i = k + 1; i < n; ++i) {
      gl::Complex factor = m.at(i, k) / d;
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) -= factor * std::conj(m.at(j, k));
      }
    }
  }
  return negatives;
}

inline std::vector<double> eigenvalues(gl::CMatrix const& m) {
  int const n = m.n;
  double radius = 0.0;  // Gershgorin bound
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      row += std::abs(m.at(i, j));
    }
    radius = std::max(radius, row);
  }
  radius += 1.0;
  auto robust_count = [&](double x) {
    int c = count_below(m, x);
    for (double nudge = 1e-12; c < 0; nudge *= 16.0) {
      c = count_below(m, x + nudge * radius);
    }
    return c;
  };
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    double lo = -radius;
    double hi = radius;
    for (int step = 0; step < 70; ++step) {
      double mid = 0.5 * (lo + hi);
      if (robust_count(mid) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

inline gl::CMatrix random_hermitian(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  gl::CMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = gl::Complex(entry(rng), 0.0);
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = gl::Complex(entry(rng), entry(rng));
      m.at(j, i) = std::conj(m.at(i, j));
    }
  }
  return m;
}

}  // namespace oracle

#endif  // GROUPOIDLAB_TESTS_EIG_ORACLE_H_
