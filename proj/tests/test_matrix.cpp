// Copyright 2026 The Triality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "triality/bloch.hpp"
#include "triality/error.hpp"
#include "triality/matrix.hpp"

using triality::Complex;
using triality::ComplexMatrix;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> n;
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix a = random_matrix(rng, n, n);
  return Complex(0.5) * (a + triality::adjoint(a));
}

// Product with the inner index summed from the top down.
ComplexMatrix reversed_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t j = b.cols(); j-- > 0;)
    for (std::size_t i = a.rows(); i-- > 0;) {
      Complex s = 0.0;
      for (std::size_t k = a.cols(); k-- > 0;) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

}  // namespace

TEST_CASE("matrix construction validates shape and entries", "[matrix]") {
  CHECK_THROWS_AS(ComplexMatrix(0, 2), triality::DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), triality::DimensionError);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), triality::DimensionError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(nan, 0.0)}), triality::InvalidStateError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0.0, INFINITY)}), triality::InvalidStateError);

  const ComplexMatrix d = ComplexMatrix::diagonal({1.0, 2.0, 3.0});
  CHECK(d.trace() == Complex(6.0));
  CHECK(d(0, 1) == Complex(0.0));
  CHECK(ComplexMatrix::identity(2) == (ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}}));
}

TEST_CASE("mat_mul", "[matrix]") {
  std::mt19937_64 rng(7);

  SECTION("identity leaves a matrix unchanged") {
    const ComplexMatrix a = random_matrix(rng, 2, 2);
    CHECK(triality::max_abs_diff(triality::mat_mul(ComplexMatrix::identity(2), a), a) == 0.0);
  }
  SECTION("sigma_x squared") {
    const ComplexMatrix& sx = triality::pauli_matrices()[0];
    CHECK(triality::mat_mul(sx, sx) == ComplexMatrix::identity(2));
  }
  SECTION("reversed summation order agrees") {
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexMatrix a = random_matrix(rng, 3, 3);
      const ComplexMatrix b = random_matrix(rng, 3, 3);
      CHECK(triality::max_abs_diff(triality::mat_mul(a, b), reversed_product(a, b)) <= 1e-13);
    }
  }
  SECTION("rectangular product against Eigen") {
    const ComplexMatrix a = random_matrix(rng, 2, 4);
    const ComplexMatrix b = random_matrix(rng, 4, 3);
    const oracle::Mat ref = oracle::to_eigen(a) * oracle::to_eigen(b);
    CHECK(oracle::max_abs(oracle::to_eigen(triality::mat_mul(a, b)) - ref) <= 1e-13);
  }
  SECTION("shape mismatch") {
    CHECK_THROWS_AS(triality::mat_mul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)),
                    triality::DimensionError);
  }
}

TEST_CASE("adjoint", "[matrix]") {
  const ComplexMatrix d = ComplexMatrix::diagonal({0.5, -2.0});
  CHECK(triality::adjoint(d) == d);

  const Complex i(0.0, 1.0);
  const ComplexMatrix a{{0.0, i}, {0.0, 0.0}};
  const ComplexMatrix expected{{0.0, 0.0}, {-i, 0.0}};
  CHECK(triality::adjoint(a) == expected);

  std::mt19937_64 rng(11);
  const ComplexMatrix r = random_matrix(rng, 3, 2);
  CHECK(triality::adjoint(r).rows() == 2);
  CHECK(triality::adjoint(triality::adjoint(r)) == r);
}

TEST_CASE("hadamard and arithmetic", "[matrix]") {
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const ComplexMatrix b{{2.0, 0.5}, {0.0, -1.0}};
  const ComplexMatrix expected{{2.0, 1.0}, {0.0, -4.0}};
  CHECK(triality::hadamard(a, b) == expected);
  CHECK_THROWS_AS(triality::hadamard(a, ComplexMatrix(2, 3)), triality::DimensionError);
  CHECK((a + b - b) == a);
  CHECK(triality::max_abs_diff(Complex(2.0) * a, a + a) == 0.0);
  CHECK_THROWS_AS(triality::hermiticity_defect(ComplexMatrix(2, 3)), triality::DimensionError);
}

TEST_CASE("psd_min_eigenvalue examples", "[matrix]") {
  CHECK_THAT(triality::psd_min_eigenvalue(Complex(1.0 / 3.0) * ComplexMatrix::identity(3)),
             WithinAbs(1.0 / 3.0, 1e-14));
  CHECK_THAT(triality::psd_min_eigenvalue(ComplexMatrix::diagonal({1.0, 0.0})),
             WithinAbs(0.0, 1e-15));
  CHECK_THAT(triality::psd_min_eigenvalue(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}),
             WithinAbs(0.0, 1e-15));
  CHECK_THAT(triality::psd_min_eigenvalue(ComplexMatrix{{1.0 / 3, 1.0 / 3, 1.0 / 3},
                                                        {1.0 / 3, 1.0 / 3, 1.0 / 3},
                                                        {1.0 / 3, 1.0 / 3, 1.0 / 3}}),
             WithinAbs(0.0, 1e-14));
}

TEST_CASE("psd_min_eigenvalue rejects non-Hermitian input", "[matrix]") {
  CHECK_THROWS_AS(triality::psd_min_eigenvalue(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}),
                  triality::InvalidStateError);
  CHECK_THROWS_AS(triality::psd_min_eigenvalue(
                      ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, 1.0, Complex(0.0, 1.0)},
                                    {0.0, Complex(0.0, 1.0), 1.0}}),
                  triality::InvalidStateError);
  CHECK_THROWS_AS(triality::psd_min_eigenvalue(ComplexMatrix(2, 3)), triality::DimensionError);
}

TEST_CASE("hermitian_eigenvalues agree with Eigen", "[matrix][property]") {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      const ComplexMatrix h = random_hermitian(rng, n);
      const std::vector<double> ev = triality::hermitian_eigenvalues(h);
      Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::to_eigen(h), Eigen::EigenvaluesOnly);
      REQUIRE(ev.size() == n);
      CHECK(std::is_sorted(ev.begin(), ev.end()));
      for (std::size_t k = 0; k < n; ++k) CHECK_THAT(ev[k], WithinAbs(es.eigenvalues()(k), 1e-11));
    }
  }
}

TEST_CASE("min eigenvalue of degenerate spectra", "[matrix][property]") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 500; ++trial) {
    // U diag(0, 0, x) U^dagger with a random unitary from QR.
    oracle::Mat g(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) g(i, j) = oracle::cd(n(rng), n(rng));
    const oracle::Mat u = Eigen::HouseholderQR<oracle::Mat>(g).householderQ();
    oracle::Mat d = oracle::Mat::Zero(3, 3);
    d(2, 2) = 1.0;
    if (trial % 2) d(1, 1) = 1.0;
    oracle::Mat a = u * d * u.adjoint();
    a = 0.5 * (a + a.adjoint()).eval();
    CHECK_THAT(triality::psd_min_eigenvalue(oracle::from_eigen(a)),
               WithinAbs(oracle::min_eigenvalue(a), 1e-12));
  }
}
