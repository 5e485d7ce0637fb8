#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ripjl/rng.hpp"
#include "ripjl/transforms.hpp"

using namespace ripjl;

TEST_CASE("fwht of a delta is the all-ones column") {
  Vector x = Vector::Zero(4);
  x[0] = 1.0;
  const Vector out = fwht(x);
  for (Index i = 0; i < 4; ++i) CHECK(out[i] == 1.0);
}

TEST_CASE("fwht applied twice scales by N") {
  for (Index n : {1, 2, 8, 64, 512}) {
    const Vector x = rng::gaussian_vector(n, rng::derive(3, "fwht", n));
    const Vector twice = fwht(fwht(x));
    CHECK((twice - static_cast<double>(n) * x).lpNorm<Eigen::Infinity>() <
          1e-10 * std::max(1.0, x.lpNorm<Eigen::Infinity>() * n));
  }
}

TEST_CASE("fwht rejects non-power-of-two lengths") {
  CHECK_THROWS_AS(fwht(Vector::Zero(3)), ParameterError);
  CHECK_THROWS_AS(fwht(Vector(0)), ParameterError);
}

TEST_CASE("fwht matches the quadratic Hadamard multiply") {
  const Vector x = rng::gaussian_vector(256, rng::derive(3, "fwht-oracle"));
  const Vector fast = fwht(x);
  const Vector slow = naive_hadamard_multiply(x);
  CHECK((fast - slow).lpNorm<Eigen::Infinity>() < 1e-10);
}

TEST_CASE("small Hadamard multiplies match the closed forms") {
  Vector x(2);
  x << 3.0, -1.0;
  const Vector out = naive_hadamard_multiply(x);
  CHECK(out[0] == 2.0);   // a + b
  CHECK(out[1] == 4.0);   // a - b

  Vector one(1);
  one << 5.0;
  CHECK(naive_hadamard_multiply(one)[0] == 5.0);
}

TEST_CASE("Hadamard rows are orthogonal with squared norm N") {
  const Index n = 4;
  for (Index r = 0; r < n; ++r)
    for (Index q = 0; q < n; ++q) {
      double dot = 0.0;
      for (Index c = 0; c < n; ++c)
        dot += hadamard_entry(r, c) * hadamard_entry(q, c);
      CHECK(dot == (r == q ? 4.0 : 0.0));
    }
}

TEST_CASE("dft of a delta is constant") {
  Vector x = Vector::Zero(8);
  x[0] = 1.0;
  const ComplexVector out = dft(x);
  for (Index f = 0; f < 8; ++f) {
    CHECK(out[f].real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(out[f].imag() == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("dft of the constant vector is a delta") {
  const ComplexVector out = dft(Vector::Ones(4));
  CHECK(out[0].real() == doctest::Approx(4.0).epsilon(1e-14));
  for (Index f = 1; f < 4; ++f) CHECK(std::abs(out[f]) < 1e-12);
}

TEST_CASE("dft satisfies the unnormalized Parseval identity") {
  for (Index n : {16, 37, 128}) {
    const Vector x = rng::gaussian_vector(n, rng::derive(5, "parseval", n));
    const ComplexVector spectrum = dft(x);
    double energy = 0.0;
    for (Index f = 0; f < n; ++f) energy += std::norm(spectrum[f]);
    CHECK(energy == doctest::Approx(n * x.squaredNorm()).epsilon(1e-10));
  }
}

TEST_CASE("fast and quadratic dft paths agree") {
  for (Index n : {2, 8, 64, 1024}) {
    const Vector x = rng::gaussian_vector(n, rng::derive(5, "dft", n));
    const ComplexVector fast = dft(x);
    const ComplexVector slow = naive_dft(x);
    CHECK((fast - slow).lpNorm<Eigen::Infinity>() < 1e-9);
  }
}

TEST_CASE("dft handles non-power-of-two sizes through the quadratic path") {
  // closed form for N=3 spelled out with std::polar
  Vector x(3);
  x << 1.0, 2.0, -1.0;
  const ComplexVector out = dft(x);
  for (Index f = 0; f < 3; ++f) {
    std::complex<double> expected(0.0, 0.0);
    for (Index l = 0; l < 3; ++l)
      expected += x[l] * std::polar(1.0, -2.0 * std::numbers::pi *
                                             static_cast<double>(f * l) / 3.0);
    CHECK(std::abs(out[f] - expected) < 1e-12);
  }
}

TEST_CASE("dft rejects empty input") {
  CHECK_THROWS_AS(dft(Vector(0)), DimensionError);
  CHECK_THROWS_AS(naive_dft(Vector(0)), DimensionError);
}

TEST_CASE("idft inverts dft") {
  for (Index n : {7, 32}) {
    const Vector x = rng::gaussian_vector(n, rng::derive(5, "idft", n));
    const ComplexVector back = idft(dft(x));
    CHECK((back.real() - x).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(back.imag().lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("convolving with a delta is the identity") {
  Vector c = Vector::Zero(4);
  c[0] = 1.0;
  Vector x(4);
  x << 2.0, -3.0, 5.0, 7.0;
  CHECK((circular_convolve(c, x) - x).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("a shifted delta rotates the input") {
  Vector c = Vector::Zero(4);
  c[1] = 1.0;
  Vector x(4);
  x << 1.0, 2.0, 3.0, 4.0;  // (a,b,c,d) -> (d,a,b,c)
  const Vector out = circular_convolve(c, x);
  CHECK(out[0] == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(out[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(out[2] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(out[3] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("fast convolution matches the direct sum") {
  for (Index n : {12, 128}) {
    const Vector c = rng::gaussian_vector(n, rng::derive(5, "conv-c", n));
    const Vector x = rng::gaussian_vector(n, rng::derive(5, "conv-x", n));
    CHECK((circular_convolve(c, x) - circular_convolve_direct(c, x))
              .lpNorm<Eigen::Infinity>() < 1e-10);
  }
}

TEST_CASE("convolution is commutative") {
  const Vector c = rng::gaussian_vector(64, rng::derive(5, "comm-c"));
  const Vector x = rng::gaussian_vector(64, rng::derive(5, "comm-x"));
  CHECK((circular_convolve(c, x) - circular_convolve(x, c))
            .lpNorm<Eigen::Infinity>() < 1e-10);
}

TEST_CASE("convolution rejects length mismatch") {
  CHECK_THROWS_AS(circular_convolve(Vector::Zero(4), Vector::Zero(5)),
                  DimensionError);
  CHECK_THROWS_AS(circular_convolve_direct(Vector::Zero(4), Vector::Zero(5)),
                  DimensionError);
}
