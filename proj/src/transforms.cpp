#include "ripjl/transforms.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace ripjl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// In-place iterative radix-2 Cooley-Tukey, bit-reversal first.
void fft_pow2(ComplexVector& a) {
  const Index n = a.size();
  for (Index i = 1, j = 0; i < n; ++i) {
    Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (Index len = 2; len <= n; len <<= 1) {
    const double ang = -kTwoPi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (Index i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (Index k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

ComplexVector quadratic_dft(const ComplexVector& x) {
  const Index n = x.size();
  ComplexVector out(n);
  for (Index f = 0; f < n; ++f) {
    std::complex<double> acc(0.0, 0.0);
    for (Index l = 0; l < n; ++l) {
      const double ang = -kTwoPi * static_cast<double>(f) *
                         static_cast<double>(l) / static_cast<double>(n);
      acc += x[l] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[f] = acc;
  }
  return out;
}

}  // namespace

Vector fwht(Vector x) {
  const Index n = x.size();
  if (!is_power_of_two(n))
    throw ParameterError("fwht: length must be a power of 2");
  for (Index h = 1; h < n; h <<= 1) {
    for (Index i = 0; i < n; i += h << 1) {
      for (Index j = i; j < i + h; ++j) {
        const double y = x[j + h];
        x[j + h] = x[j] - y;
        x[j] += y;
      }
    }
  }
  return x;
}

Vector naive_hadamard_multiply(const Vector& x) {
  const Index n = x.size();
  if (!is_power_of_two(n))
    throw ParameterError("naive_hadamard_multiply: length must be a power of 2");
  Vector out(n);
  for (Index r = 0; r < n; ++r) {
    double acc = 0.0;
    for (Index c = 0; c < n; ++c) acc += hadamard_entry(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

ComplexVector dft(const ComplexVector& x) {
  const Index n = x.size();
  if (n == 0) throw DimensionError("dft: empty input");
  if (!is_power_of_two(n)) return quadratic_dft(x);
  ComplexVector a = x;
  fft_pow2(a);
  return a;
}

ComplexVector dft(const Vector& x) {
  if (x.size() == 0) throw DimensionError("dft: empty input");
  return dft(ComplexVector(x.cast<std::complex<double>>()));
}

ComplexVector naive_dft(const Vector& x) {
  if (x.size() == 0) throw DimensionError("naive_dft: empty input");
  return quadratic_dft(x.cast<std::complex<double>>());
}

ComplexVector idft(const ComplexVector& x) {
  if (x.size() == 0) throw DimensionError("idft: empty input");
  ComplexVector conj = x.conjugate();
  ComplexVector transformed = dft(conj);
  return transformed.conjugate() / static_cast<double>(x.size());
}

Vector circular_convolve(const Vector& c, const Vector& x) {
  if (c.size() != x.size())
    throw DimensionError("circular_convolve: length mismatch");
  const ComplexVector cf = dft(c);
  const ComplexVector xf = dft(x);
  const ComplexVector prod = cf.cwiseProduct(xf);
  return idft(prod).real();
}

Vector circular_convolve_direct(const Vector& c, const Vector& x) {
  if (c.size() != x.size())
    throw DimensionError("circular_convolve_direct: length mismatch");
  const Index n = c.size();
  Vector out = Vector::Zero(n);
  for (Index j = 0; j < n; ++j) {
    double acc = 0.0;
    for (Index l = 0; l < n; ++l) {
      Index idx = (j - l) % n;
      if (idx < 0) idx += n;
      acc += c[idx] * x[l];
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace ripjl
