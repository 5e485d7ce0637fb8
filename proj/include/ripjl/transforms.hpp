#pragma once

#include "ripjl/common.hpp"

namespace ripjl {

// Unnormalized Walsh-Hadamard transform H*x, Sylvester ordering, O(N log N).
// H has entries (-1)^<bits(j),bits(l)> and H*H = N*I.
Vector fwht(Vector x);

// O(N^2) reference multiply by the same Hadamard matrix.
Vector naive_hadamard_multiply(const Vector& x);

// Entry H[row,col] of the Sylvester-Hadamard matrix (0-based indices).
inline double hadamard_entry(Index row, Index col) {
  return (__builtin_popcountll(static_cast<unsigned long long>(row & col)) & 1)
             ? -1.0
             : 1.0;
}

// Unnormalized DFT, X_f = sum_l x_l exp(-2*pi*i*f*l/N). Radix-2 butterfly for
// power-of-2 sizes, quadratic sum otherwise.
ComplexVector dft(const Vector& x);
ComplexVector dft(const ComplexVector& x);

// Quadratic reference path, any N.
ComplexVector naive_dft(const Vector& x);

// Conjugate transform divided by N; exact round-trip with dft.
ComplexVector idft(const ComplexVector& x);

// Circular convolution out_j = sum_l c_{(j-l) mod N} x_l via the Fourier
// domain, plus the direct quadratic sum as reference.
Vector circular_convolve(const Vector& c, const Vector& x);
Vector circular_convolve_direct(const Vector& c, const Vector& x);

}  // namespace ripjl
