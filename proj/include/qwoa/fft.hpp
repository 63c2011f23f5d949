#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qwoa {

using cdouble = std::complex<double>;

enum class FourierDirection { Forward, Inverse };

// Unnormalised DFT of arbitrary length M, in place:
//   a_j <- sum_k a_k * exp(sign * 2*pi*i * j*k / M)
// Naive kernel below M = 64, iterative radix-2 for powers of two, Bluestein
// (chirp-z) otherwise.  Max-norm error stays well below 1e-12 of the exact
// kernel at the sizes this library materialises.
void dft_unnormalized(std::vector<cdouble>& a, int sign);

// Unitary DFT with kernel omega^{jk}/sqrt(M), omega = exp(2*pi*i/M).
// Forward uses the +i kernel; Inverse composes with Forward to the identity.
void dft(std::vector<cdouble>& a, FourierDirection direction);

} // namespace qwoa
