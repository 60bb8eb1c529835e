// Copyright 2026 The Duet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUET_KERNELS_KERNELS_HPP_
#define DUET_KERNELS_KERNELS_HPP_

#include <cstddef>

// Arithmetic inner loops behind the tensor engine.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The implementation is selected once at runtime from CPUID (or
// forced via set_isa / the DUET_ISA environment variable). Scalar and SIMD
// variants are equivalence-tested against each other in tests/test_kernels.

namespace duet::kernels {

enum class Isa { kScalar, kAvx2 };

// Currently active implementation.
Isa active_isa();

// Forces an implementation. Returns false (and leaves the selection
// unchanged) if the requested ISA is not supported by this CPU.
bool set_isa(Isa isa);

const char* isa_name(Isa isa);

// True if the CPU supports the given ISA.
bool isa_supported(Isa isa);

// C = alpha * op(A) * op(B) + beta * C, row-major.
// op(A) is m x k, op(B) is k x n, C is m x n with leading dimension ldc.
// lda/ldb are the leading dimensions of the stored (untransposed) matrices.
template <typename T>
void gemm(bool trans_a, bool trans_b, int m, int n, int k, T alpha, const T* a,
          int lda, const T* b, int ldb, T beta, T* c, int ldc);

template <typename T>
void add(const T* a, const T* b, T* y, size_t n);  // y = a + b

template <typename T>
void mul(const T* a, const T* b, T* y, size_t n);  // y = a * b

template <typename T>
void muladd(const T* a, const T* b, T* y, size_t n);  // y += a * b

template <typename T>
void axpy(T alpha, const T* x, T* y, size_t n);  // y += alpha * x

template <typename T>
void scale(const T* x, T alpha, T* y, size_t n);  // y = alpha * x

template <typename T>
void relu(const T* x, T* y, size_t n);  // y = max(x, 0)

// dx += dy where x > 0
template <typename T>
void relu_backward(const T* x, const T* dy, T* dx, size_t n);

template <typename T>
T sum(const T* x, size_t n);

template <typename T>
T dot(const T* a, const T* b, size_t n);

// Fused Adam update with bias correction:
//   m = b1*m + (1-b1)*g;  v = b2*v + (1-b2)*g^2
//   p -= lr * (m/bc1) / (sqrt(v/bc2) + eps)
// where bc1 = 1-b1^t and bc2 = 1-b2^t are passed in precomputed.
template <typename T>
void adam_update(T* p, const T* g, T* m, T* v, size_t n, T lr, T beta1,
                 T beta2, T eps, T bias_c1, T bias_c2);

}  // namespace duet::kernels

#endif  // DUET_KERNELS_KERNELS_HPP_
