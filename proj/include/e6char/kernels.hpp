#pragma once

#include <cstddef>
#include <cstdint>

// Byte-array kernels used in the permutation-group hot loops.  Each kernel has
// a scalar reference implementation and an AVX2 variant; the public entry
// points dispatch at runtime on CPU support.  Equivalence of the two paths is
// covered by property tests.

namespace e6char::kernels {

// out[i] = a[b[i]] for i < n.  Entries of b must be < n.
// The AVX2 path gathers 32-bit words, so `a` must stay readable through
// a[n + 2] (permutation storage pads for this; see Perm in weyl.hpp).
void compose_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t n);

// #{ i < n : v[i] >= threshold }
std::size_t count_ge_u8(const std::uint8_t* v, std::size_t n, std::uint8_t threshold);

// Reference implementations, exposed so tests can compare against the
// dispatched path.
void compose_u8_scalar(const std::uint8_t* a, const std::uint8_t* b,
                       std::uint8_t* out, std::size_t n);
std::size_t count_ge_u8_scalar(const std::uint8_t* v, std::size_t n,
                               std::uint8_t threshold);

// Force the scalar path regardless of CPU support (for tests and debugging).
void set_force_scalar(bool on);

// True when the dispatched entry points will take the AVX2 path.
bool avx2_active();

}  // namespace e6char::kernels
