#include "e6char/kernels.hpp"

#include <atomic>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace e6char::kernels {

namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(__x86_64__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

#if defined(__x86_64__)

__attribute__((target("avx2"))) void compose_u8_avx2(const std::uint8_t* a,
                                                     const std::uint8_t* b,
                                                     std::uint8_t* out,
                                                     std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    // widen 8 indices to 32 bits, gather one word per index, keep low bytes
    __m128i idx8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(b + i));
    __m256i idx = _mm256_cvtepu8_epi32(idx8);
    __m256i words = _mm256_i32gather_epi32(reinterpret_cast<const int*>(a), idx, 1);
    // pick byte 0 of every 32-bit lane (positions 0,4,8,12 per 128-bit half)
    const __m256i pick = _mm256_setr_epi8(0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1,
                                          -1, -1, -1, -1, -1, 0, 4, 8, 12, -1, -1,
                                          -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
    __m256i packed = _mm256_shuffle_epi8(words, pick);
    std::uint32_t lo = static_cast<std::uint32_t>(_mm256_extract_epi32(packed, 0));
    std::uint32_t hi = static_cast<std::uint32_t>(_mm256_extract_epi32(packed, 4));
    std::uint64_t both = static_cast<std::uint64_t>(lo) | (static_cast<std::uint64_t>(hi) << 32);
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<std::uint8_t>(both >> (8 * k));
  }
  for (; i < n; ++i) out[i] = a[b[i]];
}

__attribute__((target("avx2"))) std::size_t count_ge_u8_avx2(const std::uint8_t* v,
                                                             std::size_t n,
                                                             std::uint8_t threshold) {
  // unsigned >= t is done as signed compare after biasing by 0x80
  const __m256i bias = _mm256_set1_epi8(static_cast<char>(0x80));
  const __m256i lim = _mm256_set1_epi8(static_cast<char>(threshold ^ 0x80));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256i ge = _mm256_cmpgt_epi8(_mm256_xor_si256(x, bias), lim);
    __m256i eq = _mm256_cmpeq_epi8(_mm256_xor_si256(x, bias), lim);
    unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_or_si256(ge, eq)));
    count += static_cast<std::size_t>(__builtin_popcount(mask));
  }
  for (; i < n; ++i) count += (v[i] >= threshold) ? 1 : 0;
  return count;
}

#endif  // __x86_64__

}  // namespace

void compose_u8_scalar(const std::uint8_t* a, const std::uint8_t* b,
                       std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[b[i]];
}

std::size_t count_ge_u8_scalar(const std::uint8_t* v, std::size_t n,
                               std::uint8_t threshold) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += (v[i] >= threshold) ? 1 : 0;
  return count;
}

void set_force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

bool avx2_active() {
  return cpu_has_avx2() && !g_force_scalar.load(std::memory_order_relaxed);
}

void compose_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t n) {
#if defined(__x86_64__)
  if (avx2_active()) {
    compose_u8_avx2(a, b, out, n);
    return;
  }
#endif
  compose_u8_scalar(a, b, out, n);
}

std::size_t count_ge_u8(const std::uint8_t* v, std::size_t n, std::uint8_t threshold) {
#if defined(__x86_64__)
  if (avx2_active()) return count_ge_u8_avx2(v, n, threshold);
#endif
  return count_ge_u8_scalar(v, n, threshold);
}

}  // namespace e6char::kernels
