#include "zrq/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <cstring>

#define ZRQ_AVX2_TARGET __attribute__((target("avx2")))

namespace zrq::kernels::avx2 {

ZRQ_AVX2_TARGET
void ramp_add(std::int64_t base, const std::int64_t* ramp, std::int64_t* out, std::size_t len) {
  const __m256i vbase = _mm256_set1_epi64x(base);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ramp + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(vbase, r));
  }
  for (; i < len; ++i) out[i] = base + ramp[i];
}

ZRQ_AVX2_TARGET
std::size_t merge_signs(const std::int64_t* dots, std::int8_t* signs, std::size_t len) {
  const __m256i zero = _mm256_setzero_si256();
  // Low byte of each 64-bit lane to the bottom of its 128-bit half.
  const __m256i pick = _mm256_setr_epi8(0, 8, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
                                        -1, 0, 8, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
                                        -1, -1);
  std::size_t zeros = 0;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    std::int32_t packed;
    std::memcpy(&packed, signs + i, 4);
    if ((packed & 0xff) && (packed & 0xff00) && (packed & 0xff0000) && (packed & 0xff000000))
      continue;
    const __m256i cur = _mm256_cvtepi8_epi64(_mm_cvtsi32_si128(packed));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dots + i));
    const __m256i gt = _mm256_cmpgt_epi64(d, zero);
    const __m256i lt = _mm256_cmpgt_epi64(zero, d);
    const __m256i sgn = _mm256_sub_epi64(lt, gt);
    const __m256i undecided = _mm256_cmpeq_epi64(cur, zero);
    const __m256i merged = _mm256_blendv_epi8(cur, sgn, undecided);
    const __m256i bytes = _mm256_shuffle_epi8(merged, pick);
    const std::uint32_t lo = static_cast<std::uint16_t>(_mm256_extract_epi16(bytes, 0));
    const std::uint32_t hi = static_cast<std::uint16_t>(_mm256_extract_epi16(bytes, 8));
    const std::uint32_t out = lo | (hi << 16);
    std::memcpy(signs + i, &out, 4);
    const __m256i still = _mm256_cmpeq_epi64(merged, zero);
    zeros += static_cast<std::size_t>(
        __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(still)))));
  }
  for (; i < len; ++i) {
    if (signs[i] == 0) signs[i] = static_cast<std::int8_t>((dots[i] > 0) - (dots[i] < 0));
    zeros += signs[i] == 0;
  }
  return zeros;
}

}  // namespace zrq::kernels::avx2

#else

namespace zrq::kernels::avx2 {

void ramp_add(std::int64_t base, const std::int64_t* ramp, std::int64_t* out, std::size_t len) {
  scalar::ramp_add(base, ramp, out, len);
}

std::size_t merge_signs(const std::int64_t* dots, std::int8_t* signs, std::size_t len) {
  return scalar::merge_signs(dots, signs, len);
}

}  // namespace zrq::kernels::avx2

#endif
