#pragma once

// Data-parallel inner loops of the fingerprint box sweep. Every kernel has
// a scalar reference implementation and an AVX2 variant; the variant is
// chosen once at runtime (CPU support, overridable with ZRQ_SIMD=scalar)
// and the test suite checks the two agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace zrq::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view name(Backend b);
bool available(Backend b);
/// The backend used by the dispatching entry points below.
Backend active();

/// out[i] = base + ramp[i]. Caller guarantees no overflow.
void ramp_add(Backend b, std::int64_t base, std::span<const std::int64_t> ramp,
              std::span<std::int64_t> out);

/// Lexicographic refinement step: every lane whose sign is still 0 takes
/// sgn(dots[i]). Returns the number of lanes that remain 0.
std::size_t merge_signs(Backend b, std::span<const std::int64_t> dots,
                        std::span<std::int8_t> signs);

inline void ramp_add(std::int64_t base, std::span<const std::int64_t> ramp,
                     std::span<std::int64_t> out) {
  ramp_add(active(), base, ramp, out);
}

inline std::size_t merge_signs(std::span<const std::int64_t> dots, std::span<std::int8_t> signs) {
  return merge_signs(active(), dots, signs);
}

namespace scalar {
void ramp_add(std::int64_t base, const std::int64_t* ramp, std::int64_t* out, std::size_t len);
std::size_t merge_signs(const std::int64_t* dots, std::int8_t* signs, std::size_t len);
}  // namespace scalar

namespace avx2 {
void ramp_add(std::int64_t base, const std::int64_t* ramp, std::int64_t* out, std::size_t len);
std::size_t merge_signs(const std::int64_t* dots, std::int8_t* signs, std::size_t len);
}  // namespace avx2

}  // namespace zrq::kernels
