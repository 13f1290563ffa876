#include <cstdlib>
#include <cstring>

#include "zrq/error.hpp"
#include "zrq/kernels.hpp"

namespace zrq::kernels {

std::string_view name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool available(Backend b) {
  if (b == Backend::Scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active() {
  static const Backend chosen = [] {
    const char* forced = std::getenv("ZRQ_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Backend::Scalar;
    return available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
  }();
  return chosen;
}

void ramp_add(Backend b, std::int64_t base, std::span<const std::int64_t> ramp,
              std::span<std::int64_t> out) {
  if (out.size() < ramp.size()) fail(ErrorKind::DimensionMismatch, "ramp_add output too short");
  if (b == Backend::Avx2 && available(b))
    avx2::ramp_add(base, ramp.data(), out.data(), ramp.size());
  else
    scalar::ramp_add(base, ramp.data(), out.data(), ramp.size());
}

std::size_t merge_signs(Backend b, std::span<const std::int64_t> dots,
                        std::span<std::int8_t> signs) {
  if (signs.size() < dots.size()) fail(ErrorKind::DimensionMismatch, "merge_signs output too short");
  if (b == Backend::Avx2 && available(b))
    return avx2::merge_signs(dots.data(), signs.data(), dots.size());
  return scalar::merge_signs(dots.data(), signs.data(), dots.size());
}

}  // namespace zrq::kernels
