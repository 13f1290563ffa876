#include "zrq/kernels.hpp"

namespace zrq::kernels::scalar {

void ramp_add(std::int64_t base, const std::int64_t* ramp, std::int64_t* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = base + ramp[i];
}

std::size_t merge_signs(const std::int64_t* dots, std::int8_t* signs, std::size_t len) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (signs[i] == 0) signs[i] = static_cast<std::int8_t>((dots[i] > 0) - (dots[i] < 0));
    zeros += signs[i] == 0;
  }
  return zeros;
}

}  // namespace zrq::kernels::scalar
