#include <cstdlib>

#include "zrq/error.hpp"
#include "zrq/kernels.hpp"
#include "zrq/topology.hpp"

namespace zrq {
namespace {

constexpr std::size_t kMaxBoxPoints = std::size_t{1} << 31;

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kMaxBoxPoints / base) fail(ErrorKind::RangeError, "fingerprint box too large");
    r *= base;
  }
  return r;
}

// Every dot product over G_k fits in an int64 lane.
bool sweep_fits(const Preorder& p, std::int64_t k) {
  const __int128 limit = static_cast<__int128>(1) << 62;
  for (const auto& row : p.integer_rows()) {
    if (!row.has_small) return false;
    for (const auto& layer : row.small) {
      __int128 bound = 0;
      for (auto x : layer) bound += static_cast<__int128>(x < 0 ? -x : x) * k;
      if (bound >= limit) return false;
    }
  }
  return p.field()->degree() <= 16;
}

}  // namespace

Fingerprint::Fingerprint(std::size_t n, std::int64_t level, std::vector<std::int8_t> half)
    : n_(n), level_(level), half_(std::move(half)) {
  if (half_.size() != half_box_size(n, level))
    fail(ErrorKind::DimensionMismatch, "fingerprint size does not match its box");
}

std::size_t half_box_size(std::size_t n, std::int64_t k) {
  if (k < 0) fail(ErrorKind::RangeError, "negative fingerprint level");
  return (ipow(static_cast<std::size_t>(2 * k + 1), n) - 1) / 2;
}

SignClass Fingerprint::at(std::span<const std::int64_t> u) const {
  if (u.size() != n_) fail(ErrorKind::DimensionMismatch, "point length differs from n");
  const std::int64_t side = 2 * level_ + 1;
  std::int64_t idx = 0;
  for (auto x : u) {
    if (x < -level_ || x > level_) fail(ErrorKind::RangeError, "point outside the fingerprint box");
    idx = idx * side + (x + level_);
  }
  const auto center = static_cast<std::int64_t>(half_.size());
  if (idx == center) return SignClass::Zero;
  if (idx > center) return static_cast<SignClass>(half_[static_cast<std::size_t>(idx - center - 1)]);
  return negate(static_cast<SignClass>(half_[static_cast<std::size_t>(center - 1 - idx)]));
}

IntVector Fingerprint::point(std::size_t i) const {
  const std::int64_t side = 2 * level_ + 1;
  auto idx = static_cast<std::int64_t>(half_.size() + 1 + i);
  IntVector u(n_);
  for (std::size_t j = n_; j-- > 0;) {
    u[j] = idx % side - level_;
    idx /= side;
  }
  return u;
}

Fingerprint Fingerprint::restricted(std::int64_t level) const {
  if (level > level_) fail(ErrorKind::RangeError, "cannot restrict to a larger box");
  std::vector<std::int8_t> out(half_box_size(n_, level));
  const std::int64_t side = 2 * level + 1;
  const auto center = static_cast<std::int64_t>(out.size());
  IntVector u(n_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto idx = center + 1 + static_cast<std::int64_t>(i);
    for (std::size_t j = n_; j-- > 0;) {
      u[j] = idx % side - level;
      idx /= side;
    }
    out[i] = static_cast<std::int8_t>(at(u));
  }
  return Fingerprint(n_, level, std::move(out));
}

Fingerprint fingerprint_reference(const Preorder& p, std::int64_t k) {
  std::vector<std::int8_t> half(half_box_size(p.n(), k));
  const std::int64_t side = 2 * k + 1;
  const auto center = static_cast<std::int64_t>(half.size());
  IntVector u(p.n());
  for (std::size_t i = 0; i < half.size(); ++i) {
    auto idx = center + 1 + static_cast<std::int64_t>(i);
    for (std::size_t j = p.n(); j-- > 0;) {
      u[j] = idx % side - k;
      idx /= side;
    }
    half[i] = static_cast<std::int8_t>(p.sign_of(u));
  }
  return Fingerprint(p.n(), k, std::move(half));
}

// Sweeps the box line by line along the last coordinate: each row layer is
// base(prefix) + t * R[n-1], produced by ramp_add, and merge_signs folds the
// rows in lexicographic order.
Fingerprint fingerprint(const Preorder& p, std::int64_t k) {
  const std::size_t n = p.n();
  std::vector<std::int8_t> half(half_box_size(n, k));
  if (n == 0 || half.empty() || p.rank() == 0) return Fingerprint(n, k, std::move(half));
  if (!sweep_fits(p, k)) return fingerprint_reference(p, k);

  const std::size_t d = p.field()->degree();
  const auto side = static_cast<std::size_t>(2 * k + 1);
  const std::size_t center = half.size();
  const auto& rows = p.integer_rows();

  // ramps[r][j][t] = (t - k) * R_rj[n-1]
  std::vector<std::vector<IntVector>> ramps(rows.size(), std::vector<IntVector>(d, IntVector(side)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t t = 0; t < side; ++t)
        ramps[r][j][t] = (static_cast<std::int64_t>(t) - k) * rows[r].small[j][n - 1];

  std::vector<IntVector> dots(d, IntVector(side));
  IntVector combined(side);
  std::vector<std::int8_t> signs(side);
  std::int64_t coeffs[16];

  const std::size_t lines = ipow(side, n - 1);
  const std::size_t zero_line = (lines - 1) / 2;
  IntVector prefix(n - 1, -k);
  for (std::size_t line = 0; line < lines; ++line) {
    if (line >= zero_line) {
      std::fill(signs.begin(), signs.end(), 0);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < d; ++j) {
          std::int64_t base = 0;
          for (std::size_t i = 0; i + 1 < n; ++i) base += rows[r].small[j][i] * prefix[i];
          kernels::ramp_add(base, ramps[r][j], dots[j]);
        }
        std::size_t remaining;
        if (d == 1) {
          remaining = kernels::merge_signs(dots[0], signs);
        } else {
          for (std::size_t t = 0; t < side; ++t) {
            if (signs[t] != 0) { combined[t] = 0; continue; }
            for (std::size_t j = 0; j < d; ++j) coeffs[j] = dots[j][t];
            combined[t] = p.field()->sign_integer(std::span<const std::int64_t>(coeffs, d));
          }
          remaining = kernels::merge_signs(combined, signs);
        }
        if (remaining == 0) break;
      }
      for (std::size_t t = 0; t < side; ++t) {
        const std::size_t idx = line * side + t;
        if (idx > center) half[idx - center - 1] = signs[t];
      }
    }
    for (std::size_t i = n - 1; i-- > 0;) {
      if (++prefix[i] <= k) break;
      prefix[i] = -k;
    }
  }
  return Fingerprint(n, k, std::move(half));
}

}  // namespace zrq
