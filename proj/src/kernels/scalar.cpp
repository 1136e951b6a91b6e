#include "hilbtan/kernels.hpp"

namespace hilbtan::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p) {
  for (auto& x : v) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * x % p);
}

std::size_t first_nonzero(std::span<const std::uint32_t> v, std::size_t from) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (v[i]) return i;
  return v.size();
}

}  // namespace hilbtan::kernels::scalar
