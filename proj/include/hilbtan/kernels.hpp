#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

// Row kernels for dense elimination over F_p. Every entry point exists as a
// scalar reference and, where the CPU allows, an AVX2 variant chosen at
// runtime. The variants must agree bit for bit.

namespace hilbtan::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
/// Best variant the running CPU supports.
Isa detected_isa();
/// Variant used by the dispatching entry points.
Isa active_isa();
/// Pins dispatch to `isa` (clamped to what the CPU supports); nullopt restores detection.
void force_isa(std::optional<Isa> isa);

/// dst[i] <- (dst[i] + c * src[i]) mod p. Inputs must be reduced.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
/// v[i] <- c * v[i] mod p.
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);
/// Index of the first nonzero entry at or after `from`, or v.size().
std::size_t first_nonzero(std::span<const std::uint32_t> v, std::size_t from);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);
std::size_t first_nonzero(std::span<const std::uint32_t> v, std::size_t from);
}  // namespace scalar

namespace avx2 {
/// The AVX2 path keeps products in 32-bit lanes, so it needs p < 2^16.
inline constexpr std::uint32_t kMaxModulus = 1u << 16;
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);
std::size_t first_nonzero(std::span<const std::uint32_t> v, std::size_t from);
}  // namespace avx2

}  // namespace hilbtan::kernels
