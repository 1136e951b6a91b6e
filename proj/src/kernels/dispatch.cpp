#include <atomic>

#include "hilbtan/kernels.hpp"

namespace hilbtan::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<int> forced{-1};

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  return isa;
}

Isa active_isa() {
  int f = forced.load(std::memory_order_relaxed);
  return f < 0 ? detected_isa() : static_cast<Isa>(f);
}

void force_isa(std::optional<Isa> isa) {
  if (!isa) {
    forced.store(-1);
    return;
  }
  Isa chosen = (*isa == Isa::avx2 && detected_isa() != Isa::avx2) ? Isa::scalar : *isa;
  forced.store(static_cast<int>(chosen));
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
  if (c == 0) return;
  if (active_isa() == Isa::avx2 && p < avx2::kMaxModulus)
    avx2::axpy_mod(dst, src, c, p);
  else
    scalar::axpy_mod(dst, src, c, p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p) {
  if (active_isa() == Isa::avx2 && p < avx2::kMaxModulus)
    avx2::scale_mod(v, c, p);
  else
    scalar::scale_mod(v, c, p);
}

std::size_t first_nonzero(std::span<const std::uint32_t> v, std::size_t from) {
  if (active_isa() == Isa::avx2) return avx2::first_nonzero(v, from);
  return scalar::first_nonzero(v, from);
}

}  // namespace hilbtan::kernels
