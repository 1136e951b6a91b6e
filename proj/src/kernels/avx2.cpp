#include "hilbtan/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define HILBTAN_HAVE_AVX2 1
#endif

namespace hilbtan::kernels::avx2 {

#ifdef HILBTAN_HAVE_AVX2

namespace {

// Barrett reduction of eight 32-bit lanes t < 2^32 modulo p < 2^16 with
// m = floor(2^32 / p). The estimated quotient is off by at most one.
__attribute__((target("avx2"))) inline __m256i reduce(__m256i t, __m256i vm, __m256i vp) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(t, vm), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), vm);
  __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                                              std::uint32_t c, std::uint32_t p) {
  const std::size_t n = dst.size();
  const std::uint32_t m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce(t, vm, vp));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

__attribute__((target("avx2"))) void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p) {
  const std::size_t n = v.size();
  const std::uint32_t m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v.data() + i), reduce(_mm256_mullo_epi32(x, vc), vm, vp));
  }
  for (; i < n; ++i) v[i] = (c * v[i]) % p;
}

__attribute__((target("avx2"))) std::size_t first_nonzero(std::span<const std::uint32_t> v, std::size_t from) {
  const std::size_t n = v.size();
  std::size_t i = from;
  for (; i < n && (i & 7); ++i)
    if (v[i]) return i;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero))));
    if (mask != 0xFF) return i + static_cast<std::size_t>(__builtin_ctz(~mask & 0xFF));
  }
  for (; i < n; ++i)
    if (v[i]) return i;
  return n;
}

#else

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
  scalar::axpy_mod(dst, src, c, p);
}
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p) { scalar::scale_mod(v, c, p); }
std::size_t first_nonzero(std::span<const std::uint32_t> v, std::size_t from) {
  return scalar::first_nonzero(v, from);
}

#endif

}  // namespace hilbtan::kernels::avx2
