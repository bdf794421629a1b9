#include <immintrin.h>

#include "octamod/kernels.hpp"
#include "octamod/modp.hpp"

namespace octamod {

namespace {

// One Shoup multiply-reduce on four packed u64 lanes holding u32 values.
// Returns a*x mod p in [0, p).
inline __m256i shoup_mul4(__m256i x64, __m256i av, __m256i ashv, __m256i pv) {
  __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(x64, ashv), 32);
  __m256i r =
      _mm256_sub_epi64(_mm256_mul_epu32(x64, av), _mm256_mul_epu32(q, pv));
  __m256i rp = _mm256_sub_epi64(r, pv);
  __m256i keep = _mm256_cmpgt_epi64(pv, r);  // values < 2^33, signed cmp is safe
  return _mm256_blendv_epi8(rp, r, keep);
}

inline __m256i addmod4(__m256i a64, __m256i b64, __m256i pv) {
  __m256i t = _mm256_add_epi64(a64, b64);
  __m256i tp = _mm256_sub_epi64(t, pv);
  __m256i keep = _mm256_cmpgt_epi64(pv, t);
  return _mm256_blendv_epi8(tp, t, keep);
}

void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p) {
  if (a == 0) return;
  ShoupMul m(a, p);
  const __m256i av = _mm256_set1_epi64x(a);
  const __m256i ashv = _mm256_set1_epi64x(m.a_shoup);
  const __m256i pv = _mm256_set1_epi64x(p);
  const __m256i lo32 = _mm256_set1_epi64x(0xffffffffll);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<__m256i*>(y + i));
    __m256i re = addmod4(_mm256_and_si256(yv, lo32),
                         shoup_mul4(_mm256_and_si256(xv, lo32), av, ashv, pv), pv);
    __m256i ro = addmod4(_mm256_srli_epi64(yv, 32),
                         shoup_mul4(_mm256_srli_epi64(xv, 32), av, ashv, pv), pv);
    __m256i out = _mm256_or_si256(re, _mm256_slli_epi64(ro, 32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), out);
  }
  for (; i < n; ++i) {
    std::uint32_t t = y[i] + m.mul(x[i]);
    if (t >= p) t -= p;
    y[i] = t;
  }
}

void scale_avx2(std::uint32_t* y, std::size_t n, std::uint32_t a,
                std::uint32_t p) {
  ShoupMul m(a, p);
  const __m256i av = _mm256_set1_epi64x(a);
  const __m256i ashv = _mm256_set1_epi64x(m.a_shoup);
  const __m256i pv = _mm256_set1_epi64x(p);
  const __m256i lo32 = _mm256_set1_epi64x(0xffffffffll);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<__m256i*>(y + i));
    __m256i re = shoup_mul4(_mm256_and_si256(yv, lo32), av, ashv, pv);
    __m256i ro = shoup_mul4(_mm256_srli_epi64(yv, 32), av, ashv, pv);
    __m256i out = _mm256_or_si256(re, _mm256_slli_epi64(ro, 32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), out);
  }
  for (; i < n; ++i) y[i] = m.mul(y[i]);
}

const ModpKernels avx2_kernels{"avx2", axpy_avx2, scale_avx2};

}  // namespace

const ModpKernels& modp_kernels_avx2() { return avx2_kernels; }

}  // namespace octamod
