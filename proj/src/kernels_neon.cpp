#include <arm_neon.h>

#include "octamod/kernels.hpp"
#include "octamod/modp.hpp"

namespace octamod {

namespace {

inline uint64x2_t shoup_mul2(uint32x2_t x, uint32x2_t av, uint32x2_t ashv,
                             uint64x2_t pv) {
  uint64x2_t q = vshrq_n_u64(vmull_u32(x, ashv), 32);
  uint64x2_t r = vsubq_u64(vmull_u32(x, av), vmull_u32(vmovn_u64(q), vmovn_u64(pv)));
  uint64x2_t ge = vcgeq_u64(r, pv);
  return vsubq_u64(r, vandq_u64(ge, pv));
}

inline uint64x2_t addmod2(uint64x2_t a, uint64x2_t b, uint64x2_t pv) {
  uint64x2_t t = vaddq_u64(a, b);
  uint64x2_t ge = vcgeq_u64(t, pv);
  return vsubq_u64(t, vandq_u64(ge, pv));
}

void axpy_neon(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p) {
  if (a == 0) return;
  ShoupMul m(a, p);
  const uint32x2_t av = vdup_n_u32(a);
  const uint32x2_t ashv = vdup_n_u32(m.a_shoup);
  const uint64x2_t pv = vdupq_n_u64(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t xv = vld1q_u32(x + i);
    uint32x4_t yv = vld1q_u32(y + i);
    uint64x2_t lo = addmod2(vmovl_u32(vget_low_u32(yv)),
                            shoup_mul2(vget_low_u32(xv), av, ashv, pv), pv);
    uint64x2_t hi = addmod2(vmovl_u32(vget_high_u32(yv)),
                            shoup_mul2(vget_high_u32(xv), av, ashv, pv), pv);
    vst1q_u32(y + i, vcombine_u32(vmovn_u64(lo), vmovn_u64(hi)));
  }
  for (; i < n; ++i) {
    std::uint32_t t = y[i] + m.mul(x[i]);
    if (t >= p) t -= p;
    y[i] = t;
  }
}

void scale_neon(std::uint32_t* y, std::size_t n, std::uint32_t a,
                std::uint32_t p) {
  ShoupMul m(a, p);
  const uint32x2_t av = vdup_n_u32(a);
  const uint32x2_t ashv = vdup_n_u32(m.a_shoup);
  const uint64x2_t pv = vdupq_n_u64(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t yv = vld1q_u32(y + i);
    uint64x2_t lo = shoup_mul2(vget_low_u32(yv), av, ashv, pv);
    uint64x2_t hi = shoup_mul2(vget_high_u32(yv), av, ashv, pv);
    vst1q_u32(y + i, vcombine_u32(vmovn_u64(lo), vmovn_u64(hi)));
  }
  for (; i < n; ++i) y[i] = m.mul(y[i]);
}

const ModpKernels neon_kernels{"neon", axpy_neon, scale_neon};

}  // namespace

const ModpKernels& modp_kernels_neon() { return neon_kernels; }

}  // namespace octamod
