#include "octamod/kernels.hpp"

#include "octamod/modp.hpp"

namespace octamod {

namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t a, std::uint32_t p) {
  if (a == 0) return;
  ShoupMul m(a, p);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t t = y[i] + m.mul(x[i]);  // < 2p < 2^32
    if (t >= p) t -= p;
    y[i] = t;
  }
}

void scale_scalar(std::uint32_t* y, std::size_t n, std::uint32_t a,
                  std::uint32_t p) {
  ShoupMul m(a, p);
  for (std::size_t i = 0; i < n; ++i) y[i] = m.mul(y[i]);
}

const ModpKernels scalar_kernels{"scalar", axpy_scalar, scale_scalar};

}  // namespace

const ModpKernels& modp_kernels_scalar() { return scalar_kernels; }

#if defined(OCTAMOD_WITH_AVX2)
const ModpKernels& modp_kernels_avx2();
#endif
#if defined(OCTAMOD_WITH_NEON)
const ModpKernels& modp_kernels_neon();
#endif

const ModpKernels& modp_kernels() {
#if defined(OCTAMOD_WITH_AVX2)
  static const bool have_avx2 = __builtin_cpu_supports("avx2");
  if (have_avx2) return modp_kernels_avx2();
#endif
#if defined(OCTAMOD_WITH_NEON)
  return modp_kernels_neon();
#endif
  return scalar_kernels;
}

std::vector<const ModpKernels*> modp_kernel_variants() {
  std::vector<const ModpKernels*> v{&scalar_kernels};
#if defined(OCTAMOD_WITH_AVX2)
  if (__builtin_cpu_supports("avx2")) v.push_back(&modp_kernels_avx2());
#endif
#if defined(OCTAMOD_WITH_NEON)
  v.push_back(&modp_kernels_neon());
#endif
  return v;
}

}  // namespace octamod
