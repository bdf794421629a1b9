#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace octamod {

// Hot inner loops of the modular elimination and verification passes. All
// arrays hold fully reduced residues in [0, p) with 2 <= p < 2^31; `a` is a
// reduced multiplier. Every variant computes bit-identical results; the
// dispatcher just picks the fastest one the CPU can run.
struct ModpKernels {
  const char* name;
  // y[i] = (y[i] + a * x[i]) mod p
  void (*axpy)(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p);
  // y[i] = (a * y[i]) mod p
  void (*scale)(std::uint32_t* y, std::size_t n, std::uint32_t a,
                std::uint32_t p);
};

const ModpKernels& modp_kernels();         // runtime-selected
const ModpKernels& modp_kernels_scalar();  // portable reference

// All variants usable on this machine (scalar always included).
std::vector<const ModpKernels*> modp_kernel_variants();

}  // namespace octamod
