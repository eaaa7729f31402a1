#pragma once

#include <cstddef>

namespace hyp::kernels {

// Data-parallel inner loops, provided as scalar reference implementations and
// SIMD variants selected once at runtime. Both variants of a kernel perform
// the same floating-point operations (no reassociation of sums), so their
// results compare bit-for-bit equal; the equivalence tests rely on that.
struct Dispatch {
  const char* name;

  // max over x,y,z in [0,n) of min(G[x*n+y], G[y*n+z]) - G[x*n+z]
  // where G is the Gromov product matrix at a fixed basepoint.
  double (*quad_defect)(const double* G, std::size_t n);

  // Length of the longest common contiguous substring of x and y.
  std::size_t (*lcs_max)(const unsigned char* x, std::size_t nx, const unsigned char* y,
                         std::size_t ny);
};

const Dispatch& scalar();
const Dispatch* avx2();    // nullptr when unsupported on this machine
const Dispatch& active();  // avx2 when available unless HYPSTRUCT_NO_SIMD is set

}  // namespace hyp::kernels
