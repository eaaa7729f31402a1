#include <cstdlib>

#include "hypstruct/kernels.hpp"

namespace hyp::kernels {

#if !defined(HYPSTRUCT_HAVE_AVX2)
const Dispatch* avx2() { return nullptr; }
#endif

const Dispatch& active() {
  static const Dispatch* chosen = [] {
    if (std::getenv("HYPSTRUCT_NO_SIMD") != nullptr) return &scalar();
    if (const Dispatch* d = avx2()) return d;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace hyp::kernels
