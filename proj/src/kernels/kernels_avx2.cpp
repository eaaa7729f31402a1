// AVX2 variants of the kernels in kernels_scalar.cpp. This translation unit
// is compiled with -mavx2 and only entered after a runtime cpuid check.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "hypstruct/kernels.hpp"

namespace hyp::kernels {

namespace {

double quad_defect_avx2(const double* G, std::size_t n) {
  __m256d bestv = _mm256_setzero_pd();
  double best = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    const double* gx = G + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      const __m256d gxy = _mm256_set1_pd(gx[y]);
      const double* gy = G + y * n;
      std::size_t z = 0;
      for (; z + 4 <= n; z += 4) {
        __m256d m = _mm256_min_pd(gxy, _mm256_loadu_pd(gy + z));
        __m256d defect = _mm256_sub_pd(m, _mm256_loadu_pd(gx + z));
        bestv = _mm256_max_pd(bestv, defect);
      }
      for (; z < n; ++z) best = std::max(best, std::min(gx[y], gy[z]) - gx[z]);
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, bestv);
  for (double v : lanes) best = std::max(best, v);
  return best;
}

std::size_t lcs_max_avx2(const unsigned char* x, std::size_t nx, const unsigned char* y,
                         std::size_t ny) {
  if (nx == 0 || ny == 0) return 0;
  std::vector<int> prev(ny, 0), cur(ny, 0);
  const __m256i one = _mm256_set1_epi32(1);
  __m256i bestv = _mm256_setzero_si256();
  int best = 0;
  for (std::size_t i = 0; i < nx; ++i) {
    const __m128i xi = _mm_set1_epi8(static_cast<char>(x[i]));
    cur[0] = x[i] == y[0] ? 1 : 0;
    best = std::max(best, cur[0]);
    std::size_t j = 1;
    for (; j + 8 <= ny; j += 8) {
      __m128i yb = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(y + j));
      __m128i eq8 = _mm_cmpeq_epi8(yb, xi);
      __m256i mask = _mm256_cvtepi8_epi32(eq8);  // 0 or -1 per lane
      __m256i pj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev.data() + j - 1));
      __m256i val = _mm256_and_si256(_mm256_add_epi32(pj, one), mask);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(cur.data() + j), val);
      bestv = _mm256_max_epi32(bestv, val);
    }
    for (; j < ny; ++j) {
      cur[j] = x[i] == y[j] ? prev[j - 1] + 1 : 0;
      best = std::max(best, cur[j]);
    }
    std::swap(prev, cur);
  }
  alignas(32) int lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), bestv);
  for (int v : lanes) best = std::max(best, v);
  return static_cast<std::size_t>(best);
}

}  // namespace

const Dispatch* avx2() {
  static const Dispatch d{"avx2", quad_defect_avx2, lcs_max_avx2};
  return __builtin_cpu_supports("avx2") ? &d : nullptr;
}

}  // namespace hyp::kernels
