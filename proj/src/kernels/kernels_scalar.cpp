#include <algorithm>
#include <vector>

#include "hypstruct/kernels.hpp"

namespace hyp::kernels {

namespace {

double quad_defect_scalar(const double* G, std::size_t n) {
  double best = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    const double* gx = G + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      const double gxy = gx[y];
      const double* gy = G + y * n;
      for (std::size_t z = 0; z < n; ++z) {
        double defect = std::min(gxy, gy[z]) - gx[z];
        best = std::max(best, defect);
      }
    }
  }
  return best;
}

std::size_t lcs_max_scalar(const unsigned char* x, std::size_t nx, const unsigned char* y,
                           std::size_t ny) {
  if (nx == 0 || ny == 0) return 0;
  // One DP row: cur[j] = common suffix length of x[..i] and y[..j].
  std::vector<int> prev(ny, 0), cur(ny, 0);
  int best = 0;
  for (std::size_t i = 0; i < nx; ++i) {
    cur[0] = x[i] == y[0] ? 1 : 0;
    best = std::max(best, cur[0]);
    for (std::size_t j = 1; j < ny; ++j) {
      cur[j] = x[i] == y[j] ? prev[j - 1] + 1 : 0;
      best = std::max(best, cur[j]);
    }
    std::swap(prev, cur);
  }
  return static_cast<std::size_t>(best);
}

}  // namespace

const Dispatch& scalar() {
  static const Dispatch d{"scalar", quad_defect_scalar, lcs_max_scalar};
  return d;
}

}  // namespace hyp::kernels
