#include "dtm/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>

namespace dtm::kernels {

namespace scalar {

double masked_sum(const double* v, const std::uint64_t* mask, std::size_t nwords) {
  double acc = 0.0;
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t m = mask[w];
    while (m) {
      int b = std::countr_zero(m);
      acc += v[w * 64 + b];
      m &= m - 1;
    }
  }
  return acc;
}

double masked_dot(const double* a, const double* b, const std::uint64_t* mask,
                  std::size_t nwords) {
  double acc = 0.0;
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t m = mask[w];
    while (m) {
      int i = std::countr_zero(m);
      acc += a[w * 64 + i] * b[w * 64 + i];
      m &= m - 1;
    }
  }
  return acc;
}

void threshold_mask(const double* v, std::size_t n, double t, bool strict,
                    std::uint64_t* out) {
  std::size_t nwords = (n + 63) / 64;
  for (std::size_t w = 0; w < nwords; ++w) out[w] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool in = strict ? (v[i] > t) : (v[i] >= t);
    if (in) out[i / 64] |= std::uint64_t(1) << (i % 64);
  }
}

MinMax masked_minmax(const double* v, const std::uint64_t* mask, std::size_t nwords) {
  MinMax r{0.0, 0.0, false};
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t m = mask[w];
    while (m) {
      int b = std::countr_zero(m);
      double x = v[w * 64 + b];
      if (!r.any) {
        r.min = r.max = x;
        r.any = true;
      } else {
        if (x < r.min) r.min = x;
        if (x > r.max) r.max = x;
      }
      m &= m - 1;
    }
  }
  return r;
}

}  // namespace scalar

std::size_t popcount(const std::uint64_t* w, std::size_t nwords) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < nwords; ++i) n += std::size_t(std::popcount(w[i]));
  return n;
}

namespace {

std::atomic<int> g_force_scalar{-1};  // -1 unset, 0 off, 1 on

bool use_avx2() {
  int f = g_force_scalar.load(std::memory_order_relaxed);
  if (f == -1) {
    f = std::getenv("DTM_FORCE_SCALAR") ? 1 : 0;
    g_force_scalar.store(f, std::memory_order_relaxed);
  }
  return f == 0 && avx2::available();
}

}  // namespace

void force_scalar(bool on) { g_force_scalar.store(on ? 1 : 0, std::memory_order_relaxed); }

const char* backend() { return use_avx2() ? "avx2" : "scalar"; }

double masked_sum(const double* v, const std::uint64_t* mask, std::size_t nwords) {
  return use_avx2() ? avx2::masked_sum(v, mask, nwords)
                    : scalar::masked_sum(v, mask, nwords);
}

double masked_dot(const double* a, const double* b, const std::uint64_t* mask,
                  std::size_t nwords) {
  return use_avx2() ? avx2::masked_dot(a, b, mask, nwords)
                    : scalar::masked_dot(a, b, mask, nwords);
}

void threshold_mask(const double* v, std::size_t n, double t, bool strict,
                    std::uint64_t* out) {
  if (use_avx2())
    avx2::threshold_mask(v, n, t, strict, out);
  else
    scalar::threshold_mask(v, n, t, strict, out);
}

MinMax masked_minmax(const double* v, const std::uint64_t* mask, std::size_t nwords) {
  return use_avx2() ? avx2::masked_minmax(v, mask, nwords)
                    : scalar::masked_minmax(v, mask, nwords);
}

}  // namespace dtm::kernels
