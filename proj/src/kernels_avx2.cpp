// AVX2 variants of the masked kernels. Compiled with -mavx2 when the
// compiler supports it; available() reports the runtime CPU check.

#include "dtm/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <limits>

namespace dtm::kernels::avx2 {

bool available() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

// lane masks for the 16 possible low nibbles
alignas(32) const std::uint64_t kLaneLut[16][4] = {
#define ROW(n)                                                      \
  {((n)&1) ? ~0ull : 0ull, ((n)&2) ? ~0ull : 0ull,                  \
   ((n)&4) ? ~0ull : 0ull, ((n)&8) ? ~0ull : 0ull}
    ROW(0),  ROW(1),  ROW(2),  ROW(3),  ROW(4),  ROW(5),  ROW(6),  ROW(7),
    ROW(8),  ROW(9),  ROW(10), ROW(11), ROW(12), ROW(13), ROW(14), ROW(15),
#undef ROW
};

inline __m256d lane_mask(unsigned nibble) {
  return _mm256_load_pd(reinterpret_cast<const double*>(kLaneLut[nibble]));
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double masked_sum(const double* v, const std::uint64_t* mask, std::size_t nwords) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t m = mask[w];
    if (!m) continue;
    const double* p = v + w * 64;
    for (int g = 0; g < 16; ++g, m >>= 4) {
      unsigned nib = unsigned(m & 0xf);
      if (!nib) continue;
      __m256d x = _mm256_and_pd(lane_mask(nib), _mm256_loadu_pd(p + g * 4));
      acc = _mm256_add_pd(acc, x);
    }
  }
  return hsum(acc);
}

double masked_dot(const double* a, const double* b, const std::uint64_t* mask,
                  std::size_t nwords) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t m = mask[w];
    if (!m) continue;
    const double* pa = a + w * 64;
    const double* pb = b + w * 64;
    for (int g = 0; g < 16; ++g, m >>= 4) {
      unsigned nib = unsigned(m & 0xf);
      if (!nib) continue;
      __m256d x = _mm256_mul_pd(_mm256_loadu_pd(pa + g * 4), _mm256_loadu_pd(pb + g * 4));
      acc = _mm256_add_pd(acc, _mm256_and_pd(lane_mask(nib), x));
    }
  }
  return hsum(acc);
}

void threshold_mask(const double* v, std::size_t n, double t, bool strict,
                    std::uint64_t* out) {
  const __m256d tv = _mm256_set1_pd(t);
  std::size_t nwords = (n + 63) / 64;
  std::size_t full = n / 64;
  for (std::size_t w = 0; w < full; ++w) {
    const double* p = v + w * 64;
    std::uint64_t bits = 0;
    for (int g = 0; g < 16; ++g) {
      __m256d c = strict ? _mm256_cmp_pd(_mm256_loadu_pd(p + g * 4), tv, _CMP_GT_OQ)
                         : _mm256_cmp_pd(_mm256_loadu_pd(p + g * 4), tv, _CMP_GE_OQ);
      bits |= std::uint64_t(unsigned(_mm256_movemask_pd(c))) << (g * 4);
    }
    out[w] = bits;
  }
  if (full < nwords) {
    std::uint64_t bits = 0;
    for (std::size_t i = full * 64; i < n; ++i) {
      bool in = strict ? (v[i] > t) : (v[i] >= t);
      if (in) bits |= std::uint64_t(1) << (i % 64);
    }
    out[full] = bits;
  }
}

MinMax masked_minmax(const double* v, const std::uint64_t* mask, std::size_t nwords) {
  const double inf = std::numeric_limits<double>::infinity();
  __m256d vmin = _mm256_set1_pd(inf);
  __m256d vmax = _mm256_set1_pd(-inf);
  bool any = false;
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t m = mask[w];
    if (!m) continue;
    any = true;
    const double* p = v + w * 64;
    for (int g = 0; g < 16; ++g, m >>= 4) {
      unsigned nib = unsigned(m & 0xf);
      if (!nib) continue;
      __m256d lm = lane_mask(nib);
      __m256d x = _mm256_loadu_pd(p + g * 4);
      vmin = _mm256_min_pd(vmin, _mm256_blendv_pd(_mm256_set1_pd(inf), x, lm));
      vmax = _mm256_max_pd(vmax, _mm256_blendv_pd(_mm256_set1_pd(-inf), x, lm));
    }
  }
  if (!any) return {0.0, 0.0, false};
  alignas(32) double mn[4], mx[4];
  _mm256_store_pd(mn, vmin);
  _mm256_store_pd(mx, vmax);
  MinMax r{mn[0], mx[0], true};
  for (int i = 1; i < 4; ++i) {
    if (mn[i] < r.min) r.min = mn[i];
    if (mx[i] > r.max) r.max = mx[i];
  }
  return r;
}

}  // namespace dtm::kernels::avx2

#else  // !__AVX2__

namespace dtm::kernels::avx2 {
bool available() { return false; }
double masked_sum(const double* v, const std::uint64_t* mask, std::size_t nwords) {
  return scalar::masked_sum(v, mask, nwords);
}
double masked_dot(const double* a, const double* b, const std::uint64_t* mask,
                  std::size_t nwords) {
  return scalar::masked_dot(a, b, mask, nwords);
}
void threshold_mask(const double* v, std::size_t n, double t, bool strict,
                    std::uint64_t* out) {
  scalar::threshold_mask(v, n, t, strict, out);
}
MinMax masked_minmax(const double* v, const std::uint64_t* mask, std::size_t nwords) {
  return scalar::masked_minmax(v, mask, nwords);
}
}  // namespace dtm::kernels::avx2

#endif
