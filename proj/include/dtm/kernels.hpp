// Data-parallel inner loops shared by the grid types: masked sums over
// bitset regions, threshold-to-bitset for level sets, masked min/max.
// Scalar reference kernels plus AVX2 variants selected at runtime.

#pragma once

#include <cstddef>
#include <cstdint>

namespace dtm::kernels {

struct MinMax {
  double min;
  double max;
  bool any;  // false when the mask is empty
};

// Scalar reference implementations. `nwords` masks cover nwords*64 values;
// callers pad value arrays accordingly.
namespace scalar {
double masked_sum(const double* v, const std::uint64_t* mask, std::size_t nwords);
double masked_dot(const double* a, const double* b, const std::uint64_t* mask,
                  std::size_t nwords);
void threshold_mask(const double* v, std::size_t n, double t, bool strict,
                    std::uint64_t* out);
MinMax masked_minmax(const double* v, const std::uint64_t* mask, std::size_t nwords);
}  // namespace scalar

namespace avx2 {
bool available();
double masked_sum(const double* v, const std::uint64_t* mask, std::size_t nwords);
double masked_dot(const double* a, const double* b, const std::uint64_t* mask,
                  std::size_t nwords);
void threshold_mask(const double* v, std::size_t n, double t, bool strict,
                    std::uint64_t* out);
MinMax masked_minmax(const double* v, const std::uint64_t* mask, std::size_t nwords);
}  // namespace avx2

// Runtime-dispatched entry points. Honors the DTM_FORCE_SCALAR environment
// variable; force_scalar() overrides for tests.
double masked_sum(const double* v, const std::uint64_t* mask, std::size_t nwords);
double masked_dot(const double* a, const double* b, const std::uint64_t* mask,
                  std::size_t nwords);
void threshold_mask(const double* v, std::size_t n, double t, bool strict,
                    std::uint64_t* out);
MinMax masked_minmax(const double* v, const std::uint64_t* mask, std::size_t nwords);

std::size_t popcount(const std::uint64_t* w, std::size_t nwords);

const char* backend();
void force_scalar(bool on);

}  // namespace dtm::kernels
