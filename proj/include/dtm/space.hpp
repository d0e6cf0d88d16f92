// Discretized model of the underlying space: a rectangular cell grid with
// physical bounds, either compact or a window into the plane/line with a
// virtual exterior node beyond the border.

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "dtm/kernels.hpp"

namespace dtm {

enum class BoundaryMode { compact, plane_window };

// Adjacency selector: foreground regions use 4-adjacency, background
// (complements) use 8-adjacency, so a thin connected curve separates.
enum class Side { foreground, background };

struct SpaceConfig {
  int width = 1;
  int height = 1;  // 1 for 1-D spaces
  double x0 = 0, x1 = 1;
  double y0 = 0, y1 = 1;  // ignored for 1-D
  BoundaryMode mode = BoundaryMode::compact;
};

class SpaceModel;
using SpacePtr = std::shared_ptr<const SpaceModel>;

class SpaceModel {
 public:
  static SpacePtr create(const SpaceConfig& cfg);

  int width() const { return w_; }
  int height() const { return h_; }
  int cell_count() const { return w_ * h_; }
  std::size_t words() const { return words_; }
  bool is_1d() const { return h_ == 1; }
  BoundaryMode mode() const { return mode_; }

  double x0() const { return x0_; }
  double x1() const { return x1_; }
  double y0() const { return y0_; }
  double y1() const { return y1_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }

  int index(int i, int j) const { return j * w_ + i; }
  int col(int idx) const { return idx % w_; }
  int row(int idx) const { return idx / w_; }

  double center_x(int i) const { return x0_ + (i + 0.5) * dx_; }
  double center_y(int j) const { return is_1d() ? 0.0 : y0_ + (j + 0.5) * dy_; }

  // Cell containing a physical point; throws if outside the bounds.
  int cell_at(double x, double y) const;
  bool on_border(int idx) const;

 private:
  SpaceModel() = default;
  int w_ = 0, h_ = 0;
  double x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0;
  double dx_ = 0, dy_ = 0;
  std::size_t words_ = 0;
  BoundaryMode mode_ = BoundaryMode::compact;
};

// Finite cell set over a grid space; plays both the open and the
// compact/closed role (every grid region is compact).
class Region {
 public:
  Region() = default;
  explicit Region(SpacePtr space);
  static Region full(SpacePtr space);
  static Region of_cells(SpacePtr space, const std::vector<int>& cells);

  const SpacePtr& space() const { return space_; }
  bool valid() const { return space_ != nullptr; }

  bool test(int idx) const {
    return (bits_[std::size_t(idx) / 64] >> (idx % 64)) & 1;
  }
  void set(int idx) { bits_[std::size_t(idx) / 64] |= std::uint64_t(1) << (idx % 64); }
  void reset(int idx) {
    bits_[std::size_t(idx) / 64] &= ~(std::uint64_t(1) << (idx % 64));
  }

  std::size_t count() const { return kernels::popcount(bits_.data(), bits_.size()); }
  bool empty() const;
  bool is_full() const { return count() == std::size_t(space_->cell_count()); }

  Region operator&(const Region& o) const;
  Region operator|(const Region& o) const;
  Region minus(const Region& o) const;
  Region complement() const;

  bool operator==(const Region& o) const;
  bool subset_of(const Region& o) const;
  bool intersects(const Region& o) const;

  const std::uint64_t* data() const { return bits_.data(); }
  std::uint64_t* data() { return bits_.data(); }
  const std::vector<std::uint64_t>& words() const { return bits_; }

  std::vector<int> cells() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t m = bits_[w];
      while (m) {
        int b = __builtin_ctzll(m);
        f(int(w * 64) + b);
        m &= m - 1;
      }
    }
  }

 private:
  void check_same_space(const Region& o) const;
  SpacePtr space_;
  std::vector<std::uint64_t> bits_;
};

// Real value per cell, sampled at cell centers; the stand-in for continuous
// bounded functions. Values are padded to whole mask words with zeros.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(SpacePtr space, double constant = 0.0);
  static GridFunction from_values(SpacePtr space, std::vector<double> values);

  const SpacePtr& space() const { return space_; }
  bool valid() const { return space_ != nullptr; }

  double at(int idx) const { return values_[std::size_t(idx)]; }
  double& at(int idx) { return values_[std::size_t(idx)]; }
  const double* data() const { return values_.data(); }

  double sup_norm() const;
  double min_value() const;
  double max_value() const;

  Region cozero() const;              // cells with value != 0
  Region zero_set() const;            // complement of cozero
  Region support(int = 0) const { return cozero(); }  // grid-scale supp = Coz

  GridFunction scaled(double c) const;
  GridFunction plus(const GridFunction& o) const;
  GridFunction plus_constant(double c) const;
  GridFunction pointwise_min(const GridFunction& o) const;
  GridFunction pointwise_max(const GridFunction& o) const;
  GridFunction product(const GridFunction& o) const;
  GridFunction clamped_nonneg() const;
  GridFunction masked(const Region& r) const;  // value on r, 0 elsewhere

  // Rounds values to `levels` equal steps of the current range.
  GridFunction quantized(int levels) const;

 private:
  SpacePtr space_;
  std::vector<double> values_;  // padded to words()*64
};

Region level_set(const GridFunction& f, double t, bool strict);
double oscillation(const GridFunction& f, const Region& a);  // throws on empty A
kernels::MinMax min_max_on(const GridFunction& f, const Region& a);

}  // namespace dtm
