#include "dtm/space.hpp"

#include <algorithm>
#include <cmath>

namespace dtm {

SpacePtr SpaceModel::create(const SpaceConfig& cfg) {
  if (cfg.width < 1 || cfg.height < 1)
    throw std::invalid_argument("space: width and height must be >= 1");
  if (!(cfg.x0 < cfg.x1))
    throw std::invalid_argument("space: degenerate x bounds");
  if (cfg.height > 1 && !(cfg.y0 < cfg.y1))
    throw std::invalid_argument("space: degenerate y bounds");
  auto s = std::shared_ptr<SpaceModel>(new SpaceModel());
  s->w_ = cfg.width;
  s->h_ = cfg.height;
  s->x0_ = cfg.x0;
  s->x1_ = cfg.x1;
  s->y0_ = cfg.height > 1 ? cfg.y0 : 0.0;
  s->y1_ = cfg.height > 1 ? cfg.y1 : 1.0;
  s->dx_ = (s->x1_ - s->x0_) / s->w_;
  s->dy_ = (s->y1_ - s->y0_) / s->h_;
  s->words_ = std::size_t(s->w_ * s->h_ + 63) / 64;
  s->mode_ = cfg.mode;
  return s;
}

int SpaceModel::cell_at(double x, double y) const {
  if (x < x0_ - 1e-12 || x > x1_ + 1e-12)
    throw std::invalid_argument("point outside space bounds");
  int i = std::clamp(int(std::floor((x - x0_) / dx_)), 0, w_ - 1);
  int j = 0;
  if (!is_1d()) {
    if (y < y0_ - 1e-12 || y > y1_ + 1e-12)
      throw std::invalid_argument("point outside space bounds");
    j = std::clamp(int(std::floor((y - y0_) / dy_)), 0, h_ - 1);
  }
  return index(i, j);
}

bool SpaceModel::on_border(int idx) const {
  int i = col(idx), j = row(idx);
  if (is_1d()) return i == 0 || i == w_ - 1;
  return i == 0 || i == w_ - 1 || j == 0 || j == h_ - 1;
}

Region::Region(SpacePtr space) : space_(std::move(space)), bits_(space_->words(), 0) {}

Region Region::full(SpacePtr space) {
  Region r(space);
  int n = space->cell_count();
  for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] = ~std::uint64_t(0);
  // clear padding bits
  int tail = n % 64;
  if (tail) r.bits_.back() &= (std::uint64_t(1) << tail) - 1;
  return r;
}

Region Region::of_cells(SpacePtr space, const std::vector<int>& cells) {
  Region r(space);
  for (int c : cells) {
    if (c < 0 || c >= space->cell_count())
      throw std::invalid_argument("cell index out of range");
    r.set(c);
  }
  return r;
}

bool Region::empty() const {
  for (auto w : bits_)
    if (w) return false;
  return true;
}

void Region::check_same_space(const Region& o) const {
  if (space_ != o.space_)
    throw std::invalid_argument("regions belong to different spaces");
}

Region Region::operator&(const Region& o) const {
  check_same_space(o);
  Region r(space_);
  for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & o.bits_[w];
  return r;
}

Region Region::operator|(const Region& o) const {
  check_same_space(o);
  Region r(space_);
  for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] | o.bits_[w];
  return r;
}

Region Region::minus(const Region& o) const {
  check_same_space(o);
  Region r(space_);
  for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & ~o.bits_[w];
  return r;
}

Region Region::complement() const { return full(space_).minus(*this); }

bool Region::operator==(const Region& o) const {
  return space_ == o.space_ && bits_ == o.bits_;
}

bool Region::subset_of(const Region& o) const {
  check_same_space(o);
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~o.bits_[w]) return false;
  return true;
}

bool Region::intersects(const Region& o) const {
  check_same_space(o);
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & o.bits_[w]) return true;
  return false;
}

std::vector<int> Region::cells() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int c) { out.push_back(c); });
  return out;
}

GridFunction::GridFunction(SpacePtr space, double constant)
    : space_(std::move(space)), values_(space_->words() * 64, 0.0) {
  std::fill(values_.begin(), values_.begin() + space_->cell_count(), constant);
}

GridFunction GridFunction::from_values(SpacePtr space, std::vector<double> values) {
  if (int(values.size()) != space->cell_count())
    throw std::invalid_argument("grid function: value count != cell count");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("grid function: non-finite value");
  GridFunction f(space);
  std::copy(values.begin(), values.end(), f.values_.begin());
  return f;
}

double GridFunction::sup_norm() const {
  double m = 0.0;
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(values_[std::size_t(i)]));
  return m;
}

double GridFunction::min_value() const {
  int n = space_->cell_count();
  double m = values_[0];
  for (int i = 1; i < n; ++i) m = std::min(m, values_[std::size_t(i)]);
  return m;
}

double GridFunction::max_value() const {
  int n = space_->cell_count();
  double m = values_[0];
  for (int i = 1; i < n; ++i) m = std::max(m, values_[std::size_t(i)]);
  return m;
}

Region GridFunction::cozero() const {
  Region r(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i)
    if (values_[std::size_t(i)] != 0.0) r.set(i);
  return r;
}

Region GridFunction::zero_set() const { return cozero().complement(); }

GridFunction GridFunction::scaled(double c) const {
  GridFunction f(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i) f.values_[std::size_t(i)] = c * values_[std::size_t(i)];
  return f;
}

GridFunction GridFunction::plus(const GridFunction& o) const {
  if (space_ != o.space_) throw std::invalid_argument("grid functions on different spaces");
  GridFunction f(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i)
    f.values_[std::size_t(i)] = values_[std::size_t(i)] + o.values_[std::size_t(i)];
  return f;
}

GridFunction GridFunction::plus_constant(double c) const {
  GridFunction f(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i) f.values_[std::size_t(i)] = values_[std::size_t(i)] + c;
  return f;
}

GridFunction GridFunction::pointwise_min(const GridFunction& o) const {
  if (space_ != o.space_) throw std::invalid_argument("grid functions on different spaces");
  GridFunction f(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i)
    f.values_[std::size_t(i)] = std::min(values_[std::size_t(i)], o.values_[std::size_t(i)]);
  return f;
}

GridFunction GridFunction::pointwise_max(const GridFunction& o) const {
  if (space_ != o.space_) throw std::invalid_argument("grid functions on different spaces");
  GridFunction f(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i)
    f.values_[std::size_t(i)] = std::max(values_[std::size_t(i)], o.values_[std::size_t(i)]);
  return f;
}

GridFunction GridFunction::product(const GridFunction& o) const {
  if (space_ != o.space_) throw std::invalid_argument("grid functions on different spaces");
  GridFunction f(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i)
    f.values_[std::size_t(i)] = values_[std::size_t(i)] * o.values_[std::size_t(i)];
  return f;
}

GridFunction GridFunction::clamped_nonneg() const {
  GridFunction f(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i) f.values_[std::size_t(i)] = std::max(0.0, values_[std::size_t(i)]);
  return f;
}

GridFunction GridFunction::masked(const Region& r) const {
  if (space_ != r.space()) throw std::invalid_argument("region on different space");
  GridFunction f(space_);
  r.for_each([&](int c) { f.values_[std::size_t(c)] = values_[std::size_t(c)]; });
  return f;
}

GridFunction GridFunction::quantized(int levels) const {
  if (levels < 1) throw std::invalid_argument("quantized: levels must be >= 1");
  double lo = min_value(), hi = max_value();
  if (hi <= lo) return *this;
  double step = (hi - lo) / levels;
  GridFunction f(space_);
  int n = space_->cell_count();
  for (int i = 0; i < n; ++i) {
    double v = values_[std::size_t(i)];
    f.values_[std::size_t(i)] = lo + std::round((v - lo) / step) * step;
  }
  return f;
}

Region level_set(const GridFunction& f, double t, bool strict) {
  Region r(f.space());
  kernels::threshold_mask(f.data(), std::size_t(f.space()->cell_count()), t, strict,
                          r.data());
  return r;
}

kernels::MinMax min_max_on(const GridFunction& f, const Region& a) {
  if (f.space() != a.space()) throw std::invalid_argument("region on different space");
  return kernels::masked_minmax(f.data(), a.data(), f.space()->words());
}

double oscillation(const GridFunction& f, const Region& a) {
  auto mm = min_max_on(f, a);
  if (!mm.any) throw std::invalid_argument("oscillation over empty region");
  return mm.max - mm.min;
}

}  // namespace dtm
