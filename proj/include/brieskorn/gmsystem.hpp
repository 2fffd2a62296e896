#pragma once

// Weight-graded model of the constant Gauss-Manin deformation
// G_S = (+)_j O_S{{dt^-1}}[dt] e_j. An element is a finite map from the
// exponent w of dt^-w (weight) to a vector of r+1 truncated series.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brieskorn/matrix.hpp"
#include "brieskorn/series.hpp"

namespace brieskorn {

/// Element of H (x) O_S: coordinates on e_0..e_r.
class HVector {
 public:
  HVector() = default;
  HVector(int dim, int nvars, int degree_bound);
  explicit HVector(std::vector<Series> coords);

  static HVector basis(int dim, int nvars, int degree_bound, int j);
  static HVector constant(std::span<const Rational> coords, int nvars, int degree_bound);

  int dim() const { return static_cast<int>(coords_.size()); }
  int nvars() const { return nvars_; }
  int degree_bound() const { return degree_bound_; }

  const Series& operator[](int j) const { return coords_.at(static_cast<std::size_t>(j)); }
  Series& operator[](int j) { return coords_.at(static_cast<std::size_t>(j)); }
  const std::vector<Series>& coords() const { return coords_; }

  bool is_zero() const;
  HVector operator-() const;
  friend HVector operator+(const HVector& a, const HVector& b);
  friend HVector operator-(const HVector& a, const HVector& b);
  HVector& operator+=(const HVector& b) { return *this = *this + b; }
  HVector& operator-=(const HVector& b) { return *this = *this - b; }
  friend bool operator==(const HVector& a, const HVector& b) = default;

  HVector scaled(const Series& f) const;
  HVector scaled(const Rational& q) const;
  /// M * v with M acting on coordinates (column convention: M e_i = sum_j M(j,i) e_j).
  HVector apply(const RationalMatrix& m) const;
  HVector derivative(int i) const;
  HVector truncate(int degree) const;
  /// Constant terms: the vector at s = 0.
  std::vector<Rational> at_origin() const;

  /// "(c_0, c_1, ..., c_r)" in the series text form.
  std::string to_string() const;

 private:
  std::vector<Series> coords_;
  int nvars_ = 1;
  int degree_bound_ = 0;
};

struct GMShape {
  int dim = 0;
  int nvars = 0;
  int degree_bound = 0;
  int weight_bound = 0;
  friend bool operator==(const GMShape&, const GMShape&) = default;
};

/// Element of G_S truncated at weight K (weight_bound). `valid_through` is
/// the largest weight at which the element is fully known; weights above it
/// are absent, not zero.
class GMElement {
 public:
  explicit GMElement(GMShape shape);
  GMElement(GMShape shape, int valid_through);

  static GMElement single(GMShape shape, int weight, HVector v);

  const GMShape& shape() const { return shape_; }
  int valid_through() const { return valid_through_; }
  const std::map<int, HVector>& terms() const { return terms_; }

  /// Accumulates v at `weight`; weights above valid_through are dropped.
  void add(int weight, const HVector& v);
  /// The HVector at weight k (zero if absent). PrecisionError if k > valid_through.
  HVector component(int k) const;
  std::optional<int> lowest_weight() const;
  bool is_zero() const { return terms_.empty(); }

  /// Multiplication by dt^-k (k may be negative).
  GMElement shifted(int k) const;
  GMElement scaled(const Series& f) const;
  GMElement scaled(const Rational& q) const;
  GMElement apply_matrix(const RationalMatrix& m) const;
  GMElement derivative(int i) const;
  GMElement truncate_series(int degree) const;
  /// Forgets everything above `bound` (bound <= valid_through).
  GMElement restrict_to(int bound) const;
  /// Every coefficient replaced by its constant term (shape unchanged).
  GMElement at_origin() const;

  GMElement operator-() const;
  friend GMElement operator+(const GMElement& a, const GMElement& b);
  friend GMElement operator-(const GMElement& a, const GMElement& b);
  GMElement& operator+=(const GMElement& b) { return *this = *this + b; }
  GMElement& operator-=(const GMElement& b) { return *this = *this - b; }

  /// One line per stored weight: `dt^-w : (c_0, ..., c_r)`.
  std::string to_string() const;

 private:
  void check_same_shape(const GMElement& b) const;

  GMShape shape_;
  int valid_through_;
  std::map<int, HVector> terms_;
};

/// Equality of all weights <= bound. PrecisionError when either element is
/// not known through `bound`.
bool equal_through(const GMElement& a, const GMElement& b, int bound);

/// The Gauss-Manin system: rank parameter r (basis e_0..e_r), nilpotent N
/// with N^{r+1} = 0, weight cutoff K and series parameters for O_S.
class GMSystem {
 public:
  GMSystem(int r, RationalMatrix nilpotent, int weight_bound, int nvars, int degree_bound);

  /// N = 0, O_S in s_1..s_r.
  static GMSystem constant(int r, int weight_bound, int degree_bound);
  /// N e_i = e_{i+1}, O_S in s_1..s_r.
  static GMSystem shifted(int r, int weight_bound, int degree_bound);

  int r() const { return r_; }
  int dim() const { return r_ + 1; }
  int weight_bound() const { return weight_bound_; }
  int nvars() const { return nvars_; }
  int degree_bound() const { return degree_bound_; }
  const RationalMatrix& nilpotent() const { return nilpotent_; }
  const RationalMatrix& nilpotent_power(int k) const { return nilpotent_powers_.at(static_cast<std::size_t>(k)); }
  bool has_zero_nilpotent() const { return nilpotent_.is_zero(); }
  bool has_shift_nilpotent() const { return nilpotent_ == RationalMatrix::shift(static_cast<std::size_t>(dim())); }
  GMShape shape() const { return {dim(), nvars_, degree_bound_, weight_bound_}; }
  /// Comparison bound K - r - 1 keeping operator applications clear of dropped weights.
  int default_bound() const { return weight_bound_ - r_ - 1; }

  Series zero_series() const { return Series(nvars_, degree_bound_); }
  Series constant_series(const Rational& q) const { return Series::constant(nvars_, degree_bound_, q); }
  Series s(int i) const { return Series::variable(nvars_, degree_bound_, i); }
  HVector zero_vector() const { return HVector(dim(), nvars_, degree_bound_); }
  HVector basis(int j) const { return HVector::basis(dim(), nvars_, degree_bound_, j); }
  GMElement zero() const { return GMElement(shape()); }
  /// dt^-weight e_j.
  GMElement basis_element(int weight, int j) const { return GMElement::single(shape(), weight, basis(j)); }
  GMElement element(int weight, const HVector& v) const { return GMElement::single(shape(), weight, v); }

 private:
  int r_;
  RationalMatrix nilpotent_;
  std::vector<RationalMatrix> nilpotent_powers_;
  int weight_bound_;
  int nvars_;
  int degree_bound_;
};

/// t dt^-w v = dt^-(w+1) ((w+1) v + N v), extended O_S-linearly.
GMElement apply_t(const GMSystem& sys, const GMElement& x);
GMElement apply_dti(const GMElement& x);
GMElement apply_dt(const GMElement& x);
/// d/ds_i on coefficients (the e_j are flat).
GMElement apply_dsi(const GMElement& x, int i);
GMElement apply_dti_dsi(const GMElement& x, int i);
/// Projection onto the weight-k graded piece, identified with H (x) O_S.
HVector weight_component(const GMElement& x, int k);
/// s_i dt^{1-i} N^i applied to x.
GMElement nilpotent_step(const GMSystem& sys, const GMElement& x, int i);
/// prod_{i=1}^r exp(s_i dt^{1-i} N^i) applied to x.
GMElement exp_nilpotent_apply(const GMSystem& sys, const GMElement& x);

}  // namespace brieskorn
