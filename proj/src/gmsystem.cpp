#include "brieskorn/gmsystem.hpp"

#include <algorithm>

namespace brieskorn {

// ---------------------------------------------------------------- HVector

HVector::HVector(int dim, int nvars, int degree_bound) : nvars_(nvars), degree_bound_(degree_bound) {
  if (dim < 1) throw StructuralError("HVector dimension must be positive");
  coords_.assign(static_cast<std::size_t>(dim), Series(nvars, degree_bound));
}

HVector::HVector(std::vector<Series> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw StructuralError("HVector dimension must be positive");
  nvars_ = coords_.front().nvars();
  degree_bound_ = coords_.front().degree_bound();
  for (const auto& c : coords_)
    if (c.nvars() != nvars_ || c.degree_bound() != degree_bound_)
      throw StructuralError("HVector coordinates have mixed series shapes");
}

HVector HVector::basis(int dim, int nvars, int degree_bound, int j) {
  HVector v(dim, nvars, degree_bound);
  if (j < 0 || j >= dim) throw StructuralError("basis index out of range");
  v[j] = Series::one(nvars, degree_bound);
  return v;
}

HVector HVector::constant(std::span<const Rational> coords, int nvars, int degree_bound) {
  HVector v(static_cast<int>(coords.size()), nvars, degree_bound);
  for (std::size_t j = 0; j < coords.size(); ++j)
    v.coords_[j] = Series::constant(nvars, degree_bound, coords[j]);
  return v;
}

bool HVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Series& s) { return s.is_zero(); });
}

HVector HVector::operator-() const {
  HVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

HVector operator+(const HVector& a, const HVector& b) {
  if (a.dim() != b.dim()) throw StructuralError("HVector dimension mismatch");
  HVector out = a;
  for (std::size_t j = 0; j < out.coords_.size(); ++j) out.coords_[j] += b.coords_[j];
  return out;
}

HVector operator-(const HVector& a, const HVector& b) {
  if (a.dim() != b.dim()) throw StructuralError("HVector dimension mismatch");
  HVector out = a;
  for (std::size_t j = 0; j < out.coords_.size(); ++j) out.coords_[j] -= b.coords_[j];
  return out;
}

HVector HVector::scaled(const Series& f) const {
  HVector out = *this;
  for (auto& c : out.coords_)
    if (!c.is_zero()) c = c * f;
  return out;
}

HVector HVector::scaled(const Rational& q) const {
  HVector out = *this;
  for (auto& c : out.coords_) c = c.scaled(q);
  return out;
}

HVector HVector::apply(const RationalMatrix& m) const {
  if (m.rows() != coords_.size() || m.cols() != coords_.size()) throw StructuralError("matrix/HVector shape mismatch");
  HVector out(dim(), nvars_, degree_bound_);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (std::size_t j = 0; j < coords_.size(); ++j)
      if (sgn(m(i, j)) != 0 && !coords_[j].is_zero()) out.coords_[i] += coords_[j].scaled(m(i, j));
  return out;
}

HVector HVector::derivative(int i) const {
  HVector out = *this;
  for (auto& c : out.coords_) c = partial_derivative(c, i);
  return out;
}

HVector HVector::truncate(int degree) const {
  std::vector<Series> coords;
  coords.reserve(coords_.size());
  for (const auto& c : coords_) coords.push_back(c.truncate(degree));
  return HVector(std::move(coords));
}

std::vector<Rational> HVector::at_origin() const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.constant_term());
  return out;
}

std::string HVector::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) out += (j ? ", " : "") + coords_[j].to_string();
  return out + ")";
}

// -------------------------------------------------------------- GMElement

GMElement::GMElement(GMShape shape) : GMElement(shape, shape.weight_bound) {}

GMElement::GMElement(GMShape shape, int valid_through)
    : shape_(shape), valid_through_(std::min(valid_through, shape.weight_bound)) {}

GMElement GMElement::single(GMShape shape, int weight, HVector v) {
  GMElement x(shape);
  x.add(weight, v);
  return x;
}

void GMElement::add(int weight, const HVector& v) {
  if (v.dim() != shape_.dim || v.nvars() != shape_.nvars || v.degree_bound() != shape_.degree_bound)
    throw StructuralError("HVector shape does not match the element");
  if (weight > valid_through_ || v.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(weight, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HVector GMElement::component(int k) const {
  if (k > valid_through_)
    throw PrecisionError("weight " + std::to_string(k) + " beyond valid_through " + std::to_string(valid_through_));
  auto it = terms_.find(k);
  if (it == terms_.end()) return HVector(shape_.dim, shape_.nvars, shape_.degree_bound);
  return it->second;
}

std::optional<int> GMElement::lowest_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

GMElement GMElement::shifted(int k) const {
  GMElement out(shape_, std::min(valid_through_ + k, shape_.weight_bound));
  for (const auto& [w, v] : terms_) out.add(w + k, v);
  return out;
}

GMElement GMElement::scaled(const Series& f) const {
  GMElement out(shape_, valid_through_);
  if (f.is_zero()) return out;
  for (const auto& [w, v] : terms_) out.add(w, v.scaled(f));
  return out;
}

GMElement GMElement::scaled(const Rational& q) const {
  GMElement out(shape_, valid_through_);
  for (const auto& [w, v] : terms_) out.add(w, v.scaled(q));
  return out;
}

GMElement GMElement::apply_matrix(const RationalMatrix& m) const {
  GMElement out(shape_, valid_through_);
  for (const auto& [w, v] : terms_) out.add(w, v.apply(m));
  return out;
}

GMElement GMElement::derivative(int i) const {
  GMElement out(shape_, valid_through_);
  for (const auto& [w, v] : terms_) out.add(w, v.derivative(i));
  return out;
}

GMElement GMElement::truncate_series(int degree) const {
  GMShape shape = shape_;
  shape.degree_bound = degree;
  GMElement out(shape, valid_through_);
  for (const auto& [w, v] : terms_) out.add(w, v.truncate(degree));
  return out;
}

GMElement GMElement::restrict_to(int bound) const {
  GMElement out(shape_, std::min(bound, valid_through_));
  for (const auto& [w, v] : terms_) out.add(w, v);
  return out;
}

GMElement GMElement::at_origin() const {
  GMElement out(shape_, valid_through_);
  for (const auto& [w, v] : terms_) {
    auto c = v.at_origin();
    out.add(w, HVector::constant(c, shape_.nvars, shape_.degree_bound));
  }
  return out;
}

GMElement GMElement::operator-() const {
  GMElement out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

void GMElement::check_same_shape(const GMElement& b) const {
  if (!(shape_ == b.shape_)) throw StructuralError("GMElement shape mismatch");
}

GMElement operator+(const GMElement& a, const GMElement& b) {
  a.check_same_shape(b);
  GMElement out(a.shape_, std::min(a.valid_through_, b.valid_through_));
  for (const auto& [w, v] : a.terms_) out.add(w, v);
  for (const auto& [w, v] : b.terms_) out.add(w, v);
  return out;
}

GMElement operator-(const GMElement& a, const GMElement& b) { return a + (-b); }

std::string GMElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, v] : terms_) {
    if (!out.empty()) out += "\n";
    out += "dt^-" + std::to_string(w) + " : " + v.to_string();
  }
  return out;
}

bool equal_through(const GMElement& a, const GMElement& b, int bound) {
  if (bound > a.valid_through() || bound > b.valid_through())
    throw PrecisionError("comparison through weight " + std::to_string(bound) + " exceeds known precision");
  GMElement diff = a.restrict_to(bound) - b.restrict_to(bound);
  return diff.is_zero();
}

// --------------------------------------------------------------- GMSystem

GMSystem::GMSystem(int r, RationalMatrix nilpotent, int weight_bound, int nvars, int degree_bound)
    : r_(r), nilpotent_(std::move(nilpotent)), weight_bound_(weight_bound), nvars_(nvars), degree_bound_(degree_bound) {
  if (r < 1) throw StructuralError("rank parameter r must be at least 1");
  if (nilpotent_.rows() != static_cast<std::size_t>(r + 1) || !nilpotent_.square())
    throw StructuralError("nilpotent matrix must be (r+1)x(r+1)");
  if (!nilpotent_.power(static_cast<unsigned>(r + 1)).is_zero()) throw DomainError("N^{r+1} != 0");
  if (weight_bound < r + 2) throw StructuralError("weight bound K must be at least r+2");
  if (nvars < 1 || nvars > kMaxSeriesVars) throw StructuralError("unsupported number of deformation parameters");
  for (int k = 0; k <= r + 1; ++k) nilpotent_powers_.push_back(nilpotent_.power(static_cast<unsigned>(k)));
}

GMSystem GMSystem::constant(int r, int weight_bound, int degree_bound) {
  return GMSystem(r, RationalMatrix::zero(static_cast<std::size_t>(r + 1)), weight_bound, r, degree_bound);
}

GMSystem GMSystem::shifted(int r, int weight_bound, int degree_bound) {
  return GMSystem(r, RationalMatrix::shift(static_cast<std::size_t>(r + 1)), weight_bound, r, degree_bound);
}

// -------------------------------------------------------------- operators

GMElement apply_t(const GMSystem& sys, const GMElement& x) {
  GMElement out(x.shape(), std::min(x.valid_through() + 1, x.shape().weight_bound));
  const bool has_n = !sys.has_zero_nilpotent();
  for (const auto& [w, v] : x.terms()) {
    HVector image = v.scaled(Rational(w + 1));
    if (has_n) image += v.apply(sys.nilpotent());
    out.add(w + 1, image);
  }
  return out;
}

GMElement apply_dti(const GMElement& x) { return x.shifted(1); }

GMElement apply_dt(const GMElement& x) { return x.shifted(-1); }

GMElement apply_dsi(const GMElement& x, int i) {
  if (i < 1 || i > x.shape().nvars) throw StructuralError("d/ds_i index out of range");
  return x.derivative(i);
}

GMElement apply_dti_dsi(const GMElement& x, int i) { return apply_dti(apply_dsi(x, i)); }

HVector weight_component(const GMElement& x, int k) { return x.component(k); }

GMElement nilpotent_step(const GMSystem& sys, const GMElement& x, int i) {
  if (i < 1 || i > sys.r()) throw StructuralError("nilpotent step index out of range");
  return x.shifted(i - 1).apply_matrix(sys.nilpotent_power(i)).scaled(sys.s(i));
}

GMElement exp_nilpotent_apply(const GMSystem& sys, const GMElement& x) {
  if (sys.has_zero_nilpotent()) return x;
  GMElement current = x;
  for (int i = sys.r(); i >= 1; --i) {
    GMElement sum = current;
    GMElement term = current;
    for (int k = 1; k <= sys.dim(); ++k) {
      term = nilpotent_step(sys, term, i).scaled(Rational(1, k));
      if (term.is_zero()) break;
      sum += term;
    }
    current = sum;
  }
  return current;
}

}  // namespace brieskorn
