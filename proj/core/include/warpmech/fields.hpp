#pragma once

#include <functional>
#include <utility>

#include "warpmech/dual.hpp"
#include "warpmech/linalg.hpp"

namespace warpmech {

// Coordinate chart a phase-space point lives in. Weighted brackets and the
// whole hierarchy machinery are defined on action coordinates only.
enum class Chart { Original, Action };

// Type-erased fields evaluable on plain points and on dual-lifted points.
// Constructed from a generic callable; the callable may itself nest deeper
// duals internally (e.g. a Hamiltonian vector field differentiating its
// Hamiltonian), which stays invisible at this interface.

class ScalarField {
 public:
  ScalarField() = default;
  template <class F, class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, ScalarField>>>
  ScalarField(F f) : re_(f), du_(std::move(f)) {}

  double operator()(const Vec8<double>& x) const { return re_(x); }
  dual operator()(const Vec8<dual>& x) const { return du_(x); }

 private:
  std::function<double(const Vec8<double>&)> re_;
  std::function<dual(const Vec8<dual>&)> du_;
};

class VectorField {
 public:
  VectorField() = default;
  template <class F, class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, VectorField>>>
  VectorField(F f) : re_(f), du_(std::move(f)) {}

  Vec8<double> operator()(const Vec8<double>& x) const { return re_(x); }
  Vec8<dual> operator()(const Vec8<dual>& x) const { return du_(x); }

 private:
  std::function<Vec8<double>(const Vec8<double>&)> re_;
  std::function<Vec8<dual>(const Vec8<dual>&)> du_;
};

// Mixed (1,1)-tensor field; component [i][j] maps input slot j to output
// slot i. Bivectors and two-forms reuse the same storage with their own
// index conventions (see phase.hpp).
class TensorField {
 public:
  TensorField() = default;
  template <class F, class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, TensorField>>>
  TensorField(F f) : re_(f), du_(std::move(f)) {}

  Mat8<double> operator()(const Vec8<double>& x) const { return re_(x); }
  Mat8<dual> operator()(const Vec8<dual>& x) const { return du_(x); }

 private:
  std::function<Mat8<double>(const Vec8<double>&)> re_;
  std::function<Mat8<dual>(const Vec8<dual>&)> du_;
};

using BivectorField = TensorField;
using TwoFormField = TensorField;

}  // namespace warpmech
