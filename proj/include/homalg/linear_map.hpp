#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

// Dense matrix of a linear map dom -> cod, stored row-major (cod rows, dom columns).
// Tensor factors are flattened row-major: e_i (x) e_j of X (x) Y has index i*dim(Y)+j.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t cod, std::size_t dom);

  static LinearMap zero(std::size_t cod, std::size_t dom) { return LinearMap(cod, dom); }
  static LinearMap identity(std::size_t n);
  static LinearMap from_rows(const std::vector<std::vector<Scalar>>& rows);
  static LinearMap from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static LinearMap column(const std::vector<Scalar>& v);
  static LinearMap row(const std::vector<Scalar>& v);
  static LinearMap diagonal(const std::vector<Scalar>& d);

  std::size_t cod() const { return cod_; }
  std::size_t dom() const { return dom_; }
  bool square() const { return cod_ == dom_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return e_[r * dom_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return e_[r * dom_ + c]; }
  const std::vector<Scalar>& entries() const { return e_; }

  std::vector<Scalar> column_of(std::size_t c) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  LinearMap transpose() const;
  bool is_identity() const;
  std::string shape() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.cod_ == b.cod_ && a.dom_ == b.dom_ && a.e_ == b.e_;
  }
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

  LinearMap& operator+=(const LinearMap& o);
  LinearMap& operator*=(const Scalar& s);

 private:
  std::size_t cod_ = 0;
  std::size_t dom_ = 0;
  std::vector<Scalar> e_;
};

LinearMap operator+(LinearMap a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator*(const Scalar& s, LinearMap a);

// f after g.
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap compose(std::initializer_list<LinearMap> chain);
LinearMap kron(const LinearMap& f, const LinearMap& g);
LinearMap kron(std::initializer_list<LinearMap> factors);
// e_i (x) e_j  ->  e_j (x) e_i for i < dim_x, j < dim_y.
LinearMap flip(std::size_t dim_x, std::size_t dim_y);
LinearMap invert(const LinearMap& f);
std::size_t rank(const LinearMap& f);
// Non-negative powers only; negative powers need invert.
LinearMap power(const LinearMap& f, unsigned k);

struct DualBases {
  std::vector<LinearMap> vectors;    // dim x 1
  std::vector<LinearMap> covectors;  // 1 x dim
};
DualBases dual_bases(std::size_t dim);

}  // namespace homalg
