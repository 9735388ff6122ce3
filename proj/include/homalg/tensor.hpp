#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "homalg/linear_map.hpp"

namespace homalg {

std::size_t product(const std::vector<std::size_t>& dims);
std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& dims);
std::size_t flatten(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims);

// Sparse element of X_1 (x) ... (x) X_r; terms sorted by flat index, no zeros.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<std::pair<std::size_t, Scalar>> terms;

  static Tensor basis(std::vector<std::size_t> shape, std::size_t index);
  static Tensor from_column(std::vector<std::size_t> shape, const LinearMap& column);
  LinearMap column() const;
  std::string str() const;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape == b.shape && a.terms == b.terms;
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }
};

// A multilinear map assembled from structure maps applied to runs of adjacent slots,
// slot permutations and inserted constants. Evaluated sparsely, term by term.
class Wiring {
 public:
  explicit Wiring(std::vector<std::size_t> input_dims);

  // Replace slots [first, first+arity) by the output of f, which has shape out_dims.
  // arity 0 inserts a constant (f is a column); empty out_dims contracts (f is a row).
  Wiring& map(std::size_t first, std::size_t arity, const LinearMap& f, std::vector<std::size_t> out_dims);
  Wiring& map(std::size_t slot, const LinearMap& f) { return map(slot, 1, f, {f.cod()}); }
  Wiring& merge(std::size_t first, const LinearMap& f) { return map(first, 2, f, {f.cod()}); }
  Wiring& split(std::size_t slot, const LinearMap& f, std::size_t d1, std::size_t d2) {
    return map(slot, 1, f, {d1, d2});
  }
  Wiring& contract(std::size_t slot, const LinearMap& covector) { return map(slot, 1, covector, {}); }
  Wiring& insert(std::size_t slot, const LinearMap& vector) { return map(slot, 0, vector, {vector.cod()}); }
  // New slot k is old slot order[k].
  Wiring& permute(std::vector<std::size_t> order);
  Wiring& then(const Wiring& next);

  const std::vector<std::size_t>& input_dims() const { return in_; }
  const std::vector<std::size_t>& output_dims() const { return out_; }

  Tensor operator()(const Tensor& t) const;
  Tensor on_basis(std::size_t index) const { return (*this)(Tensor::basis(in_, index)); }
  LinearMap matrix() const;

 private:
  struct Step {
    bool is_permutation = false;
    std::size_t first = 0, arity = 0;
    std::vector<std::size_t> out_dims;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
    std::vector<std::size_t> order;
    std::vector<std::size_t> dims_before;
  };
  std::vector<std::size_t> in_, out_;
  std::vector<Step> steps_;
};

}  // namespace homalg
