#include "homalg/tensor.hpp"

#include <algorithm>
#include <unordered_map>

#include "homalg/error.hpp"

namespace homalg {

namespace {

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

class Accumulator {
 public:
  void add(std::size_t index, const Scalar& v) {
    auto [it, fresh] = pos_.try_emplace(index, terms_.size());
    if (fresh)
      terms_.emplace_back(index, v);
    else
      terms_[it->second].second += v;
  }
  std::vector<std::pair<std::size_t, Scalar>> take() {
    std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return std::move(terms_);
  }

 private:
  std::unordered_map<std::size_t, std::size_t> pos_;
  std::vector<std::pair<std::size_t, Scalar>> terms_;
};

}  // namespace

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
  return digits;
}

std::size_t flatten(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

Tensor Tensor::basis(std::vector<std::size_t> shape, std::size_t index) {
  Tensor t{std::move(shape), {}};
  t.terms.emplace_back(index, Scalar(1));
  return t;
}

Tensor Tensor::from_column(std::vector<std::size_t> shape, const LinearMap& column) {
  if (column.dom() != 1 || column.cod() != product(shape))
    throw DimensionError("column " + column.shape() + " does not fit shape " + dims_str(shape));
  Tensor t{std::move(shape), {}};
  for (std::size_t i = 0; i < column.cod(); ++i)
    if (!column(i, 0).is_zero()) t.terms.emplace_back(i, column(i, 0));
  return t;
}

LinearMap Tensor::column() const {
  LinearMap c(product(shape), 1);
  for (const auto& [i, v] : terms) c(i, 0) = v;
  return c;
}

std::string Tensor::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [i, v] : terms) {
    if (!s.empty()) s += " + ";
    s += v.str() + "*e" + dims_str(unflatten(i, shape));
  }
  return s;
}

Wiring::Wiring(std::vector<std::size_t> input_dims) : in_(std::move(input_dims)), out_(in_) {}

Wiring& Wiring::map(std::size_t first, std::size_t arity, const LinearMap& f, std::vector<std::size_t> out_dims) {
  if (first + arity > out_.size())
    throw DimensionError("slots [" + std::to_string(first) + "," + std::to_string(first + arity) +
                         ") out of range for shape " + dims_str(out_));
  std::vector<std::size_t> mid(out_.begin() + first, out_.begin() + first + arity);
  if (product(mid) != f.dom() || product(out_dims) != f.cod())
    throw DimensionError("map " + f.shape() + " does not fit slots " + dims_str(mid) + " -> " + dims_str(out_dims));
  Step s;
  s.first = first;
  s.arity = arity;
  s.out_dims = out_dims;
  s.dims_before = out_;
  s.columns.resize(f.dom());
  for (std::size_t c = 0; c < f.dom(); ++c)
    for (std::size_t r = 0; r < f.cod(); ++r)
      if (!f(r, c).is_zero()) s.columns[c].emplace_back(r, f(r, c));
  out_.erase(out_.begin() + first, out_.begin() + first + arity);
  out_.insert(out_.begin() + first, out_dims.begin(), out_dims.end());
  steps_.push_back(std::move(s));
  return *this;
}

Wiring& Wiring::permute(std::vector<std::size_t> order) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != k || sorted.size() != out_.size())
      throw DimensionError("invalid permutation of " + std::to_string(out_.size()) + " slots");
  Step s;
  s.is_permutation = true;
  s.order = order;
  s.dims_before = out_;
  std::vector<std::size_t> next(out_.size());
  for (std::size_t k = 0; k < order.size(); ++k) next[k] = out_[order[k]];
  out_ = next;
  steps_.push_back(std::move(s));
  return *this;
}

Wiring& Wiring::then(const Wiring& next) {
  if (next.in_ != out_) throw DimensionError("cannot chain " + dims_str(out_) + " into " + dims_str(next.in_));
  steps_.insert(steps_.end(), next.steps_.begin(), next.steps_.end());
  out_ = next.out_;
  return *this;
}

Tensor Wiring::operator()(const Tensor& input) const {
  if (input.shape != in_) throw DimensionError("input shape " + dims_str(input.shape) + " expected " + dims_str(in_));
  std::vector<std::pair<std::size_t, Scalar>> terms = input.terms;
  for (const Step& s : steps_) {
    Accumulator acc;
    const auto& d = s.dims_before;
    if (s.is_permutation) {
      std::vector<std::size_t> nd(d.size()), digits(d.size());
      for (std::size_t k = 0; k < d.size(); ++k) nd[k] = d[s.order[k]];
      for (const auto& [idx, v] : terms) {
        auto old = unflatten(idx, d);
        for (std::size_t k = 0; k < d.size(); ++k) digits[k] = old[s.order[k]];
        acc.add(flatten(digits, nd), v);
      }
    } else {
      std::size_t mid = 1, suffix = 1;
      for (std::size_t k = s.first; k < s.first + s.arity; ++k) mid *= d[k];
      for (std::size_t k = s.first + s.arity; k < d.size(); ++k) suffix *= d[k];
      const std::size_t out_mid = product(s.out_dims);
      for (const auto& [idx, v] : terms) {
        const std::size_t suf = idx % suffix, rest = idx / suffix;
        const std::size_t col = rest % mid, pre = rest / mid;
        for (const auto& [row, c] : s.columns[col]) acc.add((pre * out_mid + row) * suffix + suf, v * c);
      }
    }
    terms = acc.take();
  }
  return Tensor{out_, std::move(terms)};
}

LinearMap Wiring::matrix() const {
  LinearMap m(product(out_), product(in_));
  for (std::size_t c = 0; c < m.dom(); ++c)
    for (const auto& [r, v] : on_basis(c).terms) m(r, c) = v;
  return m;
}

}  // namespace homalg
