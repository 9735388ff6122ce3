#include "homalg/linear_map.hpp"

#include <utility>

#include "homalg/error.hpp"

namespace homalg {

LinearMap::LinearMap(std::size_t cod, std::size_t dom) : cod_(cod), dom_(dom), e_(cod * dom) {}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) throw DimensionError("matrix has no rows");
  LinearMap m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.dom_) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < m.dom_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

LinearMap LinearMap::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> v;
  for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
  return from_rows(v);
}

LinearMap LinearMap::column(const std::vector<Scalar>& v) {
  LinearMap m(v.size(), 1);
  m.e_ = v;
  return m;
}

LinearMap LinearMap::row(const std::vector<Scalar>& v) {
  LinearMap m(1, v.size());
  m.e_ = v;
  return m;
}

LinearMap LinearMap::diagonal(const std::vector<Scalar>& d) {
  LinearMap m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<Scalar> LinearMap::column_of(std::size_t c) const {
  std::vector<Scalar> v(cod_);
  for (std::size_t r = 0; r < cod_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Scalar> LinearMap::apply(const std::vector<Scalar>& v) const {
  if (v.size() != dom_) throw DimensionError("cannot apply " + shape() + " map to vector of length " + std::to_string(v.size()));
  std::vector<Scalar> out(cod_);
  for (std::size_t r = 0; r < cod_; ++r)
    for (std::size_t c = 0; c < dom_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(dom_, cod_);
  for (std::size_t r = 0; r < cod_; ++r)
    for (std::size_t c = 0; c < dom_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool LinearMap::is_identity() const { return square() && *this == identity(cod_); }

std::string LinearMap::shape() const { return std::to_string(cod_) + "x" + std::to_string(dom_); }

LinearMap& LinearMap::operator+=(const LinearMap& o) {
  if (cod_ != o.cod_ || dom_ != o.dom_) throw DimensionError("cannot add " + shape() + " and " + o.shape());
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

LinearMap& LinearMap::operator*=(const Scalar& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
LinearMap operator-(const LinearMap& a, const LinearMap& b) { return a + Scalar(-1) * b; }
LinearMap operator*(const Scalar& s, LinearMap a) { return a *= s; }

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.dom() != g.cod())
    throw DimensionError("cannot compose " + f.shape() + " after " + g.shape());
  LinearMap out(f.cod(), g.dom());
  for (std::size_t r = 0; r < f.cod(); ++r)
    for (std::size_t k = 0; k < f.dom(); ++k) {
      const Scalar& a = f(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < g.dom(); ++c)
        if (!g(k, c).is_zero()) out(r, c) += a * g(k, c);
    }
  return out;
}

LinearMap compose(std::initializer_list<LinearMap> chain) {
  if (chain.size() == 0) throw DimensionError("empty composition");
  auto it = chain.end();
  LinearMap acc = *--it;
  while (it != chain.begin()) {
    --it;
    acc = compose(*it, acc);
  }
  return acc;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  LinearMap out(f.cod() * g.cod(), f.dom() * g.dom());
  for (std::size_t r1 = 0; r1 < f.cod(); ++r1)
    for (std::size_t c1 = 0; c1 < f.dom(); ++c1) {
      const Scalar& a = f(r1, c1);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < g.cod(); ++r2)
        for (std::size_t c2 = 0; c2 < g.dom(); ++c2)
          if (!g(r2, c2).is_zero()) out(r1 * g.cod() + r2, c1 * g.dom() + c2) = a * g(r2, c2);
    }
  return out;
}

LinearMap kron(std::initializer_list<LinearMap> factors) {
  if (factors.size() == 0) return LinearMap::identity(1);
  auto it = factors.begin();
  LinearMap acc = *it++;
  for (; it != factors.end(); ++it) acc = kron(acc, *it);
  return acc;
}

LinearMap flip(std::size_t dim_x, std::size_t dim_y) {
  if (dim_x == 0 || dim_y == 0) throw DimensionError("flip needs positive dimensions");
  LinearMap out(dim_x * dim_y, dim_x * dim_y);
  for (std::size_t i = 0; i < dim_x; ++i)
    for (std::size_t j = 0; j < dim_y; ++j) out(j * dim_x + i, i * dim_y + j) = 1;
  return out;
}

std::size_t rank(const LinearMap& f) {
  std::vector<Scalar> m = f.entries();
  const std::size_t rows = f.cod(), cols = f.dom();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p * cols + c].is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m[p * cols + k], m[r * cols + k]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i * cols + c].is_zero()) continue;
      Scalar factor = m[i * cols + c] / m[r * cols + c];
      for (std::size_t k = c; k < cols; ++k) m[i * cols + k] -= factor * m[r * cols + k];
    }
    ++r;
  }
  return r;
}

// Fraction-free Gauss-Jordan (Bareiss) on the row-scaled integer matrix [D*f | I].
LinearMap invert(const LinearMap& f) {
  if (!f.square()) throw DimensionError("cannot invert non-square " + f.shape() + " map");
  const std::size_t n = f.cod(), w = 2 * n;
  std::vector<mpz_class> scale(n);
  std::vector<mpz_class> m(n * w);
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f(r, c).raw().get_den_mpz_t());
    scale[r] = l;
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = f(r, c).raw();
      m[r * w + c] = q.get_num() * (l / q.get_den());
    }
    m[r * w + n + r] = 1;
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p * w + k] == 0) ++p;
    if (p == n) throw NotInvertibleError(n, rank(f));
    if (p != k)
      for (std::size_t c = 0; c < w; ++c) std::swap(m[p * w + c], m[k * w + c]);
    const mpz_class pivot = m[k * w + k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const mpz_class lead = m[i * w + k];
      for (std::size_t c = 0; c < w; ++c) {
        mpz_class v = pivot * m[i * w + c] - lead * m[k * w + c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i * w + c] = v;
      }
    }
    prev = pivot;
  }
  LinearMap inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      mpq_class q(m[r * w + n + c] * scale[c], m[r * w + r]);
      inv(r, c) = Scalar(q);
    }
  return inv;
}

LinearMap power(const LinearMap& f, unsigned k) {
  if (!f.square()) throw DimensionError("power of non-square " + f.shape() + " map");
  LinearMap acc = LinearMap::identity(f.cod());
  for (unsigned i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

DualBases dual_bases(std::size_t dim) {
  if (dim == 0) throw DimensionError("dual bases need positive dimension");
  DualBases b;
  for (std::size_t i = 0; i < dim; ++i) {
    LinearMap v(dim, 1), c(1, dim);
    v(i, 0) = 1;
    c(0, i) = 1;
    b.vectors.push_back(std::move(v));
    b.covectors.push_back(std::move(c));
  }
  return b;
}

}  // namespace homalg
