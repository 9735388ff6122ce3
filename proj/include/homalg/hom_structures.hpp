#pragma once

#include <cstddef>

#include "homalg/check_report.hpp"
#include "homalg/linear_map.hpp"

namespace homalg {

// A finite-dimensional space with a fixed automorphism alpha.
class ObjectWithAut {
 public:
  ObjectWithAut() : ObjectWithAut(LinearMap::identity(1)) {}
  explicit ObjectWithAut(LinearMap alpha);
  static ObjectWithAut plain(std::size_t dim) { return ObjectWithAut(LinearMap::identity(dim)); }

  std::size_t dim() const { return alpha_.cod(); }
  const LinearMap& alpha() const { return alpha_; }
  const LinearMap& alpha_inverse() const { return inverse_; }
  // alpha^k for any integer k.
  LinearMap alpha_pow(int k) const;

  friend bool operator==(const ObjectWithAut& a, const ObjectWithAut& b) { return a.alpha_ == b.alpha_; }
  friend ObjectWithAut tensor(const ObjectWithAut& x, const ObjectWithAut& y);

 private:
  ObjectWithAut(LinearMap alpha, LinearMap inverse) : alpha_(std::move(alpha)), inverse_(std::move(inverse)) {}
  LinearMap alpha_, inverse_;
};

ObjectWithAut tensor(const ObjectWithAut& x, const ObjectWithAut& y);

struct HomAlgebra {
  ObjectWithAut carrier;
  LinearMap mult;  // d x d^2
  LinearMap unit;  // d x 1

  HomAlgebra() = default;
  HomAlgebra(ObjectWithAut carrier, LinearMap mult, LinearMap unit);
  std::size_t dim() const { return carrier.dim(); }
  const LinearMap& alpha() const { return carrier.alpha(); }
  LinearMap alpha_pow(int k) const { return carrier.alpha_pow(k); }
  friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;
};

struct HomCoalgebra {
  ObjectWithAut carrier;
  LinearMap comult;  // d^2 x d
  LinearMap counit;  // 1 x d

  HomCoalgebra() = default;
  HomCoalgebra(ObjectWithAut carrier, LinearMap comult, LinearMap counit);
  std::size_t dim() const { return carrier.dim(); }
  const LinearMap& alpha() const { return carrier.alpha(); }
  LinearMap alpha_pow(int k) const { return carrier.alpha_pow(k); }
  friend bool operator==(const HomCoalgebra&, const HomCoalgebra&) = default;
};

struct HomBialgebra {
  HomAlgebra algebra;
  HomCoalgebra coalgebra;

  HomBialgebra() = default;
  HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra);
  std::size_t dim() const { return algebra.dim(); }
  const LinearMap& alpha() const { return algebra.alpha(); }
  LinearMap alpha_pow(int k) const { return algebra.alpha_pow(k); }
  const LinearMap& mult() const { return algebra.mult; }
  const LinearMap& unit() const { return algebra.unit; }
  const LinearMap& comult() const { return coalgebra.comult; }
  const LinearMap& counit() const { return coalgebra.counit; }
  friend bool operator==(const HomBialgebra&, const HomBialgebra&) = default;
};

struct HomHopfAlgebra {
  HomBialgebra bialgebra;
  LinearMap antipode;

  HomHopfAlgebra() = default;
  HomHopfAlgebra(HomBialgebra bialgebra, LinearMap antipode);
  std::size_t dim() const { return bialgebra.dim(); }
  friend bool operator==(const HomHopfAlgebra&, const HomHopfAlgebra&) = default;
};

struct RightHomModule {
  ObjectWithAut carrier;
  LinearMap action;  // d_U x (d_U * d_A)
  std::size_t dim() const { return carrier.dim(); }
};

struct RightHomComodule {
  ObjectWithAut carrier;
  LinearMap coaction;  // (d_U * d_C) x d_U
  std::size_t dim() const { return carrier.dim(); }
};

struct CheckOptions {
  // Multiplicativity / comultiplicativity of alpha, reported under group "alpha-morphism".
  bool alpha_morphism = true;
};

CheckReport check_hom_algebra(const HomAlgebra& a, CheckOptions opts = {});
CheckReport check_hom_coalgebra(const HomCoalgebra& c, CheckOptions opts = {});
CheckReport check_hom_bialgebra(const HomBialgebra& b, CheckOptions opts = {});
CheckReport check_hom_hopf(const HomHopfAlgebra& h, CheckOptions opts = {});
CheckReport check_right_module(const RightHomModule& m, const HomAlgebra& a, CheckOptions opts = {});
CheckReport check_right_comodule(const RightHomComodule& m, const HomCoalgebra& c, CheckOptions opts = {});

// Throw PreconditionError naming the first failing axiom when the report fails.
void require(const CheckReport& report, const std::string& what);

// (A*)^cop with the alpha^-2 twisted transpose comultiplication.
HomCoalgebra dual_coalgebra(const HomAlgebra& a);
// (B*)^cop with the alpha^-2 twisted convolution product and unit counit.
HomBialgebra dual_bialgebra(const HomBialgebra& b);

// Requires classical input (alpha = id) and a bialgebra automorphism alpha.
HomBialgebra yau_twist(const HomBialgebra& classical, const LinearMap& alpha);
// The antipode is kept as is.
HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const LinearMap& alpha);

RightHomModule regular_module(const HomAlgebra& a);
RightHomComodule regular_comodule(const HomCoalgebra& c);

}  // namespace homalg
