#pragma once

#include <optional>

#include "homalg/hom_structures.hpp"

namespace homalg {

enum class Validation { checked, unchecked };

// phi : B (x) H -> H (x) B, written phi(b (x) h) = h^phi (x) b^phi.
struct Cotwistor {
  HomCoalgebra b, h;
  LinearMap phi;
  // Present when both sides are bialgebras; needed for the monoidal axioms.
  std::optional<HomAlgebra> b_algebra, h_algebra;

  Cotwistor(HomCoalgebra b, HomCoalgebra h, LinearMap phi);
  Cotwistor(const HomBialgebra& b, const HomBialgebra& h, LinearMap phi);
  bool has_bialgebras() const { return b_algebra && h_algebra; }
  HomBialgebra b_bialgebra() const;
  HomBialgebra h_bialgebra() const;
};

// alpha-compatibility and M1-M4; M5-M6 as well when monoidal is set.
CheckReport check_cotwistor(const Cotwistor& c, bool monoidal = false);

HomCoalgebra build_smash_coproduct(const Cotwistor& c, Validation v = Validation::checked);

// Product (a (x) h)(b (x) g) = ab (x) gh, or ab (x) hg.
enum class ProductOrder { gh, hg };
HomBialgebra build_smash_bialgebra(const Cotwistor& c, ProductOrder order, Validation v = Validation::checked);

struct Bicomodule {
  ObjectWithAut carrier;
  LinearMap h_coaction;  // U -> U (x) H
  LinearMap b_coaction;  // U -> U (x) B
  int n = 0;
  std::size_t dim() const { return carrier.dim(); }
};

CheckReport check_bicomodule(const Bicomodule& m, const Cotwistor& c);

// Comodules over the smash coproduct B (x) H  <->  degree-n bicomodules.
Bicomodule p_functor(int n, const RightHomComodule& u, const Cotwistor& c, Validation v = Validation::checked);
RightHomComodule q_functor(const Bicomodule& m, const Cotwistor& c, Validation v = Validation::checked);
// The same data with the B-coaction shifted by alpha_B^{n'-n}; valid in degree n'.
Bicomodule transport_bicomodule(const Bicomodule& m, const Cotwistor& c, int new_n);

}  // namespace homalg
