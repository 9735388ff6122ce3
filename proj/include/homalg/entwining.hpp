#pragma once

#include <optional>

#include "homalg/hom_structures.hpp"
#include "homalg/monoidal.hpp"
#include "homalg/smash_coproduct.hpp"

namespace homalg {

// Phi : H (x) A -> A (x) H, written Phi(h (x) a) = a_Phi (x) h^Phi.
struct EntwiningMap {
  HomCoalgebra h;
  HomAlgebra a;
  LinearMap phi;
  // Present for monoidal data, where H and A are both bialgebras.
  std::optional<HomAlgebra> h_algebra;
  std::optional<HomCoalgebra> a_coalgebra;

  EntwiningMap(HomCoalgebra h, HomAlgebra a, LinearMap phi);
  EntwiningMap(const HomBialgebra& h, const HomBialgebra& a, LinearMap phi);
  bool has_bialgebras() const { return h_algebra && a_coalgebra; }
  HomBialgebra h_bialgebra() const;
  HomBialgebra a_bialgebra() const;
};

// alpha-compatibility and E1-E4; E5-E6 as well when monoidal is set.
CheckReport check_entwining(const EntwiningMap& e, bool monoidal = false);

// Dual-basis correspondence with cotwistors on (A*)^cop (x) H.
Cotwistor cotwistor_from_entwining(const EntwiningMap& e, Validation v = Validation::checked);
EntwiningMap entwining_from_cotwistor(const Cotwistor& c, const HomAlgebra& a, Validation v = Validation::checked);
EntwiningMap entwining_from_cotwistor(const Cotwistor& c, const HomBialgebra& a, Validation v = Validation::checked);

struct EntwinedModule {
  ObjectWithAut carrier;
  LinearMap action;    // U (x) A -> U
  LinearMap coaction;  // U -> U (x) H
  int n = 0;
  std::size_t dim() const { return carrier.dim(); }
  RightHomModule module() const { return {carrier, action}; }
  RightHomComodule comodule() const { return {carrier, coaction}; }
};

CheckReport check_entwined_module(const EntwinedModule& u, const EntwiningMap& e);

EntwinedModule canonical_module_HA(const EntwiningMap& e, int n);
EntwinedModule canonical_module_AH(const EntwiningMap& e, int n);
// The ground field with action through the counit of A and coaction through the unit of H.
EntwinedModule unit_entwined_module(const EntwiningMap& e, int n);
// h (x) g -> alpha^-1(g_1) (x) alpha^-1(h) alpha^n(g_2).
EntwiningMap hopf_module_entwining(const HomBialgebra& h, int n);

EntwinedModule tensor_entwined(MonoidalContext ctx, const EntwinedModule& u, const EntwinedModule& v,
                               const EntwiningMap& e, Validation val = Validation::checked);

HomCoalgebra codouble(const EntwiningMap& e, Validation v = Validation::checked);
HomBialgebra codouble_bialgebra(const EntwiningMap& e, Validation v = Validation::checked);

// Entwined modules of degree n  <->  comodules over the codouble, through the bicomodule
// with (A*)^cop-coaction u -> sum_i u.e_i (x) e^i.
RightHomComodule to_codouble_comodule(const EntwinedModule& u, const EntwiningMap& e);
EntwinedModule from_codouble_comodule(const RightHomComodule& c, const EntwiningMap& e, int n);

}  // namespace homalg
