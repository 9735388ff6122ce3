#pragma once

#include <optional>
#include <vector>

#include "homalg/entwining.hpp"

namespace homalg {

// ---- Doi-Hopf ----

// A right H-comodule algebra; the coalgebra part is only needed for the monoidal criterion.
struct ComoduleAlgebra {
  HomAlgebra algebra;
  LinearMap coaction;  // A -> A (x) H
  std::optional<HomCoalgebra> coalgebra;
  std::size_t dim() const { return algebra.dim(); }
};

// A right H-module coalgebra; the algebra part is only needed for the monoidal criterion.
struct ModuleCoalgebra {
  HomCoalgebra coalgebra;
  LinearMap action;  // C (x) H -> C
  std::optional<HomAlgebra> algebra;
  std::size_t dim() const { return coalgebra.dim(); }
};

struct DoiHopfDatum {
  HomBialgebra h;
  ComoduleAlgebra a;
  ModuleCoalgebra c;
  int k = 0;
  int m = 0;
};

// U is a right A-module and a right C-comodule.
struct DoiHopfModule {
  ObjectWithAut carrier;
  LinearMap action;
  LinearMap coaction;
};

CheckReport check_comodule_algebra(const ComoduleAlgebra& a, const HomBialgebra& h);
CheckReport check_module_coalgebra(const ModuleCoalgebra& c, const HomBialgebra& h);
CheckReport check_doi_hopf_datum(const DoiHopfDatum& d);
// The k-th Doi-Hopf condition with k = d.k.
CheckReport check_doi_hopf_module(const DoiHopfModule& u, const DoiHopfDatum& d);

// H coacting on itself by Delta and acting on itself by mu, with bialgebra parts attached.
DoiHopfDatum doi_self_datum(const HomBialgebra& h, int k, int m);

// c (x) a -> alpha_A^-1(a_(0)) (x) alpha_C^-1(c) . alpha_H^m(a_(1)).
EntwiningMap doi_hopf_entwining(const DoiHopfDatum& d, Validation v = Validation::checked);
HomCoalgebra doi_codouble(const DoiHopfDatum& d, Validation v = Validation::checked);
CheckReport check_doi_monoidal(const DoiHopfDatum& d);

// ---- Long dimodules ----

struct LongDimodule {
  ObjectWithAut carrier;
  LinearMap action;
  LinearMap coaction;
  std::size_t dim() const { return carrier.dim(); }
};

EntwiningMap long_entwining(const HomBialgebra& h);
CheckReport check_long_dimodule(const LongDimodule& u, const HomBialgebra& h);
// Dimodule structures on H and on the ground field built from mu, Delta and the trivial
// (co)actions twisted by powers of alpha, filtered by check_long_dimodule.
std::vector<LongDimodule> long_candidates(const HomBialgebra& h);

// u (x) v -> alpha_U^-1(u) . alpha_H^m(v_(1)) (x) alpha_V^-1(v_(0)).
LinearMap d_map_xi(int m, const LongDimodule& u, const LongDimodule& v, const HomBialgebra& h);
// (xi_UV (x) id) X = X (xi_UV (x) id) on (U (x) V) (x) W, where X = a^-1 (id (x) xi_VW) a.
CheckReport check_d_equation(MonoidalContext ctx, int m, const LongDimodule& u, const LongDimodule& v,
                             const LongDimodule& w, const HomBialgebra& h);

HomBialgebra long_codouble(const HomBialgebra& h);
// zeta(f (x) x, f' (x) y) = f(alpha^q(y)) eps(x) f'(1), a covector on D (x) D.
LinearMap zeta_form(int q, const HomBialgebra& h);
// Convolution of covectors F, G on D^{(x) k}: (F * G)(t) = F(alpha^-2 t_1) G(alpha^-2 t_2),
// with t_1 (x) t_2 the factorwise coproduct.
Wiring convolution(const LinearMap& f, const LinearMap& g, const HomBialgebra& d, std::size_t k);
CheckReport check_zeta_d_type(int q, const HomBialgebra& h);

// ---- Yetter-Drinfeld ----

struct YDModule {
  ObjectWithAut carrier;
  LinearMap action;
  LinearMap coaction;
  int p = 0;
  std::size_t dim() const { return carrier.dim(); }
};

EntwiningMap yd_entwining(const HomHopfAlgebra& h, int m);
CheckReport check_yd_module(const YDModule& u, const HomHopfAlgebra& h);
// Candidate structures on H (regular, trivial and coadjoint pieces twisted by powers of alpha)
// and on the ground field, filtered by check_yd_module at degree p.
std::vector<YDModule> yd_candidates(const HomHopfAlgebra& h, int p);

HomBialgebra drinfeld_codouble(const HomHopfAlgebra& h, int m);

// u (x) v -> alpha_V^{j-i-1}(v_(0)) (x) alpha_U^{i-j-1}(u) . alpha^-p(v_(1)).
LinearMap braiding_tau(MonoidalContext ctx, const YDModule& u, const YDModule& v, const HomHopfAlgebra& h);
CheckReport check_hom_ybe(MonoidalContext ctx, const YDModule& u, const YDModule& v, const YDModule& w,
                          const HomHopfAlgebra& h);

// xi(f (x) x, f' (x) y) = f(alpha^-m(y)) eps(x) f'(1), a covector on D (x) D.
LinearMap coquasi_form(const HomHopfAlgebra& h, int m);
// x (x) y -> alpha_Y^{j-i-1}(y_[0]) (x) alpha_X^{i-j-1}(x_[0]) form(x_[1], y_[1]) for comodules over D.
LinearMap form_braiding(MonoidalContext ctx, const RightHomComodule& x, const RightHomComodule& y,
                        const LinearMap& form, std::size_t dim_d);

}  // namespace homalg
