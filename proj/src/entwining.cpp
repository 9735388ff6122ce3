#include "homalg/entwining.hpp"

#include "homalg/error.hpp"

namespace homalg {

EntwiningMap::EntwiningMap(HomCoalgebra h_, HomAlgebra a_, LinearMap phi_)
    : h(std::move(h_)), a(std::move(a_)), phi(std::move(phi_)) {
  const std::size_t n = h.dim() * a.dim();
  if (phi.cod() != n || phi.dom() != n)
    throw DimensionError("Phi has shape " + phi.shape() + ", expected " + std::to_string(n) + "x" + std::to_string(n));
}

EntwiningMap::EntwiningMap(const HomBialgebra& h_, const HomBialgebra& a_, LinearMap phi_)
    : EntwiningMap(h_.coalgebra, a_.algebra, std::move(phi_)) {
  h_algebra = h_.algebra;
  a_coalgebra = a_.coalgebra;
}

HomBialgebra EntwiningMap::h_bialgebra() const {
  if (!h_algebra) throw PreconditionError("entwining carries no algebra structure on H");
  return HomBialgebra(*h_algebra, h);
}

HomBialgebra EntwiningMap::a_bialgebra() const {
  if (!a_coalgebra) throw PreconditionError("entwining carries no coalgebra structure on A");
  return HomBialgebra(a, *a_coalgebra);
}

CheckReport check_entwining(const EntwiningMap& e, bool monoidal) {
  if (monoidal && !e.has_bialgebras()) throw PreconditionError("monoidal entwining axioms need bialgebras");
  CheckReport r("entwining");
  const std::size_t dh = e.h.dim(), da = e.a.dim();
  const auto &ah = e.h.alpha(), &aa = e.a.alpha(), &phi = e.phi, &mu = e.a.mult, &delta = e.h.comult;
  auto wire = [&](std::vector<std::size_t> dims) { return Wiring(std::move(dims)); };
  r.compare("alpha-compatible", wire({dh, da}).map(0, ah).map(1, aa).map(0, 2, phi, {da, dh}),
            wire({dh, da}).map(0, 2, phi, {da, dh}).map(0, aa).map(1, ah));
  r.compare("E1",
            wire({dh, da, da}).map(0, 2, phi, {da, dh}).map(1, 2, phi, {da, dh}).merge(0, mu).map(1, ah),
            wire({dh, da, da}).merge(1, mu).map(0, ah).map(0, 2, phi, {da, dh}));
  r.compare("E2",
            wire({dh, da}).map(1, aa).split(0, delta, dh, dh).map(1, 2, phi, {da, dh}).map(0, 2, phi, {da, dh}),
            wire({dh, da}).map(0, 2, phi, {da, dh}).map(0, aa).split(1, delta, dh, dh));
  r.compare("E3", wire({dh, da}).map(0, 2, phi, {da, dh}).contract(1, e.h.counit),
            wire({dh, da}).contract(0, e.h.counit));
  r.compare("E4", wire({dh}).insert(1, e.a.unit).map(0, 2, phi, {da, dh}), wire({dh}).insert(0, e.a.unit));
  if (monoidal) {
    const auto &mh = e.h_algebra->mult, &da_ = e.a_coalgebra->comult, &ea = e.a_coalgebra->counit;
    const LinearMap ah2 = e.h.alpha_pow(2);
    r.compare("E5",
              wire({dh, dh, da})
                  .split(2, da_, da, da)
                  .map(0, ah2)
                  .map(1, ah2)
                  .permute({0, 2, 1, 3})
                  .map(0, 2, phi, {da, dh})
                  .map(2, 2, phi, {da, dh})
                  .permute({0, 2, 1, 3})
                  .merge(2, mh),
              wire({dh, dh, da}).merge(0, mh).map(0, 2, phi, {da, dh}).split(0, da_, da, da).map(2, ah2));
    r.compare("E6", wire({da}).insert(0, e.h_algebra->unit).map(0, 2, phi, {da, dh}).contract(0, ea),
              wire({da}).contract(0, ea).insert(0, e.h_algebra->unit));
  }
  return r;
}

namespace {

// phi[(h', i), (k, h)] = Phi[(k, h'), (h, i)]; the map is its own inverse up to the roles of the dims.
LinearMap reindex(const LinearMap& src, std::size_t dh, std::size_t da, bool to_cotwistor) {
  LinearMap out(dh * da, dh * da);
  for (std::size_t k = 0; k < da; ++k)
    for (std::size_t hp = 0; hp < dh; ++hp)
      for (std::size_t h = 0; h < dh; ++h)
        for (std::size_t i = 0; i < da; ++i) {
          const std::size_t big_r = k * dh + hp, big_c = h * da + i;
          const std::size_t small_r = hp * da + i, small_c = k * dh + h;
          if (to_cotwistor)
            out(small_r, small_c) = src(big_r, big_c);
          else
            out(big_r, big_c) = src(small_r, small_c);
        }
  return out;
}

}  // namespace

Cotwistor cotwistor_from_entwining(const EntwiningMap& e, Validation v) {
  if (v == Validation::checked) require(check_entwining(e), "entwining");
  LinearMap phi = reindex(e.phi, e.h.dim(), e.a.dim(), true);
  if (e.has_bialgebras()) return Cotwistor(dual_bialgebra(e.a_bialgebra()), e.h_bialgebra(), phi);
  return Cotwistor(dual_coalgebra(e.a), e.h, phi);
}

EntwiningMap entwining_from_cotwistor(const Cotwistor& c, const HomAlgebra& a, Validation v) {
  if (!(c.b == dual_coalgebra(a))) throw PreconditionError("B is not presented as the dual of the given algebra");
  if (v == Validation::checked) require(check_cotwistor(c), "cotwistor");
  return EntwiningMap(c.h, a, reindex(c.phi, c.h.dim(), a.dim(), false));
}

EntwiningMap entwining_from_cotwistor(const Cotwistor& c, const HomBialgebra& a, Validation v) {
  if (!c.has_bialgebras() || !(c.b_bialgebra() == dual_bialgebra(a)))
    throw PreconditionError("B is not presented as the dual of the given bialgebra");
  if (v == Validation::checked) require(check_cotwistor(c), "cotwistor");
  return EntwiningMap(c.h_bialgebra(), a, reindex(c.phi, c.h.dim(), a.dim(), false));
}

CheckReport check_entwined_module(const EntwinedModule& u, const EntwiningMap& e) {
  CheckReport r("entwined-module");
  r.absorb(check_right_module(u.module(), e.a), "module");
  r.absorb(check_right_comodule(u.comodule(), e.h), "comodule");
  const std::size_t du = u.dim(), da = e.a.dim(), dh = e.h.dim();
  r.compare("entwined-compatibility", Wiring({du, da}).merge(0, u.action).split(0, u.coaction, du, dh),
            Wiring({du, da})
                .split(0, u.coaction, du, dh)
                .map(1, e.h.alpha_pow(u.n + 1))
                .map(1, 2, e.phi, {da, dh})
                .map(1, e.a.alpha())
                .merge(0, u.action)
                .map(1, e.h.alpha_pow(-u.n)));
  return r;
}

EntwinedModule canonical_module_HA(const EntwiningMap& e, int n) {
  const std::size_t dh = e.h.dim(), da = e.a.dim();
  EntwinedModule m;
  m.carrier = tensor(e.h.carrier, e.a.carrier);
  m.n = n;
  m.coaction = Wiring({dh, da})
                   .map(1, e.a.alpha_pow(-n))
                   .split(0, e.h.comult, dh, dh)
                   .map(1, 2, e.phi, {da, dh})
                   .map(1, e.a.alpha_pow(n + 1))
                   .matrix();
  m.action = Wiring({dh, da, da}).map(2, e.a.alpha_pow(-1)).merge(1, e.a.mult).map(0, e.h.alpha()).matrix();
  return m;
}

EntwinedModule canonical_module_AH(const EntwiningMap& e, int n) {
  const std::size_t dh = e.h.dim(), da = e.a.dim();
  EntwinedModule m;
  m.carrier = tensor(e.a.carrier, e.h.carrier);
  m.n = n;
  m.coaction = Wiring({da, dh}).map(0, e.a.alpha()).split(1, e.h.comult, dh, dh).map(2, e.h.alpha_pow(-n)).matrix();
  m.action = Wiring({da, dh, da})
                 .map(2, e.a.alpha_pow(-1))
                 .map(1, e.h.alpha())
                 .map(1, 2, e.phi, {da, dh})
                 .merge(0, e.a.mult)
                 .matrix();
  return m;
}

EntwinedModule unit_entwined_module(const EntwiningMap& e, int n) {
  if (!e.has_bialgebras()) throw PreconditionError("the unit module needs the counit of A and the unit of H");
  return EntwinedModule{ObjectWithAut(), e.a_coalgebra->counit, e.h_algebra->unit, n};
}

EntwiningMap hopf_module_entwining(const HomBialgebra& h, int n) {
  const std::size_t d = h.dim();
  LinearMap phi = Wiring({d, d})
                      .split(1, h.comult(), d, d)
                      .map(0, h.alpha_pow(-1))
                      .map(1, h.alpha_pow(-1))
                      .map(2, h.alpha_pow(n))
                      .permute({1, 0, 2})
                      .merge(1, h.mult())
                      .matrix();
  return EntwiningMap(h, h, phi);
}

EntwinedModule tensor_entwined(MonoidalContext ctx, const EntwinedModule& u, const EntwinedModule& v,
                               const EntwiningMap& e, Validation val) {
  if (!e.has_bialgebras()) throw PreconditionError("tensor of entwined modules needs a monoidal entwining");
  if (u.n != v.n) throw PreconditionError("entwined modules of different degrees");
  if (val == Validation::checked) {
    require(check_entwining(e, true), "monoidal entwining");
    require(check_entwined_module(u, e), "left factor");
    require(check_entwined_module(v, e), "right factor");
  }
  const std::size_t du = u.dim(), dv = v.dim(), da = e.a.dim(), dh = e.h.dim();
  EntwinedModule t;
  t.carrier = tensor(u.carrier, v.carrier);
  t.n = u.n;
  t.action = Wiring({du, dv, da})
                 .split(2, e.a_coalgebra->comult, da, da)
                 .map(2, e.a.alpha_pow(-ctx.i - 2))
                 .map(3, e.a.alpha_pow(-ctx.j - 2))
                 .permute({0, 2, 1, 3})
                 .merge(0, u.action)
                 .merge(1, v.action)
                 .matrix();
  t.coaction = Wiring({du, dv})
                   .split(0, u.coaction, du, dh)
                   .split(2, v.coaction, dv, dh)
                   .map(1, e.h.alpha_pow(ctx.i))
                   .map(3, e.h.alpha_pow(ctx.j))
                   .permute({0, 2, 1, 3})
                   .merge(2, e.h_algebra->mult)
                   .matrix();
  return t;
}

HomCoalgebra codouble(const EntwiningMap& e, Validation v) {
  if (v == Validation::checked) require(check_entwining(e), "entwining");
  EntwiningMap plain(e.h, e.a, e.phi);
  return build_smash_coproduct(cotwistor_from_entwining(plain, Validation::unchecked), Validation::unchecked);
}

HomBialgebra codouble_bialgebra(const EntwiningMap& e, Validation v) {
  if (!e.has_bialgebras()) throw PreconditionError("codouble bialgebra needs a monoidal entwining");
  if (v == Validation::checked) require(check_entwining(e, true), "monoidal entwining");
  return build_smash_bialgebra(cotwistor_from_entwining(e, Validation::unchecked), ProductOrder::hg,
                               Validation::unchecked);
}

namespace {

// The matrices of u (x) e_i -> u.e_i and u -> sum_i u.e_i (x) e^i hold the same entries.
LinearMap swap_action_and_coaction(const LinearMap& m, std::size_t du, std::size_t da, bool action_to_coaction) {
  LinearMap out = action_to_coaction ? LinearMap(du * da, du) : LinearMap(du, du * da);
  for (std::size_t u = 0; u < du; ++u)
    for (std::size_t up = 0; up < du; ++up)
      for (std::size_t i = 0; i < da; ++i) {
        if (action_to_coaction)
          out(up * da + i, u) = m(up, u * da + i);
        else
          out(up, u * da + i) = m(up * da + i, u);
      }
  return out;
}

}  // namespace

RightHomComodule to_codouble_comodule(const EntwinedModule& u, const EntwiningMap& e) {
  EntwiningMap plain(e.h, e.a, e.phi);
  Cotwistor c = cotwistor_from_entwining(plain, Validation::unchecked);
  Bicomodule m{u.carrier, u.coaction, swap_action_and_coaction(u.action, u.dim(), e.a.dim(), true), u.n};
  return q_functor(m, c, Validation::unchecked);
}

EntwinedModule from_codouble_comodule(const RightHomComodule& comod, const EntwiningMap& e, int n) {
  EntwiningMap plain(e.h, e.a, e.phi);
  Cotwistor c = cotwistor_from_entwining(plain, Validation::unchecked);
  Bicomodule m = p_functor(n, comod, c, Validation::unchecked);
  return EntwinedModule{m.carrier, swap_action_and_coaction(m.b_coaction, m.dim(), e.a.dim(), false), m.h_coaction, n};
}

}  // namespace homalg
