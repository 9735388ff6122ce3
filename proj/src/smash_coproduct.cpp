#include "homalg/smash_coproduct.hpp"

#include "homalg/error.hpp"

namespace homalg {

Cotwistor::Cotwistor(HomCoalgebra b_, HomCoalgebra h_, LinearMap phi_)
    : b(std::move(b_)), h(std::move(h_)), phi(std::move(phi_)) {
  const std::size_t n = b.dim() * h.dim();
  if (phi.cod() != n || phi.dom() != n)
    throw DimensionError("phi has shape " + phi.shape() + ", expected " + std::to_string(n) + "x" + std::to_string(n));
}

Cotwistor::Cotwistor(const HomBialgebra& b_, const HomBialgebra& h_, LinearMap phi_)
    : Cotwistor(b_.coalgebra, h_.coalgebra, std::move(phi_)) {
  b_algebra = b_.algebra;
  h_algebra = h_.algebra;
}

HomBialgebra Cotwistor::b_bialgebra() const {
  if (!b_algebra) throw PreconditionError("cotwistor carries no algebra structure on B");
  return HomBialgebra(*b_algebra, b);
}

HomBialgebra Cotwistor::h_bialgebra() const {
  if (!h_algebra) throw PreconditionError("cotwistor carries no algebra structure on H");
  return HomBialgebra(*h_algebra, h);
}

CheckReport check_cotwistor(const Cotwistor& c, bool monoidal) {
  if (monoidal && !c.has_bialgebras()) throw PreconditionError("monoidal cotwistor axioms need bialgebras");
  CheckReport r("cotwistor");
  const std::size_t db = c.b.dim(), dh = c.h.dim();
  const auto &ab = c.b.alpha(), &ah = c.h.alpha(), &phi = c.phi;
  const auto &delta_b = c.b.comult, &delta_h = c.h.comult;
  r.compare("alpha-compatible", Wiring({db, dh}).map(0, ab).map(1, ah).map(0, 2, phi, {dh, db}),
            Wiring({db, dh}).map(0, 2, phi, {dh, db}).map(0, ah).map(1, ab));
  r.compare("M1",
            Wiring({db, dh}).map(1, ah).split(0, delta_b, db, db).map(1, 2, phi, {dh, db}).map(0, 2, phi, {dh, db}),
            Wiring({db, dh}).map(0, 2, phi, {dh, db}).map(0, ah).split(1, delta_b, db, db));
  r.compare("M2",
            Wiring({db, dh}).map(0, ab).split(1, delta_h, dh, dh).map(0, 2, phi, {dh, db}).map(1, 2, phi, {dh, db}),
            Wiring({db, dh}).map(0, 2, phi, {dh, db}).split(0, delta_h, dh, dh).map(2, ab));
  r.compare("M3", Wiring({db, dh}).map(0, 2, phi, {dh, db}).contract(0, c.h.counit),
            Wiring({db, dh}).contract(1, c.h.counit));
  r.compare("M4", Wiring({db, dh}).map(0, 2, phi, {dh, db}).contract(1, c.b.counit),
            Wiring({db, dh}).contract(0, c.b.counit));
  if (monoidal) {
    const auto &mb = c.b_algebra->mult, &mh = c.h_algebra->mult;
    r.compare("M5",
              Wiring({db, dh, db, dh})
                  .map(0, 2, phi, {dh, db})
                  .map(2, 2, phi, {dh, db})
                  .permute({0, 2, 1, 3})
                  .merge(0, mh)
                  .merge(1, mb),
              Wiring({db, dh, db, dh}).permute({0, 2, 1, 3}).merge(0, mb).merge(1, mh).map(0, 2, phi, {dh, db}));
    r.compare("M6", Wiring({}).insert(0, c.b_algebra->unit).insert(1, c.h_algebra->unit).map(0, 2, phi, {dh, db}),
              Wiring({}).insert(0, c.h_algebra->unit).insert(1, c.b_algebra->unit));
  }
  return r;
}

namespace {

void require_cotwistor(const Cotwistor& c, bool monoidal) {
  auto r = check_cotwistor(c, monoidal);
  require(r, monoidal ? "monoidal cotwistor" : "cotwistor");
}

}  // namespace

HomCoalgebra build_smash_coproduct(const Cotwistor& c, Validation v) {
  if (v == Validation::checked) require_cotwistor(c, false);
  const std::size_t db = c.b.dim(), dh = c.h.dim();
  LinearMap comult = Wiring({db, dh})
                         .split(0, c.b.comult, db, db)
                         .split(2, c.h.comult, dh, dh)
                         .map(1, 2, c.phi, {dh, db})
                         .matrix();
  return HomCoalgebra(tensor(c.b.carrier, c.h.carrier), comult, kron(c.b.counit, c.h.counit));
}

HomBialgebra build_smash_bialgebra(const Cotwistor& c, ProductOrder order, Validation v) {
  if (!c.has_bialgebras()) throw PreconditionError("smash bialgebra needs bialgebras on both sides");
  if (v == Validation::checked) require_cotwistor(c, true);
  HomCoalgebra coalg = build_smash_coproduct(c, Validation::unchecked);
  const std::size_t db = c.b.dim(), dh = c.h.dim();
  Wiring w({db, dh, db, dh});
  w.permute({0, 2, 1, 3}).merge(0, c.b_algebra->mult);
  if (order == ProductOrder::gh) w.permute({0, 2, 1});
  w.merge(1, c.h_algebra->mult);
  HomAlgebra alg(coalg.carrier, w.matrix(), kron(c.b_algebra->unit, c.h_algebra->unit));
  return HomBialgebra(std::move(alg), std::move(coalg));
}

CheckReport check_bicomodule(const Bicomodule& m, const Cotwistor& c) {
  CheckReport r("bicomodule");
  const std::size_t du = m.dim(), db = c.b.dim(), dh = c.h.dim();
  r.absorb(check_right_comodule({m.carrier, m.h_coaction}, c.h), "h-comodule");
  r.absorb(check_right_comodule({m.carrier, m.b_coaction}, c.b), "b-comodule");
  r.compare("phi-compatibility", Wiring({du}).split(0, m.b_coaction, du, db).split(0, m.h_coaction, du, dh),
            Wiring({du})
                .split(0, m.h_coaction, du, dh)
                .split(0, m.b_coaction, du, db)
                .map(2, c.h.alpha())
                .map(1, c.b.alpha_pow(-m.n - 1))
                .map(1, 2, c.phi, {dh, db})
                .map(2, c.b.alpha_pow(m.n)));
  return r;
}

Bicomodule p_functor(int n, const RightHomComodule& u, const Cotwistor& c, Validation v) {
  if (v == Validation::checked) {
    auto smash = build_smash_coproduct(c);
    require(check_right_comodule(u, smash), "smash comodule");
  }
  const std::size_t du = u.dim(), db = c.b.dim(), dh = c.h.dim();
  Wiring coact({du});
  coact.map(0, 1, u.coaction, {du, db, dh});
  Bicomodule m;
  m.carrier = u.carrier;
  m.n = n;
  m.h_coaction = Wiring(coact).contract(1, c.b.counit).map(1, c.h.alpha_pow(-1)).matrix();
  m.b_coaction = Wiring(coact).map(1, c.b.alpha_pow(n)).contract(2, c.h.counit).matrix();
  return m;
}

RightHomComodule q_functor(const Bicomodule& m, const Cotwistor& c, Validation v) {
  if (v == Validation::checked) require(check_bicomodule(m, c), "bicomodule");
  const std::size_t du = m.dim(), db = c.b.dim(), dh = c.h.dim();
  LinearMap coaction = Wiring({du})
                           .split(0, m.h_coaction, du, dh)
                           .split(0, m.b_coaction, du, db)
                           .map(0, m.carrier.alpha_inverse())
                           .map(1, c.b.alpha_pow(-m.n - 1))
                           .map(2, c.h.alpha())
                           .matrix();
  return {m.carrier, coaction};
}

Bicomodule transport_bicomodule(const Bicomodule& m, const Cotwistor& c, int new_n) {
  Bicomodule out = m;
  out.n = new_n;
  out.b_coaction = compose(kron(LinearMap::identity(m.dim()), c.b.alpha_pow(new_n - m.n)), m.b_coaction);
  return out;
}

}  // namespace homalg
