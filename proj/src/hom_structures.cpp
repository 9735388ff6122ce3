#include "homalg/hom_structures.hpp"

#include "homalg/error.hpp"

namespace homalg {

namespace {

void expect_shape(const LinearMap& m, std::size_t cod, std::size_t dom, const char* what) {
  if (m.cod() != cod || m.dom() != dom)
    throw DimensionError(std::string(what) + " has shape " + m.shape() + ", expected " + std::to_string(cod) + "x" +
                         std::to_string(dom));
}

}  // namespace

ObjectWithAut::ObjectWithAut(LinearMap alpha) : alpha_(std::move(alpha)) {
  if (!alpha_.square() || alpha_.cod() == 0) throw DimensionError("alpha must be square, got " + alpha_.shape());
  inverse_ = invert(alpha_);
}

LinearMap ObjectWithAut::alpha_pow(int k) const {
  return k >= 0 ? power(alpha_, static_cast<unsigned>(k)) : power(inverse_, static_cast<unsigned>(-k));
}

ObjectWithAut tensor(const ObjectWithAut& x, const ObjectWithAut& y) {
  return ObjectWithAut(kron(x.alpha(), y.alpha()), kron(x.alpha_inverse(), y.alpha_inverse()));
}

HomAlgebra::HomAlgebra(ObjectWithAut c, LinearMap m, LinearMap u)
    : carrier(std::move(c)), mult(std::move(m)), unit(std::move(u)) {
  const std::size_t d = carrier.dim();
  expect_shape(mult, d, d * d, "mult");
  expect_shape(unit, d, 1, "unit");
}

HomCoalgebra::HomCoalgebra(ObjectWithAut c, LinearMap m, LinearMap e)
    : carrier(std::move(c)), comult(std::move(m)), counit(std::move(e)) {
  const std::size_t d = carrier.dim();
  expect_shape(comult, d * d, d, "comult");
  expect_shape(counit, 1, d, "counit");
}

HomBialgebra::HomBialgebra(HomAlgebra a, HomCoalgebra c) : algebra(std::move(a)), coalgebra(std::move(c)) {
  if (!(algebra.carrier == coalgebra.carrier))
    throw DimensionError("algebra and coalgebra carry different alpha");
}

HomHopfAlgebra::HomHopfAlgebra(HomBialgebra b, LinearMap s) : bialgebra(std::move(b)), antipode(std::move(s)) {
  expect_shape(antipode, bialgebra.dim(), bialgebra.dim(), "antipode");
}

CheckReport check_hom_algebra(const HomAlgebra& a, CheckOptions opts) {
  CheckReport r("hom-algebra");
  const std::size_t d = a.dim();
  const auto& mu = a.mult;
  const auto& al = a.alpha();
  r.compare("hom-associativity", Wiring({d, d, d}).merge(1, mu).map(0, al).merge(0, mu),
            Wiring({d, d, d}).merge(0, mu).map(1, al).merge(0, mu));
  r.compare("unit-alpha-fixed", Wiring({}).insert(0, a.unit).map(0, al), Wiring({}).insert(0, a.unit));
  r.compare("left-unit", Wiring({d}).insert(0, a.unit).merge(0, mu), Wiring({d}).map(0, al));
  r.compare("right-unit", Wiring({d}).insert(1, a.unit).merge(0, mu), Wiring({d}).map(0, al));
  if (opts.alpha_morphism)
    r.compare("alpha-multiplicative", Wiring({d, d}).merge(0, mu).map(0, al),
              Wiring({d, d}).map(0, al).map(1, al).merge(0, mu), "alpha-morphism");
  return r;
}

CheckReport check_hom_coalgebra(const HomCoalgebra& c, CheckOptions opts) {
  CheckReport r("hom-coalgebra");
  const std::size_t d = c.dim();
  const auto& de = c.comult;
  const auto& al = c.alpha();
  r.compare("hom-coassociativity", Wiring({d}).split(0, de, d, d).split(1, de, d, d).map(0, al),
            Wiring({d}).split(0, de, d, d).split(0, de, d, d).map(2, al));
  r.compare("counit-alpha-invariant", Wiring({d}).map(0, al).contract(0, c.counit), Wiring({d}).contract(0, c.counit));
  r.compare("left-counit", Wiring({d}).split(0, de, d, d).contract(0, c.counit), Wiring({d}).map(0, al));
  r.compare("right-counit", Wiring({d}).split(0, de, d, d).contract(1, c.counit), Wiring({d}).map(0, al));
  if (opts.alpha_morphism)
    r.compare("alpha-comultiplicative", Wiring({d}).map(0, al).split(0, de, d, d),
              Wiring({d}).split(0, de, d, d).map(0, al).map(1, al), "alpha-morphism");
  return r;
}

CheckReport check_hom_bialgebra(const HomBialgebra& b, CheckOptions opts) {
  CheckReport r("hom-bialgebra");
  r.absorb(check_hom_algebra(b.algebra, opts), "algebra");
  r.absorb(check_hom_coalgebra(b.coalgebra, opts), "coalgebra");
  const std::size_t d = b.dim();
  const auto &mu = b.mult(), &de = b.comult(), &u = b.unit(), &e = b.counit();
  r.compare("comult-multiplicative", Wiring({d, d}).merge(0, mu).split(0, de, d, d),
            Wiring({d, d}).split(0, de, d, d).split(2, de, d, d).permute({0, 2, 1, 3}).merge(0, mu).merge(1, mu));
  r.compare("comult-unit", Wiring({}).insert(0, u).split(0, de, d, d), Wiring({}).insert(0, u).insert(1, u));
  r.compare("counit-multiplicative", Wiring({d, d}).merge(0, mu).contract(0, e),
            Wiring({d, d}).contract(0, e).contract(0, e));
  r.compare("counit-unit", Wiring({}).insert(0, u).contract(0, e), Wiring({}));
  return r;
}

CheckReport check_hom_hopf(const HomHopfAlgebra& h, CheckOptions opts) {
  CheckReport r("hom-hopf");
  r.absorb(check_hom_bialgebra(h.bialgebra, opts), "bialgebra");
  const auto& b = h.bialgebra;
  const std::size_t d = b.dim();
  const auto &mu = b.mult(), &de = b.comult(), &u = b.unit(), &e = b.counit(), &s = h.antipode, &al = b.alpha();
  const Wiring unit_counit = Wiring({d}).contract(0, e).insert(0, u);
  r.compare("antipode-left", Wiring({d}).split(0, de, d, d).map(0, s).merge(0, mu), unit_counit);
  r.compare("antipode-right", Wiring({d}).split(0, de, d, d).map(1, s).merge(0, mu), unit_counit);
  r.compare("antipode-alpha", Wiring({d}).map(0, al).map(0, s), Wiring({d}).map(0, s).map(0, al));
  r.compare("antipode-antimultiplicative", Wiring({d, d}).merge(0, mu).map(0, s),
            Wiring({d, d}).permute({1, 0}).map(0, s).map(1, s).merge(0, mu), "antipode-derived");
  r.compare("antipode-unit", Wiring({}).insert(0, u).map(0, s), Wiring({}).insert(0, u), "antipode-derived");
  r.compare("antipode-anticomultiplicative", Wiring({d}).map(0, s).split(0, de, d, d),
            Wiring({d}).split(0, de, d, d).permute({1, 0}).map(0, s).map(1, s), "antipode-derived");
  r.compare("antipode-counit", Wiring({d}).map(0, s).contract(0, e), Wiring({d}).contract(0, e), "antipode-derived");
  return r;
}

CheckReport check_right_module(const RightHomModule& m, const HomAlgebra& a, CheckOptions opts) {
  CheckReport r("right-hom-module");
  const std::size_t du = m.dim(), d = a.dim();
  expect_shape(m.action, du, du * d, "action");
  const auto &act = m.action, &au = m.carrier.alpha(), &al = a.alpha();
  r.compare("module-hom-associativity", Wiring({du, d, d}).merge(1, a.mult).map(0, au).merge(0, act),
            Wiring({du, d, d}).merge(0, act).map(1, al).merge(0, act));
  r.compare("module-unit", Wiring({du}).insert(1, a.unit).merge(0, act), Wiring({du}).map(0, au));
  if (opts.alpha_morphism)
    r.compare("module-alpha", Wiring({du, d}).merge(0, act).map(0, au),
              Wiring({du, d}).map(0, au).map(1, al).merge(0, act), "alpha-morphism");
  return r;
}

CheckReport check_right_comodule(const RightHomComodule& m, const HomCoalgebra& c, CheckOptions opts) {
  CheckReport r("right-hom-comodule");
  const std::size_t du = m.dim(), d = c.dim();
  expect_shape(m.coaction, du * d, du, "coaction");
  const auto &rho = m.coaction, &au = m.carrier.alpha(), &al = c.alpha();
  r.compare("comodule-hom-coassociativity", Wiring({du}).split(0, rho, du, d).map(0, au).split(1, c.comult, d, d),
            Wiring({du}).split(0, rho, du, d).split(0, rho, du, d).map(2, al));
  r.compare("comodule-counit", Wiring({du}).split(0, rho, du, d).contract(1, c.counit), Wiring({du}).map(0, au));
  if (opts.alpha_morphism)
    r.compare("comodule-alpha", Wiring({du}).map(0, au).split(0, rho, du, d),
              Wiring({du}).split(0, rho, du, d).map(0, au).map(1, al), "alpha-morphism");
  return r;
}

void require(const CheckReport& report, const std::string& what) {
  auto f = report.failures();
  if (!f.empty()) throw PreconditionError(what + " fails axiom '" + f.front() + "'");
}

HomCoalgebra dual_coalgebra(const HomAlgebra& a) {
  const std::size_t d = a.dim();
  const LinearMap twisted = compose(a.alpha_pow(-2), a.mult);
  LinearMap comult(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) comult(i * d + j, k) = twisted(k, j * d + i);
  return HomCoalgebra(ObjectWithAut(a.carrier.alpha_inverse().transpose()), comult, a.unit.transpose());
}

HomBialgebra dual_bialgebra(const HomBialgebra& b) {
  HomCoalgebra c = dual_coalgebra(b.algebra);
  const LinearMap a2 = b.alpha_pow(-2);
  LinearMap mult = compose(kron(a2, a2), b.comult()).transpose();
  HomAlgebra a(c.carrier, mult, b.counit().transpose());
  return HomBialgebra(std::move(a), std::move(c));
}

namespace {

void require_automorphism(const HomBialgebra& b, const LinearMap& alpha) {
  if (!b.alpha().is_identity()) throw PreconditionError("yau twist needs classical input with alpha = id");
  if (!alpha.square() || alpha.cod() != b.dim()) throw DimensionError("twisting map has shape " + alpha.shape());
  if (rank(alpha) != alpha.cod()) throw PreconditionError("twisting map is not invertible");
  if (compose(alpha, b.mult()) != compose(b.mult(), kron(alpha, alpha)))
    throw PreconditionError("twisting map violates alpha(ab) = alpha(a)alpha(b)");
  if (compose(alpha, b.unit()) != b.unit()) throw PreconditionError("twisting map violates alpha(1) = 1");
  if (compose(b.comult(), alpha) != compose(kron(alpha, alpha), b.comult()))
    throw PreconditionError("twisting map violates Delta(alpha(a)) = alpha(a1) (x) alpha(a2)");
  if (compose(b.counit(), alpha) != b.counit()) throw PreconditionError("twisting map violates epsilon(alpha(a)) = epsilon(a)");
}

}  // namespace

HomBialgebra yau_twist(const HomBialgebra& classical, const LinearMap& alpha) {
  require_automorphism(classical, alpha);
  ObjectWithAut carrier(alpha);
  HomAlgebra a(carrier, compose(alpha, classical.mult()), classical.unit());
  HomCoalgebra c(carrier, compose(classical.comult(), alpha), classical.counit());
  return HomBialgebra(std::move(a), std::move(c));
}

HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const LinearMap& alpha) {
  return HomHopfAlgebra(yau_twist(classical.bialgebra, alpha), classical.antipode);
}

RightHomModule regular_module(const HomAlgebra& a) { return {a.carrier, a.mult}; }
RightHomComodule regular_comodule(const HomCoalgebra& c) { return {c.carrier, c.comult}; }

}  // namespace homalg
