#include "homalg/applications.hpp"

#include <algorithm>

#include "homalg/error.hpp"

namespace homalg {

namespace {

const LinearMap& id(std::size_t n) {
  thread_local std::vector<LinearMap> cache;
  while (cache.size() <= n) cache.push_back(LinearMap::identity(cache.size()));
  return cache[n];
}

// The printed codouble coproduct
//   f (x) c -> sum f_1(z) f_2 (x) c' (x) e^i (x) c_2,
// where step(e_i (x) c_1) = sum e_z (x) e_c' and f_1(z) f_2(y) = f(alpha^-2(z y)).
LinearMap printed_codouble_comult(const HomAlgebra& a, const HomCoalgebra& c, const LinearMap& step) {
  const std::size_t da = a.dim(), dc = c.dim(), dd = da * dc;
  const LinearMap pairing = compose(a.alpha_pow(-2), a.mult);
  LinearMap out(dd * dd, dd);
  for (std::size_t f = 0; f < da; ++f)
    for (std::size_t x = 0; x < dc; ++x)
      for (std::size_t c1 = 0; c1 < dc; ++c1)
        for (std::size_t c2 = 0; c2 < dc; ++c2) {
          const Scalar& dx = c.comult(c1 * dc + c2, x);
          if (dx.is_zero()) continue;
          for (std::size_t i = 0; i < da; ++i)
            for (std::size_t z = 0; z < da; ++z)
              for (std::size_t cp = 0; cp < dc; ++cp) {
                const Scalar& s = step(z * dc + cp, i * dc + c1);
                if (s.is_zero()) continue;
                for (std::size_t y = 0; y < da; ++y) {
                  const Scalar& g = pairing(f, z * da + y);
                  if (g.is_zero()) continue;
                  out(((y * dc + cp) * dd) + (i * dc + c2), f * dc + x) += dx * s * g;
                }
              }
        }
  return out;
}

ObjectWithAut dual_times(const ObjectWithAut& a, const ObjectWithAut& c) {
  return tensor(ObjectWithAut(a.alpha_inverse().transpose()), c);
}

}  // namespace

// ---- Doi-Hopf ----

CheckReport check_comodule_algebra(const ComoduleAlgebra& a, const HomBialgebra& h) {
  CheckReport r("comodule-algebra");
  r.absorb(check_hom_algebra(a.algebra), "algebra");
  r.absorb(check_right_comodule({a.algebra.carrier, a.coaction}, h.coalgebra), "comodule");
  const std::size_t d = a.dim(), dh = h.dim();
  r.compare("coaction-multiplicative", Wiring({d, d}).merge(0, a.algebra.mult).split(0, a.coaction, d, dh),
            Wiring({d, d})
                .split(0, a.coaction, d, dh)
                .split(2, a.coaction, d, dh)
                .permute({0, 2, 1, 3})
                .merge(0, a.algebra.mult)
                .merge(1, h.mult()));
  r.compare("coaction-unit", Wiring(std::vector<std::size_t>{}).insert(0, a.algebra.unit).split(0, a.coaction, d, dh),
            Wiring(std::vector<std::size_t>{}).insert(0, a.algebra.unit).insert(1, h.unit()));
  return r;
}

CheckReport check_module_coalgebra(const ModuleCoalgebra& c, const HomBialgebra& h) {
  CheckReport r("module-coalgebra");
  r.absorb(check_hom_coalgebra(c.coalgebra), "coalgebra");
  r.absorb(check_right_module({c.coalgebra.carrier, c.action}, h.algebra), "module");
  const std::size_t d = c.dim(), dh = h.dim();
  r.compare("action-comultiplicative", Wiring({d, dh}).merge(0, c.action).split(0, c.coalgebra.comult, d, d),
            Wiring({d, dh})
                .split(0, c.coalgebra.comult, d, d)
                .split(2, h.comult(), dh, dh)
                .permute({0, 2, 1, 3})
                .merge(0, c.action)
                .merge(1, c.action));
  r.compare("action-counit", Wiring({d, dh}).merge(0, c.action).contract(0, c.coalgebra.counit),
            Wiring({d, dh}).contract(0, c.coalgebra.counit).contract(0, h.counit()));
  return r;
}

CheckReport check_doi_hopf_datum(const DoiHopfDatum& d) {
  CheckReport r("doi-hopf-datum");
  r.absorb(check_hom_bialgebra(d.h), "h");
  r.absorb(check_comodule_algebra(d.a, d.h), "a");
  r.absorb(check_module_coalgebra(d.c, d.h), "c");
  return r;
}

CheckReport check_doi_hopf_module(const DoiHopfModule& u, const DoiHopfDatum& d) {
  CheckReport r("doi-hopf-module");
  r.absorb(check_right_module({u.carrier, u.action}, d.a.algebra), "module");
  r.absorb(check_right_comodule({u.carrier, u.coaction}, d.c.coalgebra), "comodule");
  const std::size_t du = u.carrier.dim(), da = d.a.dim(), dc = d.c.dim(), dh = d.h.dim();
  r.compare("doi-hopf-compatibility", Wiring({du, da}).merge(0, u.action).split(0, u.coaction, du, dc),
            Wiring({du, da})
                .split(0, u.coaction, du, dc)
                .split(2, d.a.coaction, da, dh)
                .map(3, d.h.alpha_pow(d.k))
                .permute({0, 2, 1, 3})
                .merge(0, u.action)
                .merge(1, d.c.action));
  return r;
}

DoiHopfDatum doi_self_datum(const HomBialgebra& h, int k, int m) {
  return DoiHopfDatum{h, ComoduleAlgebra{h.algebra, h.comult(), h.coalgebra},
                      ModuleCoalgebra{h.coalgebra, h.mult(), h.algebra}, k, m};
}

EntwiningMap doi_hopf_entwining(const DoiHopfDatum& d, Validation v) {
  if (v == Validation::checked) require(check_doi_hopf_datum(d), "Doi-Hopf datum");
  const std::size_t da = d.a.dim(), dc = d.c.dim(), dh = d.h.dim();
  LinearMap phi = Wiring({dc, da})
                      .split(1, d.a.coaction, da, dh)
                      .map(0, d.c.coalgebra.alpha_pow(-1))
                      .map(1, d.a.algebra.alpha_pow(-1))
                      .map(2, d.h.alpha_pow(d.m))
                      .permute({1, 0, 2})
                      .merge(1, d.c.action)
                      .matrix();
  if (d.a.coalgebra && d.c.algebra)
    return EntwiningMap(HomBialgebra(*d.c.algebra, d.c.coalgebra), HomBialgebra(d.a.algebra, *d.a.coalgebra), phi);
  return EntwiningMap(d.c.coalgebra, d.a.algebra, phi);
}

HomCoalgebra doi_codouble(const DoiHopfDatum& d, Validation v) {
  if (v == Validation::checked) require(check_doi_hopf_datum(d), "Doi-Hopf datum");
  const std::size_t da = d.a.dim(), dc = d.c.dim(), dh = d.h.dim();
  const auto& a = d.a.algebra;
  const auto& c = d.c.coalgebra;
  // e_i (x) c -> alpha_A^-1(e_i(0)) (x) alpha_C^-1(c) . alpha_H^m(e_i(1)), assembled densely.
  LinearMap step = compose({kron(id(da), d.c.action), kron(id(da), flip(dh, dc)),
                            kron({a.alpha_pow(-1), d.h.alpha_pow(d.m), c.alpha_pow(-1)}), kron(d.a.coaction, id(dc))});
  LinearMap comult = printed_codouble_comult(a, c, step);
  LinearMap counit = kron(a.unit.transpose(), c.counit);
  return HomCoalgebra(dual_times(a.carrier, c.carrier), comult, counit);
}

CheckReport check_doi_monoidal(const DoiHopfDatum& d) {
  if (!d.a.coalgebra || !d.c.algebra) throw PreconditionError("the monoidal criterion needs A and C to be bialgebras");
  CheckReport r("doi-monoidal");
  const std::size_t da = d.a.dim(), dc = d.c.dim(), dh = d.h.dim();
  const auto &rho = d.a.coaction, &act = d.c.action, &mu_c = d.c.algebra->mult, &delta_a = d.a.coalgebra->comult;
  r.compare("coaction-comultiplication",
            Wiring({dc, dc, da})
                .split(2, delta_a, da, da)
                .split(3, rho, da, dh)
                .split(2, rho, da, dh)
                .permute({2, 4, 0, 3, 1, 5})
                .merge(4, act)
                .merge(2, act)
                .merge(2, mu_c),
            Wiring({dc, dc, da})
                .merge(0, mu_c)
                .split(1, rho, da, dh)
                .map(2, d.h.alpha_pow(2))
                .split(1, delta_a, da, da)
                .permute({1, 2, 0, 3})
                .merge(2, act));
  r.compare("counit-unit", Wiring({da}).contract(0, d.a.coalgebra->counit).insert(0, d.c.algebra->unit),
            Wiring({da})
                .split(0, rho, da, dh)
                .contract(0, d.a.coalgebra->counit)
                .insert(0, d.c.algebra->unit)
                .merge(0, act));
  return r;
}

// ---- Long dimodules ----

EntwiningMap long_entwining(const HomBialgebra& h) { return EntwiningMap(h, h, flip(h.dim(), h.dim())); }

CheckReport check_long_dimodule(const LongDimodule& u, const HomBialgebra& h) {
  CheckReport r("long-dimodule");
  r.absorb(check_right_module({u.carrier, u.action}, h.algebra), "module");
  r.absorb(check_right_comodule({u.carrier, u.coaction}, h.coalgebra), "comodule");
  const std::size_t du = u.dim(), d = h.dim();
  r.compare("long-compatibility", Wiring({du, d}).merge(0, u.action).split(0, u.coaction, du, d),
            Wiring({du, d})
                .split(0, u.coaction, du, d)
                .map(1, h.alpha())
                .map(2, h.alpha())
                .permute({0, 2, 1})
                .merge(0, u.action));
  return r;
}

namespace {

void dedupe(std::vector<LinearMap>& v) {
  std::vector<LinearMap> out;
  for (auto& m : v)
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  v = std::move(out);
}

struct Structures {
  std::vector<LinearMap> actions, coactions;
};

// Actions mu (alpha^r (x) alpha^s), u.h = eps(h) alpha^r(u); coactions (alpha^r (x) alpha^s) Delta,
// u -> alpha^r(u) (x) 1.
Structures basic_structures(const HomBialgebra& h) {
  Structures s;
  const std::size_t d = h.dim();
  for (int r = -1; r <= 1; ++r) {
    s.actions.push_back(compose(h.alpha_pow(r), kron(id(d), h.counit())));
    s.coactions.push_back(kron(h.alpha_pow(r), h.unit()));
    for (int t = -1; t <= 1; ++t) {
      s.actions.push_back(compose(h.mult(), kron(h.alpha_pow(r), h.alpha_pow(t))));
      s.coactions.push_back(compose(kron(h.alpha_pow(r), h.alpha_pow(t)), h.comult()));
    }
  }
  dedupe(s.actions);
  dedupe(s.coactions);
  return s;
}

}  // namespace

std::vector<LongDimodule> long_candidates(const HomBialgebra& h) {
  std::vector<LongDimodule> out;
  LongDimodule unit{ObjectWithAut(), h.counit(), h.unit()};
  if (check_long_dimodule(unit, h).passed()) out.push_back(unit);
  auto s = basic_structures(h);
  for (const auto& act : s.actions)
    for (const auto& co : s.coactions) {
      LongDimodule u{h.algebra.carrier, act, co};
      if (check_long_dimodule(u, h).passed()) out.push_back(u);
    }
  return out;
}

LinearMap d_map_xi(int m, const LongDimodule& u, const LongDimodule& v, const HomBialgebra& h) {
  const std::size_t du = u.dim(), dv = v.dim(), d = h.dim();
  return Wiring({du, dv})
      .split(1, v.coaction, dv, d)
      .map(0, u.carrier.alpha_inverse())
      .map(1, v.carrier.alpha_inverse())
      .map(2, h.alpha_pow(m))
      .permute({0, 2, 1})
      .merge(0, u.action)
      .matrix();
}

CheckReport check_d_equation(MonoidalContext ctx, int m, const LongDimodule& u, const LongDimodule& v,
                             const LongDimodule& w, const HomBialgebra& h) {
  CheckReport r("d-equation");
  const std::size_t du = u.dim(), dv = v.dim(), dw = w.dim();
  const LinearMap xi_uv = d_map_xi(m, u, v, h), xi_vw = d_map_xi(m, v, w, h);
  auto conjugated = [&](Wiring x) {
    return x.map(0, u.carrier.alpha_pow(ctx.i + 1))
        .map(2, w.carrier.alpha_pow(-ctx.j - 1))
        .map(1, 2, xi_vw, {dv, dw})
        .map(0, u.carrier.alpha_pow(-ctx.i - 1))
        .map(2, w.carrier.alpha_pow(ctx.j + 1));
  };
  Wiring lhs = conjugated(Wiring({du, dv, dw})).map(0, 2, xi_uv, {du, dv});
  Wiring rhs = conjugated(Wiring({du, dv, dw}).map(0, 2, xi_uv, {du, dv}));
  r.compare("d-equation", lhs, rhs);
  return r;
}

HomBialgebra long_codouble(const HomBialgebra& h) { return codouble_bialgebra(long_entwining(h)); }

LinearMap zeta_form(int q, const HomBialgebra& h) {
  const std::size_t d = h.dim(), dd = d * d;
  const LinearMap aq = h.alpha_pow(q);
  LinearMap z(1, dd * dd);
  for (std::size_t f = 0; f < d; ++f)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t g = 0; g < d; ++g)
        for (std::size_t y = 0; y < d; ++y) z(0, (f * d + x) * dd + g * d + y) = aq(f, y) * h.counit()(0, x) * h.unit()(g, 0);
  return z;
}

namespace {

// The covector t -> f(a t_1, ..., a t_k) on a k-fold tensor power.
LinearMap precompose_each(const LinearMap& f, const LinearMap& a, std::size_t n, std::size_t k) {
  LinearMap cur = f;
  std::size_t stride = 1;
  for (std::size_t s = 0; s < k; ++s, stride *= n) {
    LinearMap next(1, cur.dom());
    for (std::size_t idx = 0; idx < cur.dom(); ++idx) {
      const std::size_t digit = idx / stride % n, base = idx - digit * stride;
      for (std::size_t t = 0; t < n; ++t)
        if (!a(t, digit).is_zero()) next(0, idx) += cur(0, base + t * stride) * a(t, digit);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Wiring convolution(const LinearMap& f, const LinearMap& g, const HomBialgebra& d, std::size_t k) {
  const std::size_t n = d.dim();
  const LinearMap inv2 = d.alpha_pow(-2);
  Wiring w(std::vector<std::size_t>(k, n));
  for (std::size_t s = k; s-- > 0;) w.split(s, d.comult(), n, n);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < k; ++s) order.push_back(2 * s);
  for (std::size_t s = 0; s < k; ++s) order.push_back(2 * s + 1);
  w.permute(order);
  w.map(0, k, precompose_each(f, inv2, n, k), {});
  w.map(0, k, precompose_each(g, inv2, n, k), {});
  return w;
}

CheckReport check_zeta_d_type(int q, const HomBialgebra& h) {
  CheckReport r("zeta-d-type");
  const HomBialgebra d = long_codouble(h);
  const LinearMap z = zeta_form(q, h);
  const LinearMap z12 = kron(z, d.counit()), z23 = kron(d.counit(), z);
  r.compare("zeta-d-equation", convolution(z12, z23, d, 3), convolution(z23, z12, d, 3));
  return r;
}

// ---- Yetter-Drinfeld ----

EntwiningMap yd_entwining(const HomHopfAlgebra& hopf, int m) {
  const auto& h = hopf.bialgebra;
  const std::size_t d = h.dim();
  LinearMap phi = Wiring({d, d})
                      .split(1, h.comult(), d, d)
                      .split(2, h.comult(), d, d)
                      .map(0, h.alpha_pow(-2))
                      .map(1, compose(hopf.antipode, h.alpha_pow(m - 2)))
                      .map(2, h.alpha_pow(-2))
                      .map(3, h.alpha_pow(m - 4))
                      .permute({2, 1, 0, 3})
                      .merge(2, h.mult())
                      .merge(1, h.mult())
                      .matrix();
  return EntwiningMap(h, h, phi);
}

CheckReport check_yd_module(const YDModule& u, const HomHopfAlgebra& hopf) {
  const auto& h = hopf.bialgebra;
  CheckReport r("yd-module");
  r.absorb(check_right_module({u.carrier, u.action}, h.algebra), "module");
  r.absorb(check_right_comodule({u.carrier, u.coaction}, h.coalgebra), "comodule");
  const std::size_t du = u.dim(), d = h.dim();
  r.compare("yd-compatibility", Wiring({du, d}).merge(0, u.action).split(0, u.coaction, du, d),
            Wiring({du, d})
                .split(0, u.coaction, du, d)
                .split(2, h.comult(), d, d)
                .split(3, h.comult(), d, d)
                .map(1, h.alpha_pow(-1))
                .map(2, compose(hopf.antipode, h.alpha_pow(u.p - 2)))
                .map(3, h.alpha_pow(-1))
                .map(4, h.alpha_pow(u.p - 4))
                .permute({0, 3, 2, 1, 4})
                .merge(0, u.action)
                .merge(2, h.mult())
                .merge(1, h.mult()));
  return r;
}

std::vector<YDModule> yd_candidates(const HomHopfAlgebra& hopf, int p) {
  const auto& h = hopf.bialgebra;
  const std::size_t d = h.dim();
  std::vector<YDModule> out;
  YDModule unit{ObjectWithAut(), h.counit(), h.unit(), p};
  if (check_yd_module(unit, hopf).passed()) out.push_back(unit);
  auto s = basic_structures(h);
  // Coadjoint coactions u -> alpha^a(u_21) (x) S(alpha^b(u_1)) alpha^c(u_22).
  for (int a = -2; a <= 0; ++a)
    for (int b = -2; b <= 0; ++b)
      for (int c = -2; c <= 0; ++c)
        s.coactions.push_back(Wiring({d})
                                  .split(0, h.comult(), d, d)
                                  .split(1, h.comult(), d, d)
                                  .map(0, compose(hopf.antipode, h.alpha_pow(b)))
                                  .map(1, h.alpha_pow(a))
                                  .map(2, h.alpha_pow(c))
                                  .permute({1, 0, 2})
                                  .merge(1, h.mult())
                                  .matrix());
  dedupe(s.coactions);
  for (const auto& act : s.actions)
    for (const auto& co : s.coactions) {
      YDModule u{h.algebra.carrier, act, co, p};
      if (check_yd_module(u, hopf).passed()) out.push_back(u);
    }
  return out;
}

HomBialgebra drinfeld_codouble(const HomHopfAlgebra& hopf, int m) {
  const auto& h = hopf.bialgebra;
  const std::size_t d = h.dim();
  // e_i (x) c -> alpha^-2(e_i21) (x) S(alpha^{m-2}(e_i1)) (alpha^-2(c) alpha^{m-4}(e_i22)), assembled densely.
  LinearMap twice = compose(kron(id(d), h.comult()), h.comult());
  LinearMap step = compose({kron(id(d), h.mult()), kron({id(d), id(d), h.mult()}), kron({id(d), id(d), flip(d, d)}),
                            kron({flip(d, d), id(d), id(d)}),
                            kron({compose(hopf.antipode, h.alpha_pow(m - 2)), h.alpha_pow(-2), h.alpha_pow(m - 4),
                                  h.alpha_pow(-2)}),
                            kron(twice, id(d))});
  LinearMap comult = printed_codouble_comult(h.algebra, h.coalgebra, step);
  LinearMap counit = kron(h.unit().transpose(), h.counit());
  // (f (x) x)(f' (x) y) = f * f' (x) xy with (f * f')(y) = f(alpha^-2 y_1) f'(alpha^-2 y_2).
  LinearMap convolution_mult = compose(kron(h.alpha_pow(-2), h.alpha_pow(-2)), h.comult()).transpose();
  LinearMap mult = compose(kron(convolution_mult, h.mult()), kron({id(d), flip(d, d), id(d)}));
  LinearMap unit = kron(h.counit().transpose(), h.unit());
  ObjectWithAut carrier = dual_times(h.algebra.carrier, h.algebra.carrier);
  return HomBialgebra(HomAlgebra(carrier, mult, unit), HomCoalgebra(carrier, comult, counit));
}

LinearMap braiding_tau(MonoidalContext ctx, const YDModule& u, const YDModule& v, const HomHopfAlgebra& hopf) {
  if (u.p != v.p) throw PreconditionError("Yetter-Drinfeld modules of different degrees");
  const auto& h = hopf.bialgebra;
  const std::size_t du = u.dim(), dv = v.dim(), d = h.dim();
  return Wiring({du, dv})
      .split(1, v.coaction, dv, d)
      .map(1, v.carrier.alpha_pow(ctx.j - ctx.i - 1))
      .map(0, u.carrier.alpha_pow(ctx.i - ctx.j - 1))
      .map(2, h.alpha_pow(-u.p))
      .permute({1, 0, 2})
      .merge(1, u.action)
      .matrix();
}

CheckReport check_hom_ybe(MonoidalContext ctx, const YDModule& u, const YDModule& v, const YDModule& w,
                          const HomHopfAlgebra& h) {
  if (u.p != v.p || v.p != w.p) throw PreconditionError("Yetter-Drinfeld modules of different degrees");
  CheckReport r("hom-ybe");
  const std::size_t du = u.dim(), dv = v.dim(), dw = w.dim();
  const LinearMap t_uv = braiding_tau(ctx, u, v, h), t_uw = braiding_tau(ctx, u, w, h),
                  t_vw = braiding_tau(ctx, v, w, h);
  // a_{X,Y,Z} on slots [x, y, z] and its inverse.
  auto assoc = [&](Wiring& x, const ObjectWithAut& first, const ObjectWithAut& last) {
    x.map(0, first.alpha_pow(ctx.i + 1)).map(2, last.alpha_pow(-ctx.j - 1));
  };
  auto assoc_inv = [&](Wiring& x, const ObjectWithAut& first, const ObjectWithAut& last) {
    x.map(0, first.alpha_pow(-ctx.i - 1)).map(2, last.alpha_pow(ctx.j + 1));
  };
  Wiring lhs({du, dv, dw});
  assoc(lhs, u.carrier, w.carrier);
  lhs.map(1, 2, t_vw, {dw, dv});
  assoc_inv(lhs, u.carrier, v.carrier);
  lhs.map(0, 2, t_uw, {dw, du});
  assoc(lhs, w.carrier, v.carrier);
  lhs.map(1, 2, t_uv, {dv, du});
  Wiring rhs({du, dv, dw});
  rhs.map(0, 2, t_uv, {dv, du});
  assoc(rhs, v.carrier, w.carrier);
  rhs.map(1, 2, t_uw, {dw, du});
  assoc_inv(rhs, v.carrier, u.carrier);
  rhs.map(0, 2, t_vw, {dw, dv});
  assoc(rhs, w.carrier, u.carrier);
  r.compare("hom-ybe", lhs, rhs);
  return r;
}

LinearMap coquasi_form(const HomHopfAlgebra& hopf, int m) {
  const auto& h = hopf.bialgebra;
  const std::size_t d = h.dim(), dd = d * d;
  const LinearMap am = h.alpha_pow(-m);
  LinearMap xi(1, dd * dd);
  for (std::size_t f = 0; f < d; ++f)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t g = 0; g < d; ++g)
        for (std::size_t y = 0; y < d; ++y)
          xi(0, (f * d + x) * dd + g * d + y) = am(f, y) * h.counit()(0, x) * h.unit()(g, 0);
  return xi;
}

LinearMap form_braiding(MonoidalContext ctx, const RightHomComodule& x, const RightHomComodule& y,
                        const LinearMap& form, std::size_t dim_d) {
  const std::size_t dx = x.dim(), dy = y.dim();
  return Wiring({dx, dy})
      .split(1, y.coaction, dy, dim_d)
      .split(0, x.coaction, dx, dim_d)
      .permute({2, 0, 1, 3})
      .map(2, 2, form, {})
      .map(0, y.carrier.alpha_pow(ctx.j - ctx.i - 1))
      .map(1, x.carrier.alpha_pow(ctx.i - ctx.j - 1))
      .matrix();
}

}  // namespace homalg
