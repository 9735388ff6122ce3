// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "homalg/applications.hpp"
#include "homalg/error.hpp"
#include "homalg/examples.hpp"
#include "report.hpp"

using namespace homalg;
namespace ex = homalg::examples;

namespace {

struct Tally {
  std::size_t checks = 0, failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
  void expect(const CheckReport& r, const std::string& what) {
    std::string why = what;
    if (!r.passed()) why += " [" + r.failures().front() + "]";
    expect(r.passed(), why);
  }
};

using Cell = std::pair<std::size_t, std::size_t>;

LinearMap bump(LinearMap m, Cell cell) {
  m(cell.first, cell.second) += 1;
  return m;
}

std::vector<Cell> all_cells(std::size_t n) {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.emplace_back(r, c);
  return out;
}

std::vector<Cell> sample_cells(std::uint32_t seed, std::size_t n, int count) {
  std::mt19937 rng(seed);
  std::vector<Cell> out;
  for (int k = 0; k < count; ++k) out.emplace_back(rng() % n, rng() % n);
  return out;
}

const std::vector<MonoidalContext> contexts = {{-1, -1}, {0, 0}, {1, 0}};

std::string ctx_tag(MonoidalContext c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

EntwiningMap flip_entwining(const HomHopfAlgebra& h, const HomHopfAlgebra& a) {
  return EntwiningMap(h.bialgebra, a.bialgebra, flip(h.dim(), a.dim()));
}

void classical_reduction(Tally& t) {
  for (const auto& [name, h] : {std::pair{std::string("kC2"), ex::kc2()},
                                {"kC4", ex::cyclic_group_algebra(4)},
                                {"H4", ex::sweedler()}}) {
    t.expect(h.bialgebra.alpha().is_identity(), name + " alpha = id");
    t.expect(check_hom_hopf(h), name + " hopf");
    const auto& b = h.bialgebra;
    t.expect(check_cotwistor(Cotwistor(b, b, flip(b.dim(), b.dim())), true), name + " flip cotwistor");
    t.expect(check_entwining(flip_entwining(h, h), true), name + " flip entwining");
    t.expect(check_entwining(hopf_module_entwining(b, 0)), name + " hopf module entwining");
    t.expect(check_entwining(long_entwining(b)), name + " long entwining");
    t.expect(check_entwining(yd_entwining(h, 0)), name + " yd entwining");
    t.expect(check_doi_hopf_datum(doi_self_datum(b, 0, 0)), name + " doi datum");
    t.expect(check_hom_bialgebra(drinfeld_codouble(h, 0)), name + " drinfeld codouble");
  }
  // Phi(h (x) g) = g1 (x) h g2 on kC2, written out on the group basis.
  const auto k = ex::kc2().bialgebra;
  LinearMap phi(4, 4);
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t g = 0; g < 2; ++g) phi(g * 2 + (h ^ g), h * 2 + g) = 1;
  t.expect(hopf_module_entwining(k, 0).phi == phi, "kC2 hopf module entwining matches g1 (x) h g2");
}

void cotwistor_equivalence(Tally& t) {
  std::size_t mutations = 0;
  for (const auto& [name, h, cells] :
       {std::tuple{std::string("kC2"), ex::kc2(), all_cells(4)},
        std::tuple{std::string("twisted kC4"), ex::twisted_kc4(), sample_cells(4, 16, 24)}}) {
    const auto& b = h.bialgebra.coalgebra;
    Cotwistor c(b, b, flip(b.dim(), b.dim()));
    t.expect(check_cotwistor(c), name + " flip M1-M4");
    t.expect(check_hom_coalgebra(build_smash_coproduct(c)), name + " smash coproduct");
    for (Cell cell : cells) {
      Cotwistor mutated(b, b, bump(c.phi, cell));
      const bool m = check_cotwistor(mutated).passed();
      const bool s = check_hom_coalgebra(build_smash_coproduct(mutated, Validation::unchecked)).passed();
      t.expect(m == s, name + " mutation verdicts disagree at " + witness_str({cell.first, cell.second}));
      ++mutations;
    }
  }
  t.expect(mutations >= 20, "fewer than 20 mutations");
}

std::vector<EntwiningMap> bijection_inputs() {
  std::vector<EntwiningMap> out;
  for (const auto& [h, a] : std::vector<std::pair<HomHopfAlgebra, HomHopfAlgebra>>{
           {ex::kc2(), ex::kc2()},
           {ex::sweedler(), ex::kc2()},
           {ex::twisted_kc4(), ex::kc2()},
           {ex::twisted_sweedler(2), ex::kc2()},
           {ex::twisted_sweedler(), ex::kc2()},
           {ex::cyclic_group_algebra(4), ex::kc2()}})
    out.push_back(flip_entwining(h, a));
  out.push_back(hopf_module_entwining(ex::kc2().bialgebra, 0));
  out.push_back(hopf_module_entwining(ex::kc2().bialgebra, 1));
  out.push_back(long_entwining(ex::kc2().bialgebra));
  out.push_back(yd_entwining(ex::kc2(), -1));
  out.push_back(doi_hopf_entwining(doi_self_datum(ex::kc2().bialgebra, 1, 0)));
  return out;
}

void entwining_bijection(Tally& t) {
  std::size_t inputs = 0, mutations = 0;
  std::mt19937 rng(51);
  for (const auto& e : bijection_inputs()) {
    const std::string name = "(" + std::to_string(e.h.dim()) + "," + std::to_string(e.a.dim()) + ")";
    const bool shape = (e.h.dim() == 2 || e.h.dim() == 4) && e.a.dim() == 2;
    t.expect(shape, name + " outside the tested shapes");
    t.expect(check_entwining(e), name + " entwining");
    const auto c = cotwistor_from_entwining(e);
    t.expect(check_cotwistor(c), name + " cotwistor");
    t.expect(entwining_from_cotwistor(c, e.a_bialgebra()).phi == e.phi, name + " Phi -> phi -> Phi");
    const auto b = dual_bialgebra(e.a_bialgebra());
    Cotwistor fl(b, e.h_bialgebra(), flip(b.dim(), e.h.dim()));
    t.expect(cotwistor_from_entwining(entwining_from_cotwistor(fl, e.a_bialgebra())).phi == fl.phi,
             name + " phi -> Phi -> phi");
    t.expect(cotwistor_from_entwining(entwining_from_cotwistor(c, e.a_bialgebra())).phi == c.phi,
             name + " phi -> Phi -> phi (image)");
    ++inputs;
    const std::size_t d = e.phi.cod();
    for (int k = 0; k < 3; ++k) {
      EntwiningMap mutated = e;
      mutated.phi = bump(e.phi, {rng() % d, rng() % d});
      const auto er = check_entwining(mutated, true);
      const auto mr = check_cotwistor(cotwistor_from_entwining(mutated, Validation::unchecked), true);
      bool agree = er.passed() == mr.passed();
      for (const char* i : {"1", "2", "3", "4", "5", "6"})
        agree = agree && er.passed(std::string("E") + i) == mr.passed(std::string("M") + i);
      agree = agree && er.passed("alpha-compatible") == mr.passed("alpha-compatible");
      t.expect(agree, name + " E/M pairing disagrees");
      ++mutations;
    }
  }
  t.expect(inputs >= 10, "fewer than 10 bijection inputs");
  t.expect(mutations >= 20, "fewer than 20 pairing mutations");
}

std::vector<std::pair<std::string, EntwiningMap>> constructed_entwinings() {
  std::vector<std::pair<std::string, EntwiningMap>> out;
  const std::vector<std::pair<std::string, HomHopfAlgebra>> hopfs = {
      {"kC2", ex::kc2()}, {"twisted kC4", ex::twisted_kc4()}, {"H4", ex::sweedler()}, {"twisted H4", ex::twisted_sweedler(2)}};
  for (const auto& [name, h] : hopfs) {
    for (int m = -1; m <= 1; ++m) {
      const std::string deg = " m=" + std::to_string(m);
      out.emplace_back("doi " + name + deg, doi_hopf_entwining(doi_self_datum(h.bialgebra, 0, m)));
      out.emplace_back("yd " + name + deg, yd_entwining(h, m));
      out.emplace_back("hopf module " + name + deg, hopf_module_entwining(h.bialgebra, m));
    }
    out.emplace_back("long " + name, long_entwining(h.bialgebra));
  }
  return out;
}

void canonical_modules(Tally& t) {
  for (const auto& [name, e] : constructed_entwinings()) {
    t.expect(check_entwining(e), name + " entwining");
    for (int n = -2; n <= 2; ++n) {
      const std::string tag = name + " n=" + std::to_string(n);
      t.expect(check_entwined_module(canonical_module_HA(e, n), e), tag + " H(x)A");
      t.expect(check_entwined_module(canonical_module_AH(e, n), e), tag + " A(x)H");
    }
  }
  // A = k gives comodules, H = k gives modules, also for broken ones.
  std::mt19937 rng(55);
  const auto one = ex::ground_field().bialgebra;
  for (const auto& hopf : {ex::kc2(), ex::twisted_kc4(), ex::twisted_sweedler(2)}) {
    const auto& h = hopf.bialgebra;
    const std::size_t d = h.dim();
    EntwiningMap comod_e(h.coalgebra, one.algebra, LinearMap::identity(d));
    EntwiningMap mod_e(one.coalgebra, h.algebra, LinearMap::identity(d));
    t.expect(check_entwining(comod_e), "A = k entwining");
    t.expect(check_entwining(mod_e), "H = k entwining");
    std::vector<RightHomComodule> comods = {regular_comodule(h.coalgebra), {ObjectWithAut(), h.unit()}};
    std::vector<RightHomModule> mods = {regular_module(h.algebra), {ObjectWithAut(), h.counit()}};
    for (int k = 0; k < 4; ++k) {
      comods.push_back(comods[0]);
      comods.back().coaction(rng() % (d * d), rng() % d) += 1;
      mods.push_back(mods[0]);
      mods.back().action(rng() % d, rng() % (d * d)) += 1;
    }
    for (int n = -2; n <= 2; ++n) {
      for (const auto& c : comods)
        t.expect(check_entwined_module({c.carrier, c.carrier.alpha(), c.coaction, n}, comod_e).passed() ==
                     check_right_comodule(c, h.coalgebra).passed(),
                 "A = k verdict differs from the comodule verdict");
      for (const auto& m : mods)
        t.expect(check_entwined_module({m.carrier, m.action, m.carrier.alpha(), n}, mod_e).passed() ==
                     check_right_module(m, h.algebra).passed(),
                 "H = k verdict differs from the module verdict");
    }
  }
}

void monoidal_tensor(Tally& t) {
  std::size_t broken = 0;
  for (const auto& [name, hopf, cells] :
       {std::tuple{std::string("kC2"), ex::kc2(), all_cells(4)},
        std::tuple{std::string("twisted kC4"), ex::twisted_kc4(), sample_cells(57, 16, 24)}}) {
    const auto e = flip_entwining(hopf, hopf);
    t.expect(check_entwining(e, true), name + " E1-E6");
    for (auto ctx : contexts)
      for (int n = -1; n <= 1; ++n) {
        const auto u = canonical_module_HA(e, n), v = canonical_module_AH(e, n);
        const std::string tag = name + " " + ctx_tag(ctx) + " n=" + std::to_string(n);
        t.expect(check_entwined_module(tensor_entwined(ctx, u, v, e), e), tag + " U (x) V");
        t.expect(check_entwined_module(tensor_entwined(ctx, v, u, e), e), tag + " V (x) U");
      }
    const auto u = canonical_module_HA(e, 0);
    for (Cell cell : cells) {
      EntwiningMap mutated = e;
      mutated.phi = bump(e.phi, cell);
      if (check_entwining(mutated, true).passed("E5")) continue;
      ++broken;
      const auto tensor = tensor_entwined({0, 0}, u, u, mutated, Validation::unchecked);
      t.expect(!check_entwined_module(tensor, mutated).passed(), name + " tensor survives a broken E5");
    }
  }
  t.expect(broken >= 20, "fewer than 20 E5-breaking mutations");
}

void equation_suite(Tally& t) {
  const std::vector<std::pair<std::string, HomHopfAlgebra>> hopfs = {
      {"kC2", ex::kc2()}, {"twisted kC4", ex::twisted_kc4()}, {"twisted H4", ex::twisted_sweedler(2)}};
  for (const auto& [name, hopf] : hopfs) {
    const auto& h = hopf.bialgebra;
    const auto longs = long_candidates(h);
    for (auto ctx : contexts)
      for (int m = -1; m <= 1; ++m)
        for (std::size_t a = 0; a < longs.size(); ++a) {
          const auto& w = longs[(2 * a + m + 1) % longs.size()];
          t.expect(check_d_equation(ctx, m, longs[a], longs[(a + 1) % longs.size()], w, h),
                   name + " d-equation " + ctx_tag(ctx) + " m=" + std::to_string(m));
        }
    for (int q = -1; q <= 1; ++q)
      if (h.dim() > 2 || q == 0) t.expect(check_zeta_d_type(q, h), name + " zeta q=" + std::to_string(q));
    for (int p = -1; p <= 1; ++p) {
      const auto yds = yd_candidates(hopf, p);
      t.expect(!yds.empty(), name + " has YD candidates");
      for (auto ctx : contexts)
        for (std::size_t a = 0; a < yds.size(); ++a)
          t.expect(check_hom_ybe(ctx, yds[a], yds[(a + 1) % yds.size()], yds[(2 * a + 1) % yds.size()], hopf),
                   name + " hom-ybe " + ctx_tag(ctx) + " p=" + std::to_string(p));
    }
  }
  // P_n / Q_n on comodules over a smash coproduct.
  const auto b = ex::twisted_sweedler(2), hk = ex::kc2();
  const Cotwistor c(b.bialgebra, hk.bialgebra, flip(b.dim(), hk.dim()));
  const auto smash = build_smash_coproduct(c);
  LinearMap grouplike(smash.dim(), 1);
  grouplike(0, 0) = 1;
  for (const auto& u : {regular_comodule(smash), RightHomComodule{ObjectWithAut(), grouplike}})
    for (int n = -2; n <= 2; ++n) {
      const auto m = p_functor(n, u, c);
      t.expect(check_bicomodule(m, c), "P_n bicomodule n=" + std::to_string(n));
      const auto back = q_functor(m, c);
      t.expect(back.coaction == u.coaction && back.carrier == u.carrier, "Q_n P_n = id n=" + std::to_string(n));
      const auto again = p_functor(n, back, c);
      t.expect(again.h_coaction == m.h_coaction && again.b_coaction == m.b_coaction,
               "P_n Q_n = id n=" + std::to_string(n));
    }
  // Entwined modules to codouble comodules and back.
  for (const auto& e : {flip_entwining(ex::twisted_kc4(), ex::kc2()), yd_entwining(b, 0), long_entwining(hk.bialgebra)})
    for (int n = -2; n <= 2; ++n)
      for (const auto& u : {canonical_module_HA(e, n), canonical_module_AH(e, n)}) {
        const auto comod = to_codouble_comodule(u, e);
        const auto back = from_codouble_comodule(comod, e, n);
        t.expect(back.action == u.action && back.coaction == u.coaction && back.carrier == u.carrier,
                 "T R = id n=" + std::to_string(n));
        t.expect(to_codouble_comodule(back, e).coaction == comod.coaction, "R T = id n=" + std::to_string(n));
      }
}

void determinism(Tally& t) {
  const auto first = cli::example_suite(), second = cli::example_suite();
  t.expect(first.passed(), "example suite passes");
  t.expect(first.text() == second.text(), "text reports differ");
  t.expect(first.jsonl() == second.jsonl(), "jsonl reports differ");
  t.notes.push_back("text sha256:" + cli::sha256_hex(first.text()));
  t.notes.push_back("jsonl sha256:" + cli::sha256_hex(first.jsonl()));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"classical reduction", classical_reduction},
      {"cotwistor and smash coproduct verdicts", cotwistor_equivalence},
      {"entwining / cotwistor bijection", entwining_bijection},
      {"canonical entwined modules", canonical_modules},
      {"monoidal tensor of entwined modules", monoidal_tensor},
      {"d-equation, zeta, hom-YBE and round trips", equation_suite},
      {"deterministic reports", determinism},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    Tally t;
    try {
      run(t);
    } catch (const std::exception& err) {
      t.expect(false, std::string("threw: ") + err.what());
    }
    const bool ok = t.failures == 0 && t.checks > 0;
    all = all && ok;
    std::printf("%d %s %s (%zu/%zu checks)\n", ++index, ok ? "PASS" : "FAIL", name.c_str(), t.checks - t.failures,
                t.checks);
    for (const auto& note : t.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
