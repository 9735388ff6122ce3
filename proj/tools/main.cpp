#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "homalg/applications.hpp"
#include "homalg/error.hpp"
#include "homalg/examples.hpp"
#include "homalg/serialize.hpp"
#include "report.hpp"

using namespace homalg;
namespace ex = homalg::examples;

namespace {

struct UsageError : Error {
  using Error::Error;
};

// Flags shared by every verb; which ones a kind accepts is listed in `grammar`.
struct Options {
  std::vector<std::string> files;
  std::string out, jsonl, b, h, phi, algebra, coalgebra, bialgebra, hopf, entwining, datum, order, side, name;
  std::string c = "-1";
  std::vector<std::string> modules;
  int i = 0, j = 0, n = 0, m = 0, p = 0, q = 0, k = 0;
  std::size_t index = 0;
  bool monoidal = false, no_alpha_morphism = false, k_given = false;
};

struct KindSpec {
  std::size_t files;
  std::set<std::string> flags;
  std::set<std::string> required = {};
};

const std::map<std::string, std::map<std::string, KindSpec>> grammar = {
    {"verify",
     {{"algebra", {1, {"--no-alpha-morphism"}}},
      {"coalgebra", {1, {"--no-alpha-morphism"}}},
      {"bialgebra", {1, {"--no-alpha-morphism"}}},
      {"hopf", {1, {"--no-alpha-morphism"}}},
      {"cotwistor", {1, {"--monoidal"}}},
      {"entwining", {1, {"--monoidal"}}},
      {"module", {1, {"--algebra"}, {"--algebra"}}},
      {"comodule", {1, {"--coalgebra"}, {"--coalgebra"}}},
      {"entwined-module", {1, {"--entwining", "--n"}, {"--entwining"}}},
      {"doi-datum", {1, {}}},
      {"doi-module", {1, {"--datum", "--k"}, {"--datum"}}},
      {"doi-monoidal", {1, {}}},
      {"long-dimodule", {1, {"--bialgebra"}, {"--bialgebra"}}},
      {"yd-module", {1, {"--hopf", "--p"}, {"--hopf"}}}}},
    {"construct",
     {{"example", {0, {"--name", "--c", "--out"}, {"--name"}}},
      {"dual", {1, {"--out"}}},
      {"smash", {0, {"--B", "--H", "--phi", "--out"}, {"--B", "--H", "--phi"}}},
      {"smash-bialgebra", {0, {"--B", "--H", "--phi", "--order", "--out"}, {"--B", "--H", "--phi", "--order"}}},
      {"codouble", {1, {"--out"}}},
      {"codouble-bialgebra", {1, {"--out"}}},
      {"doi-datum", {1, {"--k", "--m", "--out"}}},
      {"doi-entwining", {1, {"--out"}}},
      {"doi-codouble", {1, {"--out"}}},
      {"long-entwining", {1, {"--out"}}},
      {"long-codouble", {1, {"--out"}}},
      {"long-dimodule", {1, {"--index", "--out"}}},
      {"yd-entwining", {1, {"--m", "--out"}}},
      {"yd-module", {1, {"--p", "--index", "--out"}}},
      {"drinfeld-codouble", {1, {"--m", "--out"}}},
      {"hopf-module-entwining", {1, {"--n", "--out"}}},
      {"canonical-module", {1, {"--side", "--n", "--out"}, {"--side"}}}}},
    {"correspond",
     {{"entwining", {1, {"--out"}}},
      {"cotwistor", {1, {"--algebra", "--out"}, {"--algebra"}}},
      {"module", {1, {"--entwining", "--n", "--out"}, {"--entwining"}}},
      {"comodule", {1, {"--entwining", "--n", "--out"}, {"--entwining"}}}}},
    {"equation",
     {{"d", {0, {"--bialgebra", "--m", "-i", "-j", "--modules"}, {"--bialgebra", "--modules"}}},
      {"zeta", {0, {"--bialgebra", "--q"}, {"--bialgebra"}}},
      {"ybe", {0, {"--hopf", "--m", "--p", "-i", "-j", "--modules"}, {"--hopf", "--modules"}}}}},
    {"report", {{"suite", {0, {}}}}},
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(cli::Report& rep, const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  write_file(o.out, text);
  rep.outputs.push_back(o.out);
}

std::string structure_text(const HomCoalgebra& c) { return io::serialize(io::structure_file(c)); }
std::string structure_text(const HomBialgebra& b) { return io::serialize(io::structure_file(b)); }

std::string entwining_text(const EntwiningMap& e) {
  io::EntwiningFile f;
  f.coalgebra = e.h_algebra ? io::structure_file(e.h_bialgebra()) : io::structure_file(e.h);
  f.algebra = e.a_coalgebra ? io::structure_file(e.a_bialgebra()) : io::structure_file(e.a);
  f.phi = e.phi;
  return io::serialize(f);
}

std::string module_text(const ObjectWithAut& carrier, std::optional<LinearMap> action,
                        std::optional<LinearMap> coaction) {
  return io::serialize(io::ModuleFile{"", carrier, std::move(action), std::move(coaction)});
}

io::StructureFile input_structure(cli::Report& rep, const std::string& path) {
  rep.add_input(path);
  return io::load_structure(path);
}

io::ModuleFile input_module(cli::Report& rep, const std::string& path) {
  rep.add_input(path);
  return io::load_module(path);
}

EntwiningMap input_entwining(cli::Report& rep, const std::string& path) {
  rep.add_input(path);
  return io::load_entwining(path).entwining();
}

DoiHopfDatum input_datum(cli::Report& rep, const std::string& path) {
  rep.add_input(path);
  return io::load_datum(path).datum();
}

HomHopfAlgebra example_named(const std::string& name, const std::string& c) {
  if (name == "kc2") return ex::kc2();
  if (name == "kc4") return ex::cyclic_group_algebra(4);
  if (name == "twisted-kc4") return ex::twisted_kc4();
  if (name == "sweedler") return ex::sweedler();
  if (name == "twisted-sweedler") return ex::twisted_sweedler(Scalar::parse(c));
  if (name == "ground-field") return ex::ground_field();
  throw UsageError("unknown example '" + name + "'");
}

// "flip" or a file holding the matrix of phi.
LinearMap phi_matrix(cli::Report& rep, const std::string& phi, std::size_t d1, std::size_t d2) {
  if (phi == "flip") return flip(d1, d2);
  rep.add_input(phi);
  return io::parse_matrix(io::read_text(phi), phi, d1 * d2, d1 * d2);
}

std::vector<YDModule> yd_modules(cli::Report& rep, const Options& o, const HomHopfAlgebra& hopf) {
  std::vector<YDModule> out;
  for (const auto& path : o.modules) {
    auto f = input_module(rep, path);
    out.push_back(YDModule{f.carrier, f.require_action(), f.require_coaction(), o.p});
    rep.sections.emplace_back(path + " yd-module", check_yd_module(out.back(), hopf));
  }
  return out;
}

void set_param(cli::Report& rep, const std::string& key, int value) {
  for (auto& [k, v] : rep.params)
    if (k == key) v = std::to_string(value);
}

void verify(cli::Report& rep, const Options& o) {
  const std::string& kind = rep.kind;
  const std::string& file = o.files[0];
  CheckOptions opts;
  opts.alpha_morphism = !o.no_alpha_morphism;
  if (kind == "algebra") {
    rep.sections.emplace_back(file, check_hom_algebra(input_structure(rep, file).algebra(), opts));
  } else if (kind == "coalgebra") {
    rep.sections.emplace_back(file, check_hom_coalgebra(input_structure(rep, file).coalgebra(), opts));
  } else if (kind == "bialgebra") {
    rep.sections.emplace_back(file, check_hom_bialgebra(input_structure(rep, file).bialgebra(), opts));
  } else if (kind == "hopf") {
    rep.sections.emplace_back(file, check_hom_hopf(input_structure(rep, file).hopf(), opts));
  } else if (kind == "cotwistor") {
    rep.add_input(file);
    rep.sections.emplace_back(file, check_cotwistor(io::load_cotwistor(file).cotwistor(), o.monoidal));
  } else if (kind == "entwining") {
    rep.sections.emplace_back(file, check_entwining(input_entwining(rep, file), o.monoidal));
  } else if (kind == "module") {
    auto u = input_module(rep, file);
    auto a = input_structure(rep, o.algebra).algebra();
    rep.sections.emplace_back(file, check_right_module({u.carrier, u.require_action()}, a));
  } else if (kind == "comodule") {
    auto u = input_module(rep, file);
    auto c = input_structure(rep, o.coalgebra).coalgebra();
    rep.sections.emplace_back(file, check_right_comodule({u.carrier, u.require_coaction()}, c));
  } else if (kind == "entwined-module") {
    auto u = input_module(rep, file);
    auto e = input_entwining(rep, o.entwining);
    rep.sections.emplace_back(
        file, check_entwined_module({u.carrier, u.require_action(), u.require_coaction(), o.n}, e));
  } else if (kind == "doi-datum") {
    auto d = input_datum(rep, file);
    set_param(rep, "k", d.k);
    set_param(rep, "m", d.m);
    rep.sections.emplace_back(file, check_doi_hopf_datum(d));
  } else if (kind == "doi-module") {
    auto u = input_module(rep, file);
    auto d = input_datum(rep, o.datum);
    if (o.k_given) d.k = o.k;
    set_param(rep, "k", d.k);
    set_param(rep, "m", d.m);
    rep.sections.emplace_back(file, check_doi_hopf_module({u.carrier, u.require_action(), u.require_coaction()}, d));
  } else if (kind == "doi-monoidal") {
    auto d = input_datum(rep, file);
    set_param(rep, "k", d.k);
    set_param(rep, "m", d.m);
    rep.sections.emplace_back(file, check_doi_monoidal(d));
  } else if (kind == "long-dimodule") {
    auto u = input_module(rep, file);
    auto h = input_structure(rep, o.bialgebra).bialgebra();
    rep.sections.emplace_back(file, check_long_dimodule({u.carrier, u.require_action(), u.require_coaction()}, h));
  } else if (kind == "yd-module") {
    auto u = input_module(rep, file);
    auto h = input_structure(rep, o.hopf).hopf();
    rep.sections.emplace_back(file, check_yd_module({u.carrier, u.require_action(), u.require_coaction(), o.p}, h));
  }
}

void construct(cli::Report& rep, const Options& o) {
  const std::string& kind = rep.kind;
  if (kind == "example") {
    auto h = example_named(o.name, o.c);
    rep.sections.emplace_back(o.name, check_hom_hopf(h));
    emit(rep, o, io::serialize(io::structure_file(h)));
  } else if (kind == "dual") {
    auto s = input_structure(rep, o.files[0]);
    if (s.mult && s.comult) {
      auto d = dual_bialgebra(s.bialgebra());
      rep.sections.emplace_back("dual", check_hom_bialgebra(d));
      emit(rep, o, structure_text(d));
    } else {
      auto d = dual_coalgebra(s.algebra());
      rep.sections.emplace_back("dual", check_hom_coalgebra(d));
      emit(rep, o, structure_text(d));
    }
  } else if (kind == "smash" || kind == "smash-bialgebra") {
    auto b = input_structure(rep, o.b), h = input_structure(rep, o.h);
    LinearMap phi = phi_matrix(rep, o.phi, b.dim(), h.dim());
    if (kind == "smash") {
      auto s = build_smash_coproduct(Cotwistor(b.coalgebra(), h.coalgebra(), phi));
      rep.sections.emplace_back("smash coproduct", check_hom_coalgebra(s));
      emit(rep, o, structure_text(s));
    } else {
      if (o.order != "gh" && o.order != "hg") throw UsageError("--order must be gh or hg");
      auto s = build_smash_bialgebra(Cotwistor(b.bialgebra(), h.bialgebra(), phi),
                                     o.order == "gh" ? ProductOrder::gh : ProductOrder::hg, Validation::unchecked);
      rep.sections.emplace_back("smash bialgebra", check_hom_bialgebra(s));
      emit(rep, o, structure_text(s));
    }
  } else if (kind == "codouble") {
    auto d = codouble(input_entwining(rep, o.files[0]));
    rep.sections.emplace_back("codouble", check_hom_coalgebra(d));
    emit(rep, o, structure_text(d));
  } else if (kind == "codouble-bialgebra") {
    auto d = codouble_bialgebra(input_entwining(rep, o.files[0]));
    rep.sections.emplace_back("codouble", check_hom_bialgebra(d));
    emit(rep, o, structure_text(d));
  } else if (kind == "doi-datum") {
    // H coacting on itself by Delta and acting on itself by mu.
    auto d = doi_self_datum(input_structure(rep, o.files[0]).bialgebra(), o.k, o.m);
    rep.sections.emplace_back("datum", check_doi_hopf_datum(d));
    io::DatumFile f;
    f.bialgebra = io::structure_file(d.h);
    f.comodule_algebra = io::structure_file(HomBialgebra(d.a.algebra, *d.a.coalgebra));
    f.coaction = d.a.coaction;
    f.module_coalgebra = io::structure_file(HomBialgebra(*d.c.algebra, d.c.coalgebra));
    f.action = d.c.action;
    f.k = d.k;
    f.m = d.m;
    emit(rep, o, io::serialize(f));
  } else if (kind == "doi-entwining") {
    auto e = doi_hopf_entwining(input_datum(rep, o.files[0]));
    rep.sections.emplace_back("entwining", check_entwining(e));
    emit(rep, o, entwining_text(e));
  } else if (kind == "doi-codouble") {
    auto d = doi_codouble(input_datum(rep, o.files[0]));
    rep.sections.emplace_back("codouble", check_hom_coalgebra(d));
    emit(rep, o, structure_text(d));
  } else if (kind == "long-entwining") {
    auto e = long_entwining(input_structure(rep, o.files[0]).bialgebra());
    rep.sections.emplace_back("entwining", check_entwining(e, true));
    emit(rep, o, entwining_text(e));
  } else if (kind == "long-codouble") {
    auto d = long_codouble(input_structure(rep, o.files[0]).bialgebra());
    rep.sections.emplace_back("codouble", check_hom_bialgebra(d));
    emit(rep, o, structure_text(d));
  } else if (kind == "long-dimodule") {
    auto h = input_structure(rep, o.files[0]).bialgebra();
    auto all = long_candidates(h);
    if (o.index >= all.size()) throw UsageError("--index must be below " + std::to_string(all.size()));
    const auto& u = all[o.index];
    rep.sections.emplace_back("long-dimodule", check_long_dimodule(u, h));
    emit(rep, o, module_text(u.carrier, u.action, u.coaction));
  } else if (kind == "yd-entwining") {
    auto e = yd_entwining(input_structure(rep, o.files[0]).hopf(), o.m);
    rep.sections.emplace_back("entwining", check_entwining(e, true));
    emit(rep, o, entwining_text(e));
  } else if (kind == "yd-module") {
    auto h = input_structure(rep, o.files[0]).hopf();
    auto all = yd_candidates(h, o.p);
    if (o.index >= all.size()) throw UsageError("--index must be below " + std::to_string(all.size()));
    const auto& u = all[o.index];
    rep.sections.emplace_back("yd-module", check_yd_module(u, h));
    emit(rep, o, module_text(u.carrier, u.action, u.coaction));
  } else if (kind == "drinfeld-codouble") {
    auto d = drinfeld_codouble(input_structure(rep, o.files[0]).hopf(), o.m);
    rep.sections.emplace_back("codouble", check_hom_bialgebra(d));
    emit(rep, o, structure_text(d));
  } else if (kind == "hopf-module-entwining") {
    auto e = hopf_module_entwining(input_structure(rep, o.files[0]).bialgebra(), o.n);
    rep.sections.emplace_back("entwining", check_entwining(e));
    emit(rep, o, entwining_text(e));
  } else if (kind == "canonical-module") {
    auto e = input_entwining(rep, o.files[0]);
    if (o.side != "ha" && o.side != "ah") throw UsageError("--side must be ha or ah");
    auto u = o.side == "ha" ? canonical_module_HA(e, o.n) : canonical_module_AH(e, o.n);
    rep.sections.emplace_back("canonical module", check_entwined_module(u, e));
    emit(rep, o, module_text(u.carrier, u.action, u.coaction));
  }
}

void correspond(cli::Report& rep, const Options& o) {
  const std::string& kind = rep.kind;
  const std::string& file = o.files[0];
  if (kind == "entwining") {
    auto e = input_entwining(rep, file);
    auto c = cotwistor_from_entwining(e);
    rep.sections.emplace_back("entwining", check_entwining(e));
    rep.sections.emplace_back("cotwistor", check_cotwistor(c));
    io::CotwistorFile f;
    f.b = c.b_algebra ? io::structure_file(c.b_bialgebra()) : io::structure_file(c.b);
    f.h = c.h_algebra ? io::structure_file(c.h_bialgebra()) : io::structure_file(c.h);
    f.phi = c.phi;
    emit(rep, o, io::serialize(f));
  } else if (kind == "cotwistor") {
    rep.add_input(file);
    auto c = io::load_cotwistor(file).cotwistor();
    auto a = input_structure(rep, o.algebra);
    auto e = a.comult ? entwining_from_cotwistor(c, a.bialgebra()) : entwining_from_cotwistor(c, a.algebra());
    rep.sections.emplace_back("cotwistor", check_cotwistor(c));
    rep.sections.emplace_back("entwining", check_entwining(e));
    emit(rep, o, entwining_text(e));
  } else if (kind == "module") {
    auto u = input_module(rep, file);
    auto e = input_entwining(rep, o.entwining);
    EntwinedModule m{u.carrier, u.require_action(), u.require_coaction(), o.n};
    rep.sections.emplace_back("entwined module", check_entwined_module(m, e));
    auto c = to_codouble_comodule(m, e);
    rep.sections.emplace_back("codouble comodule", check_right_comodule(c, codouble(e)));
    emit(rep, o, module_text(c.carrier, std::nullopt, c.coaction));
  } else if (kind == "comodule") {
    auto u = input_module(rep, file);
    auto e = input_entwining(rep, o.entwining);
    RightHomComodule c{u.carrier, u.require_coaction()};
    rep.sections.emplace_back("codouble comodule", check_right_comodule(c, codouble(e)));
    auto m = from_codouble_comodule(c, e, o.n);
    rep.sections.emplace_back("entwined module", check_entwined_module(m, e));
    emit(rep, o, module_text(m.carrier, m.action, m.coaction));
  }
}

void equation(cli::Report& rep, const Options& o) {
  const std::string& kind = rep.kind;
  const MonoidalContext ctx{o.i, o.j};
  if ((kind == "d" || kind == "ybe") && o.modules.size() != 3) throw UsageError("--modules takes three files");
  if (kind == "d") {
    auto h = input_structure(rep, o.bialgebra).bialgebra();
    std::vector<LongDimodule> us;
    for (const auto& path : o.modules) {
      auto f = input_module(rep, path);
      us.push_back({f.carrier, f.require_action(), f.require_coaction()});
      rep.sections.emplace_back(path + " long-dimodule", check_long_dimodule(us.back(), h));
    }
    rep.sections.emplace_back("d-equation", check_d_equation(ctx, o.m, us[0], us[1], us[2], h));
  } else if (kind == "zeta") {
    rep.sections.emplace_back("zeta", check_zeta_d_type(o.q, input_structure(rep, o.bialgebra).bialgebra()));
  } else if (kind == "ybe") {
    auto h = input_structure(rep, o.hopf).hopf();
    auto us = yd_modules(rep, o, h);
    // The same data as entwined modules of degree m - p over the YD entwining of degree m.
    auto e = yd_entwining(h, o.m);
    for (std::size_t k = 0; k < us.size(); ++k)
      rep.sections.emplace_back(o.modules[k] + " entwined-module",
                                check_entwined_module({us[k].carrier, us[k].action, us[k].coaction, o.m - o.p}, e));
    rep.sections.emplace_back("hom-ybe", check_hom_ybe(ctx, us[0], us[1], us[2], h));
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Check and build Hom-structures, entwinings and their applications with exact rationals", "homalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cli::tool_name) + " " + cli::tool_version);
  Options o;
  std::string kind;
  std::map<std::string, CLI::App*> verbs;
  const std::map<std::string, std::string> blurbs = {
      {"verify", "check a structure file against its axioms"},
      {"construct", "build an example or derived structure and print it"},
      {"correspond", "translate between entwinings and cotwistors, or modules and comodules"},
      {"equation", "check the d-equation, zeta or the hom-Yang-Baxter equation"},
      {"report", "run the built-in example suite"}};
  for (const auto& [verb, kinds] : grammar) {
    auto* sub = app.add_subcommand(verb, blurbs.at(verb));
    std::vector<std::string> names;
    for (const auto& [name, rule] : kinds) names.push_back(name);
    sub->add_option("kind", kind)->required()->check(CLI::IsMember(names));
    sub->add_option("files", o.files);
    sub->add_option("--out", o.out, "write the constructed object here instead of stdout");
    sub->add_option("--jsonl", o.jsonl, "also write the line-delimited report here");
    sub->add_option("--B", o.b);
    sub->add_option("--H", o.h);
    sub->add_option("--phi", o.phi);
    sub->add_option("--algebra", o.algebra);
    sub->add_option("--coalgebra", o.coalgebra);
    sub->add_option("--bialgebra", o.bialgebra);
    sub->add_option("--hopf", o.hopf);
    sub->add_option("--entwining", o.entwining);
    sub->add_option("--datum", o.datum);
    sub->add_option("--order", o.order)->check(CLI::IsMember({"gh", "hg"}));
    sub->add_option("--side", o.side)->check(CLI::IsMember({"ha", "ah"}));
    sub->add_option("--name", o.name);
    sub->add_option("--c", o.c, "x -> c x for the twisted Sweedler example");
    sub->add_option("--modules", o.modules)->expected(3);
    sub->add_option("--index", o.index);
    sub->add_option("-i", o.i);
    sub->add_option("-j", o.j);
    sub->add_option("--n", o.n);
    sub->add_option("--m", o.m);
    sub->add_option("--p", o.p);
    sub->add_option("--q", o.q);
    sub->add_option("--k", o.k);
    sub->add_flag("--monoidal", o.monoidal, "also check E5-E6 / M5-M6");
    sub->add_flag("--no-alpha-morphism", o.no_alpha_morphism, "skip multiplicativity of alpha");
    verbs[verb] = sub;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cli::Report rep;
  CLI::App* sub = nullptr;
  for (const auto& [verb, s] : verbs)
    if (s->parsed()) {
      rep.verb = verb;
      sub = s;
    }
  rep.kind = kind;
  try {
    const KindSpec& rule = grammar.at(rep.verb).at(kind);
    if (o.files.size() != rule.files)
      throw UsageError(rep.verb + " " + kind + " takes " + std::to_string(rule.files) + " file argument(s)");
    for (const auto* opt : sub->get_options()) {
      const std::string name = opt->get_name();
      if (opt->count() == 0 || name == "kind" || name == "files" || name == "--jsonl" || name == "--help") continue;
      if (!rule.flags.count(name)) throw UsageError(name + " does not apply to " + rep.verb + " " + kind);
    }
    for (const auto& name : rule.required)
      if (sub->get_option(name)->count() == 0) throw UsageError(rep.verb + " " + kind + " requires " + name);
    rep.params = {{"i", std::to_string(o.i)}, {"j", std::to_string(o.j)}, {"k", std::to_string(o.k)},
                  {"m", std::to_string(o.m)}, {"n", std::to_string(o.n)}, {"p", std::to_string(o.p)},
                  {"q", std::to_string(o.q)}};
    if (!o.order.empty()) rep.params.emplace_back("order", o.order);
    if (!o.side.empty()) rep.params.emplace_back("side", o.side);
    o.k_given = sub->get_option("--k")->count() > 0;
    if (o.monoidal) rep.params.emplace_back("monoidal", "true");
    if (o.no_alpha_morphism) rep.params.emplace_back("alpha-morphism", "false");

    if (rep.verb == "verify") verify(rep, o);
    else if (rep.verb == "construct") construct(rep, o);
    else if (rep.verb == "correspond") correspond(rep, o);
    else if (rep.verb == "equation") equation(rep, o);
    else if (rep.verb == "report") {
      auto suite = cli::example_suite();
      rep.sections = std::move(suite.sections);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // With the constructed object on stdout, the text report moves to stderr.
  const bool object_on_stdout = (rep.verb == "construct" || rep.verb == "correspond") && o.out.empty();
  (object_on_stdout ? std::cerr : std::cout) << rep.text();
  try {
    if (o.jsonl == "-") std::cout << rep.jsonl();
    else if (!o.jsonl.empty()) write_file(o.jsonl, rep.jsonl());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
