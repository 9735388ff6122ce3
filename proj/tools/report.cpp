#include "report.hpp"

#include <openssl/evp.h>

#include <json.hpp>

#include "homalg/applications.hpp"
#include "homalg/examples.hpp"
#include "homalg/serialize.hpp"

namespace homalg::cli {

using json = nlohmann::ordered_json;
namespace ex = homalg::examples;

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

void Report::add_input(const std::string& path) { inputs.emplace_back(path, sha256_hex(io::read_text(path))); }

bool Report::passed() const {
  for (const auto& [label, r] : sections)
    if (!r.passed()) return false;
  return true;
}

namespace {

std::size_t count_axioms(const Report& rep, bool failed_only) {
  std::size_t n = 0;
  for (const auto& [label, r] : rep.sections)
    for (const auto& a : r.results()) n += !failed_only || !a.pass;
  return n;
}

}  // namespace

std::string Report::text() const {
  std::string out = std::string(tool_name) + " " + tool_version + " " + verb + " " + kind + "\n";
  out += "params:";
  for (const auto& [k, v] : params) out += " " + k + "=" + v;
  out += "\n";
  for (const auto& [path, digest] : inputs) out += "input: " + path + " sha256:" + digest + "\n";
  for (const auto& path : outputs) out += "output: " + path + "\n";
  for (const auto& [label, r] : sections) {
    out += "[" + label + "]\n";
    for (const auto& a : r.results()) {
      out += std::string(a.pass ? "  pass  " : "  FAIL  ") + a.id;
      if (!a.pass && !a.witness.empty())
        out += "  at " + witness_str(a.witness) + ": lhs " + a.lhs.str() + " != rhs " + a.rhs.str();
      out += "\n";
    }
  }
  const std::size_t total = count_axioms(*this, false), failed = count_axioms(*this, true);
  out += std::string("overall: ") + (passed() ? "PASS" : "FAIL") + " (" + std::to_string(total - failed) + "/" +
         std::to_string(total) + " axioms)\n";
  return out;
}

std::string Report::jsonl() const {
  std::string out;
  json head;
  head["record"] = "header";
  head["tool"] = tool_name;
  head["version"] = tool_version;
  head["verb"] = verb;
  head["kind"] = kind;
  json p = json::object();
  for (const auto& [k, v] : params) p[k] = v;
  head["params"] = std::move(p);
  json in = json::array();
  for (const auto& [path, digest] : inputs) in.push_back({{"path", path}, {"sha256", digest}});
  head["inputs"] = std::move(in);
  head["outputs"] = outputs;
  out += head.dump() + "\n";
  for (const auto& [label, r] : sections)
    for (const auto& a : r.results()) {
      json line;
      line["record"] = "axiom";
      line["subject"] = label;
      line["id"] = a.id;
      line["group"] = a.group;
      line["verdict"] = a.pass ? "pass" : "fail";
      line["witness"] = a.witness;
      if (!a.pass && !a.witness.empty()) {
        line["lhs"] = a.lhs.str();
        line["rhs"] = a.rhs.str();
      }
      out += line.dump() + "\n";
    }
  json tail;
  tail["record"] = "summary";
  tail["verdict"] = passed() ? "pass" : "fail";
  tail["axioms"] = count_axioms(*this, false);
  tail["failed"] = count_axioms(*this, true);
  out += tail.dump() + "\n";
  return out;
}

Report example_suite() {
  Report rep;
  rep.verb = "report";
  rep.kind = "suite";
  const std::vector<std::pair<std::string, HomHopfAlgebra>> classical = {
      {"kC2", ex::kc2()}, {"kC4", ex::cyclic_group_algebra(4)}, {"H4", ex::sweedler()}};
  const std::vector<std::pair<std::string, HomHopfAlgebra>> twisted = {
      {"twisted kC4", ex::twisted_kc4()}, {"twisted H4 (x -> 2x)", ex::twisted_sweedler(2)}};
  for (const auto& group : {classical, twisted})
    for (const auto& [name, h] : group) rep.sections.emplace_back(name + " hopf", check_hom_hopf(h));

  for (const auto& [name, h] : {std::pair{std::string("kC2"), ex::kc2()}, {"twisted kC4", ex::twisted_kc4()}}) {
    const auto& b = h.bialgebra;
    Cotwistor c(b, b, flip(b.dim(), b.dim()));
    rep.sections.emplace_back(name + " flip cotwistor", check_cotwistor(c, true));
    rep.sections.emplace_back(name + " smash coproduct", check_hom_coalgebra(build_smash_coproduct(c)));
  }

  const auto& tsw = ex::twisted_sweedler(2);
  const std::vector<std::pair<std::string, EntwiningMap>> entwinings = {
      {"doi twisted kC4 m=0", doi_hopf_entwining(doi_self_datum(ex::twisted_kc4().bialgebra, 0, 0))},
      {"long twisted H4", long_entwining(tsw.bialgebra)},
      {"yd twisted H4 m=0", yd_entwining(tsw, 0)}};
  for (const auto& [name, e] : entwinings) {
    rep.sections.emplace_back(name + " entwining", check_entwining(e));
    for (int n = -2; n <= 2; ++n) {
      rep.sections.emplace_back(name + " H(x)A n=" + std::to_string(n),
                                check_entwined_module(canonical_module_HA(e, n), e));
      rep.sections.emplace_back(name + " A(x)H n=" + std::to_string(n),
                                check_entwined_module(canonical_module_AH(e, n), e));
    }
  }
  rep.sections.emplace_back("drinfeld codouble twisted H4 m=0", check_hom_bialgebra(drinfeld_codouble(tsw, 0)));

  const auto& tk = ex::twisted_kc4();
  const auto longs = long_candidates(tk.bialgebra);
  const auto yds = yd_candidates(tk, 0);
  for (MonoidalContext ctx : {MonoidalContext{-1, -1}, MonoidalContext{0, 0}, MonoidalContext{1, 0}}) {
    const std::string tag = " (i,j)=(" + std::to_string(ctx.i) + "," + std::to_string(ctx.j) + ")";
    rep.sections.emplace_back("d-equation twisted kC4" + tag,
                              check_d_equation(ctx, 0, longs[0], longs[1 % longs.size()], longs[2 % longs.size()],
                                               tk.bialgebra));
    rep.sections.emplace_back("hom-ybe twisted kC4" + tag,
                              check_hom_ybe(ctx, yds[0], yds[1 % yds.size()], yds[2 % yds.size()], tk));
  }
  rep.sections.emplace_back("zeta twisted kC4 q=0", check_zeta_d_type(0, tk.bialgebra));
  return rep;
}

}  // namespace homalg::cli
