#include "homalg/check_report.hpp"

#include "homalg/error.hpp"

namespace homalg {

namespace {

bool id_matches(const std::string& full, std::string_view id) {
  if (full == id) return true;
  return full.size() > id.size() && full.ends_with(id) && full[full.size() - id.size() - 1] == '/';
}

}  // namespace

bool CheckReport::passed() const {
  for (const auto& r : results_)
    if (!r.pass) return false;
  return true;
}

bool CheckReport::passed(std::string_view id) const {
  bool seen = false;
  for (const auto& r : results_)
    if (id_matches(r.id, id)) {
      seen = true;
      if (!r.pass) return false;
    }
  if (!seen) throw Error("report '" + subject_ + "' has no axiom '" + std::string(id) + "'");
  return true;
}

const AxiomResult* CheckReport::find(std::string_view id) const {
  for (const auto& r : results_)
    if (id_matches(r.id, id)) return &r;
  return nullptr;
}

std::vector<std::string> CheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results_)
    if (!r.pass) out.push_back(r.id);
  return out;
}

void CheckReport::add_flag(std::string id, bool pass, std::string group) {
  AxiomResult r;
  r.id = std::move(id);
  r.group = std::move(group);
  r.pass = pass;
  results_.push_back(std::move(r));
}

void CheckReport::compare(std::string id, const Wiring& lhs, const Wiring& rhs, std::string group) {
  if (lhs.input_dims() != rhs.input_dims() || lhs.output_dims() != rhs.output_dims())
    throw DimensionError("axiom '" + id + "': sides have different shapes");
  AxiomResult r;
  r.id = std::move(id);
  r.group = std::move(group);
  const std::size_t n = product(lhs.input_dims());
  for (std::size_t b = 0; b < n; ++b) {
    Tensor l = lhs.on_basis(b), rr = rhs.on_basis(b);
    if (l != rr) {
      r.pass = false;
      r.witness = unflatten(b, lhs.input_dims());
      r.lhs = std::move(l);
      r.rhs = std::move(rr);
      break;
    }
  }
  results_.push_back(std::move(r));
}

void CheckReport::absorb(const CheckReport& other, const std::string& prefix) {
  for (auto r : other.results_) {
    r.id = prefix + "/" + r.id;
    results_.push_back(std::move(r));
  }
}

std::string witness_str(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

}  // namespace homalg
