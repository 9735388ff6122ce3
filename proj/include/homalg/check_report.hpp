#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

struct AxiomResult {
  std::string id;
  std::string group;
  bool pass = true;
  // First failing basis tuple (slot-wise basis indices) with both evaluated sides.
  std::vector<std::size_t> witness;
  Tensor lhs, rhs;
};

class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<AxiomResult>& results() const { return results_; }

  bool passed() const;
  // True when every result whose id equals or ends with "/id" passed; throws if none exist.
  bool passed(std::string_view id) const;
  const AxiomResult* find(std::string_view id) const;
  std::vector<std::string> failures() const;

  void add(AxiomResult r) { results_.push_back(std::move(r)); }
  void add_flag(std::string id, bool pass, std::string group = "core");
  // Compare two wirings on every basis tuple of their common input.
  void compare(std::string id, const Wiring& lhs, const Wiring& rhs, std::string group = "core");
  void absorb(const CheckReport& other, const std::string& prefix);

 private:
  std::string subject_;
  std::vector<AxiomResult> results_;
};

std::string witness_str(const std::vector<std::size_t>& w);

}  // namespace homalg
