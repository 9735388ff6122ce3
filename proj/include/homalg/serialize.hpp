#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "homalg/applications.hpp"

namespace homalg::io {

// On-disk structure: any subset of the algebra, coalgebra and antipode parts over one carrier.
// mult[k][i][j] is the coefficient of e_k in e_i e_j; comult[i][j][k] that of e_i (x) e_j in Delta(e_k).
struct StructureFile {
  std::string source;
  ObjectWithAut carrier;
  std::optional<LinearMap> mult, unit, comult, counit, antipode;

  std::size_t dim() const { return carrier.dim(); }
  HomAlgebra algebra() const;
  HomCoalgebra coalgebra() const;
  HomBialgebra bialgebra() const;
  HomHopfAlgebra hopf() const;
};

StructureFile structure_file(const HomAlgebra& a);
StructureFile structure_file(const HomCoalgebra& c);
StructureFile structure_file(const HomBialgebra& b);
StructureFile structure_file(const HomHopfAlgebra& h);

// A carrier with an optional action and coaction, both as plain matrices.
struct ModuleFile {
  std::string source;
  ObjectWithAut carrier;
  std::optional<LinearMap> action, coaction;

  std::size_t dim() const { return carrier.dim(); }
  LinearMap require_action() const;
  LinearMap require_coaction() const;
};

// A *_ref field holds the path a nested structure was loaded from; empty when it was inline.
struct CotwistorFile {
  StructureFile b, h;
  std::string b_ref, h_ref;
  LinearMap phi;
  Cotwistor cotwistor() const;
};

struct EntwiningFile {
  StructureFile coalgebra, algebra;
  std::string coalgebra_ref, algebra_ref;
  LinearMap phi;
  EntwiningMap entwining() const;
};

struct DatumFile {
  StructureFile bialgebra, comodule_algebra, module_coalgebra;
  std::string bialgebra_ref, comodule_algebra_ref, module_coalgebra_ref;
  LinearMap coaction, action;
  int k = 0, m = 0;
  DoiHopfDatum datum() const;
};

// Parsers take the document text and a name used in error locations. Nested structures may be
// given inline or as a path, resolved against base.
StructureFile parse_structure(std::string_view text, const std::string& where);
ModuleFile parse_module(std::string_view text, const std::string& where);
CotwistorFile parse_cotwistor(std::string_view text, const std::string& where, const std::filesystem::path& base);
EntwiningFile parse_entwining(std::string_view text, const std::string& where, const std::filesystem::path& base);
DatumFile parse_datum(std::string_view text, const std::string& where, const std::filesystem::path& base);

// A bare matrix document: a list of rows of rational strings.
LinearMap parse_matrix(std::string_view text, const std::string& where, std::size_t rows, std::size_t cols);

std::string serialize(const StructureFile& s);
std::string serialize(const ModuleFile& m);
std::string serialize(const CotwistorFile& c);
std::string serialize(const EntwiningFile& e);
std::string serialize(const DatumFile& d);

std::string read_text(const std::filesystem::path& path);
StructureFile load_structure(const std::filesystem::path& path);
ModuleFile load_module(const std::filesystem::path& path);
CotwistorFile load_cotwistor(const std::filesystem::path& path);
EntwiningFile load_entwining(const std::filesystem::path& path);
DatumFile load_datum(const std::filesystem::path& path);

}  // namespace homalg::io
