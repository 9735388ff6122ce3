#include "homalg/serialize.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "homalg/error.hpp"

namespace homalg::io {

using json = nlohmann::ordered_json;

namespace {

// ---- emitting ----

int depth(const json& j) {
  if (!j.is_array()) return 0;
  int d = 0;
  for (const auto& x : j) d = std::max(d, depth(x));
  return d + 1;
}

void emit(std::string& out, const json& j, int indent, bool in_array) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      emit(out, value, indent + 2, false);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array()) {
    const int d = depth(j);
    if (j.empty() || d <= 1 || (d == 2 && in_array)) {
      out += "[";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ", ";
        emit(out, j[k], indent, true);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      emit(out, j[k], indent + 2, true);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

std::string dump(const json& j) {
  std::string out;
  emit(out, j, 0, false);
  return out + "\n";
}

json matrix_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.cod(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dom(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json structure_json(const StructureFile& s) {
  const std::size_t d = s.dim();
  json j;
  j["dim"] = d;
  j["alpha"] = matrix_json(s.carrier.alpha());
  if (s.mult) {
    json t = json::array();
    for (std::size_t k = 0; k < d; ++k) {
      json slice = json::array();
      for (std::size_t i = 0; i < d; ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < d; ++jj) row.push_back((*s.mult)(k, i * d + jj).str());
        slice.push_back(std::move(row));
      }
      t.push_back(std::move(slice));
    }
    j["mult"] = std::move(t);
    json u = json::array();
    for (std::size_t k = 0; k < d; ++k) u.push_back((*s.unit)(k, 0).str());
    j["unit"] = std::move(u);
  }
  if (s.comult) {
    json t = json::array();
    for (std::size_t i = 0; i < d; ++i) {
      json slice = json::array();
      for (std::size_t jj = 0; jj < d; ++jj) {
        json row = json::array();
        for (std::size_t k = 0; k < d; ++k) row.push_back((*s.comult)(i * d + jj, k).str());
        slice.push_back(std::move(row));
      }
      t.push_back(std::move(slice));
    }
    j["comult"] = std::move(t);
    json e = json::array();
    for (std::size_t k = 0; k < d; ++k) e.push_back((*s.counit)(0, k).str());
    j["counit"] = std::move(e);
  }
  if (s.antipode) j["antipode"] = matrix_json(*s.antipode);
  return j;
}

json nested_json(const StructureFile& s, const std::string& ref) {
  return ref.empty() ? structure_json(s) : json(ref);
}

// ---- parsing ----

json parse_document(std::string_view text, const std::string& where) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    throw ParseError(where + ":" + std::to_string(line) + ":" + std::to_string(col),
                     cut == std::string::npos ? what : what.substr(cut));
  }
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(where, "unknown field '" + key + "'");
  }
}

const json& field(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

Scalar scalar_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw ParseError(where, "expected a rational string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, std::string(e.what()).substr(e.where().size() + 2));
  }
}

int integer_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

const json& array_at(const json& j, const std::string& where, std::size_t size) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  if (j.size() != size)
    throw ParseError(where, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  return j;
}

std::string at(const std::string& where, const char* key) { return where + ": " + key; }
std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

// cols == 0 accepts any common row length.
LinearMap matrix_at(const json& j, const std::string& where, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw ParseError(where, "expected a matrix");
  if (rows && j.size() != rows)
    throw ParseError(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  if (j.empty()) throw ParseError(where, "empty matrix");
  if (!cols) cols = j[0].is_array() ? j[0].size() : 0;
  if (!cols) throw ParseError(at(where, std::size_t{0}), "empty row");
  LinearMap m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = array_at(j[r], at(where, r), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_at(row[c], at(at(where, r), c));
  }
  return m;
}

StructureFile structure_from(const json& j, const std::string& where) {
  only_keys(j, where, {"dim", "alpha", "mult", "unit", "comult", "counit", "antipode"});
  const int dim = integer_at(field(j, where, "dim"), at(where, "dim"));
  if (dim <= 0) throw ParseError(at(where, "dim"), "dimension must be positive");
  const std::size_t d = static_cast<std::size_t>(dim);
  StructureFile s;
  s.source = where;
  try {
    s.carrier = ObjectWithAut(matrix_at(field(j, where, "alpha"), at(where, "alpha"), d, d));
  } catch (const NotInvertibleError& e) {
    throw ParseError(at(where, "alpha"), e.what());
  }
  const bool has_mult = j.contains("mult"), has_comult = j.contains("comult");
  if (has_mult != j.contains("unit")) throw ParseError(where, "mult and unit must be given together");
  if (has_comult != j.contains("counit")) throw ParseError(where, "comult and counit must be given together");
  if (!has_mult && !has_comult) throw ParseError(where, "neither mult nor comult is given");
  if (has_mult) {
    const std::string w = at(where, "mult");
    const auto& t = array_at(j["mult"], w, d);
    LinearMap mult(d, d * d);
    for (std::size_t k = 0; k < d; ++k) {
      const auto& slice = array_at(t[k], at(w, k), d);
      for (std::size_t i = 0; i < d; ++i) {
        const auto& row = array_at(slice[i], at(at(w, k), i), d);
        for (std::size_t jj = 0; jj < d; ++jj) mult(k, i * d + jj) = scalar_at(row[jj], at(at(at(w, k), i), jj));
      }
    }
    s.mult = std::move(mult);
    const auto& u = array_at(j["unit"], at(where, "unit"), d);
    LinearMap unit(d, 1);
    for (std::size_t k = 0; k < d; ++k) unit(k, 0) = scalar_at(u[k], at(at(where, "unit"), k));
    s.unit = std::move(unit);
  }
  if (has_comult) {
    const std::string w = at(where, "comult");
    const auto& t = array_at(j["comult"], w, d);
    LinearMap comult(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto& slice = array_at(t[i], at(w, i), d);
      for (std::size_t jj = 0; jj < d; ++jj) {
        const auto& row = array_at(slice[jj], at(at(w, i), jj), d);
        for (std::size_t k = 0; k < d; ++k) comult(i * d + jj, k) = scalar_at(row[k], at(at(at(w, i), jj), k));
      }
    }
    s.comult = std::move(comult);
    const auto& e = array_at(j["counit"], at(where, "counit"), d);
    LinearMap counit(1, d);
    for (std::size_t k = 0; k < d; ++k) counit(0, k) = scalar_at(e[k], at(at(where, "counit"), k));
    s.counit = std::move(counit);
  }
  if (j.contains("antipode")) s.antipode = matrix_at(j["antipode"], at(where, "antipode"), d, d);
  return s;
}

StructureFile nested_from(const json& j, const std::string& where, const std::filesystem::path& base,
                          std::string& ref) {
  if (j.is_string()) {
    ref = j.get<std::string>();
    return load_structure(base / ref);
  }
  ref.clear();
  return structure_from(j, where);
}

LinearMap phi_from(const json& j, const std::string& where, std::size_t dim_in, std::size_t dim_out) {
  if (j.is_string()) {
    if (j.get<std::string>() != "flip") throw ParseError(where, "expected a matrix or \"flip\"");
    return flip(dim_in, dim_out);
  }
  return matrix_at(j, where, dim_in * dim_out, dim_in * dim_out);
}

}  // namespace

// ---- structure accessors ----

HomAlgebra StructureFile::algebra() const {
  if (!mult) throw ParseError(source, "missing field 'mult'");
  return HomAlgebra(carrier, *mult, *unit);
}

HomCoalgebra StructureFile::coalgebra() const {
  if (!comult) throw ParseError(source, "missing field 'comult'");
  return HomCoalgebra(carrier, *comult, *counit);
}

HomBialgebra StructureFile::bialgebra() const { return HomBialgebra(algebra(), coalgebra()); }

HomHopfAlgebra StructureFile::hopf() const {
  if (!antipode) throw ParseError(source, "missing field 'antipode'");
  return HomHopfAlgebra(bialgebra(), *antipode);
}

StructureFile structure_file(const HomAlgebra& a) {
  StructureFile s;
  s.carrier = a.carrier;
  s.mult = a.mult;
  s.unit = a.unit;
  return s;
}

StructureFile structure_file(const HomCoalgebra& c) {
  StructureFile s;
  s.carrier = c.carrier;
  s.comult = c.comult;
  s.counit = c.counit;
  return s;
}

StructureFile structure_file(const HomBialgebra& b) {
  StructureFile s = structure_file(b.algebra);
  s.comult = b.comult();
  s.counit = b.counit();
  return s;
}

StructureFile structure_file(const HomHopfAlgebra& h) {
  StructureFile s = structure_file(h.bialgebra);
  s.antipode = h.antipode;
  return s;
}

LinearMap ModuleFile::require_action() const {
  if (!action) throw ParseError(source, "missing field 'action'");
  return *action;
}

LinearMap ModuleFile::require_coaction() const {
  if (!coaction) throw ParseError(source, "missing field 'coaction'");
  return *coaction;
}

Cotwistor CotwistorFile::cotwistor() const {
  if (b.mult && h.mult) return Cotwistor(b.bialgebra(), h.bialgebra(), phi);
  return Cotwistor(b.coalgebra(), h.coalgebra(), phi);
}

EntwiningMap EntwiningFile::entwining() const {
  if (coalgebra.mult && algebra.comult) return EntwiningMap(coalgebra.bialgebra(), algebra.bialgebra(), phi);
  return EntwiningMap(coalgebra.coalgebra(), algebra.algebra(), phi);
}

DoiHopfDatum DatumFile::datum() const {
  ComoduleAlgebra a{comodule_algebra.algebra(), coaction, std::nullopt};
  if (comodule_algebra.comult) a.coalgebra = comodule_algebra.coalgebra();
  ModuleCoalgebra c{module_coalgebra.coalgebra(), action, std::nullopt};
  if (module_coalgebra.mult) c.algebra = module_coalgebra.algebra();
  return DoiHopfDatum{bialgebra.bialgebra(), std::move(a), std::move(c), k, m};
}

// ---- parsers ----

StructureFile parse_structure(std::string_view text, const std::string& where) {
  return structure_from(parse_document(text, where), where);
}

ModuleFile parse_module(std::string_view text, const std::string& where) {
  const json j = parse_document(text, where);
  only_keys(j, where, {"dim", "alpha", "action", "coaction"});
  const int dim = integer_at(field(j, where, "dim"), at(where, "dim"));
  if (dim <= 0) throw ParseError(at(where, "dim"), "dimension must be positive");
  const std::size_t d = static_cast<std::size_t>(dim);
  ModuleFile m;
  m.source = where;
  try {
    m.carrier = ObjectWithAut(matrix_at(field(j, where, "alpha"), at(where, "alpha"), d, d));
  } catch (const NotInvertibleError& e) {
    throw ParseError(at(where, "alpha"), e.what());
  }
  if (j.contains("action")) {
    m.action = matrix_at(j["action"], at(where, "action"), d, 0);
    if (m.action->dom() % d) throw ParseError(at(where, "action"), "column count is not a multiple of dim");
  }
  if (j.contains("coaction")) {
    m.coaction = matrix_at(j["coaction"], at(where, "coaction"), 0, d);
    if (m.coaction->cod() % d) throw ParseError(at(where, "coaction"), "row count is not a multiple of dim");
  }
  if (!m.action && !m.coaction) throw ParseError(where, "neither action nor coaction is given");
  return m;
}

CotwistorFile parse_cotwistor(std::string_view text, const std::string& where, const std::filesystem::path& base) {
  const json j = parse_document(text, where);
  only_keys(j, where, {"b", "h", "phi"});
  CotwistorFile c;
  c.b = nested_from(field(j, where, "b"), at(where, "b"), base, c.b_ref);
  c.h = nested_from(field(j, where, "h"), at(where, "h"), base, c.h_ref);
  c.phi = phi_from(field(j, where, "phi"), at(where, "phi"), c.b.dim(), c.h.dim());
  return c;
}

EntwiningFile parse_entwining(std::string_view text, const std::string& where, const std::filesystem::path& base) {
  const json j = parse_document(text, where);
  only_keys(j, where, {"coalgebra", "algebra", "phi"});
  EntwiningFile e;
  e.coalgebra = nested_from(field(j, where, "coalgebra"), at(where, "coalgebra"), base, e.coalgebra_ref);
  e.algebra = nested_from(field(j, where, "algebra"), at(where, "algebra"), base, e.algebra_ref);
  e.phi = phi_from(field(j, where, "phi"), at(where, "phi"), e.coalgebra.dim(), e.algebra.dim());
  return e;
}

DatumFile parse_datum(std::string_view text, const std::string& where, const std::filesystem::path& base) {
  const json j = parse_document(text, where);
  only_keys(j, where, {"bialgebra", "comodule_algebra", "coaction", "module_coalgebra", "action", "k", "m"});
  DatumFile d;
  d.bialgebra = nested_from(field(j, where, "bialgebra"), at(where, "bialgebra"), base, d.bialgebra_ref);
  d.comodule_algebra =
      nested_from(field(j, where, "comodule_algebra"), at(where, "comodule_algebra"), base, d.comodule_algebra_ref);
  d.module_coalgebra =
      nested_from(field(j, where, "module_coalgebra"), at(where, "module_coalgebra"), base, d.module_coalgebra_ref);
  const std::size_t dh = d.bialgebra.dim(), da = d.comodule_algebra.dim(), dc = d.module_coalgebra.dim();
  d.coaction = matrix_at(field(j, where, "coaction"), at(where, "coaction"), da * dh, da);
  d.action = matrix_at(field(j, where, "action"), at(where, "action"), dc, dc * dh);
  if (j.contains("k")) d.k = integer_at(j["k"], at(where, "k"));
  if (j.contains("m")) d.m = integer_at(j["m"], at(where, "m"));
  return d;
}

LinearMap parse_matrix(std::string_view text, const std::string& where, std::size_t rows, std::size_t cols) {
  return matrix_at(parse_document(text, where), where, rows, cols);
}

// ---- writers ----

std::string serialize(const StructureFile& s) { return dump(structure_json(s)); }

std::string serialize(const ModuleFile& m) {
  json j;
  j["dim"] = m.dim();
  j["alpha"] = matrix_json(m.carrier.alpha());
  if (m.action) j["action"] = matrix_json(*m.action);
  if (m.coaction) j["coaction"] = matrix_json(*m.coaction);
  return dump(j);
}

std::string serialize(const CotwistorFile& c) {
  json j;
  j["b"] = nested_json(c.b, c.b_ref);
  j["h"] = nested_json(c.h, c.h_ref);
  j["phi"] = matrix_json(c.phi);
  return dump(j);
}

std::string serialize(const EntwiningFile& e) {
  json j;
  j["coalgebra"] = nested_json(e.coalgebra, e.coalgebra_ref);
  j["algebra"] = nested_json(e.algebra, e.algebra_ref);
  j["phi"] = matrix_json(e.phi);
  return dump(j);
}

std::string serialize(const DatumFile& d) {
  json j;
  j["bialgebra"] = nested_json(d.bialgebra, d.bialgebra_ref);
  j["comodule_algebra"] = nested_json(d.comodule_algebra, d.comodule_algebra_ref);
  j["coaction"] = matrix_json(d.coaction);
  j["module_coalgebra"] = nested_json(d.module_coalgebra, d.module_coalgebra_ref);
  j["action"] = matrix_json(d.action);
  j["k"] = d.k;
  j["m"] = d.m;
  return dump(j);
}

// ---- files ----

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StructureFile load_structure(const std::filesystem::path& path) {
  return parse_structure(read_text(path), path.string());
}

ModuleFile load_module(const std::filesystem::path& path) { return parse_module(read_text(path), path.string()); }

CotwistorFile load_cotwistor(const std::filesystem::path& path) {
  return parse_cotwistor(read_text(path), path.string(), path.parent_path());
}

EntwiningFile load_entwining(const std::filesystem::path& path) {
  return parse_entwining(read_text(path), path.string(), path.parent_path());
}

DatumFile load_datum(const std::filesystem::path& path) {
  return parse_datum(read_text(path), path.string(), path.parent_path());
}

}  // namespace homalg::io
