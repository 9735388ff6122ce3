#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "homalg/applications.hpp"
#include "homalg/error.hpp"
#include "homalg/examples.hpp"
#include "homalg/monoidal.hpp"
#include "homalg/serialize.hpp"

namespace py = pybind11;
using namespace homalg;

namespace {

py::object fraction(const Scalar& s) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(s.str());
}

Scalar to_scalar(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Scalar::parse(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return Scalar::parse(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return Scalar::parse(py::str(h.attr("numerator")).cast<std::string>() + "/" +
                         py::str(h.attr("denominator")).cast<std::string>());
  throw py::type_error("expected int, str or Fraction");
}

LinearMap to_map(const py::sequence& rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    for (const auto& x : row.cast<py::sequence>()) r.push_back(to_scalar(x));
    out.push_back(std::move(r));
  }
  return LinearMap::from_rows(out);
}

py::list rows_of(const LinearMap& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.cod(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.dom(); ++c) row.append(fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks for Hom-bialgebras, cotwistors, entwinings and their applications";

  py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", m.attr("Error"));
  py::register_exception<PreconditionError>(m, "PreconditionError", m.attr("Error"));
  py::register_exception<NotInvertibleError>(m, "NotInvertibleError", m.attr("Error"));
  py::register_exception<DimensionError>(m, "DimensionError", m.attr("Error"));

  py::class_<LinearMap>(m, "LinearMap")
      .def(py::init(&to_map), py::arg("rows"))
      .def_static("identity", &LinearMap::identity)
      .def_property_readonly("shape", [](const LinearMap& f) { return py::make_tuple(f.cod(), f.dom()); })
      .def("rows", &rows_of)
      .def("__getitem__", [](const LinearMap& f, std::pair<std::size_t, std::size_t> rc) {
        if (rc.first >= f.cod() || rc.second >= f.dom()) throw py::index_error();
        return fraction(f(rc.first, rc.second));
      })
      .def("__matmul__", [](const LinearMap& f, const LinearMap& g) { return compose(f, g); })
      .def("__eq__", [](const LinearMap& f, const LinearMap& g) { return f == g; })
      .def("__repr__", [](const LinearMap& f) { return "<LinearMap " + f.shape() + ">"; });
  m.def("kron", py::overload_cast<const LinearMap&, const LinearMap&>(&kron));
  m.def("flip", &flip);
  m.def("invert", &invert);

  py::class_<AxiomResult>(m, "AxiomResult")
      .def_readonly("id", &AxiomResult::id)
      .def_readonly("group", &AxiomResult::group)
      .def_readonly("passed", &AxiomResult::pass)
      .def_readonly("witness", &AxiomResult::witness)
      .def_property_readonly("lhs", [](const AxiomResult& a) { return a.lhs.str(); })
      .def_property_readonly("rhs", [](const AxiomResult& a) { return a.rhs.str(); });
  py::class_<CheckReport>(m, "CheckReport")
      .def_property_readonly("subject", &CheckReport::subject)
      .def_property_readonly("results", &CheckReport::results)
      .def("passed", py::overload_cast<>(&CheckReport::passed, py::const_))
      .def("passed_axiom", py::overload_cast<std::string_view>(&CheckReport::passed, py::const_))
      .def("failures", &CheckReport::failures)
      .def("__bool__", py::overload_cast<>(&CheckReport::passed, py::const_));

  py::class_<ObjectWithAut>(m, "ObjectWithAut")
      .def(py::init<LinearMap>())
      .def_property_readonly("dim", &ObjectWithAut::dim)
      .def_property_readonly("alpha", &ObjectWithAut::alpha)
      .def("alpha_pow", &ObjectWithAut::alpha_pow);
  py::class_<HomAlgebra>(m, "HomAlgebra")
      .def(py::init<ObjectWithAut, LinearMap, LinearMap>())
      .def_readonly("carrier", &HomAlgebra::carrier)
      .def_readonly("mult", &HomAlgebra::mult)
      .def_readonly("unit", &HomAlgebra::unit);
  py::class_<HomCoalgebra>(m, "HomCoalgebra")
      .def(py::init<ObjectWithAut, LinearMap, LinearMap>())
      .def_readonly("carrier", &HomCoalgebra::carrier)
      .def_readonly("comult", &HomCoalgebra::comult)
      .def_readonly("counit", &HomCoalgebra::counit);
  py::class_<HomBialgebra>(m, "HomBialgebra")
      .def(py::init<HomAlgebra, HomCoalgebra>())
      .def_readonly("algebra", &HomBialgebra::algebra)
      .def_readonly("coalgebra", &HomBialgebra::coalgebra)
      .def_property_readonly("dim", &HomBialgebra::dim)
      .def("__eq__", [](const HomBialgebra& a, const HomBialgebra& b) { return a == b; });
  py::class_<HomHopfAlgebra>(m, "HomHopfAlgebra")
      .def(py::init<HomBialgebra, LinearMap>())
      .def_readonly("bialgebra", &HomHopfAlgebra::bialgebra)
      .def_readonly("antipode", &HomHopfAlgebra::antipode)
      .def_property_readonly("dim", &HomHopfAlgebra::dim)
      .def("__eq__", [](const HomHopfAlgebra& a, const HomHopfAlgebra& b) { return a == b; });

  auto ex = m.def_submodule("examples", "Built-in Hopf algebras");
  ex.def("kc2", &examples::kc2);
  ex.def("cyclic_group_algebra", &examples::cyclic_group_algebra);
  ex.def("twisted_kc4", &examples::twisted_kc4);
  ex.def("sweedler", &examples::sweedler);
  ex.def("twisted_sweedler", [](const py::object& c) { return examples::twisted_sweedler(to_scalar(c)); },
         py::arg("c") = -1);
  ex.def("ground_field", &examples::ground_field);

  m.def("check_hom_algebra", [](const HomAlgebra& a) { return check_hom_algebra(a); });
  m.def("check_hom_coalgebra", [](const HomCoalgebra& c) { return check_hom_coalgebra(c); });
  m.def("check_hom_bialgebra", [](const HomBialgebra& b) { return check_hom_bialgebra(b); });
  m.def("check_hom_hopf", [](const HomHopfAlgebra& h) { return check_hom_hopf(h); });
  m.def("dual_bialgebra", &dual_bialgebra);

  py::class_<MonoidalContext>(m, "MonoidalContext")
      .def(py::init<int, int>(), py::arg("i") = 0, py::arg("j") = 0)
      .def_readwrite("i", &MonoidalContext::i)
      .def_readwrite("j", &MonoidalContext::j);

  py::enum_<ProductOrder>(m, "ProductOrder").value("gh", ProductOrder::gh).value("hg", ProductOrder::hg);
  py::class_<Cotwistor>(m, "Cotwistor")
      .def(py::init<const HomBialgebra&, const HomBialgebra&, LinearMap>())
      .def_readonly("phi", &Cotwistor::phi)
      .def("b_bialgebra", &Cotwistor::b_bialgebra)
      .def("h_bialgebra", &Cotwistor::h_bialgebra);
  py::class_<Bicomodule>(m, "Bicomodule")
      .def_readonly("carrier", &Bicomodule::carrier)
      .def_readonly("h_coaction", &Bicomodule::h_coaction)
      .def_readonly("b_coaction", &Bicomodule::b_coaction)
      .def_readonly("n", &Bicomodule::n);
  m.def("check_cotwistor", &check_cotwistor, py::arg("cotwistor"), py::arg("monoidal") = false);
  m.def("build_smash_coproduct", [](const Cotwistor& c) { return build_smash_coproduct(c); });
  m.def("build_smash_bialgebra", [](const Cotwistor& c, ProductOrder o) { return build_smash_bialgebra(c, o); });
  m.def("check_bicomodule", &check_bicomodule);
  m.def("p_functor", [](int n, const RightHomComodule& u, const Cotwistor& c) { return p_functor(n, u, c); });
  m.def("q_functor", [](const Bicomodule& b, const Cotwistor& c) { return q_functor(b, c); });

  py::class_<EntwiningMap>(m, "EntwiningMap")
      .def(py::init<const HomBialgebra&, const HomBialgebra&, LinearMap>())
      .def_readonly("phi", &EntwiningMap::phi);
  py::class_<EntwinedModule>(m, "EntwinedModule")
      .def_readonly("carrier", &EntwinedModule::carrier)
      .def_readonly("action", &EntwinedModule::action)
      .def_readonly("coaction", &EntwinedModule::coaction)
      .def_readonly("n", &EntwinedModule::n)
      .def("comodule", &EntwinedModule::comodule);
  py::class_<RightHomComodule>(m, "RightHomComodule")
      .def(py::init([](ObjectWithAut carrier, LinearMap coaction) {
        return RightHomComodule{std::move(carrier), std::move(coaction)};
      }))
      .def_readonly("carrier", &RightHomComodule::carrier)
      .def_readonly("coaction", &RightHomComodule::coaction);
  m.def("check_entwining", &check_entwining, py::arg("entwining"), py::arg("monoidal") = false);
  m.def("cotwistor_from_entwining", [](const EntwiningMap& e) { return cotwistor_from_entwining(e); });
  m.def("entwining_from_cotwistor",
        [](const Cotwistor& c, const HomBialgebra& a) { return entwining_from_cotwistor(c, a); });
  m.def("hopf_module_entwining", &hopf_module_entwining);
  m.def("canonical_module_HA", &canonical_module_HA);
  m.def("canonical_module_AH", &canonical_module_AH);
  m.def("check_entwined_module", &check_entwined_module);
  m.def("codouble_bialgebra", [](const EntwiningMap& e) { return codouble_bialgebra(e); });
  m.def("to_codouble_comodule", &to_codouble_comodule);
  m.def("from_codouble_comodule", &from_codouble_comodule);

  py::class_<LongDimodule>(m, "LongDimodule")
      .def_readonly("carrier", &LongDimodule::carrier)
      .def_readonly("action", &LongDimodule::action)
      .def_readonly("coaction", &LongDimodule::coaction);
  py::class_<YDModule>(m, "YDModule")
      .def_readonly("carrier", &YDModule::carrier)
      .def_readonly("action", &YDModule::action)
      .def_readonly("coaction", &YDModule::coaction)
      .def_readonly("p", &YDModule::p);
  m.def("long_entwining", &long_entwining);
  m.def("long_candidates", &long_candidates);
  m.def("check_long_dimodule", &check_long_dimodule);
  m.def("check_d_equation", &check_d_equation);
  m.def("check_zeta_d_type", &check_zeta_d_type);
  m.def("yd_entwining", &yd_entwining);
  m.def("yd_candidates", &yd_candidates);
  m.def("check_yd_module", &check_yd_module);
  m.def("drinfeld_codouble", &drinfeld_codouble);
  m.def("check_hom_ybe", &check_hom_ybe);

  m.def("load_structure", [](const std::filesystem::path& p) { return io::load_structure(p).bialgebra(); });
  m.def("load_hopf", [](const std::filesystem::path& p) { return io::load_structure(p).hopf(); });
  m.def("parse_hopf", [](const std::string& text) { return io::parse_structure(text, "<string>").hopf(); });
  m.def("serialize", [](const HomHopfAlgebra& h) { return io::serialize(io::structure_file(h)); });
  m.def("serialize", [](const HomBialgebra& b) { return io::serialize(io::structure_file(b)); });
}
