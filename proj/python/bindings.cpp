// Python bindings. Groupoids cross the boundary as GroupoidDocument JSON text;
// the pure-Python wrapper in groupoidkit/__init__.py converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupoidkit/checks.hpp"
#include "groupoidkit/generators.hpp"

namespace py = pybind11;
using namespace gk;

namespace {

std::string dump(const json& j) { return j.dump(); }

json violations(const FiniteGroupoid& g) { return encode(validate(g), g); }

FiniteGroupoid load_valid(const std::string& text) {
  FiniteGroupoid g = parse_document(text);
  if (const ValidationReport r = validate(g); !r.ok())
    throw GroupoidError("groupoid axioms violated: " + r.violations.front().message, r.violations.front().witness);
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite groupoids, quotients, abelianization and convolution algebras";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  static py::exception<DocumentError> document_error(m, "DocumentError", PyExc_ValueError);
  static py::exception<GroupoidError> groupoid_error(m, "GroupoidError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DocumentError& e) {
      PyErr_SetString(document_error.ptr(), e.what());
    } catch (const GroupoidError& e) {
      PyErr_SetString(groupoid_error.ptr(), e.what());
    }
  });

  m.def("validate", [](const std::string& doc) { return dump(violations(parse_document(doc))); },
        py::arg("document"), "Axiom violations of a document, as JSON text (empty list when valid).");

  m.def("quotient",
        [](const std::string& doc, const std::vector<std::string>& labels) {
          const FiniteGroupoid g = load_valid(doc);
          const NormalSubgroupoid h(g, arrows_from_labels(g, labels));
          return dump(encode(quotient(g, h), g));
        },
        py::arg("document"), py::arg("subgroupoid"));

  m.def("abelianize", [](const std::string& doc) {
    const FiniteGroupoid g = load_valid(doc);
    const Abelianization ab = abelianize_groupoid(g);
    return dump({{"g_fix", encode(ab.fixed.groupoid)},
                 {"g_ab", encode(ab.result, ab.fixed.groupoid)},
                 {"dual_bundle", encode(dual_bundle(ab.groupoid()), ab.groupoid())}});
  }, py::arg("document"));

  m.def("abelianization_dim", [](const std::string& doc) { return abelianization_dim(share(load_valid(doc))); },
        py::arg("document"));

  m.def("dual_bundle", [](const std::string& doc) {
    const FiniteGroupoid g = load_valid(doc);
    return dump(encode(dual_bundle(g), g));
  }, py::arg("document"));

  m.def("characters", [](const std::string& doc) {
    json out = json::array();
    for (const auto& phi : enumerate_characters(share(load_valid(doc)))) out.push_back(encode(phi));
    return dump(out);
  }, py::arg("document"));

  m.def("gelfand_transform", [](const std::string& doc) {
    const FiniteGroupoid g = load_valid(doc);
    return dump(encode(gelfand_transform(g), g));
  }, py::arg("document"));

  m.def("check", [](const std::string& doc, std::size_t max_exact_arrows) {
    CheckOptions options;
    options.max_exact_arrows = max_exact_arrows;
    return dump(run_checks(parse_document(doc), "document", options).to_json());
  }, py::arg("document"), py::arg("max_exact_arrows") = CheckOptions{}.max_exact_arrows);

  m.def("invariant_factors", [](const std::vector<std::string>& labels, const std::vector<int>& table) {
    return invariant_factors(FiniteAbelianGroup(FiniteGroup(labels, table)));
  }, py::arg("labels"), py::arg("table"));

  m.def("random_groupoid", [](std::uint64_t seed, int budget) { return dump(encode(random_groupoid(seed, budget))); },
        py::arg("seed"), py::arg("budget") = 20);
  m.def("random_abelian_bundle",
        [](std::uint64_t seed, int max_points) { return dump(encode(random_abelian_bundle(seed, max_points))); },
        py::arg("seed"), py::arg("max_points") = 8);
  m.def("group", [](const std::string& name) { return dump(encode(one_object(library_group(name)))); },
        py::arg("name"));
  m.def("group_bundle", [](const std::vector<std::pair<std::string, std::string>>& fibers) {
    std::vector<std::pair<std::string, FiniteGroup>> groups;
    for (const auto& [point, name] : fibers) groups.emplace_back(point, library_group(name));
    return dump(encode(group_bundle(groups)));
  }, py::arg("fibers"));
  m.def("trivial_groupoid", [](int n) { return dump(encode(trivial_groupoid(n))); }, py::arg("n"));
  m.def("pair_groupoid", [](int n) { return dump(encode(pair_groupoid(n))); }, py::arg("n"));
  m.def("klein_cross", [] { return dump(encode(klein_cross())); });
  m.def("s3_a3_bundle", [] { return dump(encode(s3_a3_bundle())); });
  m.def("library_group_names", &library_group_names);
}
