#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "suzuki/io.hpp"

namespace py = pybind11;
using namespace suzuki;

namespace {

std::string field_info(const std::string& spec) {
  const FieldPtr F = Field::parse(spec);
  const Group G(F);
  json j{{"spec", F->spec()},         {"p", F->p()},           {"m", F->m()},
         {"l", F->l()},               {"e", F->e()},           {"f", F->f()},
         {"order", F->order()},       {"group_order", G.order()}, {"class_count", G.class_count()}};
  return j.dump();
}

std::string construct(const std::string& kind, const std::string& spec, std::uint32_t t, std::uint32_t z,
                      const std::string& variants, std::uint64_t seed) {
  const FieldPtr F = Field::parse(spec);
  if (kind == "dillon") return elements_json(*F, build_dillon(Group(F), dillon_spec_seeded(F, seed))).dump();
  const std::optional<SubfieldElement> zz = z ? std::optional(F->sub_element(z)) : std::nullopt;
  CentralSet S(F);
  if (kind == "ds-tz") S = build_ds_tz(F, F->element(t), F->sub_element(z ? z : 1), VariantSpec::parse(variants, F->order()));
  else if (kind == "ds-z") S = build_ds_z(F, F->sub_element(z ? z : 1), VariantSpec::parse(variants, F->order()));
  else if (kind == "pds-tz") S = build_pds_tz(F, F->element(t), zz);
  else if (kind == "pds-z") S = build_pds_z(F, zz);
  else if (kind == "pds-zprime") S = build_pds_z_prime(F, zz);
  else if (kind == "pds-zdprime") S = build_pds_z_dprime(F, zz);
  else throw Error(Errc::InvalidArgument, "unknown construction '" + kind + "'");
  return set_json(S).dump();
}

std::string verify(const std::string& kind, const std::string& set_text, const std::string& method_text) {
  const Method method = parse_method(method_text);
  const SetFile s = set_from_json(json::parse(set_text));
  const Group G(s.field);
  std::optional<CharacterTable> table;
  if (method != Method::GroupRing) table.emplace(s.field);
  const VerifyContext ctx{&G, table ? &*table : nullptr, 0};
  VerifyReport r;
  if (kind == "ds") r = s.central ? check_ds(ctx, *s.central, method) : check_ds_elements(ctx, s.elements, method);
  else if (kind == "pds" && s.central) r = check_pds(ctx, *s.central, method);
  else throw Error(Errc::InvalidArgument, "verify takes ds, or pds on a class set");
  return report_json(r, false).dump();
}

std::string search(const std::string& kind, const std::string& spec, const std::vector<std::int64_t>& p) {
  if (p.size() != 4) throw Error(Errc::InvalidArgument, "params need four integers");
  const FieldPtr F = Field::parse(spec);
  const Group G(F);
  const CharacterTable T(F);
  const VerifyContext ctx{&G, &T, 0};
  if (kind == "ds") return search_json(search_central_ds(ctx, {p[0], p[1], p[2], p[3]}), false).dump();
  if (kind == "pds") return search_json(search_central_pds(ctx, {p[0], p[1], p[2], p[3]}), false).dump();
  throw Error(Errc::InvalidArgument, "search takes ds or pds");
}

std::string validate(const std::string& spec) {
  return validation_json(validate_table(CharacterTable(Field::parse(spec)))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Central difference sets in Suzuki p-groups A_p(m, theta)";
  m.attr("version") = kToolVersion;

  py::register_exception<Error>(m, "SuzukiError", PyExc_ValueError);

  m.def("field_info", &field_info, py::arg("field"));
  m.def("construct", &construct, py::arg("kind"), py::arg("field"), py::arg("t") = 1, py::arg("z") = 0,
        py::arg("variants") = "all-ker", py::arg("seed") = kDefaultSeed);
  m.def("verify", &verify, py::arg("kind"), py::arg("set_json"), py::arg("method") = "both",
        py::call_guard<py::gil_scoped_release>());
  m.def("search", &search, py::arg("kind"), py::arg("field"), py::arg("params"),
        py::call_guard<py::gil_scoped_release>());
  m.def("validate_table", &validate, py::arg("field"));
}
