#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "suzuki/io.hpp"

using namespace suzuki;
using suzuki::testing::errc_of;

TEST_CASE("element text parses as index or coefficients") {
  const FieldPtr F = Field::parse("2,6,2");
  CHECK(parse_element(*F, "5") == FieldElement{5});
  CHECK(parse_element(*F, "1:0:1") == FieldElement{5});
  CHECK(parse_subfield_element(*F, "1:1").index == 3);
  CHECK(errc_of([&] { parse_element(*F, "x"); }) == Errc::ParseError);
  CHECK(errc_of([&] { parse_element(*F, "1::0"); }) == Errc::ParseError);
  CHECK(errc_of([&] { parse_subfield_element(*F, "1:1:1"); }) == Errc::ParseError);
}

TEST_CASE("class and set JSON round trip") {
  const FieldPtr F = Field::parse("2,6,2");
  const Group G(F);
  for (std::uint64_t c = 0; c < G.class_count(); c += 17) CHECK(class_from_json(*F, class_json(*F, G.class_at(c))) == G.class_at(c));
  const CentralSet S = build_ds_tz(F, {7}, {2}, VariantSpec::seeded(1, F->order()));
  const json j = set_json(S);
  CHECK(j.at("cardinality") == S.cardinality());
  const SetFile back = set_from_json(json::parse(j.dump()));
  REQUIRE(back.central);
  CHECK(*back.central == S);
  CHECK(back.field->same_as(*F));
}

TEST_CASE("element files round trip") {
  const FieldPtr F = Field::parse("2,3,1");
  const Group G(F);
  const std::vector<GroupElement> D{G.element(3), G.element(17), G.element(40)};
  const SetFile back = set_from_json(elements_json(*F, D), F);
  CHECK_FALSE(back.central);
  CHECK(back.elements == D);
  CHECK(back.field == F);
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "suzuki_io_test";
  std::filesystem::create_directories(dir);
  const FieldPtr F = Field::parse("2,3,1");
  const CentralSet S = build_ds_z(F, {1}, {});
  const std::string path = (dir / "s.json").string();
  write_json_file(path, set_json(S));
  CHECK(*read_set_file(path).central == S);
  CHECK(errc_of([&] { read_set_file((dir / "missing.json").string()); }) == Errc::InvalidArgument);
  {
    std::ofstream out(dir / "bad.json");
    out << "{not json";
  }
  CHECK(errc_of([&] { read_set_file((dir / "bad.json").string()); }) == Errc::ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed set files") {
  CHECK(errc_of([] { set_from_json(json{{"field", "2,3,1"}}); }) == Errc::ParseError);
  CHECK(errc_of([] { set_from_json(json{{"classes", json::array()}}); }) == Errc::ParseError);
  const json bad_class = json::parse(R"({"field":"2,3,1","classes":[{"type":"generic","a":[0],"x":[0]}]})");
  CHECK(errc_of([&] { set_from_json(bad_class); }) == Errc::ParseError);
  const json bad_type = json::parse(R"({"field":"2,3,1","classes":[{"type":"other"}]})");
  CHECK(errc_of([&] { set_from_json(bad_type); }) == Errc::ParseError);
}

TEST_CASE("variant files") {
  const json shared = json::parse(R"({"b":"comp","gamma":"ker"})");
  const VariantSpec v = variant_from_json(shared, 8);
  CHECK(v.b == Choice::Comp);
  CHECK(v.gamma_at({5}) == Choice::Ker);
  const json per_a = json::parse(R"({"gamma":["ker","comp","ker","comp","ker","comp","ker"]})");
  const VariantSpec w = variant_from_json(per_a, 8);
  CHECK(w.gamma_at({2}) == Choice::Comp);
  CHECK(w.gamma_at({7}) == Choice::Ker);
  CHECK(errc_of([] { variant_from_json(json::parse(R"({"gamma":["ker"]})"), 8); }) == Errc::ParseError);
  CHECK(errc_of([] { variant_from_json(json::parse(R"({"b":"maybe"})"), 8); }) == Errc::ParseError);
}

TEST_CASE("reports omit timing on request") {
  VerifyReport r;
  r.check = "ds";
  r.method = "groupring";
  r.seconds = 1.5;
  r.add_witness("element", "x");
  CHECK(report_json(r, true).contains("seconds"));
  CHECK_FALSE(report_json(r, false).contains("seconds"));
  CHECK(report_json(r, false).at("witness_total") == 1);
}

TEST_CASE("character table CSV") {
  const CharacterTable T(Field::parse("2,2,1"));
  std::ostringstream os;
  write_table_csv(os, T);
  std::istringstream is(os.str());
  std::string line;
  std::size_t rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == T.count() + 1);
  CHECK(os.str().rfind("character,C(b=0)", 0) == 0);
}
