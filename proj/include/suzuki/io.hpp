#pragma once

// JSON for set files and reports, CSV for character tables.
//
// Set file:  {"field": "p,m,l,c0:...:cm", "classes": [class, ...]}
//            class = {"type":"central","b":[...]} | {"type":"generic","a":[...],"x":[...]}
//            or, for sets that are not unions of classes,
//            {"field": ..., "elements": [{"a":[...],"b":[...]}, ...]}
// Coefficient lists are ascending; x is over the basis 1, beta, ... of F_{p^e}.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "suzuki/characters.hpp"
#include "suzuki/central_set.hpp"
#include "suzuki/constructions.hpp"
#include "suzuki/verifier.hpp"

namespace suzuki {

inline constexpr const char* kToolVersion = "suzuki-ds 1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 20240917;

using json = nlohmann::ordered_json;

// Element text for the CLI: decimal index or ascending coefficients "c0:c1:...".
FieldElement parse_element(const Field& F, const std::string& text);
SubfieldElement parse_subfield_element(const Field& F, const std::string& text);

json element_json(const Field& F, FieldElement a);
json subfield_json(const Field& F, SubfieldElement u);
FieldElement element_from_json(const Field& F, const json& j);
SubfieldElement subfield_from_json(const Field& F, const json& j);

json class_json(const Field& F, ClassId c);
ClassId class_from_json(const Field& F, const json& j);
json group_element_json(const Field& F, GroupElement g);

// Class-list files are capped at this many classes.
inline constexpr std::uint64_t kMaxFileClasses = 2000000;

json set_json(const CentralSet& S);
json elements_json(const Field& F, const std::vector<GroupElement>& D);

// A set file holds either classes or raw elements.
struct SetFile {
  FieldPtr field;
  std::optional<CentralSet> central;
  std::vector<GroupElement> elements;  // filled only for element files
};
SetFile set_from_json(const json& j, const FieldPtr& reuse = nullptr);
SetFile read_set_file(const std::string& path, const FieldPtr& reuse = nullptr);
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

// file:<path> variant specs: {"b": "ker"|"comp", "gamma": "ker"|"comp"|[per a index]}
VariantSpec variant_from_json(const json& j, std::uint32_t field_order);

json cycint_json(const CycInt& x);
json report_json(const VerifyReport& r, bool timing);
json validation_json(const TableValidation& v);
json search_json(const SearchResult& r, bool timing);
json ds_params_json(const DSParams& p);
json pds_params_json(const PDSParams& p);

// Rows are characters (trivial first), columns are classes in dense order.
void write_table_csv(std::ostream& os, const CharacterTable& table);

}  // namespace suzuki
