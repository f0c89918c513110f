#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "kscroll/family.hpp"

namespace kscroll {

/// Orders "H2" before "H10": alphabetic prefix, then numeric suffix, then text.
struct FamilyIdLess {
    bool operator()(const std::string& a, const std::string& b) const;
};

struct Registry {
    std::map<std::string, FamilyRecord, FamilyIdLess> records;
    int version = 0;

    friend bool operator==(const Registry&, const Registry&) = default;
};

/// Throws SchemaError naming the record and the violated field.
void validate(const FamilyRecord& record);

nlohmann::ordered_json record_to_json(const FamilyRecord& record);
FamilyRecord record_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json registry_to_json(const Registry& reg);
Registry registry_from_json(const nlohmann::ordered_json& j);

/// Canonical text: two-space indented JSON with a trailing newline.
std::string canonical_text(const Registry& reg);

Registry load_registry(const std::filesystem::path& path);
/// Bumps reg.version, then writes a temporary file next to path and renames it over path.
void save_registry(Registry& reg, const std::filesystem::path& path);

/// Adds a record after validation. Throws SchemaError on a duplicate id.
void add_record(Registry& reg, FamilyRecord record);

/// The shipped families: stubs H1-H3 and the scroll families H5, H7, H8, H10-H14, H17.
Registry default_registry();

}  // namespace kscroll
