#pragma once

#include "ramfilt/admissible.hpp"
#include "ramfilt/artin_schreier.hpp"
#include "ramfilt/breaks.hpp"
#include "ramfilt/group.hpp"
#include "ramfilt/profile.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ramfilt {

struct LowerSection {
    std::int64_t p = 0;
    std::vector<LowerBreak> breaks;

    friend bool operator==(const LowerSection&, const LowerSection&) = default;
};

/// Exactly one of builtin, cayley_file, table is set.
struct GroupSection {
    std::optional<std::string> builtin;
    std::optional<std::string> cayley_file;  // relative to the document's directory
    std::optional<std::vector<std::vector<std::size_t>>> table;
    std::optional<std::int64_t> p;  // derived from the order when absent

    friend bool operator==(const GroupSection&, const GroupSection&) = default;
};

struct ProfileDocument {
    std::optional<FieldProfile> field;
    std::optional<RamificationProfile> ramification;
    std::optional<LowerSection> lower;
    std::optional<GroupSection> group;
    std::optional<LaurentPoly> artin_schreier;

    friend bool operator==(const ProfileDocument&, const ProfileDocument&) = default;
};

/// Parses and validates; every schema or invariant problem becomes a ValidationError.
ProfileDocument parse_document(const nlohmann::json& j);
ProfileDocument parse_document(const std::string& text);
inline ProfileDocument parse_document(const char* text) { return parse_document(std::string(text)); }
ProfileDocument load_document(const std::filesystem::path& path);

nlohmann::json to_json(const ProfileDocument& doc);

/// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j, const std::string& where);

/// Resolves the group section to a Cayley table.
FiniteGroup load_group(const GroupSection& section, const std::filesystem::path& base_dir);

}  // namespace ramfilt
