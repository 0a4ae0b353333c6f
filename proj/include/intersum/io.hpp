#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "intersum/cyclic.hpp"
#include "intersum/search.hpp"
#include "intersum/setcore.hpp"
#include "intersum/weights.hpp"

namespace intersum {

using json = nlohmann::ordered_json;

// {"n": int, "k": int, "sets": [[int, ...], ...]}; elements ascending within a
// set, sets ascending lexicographically across the family.
json family_to_json(const Family& f);
Family family_from_json(const json& doc);

// Parse errors carry "source:line:col" context.
Family parse_family_text(std::string_view text, std::string_view source = "<input>");
Family read_family_file(const std::filesystem::path& path);

json exact_to_json(Exact v);  // decimal string
json profile_to_json(const Profile& p);

json search_result_to_json(const SearchResult& r, bool include_runtime = true);

// Rebuilds a result and re-evaluates every witness against best_value.
SearchResult search_result_from_json(const json& doc);

json katona_to_json(const KatonaReport& r);
json double_count_to_json(const DoubleCountReport& r);
json uniqueness_to_json(const UniquenessReport& r);

}  // namespace intersum
