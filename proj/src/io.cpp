#include "intersum/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace intersum {

namespace {

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

int int_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw Error(Errc::Parse, std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer()) throw Error(Errc::Parse, std::string("field \"") + key + "\" must be an integer");
  return it->get<int>();
}

Exact exact_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_string()) throw Error(Errc::Parse, std::string("field \"") + key + "\" must be a decimal string");
  return parse_decimal(it->get<std::string>());
}

}  // namespace

json family_to_json(const Family& f) {
  std::vector<std::vector<int>> sets;
  sets.reserve(f.size());
  for (const auto& s : f) sets.push_back(s.elements());
  std::sort(sets.begin(), sets.end());
  json doc;
  doc["n"] = f.n();
  doc["k"] = f.k();
  doc["sets"] = sets;
  return doc;
}

Family family_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::Parse, "family document must be a JSON object");
  const int n = int_field(doc, "n");
  const int k = int_field(doc, "k");
  const auto it = doc.find("sets");
  if (it == doc.end() || !it->is_array()) throw Error(Errc::Parse, "field \"sets\" must be an array of arrays");
  std::vector<std::vector<int>> sets;
  for (const auto& s : *it) {
    if (!s.is_array()) throw Error(Errc::Parse, "each set must be an array of integers");
    std::vector<int> elements;
    for (const auto& x : s) {
      if (!x.is_number_integer()) throw Error(Errc::Parse, "set elements must be integers");
      elements.push_back(x.get<int>());
    }
    sets.push_back(std::move(elements));
  }
  return make_family(n, k, sets);
}

Family parse_family_text(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, std::string(source) + ":" + position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  try {
    return family_from_json(doc);
  } catch (const Error& e) {
    if (e.code() != Errc::Parse) throw;
    throw Error(Errc::Parse, std::string(source) + ": " + e.what());
  }
}

Family read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family_text(buffer.str(), path.string());
}

json exact_to_json(Exact v) { return to_decimal(v); }

json profile_to_json(const Profile& p) {
  json counts = json::array();
  for (Exact c : p.counts) counts.push_back(to_decimal(c));
  return counts;
}

json search_result_to_json(const SearchResult& r, bool include_runtime) {
  json doc;
  json config;
  config["n"] = r.n;
  config["k"] = r.k;
  if (r.l) config["l"] = *r.l;
  doc["config"] = config;
  doc["best_value"] = to_decimal(r.best_value);
  doc["bound"] = r.bound ? json(to_decimal(*r.bound)) : json(nullptr);
  doc["tight"] = r.tight;
  doc["exhaustive"] = r.exhaustive;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    if (w.second) {
      witnesses.push_back({{"a", family_to_json(w.first)}, {"b", family_to_json(*w.second)}});
    } else {
      witnesses.push_back(family_to_json(w.first));
    }
  }
  doc["witnesses"] = witnesses;
  if (r.heuristic) {
    doc["seed"] = r.heuristic->seed;
    doc["schedule"] = {{"iterations", r.heuristic->iterations},
                       {"restarts", r.heuristic->restarts},
                       {"initial_temperature", r.heuristic->initial_temperature},
                       {"decay", r.heuristic->decay}};
  }
  if (include_runtime) doc["runtime_ms"] = r.runtime_ms;
  return doc;
}

SearchResult search_result_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("config")) throw Error(Errc::Parse, "search report needs a \"config\" object");
  SearchResult r;
  const auto& config = doc.at("config");
  r.n = int_field(config, "n");
  r.k = int_field(config, "k");
  if (config.contains("l")) r.l = int_field(config, "l");
  r.best_value = exact_field(doc, "best_value");
  if (doc.contains("bound") && !doc.at("bound").is_null()) r.bound = exact_field(doc, "bound");
  r.tight = doc.value("tight", false);
  r.exhaustive = doc.value("exhaustive", false);
  r.runtime_ms = doc.value("runtime_ms", std::int64_t{0});
  if (doc.contains("seed")) {
    HeuristicConfig h;
    h.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("schedule")) {
      const auto& s = doc.at("schedule");
      h.iterations = s.value("iterations", h.iterations);
      h.restarts = s.value("restarts", h.restarts);
      h.initial_temperature = s.value("initial_temperature", h.initial_temperature);
      h.decay = s.value("decay", h.decay);
    }
    r.heuristic = h;
  }
  for (const auto& w : doc.at("witnesses")) {
    if (w.is_object() && w.contains("a")) {
      r.witnesses.push_back({family_from_json(w.at("a")), family_from_json(w.at("b"))});
    } else {
      r.witnesses.push_back({family_from_json(w), std::nullopt});
    }
  }
  if (!witnesses_attain_best(r)) throw Error(Errc::Parse, "a stored witness does not attain best_value " + to_decimal(r.best_value));
  return r;
}

json katona_to_json(const KatonaReport& r) {
  json counter = json::array();
  for (const auto& f : r.counterexamples) counter.push_back(family_to_json(f));
  return {{"n", r.n},
          {"k", r.k},
          {"all_permutations", r.all_permutations},
          {"permutations_checked", r.permutations_checked},
          {"max_size", r.max_size},
          {"maximum_families", r.maximum_families},
          {"uniqueness_required", r.uniqueness_required},
          {"all_maxima_fixed_element", r.all_maxima_fixed_element},
          {"counterexamples", counter}};
}

json double_count_to_json(const DoubleCountReport& r) {
  json doc = {{"n", r.n},
              {"k", r.k},
              {"l", r.l},
              {"m", r.m},
              {"permutations", r.permutations},
              {"pm_size", to_decimal(r.pm_size)},
              {"factor", to_decimal(r.factor)},
              {"sum_over_perms", to_decimal(r.sum_over_perms)},
              {"expected", to_decimal(r.expected)},
              {"per_pair_counts_ok", r.per_pair_counts_ok},
              {"meets_distinct", r.meets_distinct},
              {"meet_bound_applicable", r.meet_bound_applicable},
              {"meet_families_ok", r.meet_families_ok},
              {"max_meet_family_size", r.max_meet_family_size}};
  if (!r.counterexample.empty()) doc["counterexample"] = r.counterexample;
  return doc;
}

json uniqueness_to_json(const UniquenessReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"star_centre", w.star_centre ? json(*w.star_centre) : json(nullptr)},
                         {"interval_pattern_checked", w.interval_pattern_checked},
                         {"permutations_checked", w.permutations_checked},
                         {"permutations_with_pattern", w.permutations_with_pattern}});
  }
  return {{"uniqueness_claimed", r.uniqueness_claimed}, {"all_stars", r.all_stars}, {"witnesses", witnesses}};
}

}  // namespace intersum
