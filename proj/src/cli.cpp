#include "intersum/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "intersum/bounds.hpp"
#include "intersum/cyclic.hpp"
#include "intersum/io.hpp"
#include "intersum/search.hpp"
#include "intersum/weights.hpp"

#ifndef INTERSUM_VERSION
#define INTERSUM_VERSION "0.0.0"
#endif

namespace intersum {

namespace {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  json data;
};

// Everything a subcommand produces: a JSON body, the text rendering and
// whether its checks passed.
struct Outcome {
  json body = json::object();
  std::string text;
  bool passed = true;
};

struct GlobalOptions {
  bool json_output = false;
  std::string out_file;
  int workers = 1;
};

ExitCode exit_code_for(Errc code) {
  switch (code) {
    case Errc::TooLarge:
    case Errc::Overflow: return kExitResource;
    case Errc::Counterexample: return kExitFail;
    default: return kExitUsage;
  }
}

std::string describe(const Family& f) {
  std::string s = "{";
  const auto doc = family_to_json(f);
  bool first_set = true;
  for (const auto& set : doc["sets"]) {
    s += first_set ? "{" : ",{";
    first_set = false;
    bool first = true;
    for (const auto& x : set) {
      s += (first ? "" : ",") + std::to_string(x.get<int>());
      first = false;
    }
    s += "}";
  }
  return s + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Outcome checks_outcome(const std::string& suite, const std::vector<Check>& checks) {
  Outcome o;
  json list = json::array();
  std::ostringstream text;
  for (const auto& c : checks) {
    o.passed = o.passed && c.passed;
    json entry = {{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}};
    if (!c.data.is_null()) entry["data"] = c.data;
    list.push_back(entry);
    text << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  o.body = {{"suite", suite}, {"passed", o.passed}, {"checks", list}};
  text << (o.passed ? "ALL PASS" : "FAILURES PRESENT") << " (" << checks.size() << " checks)\n";
  o.text = text.str();
  return o;
}

// ---- bound ---------------------------------------------------------------

Outcome cmd_bound(const std::string& kind, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(Errc::Hypothesis, "bound " + kind + " takes " + std::to_string(count) + " integers");
  };
  BoundValue b;
  if (kind == "family") {
    need(2);
    b = omega_intersecting_bound(params[0], params[1]);
  } else if (kind == "cross") {
    need(3);
    b = omega_cross_bound(params[0], params[1], params[2]);
  } else if (kind == "strict") {
    need(2);
    b = omega_strict_bound(params[0], params[1]);
  } else if (kind == "ekr") {
    need(2);
    b = ekr_bound(params[0], params[1]);
  } else {
    throw Error(Errc::Hypothesis, "unknown bound kind '" + kind + "'");
  }
  Outcome o;
  o.body = {{"kind", kind}, {"n", b.n}, {"k", b.k}};
  if (b.l) o.body["l"] = *b.l;
  o.body["value"] = to_decimal(b.value);
  o.text = to_decimal(b.value) + "\n";
  return o;
}

// ---- omega ---------------------------------------------------------------

Outcome cmd_omega(const std::string& mode, const std::vector<std::string>& files, const std::string& weight,
                  bool with_profile) {
  if (weight != "meet" && weight != "unit") throw Error(Errc::Hypothesis, "weight must be meet or unit");
  const PairWeight w = weight == "meet" ? meet_weight() : unit_weight();
  Outcome o;
  Exact value = 0;
  std::optional<Profile> profile;
  if (mode == "family") {
    if (files.size() != 1) throw Error(Errc::Hypothesis, "omega family takes one family file");
    const Family f = read_family_file(files[0]);
    value = weight == "meet" ? omega_family(f) : omega_generic(f, f, w, true) / 2;
    if (with_profile) profile = intersection_profile(f, f);
  } else if (mode == "cross" || mode == "strict") {
    if (files.size() != 2) throw Error(Errc::Hypothesis, "omega " + mode + " takes two family files");
    const Family a = read_family_file(files[0]);
    const Family b = read_family_file(files[1]);
    value = omega_generic(a, b, w, mode == "strict");
    if (with_profile) profile = intersection_profile(a, b);
  } else {
    throw Error(Errc::Hypothesis, "unknown omega mode '" + mode + "'");
  }
  o.body = {{"mode", mode}, {"weight", weight}, {"value", to_decimal(value)}};
  o.text = to_decimal(value) + "\n";
  if (profile) {
    o.body["profile"] = profile_to_json(*profile);
    std::string line = "profile";
    for (std::size_t m = 0; m < profile->counts.size(); ++m) line += " " + std::to_string(m) + ":" + to_decimal(profile->counts[m]);
    o.text += line + "\n";
  }
  return o;
}

// ---- verify --------------------------------------------------------------

std::vector<Check> verify_katona(const std::vector<int>& params, bool all_perms) {
  if (params.size() != 2) throw Error(Errc::Hypothesis, "verify katona takes n k");
  const auto r = katona_verify(params[0], params[1], all_perms);
  std::string detail = "max r = " + std::to_string(r.max_size) + " (k = " + std::to_string(r.k) + "), " +
                       std::to_string(r.maximum_families) + " maximum families over " +
                       std::to_string(r.permutations_checked) + " cyclic order(s)";
  detail += r.uniqueness_required ? ", fixed-element maxima: " + yes_no(r.all_maxima_fixed_element)
                                  : ", uniqueness not required (n = 2k)";
  return {{"katona(" + std::to_string(r.n) + "," + std::to_string(r.k) + ")", r.passed(), detail, katona_to_json(r)}};
}

std::vector<Check> verify_doublecount(const std::vector<int>& params, const std::string& file_a,
                                      const std::string& file_b, int workers) {
  Family a, b;
  if (!file_a.empty() || !file_b.empty()) {
    if (file_a.empty() || file_b.empty()) throw Error(Errc::Hypothesis, "--a and --b must be given together");
    a = read_family_file(file_a);
    b = read_family_file(file_b);
  } else {
    if (params.size() != 3) throw Error(Errc::Hypothesis, "verify doublecount takes n k l (stars) or --a/--b files");
    a = star(params[0], params[1], 1);
    b = star(params[0], params[2], 1);
  }
  require_same_ground(a, b);
  if (a.n() > kDoubleCountLimit)
    throw Error(Errc::TooLarge, "double counting sweeps need n <= " + std::to_string(kDoubleCountLimit));
  std::vector<Check> checks;
  const std::string cfg = std::to_string(a.n()) + "," + std::to_string(a.k()) + "," + std::to_string(b.k());
  Exact reconstructed = 0;
  for (int m = 1; m <= std::min(a.k(), b.k()); ++m) {
    if (a.n() - a.k() - b.k() + m < 0) continue;
    const auto r = double_count_check(a, b, m, workers);
    reconstructed = checked_add(reconstructed, checked_mul(m, r.sum_over_perms / r.factor));
    std::string detail = "sum over " + std::to_string(r.permutations) + " orders = " + to_decimal(r.sum_over_perms) +
                         ", |P_m| * factor = " + to_decimal(r.pm_size) + " * " + to_decimal(r.factor) + " = " +
                         to_decimal(r.expected) + ", per-pair counts " + (r.per_pair_counts_ok ? "ok" : "WRONG") +
                         ", meets distinct " + yes_no(r.meets_distinct);
    if (r.meet_bound_applicable) detail += ", meet families <= m " + yes_no(r.meet_families_ok);
    if (!r.counterexample.empty()) detail += ", counterexample: " + r.counterexample;
    checks.push_back({"doublecount(" + cfg + ") m=" + std::to_string(m), r.passed(), detail, double_count_to_json(r)});
  }
  const Exact direct = omega_cross(a, b);
  checks.push_back({"reconstruction(" + cfg + ")", reconstructed == direct,
                    "sum_m m|P_m| from the census = " + to_decimal(reconstructed) + ", omega(A,B) = " + to_decimal(direct),
                    json{{"reconstructed", to_decimal(reconstructed)}, {"omega_cross", to_decimal(direct)}}});
  return checks;
}

std::vector<Check> verify_identity(int n_max, int closed_form_n_max) {
  std::vector<Check> checks;
  std::uint64_t configs = 0;
  std::string failures;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k < n; ++k)
      for (int l = 1; l <= k && k + l <= n; ++l) {
        ++configs;
        if (!star_identity_check(n, k, l) && failures.size() < 200)
          failures += " (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
      }
  checks.push_back({"star-identity n<=" + std::to_string(n_max), failures.empty(),
                    std::to_string(configs) + " configurations" + (failures.empty() ? "" : ", failing:" + failures),
                    json{{"configurations", configs}}});

  std::uint64_t cross_configs = 0, family_configs = 0;
  std::string cross_fail, family_fail;
  for (int n = 2; n <= closed_form_n_max; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      ++family_configs;
      const Family s = star(n, k, 1);
      const Exact strict = omega_strict_bound(n, k).value;
      const Exact fam = omega_intersecting_bound(n, k).value;
      if (omega_family(s) != fam || omega_cross_strict(s, s) != strict || checked_mul(2, fam) != strict)
        family_fail += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
    for (int k = 1; k < n; ++k)
      for (int l = 1; l <= k && k + l <= n; ++l) {
        ++cross_configs;
        if (omega_cross(star(n, k, 1), star(n, l, 1)) != omega_cross_bound(n, k, l).value)
          cross_fail += " (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
      }
  }
  checks.push_back({"star-cross-closed-form n<=" + std::to_string(closed_form_n_max), cross_fail.empty(),
                    std::to_string(cross_configs) + " configurations" + (cross_fail.empty() ? "" : ", failing:" + cross_fail),
                    json{{"configurations", cross_configs}}});
  checks.push_back({"star-family-closed-form n<=" + std::to_string(closed_form_n_max), family_fail.empty(),
                    std::to_string(family_configs) + " configurations" + (family_fail.empty() ? "" : ", failing:" + family_fail),
                    json{{"configurations", family_configs}}});
  return checks;
}

std::vector<Check> verify_extremal(const std::vector<int>& params, int workers) {
  if (params.size() != 2 && params.size() != 3) throw Error(Errc::Hypothesis, "verify extremal takes n k [l]");
  SearchOptions options;
  options.workers = workers;
  const SearchResult r = params.size() == 2 ? max_omega_intersecting(params[0], params[1], options)
                                            : max_omega_cross(params[0], params[1], params[2], options);
  std::string cfg = std::to_string(r.n) + "," + std::to_string(r.k) + (r.l ? "," + std::to_string(*r.l) : "");
  std::vector<Check> checks;
  checks.push_back({"bound-respected(" + cfg + ")", r.best_value <= *r.bound,
                    "best " + to_decimal(r.best_value) + " <= bound " + to_decimal(*r.bound), json(nullptr)});
  checks.push_back({"bound-tight(" + cfg + ")", r.tight, "best " + to_decimal(r.best_value) + " == bound " + yes_no(r.tight),
                    json(nullptr)});
  checks.push_back({"witnesses-reevaluate(" + cfg + ")", witnesses_attain_best(r),
                    std::to_string(r.witnesses.size()) + " witness class(es)", json(nullptr)});
  const auto u = uniqueness_report(r);
  if (u.uniqueness_claimed) {
    const bool unique = r.witnesses.size() == 1 && u.all_stars;
    checks.push_back({"equality-only-star(" + cfg + ")", unique,
                      std::to_string(r.witnesses.size()) + " class(es), all stars " + yes_no(u.all_stars),
                      uniqueness_to_json(u)});
  } else {
    bool star_found = false;
    for (const auto& w : u.witnesses) star_found = star_found || w.star_centre.has_value();
    checks.push_back({"star-attains(" + cfg + ")", star_found,
                      "boundary case, " + std::to_string(r.witnesses.size()) + " class(es), star among them " +
                          yes_no(star_found),
                      uniqueness_to_json(u)});
  }
  return checks;
}

// ---- search --------------------------------------------------------------

Outcome search_outcome(const SearchResult& r, bool with_uniqueness) {
  Outcome o;
  o.body = search_result_to_json(r);
  std::ostringstream text;
  text << "best_value " << to_decimal(r.best_value) << "\n";
  text << "bound " << (r.bound ? to_decimal(*r.bound) : std::string("n/a")) << "\n";
  text << "tight " << yes_no(r.tight) << "\n";
  text << "exhaustive " << yes_no(r.exhaustive) << "\n";
  text << "witnesses " << r.witnesses.size() << "\n";
  for (const auto& w : r.witnesses) {
    text << "  " << describe(w.first);
    if (w.second) text << " x " << describe(*w.second);
    text << "\n";
  }
  if (with_uniqueness) {
    const auto u = uniqueness_report(r);
    o.body["uniqueness"] = uniqueness_to_json(u);
    for (std::size_t i = 0; i < u.witnesses.size(); ++i) {
      const auto& w = u.witnesses[i];
      text << "  witness " << i << ": star " << (w.star_centre ? "centre " + std::to_string(*w.star_centre) : std::string("no"));
      if (w.interval_pattern_checked)
        text << ", interval-star pattern in " << w.permutations_with_pattern << "/" << w.permutations_checked << " cyclic orders";
      text << "\n";
    }
  }
  o.text = text.str();
  return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact engine for summed intersection sizes of intersecting and cross-intersecting families", "intersum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", INTERSUM_VERSION);

  GlobalOptions global;
  app.add_flag("--json", global.json_output, "Emit a JSON report with an embedded run manifest");
  app.add_option("--out", global.out_file, "Write the report to FILE instead of stdout");
  app.add_option("--workers", global.workers, "Worker threads for exhaustive sweeps")->check(CLI::Range(1, 256));

  json params = json::object();
  std::optional<std::uint64_t> seed_used;
  std::function<Outcome()> action;

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form bound exactly");
  std::string bound_kind;
  std::vector<int> bound_params;
  bound->add_option("kind", bound_kind, "family | cross | strict | ekr")->required()->check(CLI::IsMember({"family", "cross", "strict", "ekr"}));
  bound->add_option("params", bound_params, "n k [l]")->required();
  bound->callback([&] {
    params = {{"kind", bound_kind}, {"params", bound_params}};
    action = [&] { return cmd_bound(bound_kind, bound_params); };
  });

  // omega
  auto* omega = app.add_subcommand("omega", "Evaluate omega on family files");
  std::string omega_mode, omega_weight = "meet";
  std::vector<std::string> omega_files;
  bool omega_profile = false;
  omega->add_option("mode", omega_mode, "family | cross | strict")->required()->check(CLI::IsMember({"family", "cross", "strict"}));
  omega->add_option("files", omega_files, "Family JSON file(s)")->required();
  omega->add_option("--weight", omega_weight, "meet | unit")->check(CLI::IsMember({"meet", "unit"}));
  omega->add_flag("--profile", omega_profile, "Also report the intersection-size profile");
  omega->callback([&] {
    params = {{"mode", omega_mode}, {"files", omega_files}, {"weight", omega_weight}, {"profile", omega_profile}};
    action = [&] { return cmd_omega(omega_mode, omega_files, omega_weight, omega_profile); };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::vector<int> verify_params;
  bool all_perms = false;
  int n_max = 20, closed_form_n_max = 14;
  std::string file_a, file_b;
  verify->add_option("suite", suite, "katona | doublecount | identity | extremal")->required()->check(CLI::IsMember({"katona", "doublecount", "identity", "extremal"}));
  verify->add_option("params", verify_params, "Suite parameters");
  verify->add_flag("--all-perms", all_perms, "katona: check every cyclic order, not only the identity");
  verify->add_option("--n-max", n_max, "identity: largest n for the summation identity sweep");
  verify->add_option("--closed-form-n-max", closed_form_n_max, "identity: largest n for star evaluations");
  verify->add_option("--a", file_a, "doublecount: first family file");
  verify->add_option("--b", file_b, "doublecount: second family file");
  verify->callback([&] {
    params = {{"suite", suite}, {"params", verify_params}};
    if (suite == "katona") params["all_perms"] = all_perms;
    if (suite == "identity") {
      params["n_max"] = n_max;
      params["closed_form_n_max"] = closed_form_n_max;
    }
    if (suite == "doublecount" && !file_a.empty()) {
      params["a"] = file_a;
      params["b"] = file_b;
    }
    action = [&]() -> Outcome {
      if (suite == "katona") return checks_outcome(suite, verify_katona(verify_params, all_perms));
      if (suite == "doublecount") return checks_outcome(suite, verify_doublecount(verify_params, file_a, file_b, global.workers));
      if (suite == "identity") return checks_outcome(suite, verify_identity(n_max, closed_form_n_max));
      return checks_outcome(suite, verify_extremal(verify_params, global.workers));
    };
  });

  // search-exact
  auto* exact = app.add_subcommand("search-exact", "Exhaustive maximization of omega");
  std::vector<int> exact_params;
  bool no_prune = false, uniqueness = false;
  exact->add_option("params", exact_params, "n k [l]")->required()->expected(2, 3);
  exact->add_flag("--no-prune", no_prune, "Visit every maximal family");
  exact->add_flag("--uniqueness", uniqueness, "Append star and interval-pattern analysis of the witnesses");
  exact->callback([&] {
    params = {{"params", exact_params}, {"prune", !no_prune}, {"uniqueness", uniqueness}};
    action = [&] {
      SearchOptions options;
      options.workers = global.workers;
      options.prune = !no_prune;
      const SearchResult r = exact_params.size() == 2
                                 ? max_omega_intersecting(exact_params[0], exact_params[1], options)
                                 : max_omega_cross(exact_params[0], exact_params[1], exact_params[2], options);
      Outcome o = search_outcome(r, uniqueness);
      o.passed = r.bound && r.best_value <= *r.bound;
      return o;
    };
  });

  // search-heuristic
  auto* heuristic = app.add_subcommand("search-heuristic", "Seeded simulated annealing");
  std::vector<int> heuristic_params;
  HeuristicConfig hc;
  heuristic->add_option("params", heuristic_params, "n k [l]")->required()->expected(2, 3);
  heuristic->add_option("--seed", hc.seed, "RNG seed");
  heuristic->add_option("--iterations", hc.iterations, "Annealing steps per restart");
  heuristic->add_option("--restarts", hc.restarts, "Independent restarts");
  heuristic->add_option("--t0", hc.initial_temperature, "Initial temperature");
  heuristic->add_option("--decay", hc.decay, "Geometric temperature decay per step");
  heuristic->callback([&] {
    params = {{"params", heuristic_params},
              {"iterations", hc.iterations},
              {"restarts", hc.restarts},
              {"initial_temperature", hc.initial_temperature},
              {"decay", hc.decay}};
    seed_used = hc.seed;
    action = [&] {
      std::optional<int> l;
      if (heuristic_params.size() == 3) l = heuristic_params[2];
      return search_outcome(heuristic_max(heuristic_params[0], heuristic_params[1], l, hc), false);
    };
  });

  for (auto* sub : {bound, omega, verify, exact, heuristic}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  const auto runtime =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  std::string rendered;
  if (global.json_output) {
    json doc = outcome.body;
    const auto* sub = app.get_subcommands().front();
    doc["manifest"] = {{"command", sub->get_name()},
                       {"params", params},
                       {"seed", seed_used ? json(*seed_used) : json(nullptr)},
                       {"version", INTERSUM_VERSION},
                       {"runtime_ms", runtime},
                       {"outcome", outcome.passed ? "PASS" : "FAIL"}};
    rendered = doc.dump(2) + "\n";
  } else {
    rendered = outcome.text;
  }

  if (global.out_file.empty()) {
    out << rendered;
  } else {
    std::ofstream file(global.out_file);
    if (!file) {
      err << "error: cannot write " << global.out_file << "\n";
      return kExitUsage;
    }
    file << rendered;
  }
  return outcome.passed ? kExitPass : kExitFail;
}

}  // namespace intersum
