#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "intersum/bounds.hpp"
#include "intersum/cli.hpp"
#include "intersum/cyclic.hpp"
#include "intersum/io.hpp"
#include "intersum/search.hpp"
#include "intersum/setcore.hpp"
#include "intersum/weights.hpp"

namespace py = pybind11;
using namespace intersum;

namespace {

// Exact values reach Python as arbitrary-precision ints.
py::int_ to_py(Exact v) {
  const std::string s = to_decimal(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

std::vector<std::vector<int>> sets_of(const Family& f) { return family_to_json(f)["sets"].get<std::vector<std::vector<int>>>(); }

py::list profile_counts(const Profile& p) {
  py::list out;
  for (Exact c : p.counts) out.append(to_py(c));
  return out;
}

py::object witness_to_py(const Witness& w) {
  if (w.second) return py::make_tuple(w.first, *w.second);
  return py::cast(w.first);
}

}  // namespace

PYBIND11_MODULE(_intersum, m) {
  m.doc() = "Exact omega computations for intersecting and cross-intersecting families";

  static py::exception<Error> error_type(m, "IntersumError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(e.what());
      exc.attr("code") = errc_name(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Family>(m, "Family")
      .def(py::init(&make_family), py::arg("n"), py::arg("k"), py::arg("sets"))
      .def_property_readonly("n", &Family::n)
      .def_property_readonly("k", &Family::k)
      .def_property_readonly("sets", &sets_of)
      .def("__len__", &Family::size)
      .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
      .def("__hash__", [](const Family& f) { return py::hash(py::str(family_to_json(f).dump())); })
      .def("__repr__", [](const Family& f) { return "Family(" + family_to_json(f).dump() + ")"; })
      .def("to_json", [](const Family& f) { return family_to_json(f).dump(); })
      .def_static("from_json", [](const std::string& text) { return parse_family_text(text); }, py::arg("text"));

  m.def("star", &star, py::arg("n"), py::arg("k"), py::arg("x") = 1);
  m.def("is_intersecting", &is_intersecting);
  m.def("is_cross_intersecting", &is_cross_intersecting);
  m.def("is_star", &is_star);
  m.def("canonical_form", &canonical_form);

  m.def("omega_family", [](const Family& f) { return to_py(omega_family(f)); });
  m.def("omega_cross", [](const Family& a, const Family& b) { return to_py(omega_cross(a, b)); });
  m.def("omega_cross_strict", [](const Family& a, const Family& b) { return to_py(omega_cross_strict(a, b)); });
  m.def("intersection_profile", [](const Family& a, const Family& b) { return profile_counts(intersection_profile(a, b)); });

  m.def("ekr_bound", [](int n, int k) { return to_py(ekr_bound(n, k).value); });
  m.def("omega_intersecting_bound", [](int n, int k) { return to_py(omega_intersecting_bound(n, k).value); });
  m.def("omega_strict_bound", [](int n, int k) { return to_py(omega_strict_bound(n, k).value); });
  m.def("omega_cross_bound", [](int n, int k, int l) { return to_py(omega_cross_bound(n, k, l).value); });
  m.def("pm_star_count", [](int n, int k, int l, int mm) { return to_py(pm_star_count(n, k, l, mm)); });
  m.def("star_identity_check", &star_identity_check);

  m.def(
      "katona_verify", [](int n, int k, bool all) { return to_py(katona_to_json(katona_verify(n, k, all))); },
      py::arg("n"), py::arg("k"), py::arg("all_permutations") = false);
  m.def(
      "double_count_check",
      [](const Family& a, const Family& b, int mm, int workers) {
        py::gil_scoped_release release;
        auto r = double_count_check(a, b, mm, workers);
        py::gil_scoped_acquire acquire;
        auto out = to_py(double_count_to_json(r));
        out["passed"] = r.passed();
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("m"), py::arg("workers") = 1);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("n", &SearchResult::n)
      .def_readonly("k", &SearchResult::k)
      .def_readonly("l", &SearchResult::l)
      .def_property_readonly("best_value", [](const SearchResult& r) { return to_py(r.best_value); })
      .def_property_readonly("bound",
                             [](const SearchResult& r) -> py::object { return r.bound ? py::object(to_py(*r.bound)) : py::none(); })
      .def_readonly("tight", &SearchResult::tight)
      .def_readonly("exhaustive", &SearchResult::exhaustive)
      .def_readonly("runtime_ms", &SearchResult::runtime_ms)
      .def_property_readonly("witnesses",
                             [](const SearchResult& r) {
                               py::list out;
                               for (const auto& w : r.witnesses) out.append(witness_to_py(w));
                               return out;
                             })
      .def("to_json", [](const SearchResult& r) { return search_result_to_json(r).dump(); })
      .def("uniqueness", [](const SearchResult& r) { return to_py(uniqueness_to_json(uniqueness_report(r))); });

  m.def(
      "max_omega_intersecting",
      [](int n, int k, int workers, bool prune) {
        SearchOptions o;
        o.workers = workers;
        o.prune = prune;
        py::gil_scoped_release release;
        return max_omega_intersecting(n, k, o);
      },
      py::arg("n"), py::arg("k"), py::arg("workers") = 1, py::arg("prune") = true);
  m.def(
      "max_omega_cross",
      [](int n, int k, int l, int workers) {
        SearchOptions o;
        o.workers = workers;
        py::gil_scoped_release release;
        return max_omega_cross(n, k, l, o);
      },
      py::arg("n"), py::arg("k"), py::arg("l"), py::arg("workers") = 1);
  m.def(
      "heuristic_max",
      [](int n, int k, std::optional<int> l, std::uint64_t seed, std::uint64_t iterations, int restarts, double t0,
         double decay) {
        HeuristicConfig c;
        c.seed = seed;
        c.iterations = iterations;
        c.restarts = restarts;
        c.initial_temperature = t0;
        c.decay = decay;
        py::gil_scoped_release release;
        return heuristic_max(n, k, l, c);
      },
      py::arg("n"), py::arg("k"), py::arg("l") = py::none(), py::arg("seed") = HeuristicConfig{}.seed,
      py::arg("iterations") = HeuristicConfig{}.iterations, py::arg("restarts") = HeuristicConfig{}.restarts,
      py::arg("initial_temperature") = HeuristicConfig{}.initial_temperature, py::arg("decay") = HeuristicConfig{}.decay);

  // Same behaviour as the executable; returns (exit code, stdout, stderr).
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"intersum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
