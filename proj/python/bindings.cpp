#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hwcc/oracle.hpp"
#include "hwcc/table.hpp"

namespace py = pybind11;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

hwcc::Clan as_clan(const py::handle& h) {
  if (py::isinstance<hwcc::Clan>(h)) return h.cast<hwcc::Clan>();
  return hwcc::Clan::parse(h.cast<std::string>());
}

hwcc::OracleConfig oracle_config(int trials, std::uint64_t seed, std::uint64_t prime) {
  hwcc::OracleConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.prime = prime;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(hwcc, m) {
  m.doc() = "Characteristic cycles of highest weight Harish-Chandra modules for Sp(2n,R)";

  py::register_exception<hwcc::ClanError>(m, "ClanError", PyExc_ValueError);

  py::class_<hwcc::SignedPermutation>(m, "SignedPermutation")
      .def(py::init<std::vector<int>>(), py::arg("entries"))
      .def_static("parse", &hwcc::SignedPermutation::parse, py::arg("text"))
      .def_static("identity", &hwcc::SignedPermutation::identity, py::arg("n"))
      .def_property_readonly("rank", &hwcc::SignedPermutation::rank)
      .def_property_readonly("entries",
                             [](const hwcc::SignedPermutation& w) {
                               return std::vector<int>(w.entries().begin(), w.entries().end());
                             })
      .def("inverse", &hwcc::SignedPermutation::inverse)
      .def("compose", &hwcc::SignedPermutation::compose, py::arg("rhs"))
      .def("times_simple", &hwcc::SignedPermutation::times_simple, py::arg("j"))
      .def("length", [](const hwcc::SignedPermutation& w) { return hwcc::length(w); })
      .def("tau", [](const hwcc::SignedPermutation& w) { return hwcc::tau(w); })
      .def("long_form", [](const hwcc::SignedPermutation& w) { return hwcc::long_form(w).u; })
      .def("in_script_w", [](const hwcc::SignedPermutation& w) { return hwcc::in_script_w(w); })
      .def("a_vector", [](const hwcc::SignedPermutation& w) { return hwcc::a_vector(w); })
      .def("__str__", &hwcc::SignedPermutation::to_string)
      .def("__repr__", [](const hwcc::SignedPermutation& w) { return "SignedPermutation(" + w.to_string() + ")"; })
      .def(py::self == py::self)
      .def("__hash__", [](const hwcc::SignedPermutation& w) { return py::hash(py::str(w.to_string())); });

  py::class_<hwcc::Clan>(m, "Clan")
      .def(py::init([](const std::string& text) { return hwcc::Clan::parse(text); }), py::arg("text"))
      .def_static("from_mask", &hwcc::Clan::from_mask, py::arg("n"), py::arg("mask"))
      .def_static("all_plus", &hwcc::Clan::all_plus, py::arg("n"))
      .def_static("all_numbers", &hwcc::Clan::all_numbers, py::arg("n"))
      .def_property_readonly("size", &hwcc::Clan::size)
      .def_property_readonly("slots",
                             [](const hwcc::Clan& c) { return std::vector<int>(c.slots().begin(), c.slots().end()); })
      .def("w", [](const hwcc::Clan& c) { return hwcc::w_from_clan(c); })
      .def("tau", [](const hwcc::Clan& c) { return hwcc::tau_clan(c); })
      .def("dim", [](const hwcc::Clan& c) { return hwcc::dim(c); })
      .def("s_op", [](const hwcc::Clan& c, int j) { return hwcc::s_op(c, j); }, py::arg("j"))
      .def("t_op", [](const hwcc::Clan& c, int j, int k) { return hwcc::t_op(c, j, k); }, py::arg("j"), py::arg("k"))
      .def("token_string", &hwcc::Clan::to_token_string)
      .def("__len__", &hwcc::Clan::size)
      .def("__str__", &hwcc::Clan::to_string)
      .def("__repr__", [](const hwcc::Clan& c) { return "Clan('" + c.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const hwcc::Clan& c) { return hwcc::ClanHash{}(c); });

  m.def("all_clans", &hwcc::all_clans, py::arg("n"));
  m.def("clan_from_w", &hwcc::clan_from_w, py::arg("w"));
  m.def("closure_leq", [](const py::handle& c1, const py::handle& c) { return hwcc::closure_leq(as_clan(c1), as_clan(c)); },
        py::arg("c1"), py::arg("c"), "True when the orbit of c1 lies in the closure of the orbit of c.");
  m.def("bruhat_leq", [](const hwcc::SignedPermutation& y, const hwcc::SignedPermutation& w) {
    return hwcc::bruhat_leq_longform(y, w);
  }, py::arg("y"), py::arg("w"));

  m.def("cc", [](const py::handle& c) { return hwcc::cc(as_clan(c)).display_order(); }, py::arg("clan"),
        "Characteristic cycle terms, support first. Every multiplicity is one.");
  m.def("cc_terms", [](const py::handle& c) { return hwcc::cc(as_clan(c)).terms(); }, py::arg("clan"),
        "Characteristic cycle as a dict clan -> multiplicity.");
  m.def("ltc", [](const py::handle& c) { return hwcc::ltc(as_clan(c)).display_order(); }, py::arg("clan"));
  m.def("av", [](const py::handle& c) { return hwcc::av(as_clan(c)); }, py::arg("clan"));
  m.def("hc_cell", [](const py::handle& c) { return hwcc::hc_cell_index(as_clan(c)); }, py::arg("clan"));
  m.def("g_cell", [](const py::handle& c) { return hwcc::rank_recursive(as_clan(c)); }, py::arg("clan"));
  m.def("annihilator_partner", [](const py::handle& c) { return hwcc::annihilator_partner(as_clan(c)); },
        py::arg("clan"));
  m.def("rank_oracle",
        [](const py::handle& c, int trials, std::uint64_t seed, std::uint64_t prime) {
          return hwcc::rank_oracle(as_clan(c), oracle_config(trials, seed, prime));
        },
        py::arg("clan"), py::arg("trials") = hwcc::OracleConfig{}.trials, py::arg("seed") = hwcc::OracleConfig{}.seed,
        py::arg("prime") = hwcc::OracleConfig{}.prime);
  m.def("geometric_cell", &hwcc::geometric_cell_members, py::arg("n"), py::arg("k"));
  m.def("hc_cell_members", &hwcc::hc_cell_members, py::arg("n"), py::arg("k"));

  m.def("row", [](const py::handle& c) { return to_python(hwcc::row_to_json(hwcc::make_row(as_clan(c)))); },
        py::arg("clan"), "The record the CLI prints for one clan, as a dict.");
  m.def("enumerate", [](int n) {
    auto rows = py::list();
    for (const auto& r : hwcc::enumerate_rows(n)) rows.append(to_python(hwcc::row_to_json(r)));
    return rows;
  }, py::arg("n"), "All 2^n records in table order.");
  m.def("table", [](int n, const std::string& format) {
    std::ostringstream os;
    hwcc::write_table(os, n, hwcc::enumerate_rows(n), hwcc::parse_format(format));
    return os.str();
  }, py::arg("n"), py::arg("format") = "json");
  m.def("cells", [](int n) { return to_python(hwcc::cells_to_json(n)); }, py::arg("n"));

  m.def("verify",
        [](int n_max, int n_min, int trials, std::uint64_t seed, std::uint64_t prime, int seeds) {
          hwcc::VerifyOptions o;
          o.oracle = oracle_config(trials, seed, prime);
          o.n_min = n_min;
          o.n_max = n_max;
          o.seed_count = seeds;
          hwcc::VerificationReport report;
          {
            py::gil_scoped_release release;
            report = hwcc::run_verification(o);
          }
          return to_python(report.to_json());
        },
        py::arg("n_max") = 10, py::arg("n_min") = 1, py::arg("trials") = hwcc::OracleConfig{}.trials,
        py::arg("seed") = hwcc::OracleConfig{}.seed, py::arg("prime") = hwcc::OracleConfig{}.prime,
        py::arg("seeds") = 3, "Runs the oracle suite and returns the report as a dict.");
}
