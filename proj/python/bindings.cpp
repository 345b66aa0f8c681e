#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ancensus/census.hpp"
#include "ancensus/cubic_order.hpp"
#include "ancensus/disc_fiber.hpp"
#include "ancensus/galois.hpp"
#include "ancensus/intpoly.hpp"
#include "ancensus/pila.hpp"
#include "ancensus/reducible.hpp"

namespace py = pybind11;
using namespace ancensus;

namespace {

IntPoly poly_from_list(const std::vector<std::string>& coeffs_low_first) {
    std::vector<Int> c;
    c.reserve(coeffs_low_first.size());
    for (const std::string& s : coeffs_low_first) c.emplace_back(s);
    return IntPoly(std::move(c));
}

std::vector<std::string> poly_to_list(const IntPoly& p) {
    std::vector<std::string> out;
    for (const Int& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

FiberBase base_from_list(int n, const std::vector<std::string>& coeffs) {
    std::vector<Int> c;
    for (const std::string& s : coeffs) c.emplace_back(s);
    return FiberBase(n, std::move(c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic census of alternating-group number field candidates";

    m.def("discriminant",
          [](const std::vector<std::string>& coeffs) {
              return discriminant(poly_from_list(coeffs)).get_str();
          },
          py::arg("coeffs_low_first"),
          "Discriminant of the polynomial with the given coefficients (as decimal strings).");

    m.def("fiber_disc_poly",
          [](int n, const std::vector<std::string>& base) {
              return poly_to_list(fiber_disc_poly(base_from_list(n, base)));
          },
          py::arg("n"), py::arg("base"),
          "Coefficients (lowest first) of the fiber discriminant polynomial.");

    m.def("classify_fiber",
          [](int n, const std::vector<std::string>& base) {
              const FiberCurve curve = classify_fiber(base_from_list(n, base));
              py::dict d;
              d["geometrically_irreducible"] = curve.geometrically_irreducible;
              if (curve.square_witness) {
                  d["witness_constant"] = curve.square_witness->first.get_str();
                  d["witness_square"] = poly_to_list(curve.square_witness->second);
              }
              return d;
          },
          py::arg("n"), py::arg("base"));

    m.def("certify_an",
          [](const std::vector<std::string>& coeffs, int prime_budget) {
              return certify_an(poly_from_list(coeffs), prime_budget).to_string();
          },
          py::arg("coeffs_low_first"), py::arg("prime_budget") = 100);

    m.def("same_field",
          [](const std::vector<std::string>& f, const std::vector<std::string>& g,
             int prime_count) {
              return same_field_heuristic(poly_from_list(f), poly_from_list(g), prime_count);
          },
          py::arg("f"), py::arg("g"), py::arg("prime_count") = 25);

    m.def("field_disc_cubic",
          [](const std::vector<std::vector<std::string>>& gens) -> py::object {
              std::vector<IntPoly> polys;
              for (const auto& g : gens) polys.push_back(poly_from_list(g));
              if (auto d = field_disc_cubic(polys)) return py::cast(d->get_str());
              return py::none();
          },
          py::arg("generators"));

    m.def("cyclic_cubic_oracle", &cyclic_cubic_oracle, py::arg("x"));

    m.def("theorem_exponents",
          [](int n) {
              const ExponentSet e = theorem_exponents(n);
              py::dict d;
              d["n"] = e.n;
              d["theorem_exp"] = e.theorem_exp.get_d();
              d["schmidt_exp"] = e.schmidt_exp.get_d();
              d["malle_exp"] = e.malle_exp.get_d();
              d["pila_fiber_exp"] = e.pila_fiber_exp.get_d();
              d["log_power"] = e.log_power;
              return d;
          },
          py::arg("n"));

    m.def("pila_bound_log10",
          [](int d, double b) { return pila_bound_log10({d, b}); }, py::arg("d"), py::arg("b"));

    m.def("count_fiber_points",
          [](int n, const std::vector<std::string>& base, long long x, long c_num, long c_den,
             bool include_singular) {
              return count_fiber_points(base_from_list(n, base), x, BoxConst{c_num, c_den},
                                        include_singular);
          },
          py::arg("n"), py::arg("base"), py::arg("x"), py::arg("c_num") = 1,
          py::arg("c_den") = 1, py::arg("include_singular") = false);

    m.def("run_census",
          [](int n, long long xmax, long c_num, long c_den, int partitions) {
              CensusConfig cfg;
              cfg.n = n;
              cfg.xmax = xmax;
              cfg.c = BoxConst{c_num, c_den};
              cfg.partitions = partitions;
              const CensusSummary summary = run_census(cfg);
              py::list rows;
              for (const auto& cp : summary.checkpoints) {
                  py::dict row;
                  row["x"] = cp.x;
                  row["points_on_r"] = cp.points_on_r;
                  row["an_polys"] = cp.an_polys;
                  row["fields"] = cp.fields;
                  row["unknown_verdicts"] = cp.unknown_verdicts;
                  rows.append(row);
              }
              py::dict out;
              out["checkpoints"] = rows;
              out["field_disc_exact"] = summary.field_disc_exact;
              out["disc_zero"] = summary.diagnostics.disc_zero;
              return out;
          },
          py::arg("n") = 3, py::arg("xmax") = 1000, py::arg("c_num") = 4, py::arg("c_den") = 1,
          py::arg("partitions") = 1);

    m.def("scan_reducible_fibers",
          [](int n, long long h) {
              const ReducibleScanReport report = scan_reducible_fibers(n, h);
              py::list hits;
              for (const auto& curve : report.hits) {
                  py::list coeffs;
                  for (const Int& c : curve.base.coeffs) coeffs.append(c.get_str());
                  hits.append(coeffs);
              }
              py::dict out;
              out["total_bases"] = report.total_bases;
              out["hits"] = hits;
              return out;
          },
          py::arg("n"), py::arg("h"));
}
