#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqfdist/congruence.hpp"
#include "sqfdist/fpfamily.hpp"
#include "sqfdist/fppoly.hpp"
#include "sqfdist/gf2lemmas.hpp"
#include "sqfdist/gf2poly.hpp"
#include "sqfdist/intpoly.hpp"
#include "sqfdist/neighborhood.hpp"
#include "sqfdist/poly_text.hpp"
#include "sqfdist/totient.hpp"
#include "sqfdist/turan.hpp"

namespace py = pybind11;
using namespace sqf;

namespace {

py::int_ to_pyint(const mpz_class& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::dict search_report_dict(const SearchReport& r) {
    py::dict d;
    d["center"] = to_string(r.center);
    d["budget"] = r.budget;
    d["degree_cap"] = r.degree_cap;
    d["neighbors_tested"] = r.neighbors_tested;
    if (r.found) {
        d["found"] = to_string(*r.found);
        d["distance"] = r.distance;
    } else {
        d["found"] = py::none();
    }
    return d;
}

py::dict hard_instance_dict(const HardInstanceReport& r) {
    py::dict d;
    d["f"] = to_string(r.f);
    d["verified"] = r.verified;
    py::list blockers;
    for (const auto& b : r.blockers) {
        py::dict e;
        e["perturbation"] = to_string(b.perturbation);
        e["witness"] = to_string(b.square_witness);
        blockers.append(e);
    }
    d["blockers"] = blockers;
    if (r.counterexample) d["counterexample"] = to_string(*r.counterexample);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "distance to square-free polynomials over Z, GF(2) and F_p";

    py::class_<IntPoly>(m, "IntPoly")
        .def(py::init([](const std::string& text) { return parse_int_poly(text); }))
        .def("__str__", [](const IntPoly& f) { return to_string(f); })
        .def("__repr__", [](const IntPoly& f) { return "IntPoly('" + to_string(f) + "')"; })
        .def("__eq__", [](const IntPoly& a, const IntPoly& b) { return a == b; })
        .def("__add__", [](const IntPoly& a, const IntPoly& b) { return a + b; })
        .def("__sub__", [](const IntPoly& a, const IntPoly& b) { return a - b; })
        .def("__mul__", [](const IntPoly& a, const IntPoly& b) { return a * b; })
        .def_property_readonly("degree", &IntPoly::degree)
        .def("length", [](const IntPoly& f) { return to_pyint(f.length()); })
        .def("height", [](const IntPoly& f) { return to_pyint(f.height()); })
        .def("derivative", [](const IntPoly& f) { return f.derivative(); })
        .def("is_squarefree", [](const IntPoly& f) { return is_squarefree(f); });

    m.def("gcd_primitive", &gcd_primitive);
    m.def("resultant",
          [](const IntPoly& f, const IntPoly& g) { return to_pyint(resultant(f, g)); });
    m.def("root_multiplicity", [](const IntPoly& f, long num, long den) {
        return root_multiplicity(f, mpq_class(num, den));
    });
    m.def("squarefree_shift", &squarefree_shift);
    m.def("turan15_polynomial", []() { return turan15_polynomial(); });
    m.def("referee_polynomial", []() { return referee_polynomial(); });
    m.def("hard_family",
          [](int d, long k, const IntPoly& base) { return hard_family(d, k, base); });
    m.def("verify_hard_instance",
          [](const IntPoly& f, int k_cap) { return hard_instance_dict(verify_hard_instance(f, k_cap)); },
          py::arg("f"), py::arg("k_cap") = 0);
    m.def("build_turan15", []() {
        CongruenceSystem s = turan15_system();
        RatPoly f0 = crt_solve(s);
        IntPoly h = moduli_product(s);
        IntegerizeResult r = integerize(f0, h, 5);
        py::dict d;
        d["f0"] = to_string(f0);
        d["h"] = to_string(h);
        py::list cosets;
        for (const auto& c : r.cosets) cosets.append(c.get_str());
        d["cosets"] = cosets;
        d["f"] = to_string(r.witness);
        return d;
    });

    m.def("enumerate_neighbors",
          [](const IntPoly& f, int budget, int cap) {
              std::vector<std::string> out;
              for (const auto& g : enumerate_neighbors(f, budget, cap))
                  out.push_back(to_string(g));
              return out;
          });
    m.def("nearest_squarefree", [](const IntPoly& f, int budget, int cap) {
        return search_report_dict(nearest_squarefree(f, budget, cap));
    });
    m.def("tail_construct", &tail_construct);
    m.def("minimal_tail_exponent", &minimal_tail_exponent);
    m.def("degree_bound", [](long d, long lf) { return degree_bound(d, mpz_class(lf)); });
    m.def("tail_window", [](const IntPoly& f) {
        WindowResult r = tail_window(f);
        py::dict d;
        if (r.window) {
            py::dict w;
            w["m"] = r.window->m;
            w["phi_d"] = r.window->phi_d;
            w["lo"] = r.window->lo;
            w["hi"] = r.window->hi;
            d["window"] = w;
        }
        if (r.special_g) d["special_g"] = to_string(*r.special_g);
        return d;
    });

    m.def("phi_count", &phi_count);
    m.def("phi_count_cutoff", &phi_count_cutoff);
    m.def("derbal_bound", &derbal_bound);
    m.def("census", [](std::uint64_t r_max, const std::string& threshold) {
        mpq_class t(threshold);
        t.canonicalize();
        py::list rows;
        for (const auto& row : census(r_max, t))
            rows.append(py::make_tuple(row.r, row.phi_count, row.ratio.get_str()));
        return rows;
    });

    py::class_<GF2Poly>(m, "GF2Poly")
        .def(py::init([](const std::string& hex) { return GF2Poly::from_hex(hex); }))
        .def_static("from_bits", [](std::uint64_t bits) { return GF2Poly::from_bits(bits); })
        .def("__str__", &GF2Poly::to_hex)
        .def("__repr__", [](const GF2Poly& f) { return "GF2Poly('" + f.to_hex() + "')"; })
        .def("__eq__", [](const GF2Poly& a, const GF2Poly& b) { return a == b; })
        .def("__xor__", [](const GF2Poly& a, const GF2Poly& b) { return a ^ b; })
        .def("__mul__", [](const GF2Poly& a, const GF2Poly& b) { return a * b; })
        .def_property_readonly("degree", &GF2Poly::degree)
        .def("popcount", &GF2Poly::popcount)
        .def("is_squarefree", [](const GF2Poly& f) { return is_squarefree(f); })
        .def("is_irreducible", [](const GF2Poly& f) { return is_irreducible(f); });

    m.def("gf2_gcd", [](const GF2Poly& a, const GF2Poly& b) { return gcd(a, b); });
    m.def("reduce_mod2", &reduce_mod2);
    m.def("gf2_decompose", [](const GF2Poly& f) {
        auto [fe, fo] = decompose(f);
        return py::make_tuple(fe, fo);
    });
    m.def("gf2_factor_census", [](const GF2Poly& f) {
        py::dict d;
        for (const auto& [deg, cnt] : factor_census(f).counts) d[py::int_(deg)] = cnt;
        return d;
    });
    m.def("squarefree_tail_search",
          [](int max_degree, int jobs) {
              TailSearchOptions opts;
              opts.jobs = jobs;
              TailSearchReport r = squarefree_tail_search(max_degree, opts);
              py::dict d;
              d["max_degree"] = r.max_degree;
              d["ok"] = r.ok();
              py::list per_degree;
              for (const auto& s : r.per_degree) {
                  py::dict e;
                  e["degree"] = s.degree;
                  e["candidates"] = s.candidates;
                  e["non_squarefree"] = s.non_squarefree;
                  e["max_min_n"] = s.max_min_n;
                  e["failures"] = s.failures;
                  per_degree.append(e);
              }
              d["per_degree"] = per_degree;
              return d;
          },
          py::arg("max_degree"), py::arg("jobs") = 0);
    m.def("distance3_squarefree", &distance3_squarefree);
    m.def("distance1_squarefree", [](const GF2Poly& f) -> py::object {
        auto g = distance1_squarefree(f);
        if (!g) return py::none();
        return py::cast(*g);
    });

    py::class_<FpPoly>(m, "FpPoly")
        .def(py::init([](std::int64_t p, const std::string& text) {
            return parse_fp_poly(p, text);
        }))
        .def("__str__", [](const FpPoly& f) { return to_string(f); })
        .def("__repr__",
             [](const FpPoly& f) {
                 return "FpPoly(" + std::to_string(f.p()) + ", '" + to_string(f) + "')";
             })
        .def("__eq__", [](const FpPoly& a, const FpPoly& b) { return a == b; })
        .def_property_readonly("p", &FpPoly::p)
        .def_property_readonly("degree", &FpPoly::degree)
        .def("lp_length", &FpPoly::lp_length)
        .def("is_squarefree", [](const FpPoly& f) { return is_squarefree(f); });

    m.def("family_member", &family_member);
    m.def("verify_family_member", [](const FpPoly& f) {
        MemberReport r = verify_family_member(f);
        py::dict d;
        d["f"] = to_string(r.f);
        d["verified"] = r.verified;
        py::list blockers;
        for (const auto& b : r.blockers) {
            py::dict e;
            e["perturbation"] = to_string(b.perturbation);
            e["witness"] = to_string(b.square_witness);
            blockers.append(e);
        }
        d["blockers"] = blockers;
        if (r.refutation) d["refutation"] = to_string(*r.refutation);
        return d;
    });
    m.def("family_count_check",
          [](std::int64_t p, int d, int jobs) {
              FamilyCheck c = family_count_check(p, d, jobs);
              py::dict out;
              out["p"] = c.p;
              out["d"] = c.d;
              out["expected"] = to_pyint(c.expected);
              out["verified_members"] = c.verified_members;
              out["distinct"] = c.distinct;
              out["ok"] = c.ok;
              return out;
          },
          py::arg("p"), py::arg("d"), py::arg("jobs") = 0);
    m.def("question62_scan",
          [](std::int64_t p, int d, int jobs) {
              ScanResult r = question62_scan(p, d, jobs);
              py::dict out;
              out["p"] = r.p;
              out["d"] = r.d;
              out["max_min_distance"] = r.max_min_distance;
              out["witness"] = to_string(r.witness);
              out["scanned"] = r.scanned;
              return out;
          },
          py::arg("p"), py::arg("d"), py::arg("jobs") = 0);

    m.attr("__version__") = "0.1.0";
}
