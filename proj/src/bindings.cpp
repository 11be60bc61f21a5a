// Python bindings for the main operations. Exact values cross the boundary
// as strings (decimal integers, "p/q" rationals, log-linear text) so nothing
// is lost to floating point.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurlab/colouring.hpp"
#include "schurlab/families.hpp"
#include "schurlab/intset.hpp"
#include "schurlab/layering.hpp"
#include "schurlab/linkgraph.hpp"
#include "schurlab/loglin.hpp"
#include "schurlab/lp.hpp"
#include "schurlab/reports.hpp"

namespace py = pybind11;
using namespace schurlab;

namespace {

IntSet make_set(int n, const std::vector<int>& elems) { return IntSet::from_elements(n, elems); }

std::vector<IntSet> make_tuple(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<IntSet> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(make_set(n, s));
    return out;
}

py::dict loglin_dict(const loglin::LogLin& v) {
    py::dict d;
    d["text"] = loglin::to_string(v);
    d["decimal"] = loglin::decimal_str(v, 30);
    return d;
}

}  // namespace

PYBIND11_MODULE(_schurlab, m) {
    m.doc() = "exact sum-free colouring counts, layering searches and LP certificates";

    m.def("is_sum_free",
          [](int n, const std::vector<int>& elems) { return is_sum_free(make_set(n, elems)); });
    m.def("schur_triples", [](int n, const std::vector<int>& elems) {
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& t : schur_triples(make_set(n, elems))) out.push_back({t.x, t.y, t.z});
        return out;
    });
    m.def("classify_types", [](int n, const std::vector<int>& elems) {
        auto t = classify_types(make_set(n, elems));
        py::dict d;
        d["small"] = t.small;
        d["all_odd"] = t.all_odd;
        d["min_bounded"] = t.min_bounded;
        return d;
    });
    m.def("construct", [](const std::string& kind, int n, int m1, int m2) {
        return construct(construct_kind_from(kind), n, m1, m2).elements();
    }, py::arg("kind"), py::arg("n"), py::arg("m1") = 0, py::arg("m2") = 0);
    m.def("sumset", [](const std::vector<long long>& a, const std::vector<long long>& b) {
        return sumset(a, b);
    });
    m.def("enumerate_sum_free", [](int n, bool maximal_only, int ceiling) {
        std::vector<std::vector<int>> out;
        for (const auto& s : enumerate_sum_free(n, maximal_only, ceiling))
            out.push_back(s.elements());
        return out;
    }, py::arg("n"), py::arg("maximal_only") = false, py::arg("ceiling") = 0);
    m.def("is_maximal_sum_free", [](int n, const std::vector<int>& elems) {
        return is_maximal_sum_free(make_set(n, elems));
    });

    m.def("count_valid_colourings", [](int n, const std::vector<int>& elems, int r) {
        return colouring::count_valid_colourings(make_set(n, elems), r).get_str();
    });
    m.def("search_f", [](int n, int r, bool extremal, int ceiling, unsigned jobs) {
        auto res = colouring::search_f(n, r, extremal, ceiling, jobs);
        py::dict d;
        d["n"] = res.n;
        d["r"] = res.r;
        d["max"] = res.max_count.get_str();
        std::vector<std::vector<int>> ex;
        for (const auto& s : res.extremal) ex.push_back(s.elements());
        d["extremal"] = ex;
        return d;
    }, py::arg("n"), py::arg("r"), py::arg("extremal") = false, py::arg("ceiling") = 0,
       py::arg("jobs") = 1);
    m.def("construction_lower_bounds", [](int n, int r) {
        auto b = colouring::construction_lower_bounds(n, r);
        return py::make_tuple(b.half_exponent_bound.get_str(),
                              b.quarter_exponent_bound.get_str(), b.comparison);
    });

    m.def("intersection_vector", [](int n, const std::vector<std::vector<int>>& sets) {
        auto iv = layering::intersection_vector(make_tuple(n, sets));
        py::dict d;
        d["n"] = iv.n;
        d["r"] = iv.r;
        std::vector<std::string> ds;
        for (const auto& q : iv.d) ds.push_back(rational_str(q));
        d["d"] = ds;
        std::vector<std::vector<int>> levels;
        for (const auto& s : iv.level) levels.push_back(s.elements());
        d["levels"] = levels;
        return d;
    });
    m.def("g_value", [](int n, const std::vector<std::vector<int>>& sets) {
        return loglin_dict(layering::g_value(make_tuple(n, sets)));
    });
    m.def("g_search", [](int n, int r, const std::optional<std::vector<int>>& union_target) {
        std::optional<IntSet> u;
        if (union_target) u = make_set(n, *union_target);
        auto res = layering::g_search(n, r, u);
        py::dict d;
        d["value"] = loglin_dict(res.value);
        std::vector<std::vector<std::vector<int>>> am;
        for (const auto& tuple : res.argmax) {
            std::vector<std::vector<int>> t;
            for (const auto& s : tuple) t.push_back(s.elements());
            am.push_back(t);
        }
        d["argmax"] = am;
        return d;
    }, py::arg("n"), py::arg("r"), py::arg("union_target") = py::none());

    m.def("link_graph", [](int n, const std::vector<int>& s, const std::vector<int>& b) {
        auto g = linkgraph::link_graph(make_set(n, s), make_set(n, b));
        return g.edges;
    });
    m.def("max_matching", [](int n, const std::vector<std::pair<int, int>>& edges) {
        linkgraph::Graph g;
        g.n = n;
        g.vertices = IntSet(n);
        for (auto [u, v] : edges) {
            g.vertices.insert(u);
            g.vertices.insert(v);
        }
        g.edges = edges;
        return linkgraph::max_matching(g);
    });
    m.def("matching_colouring_bound", [](int n, const std::vector<int>& elems, int x, int r) {
        return linkgraph::matching_colouring_bound(make_set(n, elems), x, r).get_str();
    });

    m.def("loglin_sign", [](const std::string& text) { return loglin::sign(loglin::parse(text)); });
    m.def("loglin_decimal", [](const std::string& text, unsigned digits) {
        return loglin::decimal_str(loglin::parse(text), digits);
    }, py::arg("text"), py::arg("digits") = 30);
    m.def("log_int", [](unsigned long i) { return loglin::to_string(loglin::log_int(i)); });

    m.def("lp_families", [] {
        std::vector<std::string> out;
        for (const auto& f : lp::families::registry()) out.push_back(f.label);
        return out;
    });
    m.def("lp_solve", [](const std::string& label, const std::string& eps) {
        const auto& f = lp::families::family(label);
        auto prog = f.build(parse_rational(eps));
        auto res = lp::simplex_max(prog);
        py::dict d;
        d["family"] = label;
        d["optimum"] = loglin_dict(res.optimum);
        py::dict arg;
        for (std::size_t i = 0; i < prog.var_names.size(); ++i)
            arg[prog.var_names[i].c_str()] = rational_str(res.argmax[i]);
        d["argmax"] = arg;
        return d;
    });
    m.def("lp_verify", [](const std::string& label, const std::string& eps) {
        const auto& f = lp::families::family(label);
        auto prog = f.build(parse_rational(eps));
        std::vector<py::dict> out;
        for (const auto& ce : f.certificates) {
            auto chk = lp::verify_dual(prog, ce.cert);
            py::dict d;
            d["certificate"] = ce.name;
            d["feasible"] = chk.feasible;
            d["objective"] = loglin_dict(chk.objective);
            out.push_back(d);
        }
        return out;
    });
    m.def("lp_check_sufficient", [](const std::string& label, const std::string& eps_prime,
                                    const std::string& eps) {
        auto res = lp::families::check_sufficient(label, parse_rational(eps_prime),
                                                  parse_rational(eps));
        py::dict d;
        d["sufficient"] = res.sufficient;
        d["optimum"] = loglin_dict(res.optimum);
        d["bound"] = loglin_dict(res.bound);
        return d;
    });

    m.def("run_criterion", [](int id, unsigned jobs) {
        auto c = reports::run_criterion(id, jobs);
        py::dict d;
        d["id"] = c.id;
        d["name"] = c.name;
        d["pass"] = c.pass;
        d["lines"] = c.lines;
        return d;
    }, py::arg("id"), py::arg("jobs") = 0);
}
