#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liehr/classify.hpp"
#include "liehr/parse.hpp"
#include "liehr/verify.hpp"

namespace py = pybind11;
using namespace liehr;

namespace {

IrrepSpec irrep_from_text(const std::string& group, const std::string& weights) {
    return parse_irrep(group, weights);
}

py::dict rep_info(const std::string& group, const std::string& weights) {
    RealRepSpec r = realify(irrep_from_text(group, weights));
    py::dict d;
    d["group"] = r.source.group.display_name;
    d["degree"] = r.source.complex_degree().convert_to<long long>();
    d["real_dim"] = r.real_dim.convert_to<long long>();
    d["reality"] = r.reality;
    d["absolutely_irreducible"] = r.abs_irred;
    return d;
}

py::dict solution_dict(const DiophantineSolution& s) {
    py::dict d;
    d["equation"] = s.which_equation;
    d["p"] = s.p;
    d["q"] = s.q;
    d["l"] = s.l;
    d["m"] = s.m;
    return d;
}

}  // namespace

PYBIND11_MODULE(_liehr, m) {
    m.doc() = "representation invariants and the vanishing homogeneity rank "
              "classification";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<data_error>(m, "DataError");
    py::register_exception<inconsistency_error>(m, "InconsistencyError");

    m.def("rep_info", &rep_info, py::arg("group"), py::arg("weights"),
          "degree, reality type and realified dimension of an irrep, e.g. "
          "rep_info('Sp1*Spin11', '[1]x[0,0,0,0,1]')");

    m.def("rep_dim", [](const std::string& group, const std::string& weights) {
        RealRepSpec r = realify(irrep_from_text(group, weights));
        return r.real_dim.convert_to<long long>();
    });

    m.def("fs_indicator", [](const std::string& group, const std::string& weights) {
        IrrepSpec s = irrep_from_text(group, weights);
        std::vector<int> parts;
        for (size_t i = 0; i < s.weights.size(); i++)
            parts.push_back(fs_indicator(s.group.simple_factors[i], s.weights[i]));
        return tensor_indicator(parts);
    });

    m.def("homogeneity_rank", [](const std::string& action_id) {
        return homogeneity_rank(shared_catalog().action(action_id));
    });

    m.def("min_degree_real", [](const std::string& group, bool exclude_full) {
        GroupSpec g = parse_group(group);
        if (g.simple_factors.size() != 1 || g.torus_rank != 0)
            throw domain_error("min_degree_real needs a simple group");
        return min_degree_real(g.simple_factors[0], exclude_full, 300);
    }, py::arg("group"), py::arg("exclude_full") = true);

    m.def("min_degree_quaternionic", [](const std::string& group, bool exclude_full)
              -> std::optional<int> {
        GroupSpec g = parse_group(group);
        if (g.simple_factors.size() != 1 || g.torus_rank != 0)
            throw domain_error("min_degree_quaternionic needs a simple group");
        return min_degree_quaternionic(g.simple_factors[0], exclude_full, 300);
    }, py::arg("group"), py::arg("exclude_full") = true);

    m.def("solve_eq9", [](long long p_max, long long q_max) {
        py::list out;
        for (const auto& s : solve_eq9(p_max, q_max)) out.append(solution_dict(s));
        return out;
    }, py::arg("p_max") = 100, py::arg("q_max") = 100);

    m.def("solve_eq10", [](long long p_max, long long q_max) {
        py::list out;
        for (const auto& s : solve_eq10(p_max, q_max)) out.append(solution_dict(s));
        return out;
    }, py::arg("p_max") = 100, py::arg("q_max") = 100);

    m.def("classify", [](long long max_dim) {
        ClassificationReport rep = run_classification(max_dim);
        py::dict d;
        d["max_dim"] = rep.max_dim;
        d["examples"] = rep.example_count;
        d["deferred"] = rep.deferred_count;
        py::list exc;
        for (const auto& [name, dim] : rep.exceptional) {
            py::dict e;
            e["name"] = name;
            e["dim"] = dim;
            exc.append(e);
        }
        d["exceptional"] = exc;
        d["report_json"] = rep.to_json().dump();
        return d;
    }, py::arg("max_dim") = 256);

    m.def("verify", [](const std::string& suite) {
        VerifyReport rep = run_verify(suite);
        py::dict d;
        d["passed"] = rep.all_pass();
        d["text"] = rep.to_text();
        return d;
    }, py::arg("suite") = "all");
}
