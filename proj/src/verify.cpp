#include "liehr/verify.hpp"

#include <sstream>

namespace liehr {

namespace {

struct Collector {
    const std::string suite;
    std::vector<VerifyCheck>& out;

    void check(const std::string& name, const std::string& expected,
               const std::string& actual) {
        out.push_back({suite, name, expected == actual, expected, actual});
    }
    void check_int(const std::string& name, long long expected, long long actual) {
        check(name, std::to_string(expected), std::to_string(actual));
    }
};

void verify_theorem1(const Catalog& cat, std::vector<VerifyCheck>& out) {
    Collector c{"theorem1", out};
    for (int n = 2; n <= 32; n++) {
        const ActionRecord& a = cat.action("thm11-sp1sp" + std::to_string(n));
        if (!a.irrep) throw data_error(a.id + ": missing irrep data");
        RealRepSpec r = realify(*a.irrep);
        c.check_int("Sp(1)xSp(" + std::to_string(n) + ") real dim", 8LL * n,
                    r.real_dim.convert_to<long long>());
        c.check_int("Sp(1)xSp(" + std::to_string(n) + ") cohom", 3, a.cohom);
        c.check_int("Sp(1)xSp(" + std::to_string(n) + ") homrank", 0,
                    homogeneity_rank(a));
    }
    for (auto [id, d, cohom] : {std::tuple<const char*, long long, int>
                                    {"thm11-so4spin7", 32, 5},
                                    {"thm11-sp1spin11", 64, 6}}) {
        const ActionRecord& a = cat.action(id);
        if (!a.irrep) throw data_error(a.id + ": missing irrep data");
        RealRepSpec r = realify(*a.irrep);
        c.check_int(a.group.display_name + " real dim", d,
                    r.real_dim.convert_to<long long>());
        c.check_int(a.group.display_name + " cohom", cohom, a.cohom);
        c.check_int(a.group.display_name + " homrank", 0, homogeneity_rank(a));
    }
}

void verify_table36(const Catalog& cat, std::vector<VerifyCheck>& out) {
    Collector c{"table36", out};
    static const long long dims[10] = {40, 64, 112, 28, 8, 128, 70, 24, 8, 16};
    static const long long princ_dims[10] = {2, 9, 28, 0, 0, 0, 0, 3, 14, 21};
    for (int row = 1; row <= 10; row++) {
        const ActionRecord& a = cat.action("table36-" + std::to_string(row));
        std::string tag = "row " + std::to_string(row);
        if (!a.irrep) throw data_error(a.id + ": missing irrep data");
        RealRepSpec r = realify(*a.irrep);
        c.check_int(tag + " computed dim", dims[row - 1],
                    r.real_dim.convert_to<long long>());
        c.check_int(tag + " catalog dim", dims[row - 1],
                    a.real_dim.convert_to<long long>());
        c.check_int(tag + " princ dim", princ_dims[row - 1], a.princ.dim);
        c.check_int(tag + " princ rank = rk G - c", a.group.rank() - a.cohom,
                    a.princ.rank);
        c.check_int(tag + " homrank", 0, homogeneity_rank(a));
    }
}

void verify_exceptional_rs(std::vector<VerifyCheck>& out) {
    Collector c{"exceptional-rs", out};
    const std::pair<SimpleType, std::pair<int, int>> rows[] = {
        {SimpleType(Family::G2, 2), {16, 7}},   {SimpleType(Family::F4, 4), {56, 26}},
        {SimpleType(Family::E6, 6), {84, 78}},  {SimpleType(Family::E7, 7), {140, 133}},
        {SimpleType(Family::E8, 8), {256, 248}}};
    for (const auto& [t, rs] : rows) {
        c.check_int(t.name() + " r", rs.first, simple_dim(t) + t.rank);
        c.check_int(t.name() + " s", rs.second, min_degree_real(t, true, 300));
    }
}

void verify_quaternionic_s(std::vector<VerifyCheck>& out) {
    Collector c{"quaternionic-s", out};
    const std::pair<SimpleType, int> rows[] = {
        {SimpleType(Family::A, 5), 10}, {SimpleType(Family::B, 5), 16},
        {SimpleType(Family::D, 6), 16}, {SimpleType(Family::B, 6), 32},
        {SimpleType(Family::C, 3), 7},  {SimpleType(Family::C, 2), 8},
        {SimpleType(Family::C, 1), 2},  {SimpleType(Family::E7, 7), 28}};
    for (const auto& [t, s] : rows) {
        auto got = min_degree_quaternionic(t, true, 300);
        c.check(t.name() + " s", std::to_string(s),
                got ? std::to_string(*got) : "none");
    }
    for (SimpleType t : {SimpleType(Family::A, 2), SimpleType(Family::B, 3),
                         SimpleType(Family::B, 4), SimpleType(Family::D, 4),
                         SimpleType(Family::D, 8), SimpleType(Family::G2, 2),
                         SimpleType(Family::F4, 4), SimpleType(Family::E6, 6),
                         SimpleType(Family::E8, 8)}) {
        auto got = min_degree_quaternionic(t, true, 300);
        c.check(t.name() + " s", "none", got ? std::to_string(*got) : "none");
    }
}

std::string solutions_str(const std::vector<DiophantineSolution>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); i++) {
        if (i) s += ", ";
        s += "(" + std::to_string(v[i].p) + "," + std::to_string(v[i].q) + "," +
             std::to_string(v[i].l) + ",m=" + std::to_string(v[i].m) + ")";
    }
    return s + "}";
}

void verify_diophantine(std::vector<VerifyCheck>& out) {
    Collector c{"diophantine", out};
    c.check("eq9 bounds 100", "{(1,1,2,m=4)}", solutions_str(solve_eq9(100, 100)));
    c.check("eq10 bounds 100", "{(1,1,1,m=3), (1,1,2,m=5)}",
            solutions_str(solve_eq10(100, 100)));
    c.check("eq9 stable at 300", solutions_str(solve_eq9(100, 100)),
            solutions_str(solve_eq9(300, 300)));
    c.check("eq10 stable at 300", solutions_str(solve_eq10(100, 100)),
            solutions_str(solve_eq10(300, 300)));
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    size_t passed = 0;
    for (const auto& c : checks) {
        if (c.pass) {
            passed++;
            os << "PASS  " << c.suite << ": " << c.name << " = " << c.actual << "\n";
        } else {
            os << "FAIL  " << c.suite << ": " << c.name << " expected " << c.expected
               << ", got " << c.actual << "\n";
        }
    }
    os << passed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["passed"] = all_pass();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["suite"] = c.suite;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j;
}

VerifyReport run_verify(const std::string& suite, const Catalog& cat) {
    VerifyReport rep;
    bool all = suite == "all";
    bool known = all;
    if (all || suite == "theorem1") verify_theorem1(cat, rep.checks), known = true;
    if (all || suite == "table36") verify_table36(cat, rep.checks), known = true;
    if (all || suite == "exceptional-rs") verify_exceptional_rs(rep.checks), known = true;
    if (all || suite == "quaternionic-s") verify_quaternionic_s(rep.checks), known = true;
    if (all || suite == "diophantine") verify_diophantine(rep.checks), known = true;
    if (!known)
        throw domain_error("unknown verify suite '" + suite +
                           "'; expected theorem1, table36, exceptional-rs, "
                           "quaternionic-s, diophantine, or all");
    return rep;
}

VerifyReport run_verify(const std::string& suite) {
    return run_verify(suite, shared_catalog());
}

}  // namespace liehr
