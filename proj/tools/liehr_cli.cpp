#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "liehr/classify.hpp"
#include "liehr/parse.hpp"
#include "liehr/verify.hpp"

using namespace liehr;
using nlohmann::ordered_json;

namespace {

int reality_of(const RealRepSpec& r) { return r.reality; }

const char* reality_name(int fs) {
    return fs > 0 ? "real" : fs < 0 ? "quaternionic" : "complex";
}

void emit(const ordered_json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::string header, row;
        for (auto& [k, v] : j.items()) {
            if (!header.empty()) header += ",", row += ",";
            header += k;
            row += v.is_string() ? v.get<std::string>() : v.dump();
        }
        std::cout << header << "\n" << row << "\n";
        return;
    }
    for (auto& [k, v] : j.items())
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
}

ordered_json rep_info(const std::string& group, const std::string& weights) {
    IrrepSpec spec = parse_irrep(group, weights);
    RealRepSpec r = realify(spec);
    ordered_json j;
    j["group"] = spec.group.display_name;
    j["degree"] = r.source.complex_degree().str();
    j["reality"] = reality_name(reality_of(r));
    j["real_dim"] = r.real_dim.str();
    j["absolutely_irreducible"] = r.abs_irred;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants and classification for vanishing homogeneity rank"};
    app.require_subcommand(1);
    std::string format = "table";

    std::string group, weights;
    auto* rep_dim = app.add_subcommand("rep-dim", "degree and realified dimension");
    rep_dim->add_option("group", group)->required();
    rep_dim->add_option("weights", weights)->required();
    rep_dim->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    auto* rep_type = app.add_subcommand("rep-type", "reality type of an irrep");
    rep_type->add_option("group", group)->required();
    rep_type->add_option("weights", weights)->required();
    rep_type->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    std::string action_id;
    auto* homrank_cmd = app.add_subcommand("homrank", "homogeneity rank of a cataloged action");
    homrank_cmd->add_option("action", action_id)->required();
    homrank_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    std::string label;
    auto* symm = app.add_subcommand("symmspace", "symmetric-space record lookup");
    symm->add_option("label", label)->required();
    symm->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    std::string equation = "both";
    long long p_max = 100, q_max = 100;
    auto* solve = app.add_subcommand("solve", "Diophantine sweep for SO(m)xSp(p)xSp(q)");
    solve->add_option("equation", equation)->check(CLI::IsMember({"eq9", "eq10", "both"}));
    solve->add_option("--p-max", p_max);
    solve->add_option("--q-max", q_max);
    solve->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    long long max_dim = 256;
    std::string output;
    auto* classify = app.add_subcommand("classify", "run the classification walk");
    classify->add_option("--max-dim", max_dim);
    classify->add_option("--output", output, "write the report to a file");
    classify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "reproduce the published tables");
    verify->add_option("suite", suite);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*rep_dim || *rep_type) {
            emit(rep_info(group, weights), format);
        } else if (*homrank_cmd) {
            const ActionRecord& a = shared_catalog().action(action_id);
            ordered_json j;
            j["action"] = a.id;
            j["group"] = a.group.display_name;
            j["real_dim"] = a.real_dim.str();
            j["cohomogeneity"] = a.cohom;
            j["princ_dim"] = a.princ.dim;
            j["princ_rank"] = a.princ.rank;
            j["homogeneity_rank"] = homogeneity_rank(a);
            emit(j, format);
        } else if (*symm) {
            const SymmetricSpaceRecord* found = nullptr;
            for (const auto& s : shared_catalog().symmetric_spaces)
                if (s.label == label) found = &s;
            if (!found) throw domain_error("no symmetric space labeled '" + label + "'");
            ordered_json j;
            j["label"] = found->label;
            j["family"] = found->family;
            j["L"] = found->L.display_name;
            j["G"] = found->G.display_name;
            j["isotropy_dim"] = found->isotropy_dim;
            j["rank"] = found->rank_x;
            j["inner_type"] = inner_type(*found);
            j["homogeneity_rank"] = symmetric_homrank(*found);
            emit(j, format);
        } else if (*solve) {
            std::vector<DiophantineSolution> sols;
            if (equation != "eq10")
                for (auto& s : solve_eq9(p_max, q_max)) sols.push_back(s);
            if (equation != "eq9")
                for (auto& s : solve_eq10(p_max, q_max)) sols.push_back(s);
            if (format == "json") {
                ordered_json arr = ordered_json::array();
                for (auto& s : sols) {
                    ordered_json e;
                    e["equation"] = s.which_equation;
                    e["p"] = s.p;
                    e["q"] = s.q;
                    e["l"] = s.l;
                    e["m"] = s.m;
                    arr.push_back(e);
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                if (format == "csv") std::cout << "equation,p,q,l,m\n";
                for (auto& s : sols)
                    std::cout << (format == "csv"
                                      ? std::to_string(s.which_equation) + "," +
                                            std::to_string(s.p) + "," + std::to_string(s.q) +
                                            "," + std::to_string(s.l) + "," +
                                            std::to_string(s.m)
                                      : "eq" + std::to_string(s.which_equation) + "  p=" +
                                            std::to_string(s.p) + " q=" + std::to_string(s.q) +
                                            " l=" + std::to_string(s.l) + " m=" +
                                            std::to_string(s.m))
                              << "\n";
            }
        } else if (*classify) {
            ClassificationReport rep = run_classification(max_dim);
            std::string text = format == "json"  ? rep.to_json().dump(2) + "\n"
                               : format == "csv" ? rep.to_csv()
                                                 : rep.to_table();
            if (output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(output, std::ios::binary);
                if (!out) throw data_error("cannot write " + output);
                out << text;
            }
        } else if (*verify) {
            VerifyReport rep = run_verify(suite);
            if (format == "json")
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.to_text();
            if (!rep.all_pass()) return 1;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const inconsistency_error& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 5;
    } catch (const data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 4;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
