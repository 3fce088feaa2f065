#include "liehr/homrank.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>

#include <json.hpp>

namespace liehr {

using nlohmann::json;

GroupSpec so_group(int n) {
    if (n < 0) throw domain_error("SO(n) needs n >= 0");
    GroupSpec g;
    g.display_name = "SO(" + std::to_string(n) + ")";
    if (n <= 1) {
        g.finite_flag = true;
    } else if (n == 2) {
        g.torus_rank = 1;
    } else if (n == 3) {
        g.simple_factors = {SimpleType(Family::B, 1)};
    } else if (n == 4) {
        g.simple_factors = {SimpleType(Family::A, 1), SimpleType(Family::A, 1)};
    } else if (n % 2 == 1) {
        g.simple_factors = {SimpleType(Family::B, n / 2)};
    } else {
        g.simple_factors = {SimpleType(Family::D, n / 2)};
    }
    return g;
}

GroupSpec sp_group(int n) {
    if (n < 0) throw domain_error("Sp(n) needs n >= 0");
    GroupSpec g;
    g.display_name = "Sp(" + std::to_string(n) + ")";
    if (n == 0)
        g.finite_flag = true;
    else
        g.simple_factors = {SimpleType(Family::C, n)};
    return g;
}

GroupSpec su_group(int n) {
    if (n < 1) throw domain_error("SU(n) needs n >= 1");
    GroupSpec g;
    g.display_name = "SU(" + std::to_string(n) + ")";
    if (n == 1)
        g.finite_flag = true;
    else
        g.simple_factors = {SimpleType(Family::A, n - 1)};
    return g;
}

GroupSpec simple_group(SimpleType t) {
    GroupSpec g;
    g.simple_factors = {t};
    g.display_name = t.name();
    return g;
}

int homogeneity_rank(const ActionRecord& rec) {
    long long orbit_dim = rec.group.dim() - rec.princ.dim;
    Int expected_dim = Int(orbit_dim) + rec.cohom;
    if (expected_dim != rec.real_dim)
        throw data_error("action " + rec.id + ": dim V != dim orbit + cohom");
    int via_cohom = rec.group.rank() - rec.princ.rank - rec.cohom;
    Int via_dims = Int(rec.group.rank()) - rec.princ.rank + rec.group.dim() -
                   rec.princ.dim - rec.real_dim;
    if (Int(via_cohom) != via_dims)
        throw data_error("action " + rec.id + ": the two homrank forms disagree");
    return via_cohom;
}

int symmetric_homrank(const SymmetricSpaceRecord& s) {
    return s.G.rank() - s.L.rank();
}

bool inner_type(const SymmetricSpaceRecord& s) {
    return s.G.rank() == s.L.rank();
}

ActionRecord action_from_symmetric(const SymmetricSpaceRecord& s) {
    ActionRecord rec;
    rec.id = "symmetric:" + s.label;
    rec.group = s.G;
    rec.real_dim = s.isotropy_dim;
    rec.cohom = s.rank_x;
    rec.princ.dim = s.G.dim() - s.isotropy_dim + s.rank_x;
    rec.princ.rank = s.L.rank() - s.rank_x;
    rec.princ.provenance = "derived-rule";
    rec.source = s.source;
    if (rec.princ.dim < 0 || rec.princ.rank < 0 || rec.princ.rank > rec.princ.dim + 0)
        throw data_error("symmetric record " + s.label + " yields invalid isotropy data");
    return rec;
}

bool puttmann_bound(const ActionRecord& rec, long long fixed_normal_dim, int iso_rank) {
    return fixed_normal_dim <= rec.cohom - (iso_rank - rec.princ.rank);
}

bool monotonicity_check(const ActionRecord& sub, const ActionRecord& super) {
    if (sub.real_dim != super.real_dim)
        throw data_error("monotonicity check on mismatched spaces: " + sub.id + " vs " +
                         super.id);
    return homogeneity_rank(sub) <= homogeneity_rank(super);
}

namespace {

PrincipalIsotropyData from_group(const GroupSpec& g, const std::string& prov) {
    PrincipalIsotropyData p;
    p.dim = g.dim();
    p.rank = g.rank();
    p.name = g;
    p.provenance = prov;
    return p;
}

PrincipalIsotropyData product_princ(const std::vector<GroupSpec>& gs,
                                    const std::string& prov, std::string name) {
    PrincipalIsotropyData p;
    for (const auto& g : gs) {
        p.dim += g.dim();
        p.rank += g.rank();
    }
    GroupSpec merged;
    for (const auto& g : gs) {
        for (const auto& f : g.simple_factors) merged.simple_factors.push_back(f);
        merged.torus_rank += g.torus_rank;
    }
    merged.display_name = std::move(name);
    merged.finite_flag = merged.simple_factors.empty() && merged.torus_rank == 0;
    p.name = merged;
    p.provenance = prov;
    return p;
}

}  // namespace

std::optional<PrincipalIsotropyData> principal_isotropy(
    const std::string& rule_id, const std::vector<long long>& params) {
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw domain_error("rule " + rule_id + " takes " + std::to_string(n) +
                               " parameters");
    };
    if (rule_id == "so_tensor") {
        // SO(p) x SO(q) on R^p (x) R^q, p <= q
        need(2);
        long long p = params[0], q = params[1];
        if (!(1 <= p && p <= q)) return std::nullopt;
        return from_group(so_group(static_cast<int>(q - p)), "derived-rule");
    }
    if (rule_id == "sp_tensor") {
        // Sp(p) x Sp(q), p <= q: Sp(1)^p x Sp(q-p)
        need(2);
        long long p = params[0], q = params[1];
        if (!(1 <= p && p <= q)) return std::nullopt;
        std::vector<GroupSpec> gs;
        for (long long i = 0; i < p; i++) gs.push_back(sp_group(1));
        gs.push_back(sp_group(static_cast<int>(q - p)));
        return product_princ(gs, "derived-rule",
                             "Sp(1)^" + std::to_string(p) + "xSp(" +
                                 std::to_string(q - p) + ")");
    }
    if (rule_id == "sosp") {
        // SO(m) x Sp(p) x Sp(q) on R^m (x) R^{4pq}
        need(3);
        long long m = params[0], p = params[1], q = params[2];
        if (!(m >= 3 && 1 <= p && p <= q)) return std::nullopt;
        if (m >= 4 * p * q + 2)
            return from_group(so_group(static_cast<int>(m - 4 * p * q)), "derived-rule");
        if (q >= m * p + 1)
            return from_group(sp_group(static_cast<int>(q - m * p)), "derived-rule");
        return from_group(so_group(0), "derived-rule");  // trivial
    }
    if (rule_id == "sp1_cubic") {
        // Sp(1) x Sp(q) on S^3 (x)_H standard, q >= 2: Sp(q-2)
        need(1);
        long long q = params[0];
        if (q < 2) return std::nullopt;
        return from_group(sp_group(static_cast<int>(q - 2)), "external-citation");
    }
    if (rule_id == "so4_spin7") {
        need(0);
        return from_group(so_group(0), "paper");
    }
    if (rule_id == "sp1_spin11") {
        need(0);
        return from_group(so_group(0), "paper");
    }
    if (rule_id == "so_vector") {
        // SO(n) on R^n: SO(n-1)
        need(1);
        long long n = params[0];
        if (n < 1) return std::nullopt;
        return from_group(so_group(static_cast<int>(n - 1)), "derived-rule");
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Catalog loading

namespace {

long long tagged_int(const json& j, const char* field, const std::string& ctx) {
    if (!j.contains(field))
        throw data_error(ctx + ": missing field '" + field + "'");
    const json& v = j.at(field);
    if (!v.is_object() || !v.contains("value") || !v.contains("prov"))
        throw data_error(ctx + ": field '" + field +
                         "' must be a {value, prov} object");
    std::string prov = v.at("prov").get<std::string>();
    if (prov != "paper" && prov != "derived" && prov != "external")
        throw data_error(ctx + ": unknown provenance tag '" + prov + "'");
    return v.at("value").get<long long>();
}

SimpleType parse_simple_type(const std::string& s) {
    if (s == "E6") return SimpleType(Family::E6, 6);
    if (s == "E7") return SimpleType(Family::E7, 7);
    if (s == "E8") return SimpleType(Family::E8, 8);
    if (s == "F4") return SimpleType(Family::F4, 4);
    if (s == "G2") return SimpleType(Family::G2, 2);
    if (s.size() < 2) throw data_error("bad simple type '" + s + "'");
    int rank = std::stoi(s.substr(1));
    switch (s[0]) {
        case 'A': return SimpleType(Family::A, rank);
        case 'B': return SimpleType(Family::B, rank);
        case 'C': return SimpleType(Family::C, rank);
        case 'D': return SimpleType(Family::D, rank);
    }
    throw data_error("bad simple type '" + s + "'");
}

GroupSpec parse_group_json(const json& j, const std::string& ctx) {
    GroupSpec g;
    if (j.contains("factors"))
        for (const auto& f : j.at("factors"))
            g.simple_factors.push_back(parse_simple_type(f.get<std::string>()));
    if (j.contains("torus")) g.torus_rank = j.at("torus").get<int>();
    if (j.contains("display")) g.display_name = j.at("display").get<std::string>();
    if (j.contains("finite")) g.finite_flag = j.at("finite").get<bool>();
    if (g.finite_flag && (!g.simple_factors.empty() || g.torus_rank != 0))
        throw data_error(ctx + ": finite group must have no factors");
    return g;
}

ActionRecord parse_action(const json& j) {
    ActionRecord rec;
    rec.id = j.at("id").get<std::string>();
    std::string ctx = "action " + rec.id;
    rec.group = parse_group_json(j.at("group"), ctx);
    rec.real_dim = Int(tagged_int(j, "real_dim", ctx));
    rec.cohom = static_cast<int>(tagged_int(j, "cohom", ctx));
    const json& pj = j.at("princ");
    rec.princ.dim = tagged_int(pj, "dim", ctx + ".princ");
    rec.princ.rank = static_cast<int>(tagged_int(pj, "rank", ctx + ".princ"));
    rec.princ.provenance = pj.value("provenance", "paper");
    if (pj.contains("name"))
        rec.princ.name = parse_group_json(pj.at("name"), ctx + ".princ.name");
    if (rec.princ.rank > rec.princ.dim && rec.princ.dim > 0)
        throw data_error(ctx + ": princ rank > dim");
    if (rec.princ.dim == 0 && rec.princ.rank != 0)
        throw data_error(ctx + ": finite princ must have rank 0");
    rec.source = j.value("source", "");
    if (j.contains("tags"))
        for (const auto& t : j.at("tags")) rec.tags.push_back(t.get<std::string>());
    if (j.contains("weights")) {
        IrrepSpec ir;
        ir.group = rec.group;
        for (const auto& wj : j.at("weights")) {
            HighestWeight w;
            for (const auto& c : wj) w.coords.push_back(c.get<int>());
            ir.weights.push_back(w);
        }
        auto rr = realify(ir);
        if (rr.real_dim != rec.real_dim)
            throw data_error(ctx + ": realified dimension " + rr.real_dim.str() +
                             " != recorded " + rec.real_dim.str());
        rec.irrep = ir;
    }
    // both invariant forms must hold
    homogeneity_rank(rec);
    return rec;
}

SymmetricSpaceRecord parse_symmetric(const json& j) {
    SymmetricSpaceRecord s;
    s.family = j.at("family").get<std::string>();
    s.label = j.at("label").get<std::string>();
    std::string ctx = "symmetric " + s.label;
    s.L = parse_group_json(j.at("L"), ctx);
    s.G = parse_group_json(j.at("G"), ctx);
    const json& h = j.at("hermitian");
    if (!h.is_object() || !h.contains("value") || !h.contains("prov"))
        throw data_error(ctx + ": hermitian flag must carry provenance");
    s.hermitian = h.at("value").get<bool>();
    s.isotropy_dim = tagged_int(j, "isotropy_dim", ctx);
    s.rank_x = static_cast<int>(tagged_int(j, "rank_x", ctx));
    s.source = j.value("source", "");
    if (s.G.rank() > s.L.rank())
        throw data_error(ctx + ": rk G > rk L");
    if (s.L.dim() - s.G.dim() != s.isotropy_dim)
        throw data_error(ctx + ": dim L - dim G != isotropy dim");
    // derived action must satisfy both homrank forms and Lemma 2.4
    auto act = action_from_symmetric(s);
    if (homogeneity_rank(act) != symmetric_homrank(s))
        throw data_error(ctx + ": derived action contradicts rank difference");
    return s;
}

}  // namespace

const ActionRecord* Catalog::find_action(const std::string& id) const {
    for (const auto& a : actions)
        if (a.id == id) return &a;
    return nullptr;
}

const ActionRecord& Catalog::action(const std::string& id) const {
    const ActionRecord* a = find_action(id);
    if (!a) throw data_error("no catalog action with id '" + id + "'");
    return *a;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open catalog file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw data_error("catalog parse error: " + std::string(e.what()));
    }
    Catalog cat;
    cat.version = j.at("version").get<int>();
    for (const auto& aj : j.at("actions")) cat.actions.push_back(parse_action(aj));
    for (const auto& sj : j.at("symmetric_spaces"))
        cat.symmetric_spaces.push_back(parse_symmetric(sj));
    for (const auto& pj : j.value("orbit_equivalent_pairs", json::array()))
        cat.orbit_equivalent_pairs.emplace_back(pj.at(0).get<std::string>(),
                                                pj.at(1).get<std::string>());
    for (const auto& pj : j.value("subgroup_pairs", json::array()))
        cat.subgroup_pairs.emplace_back(pj.at(0).get<std::string>(),
                                        pj.at(1).get<std::string>());
    for (const auto& [sub, super] : cat.subgroup_pairs) {
        cat.action(sub);
        cat.action(super);
    }
    for (const auto& [a, b] : cat.orbit_equivalent_pairs) {
        cat.action(a);
        cat.action(b);
    }
    return cat;
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("LIEHR_CATALOG")) return env;
    return std::string(LIEHR_SOURCE_DATA_DIR) + "/catalog.json";
}

std::string default_rules_path() {
    if (const char* env = std::getenv("LIEHR_RULES")) return env;
    return std::string(LIEHR_SOURCE_DATA_DIR) + "/rules.json";
}

const Catalog& shared_catalog() {
    static Catalog cat = load_catalog(default_catalog_path());
    return cat;
}

}  // namespace liehr
