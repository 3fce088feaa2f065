#include "liehr/classify.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace liehr {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rules file

namespace {

SimpleType type_from_name(const std::string& s) {
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

HighestWeight weight_from_json(const nlohmann::json& j) {
    HighestWeight w;
    for (const auto& c : j) w.coords.push_back(c.get<int>());
    return w;
}

}  // namespace

const AxiomRule& RuleSet::axiom(const std::string& id) const {
    for (const auto& a : axioms)
        if (a.id == id) return a;
    throw data_error("no rule with id '" + id + "' in the rules file");
}

const OrbitEquivalenceRule* RuleSet::find_orbit_equivalence(
    SimpleType t, const HighestWeight& w) const {
    for (const auto& r : orbit_equivalences)
        if (r.t == t && r.w.coords == w.coords) return &r;
    return nullptr;
}

const SpTensorResolution* RuleSet::find_sp_resolution(SimpleType t,
                                                      const HighestWeight& w,
                                                      long long p, long long q) const {
    for (const auto& r : sp_tensor_examples)
        if (r.t == t && r.w.coords == w.coords && r.p == p && r.q == q) return &r;
    return nullptr;
}

const SimpleSubgroupRule* RuleSet::find_simple_rule(SimpleType t,
                                                    const HighestWeight& w) const {
    for (const auto& r : simple_subgroup_rules)
        if (r.t == t && r.w.coords == w.coords) return &r;
    return nullptr;
}

const std::string* RuleSet::find_action_rule(const std::string& action_id) const {
    for (const auto& r : action_subgroup_rules) {
        if (!r.action.empty() && r.action == action_id) return &r.rule;
        if (!r.action_prefix.empty() && action_id.size() > r.action_prefix.size() &&
            action_id.compare(0, r.action_prefix.size(), r.action_prefix) == 0) {
            // the remainder must be a bare number so that e.g. "sp1sp"
            // does not also swallow "sp1spin11"
            bool digits = true;
            for (size_t i = r.action_prefix.size(); i < action_id.size(); i++)
                if (!std::isdigit(static_cast<unsigned char>(action_id[i]))) digits = false;
            if (digits) return &r.rule;
        }
    }
    return nullptr;
}

RuleSet load_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open rules file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw data_error("rules parse error: " + std::string(e.what()));
    }
    RuleSet rs;
    rs.version = j.at("version").get<int>();
    for (const auto& aj : j.at("axioms")) {
        AxiomRule a;
        a.id = aj.at("id").get<std::string>();
        a.statement = aj.at("statement").get<std::string>();
        a.cite = aj.at("cite").get<std::string>();
        if (a.id.empty() || a.cite.empty())
            throw data_error("rules file: axiom without id or citation");
        rs.axioms.push_back(a);
    }
    for (const auto& oj : j.value("orbit_equivalences", nlohmann::json::array())) {
        OrbitEquivalenceRule r{type_from_name(oj.at("type").get<std::string>()),
                               weight_from_json(oj.at("weight")),
                               oj.at("action").get<std::string>(),
                               oj.value("symmetric", ""),
                               oj.at("cite").get<std::string>()};
        rs.orbit_equivalences.push_back(r);
    }
    for (const auto& sj : j.value("sp_tensor_examples", nlohmann::json::array())) {
        SpTensorResolution r{type_from_name(sj.at("type").get<std::string>()),
                             weight_from_json(sj.at("weight")),
                             sj.at("p").get<long long>(),
                             sj.at("q").get<long long>(),
                             sj.at("action").get<std::string>(),
                             sj.value("symmetric", ""),
                             sj.value("exceptional", ""),
                             sj.value("subgroup_example", ""),
                             sj.value("subgroup_rule", "")};
        rs.sp_tensor_examples.push_back(r);
    }
    for (const auto& sj : j.value("simple_subgroup_rules", nlohmann::json::array()))
        rs.simple_subgroup_rules.push_back(
            {type_from_name(sj.at("type").get<std::string>()),
             weight_from_json(sj.at("weight")), sj.at("rule").get<std::string>()});
    for (const auto& sj : j.value("action_subgroup_rules", nlohmann::json::array()))
        rs.action_subgroup_rules.push_back({sj.value("action", ""),
                                            sj.value("action_prefix", ""),
                                            sj.at("rule").get<std::string>()});
    // every referenced rule id must resolve
    for (const auto& r : rs.sp_tensor_examples)
        if (!r.subgroup_rule.empty()) rs.axiom(r.subgroup_rule);
    for (const auto& r : rs.simple_subgroup_rules) rs.axiom(r.rule);
    for (const auto& r : rs.action_subgroup_rules) rs.axiom(r.rule);
    return rs;
}

const RuleSet& shared_rules() {
    static RuleSet rs = load_rules(default_rules_path());
    return rs;
}

// ---------------------------------------------------------------------------
// Diophantine solvers

namespace {

long long isqrt_floor(long long v) {
    if (v < 0) return -1;
    Int r = boost::multiprecision::sqrt(Int(v));
    return r.convert_to<long long>();
}

long long isqrt_ceil(long long v) {
    long long s = isqrt_floor(v);
    return s * s == v ? s : s + 1;
}

}  // namespace

std::vector<DiophantineSolution> solve_eq9(long long p_max, long long q_max,
                                           long long l_min) {
    if (p_max < 1 || q_max < 1) throw domain_error("solve_eq9 needs positive bounds");
    std::vector<DiophantineSolution> out;
    for (long long p = 1; p <= p_max; p++) {
        for (long long q = p; q <= q_max; q++) {
            long long disc = 4 * p * p * q * q - p * p - q * q - p - q;
            if (disc < 0) continue;
            long long s = isqrt_floor(disc);
            if (s * s != disc) continue;
            for (long long l : {2 * p * q - s, 2 * p * q + s}) {
                if (l < l_min || l > 2 * p * q) continue;
                if (q > 2 * p * l) continue;  // q/(2p) <= l
                DiophantineSolution sol{p, q, l, 2 * l, 9};
                if (std::find(out.begin(), out.end(), sol) == out.end())
                    out.push_back(sol);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DiophantineSolution> solve_eq10(long long p_max, long long q_max,
                                            bool apply_rank_bound) {
    if (p_max < 1 || q_max < 1) throw domain_error("solve_eq10 needs positive bounds");
    std::vector<DiophantineSolution> out;
    for (long long p = 1; p <= p_max; p++) {
        for (long long q = p; q <= q_max; q++) {
            long long disc =
                16 * p * p * q * q - 4 * p * p - 4 * q * q - 4 * p - 4 * q + 1;
            if (disc < 0) continue;
            long long s = isqrt_floor(disc);
            if (s * s != disc) continue;  // disc is odd, so s is odd when exact
            for (long long l : {(4 * p * q - 1 - s) / 2, (4 * p * q - 1 + s) / 2}) {
                if (l < 1 || l > 2 * p * q) continue;
                if (q - p > 2 * p * l) continue;  // q/(2p) - 1/2 <= l
                if (apply_rank_bound && l > p + q) continue;  // [m/2] <= p+q
                DiophantineSolution sol{p, q, l, 2 * l + 1, 10};
                if (std::find(out.begin(), out.end(), sol) == out.end())
                    out.push_back(sol);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Pruning filters

bool dim_rank_prune(const GroupSpec& g, long long d) {
    return d <= g.dim() + g.rank();
}

bool remark_b_rigidity(const ActionRecord& rec) { return rec.princ.finite(); }

bool rank_defect_bound(const GroupSpec& g, const GroupSpec& sub,
                       const PrincipalIsotropyData& princ) {
    return sub.rank() >= g.rank() - princ.rank;
}

SoSimpleVerdict so_tensor_simple_filter(SimpleType t, long long q) {
    SoSimpleVerdict v;
    v.q = q;
    v.r = simple_dim(t) + t.rank;
    try {
        v.s = min_degree_real(t, /*exclude_full_orthogonal=*/true);
    } catch (const cap_exceeded&) {
        v.s = 1LL << 40;  // effectively infinite: (5) applies
    }
    if (6 * v.s > 2 * v.r + 9) {
        v.pruned_by = "ineq-5";
        return v;
    }
    if (6 * q > 2 * v.r + 9) {
        v.pruned_by = "ineq-4";
        return v;
    }
    for (long long p = 3; p * p < 2 * v.r && p < q; p++)
        if (p * p - 2 * q * p + 2 * v.r >= 0) v.survivors.push_back(p);
    if (v.survivors.empty()) v.pruned_by = "ineq-2-3";
    return v;
}

SoSoVerdict so_tensor_soso_filter(long long k, long long l, long long p) {
    if (k < 3 || l < k || p < 3) throw domain_error("soso filter needs 3 <= p, 3 <= k <= l");
    long long two_theta = (k % 2 ? -1 : 0) + (l % 2 ? -1 : 0);
    if (two_theta != 0) return {"ineq-6-8"};  // theta < 0 forces l < k
    // theta = 0: m = l - k needs (m-2k)^2 >= 8k^2-9 but (m+k)^2 (k^2-1) < k^4
    long long m_min = 2 * k + isqrt_ceil(8 * k * k - 9);
    if ((m_min + k) * (m_min + k) * (k * k - 1) < k * k * k * k)
        throw inconsistency_error("SO(k)xSO(l) tensor filter admits k=" +
                                  std::to_string(k));
    return {"ineq-6-8"};
}

bool sp_tensor_k_admissible(SimpleType t, long long p) {
    return 2 * p * p - 2 * p <= simple_dim(t) + t.rank;
}

std::vector<long long> sp_tensor_p_range(SimpleType t, long long q, long long p_cap) {
    long long r = simple_dim(t) + t.rank;
    std::vector<long long> out;
    if (4 * q > r + 4) return out;  // (13)
    for (long long p = 1; p <= p_cap && p < q; p++) {
        if (2 * p * p - 2 * p >= r) break;  // p < (1 + sqrt(1+2r))/2
        if (4 * q * q - 4 * q >= 2 * r) {   // (14) applies
            long long a = (2 * q - 1) * (2 * q - 1) - 2 * r;
            long long b = 2 * q - 1 - 2 * p;
            if (b < 0 || b * b < a) continue;
        }
        out.push_back(p);
    }
    return out;
}

namespace {

// Minimal-degree quaternionic weight with proper image, if any within the cap.
std::optional<std::pair<HighestWeight, long long>> min_quaternionic_weight(SimpleType t) {
    if (!admits_quaternionic(t)) return std::nullopt;
    for (const auto& [w, deg] : dominant_weights_up_to(t, 300)) {
        if (fs_indicator(t, w) != -1) continue;
        if (image_is_full_symplectic(t, w)) continue;
        return std::make_pair(w, (deg / 2).convert_to<long long>());
    }
    return std::nullopt;
}

}  // namespace

std::vector<SpSurvivor> sp_tensor_k_filter(SimpleType t) {
    std::vector<SpSurvivor> out;
    auto mw = min_quaternionic_weight(t);
    if (!mw) return out;
    auto [w, p] = *mw;
    if (sp_tensor_k_admissible(t, p)) out.push_back({t, w, p, 0});
    return out;
}

std::vector<SpSurvivor> sp_tensor_q_filter(SimpleType t) {
    std::vector<SpSurvivor> out;
    auto mw = min_quaternionic_weight(t);
    if (!mw) return out;
    auto [w, q] = *mw;
    for (long long p : sp_tensor_p_range(t, q, q))
        out.push_back({t, w, p, q});
    return out;
}

SimpleCaseVerdict simple_so_case(SimpleType t, const HighestWeight& w) {
    if (fs_indicator(t, w) != +1)
        throw domain_error("simple_so_case needs a real-type weight");
    SimpleCaseVerdict v;
    v.d = weyl_dim(t, w).convert_to<long long>();
    v.survives_dim_rank = dim_rank_prune(simple_group(t), v.d);
    v.symmetric_tagged = v.survives_dim_rank;  // Kollross Lemma 2.6 trigger
    return v;
}

// ---------------------------------------------------------------------------
// Degree-bounded enumeration of simple irreducible candidates

namespace {

Int binom(long long n, long long k) {
    Int r = 1;
    for (long long i = 0; i < k; i++) r = r * (n - i) / (i + 1);
    return r;
}

HighestWeight diagram_involution_weight(SimpleType t, const HighestWeight& w) {
    HighestWeight o = w;
    switch (t.family) {
        case Family::A:
            std::reverse(o.coords.begin(), o.coords.end());
            break;
        case Family::D:
            if (t.rank >= 4) std::swap(o.coords[t.rank - 2], o.coords[t.rank - 1]);
            break;
        case Family::E6:
            std::swap(o.coords[0], o.coords[5]);
            std::swap(o.coords[2], o.coords[4]);
            break;
        default:
            break;
    }
    return o;
}

// Simple types that can have a nontrivial proper-image irrep of the wanted
// indicator within the degree cap.  fs = 0 asks for complex type.
std::vector<SimpleType> candidate_types(long long cap, int fs) {
    std::vector<SimpleType> out;
    out.emplace_back(Family::A, 1);
    for (int n = 2;; n++) {
        Int mid = binom(n + 1, (n + 1) / 2);
        bool keep;
        if (fs == 0)
            keep = Int(n) * (n + 1) / 2 <= cap || Int(n + 1) * (n + 2) / 2 <= cap;
        else
            keep = Int(n) * (n + 2) <= cap || mid <= cap;
        if (!keep) break;
        out.emplace_back(Family::A, n);
    }
    for (int n = 2; Int(2 * n) * n + n <= cap || (n <= 60 && Int(1) << n <= cap); n++)
        out.emplace_back(Family::B, n);
    for (int n = 2; Int(2 * n) * n - n - 1 <= cap; n++)
        out.emplace_back(Family::C, n);
    for (int n = 4; Int(2 * n) * n - n <= cap || (n <= 60 && Int(1) << (n - 1) <= cap);
         n++)
        out.emplace_back(Family::D, n);
    if (cap >= 7) out.emplace_back(Family::G2, 2);
    if (cap >= 26) out.emplace_back(Family::F4, 4);
    if (cap >= 27) out.emplace_back(Family::E6, 6);
    if (cap >= 56) out.emplace_back(Family::E7, 7);
    if (cap >= 248) out.emplace_back(Family::E8, 8);
    return out;
}

const std::vector<std::pair<HighestWeight, Int>>& weights_upto(SimpleType t,
                                                               long long cap) {
    static std::map<std::pair<std::string, long long>,
                    std::vector<std::pair<HighestWeight, Int>>>
        memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t.name(), cap);
    auto it = memo.find(key);
    if (it == memo.end())
        it = memo.emplace(key, dominant_weights_up_to(t, cap)).first;
    return it->second;
}

bool is_a_vector_rep(SimpleType t, const HighestWeight& w) {
    if (t.family != Family::A || t.rank < 2) return false;
    int ones = 0, other = 0;
    for (size_t i = 0; i < w.coords.size(); i++) {
        if (w.coords[i] == 1)
            ones++;
        else if (w.coords[i] != 0)
            other++;
    }
    return other == 0 && ones == 1 &&
           (w.coords.front() == 1 || w.coords.back() == 1);
}

}  // namespace

std::vector<std::pair<SimpleType, HighestWeight>> simple_irreps_of_degree(long long deg,
                                                                          int fs) {
    long long cap = std::max<long long>(deg, 300);
    std::vector<std::pair<SimpleType, HighestWeight>> out;
    for (SimpleType t : candidate_types(cap, fs)) {
        for (const auto& [w, dimv] : weights_upto(t, cap)) {
            if (dimv != deg) continue;
            if (fs_indicator(t, w) != fs) continue;
            if (fs == +1 && image_is_full_orthogonal(t, w)) continue;
            if (fs == -1 && image_is_full_symplectic(t, w)) continue;
            if (fs == 0 && is_a_vector_rep(t, w)) continue;  // image is all of SU(deg)
            if (diagram_involution_weight(t, w).coords < w.coords) continue;
            out.emplace_back(t, w);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Candidate cases and reports

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::example: return "example";
        case Verdict::pruned: return "pruned";
        case Verdict::deferred: return "deferred";
    }
    return "?";
}

ordered_json CandidateCase::to_json() const {
    ordered_json j;
    j["ambient_dim"] = ambient_dim;
    j["class"] = cls;
    j["chain"] = chain;
    j["verdict"] = verdict_name(verdict);
    j["rule"] = rule;
    j["notes"] = notes;
    j["tags"] = tags;
    j["action"] = action_id;
    j["symmetric"] = symmetric_label;
    return j;
}

namespace {

std::string weight_str(const HighestWeight& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.coords.size(); i++) {
        if (i) s += ",";
        s += std::to_string(w.coords[i]);
    }
    return s + "]";
}

std::string rep_str(SimpleType t, const HighestWeight& w) {
    return t.name() + weight_str(w);
}

std::string so_name(long long n) { return "SO(" + std::to_string(n) + ")"; }
std::string sp_name(long long n) { return "Sp(" + std::to_string(n) + ")"; }

GroupSpec product_group(std::vector<GroupSpec> parts, const std::string& display) {
    GroupSpec g;
    for (auto& part : parts) {
        for (auto& f : part.simple_factors) g.simple_factors.push_back(f);
        g.torus_rank += part.torus_rank;
    }
    g.display_name = display;
    g.finite_flag = false;
    return g;
}

SimpleType dealias(SimpleType t) {
    if ((t.family == Family::B || t.family == Family::C) && t.rank == 1)
        return SimpleType(Family::A, 1);
    if (t.family == Family::D && t.rank == 3) return SimpleType(Family::A, 3);
    return t;
}

std::string normalized_canonical(const GroupSpec& g) {
    GroupSpec n = g;
    for (auto& f : n.simple_factors) f = dealias(f);
    return n.canonical_name();
}

}  // namespace

// ---------------------------------------------------------------------------
// The classification walk

namespace {

struct Walk {
    const Catalog& cat;
    const RuleSet& rules;
    std::vector<CandidateCase>& cases;

    CandidateCase& add(long long d, std::string cls, std::string chain) {
        cases.push_back({});
        CandidateCase& c = cases.back();
        c.ambient_dim = d;
        c.cls = std::move(cls);
        c.chain = std::move(chain);
        return c;
    }

    void prune(CandidateCase& c, const std::string& rule_id, std::string notes = "") {
        rules.axiom(rule_id);  // unknown rule ids are a data error
        c.verdict = Verdict::pruned;
        c.rule = rule_id;
        c.notes = std::move(notes);
    }

    const ActionRecord& verified_action(const std::string& id, long long d) {
        const ActionRecord& a = cat.action(id);
        if (homogeneity_rank(a) != 0)
            throw inconsistency_error("action " + id +
                                      " cited as example has nonzero homogeneity rank");
        if (a.real_dim != d)
            throw inconsistency_error("action " + id + " has dimension " +
                                      a.real_dim.str() + ", expected " +
                                      std::to_string(d));
        return a;
    }

    const ActionRecord* find_example_action(const GroupSpec& g, long long d) {
        std::string want = normalized_canonical(g);
        for (const auto& a : cat.actions)
            if (a.real_dim == d && normalized_canonical(a.group) == want &&
                homogeneity_rank(a) == 0)
                return &a;
        return nullptr;
    }

    // Pruning or descent record for the proper subgroups of a cataloged
    // example.  Returns the rule that closed the descent.
    void emit_subgroup_closure(const CandidateCase parent, const ActionRecord& act,
                               const SimpleSubgroupRule* simple_rule) {
        CandidateCase& c =
            add(parent.ambient_dim, parent.cls + "/subgroups",
                parent.chain + " > proper subgroups");
        if (simple_rule) {
            prune(c, simple_rule->rule);
            return;
        }
        if (remark_b_rigidity(act)) {
            prune(c, "remark-b-finite", "finite connected principal isotropy");
            return;
        }
        if (const std::string* r = rules.find_action_rule(act.id)) {
            prune(c, *r);
            return;
        }
        c.verdict = Verdict::deferred;
        c.notes = "no subgroup-rigidity rule recorded for " + act.id;
    }

    // ---- SO(p) x SO(q) and its maximal subgroups --------------------------
    void walk_so_tensor(long long d) {
        for (long long p = 3; p * p <= d; p++) {
            if (d % p) continue;
            long long q = d / p;

            std::string ex_chain = so_name(p) + "x" + so_name(q) + " on R^" +
                                   std::to_string(p) + "(x)R^" + std::to_string(q);
            std::string ex_id =
                "so-tensor-" + std::to_string(p) + "-" + std::to_string(q);
            verified_action(ex_id, d);
            {
                CandidateCase& ex = add(d, "so-tensor", ex_chain);
                ex.verdict = Verdict::example;
                ex.rule = "inner-type-criterion";
                ex.action_id = ex_id;
                ex.symmetric_label =
                    "BDI(" + std::to_string(p) + "," + std::to_string(q) + ")";
                ex.tags = {"symmetric"};
            }

            {
                CandidateCase& c = add(d, "so-tensor/left",
                                       ex_chain + " > K x " + so_name(q) +
                                           ", K maximal in " + so_name(p));
                prune(c, "puttmann-rank-forcing",
                      "the fixed normal space bound forces rk K = rk " + so_name(p));
            }

            if (p == q) {
                CandidateCase& c =
                    add(d, "so-tensor/diagonal", ex_chain + " > diagonal " + so_name(p));
                if (dim_rank_prune(so_group(static_cast<int>(p)), d))
                    throw inconsistency_error("diagonal SO(p) survives Remark 2.7(a)");
                prune(c, "so-diagonal");
                continue;  // the right-hand analysis duplicates the left
            }

            if (q == 8) {
                CandidateCase& c = add(d, "so-tensor/simple",
                                       ex_chain + " > " + so_name(p) +
                                           "x(Spin(8), half-spin)");
                prune(c, "triality-spin8");
            }
            for (const auto& [t, w] : simple_irreps_of_degree(q, +1))
                so_tensor_simple_case(d, ex_chain, p, q, t, w);

            for (long long k = 3; k * k <= q; k++) {
                if (q % k) continue;
                long long l = q / k;
                CandidateCase& c = add(d, "so-tensor/soso",
                                       ex_chain + " > " + so_name(p) + "x(" +
                                           so_name(k) + "(x)" + so_name(l) + ")");
                if (p * k <= l)
                    prune(c, "reduces-to-so-side",
                          "regroups as (" + so_name(p) + "(x)" + so_name(k) + ")x" +
                              so_name(l));
                else
                    prune(c, so_tensor_soso_filter(k, l, p).reason);
            }
            if (q % 4 == 0) {
                for (long long k = 1; 4 * k * k <= q; k++) {
                    if ((q / 4) % k) continue;
                    long long l = q / (4 * k);
                    CandidateCase& c = add(d, "so-tensor/spsp",
                                           ex_chain + " > " + so_name(p) + "x(" +
                                               sp_name(k) + "(x)" + sp_name(l) + ")");
                    prune(c, "handled-as-so-sp-sp",
                          "appears below as SO(" + std::to_string(p) + ")xSp(" +
                              std::to_string(k) + ")xSp(" + std::to_string(l) + ")");
                }
            }
        }
    }

    void so_tensor_simple_case(long long d, const std::string& ex_chain, long long p,
                               long long q, SimpleType t, const HighestWeight& w) {
        CandidateCase& c = add(d, "so-tensor/simple",
                               ex_chain + " > " + so_name(p) + "x" + rep_str(t, w));
        SoSimpleVerdict v = so_tensor_simple_filter(t, q);
        bool survives =
            std::find(v.survivors.begin(), v.survivors.end(), p) != v.survivors.end();
        if (!survives) {
            prune(c, v.pruned_by.empty() ? "ineq-2-3" : v.pruned_by,
                  "r=" + std::to_string(v.r) + " s=" + std::to_string(v.s));
            return;
        }
        GroupSpec g = product_group({so_group(static_cast<int>(p)), simple_group(t)},
                                    so_name(p) + "x" + t.name());
        const ActionRecord* act = find_example_action(g, d);
        if (!act) {
            c.verdict = Verdict::deferred;
            c.notes = "filter survivor with no catalog resolution";
            return;
        }
        c.verdict = Verdict::example;
        c.action_id = act->id;
        bool exceptional =
            std::find(act->tags.begin(), act->tags.end(), "theorem1") != act->tags.end();
        if (exceptional) {
            c.tags = {"exceptional"};
            c.notes = act->group.display_name + ": not orbit-equivalent to a symmetric "
                      "isotropy representation";
        } else {
            c.tags = {"symmetric", "orbit-equivalent"};
            c.rule = "kollross-orbit-equivalence";
            for (const auto& [a, b] : cat.orbit_equivalent_pairs)
                if (a == act->id || b == act->id)
                    c.notes = "orbit-equivalent to " + (a == act->id ? b : a);
            c.symmetric_label =
                "BDI(" + std::to_string(p) + "," + std::to_string(q) + ")";
        }
        CandidateCase parent = c;  // `cases` may reallocate below
        emit_subgroup_closure(parent, *act, nullptr);
    }

    // ---- Sp(p) x Sp(q) and its maximal subgroups --------------------------
    void walk_sp_tensor(long long d) {
        if (d % 4 || d == 4) return;
        for (long long p = 1; 4 * p * p <= d; p++) {
            if ((d / 4) % p) continue;
            long long q = d / (4 * p);

            CandidateCase& ex = add(d, "sp-tensor",
                                    sp_name(p) + "x" + sp_name(q) + " on H^" +
                                        std::to_string(p) + "(x)H^" + std::to_string(q));
            std::string ex_id = "cii-sp" + std::to_string(p) + "-sp" + std::to_string(q);
            verified_action(ex_id, d);
            ex.verdict = Verdict::example;
            ex.rule = "inner-type-criterion";
            ex.action_id = ex_id;
            ex.symmetric_label =
                "CII(" + std::to_string(p) + "," + std::to_string(q) + ")";
            ex.tags = {"symmetric"};
            std::string ex_chain = ex.chain;

            // K x Sp(q), K simple quaternionic of half-degree p
            for (const auto& [t, w] : simple_irreps_of_degree(2 * p, -1)) {
                CandidateCase& c = add(d, "sp-tensor/left",
                                       ex_chain + " > " + rep_str(t, w) + "x" +
                                           sp_name(q));
                if (!sp_tensor_k_admissible(t, p)) {
                    prune(c, "ineq-11");
                    continue;
                }
                GroupSpec g = product_group(
                    {simple_group(t), sp_group(static_cast<int>(q))},
                    t.name() + "x" + sp_name(q));
                const ActionRecord* act = find_example_action(g, d);
                if (!act) {
                    c.verdict = Verdict::deferred;
                    c.notes = "filter survivor with no catalog resolution";
                    continue;
                }
                c.verdict = Verdict::example;
                c.action_id = act->id;
                c.tags = {"exceptional"};
                c.notes = act->group.display_name +
                          ": not orbit-equivalent to a symmetric isotropy representation";
                CandidateCase parent = c;
                emit_subgroup_closure(parent, *act, nullptr);
            }
            // K of tensor form SO(k) x Sp(l) inside Sp(p)
            for (long long k = 3; k <= p; k++) {
                if (p % k) continue;
                CandidateCase& c = add(d, "sp-tensor/left",
                                       ex_chain + " > (" + so_name(k) + "(x)" +
                                           sp_name(p / k) + ")x" + sp_name(q));
                prune(c, "handled-as-so-sp-sp");
            }

            if (p < q) {
                // Sp(p) x K1, K1 simple quaternionic of half-degree q
                for (const auto& [t, w] : simple_irreps_of_degree(2 * q, -1))
                    sp_tensor_right_case(d, ex_chain, p, q, t, w);
                for (long long k = 3; k <= q; k++) {
                    if (q % k) continue;
                    CandidateCase& c = add(d, "sp-tensor/right",
                                           ex_chain + " > " + sp_name(p) + "x(" +
                                               so_name(k) + "(x)" + sp_name(q / k) + ")");
                    prune(c, "handled-as-so-sp-sp");
                }
            } else {
                CandidateCase& c =
                    add(d, "sp-tensor/diagonal", ex_chain + " > diagonal " + sp_name(p));
                if (p > 1 && dim_rank_prune(sp_group(static_cast<int>(p)), d))
                    throw inconsistency_error("diagonal Sp(p) survives Remark 2.7(a)");
                prune(c, "sp-diagonal");
            }
        }
    }

    void sp_tensor_right_case(long long d, const std::string& ex_chain, long long p,
                              long long q, SimpleType t, const HighestWeight& w) {
        CandidateCase& c = add(d, "sp-tensor/right",
                               ex_chain + " > " + sp_name(p) + "x" + rep_str(t, w));
        std::vector<long long> range = sp_tensor_p_range(t, q, p);
        if (std::find(range.begin(), range.end(), p) == range.end()) {
            prune(c, "ineq-13-14");
            return;
        }
        const SpTensorResolution* res = rules.find_sp_resolution(t, w, p, q);
        if (!res) {
            c.verdict = Verdict::deferred;
            c.notes = "filter survivor with no recorded resolution";
            return;
        }
        const ActionRecord& act = verified_action(res->action_id, d);
        c.verdict = Verdict::example;
        c.action_id = res->action_id;
        if (!res->exceptional_name.empty()) {
            c.tags = {"exceptional"};
            c.notes = res->exceptional_name +
                      ": not orbit-equivalent to a symmetric isotropy representation";
        } else {
            c.tags = {"symmetric"};
            c.symmetric_label = res->symmetric_label;
            c.rule = "inner-type-criterion";
        }
        CandidateCase parent = c;
        if (!res->subgroup_example.empty()) {
            const ActionRecord& sub = verified_action(res->subgroup_example, d);
            CandidateCase& sc = add(d, parent.cls + "/subgroups",
                                    parent.chain + " > " + sub.group.display_name);
            rules.axiom(res->subgroup_rule);
            sc.verdict = Verdict::example;
            sc.rule = res->subgroup_rule;
            sc.action_id = sub.id;
            sc.tags = {"exceptional"};
            sc.notes = "unique proper subgroup keeping vanishing homogeneity rank";
            CandidateCase sparent = sc;
            emit_subgroup_closure(sparent, sub, nullptr);
        } else if (remark_b_rigidity(act)) {
            emit_subgroup_closure(parent, act, nullptr);
        } else {
            CandidateCase& sc = add(d, parent.cls + "/subgroups",
                                    parent.chain + " > proper subgroups");
            prune(sc, res->subgroup_rule);
        }
    }

    // ---- SO(m) x Sp(p) x Sp(q) --------------------------------------------
    void walk_so_sp_sp(long long d) {
        if (d % 4) return;
        for (long long m = 3; 4 * m <= d; m++) {
            if ((d / 4) % m) continue;
            long long n2 = d / (4 * m);
            for (long long p = 1; p * p <= n2; p++) {
                if (n2 % p) continue;
                long long q = n2 / p;
                so_sp_sp_case(d, m, p, q);
            }
        }
    }

    bool sosp_diophantine_ok(long long m, long long p, long long q) {
        if (m % 2 == 0) {
            long long l = m / 2;
            if (l < 2 || l > 2 * p * q || q > 2 * p * l) return false;
            return l * l - 4 * p * q * l + p * p + q * q + p + q == 0;
        }
        long long l = (m - 1) / 2;
        if (l < 1 || l > 2 * p * q || q - p > 2 * p * l) return false;
        if (l > p + q) return false;  // (12)
        return l * l - (4 * p * q - 1) * l + p * p + q * q - 2 * p * q + p + q == 0;
    }

    void so_sp_sp_case(long long d, long long m, long long p, long long q) {
        GroupSpec g = product_group({so_group(static_cast<int>(m)),
                                     sp_group(static_cast<int>(p)),
                                     sp_group(static_cast<int>(q))},
                                    so_name(m) + "x" + sp_name(p) + "x" + sp_name(q));
        CandidateCase& c =
            add(d, "so-sp-sp", g.display_name + " on R^" + std::to_string(m) + "(x)H^" +
                                   std::to_string(p) + "(x)H^" + std::to_string(q));
        auto princ = principal_isotropy("sosp", {m, p, q});
        if (!princ) throw inconsistency_error("sosp rule rejected valid parameters");
        long long hr =
            g.rank() - princ->rank + g.dim() - princ->dim - d;  // dimension form
        std::string regime = m >= 4 * p * q + 2 ? "sosp-case-i"
                             : q >= m * p + 1   ? "sosp-case-ii"
                                                : "sosp-case-iii";
        if (regime == "sosp-case-iii" && (hr == 0) != sosp_diophantine_ok(m, p, q))
            throw inconsistency_error(
                "homogeneity rank and Diophantine solutions disagree at m=" +
                std::to_string(m) + " p=" + std::to_string(p) + " q=" +
                std::to_string(q));
        if (hr != 0) {
            prune(c, regime, "computed homogeneity rank " + std::to_string(hr));
            return;
        }
        if (p != 1 || q != 1)
            throw inconsistency_error("unexpected SO(m)xSp(p)xSp(q) example with p=" +
                                      std::to_string(p) + " q=" + std::to_string(q));
        // Sp(1)xSp(1) -> SO(4), so this is the SO(m) x SO(4) tensor example again
        long long a = std::min<long long>(m, 4), b = std::max<long long>(m, 4);
        std::string ex_id = "so-tensor-" + std::to_string(a) + "-" + std::to_string(b);
        verified_action(ex_id, d);
        c.verdict = Verdict::example;
        c.rule = "inner-type-criterion";
        c.action_id = ex_id;
        c.symmetric_label = "BDI(" + std::to_string(a) + "," + std::to_string(b) + ")";
        c.tags = {"symmetric", "orbit-equivalent"};
        c.notes = "same image as " + so_name(a) + "x" + so_name(b);
    }

    // ---- simple G1 ---------------------------------------------------------
    void walk_simple(long long d) {
        for (const auto& [t, w] : simple_irreps_of_degree(d, +1)) {
            CandidateCase& c =
                add(d, "simple", rep_str(t, w) + " on R^" + std::to_string(d));
            SimpleCaseVerdict v = simple_so_case(t, w);
            if (!v.survives_dim_rank) {
                prune(c, "remark-a",
                      "dim = " + std::to_string(d) + " > " +
                          std::to_string(simple_dim(t) + t.rank));
                continue;
            }
            c.tags = {"kollross-orbit-equivalent"};
            if (w.coords == highest_root_weight(t).coords) {
                // adjoint representation: the group manifold (K x K)/K, outer
                prune(c, "inner-type-criterion",
                      "adjoint action; rk(" + t.name() + "x" + t.name() + ") > rk " +
                          t.name());
                c.symmetric_label = "II(" + t.name() + ")";
                continue;
            }
            simple_resolution(c, d, t, w);
        }
    }

    void simple_resolution(CandidateCase& c, long long d, SimpleType t,
                           const HighestWeight& w) {
        const SymmetricSpaceRecord* match = nullptr;
        std::string want = normalized_canonical(simple_group(t));
        for (const auto& s : cat.symmetric_spaces)
            if (s.isotropy_dim == d && normalized_canonical(s.G) == want) {
                match = &s;
                break;
            }
        const ActionRecord* act = find_example_action(simple_group(t), d);
        if (match && !inner_type(*match)) {
            if (act)
                throw inconsistency_error("outer symmetric space " + match->label +
                                          " but catalog action " + act->id +
                                          " has homogeneity rank 0");
            prune(c, "inner-type-criterion",
                  "rk " + match->G.canonical_name() + " < rk " +
                      match->L.canonical_name());
            c.symmetric_label = match->label;
            return;
        }
        if (match && !act)
            throw inconsistency_error("inner non-Hermitian match " + match->label +
                                      " without a catalog action record");
        if (!act) {
            c.verdict = Verdict::deferred;
            c.notes = "no symmetric space or catalog action matches " + rep_str(t, w);
            return;
        }
        c.verdict = Verdict::example;
        c.rule = "kollross-orbit-equivalence";
        c.action_id = act->id;
        c.tags.push_back("symmetric");
        if (match) {
            c.symmetric_label = match->label;
        } else if (const OrbitEquivalenceRule* oe = rules.find_orbit_equivalence(t, w)) {
            c.symmetric_label = oe->symmetric_label;
            c.tags.push_back("orbit-equivalent");
            c.notes = oe->cite;
        }
        CandidateCase parent = c;
        emit_subgroup_closure(parent, *act, rules.find_simple_rule(t, w));
    }
};

}  // namespace

ClassificationReport run_classification(long long max_dim, const Catalog& cat,
                                        const RuleSet& rules) {
    if (max_dim < 8) throw domain_error("classification needs max_dim >= 8");
    ClassificationReport rep;
    rep.max_dim = max_dim;
    Walk walk{cat, rules, rep.cases};
    for (long long d = 8; d <= max_dim; d += 2) {
        walk.walk_so_tensor(d);
        walk.walk_sp_tensor(d);
        walk.walk_so_sp_sp(d);
        walk.walk_simple(d);
    }
    std::set<std::pair<long long, std::string>> exceptional;
    for (const auto& c : rep.cases) {
        if (c.verdict == Verdict::example) {
            rep.example_count++;
            if (std::find(c.tags.begin(), c.tags.end(), "exceptional") != c.tags.end())
                exceptional.insert({c.ambient_dim, cat.action(c.action_id).group.display_name});
        }
        if (c.verdict == Verdict::deferred) rep.deferred_count++;
    }
    for (const auto& [d, name] : exceptional) rep.exceptional.emplace_back(name, d);
    rep.note = "exhaustive over absolutely irreducible candidates of even degree <= " +
               std::to_string(max_dim) + "; not exhaustively verified above this cap";
    return rep;
}

ClassificationReport run_classification(long long max_dim) {
    return run_classification(max_dim, shared_catalog(), shared_rules());
}

ordered_json ClassificationReport::to_json() const {
    ordered_json j;
    j["version"] = 1;
    j["max_dim"] = max_dim;
    j["note"] = note;
    long long pruned = 0;
    for (const auto& c : cases)
        if (c.verdict == Verdict::pruned) pruned++;
    ordered_json summary;
    summary["examples"] = example_count;
    summary["pruned"] = pruned;
    summary["deferred"] = deferred_count;
    ordered_json exc = ordered_json::array();
    for (const auto& [name, d] : exceptional) {
        ordered_json e;
        e["name"] = name;
        e["dim"] = d;
        exc.push_back(e);
    }
    summary["exceptional"] = exc;
    j["summary"] = summary;
    ordered_json cs = ordered_json::array();
    for (const auto& c : cases) cs.push_back(c.to_json());
    j["cases"] = cs;
    return j;
}

std::string ClassificationReport::to_table() const {
    std::ostringstream os;
    os << "classification up to dimension " << max_dim << "\n";
    os << "examples: " << example_count << "  deferred: " << deferred_count << "\n";
    os << "exceptional families:\n";
    for (const auto& [name, d] : exceptional)
        os << "  " << name << "  (dim " << d << ")\n";
    os << "\n";
    for (const auto& c : cases) {
        os << c.ambient_dim << "  " << verdict_name(c.verdict) << "  " << c.cls << "  "
           << c.chain;
        if (!c.rule.empty()) os << "  [" << c.rule << "]";
        if (!c.symmetric_label.empty()) os << "  " << c.symmetric_label;
        if (!c.action_id.empty()) os << "  -> " << c.action_id;
        if (!c.notes.empty()) os << "  (" << c.notes << ")";
        os << "\n";
    }
    os << note << "\n";
    return os.str();
}

std::string ClassificationReport::to_csv() const {
    std::ostringstream os;
    auto esc = [](const std::string& s) {
        std::string o = "\"";
        for (char ch : s) {
            if (ch == '"') o += '"';
            o += ch;
        }
        return o + "\"";
    };
    os << "ambient_dim,class,chain,verdict,rule,notes,tags,action,symmetric\n";
    for (const auto& c : cases) {
        std::string tags;
        for (const auto& t : c.tags) {
            if (!tags.empty()) tags += ";";
            tags += t;
        }
        os << c.ambient_dim << "," << esc(c.cls) << "," << esc(c.chain) << ","
           << verdict_name(c.verdict) << "," << esc(c.rule) << "," << esc(c.notes)
           << "," << esc(tags) << "," << esc(c.action_id) << ","
           << esc(c.symmetric_label) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Maximal subgroup classes after Dynkin

std::vector<CandidateCase> dynkin_candidates(AmbientFamily f, long long n,
                                             long long degree_cap) {
    if (n < 2) throw domain_error("ambient degree must be at least 2");
    std::vector<CandidateCase> out;
    auto add = [&](std::string cls, std::string chain) -> CandidateCase& {
        out.push_back({});
        CandidateCase& c = out.back();
        c.ambient_dim = n;
        c.cls = std::move(cls);
        c.chain = std::move(chain);
        return c;
    };
    auto flag = [&](CandidateCase& c, const std::string& why) {
        c.verdict = Verdict::pruned;
        c.rule = why;
        c.tags = {"not-absolutely-irreducible"};
    };
    long long cap = std::max(degree_cap, n);
    switch (f) {
        case AmbientFamily::SO: {
            CandidateCase& a = add("dynkin/reducible",
                                   so_name(n) + " > SO(k)xSO(n-k), 1<=k<=n-1");
            flag(a, "reducible");
            for (long long p = 3; p * p <= n; p++) {
                if (n % p) continue;
                add("dynkin/so-tensor",
                    so_name(p) + "(x)" + so_name(n / p)).verdict = Verdict::deferred;
            }
            if (n % 2 == 0) {
                CandidateCase& u = add("dynkin/unitary", "U(" + std::to_string(n / 2) + ")");
                flag(u, "invariant-complex-structure");
            }
            if (n % 4 == 0 && n != 4)
                for (long long p = 1; 4 * p * p <= n; p++) {
                    if ((n / 4) % p) continue;
                    add("dynkin/sp-tensor",
                        sp_name(p) + "(x)" + sp_name(n / (4 * p))).verdict =
                        Verdict::deferred;
                }
            if (n <= cap)
                for (const auto& [t, w] : simple_irreps_of_degree(n, +1))
                    add("dynkin/simple", rep_str(t, w)).verdict = Verdict::deferred;
            break;
        }
        case AmbientFamily::SU: {
            add("dynkin/real-form", so_name(n)).verdict = Verdict::deferred;
            if (n % 2 == 0)
                add("dynkin/quaternionic-form", sp_name(n / 2)).verdict =
                    Verdict::deferred;
            CandidateCase& r = add("dynkin/reducible",
                                   "S(U(k)xU(n-k)), 1<=k<=n-1");
            flag(r, "reducible");
            for (long long p = 2; p * p <= n; p++) {
                if (n % p) continue;
                long long q = n / p;
                if (q < 3) continue;  // SU(p)(x)SU(q), p >= 2, q >= 3
                add("dynkin/su-tensor",
                    "SU(" + std::to_string(q) + ")(x)SU(" + std::to_string(p) + ")")
                    .verdict = Verdict::deferred;
            }
            if (n <= cap)
                for (const auto& [t, w] : simple_irreps_of_degree(n, 0))
                    add("dynkin/simple", rep_str(t, w)).verdict = Verdict::deferred;
            break;
        }
        case AmbientFamily::Sp: {
            CandidateCase& u = add("dynkin/unitary", "U(" + std::to_string(n) + ")");
            flag(u, "invariant-complex-structure");
            CandidateCase& r = add("dynkin/reducible",
                                   "Sp(k)xSp(n-k), 1<=k<=n-1");
            flag(r, "reducible");
            for (long long p = 3; p <= n; p++) {
                if (n % p) continue;
                add("dynkin/so-sp-tensor",
                    so_name(p) + "(x)" + sp_name(n / p)).verdict = Verdict::deferred;
            }
            if (2 * n <= cap)
                for (const auto& [t, w] : simple_irreps_of_degree(2 * n, -1))
                    add("dynkin/simple", rep_str(t, w)).verdict = Verdict::deferred;
            break;
        }
    }
    return out;
}

}  // namespace liehr
