#pragma once

#include <json.hpp>

#include "liehr/homrank.hpp"

namespace liehr {

// A filter verdict disagreeing with a catalog homogeneity rank.
struct inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- rules file --------------------------------------------------------------
// Cited facts that the pipeline applies mechanically but does not prove:
// subgroup-rigidity arguments, orbit equivalences, and the resolution table
// for the Sp(p) x K survivors.

struct AxiomRule {
    std::string id, statement, cite;
};

struct OrbitEquivalenceRule {
    SimpleType t;
    HighestWeight w;
    std::string action_id;         // orbit-equivalent catalog action
    std::string symmetric_label;
    std::string cite;
};

struct SpTensorResolution {
    SimpleType t;
    HighestWeight w;
    long long p = 0, q = 0;
    std::string action_id;
    std::string symmetric_label;    // empty for the exceptional case
    std::string exceptional_name;   // empty for the symmetric cases
    std::string subgroup_example;   // action id of the unique proper example, if any
    std::string subgroup_rule;
};

struct SimpleSubgroupRule {
    SimpleType t;
    HighestWeight w;
    std::string rule;
};

// Rigidity rule for the subgroups of a cataloged example, keyed by action id
// or by an id prefix (the prefix form covers parametric families).
struct ActionSubgroupRule {
    std::string action;
    std::string action_prefix;
    std::string rule;
};

struct RuleSet {
    int version = 0;
    std::vector<AxiomRule> axioms;
    std::vector<OrbitEquivalenceRule> orbit_equivalences;
    std::vector<SpTensorResolution> sp_tensor_examples;
    std::vector<SimpleSubgroupRule> simple_subgroup_rules;
    std::vector<ActionSubgroupRule> action_subgroup_rules;

    const AxiomRule& axiom(const std::string& id) const;  // throws data_error
    const OrbitEquivalenceRule* find_orbit_equivalence(SimpleType t,
                                                       const HighestWeight& w) const;
    const SpTensorResolution* find_sp_resolution(SimpleType t, const HighestWeight& w,
                                                 long long p, long long q) const;
    const SimpleSubgroupRule* find_simple_rule(SimpleType t,
                                               const HighestWeight& w) const;
    const std::string* find_action_rule(const std::string& action_id) const;
};

RuleSet load_rules(const std::string& path);
const RuleSet& shared_rules();  // loaded once from default_rules_path()

// --- Diophantine solvers -----------------------------------------------------
// l^2 - 4pql + p^2 + q^2 + p + q = 0          (even m = 2l), and
// l^2 - (4pq-1)l + p^2 + q^2 - 2pq + p + q = 0 (odd m = 2l+1),
// with their side constraints, solved exactly via integer square roots.

struct DiophantineSolution {
    long long p, q, l, m;
    int which_equation;  // 9 or 10

    bool operator==(const DiophantineSolution&) const = default;
    auto operator<=>(const DiophantineSolution&) const = default;
};

std::vector<DiophantineSolution> solve_eq9(long long p_max, long long q_max,
                                           long long l_min = 2);
// apply_rank_bound toggles the extra condition l = [m/2] <= p + q.
std::vector<DiophantineSolution> solve_eq10(long long p_max, long long q_max,
                                            bool apply_rank_bound = true);

// --- pruning filters ---------------------------------------------------------

// dim V <= dim G + rk G; true = survives.
bool dim_rank_prune(const GroupSpec& g, long long d);

// Finite principal isotropy: no proper connected subgroup keeps the rank.
bool remark_b_rigidity(const ActionRecord& rec);

// rk(sub) >= rk(g) - princ.rank.
bool rank_defect_bound(const GroupSpec& g, const GroupSpec& sub,
                       const PrincipalIsotropyData& princ);

// SO(p) x K1 inside SO(p) x SO(q), K1 simple of real type and degree q.
struct SoSimpleVerdict {
    long long q = 0;
    long long r = 0;  // dim K1 + rk K1
    long long s = 0;  // minimal proper real degree of K1
    std::string pruned_by;             // rule id when no p survives
    std::vector<long long> survivors;  // admissible values of p >= 3
};
SoSimpleVerdict so_tensor_simple_filter(SimpleType t, long long q);

// SO(p) x (SO(k) (x) SO(l)); the survivor set is provably empty.
struct SoSoVerdict {
    std::string reason;  // rule id justifying emptiness
};
SoSoVerdict so_tensor_soso_filter(long long k, long long l, long long p);

// Simple quaternionic factors inside Sp(p) x Sp(q).
struct SpSurvivor {
    SimpleType t;
    HighestWeight w;
    long long p, q;
};
// K1 x Sp(q) with K1 of half-degree p: inequality 2p^2 - 2p <= dim K + rk K.
bool sp_tensor_k_admissible(SimpleType t, long long p);
std::vector<SpSurvivor> sp_tensor_k_filter(SimpleType t);  // at minimal half-degree
// Sp(p) x K1 with K1 of half-degree q: the (13)/(14) bounds on p.
std::vector<long long> sp_tensor_p_range(SimpleType t, long long q, long long p_cap);
std::vector<SpSurvivor> sp_tensor_q_filter(SimpleType t);  // at minimal half-degree

// Simple G1 inside SO(d): dimension bound plus the orbit-equivalence trigger.
struct SimpleCaseVerdict {
    long long d = 0;
    bool survives_dim_rank = false;
    bool symmetric_tagged = false;  // orbit-equivalent to a symmetric isotropy rep
};
SimpleCaseVerdict simple_so_case(SimpleType t, const HighestWeight& w);

// All (type, weight) with complex degree deg, the given indicator, proper
// image, deduped under diagram automorphisms of the weight.
std::vector<std::pair<SimpleType, HighestWeight>> simple_irreps_of_degree(long long deg,
                                                                          int fs);

// --- candidate enumeration ---------------------------------------------------

enum class Verdict { example, pruned, deferred };
const char* verdict_name(Verdict v);

struct CandidateCase {
    long long ambient_dim = 0;  // candidate sits inside SO(ambient_dim)
    std::string cls;            // candidate class, e.g. "so-tensor/simple"
    std::string chain;          // subgroup descent path, human readable
    Verdict verdict = Verdict::deferred;
    std::string rule;   // rule or inequality that decided the verdict
    std::string notes;
    std::vector<std::string> tags;
    std::string action_id;        // catalog reference for examples
    std::string symmetric_label;  // when orbit-equivalent to a symmetric space

    nlohmann::ordered_json to_json() const;
};

// Maximal-subgroup classes of SO(n), SU(n), Sp(n); reducible and
// complex-structure classes are emitted flagged not-absolutely-irreducible.
enum class AmbientFamily { SO, SU, Sp };
std::vector<CandidateCase> dynkin_candidates(AmbientFamily f, long long n,
                                             long long degree_cap = 300);

struct ClassificationReport {
    long long max_dim = 0;
    std::vector<CandidateCase> cases;
    std::vector<std::pair<std::string, long long>> exceptional;  // (name, dim)
    long long example_count = 0;
    long long deferred_count = 0;
    std::string note;

    nlohmann::ordered_json to_json() const;
    std::string to_table() const;
    std::string to_csv() const;
};

ClassificationReport run_classification(long long max_dim = 256);
ClassificationReport run_classification(long long max_dim, const Catalog& cat,
                                        const RuleSet& rules);

}  // namespace liehr
