#pragma once

#include <map>
#include <optional>

#include "liehr/repcalc.hpp"

namespace liehr {

struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Connected principal isotropy data.  Finite components never affect the
// homogeneity rank, so (dim, rank) of the identity component is all we keep.
struct PrincipalIsotropyData {
    long long dim = 0;
    int rank = 0;
    std::optional<GroupSpec> name;
    std::string provenance;  // "paper" | "derived-rule" | "external-citation"

    bool finite() const { return dim == 0; }
};

struct ActionRecord {
    std::string id;
    GroupSpec group;
    std::optional<IrrepSpec> irrep;  // when expressible as a complex irrep
    Int real_dim = 0;
    int cohom = 0;
    PrincipalIsotropyData princ;
    std::string source;
    std::vector<std::string> tags;
};

struct SymmetricSpaceRecord {
    std::string family;  // AI, AII, BDI, ..., EI..EIX, FI, FII, G, II
    std::string label;   // e.g. "BDI(3,8)" or "II(B3)"
    GroupSpec L;
    GroupSpec G;
    bool hermitian = false;  // catalog data
    long long isotropy_dim = 0;
    int rank_x = 0;  // rank of the symmetric space = cohomogeneity of (G,V)
    std::string source;
};

// rk G - rk G_princ - cohom; asserts agreement with the dimension form
// rk G - rk G_princ + dim G - dim G_princ - dim V.
int homogeneity_rank(const ActionRecord& rec);

// rk G - rk L.
int symmetric_homrank(const SymmetricSpaceRecord& s);

// Inner type is computed, never stored.
bool inner_type(const SymmetricSpaceRecord& s);

// The isotropy action of a symmetric space, with principal isotropy derived
// from the restricted-root structure: dim m = dim G - dim V + rk X,
// rk m = rk L - rk X.
ActionRecord action_from_symmetric(const SymmetricSpaceRecord& s);

// dim nu^{G_x} <= cohom - (rk G_x - rk G_princ).
bool puttmann_bound(const ActionRecord& rec, long long fixed_normal_dim, int iso_rank);

// homrank(sub) <= homrank(super) for a subgroup acting on the same space.
bool monotonicity_check(const ActionRecord& sub, const ActionRecord& super);

// Cataloged principal-isotropy rules.  Returns nullopt when the parameters
// fall outside every rule's stated regime.
std::optional<PrincipalIsotropyData> principal_isotropy(
    const std::string& rule_id, const std::vector<long long>& params);

// Group constructors matching the classical names.
GroupSpec so_group(int n);
GroupSpec sp_group(int n);
GroupSpec su_group(int n);
GroupSpec simple_group(SimpleType t);

struct Catalog {
    int version = 0;
    std::vector<ActionRecord> actions;
    std::vector<SymmetricSpaceRecord> symmetric_spaces;
    std::vector<std::pair<std::string, std::string>> orbit_equivalent_pairs;
    std::vector<std::pair<std::string, std::string>> subgroup_pairs;  // (sub, super)

    const ActionRecord* find_action(const std::string& id) const;
    const ActionRecord& action(const std::string& id) const;
};

// Loads and validates; rejects untagged numerics and inconsistent records.
Catalog load_catalog(const std::string& path);

// LIEHR_CATALOG env var, else the compiled-in data directory.
std::string default_catalog_path();
std::string default_rules_path();

const Catalog& shared_catalog();  // loaded once from default_catalog_path()

}  // namespace liehr
