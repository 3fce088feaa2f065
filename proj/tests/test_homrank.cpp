#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liehr/homrank.hpp"

using namespace liehr;

TEST_CASE("catalog loads and every action has consistent homrank forms") {
    const Catalog& cat = shared_catalog();
    CHECK(!cat.actions.empty());
    for (const auto& a : cat.actions) {
        CAPTURE(a.id);
        CHECK_NOTHROW(homogeneity_rank(a));  // both forms must agree
    }
}

TEST_CASE("SO(n) on R^n has vanishing homogeneity rank iff n is even") {
    const Catalog& cat = shared_catalog();
    for (int n = 2; n <= 24; n++) {
        const ActionRecord* a = cat.find_action("so-vector-" + std::to_string(n));
        REQUIRE(a != nullptr);
        CHECK(homogeneity_rank(*a) == (n % 2 == 0 ? 0 : -1));
    }
}

TEST_CASE("inner-type criterion over classical symmetric spaces, rank <= 12") {
    const Catalog& cat = shared_catalog();
    int tested = 0;
    for (const auto& s : cat.symmetric_spaces) {
        if (s.L.rank() > 12) continue;
        if (s.family != "AI" && s.family != "AII" && s.family != "AIII" &&
            s.family != "BDI" && s.family != "DIII" && s.family != "CI" &&
            s.family != "CII")
            continue;
        CAPTURE(s.label);
        ActionRecord a = action_from_symmetric(s);
        CHECK(homogeneity_rank(a) == symmetric_homrank(s));
        CHECK((homogeneity_rank(a) == 0) == (s.G.rank() == s.L.rank()));
        CHECK((homogeneity_rank(a) == 0) == inner_type(s));
        tested++;
    }
    CHECK(tested > 50);
}

TEST_CASE("exceptional symmetric spaces also satisfy the criterion") {
    const Catalog& cat = shared_catalog();
    for (const auto& s : cat.symmetric_spaces) {
        if (s.family.size() < 1 || (s.family[0] != 'E' && s.family[0] != 'F' &&
                                    s.family[0] != 'G'))
            continue;
        CAPTURE(s.label);
        ActionRecord a = action_from_symmetric(s);
        CHECK(homogeneity_rank(a) == symmetric_homrank(s));
    }
}

TEST_CASE("monotonicity over cataloged subgroup pairs") {
    const Catalog& cat = shared_catalog();
    CHECK(!cat.subgroup_pairs.empty());
    for (const auto& [sub_id, super_id] : cat.subgroup_pairs) {
        CAPTURE(sub_id);
        CAPTURE(super_id);
        const ActionRecord& sub = cat.action(sub_id);
        const ActionRecord& super = cat.action(super_id);
        CHECK(sub.real_dim == super.real_dim);
        CHECK(monotonicity_check(sub, super));
        CHECK(homogeneity_rank(sub) <= homogeneity_rank(super));
    }
}

TEST_CASE("orbit-equivalent pairs have equal homogeneity rank") {
    const Catalog& cat = shared_catalog();
    CHECK(!cat.orbit_equivalent_pairs.empty());
    for (const auto& [a_id, b_id] : cat.orbit_equivalent_pairs) {
        CAPTURE(a_id);
        CAPTURE(b_id);
        const ActionRecord& a = cat.action(a_id);
        const ActionRecord& b = cat.action(b_id);
        CHECK(a.real_dim == b.real_dim);
        CHECK(homogeneity_rank(a) == homogeneity_rank(b));
    }
}

TEST_CASE("principal isotropy rules") {
    auto so_t = principal_isotropy("so_tensor", {3, 8});
    REQUIRE(so_t.has_value());
    CHECK(so_t->dim == 10);  // SO(5)
    CHECK(so_t->rank == 2);

    auto sosp = principal_isotropy("sosp", {11, 1, 2});
    REQUIRE(sosp.has_value());
    CHECK(sosp->dim == 3);  // case (i): SO(11 - 8) = SO(3)

    auto none = principal_isotropy("so_tensor", {9, 3});  // needs p <= q
    CHECK(!none.has_value());
}

TEST_CASE("group constructors") {
    CHECK(so_group(8).dim() == 28);
    CHECK(so_group(3).rank() == 1);
    CHECK(so_group(2).rank() == 1);
    CHECK(so_group(2).dim() == 1);
    CHECK(sp_group(3).dim() == 21);
    CHECK(su_group(6).dim() == 35);
    CHECK(so_group(4).simple_factors.size() == 2);
}

TEST_CASE("table 3.6 rows are cataloged with homrank 0") {
    const Catalog& cat = shared_catalog();
    for (int row = 1; row <= 10; row++) {
        const ActionRecord& a = cat.action("table36-" + std::to_string(row));
        CAPTURE(row);
        CHECK(homogeneity_rank(a) == 0);
        CHECK(a.princ.rank == a.group.rank() - a.cohom);
    }
}
