#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "freudenthal_oracle.hpp"
#include "liehr/lie_core.hpp"

using namespace liehr;

namespace {

std::vector<SimpleType> types_up_to_rank(int max_rank) {
    std::vector<SimpleType> out;
    for (int n = 1; n <= max_rank; n++) out.emplace_back(Family::A, n);
    for (int n = 2; n <= max_rank; n++) out.emplace_back(Family::B, n);
    for (int n = 2; n <= max_rank; n++) out.emplace_back(Family::C, n);
    for (int n = 4; n <= max_rank; n++) out.emplace_back(Family::D, n);
    if (max_rank >= 2) out.emplace_back(Family::G2, 2);
    if (max_rank >= 4) out.emplace_back(Family::F4, 4);
    if (max_rank >= 6) out.emplace_back(Family::E6, 6);
    if (max_rank >= 7) out.emplace_back(Family::E7, 7);
    if (max_rank >= 8) out.emplace_back(Family::E8, 8);
    return out;
}

void each_weight_box(int rank, int max_coord,
                     const std::function<void(const HighestWeight&)>& f) {
    HighestWeight w;
    w.coords.assign(rank, 0);
    while (true) {
        if (!w.is_zero()) f(w);
        int i = 0;
        while (i < rank && w.coords[i] == max_coord) w.coords[i++] = 0;
        if (i == rank) break;
        w.coords[i]++;
    }
}

}  // namespace

TEST_CASE("positive root count matches (dim - rank) / 2") {
    for (SimpleType t : types_up_to_rank(8)) {
        CAPTURE(t.name());
        CHECK(static_cast<int>(positive_roots(t).size()) ==
              (simple_dim(t) - t.rank) / 2);
    }
}

TEST_CASE("low-rank aliases agree with their standard form") {
    HighestWeight w{{2}};
    CHECK(weyl_dim(SimpleType(Family::B, 1), w) ==
          weyl_dim(SimpleType(Family::A, 1), w));
    CHECK(weyl_dim(SimpleType(Family::C, 1), w) ==
          weyl_dim(SimpleType(Family::A, 1), w));
    // D3 node 1 is the branch point, i.e. the middle node of A3
    HighestWeight v{{1, 0, 1}};
    CHECK(weyl_dim(SimpleType(Family::D, 3), v) ==
          weyl_dim(SimpleType(Family::A, 3), HighestWeight{{0, 1, 1}}));
    CHECK(weyl_dim(SimpleType(Family::D, 3), HighestWeight{{0, 1, 0}}) == 4);
}

TEST_CASE("known dimensions") {
    CHECK(weyl_dim(SimpleType(Family::B, 3), HighestWeight{{0, 0, 1}}) == 8);
    CHECK(weyl_dim(SimpleType(Family::E7, 7), HighestWeight{{0, 0, 0, 0, 0, 0, 1}}) ==
          56);
    CHECK(weyl_dim(SimpleType(Family::D, 8), HighestWeight{{0, 0, 0, 0, 0, 0, 0, 1}}) ==
          128);
    CHECK(weyl_dim(SimpleType(Family::A, 7), HighestWeight{{0, 0, 0, 1, 0, 0, 0}}) ==
          70);
    CHECK(weyl_dim(SimpleType(Family::G2, 2), HighestWeight{{1, 0}}) == 7);
    CHECK(weyl_dim(SimpleType(Family::F4, 4), HighestWeight{{0, 0, 0, 1}}) == 26);
    CHECK(weyl_dim(SimpleType(Family::E8, 8), highest_root_weight(SimpleType(Family::E8, 8))) ==
          248);
}

TEST_CASE("Weyl dimension agrees with the Freudenthal oracle, rank <= 3") {
    for (SimpleType t : types_up_to_rank(3)) {
        each_weight_box(t.rank, 2, [&](const HighestWeight& w) {
            CAPTURE(t.name());
            CAPTURE(w.coords);
            CHECK(weyl_dim(t, w) == Int(oracle::freudenthal_dim(t, w)));
        });
    }
}

TEST_CASE("Freudenthal oracle spot checks at rank 4") {
    for (SimpleType t : {SimpleType(Family::A, 4), SimpleType(Family::B, 4),
                         SimpleType(Family::C, 4), SimpleType(Family::D, 4),
                         SimpleType(Family::F4, 4)}) {
        for (const auto& coords : std::vector<std::vector<int>>{
                 {1, 0, 0, 0}, {0, 1, 0, 1}, {2, 0, 0, 1}, {1, 1, 1, 1}}) {
            HighestWeight w{coords};
            CAPTURE(t.name());
            CAPTURE(coords);
            CHECK(weyl_dim(t, w) == Int(oracle::freudenthal_dim(t, w)));
        }
    }
}

TEST_CASE("self-duality and indicator basics") {
    SimpleType a5(Family::A, 5);
    CHECK(!self_dual(a5, HighestWeight{{1, 0, 0, 0, 0}}));
    CHECK(self_dual(a5, HighestWeight{{0, 0, 1, 0, 0}}));
    CHECK(fs_indicator(a5, HighestWeight{{1, 0, 0, 0, 0}}) == 0);
    CHECK(fs_indicator(SimpleType(Family::B, 3), HighestWeight{{0, 0, 1}}) == 1);
    CHECK(fs_indicator(SimpleType(Family::A, 1), HighestWeight{{1}}) == -1);
    CHECK(admits_quaternionic(SimpleType(Family::C, 3)));
    CHECK(!admits_quaternionic(SimpleType(Family::G2, 2)));
}

TEST_CASE("group spec arithmetic") {
    GroupSpec g;
    g.simple_factors = {SimpleType(Family::A, 1), SimpleType(Family::B, 5)};
    CHECK(g.rank() == 6);
    CHECK(g.dim() == 3 + 55);
    GroupSpec h;
    h.simple_factors = {SimpleType(Family::B, 5), SimpleType(Family::A, 1)};
    CHECK(g.canonical_name() == h.canonical_name());
}
