#include "curvezeta/errors.hpp"
#include "curvezeta/valuesemigroup.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace curvezeta;
using namespace curvezeta::testing;

TEST_CASE("from_numerical_generators") {
    SUBCASE("<2,3>") {
        auto s = SemigroupData::from_numerical_generators({2, 3});
        CHECK(s.conductor() == MultiIndex{2});
        CHECK(s.delta() == 1);
        CHECK_FALSE(s.contains(MultiIndex{1}));
        CHECK(s.is_gorenstein());
    }
    SUBCASE("<3,4,5>") {
        auto s = SemigroupData::from_numerical_generators({3, 4, 5});
        CHECK(s.conductor() == MultiIndex{3});
        CHECK(s.delta() == 2);
        CHECK_FALSE(s.is_gorenstein()); // 3 != 4
    }
    SUBCASE("<1> is the regular point") {
        auto s = SemigroupData::from_numerical_generators({1});
        CHECK(s.conductor() == MultiIndex{0});
        CHECK(s.delta() == 0);
        CHECK(s.contains(MultiIndex{5}));
    }
    SUBCASE("<2,5> and <3,4>") {
        auto a = SemigroupData::from_numerical_generators({2, 5});
        CHECK(a.conductor() == MultiIndex{4});
        CHECK(a.delta() == 2);
        CHECK(a.is_gorenstein());
        auto b = SemigroupData::from_numerical_generators({3, 4});
        CHECK(b.conductor() == MultiIndex{6});
        CHECK(b.delta() == 3);
        CHECK(b.is_gorenstein());
    }
    SUBCASE("gcd != 1 is rejected") {
        CHECK_THROWS_AS(SemigroupData::from_numerical_generators({4, 6}), InputError);
    }
}

TEST_CASE("from_box validation") {
    SUBCASE("the node box validates") {
        auto s = node_semigroup();
        CHECK(s.delta() == 1);
        CHECK(s.is_gorenstein());
    }
    SUBCASE("the tacnode box validates") {
        auto s = tacnode_semigroup();
        CHECK(s.delta() == 2);
        CHECK(s.is_gorenstein());
    }
    SUBCASE("0 must be a member") {
        CHECK_THROWS_WITH_AS(
            SemigroupData::from_box(MultiIndex{1, 1},
                                    {MultiIndex{1, 1}, MultiIndex{1, 2},
                                     MultiIndex{2, 1}, MultiIndex{2, 2}}),
            doctest::Contains("0 not in S"), InputError);
    }
    SUBCASE("the conductor region must be full") {
        CHECK_THROWS_WITH_AS(
            SemigroupData::from_box(MultiIndex{1, 1},
                                    {MultiIndex{0, 0}, MultiIndex{1, 1},
                                     MultiIndex{1, 2}, MultiIndex{2, 1}}),
            doctest::Contains("conductor property"), InputError);
    }
    SUBCASE("the conductor must be minimal") {
        std::vector<MultiIndex> all;
        for_each_in_box(MultiIndex{0, 0}, MultiIndex{2, 2},
                        [&](const MultiIndex& n) { all.push_back(n); });
        CHECK_THROWS_WITH_AS(SemigroupData::from_box(MultiIndex{1, 1}, all),
                             doctest::Contains("not minimal"), InputError);
    }
    SUBCASE("min-closure is enforced") {
        // (1,3) and (3,1) without their minimum (1,1).
        std::vector<MultiIndex> elements = {MultiIndex{0, 0}, MultiIndex{1, 3},
                                            MultiIndex{3, 1}, MultiIndex{2, 2},
                                            MultiIndex{2, 3}, MultiIndex{3, 2},
                                            MultiIndex{3, 3}};
        CHECK_THROWS_WITH_AS(SemigroupData::from_box(MultiIndex{2, 2}, elements),
                             doctest::Contains("min-closure"), InputError);
    }
    SUBCASE("elements above the box are rejected") {
        CHECK_THROWS_AS(SemigroupData::from_box(MultiIndex{1, 1}, {MultiIndex{3, 0}}),
                        InputError);
    }
}

TEST_CASE("membership extension rules") {
    auto s = node_semigroup();
    CHECK(s.contains(MultiIndex{5, 7}));       // capped to c
    CHECK(s.contains(MultiIndex{1, 9}));       // mixed: capped where >= c_i
    CHECK_FALSE(s.contains(MultiIndex{0, 9})); // (0, >=1) never a value
    CHECK_FALSE(s.contains(MultiIndex{-1, 0}));
}

TEST_CASE("step_dim_combinatorial") {
    auto node = node_semigroup();
    SUBCASE("witness searches on the node") {
        // (1,0): direction 1 sees the witness (1,1); direction 2 has none.
        CHECK(node.step_dim(MultiIndex{1, 0}, 0) == 1);
        CHECK(node.step_dim(MultiIndex{1, 0}, 1) == 0);
        CHECK(node.step_dim(MultiIndex{0, 0}, 0) == 1);
        CHECK(node.step_dim(MultiIndex{0, 0}, 1) == 1);
    }
    SUBCASE("tacnode witnesses") {
        auto s = tacnode_semigroup();
        CHECK(s.step_dim(MultiIndex{1, 1}, 1) == 1); // witness (1,1)
        CHECK(s.step_dim(MultiIndex{2, 1}, 1) == 0);
        CHECK(s.step_dim(MultiIndex{1, 0}, 0) == 1); // witness (1,1)
        CHECK(s.step_dim(MultiIndex{1, 0}, 1) == 0);
    }
    SUBCASE("negative coordinates step 0, conductor coordinates step 1") {
        CHECK(node.step_dim(MultiIndex{-1, 0}, 0) == 0);
        CHECK(node.step_dim(MultiIndex{3, -2}, 0) == 1);
    }
}

TEST_CASE("l_value_combinatorial") {
    SUBCASE("l(0) = 0 and the <2,3> values") {
        auto s = SemigroupData::from_numerical_generators({2, 3});
        CHECK(s.l(MultiIndex{0}) == 0);
        CHECK(s.l(MultiIndex{3}) == 2);
    }
    SUBCASE("node l(2,2) = 3") {
        CHECK(node_semigroup().l(MultiIndex{2, 2}) == 3);
    }
    SUBCASE("path independence over the box") {
        for (const auto& s : {node_semigroup(), tacnode_semigroup(),
                              cusp_line_semigroup()}) {
            const int d = s.branch_count();
            for_each_in_box(MultiIndex::zero(d), s.conductor() + 1,
                            [&](const MultiIndex& n) {
                                // Every unit step gives the same l, whichever
                                // coordinate moves last.
                                for (int i = 0; i < d; ++i) {
                                    if (n[i] == 0)
                                        continue;
                                    const MultiIndex prev =
                                        n - MultiIndex::unit(d, i);
                                    CHECK(s.l(n) ==
                                          s.l(prev) + s.step_dim(prev, i));
                                }
                            });
        }
    }
    SUBCASE("extension beyond the table") {
        auto s = SemigroupData::from_numerical_generators({2, 3});
        CHECK(s.l(MultiIndex{10}) == 9);    // 10 - delta
        CHECK(s.l(MultiIndex{-3}) == 0);
    }
}

TEST_CASE("under_conductor_elements") {
    CHECK(SemigroupData::from_numerical_generators({2, 3}).under_conductor_elements() ==
          std::vector<MultiIndex>{MultiIndex{0}});
    CHECK(tacnode_semigroup().under_conductor_elements() ==
          std::vector<MultiIndex>{MultiIndex{0, 0}, MultiIndex{1, 1}});
    CHECK(SemigroupData::from_numerical_generators({1}).under_conductor_elements()
              .empty());
}

TEST_CASE("b_sets") {
    SUBCASE("d = 1 has no proper nonempty J") {
        CHECK(b_sets(SemigroupData::from_numerical_generators({2, 3})).empty());
    }
    SUBCASE("tacnode and node B-sets are empty") {
        for (const auto& s : {tacnode_semigroup(), node_semigroup()})
            for (const auto& bs : b_sets(s))
                CHECK(bs.f_values.empty());
    }
    SUBCASE("cusp plus line has B_{2} = {m_1 = 2}") {
        auto sets = b_sets(cusp_line_semigroup());
        REQUIRE(sets.size() == 2);
        CHECK(sets[0].J == std::vector<int>{0});
        CHECK(sets[0].f_values.empty());
        CHECK(sets[1].J == std::vector<int>{1});
        CHECK(sets[1].f_values == std::vector<MultiIndex>{MultiIndex{2, 2}});
    }
}

TEST_CASE("h_decomposition") {
    SUBCASE("<2,3> up to 4") {
        auto s = SemigroupData::from_numerical_generators({2, 3});
        auto labels = h_decomposition(s, MultiIndex{4});
        CHECK(labels.at(MultiIndex{0}).J.empty());
        for (int k = 2; k <= 4; ++k)
            CHECK(labels.at(MultiIndex{k}).J == std::vector<int>{0});
        CHECK(labels.count(MultiIndex{1}) == 0);
    }
    SUBCASE("tacnode: only the empty and the full strata") {
        auto labels = h_decomposition(tacnode_semigroup(), MultiIndex{3, 3});
        CHECK(labels.at(MultiIndex{0, 0}).J.empty());
        CHECK(labels.at(MultiIndex{1, 1}).J.empty());
        CHECK(labels.at(MultiIndex{2, 2}).J == std::vector<int>{0, 1});
        CHECK(labels.at(MultiIndex{3, 2}).J == std::vector<int>{0, 1});
    }
    SUBCASE("cusp plus line: the mixed stratum appears") {
        auto labels = h_decomposition(cusp_line_semigroup(), MultiIndex{5, 3});
        CHECK(labels.at(MultiIndex{2, 2}).J == std::vector<int>{1});
        CHECK(labels.at(MultiIndex{2, 2}).f == MultiIndex{2, 2});
        CHECK(labels.at(MultiIndex{2, 3}).J == std::vector<int>{1});
        CHECK(labels.at(MultiIndex{2, 3}).f == MultiIndex{2, 2});
        CHECK(labels.at(MultiIndex{3, 1}).J.empty());
        CHECK(labels.at(MultiIndex{4, 2}).J == std::vector<int>{0, 1});
    }
    SUBCASE("labels partition the box membership") {
        auto s = cusp_line_semigroup();
        auto labels = h_decomposition(s, s.conductor() + 1);
        for_each_in_box(MultiIndex{0, 0}, s.conductor() + 1,
                        [&](const MultiIndex& n) {
                            CHECK(s.contains(n) == (labels.count(n) != 0));
                        });
    }
}

TEST_CASE("Gorenstein duality identities hold combinatorially") {
    for (const auto& s : {SemigroupData::from_numerical_generators({2, 3}),
                          SemigroupData::from_numerical_generators({2, 5}),
                          SemigroupData::from_numerical_generators({3, 4}),
                          node_semigroup(), tacnode_semigroup(),
                          cusp_line_semigroup()}) {
        REQUIRE(s.is_gorenstein());
        const int d = s.branch_count();
        const MultiIndex& c = s.conductor();
        for_each_in_box(MultiIndex::constant(d, -1), c + 1, [&](const MultiIndex& n) {
            for (int i = 0; i < d; ++i) {
                const MultiIndex dual = c - n - MultiIndex::unit(d, i);
                CHECK(s.step_dim(n, i) + s.step_dim(dual, i) == 1);
            }
        });
        for_each_in_box(MultiIndex::zero(d), c, [&](const MultiIndex& n) {
            CHECK(s.l(c - n) - s.l(n) == s.delta() - n.norm());
        });
    }
}
