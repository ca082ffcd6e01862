#include "crossedcoh/finite_group.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace ccoh;

TEST_CASE("trivial group from a 1x1 table") {
    FiniteGroup g = make_group({{0}});
    CHECK(g.order == 1);
    CHECK(g.identity == 0);
}

TEST_CASE("quaternion table agrees with symbolic unit multiplication") {
    FiniteGroup q8 = quaternion_group();
    CHECK(q8.table == oracle::quaternion_table());
    CHECK(q8.element_order(1) == 2);   // -1
    CHECK(q8.element_order(2) == 4);   // i
    CHECK(q8.center() == std::vector<Elt>{0, 1});
}

TEST_CASE("non-associative and non-group tables are rejected with witnesses") {
    // a Latin square that is not associative (order-5 quasigroup)
    std::vector<std::vector<Elt>> t{
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    CHECK_THROWS_AS(make_group(t), not_a_group);
    try {
        make_group(t);
    } catch (const not_a_group& e) {
        CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
    CHECK_THROWS_AS(make_group({{0, 1}, {1, 1}}), not_a_group);  // not a Latin square
    CHECK_THROWS_AS(make_group({{0, 1}, {1, 2}}), not_a_group);  // entry out of range
}

TEST_CASE("gamma group validation") {
    FiniteGroup gamma = cyclic_group(2);
    FiniteGroup q8 = quaternion_group();
    CHECK_NOTHROW(trivial_gamma_group(gamma, q8));

    // sigma(b) = 5b and tau(b) = -b on Z/8
    FiniteGroup v4 = klein_four();
    FiniteGroup z8 = cyclic_group(8);
    std::vector<std::vector<Elt>> action(4, std::vector<Elt>(8));
    for (Elt b = 0; b < 8; ++b) {
        action[0][b] = b;
        action[1][b] = 5 * b % 8;        // sigma
        action[2][b] = (8 - b) % 8;      // tau
        action[3][b] = (8 - 5 * b % 8) % 8;
    }
    GammaGroup gg = make_gamma_group(v4, z8, action);
    // the action laws hold exhaustively by construction; spot-check values
    CHECK(gg.act(1, 1) == 5);
    CHECK(gg.act(2, 3) == 5);

    // a permutation that is not an automorphism
    std::vector<std::vector<Elt>> bad(2, std::vector<Elt>(8));
    for (Elt b = 0; b < 8; ++b) {
        bad[0][b] = b;
        bad[1][b] = (b + 1) % 8;  // translation, not a homomorphism
    }
    CHECK_THROWS_AS(make_gamma_group(cyclic_group(2), cyclic_group(8), bad), not_an_action);
}

TEST_CASE("gamma-action laws hold exhaustively on constructed gamma-groups") {
    FiniteGroup v4 = klein_four();
    FiniteGroup z8 = cyclic_group(8);
    std::vector<std::vector<Elt>> action(4, std::vector<Elt>(8));
    for (Elt b = 0; b < 8; ++b) {
        action[0][b] = b;
        action[1][b] = 5 * b % 8;
        action[2][b] = (8 - b) % 8;
        action[3][b] = (8 - 5 * b % 8) % 8;
    }
    GammaGroup gg = make_gamma_group(v4, z8, action);
    for (Elt s = 0; s < 4; ++s)
        for (Elt t = 0; t < 4; ++t)
            for (Elt x = 0; x < 8; ++x) {
                CHECK(gg.act(gg.gamma.mul(s, t), x) == gg.act(s, gg.act(t, x)));
                for (Elt y = 0; y < 8; ++y)
                    CHECK(gg.act(s, gg.group.mul(x, y)) ==
                          gg.group.mul(gg.act(s, x), gg.act(s, y)));
            }
}

TEST_CASE("automorphism and outer data of the Klein four group") {
    FiniteGroup v4 = klein_four();
    OutData out = compute_out(v4);
    CHECK(out.automorphisms.size() == 6);
    CHECK(out.inner.size() == 1);
    CHECK(out.out_classes.size() == 6);
    CHECK(out.automorphisms.size() == oracle::count_automorphisms_by_permutations(v4));
}

TEST_CASE("automorphisms of Z/8 are the units") {
    FiniteGroup z8 = cyclic_group(8);
    OutData out = compute_out(z8);
    CHECK(out.automorphisms.size() == 4);
    std::set<Elt> images_of_generator;
    for (const auto& f : out.automorphisms) images_of_generator.insert(f[1]);
    CHECK(images_of_generator == std::set<Elt>{1, 3, 5, 7});
}

TEST_CASE("outer data of the trivial and quaternion groups") {
    CHECK(compute_out(trivial_group()).automorphisms.size() == 1);
    FiniteGroup q8 = quaternion_group();
    OutData out = compute_out(q8);
    CHECK(out.automorphisms.size() == 24);
    // |Aut| = |Inn| * |Out| and Inn is the central quotient
    CHECK(out.automorphisms.size() == out.inner.size() * out.out_classes.size());
    CHECK(out.inner.size() ==
          static_cast<std::size_t>(q8.order) / q8.center().size());
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(compute_out(direct_product(cyclic_group(8), cyclic_group(16)), 64),
                    bound_exceeded);
}

TEST_CASE("quotient and subgroup builders") {
    FiniteGroup q8 = quaternion_group();
    auto [v4, proj] = quotient_group(q8, {0, 1});
    CHECK(v4.order == 4);
    CHECK(v4.is_abelian());
    CHECK(proj.kernel_elements() == std::vector<Elt>{0, 1});
    auto [z2, qproj] = quotient_group(q8, {0, 1, 2, 3});  // by <i>
    CHECK(z2.order == 2);
    auto [z4, elems] = subgroup_as_group(q8, {0, 1, 2, 3});
    CHECK(z4.order == 4);
    CHECK(is_normal(q8, {0, 1}));
    CHECK_THROWS_AS(subgroup_as_group(q8, {0, 2, 4}), not_a_group);  // not closed
}
