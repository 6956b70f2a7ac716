#include "cherloc/relation.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

using namespace cherloc;
using StrRel = Relation<std::string>;

namespace {

StrRel make(std::vector<std::string> labels, std::initializer_list<std::pair<int, int>> edges, bool reflexive = true) {
    StrRel r(std::move(labels));
    if (reflexive)
        for (std::size_t k = 0; k < r.size(); ++k) r.set(k, k);
    for (auto [a, b] : edges) r.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    return r;
}

std::string ident(const std::string& s) { return s; }

bool union_has_linear_extension(const StrRel& a, const StrRel& b) {
    std::vector<std::vector<bool>> edges(a.size(), std::vector<bool>(a.size(), false));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j && (a.holds(i, j) || b.holds(i, j))) edges[i][j] = true;
    return oracle::has_linear_extension(edges);
}

}  // namespace

TEST(Relation, DuplicateLabelsRejected) {
    EXPECT_THROW(StrRel({"a", "a"}), std::invalid_argument);
}

TEST(Closure, ChainGainsShortcut) {
    auto c = transitive_closure(make({"a", "b", "c"}, {{0, 1}, {1, 2}}, false));
    EXPECT_TRUE(c.holds(0, 2));
    EXPECT_FALSE(c.holds(0, 0));
    EXPECT_EQ(c.edge_count(), 3u);
    EXPECT_EQ(transitive_closure(c), c);
}

TEST(PartialOrder, Examples) {
    EXPECT_TRUE(is_partial_order(StrRel::identity({"a", "b", "c"})));
    auto v = check_partial_order(make({"a", "b"}, {{0, 1}, {1, 0}}));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->kind, PosetViolation::Kind::Antisymmetry);
    EXPECT_EQ(v->witness, (std::vector<std::size_t>{0, 1}));
    auto nr = check_partial_order(make({"a"}, {}, false));
    ASSERT_TRUE(nr.has_value());
    EXPECT_EQ(nr->kind, PosetViolation::Kind::Reflexivity);
    auto nt = check_partial_order(make({"a", "b", "c"}, {{0, 1}, {1, 2}}));
    ASSERT_TRUE(nt.has_value());
    EXPECT_EQ(nt->kind, PosetViolation::Kind::Transitivity);
    EXPECT_EQ(nt->witness, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Refines, SubsetOfClosure) {
    auto r = make({"a", "b", "c"}, {{0, 1}, {1, 2}});
    EXPECT_TRUE(refines(r, transitive_closure(r)));
    EXPECT_FALSE(refines(transitive_closure(r), r));
    EXPECT_THROW(refines(r, make({"a", "b", "d"}, {})), std::invalid_argument);
}

TEST(CommonRefinement, Examples) {
    auto chain = reflexive_closure(transitive_closure(make({"a", "b", "c"}, {{0, 1}, {1, 2}})));
    auto same = common_refinement(chain, chain);
    ASSERT_TRUE(same.order.has_value());
    EXPECT_EQ(*same.order, chain);

    auto ab = make({"a", "b"}, {{0, 1}});
    auto ba = make({"a", "b"}, {{1, 0}});
    auto clash = common_refinement(ab, ba);
    EXPECT_FALSE(clash.order.has_value());
    EXPECT_EQ(clash.cycle, (std::vector<std::size_t>{0, 1}));

    auto left = make({"a", "b", "c", "d"}, {{0, 1}});
    auto right = make({"a", "b", "c", "d"}, {{1, 2}, {3, 2}});
    auto joined = common_refinement(left, right);
    ASSERT_TRUE(joined.order.has_value());
    EXPECT_TRUE(joined.order->holds(0, 2));
    EXPECT_TRUE(is_partial_order(*joined.order));
}

TEST(Hasse, ChainAndAntichain) {
    auto chain = reflexive_closure(transitive_closure(make({"a", "b", "c"}, {{0, 1}, {1, 2}})));
    EXPECT_EQ(hasse(chain).edge_count(), 2u);
    EXPECT_EQ(hasse(StrRel::identity({"a", "b", "c"})).edge_count(), 0u);
    EXPECT_THROW(hasse(make({"a", "b"}, {{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST(Hasse, ClosureOfCoverRecoversOrder) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 9;
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < n; ++k) labels.push_back("v" + std::to_string(k));
        StrRel r(labels);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) r.set(a, b);
        auto order = reflexive_closure(transitive_closure(r));
        ASSERT_TRUE(is_partial_order(order));
        EXPECT_EQ(reflexive_closure(transitive_closure(hasse(order))), order);
    }
}

TEST(Dot, Format) {
    auto chain = reflexive_closure(transitive_closure(make({"a", "b"}, {{0, 1}})));
    EXPECT_EQ(to_dot(chain, ident, "g"),
              "digraph g {\n  rankdir=BT;\n  n0 [label=\"a\"];\n  n1 [label=\"b\"];\n  n0 -> n1;\n}\n");
}

TEST(CommonRefinement, AgreesWithLinearExtensionOracle) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 8;
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < n; ++k) labels.push_back(std::to_string(k));
        StrRel a(labels), b(labels);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && rng() % 6 == 0) a.set(i, j);
                if (i != j && rng() % 6 == 0) b.set(i, j);
            }
        auto res = common_refinement(a, b);
        EXPECT_EQ(res.order.has_value(), union_has_linear_extension(a, b));
        if (res.order) {
            EXPECT_TRUE(is_partial_order(*res.order));
            EXPECT_TRUE(refines(a, *res.order));
            EXPECT_TRUE(refines(b, *res.order));
        } else {
            ASSERT_GE(res.cycle.size(), 2u);
            auto u = relation_union(a, b);
            for (std::size_t k = 0; k < res.cycle.size(); ++k)
                EXPECT_TRUE(u.holds(res.cycle[k], res.cycle[(k + 1) % res.cycle.size()]));
        }
    }
}
