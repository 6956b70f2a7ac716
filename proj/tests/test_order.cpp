#include "cherloc/order.hpp"
#include "samples.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cherloc;
using samples::q;

namespace {

Multipartition mp(std::vector<Partition> parts) { return Multipartition(std::move(parts)); }

OrderInstance one_component(const Rational& kappa, int n) {
    return OrderInstance(Params::rational(kappa, {q(0)}), n);
}

}  // namespace

TEST(LeqP, Examples) {
    auto pos = one_component(q(1), 2);
    EXPECT_TRUE(leq_p(pos, mp({{2}}), mp({{2}})));
    EXPECT_TRUE(leq_p(pos, mp({{1, 1}}), mp({{2}})));
    EXPECT_FALSE(leq_p(pos, mp({{2}}), mp({{1, 1}})));
    auto neg = one_component(q(-1), 2);
    EXPECT_TRUE(leq_p(neg, mp({{2}}), mp({{1, 1}})));
    EXPECT_FALSE(leq_p(neg, mp({{1, 1}}), mp({{2}})));
}

TEST(LeqP, OracleExamples) {
    auto pos = one_component(q(1), 2);
    EXPECT_TRUE(leq_p_oracle(pos, mp({{1, 1}}), mp({{2}})));
    EXPECT_FALSE(leq_p_oracle(pos, mp({{2}}), mp({{1, 1}})));
    auto neg = one_component(q(-1), 2);
    EXPECT_TRUE(leq_p_oracle(neg, mp({{2}}), mp({{1, 1}})));
    auto empty = one_component(q(1), 0);
    EXPECT_TRUE(leq_p_oracle(empty, mp({Partition{}}), mp({Partition{}})));
    EXPECT_TRUE(leq_p(empty, mp({Partition{}}), mp({Partition{}})));
}

TEST(LeqP, AgreesWithOracleOnRandomPairs) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        Rational k = q(num(rng), den(rng));
        if (k == 0) k = q(1);
        OrderInstance inst(Params::rational(k, {q(num(rng), den(rng)), q(num(rng), den(rng))}), 3);
        const auto& labels = inst.labels();
        std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
        for (int k2 = 0; k2 < 30; ++k2) {
            const auto& a = labels[pick(rng)];
            const auto& b = labels[pick(rng)];
            EXPECT_EQ(leq_p(inst, a, b), leq_p_oracle(inst, a, b));
        }
    }
}

TEST(LeqP, RejectsMismatchedSizes) {
    auto inst = one_component(q(1), 2);
    EXPECT_THROW(leq_p(inst, mp({{1}}), mp({{2}})), std::invalid_argument);
    EXPECT_THROW(leq_p_oracle(one_component(q(1), 7), mp({{7}}), mp({{7}})), std::invalid_argument);
}

TEST(RelationP, Examples) {
    auto r1 = relation_p(one_component(q(1), 1));
    ASSERT_EQ(r1.size(), 1u);
    EXPECT_TRUE(r1.holds(0, 0));

    auto r2 = relation_p(one_component(q(1), 2));
    ASSERT_EQ(r2.size(), 2u);
    EXPECT_EQ(r2.edge_count(), 3u);
    auto col = *r2.index_of(mp({{1, 1}}));
    auto row = *r2.index_of(mp({{2}}));
    EXPECT_TRUE(r2.holds(col, row));
    EXPECT_FALSE(r2.holds(row, col));
}

TEST(RelationP, IsPartialOrderOnSuite) {
    for (int ell = 1; ell <= 3; ++ell)
        for (const auto& p : samples::parameter_suite(ell)) {
            auto r = relation_p(OrderInstance(p, 3));
            EXPECT_FALSE(check_partial_order(r).has_value());
            EXPECT_EQ(reflexive_closure(transitive_closure(r)), r);
        }
}

TEST(RelationP, UnchangedUnderCommonShift) {
    for (const auto& t : {q(2, 5), q(-3), q(11, 7)}) {
        std::vector<Rational> h = {q(1, 3), q(0), q(-1, 3)};
        std::vector<Rational> shifted;
        for (const auto& v : h) shifted.push_back(v + t);
        EXPECT_EQ(relation_p(OrderInstance(Params::rational(q(1), h), 3)),
                  relation_p(OrderInstance(Params::rational(q(1), shifted), 3)));
    }
}

TEST(RelationP, WorkerCountDoesNotMatter) {
    OrderInstance inst(Params::rational(q(1, 2), {q(1, 4), q(-1, 4)}), 4);
    auto serial = relation_p(inst, 1);
    EXPECT_EQ(serial, relation_p(inst, 3));
    EXPECT_EQ(serial, relation_p(inst, 8));
}

TEST(RelationP, DotHasOneNodePerLabel) {
    auto dot = order_to_dot(relation_p(one_component(q(1), 4)));
    std::size_t nodes = 0;
    for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
    EXPECT_EQ(nodes, 5u);
    EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
}
