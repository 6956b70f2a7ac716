#include "cherloc/multipartition.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace cherloc;

TEST(Enumerate, SingleEmptyMultipartition) {
    auto all = enumerate_multipartitions(1, 0);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0].size(), 0);
}

TEST(Enumerate, TwoComponentsSizeTwo) {
    auto all = enumerate_multipartitions(2, 2);
    std::vector<Multipartition> expected = {
        Multipartition({{2}, {}}), Multipartition({{1, 1}, {}}), Multipartition({{1}, {1}}),
        Multipartition({{}, {2}}), Multipartition({{}, {1, 1}}),
    };
    EXPECT_EQ(all, expected);
    EXPECT_EQ(all.size(), oracle::multipartition_count(2, 2));
}

TEST(Enumerate, PartitionsOfFive) {
    EXPECT_EQ(enumerate_multipartitions(1, 5).size(), 7u);
    EXPECT_EQ(oracle::multipartition_count(1, 5), 7u);
}

TEST(Enumerate, CountsMatchGeneratingFunction) {
    for (int ell = 1; ell <= 4; ++ell)
        for (int n = 0; n <= 8; ++n)
            EXPECT_EQ(enumerate_multipartitions(ell, n).size(), oracle::multipartition_count(ell, n))
                << "ell=" << ell << " n=" << n;
}

TEST(Enumerate, DuplicateFreeAndCanonicallySorted) {
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = 0; n <= 6; ++n) {
            auto all = enumerate_multipartitions(ell, n);
            // component by component: size descending, then the partition descending
            auto key = [](const Multipartition& m) {
                std::vector<std::pair<int, Partition>> k;
                for (const auto& part : m.parts()) k.emplace_back(std::accumulate(part.begin(), part.end(), 0), part);
                return k;
            };
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                                       [&](const auto& a, const auto& b) { return key(a) > key(b); }));
            EXPECT_EQ(std::set<Multipartition>(all.begin(), all.end()).size(), all.size());
            for (const auto& m : all) {
                EXPECT_EQ(m.size(), n);
                EXPECT_EQ(m.ell(), ell);
            }
        }
}

TEST(Enumerate, RejectsBadArguments) {
    EXPECT_THROW(enumerate_multipartitions(0, 1), std::invalid_argument);
    EXPECT_THROW(enumerate_multipartitions(1, -1), std::invalid_argument);
}

TEST(Multipartition, ValidatesComponents) {
    EXPECT_THROW(Multipartition({{1, 2}}), std::invalid_argument);
    EXPECT_THROW(Multipartition(std::vector<Partition>{Partition{0}}), std::invalid_argument);
    EXPECT_THROW(Multipartition(std::vector<Partition>{}), std::invalid_argument);
    EXPECT_EQ(to_label(Multipartition({{2, 1}, {}})), "(2,1|-)");
}

TEST(Boxes, Examples) {
    EXPECT_EQ(boxes(Multipartition({{2}, {}})), (std::vector<Box>{{1, 1, 0}, {1, 2, 0}}));
    EXPECT_EQ(boxes(Multipartition({{1, 1}})), (std::vector<Box>{{1, 1, 0}, {2, 1, 0}}));
    EXPECT_TRUE(boxes(Multipartition({{}, {}, {}})).empty());
}

TEST(Boxes, RelevantBoxesExamples) {
    EXPECT_EQ(relevant_boxes(1, 1), (std::vector<Box>{{1, 1, 0}}));
    EXPECT_EQ(relevant_boxes(2, 1), (std::vector<Box>{{1, 1, 0}, {1, 1, 1}}));
    EXPECT_EQ(relevant_boxes(1, 2).size(), 4u);
}

TEST(Boxes, RelevantBoxesCoverEveryLabel) {
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = 1; n <= 5; ++n) {
            auto rel = relevant_boxes(ell, n);
            std::set<Box> all(rel.begin(), rel.end());
            for (std::size_t k = 0; k < rel.size(); ++k) EXPECT_EQ(relevant_box_index(rel[k], n), k);
            for (const auto& m : enumerate_multipartitions(ell, n)) {
                auto bs = boxes(m);
                EXPECT_EQ(bs.size(), static_cast<std::size_t>(n));
                EXPECT_TRUE(std::is_sorted(bs.begin(), bs.end()));
                for (const auto& b : bs) EXPECT_TRUE(all.count(b)) << b;
            }
        }
}
