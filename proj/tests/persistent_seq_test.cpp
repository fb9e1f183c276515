#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "gpdrift/persistent_seq.hpp"

using gpdrift::PersistentSeq;

TEST(PersistentSeq, VersionsAreIndependent) {
    PersistentSeq<int> empty;
    auto a = empty.push_back(1).push_back(2);
    auto b = a.push_back(3);
    auto c = a.replace_back(5);
    EXPECT_EQ(a.to_vector(), (std::vector<int>{1, 2}));
    EXPECT_EQ(b.to_vector(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(c.to_vector(), (std::vector<int>{1, 5}));
    EXPECT_TRUE(empty.empty());
    EXPECT_EQ(b.front(), 1);
    EXPECT_EQ(b.back(), 3);
    EXPECT_TRUE(b.pop_back().shares_storage_with(a));
}

TEST(PersistentSeq, PrefixRelation) {
    auto a = PersistentSeq<int>().push_back(1).push_back(2);
    auto b = a.push_back(3).push_back(4);
    auto rebuilt = PersistentSeq<int>().push_back(1).push_back(2).push_back(3);
    auto other = PersistentSeq<int>().push_back(1).push_back(7).push_back(3);
    EXPECT_TRUE(a.is_prefix_of(b));
    EXPECT_TRUE(a.is_prefix_of(a));
    EXPECT_TRUE(a.is_prefix_of(rebuilt));
    EXPECT_TRUE(PersistentSeq<int>().is_prefix_of(b));
    EXPECT_FALSE(b.is_prefix_of(a));
    EXPECT_FALSE(a.is_prefix_of(other));
    EXPECT_TRUE(rebuilt == a.push_back(3));
}

// Random edit scripts against std::vector as a model.
TEST(PersistentSeq, MatchesVectorModel) {
    std::mt19937_64 rng(1);
    std::vector<PersistentSeq<int>> versions{PersistentSeq<int>()};
    std::vector<std::vector<int>> models{{}};
    for (int step = 0; step < 20000; ++step) {
        std::size_t pick = std::uniform_int_distribution<std::size_t>(0, versions.size() - 1)(rng);
        auto seq = versions[pick];
        auto model = models[pick];
        int op = std::uniform_int_distribution<int>(0, 3)(rng);
        int value = std::uniform_int_distribution<int>(0, 3)(rng);
        if (op <= 1 || model.empty()) {
            seq = seq.push_back(value);
            model.push_back(value);
        } else if (op == 2) {
            seq = seq.pop_back();
            model.pop_back();
        } else {
            seq = seq.replace_back(value);
            model.back() = value;
        }
        ASSERT_EQ(seq.size(), model.size());
        if (!model.empty()) {
            std::size_t i = std::uniform_int_distribution<std::size_t>(0, model.size() - 1)(rng);
            ASSERT_EQ(seq.at(i), model[i]);
        }
        // Prefix test against a random other version.
        std::size_t other = std::uniform_int_distribution<std::size_t>(0, versions.size() - 1)(rng);
        const auto& om = models[other];
        bool expected = om.size() <= model.size() && std::equal(om.begin(), om.end(), model.begin());
        ASSERT_EQ(versions[other].is_prefix_of(seq), expected);
        versions.push_back(seq);
        models.push_back(model);
        if (versions.size() > 400) {
            versions.erase(versions.begin() + 1);
            models.erase(models.begin() + 1);
        }
    }
}

TEST(PersistentSeq, LongChainRandomAccessAndTeardown) {
    PersistentSeq<int> s;
    for (int i = 0; i < 1'000'000; ++i) s = s.push_back(i);
    EXPECT_EQ(s.size(), 1'000'000u);
    EXPECT_EQ(s.at(0), 0);
    EXPECT_EQ(s.at(123456), 123456);
    EXPECT_EQ(s.front(), 0);
    auto prefix = s;
    for (int i = 0; i < 10; ++i) prefix = prefix.pop_back();
    EXPECT_TRUE(prefix.is_prefix_of(s));
    s = PersistentSeq<int>();  // must not overflow the stack
    EXPECT_EQ(prefix.size(), 999'990u);
}
