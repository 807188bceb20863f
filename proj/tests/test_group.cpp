#include "ramfilt/arith.hpp"
#include "ramfilt/group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace ramfilt;

namespace {

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
    if (s.empty() || s.front() != 0) return false;
    for (auto a : s)
        for (auto b : s)
            if (!std::binary_search(s.begin(), s.end(), g.mul(a, b))) return false;
    return true;
}

/// Every subgroup by testing all 2^n subsets; only for small n.
std::vector<Subgroup> subgroups_by_subsets(const FiniteGroup& g) {
    std::vector<Subgroup> out;
    const std::size_t n = g.order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {  // must contain 0
        Subgroup s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        if (is_subgroup(g, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
    Subgroup out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TEST(FiniteGroup, RejectsMalformedTables) {
    EXPECT_THROW(FiniteGroup({}), ValidationError);
    EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}), ValidationError);             // not Latin
    EXPECT_THROW(FiniteGroup({{1, 0}, {0, 1}}), ValidationError);             // 0 not identity
    EXPECT_THROW(FiniteGroup({{0, 1}, {1}}), ValidationError);                // ragged
    EXPECT_THROW(FiniteGroup({{0, 2}, {1, 0}}), ValidationError);             // out of range
    // Latin square with identity 0 that is not associative (order 5 loop)
    EXPECT_THROW(FiniteGroup({{0, 1, 2, 3, 4},
                              {1, 0, 3, 4, 2},
                              {2, 4, 0, 1, 3},
                              {3, 2, 4, 0, 1},
                              {4, 3, 1, 2, 0}}),
                 ValidationError);
}

TEST(FiniteGroup, BuiltinsHaveExpectedShape) {
    EXPECT_EQ(builtin_group("klein4").order(), 4u);
    EXPECT_EQ(builtin_group("q8").order(), 8u);
    EXPECT_EQ(builtin_group("d4").order(), 8u);
    EXPECT_EQ(builtin_group("heis3").order(), 27u);
    EXPECT_EQ(builtin_group("c9xc3").order(), 27u);
    EXPECT_EQ(builtin_group("trivial").order(), 1u);
    EXPECT_FALSE(builtin_group("q8").is_commutative());
    EXPECT_FALSE(builtin_group("d4").is_commutative());
    EXPECT_FALSE(builtin_group("heis3").is_commutative());
    EXPECT_TRUE(builtin_group("c4xc2").is_commutative());
    EXPECT_EQ(builtin_group("c8").element_order(1), 8u);
    EXPECT_EQ(builtin_group("q8").element_order(2), 4u);
    EXPECT_THROW(builtin_group("s3"), ValidationError);
    EXPECT_THROW(builtin_group("heis4"), ValidationError);
    EXPECT_THROW(builtin_group("c"), ValidationError);
}

TEST(FiniteGroup, CayleyTextRoundTrip) {
    const auto g = builtin_group("d4");
    std::istringstream in(format_cayley_table(g));
    EXPECT_EQ(parse_cayley_table(in), g);
    std::istringstream truncated("2\n0 1\n1");
    EXPECT_THROW(parse_cayley_table(truncated), ValidationError);
    std::istringstream trailing("1\n0\n0");
    EXPECT_THROW(parse_cayley_table(trailing), ValidationError);
}

TEST(AllSubgroups, Examples) {
    EXPECT_EQ(all_subgroups(builtin_group("klein4")).size(), 5u);
    EXPECT_EQ(all_subgroups(builtin_group("c4")).size(), 3u);
    EXPECT_EQ(all_subgroups(builtin_group("trivial")).size(), 1u);
    EXPECT_EQ(all_subgroups(builtin_group("q8")).size(), 6u);
    EXPECT_EQ(all_subgroups(builtin_group("d4")).size(), 10u);
    EXPECT_EQ(all_subgroups(builtin_group("c3xc3")).size(), 6u);
    EXPECT_EQ(all_subgroups(builtin_group("c2xc2xc2")).size(), 16u);
}

TEST(AllSubgroups, MatchesSubsetEnumerationAndIsClosed) {
    for (const char* name : {"c2", "c4", "c8", "klein4", "c4xc2", "d4", "q8", "c2xc2xc2", "c16", "c4xc4", "c3xc3"}) {
        const auto g = builtin_group(name);
        const auto subs = all_subgroups(g);
        ASSERT_EQ(subs, subgroups_by_subsets(g)) << name;
        for (const auto& a : subs) {
            ASSERT_TRUE(is_subgroup(g, a));
            ASSERT_EQ(g.order() % a.size(), 0u);
            for (const auto& b : subs) ASSERT_TRUE(std::binary_search(subs.begin(), subs.end(), meet(a, b), [](const Subgroup& x, const Subgroup& y) {
                return x.size() != y.size() ? x.size() < y.size() : x < y;
            }));
        }
    }
}

TEST(AllSubgroups, BudgetExceeded) {
    EXPECT_THROW(all_subgroups(cyclic_group(65)), ValidationError);
    EXPECT_NO_THROW(all_subgroups(builtin_group("c2xc2xc2xc2xc2xc2")));
}

TEST(IndexPSubgroups, Examples) {
    EXPECT_EQ(index_p_subgroups(builtin_group("klein4"), 2).size(), 3u);
    const auto c4 = index_p_subgroups(builtin_group("c4"), 2);
    ASSERT_EQ(c4.size(), 1u);
    EXPECT_EQ(c4[0], (Subgroup{0, 2}));
    const auto c3 = index_p_subgroups(builtin_group("c3"), 3);
    ASSERT_EQ(c3.size(), 1u);
    EXPECT_EQ(c3[0], (Subgroup{0}));
    EXPECT_TRUE(index_p_subgroups(builtin_group("trivial"), 2).empty());
    EXPECT_THROW(index_p_subgroups(builtin_group("c4"), 3), ValidationError);
}

TEST(IntersectionProperty, Examples) {
    EXPECT_TRUE(has_intersection_property(builtin_group("klein4"), 2));
    EXPECT_FALSE(has_intersection_property(builtin_group("c4"), 2));
    EXPECT_FALSE(has_intersection_property(builtin_group("q8"), 2));
    EXPECT_TRUE(has_intersection_property(builtin_group("trivial"), 2));
    EXPECT_THROW(has_intersection_property(builtin_group("c6"), 2), ValidationError);
    EXPECT_THROW(has_intersection_property(builtin_group("c4"), 3), ValidationError);
}

TEST(ElementaryAbelian, Examples) {
    EXPECT_TRUE(is_elementary_abelian(builtin_group("klein4"), 2));
    EXPECT_FALSE(is_elementary_abelian(builtin_group("c4"), 2));
    EXPECT_TRUE(is_elementary_abelian(builtin_group("c3xc3"), 3));
    EXPECT_FALSE(is_elementary_abelian(builtin_group("heis3"), 3));  // exponent 3 but not commutative
    EXPECT_TRUE(is_elementary_abelian(builtin_group("trivial"), 5));
}

TEST(IntersectionProperty, EquivalentToElementaryAbelianOnCorpus) {
    const std::vector<std::pair<const char*, std::uint64_t>> corpus = {
        {"c2", 2},       {"c4", 2},      {"c8", 2},   {"c16", 2},       {"klein4", 2},  {"c2xc2xc2", 2},
        {"c2xc2xc2xc2", 2}, {"c4xc2", 2}, {"c4xc4", 2}, {"d4", 2},       {"q8", 2},      {"q8xc2", 2},
        {"d8", 2},       {"c3", 3},      {"c9", 3},   {"c3xc3", 3},     {"c9xc3", 3},   {"c3xc3xc3", 3},
        {"heis3", 3},    {"c5xc5", 5},   {"c25", 5},
    };
    for (const auto& [name, p] : corpus) {
        const auto g = builtin_group(name);
        EXPECT_EQ(has_intersection_property(g, p), is_elementary_abelian(g, p)) << name;
    }
}
