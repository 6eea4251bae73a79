#include "seifert/admissibility.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace seifert;

namespace {

std::vector<Violation> violations_of(const std::string& text)
{
    return check_admissible(parse_seifert(text)).violations;
}

} // namespace

TEST(CheckAdmissible, EuclideanCase)
{
    const auto r = check_admissible(parse_seifert("(0,o1|(2,1),(2,1),(2,1),(2,1),(1,-2))"));
    EXPECT_TRUE(r.admissible);
    EXPECT_TRUE(r.violations.empty());
    ASSERT_TRUE(r.case_label);
    EXPECT_EQ(*r.case_label, CaseLabel::C2a);
    EXPECT_EQ(r.geometry, GeometryType::E3);
}

TEST(CheckAdmissible, OrderThreeFibers)
{
    const auto r = check_admissible(parse_seifert("(0,o1|(3,1),(3,1),(3,1),(1,-1))"));
    EXPECT_FALSE(r.admissible);
    EXPECT_EQ(r.violations, std::vector<Violation>{Violation::OrderGreaterThanTwo});
    EXPECT_FALSE(r.case_label);
    EXPECT_EQ(r.geometry, GeometryType::Other);
}

TEST(CheckAdmissible, NonzeroEulerAndWrongB)
{
    // e = -1 by direct arithmetic
    const auto m = parse_seifert("(1,o1|(1,1))");
    EXPECT_EQ(euler_number(m), -1);
    EXPECT_EQ(check_admissible(m).violations, (std::vector<Violation>{Violation::NonzeroEuler, Violation::WrongBTerm}));
}

TEST(CheckAdmissible, OddCount)
{
    // (2,1) with b = 0: e = -1/2, one order-2 fiber, b != -1/2
    EXPECT_EQ(violations_of("(0,o1|(2,1))"),
              (std::vector<Violation>{Violation::NonzeroEuler, Violation::OddCount, Violation::WrongBTerm}));
}

TEST(CheckAdmissible, AccumulatesEveryViolation)
{
    EXPECT_EQ(violations_of("(0,o1|(2,1),(3,1))"),
              (std::vector<Violation>{Violation::NonzeroEuler, Violation::OrderGreaterThanTwo, Violation::OddCount}));
}

TEST(CheckAdmissible, UnnormalizedInputIsNormalizedFirst)
{
    // (2,3),(2,-1) normalize to (2,1),(2,1) with b moved by +1 and -1
    const auto r = check_admissible(parse_seifert("(0,o1|(2,3),(2,-1),(1,-1))"));
    EXPECT_TRUE(r.admissible);
    EXPECT_EQ(*r.case_label, CaseLabel::C1b);
}

TEST(CheckAdmissible, RejectsNonOrientableBase)
{
    EXPECT_THROW(check_admissible(parse_seifert("(2,n1|)")), PreconditionError);
}

TEST(CheckAdmissible, ReportInvariants)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3000; ++i) {
        const auto m = test_support::random_descriptor(rng, false);
        const auto r = check_admissible(m);
        ASSERT_EQ(r.admissible, r.violations.empty());
        ASSERT_EQ(r.case_label.has_value(), r.admissible);
        ASSERT_EQ(r.geometry != GeometryType::Other, r.admissible);
    }
}

TEST(CheckAdmissible, InvariantUnderNormalizeAndPermutation)
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1500; ++i) {
        auto m = test_support::random_descriptor(rng, false);
        const auto r = check_admissible(m);
        const auto rn = check_admissible(normalize(m));
        ASSERT_EQ(r.violations, rn.violations);
        ASSERT_EQ(r.case_label, rn.case_label);
        std::shuffle(m.exceptional.begin(), m.exceptional.end(), rng);
        const auto rp = check_admissible(m);
        ASSERT_EQ(r.violations, rp.violations);
        ASSERT_EQ(r.case_label, rp.case_label);
    }
}

TEST(CheckAdmissible, RandomAdmissibleShapesPass)
{
    // Build admissible descriptors in disguise: shift each (2,1) by a
    // multiple of 2 and compensate in b.
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> shift(-3, 3), g(0, 4), half(0, 5);
    for (int i = 0; i < 500; ++i) {
        SeifertInvariants m;
        m.base = {g(rng), true};
        const int n = 2 * half(rng);
        Integer b = -n / 2;
        for (int k = 0; k < n; ++k) {
            const int s = shift(rng);
            m.exceptional.push_back({2, 1 + 2 * s});
            b -= s;
        }
        m.b = b;
        ASSERT_TRUE(check_admissible(m).admissible) << print_seifert(m);
    }
}

TEST(ExcludeFixedPointFree, Examples)
{
    EXPECT_FALSE(exclude_fixed_point_free(parse_seifert("(2,o1|)")));
    EXPECT_TRUE(exclude_fixed_point_free(parse_seifert("(0,o1|(2,1),(2,1),(1,-1))")));
    EXPECT_TRUE(exclude_fixed_point_free(parse_seifert("(0,o1|(1,3))")));
    // a disguised product still counts as a product
    EXPECT_FALSE(exclude_fixed_point_free(parse_seifert("(1,o1|(1,2),(1,-2))")));
}

TEST(ExcludeFixedPointFree, HoldsForNonProductAdmissibles)
{
    for (const auto& m : enumerate_admissible(5, 10)) {
        const bool product = m.exceptional.empty() && m.b == 0;
        EXPECT_EQ(exclude_fixed_point_free(m), !product) << print_seifert(m);
    }
}

TEST(ClassifyCase, Examples)
{
    EXPECT_EQ(classify_case(parse_seifert("(0,o1|)")), CaseLabel::C1a);
    EXPECT_EQ(classify_case(parse_seifert("(1,o1|)")), CaseLabel::C2b);
    EXPECT_EQ(classify_case(parse_seifert("(1,o1|(2,1),(2,1),(1,-1))")), CaseLabel::C3b);
    EXPECT_EQ(classify_case(parse_seifert("(0,o1|(2,1),(2,1),(1,-1))")), CaseLabel::C1b);
    EXPECT_EQ(classify_case(parse_seifert("(0,o1|(2,1),(2,1),(2,1),(2,1),(1,-2))")), CaseLabel::C2a);
    EXPECT_EQ(classify_case(parse_seifert("(0,o1|(2,1),(2,1),(2,1),(2,1),(2,1),(2,1),(1,-3))")), CaseLabel::C3c);
}

// (g,o1|) with g >= 2 is hyperbolic; it is labelled 3a, the case that
// explicitly covers n = 0.
TEST(ClassifyCase, HigherGenusProductIsThreeA)
{
    EXPECT_EQ(classify_case(parse_seifert("(2,o1|)")), CaseLabel::C3a);
    EXPECT_EQ(classify_case(parse_seifert("(5,o1|)")), CaseLabel::C3a);
    EXPECT_EQ(classify_case(parse_seifert("(3,o1|(2,1),(2,1),(1,-1))")), CaseLabel::C3a);
}

TEST(ClassifyCase, RejectsInadmissible)
{
    EXPECT_THROW(classify_case(parse_seifert("(0,o1|(3,1),(3,2))")), PreconditionError);
}

TEST(ClassifyCase, PartitionsByChiSign)
{
    for (const auto& m : enumerate_admissible(6, 16)) {
        const int s = sign(orbifold_euler_characteristic(m));
        const CaseLabel c = classify_case(m);
        const bool one = c == CaseLabel::C1a || c == CaseLabel::C1b;
        const bool two = c == CaseLabel::C2a || c == CaseLabel::C2b;
        EXPECT_EQ(one, s > 0) << print_seifert(m);
        EXPECT_EQ(two, s == 0) << print_seifert(m);
        EXPECT_EQ(!one && !two, s < 0) << print_seifert(m);
    }
}

TEST(EnumerateAdmissible, SmallWindows)
{
    const auto w02 = enumerate_admissible(0, 2);
    ASSERT_EQ(w02.size(), 2u);
    EXPECT_EQ(print_seifert(w02[0]), "(0,o1|)");
    EXPECT_EQ(print_seifert(w02[1]), "(0,o1|(2,1),(2,1),(1,-1))");

    const auto w00 = enumerate_admissible(0, 0);
    ASSERT_EQ(w00.size(), 1u);
    EXPECT_EQ(print_seifert(w00[0]), "(0,o1|)");
}

TEST(EnumerateAdmissible, CountMatchesClosedForm)
{
    EXPECT_EQ(enumerate_admissible(1, 4).size(), 6u);
    for (int g = 0; g <= 5; ++g)
        for (int n = 0; n <= 9; ++n)
            EXPECT_EQ(enumerate_admissible(g, n).size(), static_cast<std::size_t>((g + 1) * (n / 2 + 1)));
}

TEST(EnumerateAdmissible, EveryEntrySatisfiesTheConditions)
{
    const auto all = enumerate_admissible(4, 10);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& m = all[i];
        EXPECT_TRUE(is_normalized(m));
        EXPECT_EQ(euler_number(m), 0);
        const Integer n = order_two_count(m);
        EXPECT_EQ(n % 2, 0);
        EXPECT_EQ(Integer(m.exceptional.size()), n);
        EXPECT_EQ(m.b, -n / 2);
        EXPECT_TRUE(check_admissible(m).admissible);
        if (i > 0) {
            const auto& prev = all[i - 1];
            const bool ordered = prev.base.genus < m.base.genus ||
                                 (prev.base.genus == m.base.genus && prev.exceptional.size() < m.exceptional.size());
            EXPECT_TRUE(ordered);
        }
    }
}

TEST(EnumerateAdmissible, BruteForceAgreement)
{
    // every normalized descriptor with pairs of order <= 3, at most 4 pairs
    // and small b that passes check_admissible must be in the enumeration
    const auto listed = enumerate_admissible(1, 4);
    int found = 0;
    for (int genus = 0; genus <= 1; ++genus)
        for (int k = 0; k <= 4; ++k)
            for (int mask = 0; mask < (1 << (2 * k)); ++mask)
                for (int b = -4; b <= 4; ++b) {
                    SeifertInvariants m;
                    m.base = {genus, true};
                    bool valid = true;
                    for (int i = 0; i < k; ++i) {
                        const int code = (mask >> (2 * i)) & 3; // (2,1), (3,1), (3,2), skip
                        if (code == 3) valid = false;
                        static const ExceptionalPair pairs[] = {{2, 1}, {3, 1}, {3, 2}};
                        if (valid) m.exceptional.push_back(pairs[code]);
                    }
                    if (!valid) continue;
                    m.b = b;
                    if (!check_admissible(m).admissible) continue;
                    ++found;
                    EXPECT_NE(std::find(listed.begin(), listed.end(), m), listed.end()) << print_seifert(m);
                }
    EXPECT_EQ(found, 6);
}
