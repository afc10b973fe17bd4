#include <gtest/gtest.h>

#include <ncgrowth/automaton.hpp>
#include <ncgrowth/numeric.hpp>
#include <ncgrowth/series.hpp>

#include "oracles.hpp"

using namespace ncgrowth;

namespace
{

TruncatedSeries from_oracle(const std::vector<mpq_class> &a) { return TruncatedSeries(std::vector<Rational>(a.begin(), a.end())); }

} // namespace

TEST(Numeric, ParseAndPrintRationals)
{
    EXPECT_EQ(parse_rational("22/7"), Rational(22, 7));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Numeric, PrimeFieldArithmetic)
{
    const ModP a(3, 7), b(5, 7);
    EXPECT_EQ((a + b).value(), 1U);
    EXPECT_EQ((a * b).value(), 1U);
    EXPECT_EQ((a / b * b).value(), 3U);
    EXPECT_EQ((-a).value(), 4U);
    EXPECT_TRUE(is_zero(a - a));
    EXPECT_THROW(ModP(3, 7) / ModP(0, 7), std::domain_error);
    EXPECT_THROW(ModP(1, 7) + ModP(1, 5), std::logic_error);
    EXPECT_EQ(field_element<ModP>(Rational(1, 2), FieldSpec{7}).value(), 4U);
    EXPECT_THROW(field_element<ModP>(Rational(1, 7), FieldSpec{7}), std::invalid_argument);
    EXPECT_TRUE(is_prime(7));
    EXPECT_FALSE(is_prime(9));
}

TEST(TruncatedSeries, ArithmeticTruncatesToCommonDegree)
{
    const TruncatedSeries a{1, 1, 1, 1};
    const TruncatedSeries b{1, -1};
    const auto p = a * b;
    EXPECT_EQ(p.degree(), 1U);
    EXPECT_EQ(p, (TruncatedSeries{1, 0}));
    EXPECT_EQ(a + a, (TruncatedSeries{2, 2, 2, 2}));
}

TEST(TruncatedSeries, InverseOfGeometricSeries)
{
    const TruncatedSeries geo{1, 1, 1, 1, 1, 1};
    EXPECT_EQ(inverse(geo), (TruncatedSeries{1, -1, 0, 0, 0, 0}));
    EXPECT_THROW(inverse(TruncatedSeries{0, 1}), std::domain_error);
}

TEST(TruncatedSeries, CompareReportsFirstDifference)
{
    const auto r = series_compare(TruncatedSeries{1, 2, 4, 8}, TruncatedSeries{1, 2, 3, 9});
    EXPECT_EQ(r.relation, OrderingReport::Relation::incomparable);
    ASSERT_TRUE(r.first_difference);
    EXPECT_EQ(*r.first_difference, 2U);
    EXPECT_EQ(series_compare(TruncatedSeries{1, 2}, TruncatedSeries{1, 1}).relation,
              OrderingReport::Relation::greater_equal);
}

TEST(Polynomial, GcdAndDivision)
{
    const Polynomial a{-1, 0, 1};  // t^2 - 1
    const Polynomial b{1, 1};      // t + 1
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q, (Polynomial{-1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(a, Polynomial{1, 2, 1}).monic(), (Polynomial{1, 1}));
    EXPECT_THROW(divmod(a, Polynomial{}), std::domain_error);
}

TEST(RationalSeries, ExpansionMatchesRecurrence)
{
    const RationalSeries r(Polynomial{1, 1}, Polynomial{1, -2, -1, 1});
    EXPECT_EQ(r.expand(15), from_oracle(oracle::expand({1, 1}, {1, -2, -1, 1}, 15)));
    EXPECT_EQ(r.expand(8), (TruncatedSeries{1, 3, 7, 16, 36, 81, 182, 409, 919}));
}

TEST(RationalSeries, ReducesCommonFactors)
{
    const RationalSeries r(Polynomial{1, -1}, Polynomial{1, -2, 1});
    EXPECT_EQ(r.denominator(), (Polynomial{1, -1}));
    EXPECT_EQ(r.numerator(), (Polynomial{1}));
}

TEST(RationalSeries, EvaluationAndPole)
{
    const RationalSeries r(Polynomial{1}, Polynomial{1, -2, 1});
    EXPECT_EQ(r(Rational(1, 2)), Rational(4));
    EXPECT_THROW(r(Rational(1)), std::domain_error);
}

TEST(RationalSeries, Reciprocal)
{
    const RationalSeries r(Polynomial{1, 1}, Polynomial{1, -1});
    const RationalSeries inv = r.reciprocal();
    EXPECT_EQ((r * inv).expand(6), TruncatedSeries::one(6));
}

TEST(RootIsolation, SmallestPositiveRootExactAndIsolated)
{
    const auto exact = smallest_positive_root(Polynomial{1, -2});
    ASSERT_TRUE(exact.exact());
    EXPECT_EQ(exact.lower, Rational(1, 2));

    const Rational width = default_isolation_width();
    const auto irr = smallest_positive_root(Polynomial{1, 0, -2}, width);
    ASSERT_EQ(irr.kind, PositiveRoot::Kind::isolated);
    EXPECT_LE(irr.width(), width);
    EXPECT_LT(irr.lower * irr.lower, Rational(1, 2));
    EXPECT_GT(irr.upper * irr.upper, Rational(1, 2));

    EXPECT_FALSE(smallest_positive_root(Polynomial{1, 1}).exists());
}

TEST(RootIsolation, SturmCountsDistinctRoots)
{
    // (t - 1)(t - 2)(t - 3)
    const Polynomial p{-6, 11, -6, 1};
    const auto chain = detail::sturm_chain(p);
    EXPECT_EQ(detail::sign_variations(chain, Rational(0)) - detail::sign_variations(chain, Rational(4)), 3);
    EXPECT_EQ(detail::sign_variations(chain, Rational(3, 2)) - detail::sign_variations(chain, Rational(5, 2)), 1);
}

TEST(Growth, CertifiedFromClosedForm)
{
    const auto free2 = growth_from_rational(RationalSeries(Polynomial{1}, Polynomial{1, -2}));
    EXPECT_TRUE(free2.certified);
    EXPECT_EQ(free2.lower, Rational(2));
    EXPECT_EQ(free2.upper, Rational(2));

    const auto poly = growth_from_rational(RationalSeries(Polynomial{1}, Polynomial{1, -2, 1}));
    EXPECT_TRUE(poly.subexponential);
    EXPECT_EQ(poly.lower, Rational(1));

    const auto finite = growth_from_rational(RationalSeries::polynomial(Polynomial{1, 2, 1}));
    EXPECT_TRUE(finite.finite_dimensional);
}

TEST(Growth, CoefficientEstimatorBracketsKnownExponent)
{
    const RationalSeries fib(Polynomial{1, 1}, Polynomial{1, -1, -1});
    const auto exact = growth_from_rational(fib);
    const auto est = estimate_growth_from_coefficients(fib.expand(30), 6);
    EXPECT_FALSE(est.certified);
    EXPECT_LE(est.lower, exact.lower);
    EXPECT_GE(est.upper, exact.upper);
}

TEST(BerlekampMassey, RecoversFibonacciRecurrence)
{
    std::vector<Rational> seq{1, 1};
    for (int i = 0; i < 10; ++i) {
        seq.push_back(seq[seq.size() - 1] + seq[seq.size() - 2]);
    }
    const auto [conn, len] = berlekamp_massey(seq);
    EXPECT_EQ(len, 2U);
    EXPECT_EQ(conn, (Polynomial{1, -1, -1}));
}
