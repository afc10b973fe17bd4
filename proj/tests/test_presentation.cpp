#include <gtest/gtest.h>

#include <ncgrowth/presentation.hpp>

using namespace ncgrowth;

namespace
{

ParseError parse_error(std::string_view text)
{
    try {
        parse_presentation(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for: " << text;
    return ParseError(0, 0, "");
}

} // namespace

TEST(Alphabet, DeglexOrderUsesWeightedDegreeFirst)
{
    const Alphabet a({{"x", 1}, {"y", 2}});
    const Word xx = a.word({0, 0}), y = a.word({1}), xxx = a.word({0, 0, 0});
    EXPECT_EQ(xx.degree, 2U);
    EXPECT_EQ(y.degree, 2U);
    EXPECT_LT(xx, xxx);
    EXPECT_LT(y, xxx);
    EXPECT_EQ(deglex_compare(a.word({0, 1}), a.word({1, 0})), std::strong_ordering::less);
}

TEST(Alphabet, RejectsDuplicateAndInvalidNames)
{
    EXPECT_THROW(Alphabet({{"x", 1}, {"x", 1}}), std::invalid_argument);
    EXPECT_THROW(Alphabet({{"1x", 1}}), std::invalid_argument);
    EXPECT_THROW(Alphabet({{"x", 0}}), std::invalid_argument);
}

TEST(Alphabet, GeneratorSeriesCountsDegrees)
{
    const Alphabet a({{"x", 1}, {"y", 2}, {"z", 2}});
    EXPECT_EQ(a.generator_series(3), (TruncatedSeries{0, 1, 2, 0}));
    EXPECT_FALSE(a.standard_grading());
    EXPECT_EQ(free_series(a, 4), (TruncatedSeries{1, 1, 3, 5, 11}));
}

TEST(Parser, ParsesPowersProductsAndCoefficients)
{
    const auto p = parse_presentation("generators: x:1 y:1\nrelations: 2*x^2*y - 3/2 y x y, (x+y)^2\n");
    ASSERT_EQ(p.relations.size(), 2U);
    const Alphabet &a = p.alphabet;
    EXPECT_EQ(p.relations[0].coeff(a.word({0, 0, 1})), Rational(2));
    EXPECT_EQ(p.relations[0].coeff(a.word({1, 0, 1})), Rational(-3, 2));
    EXPECT_EQ(p.relations[1].size(), 4U);
    EXPECT_TRUE(p.field.rational());
}

TEST(Parser, AcceptsCommentsFieldAndUnicodeMinus)
{
    const auto p = parse_presentation("# comment\ngenerators: a:1 b:1\nfield: F 5\nrelations:\n a*b \xE2\x88\x92 b*a  # tail\n");
    EXPECT_EQ(p.field.characteristic, 5U);
    ASSERT_EQ(p.relations.size(), 1U);
    EXPECT_EQ(p.relations[0].coeff(p.alphabet.word({1, 0})), Rational(-1));
}

TEST(Parser, EmptyRelationSectionIsFreeAlgebra)
{
    const auto p = parse_presentation("generators: x:1\nrelations:\n");
    EXPECT_TRUE(p.relations.empty());
}

TEST(Parser, ErrorsCarryLineAndColumn)
{
    const auto unknown = parse_error("generators: x:1\nrelations: x*z\n");
    EXPECT_EQ(unknown.line(), 2U);
    EXPECT_EQ(unknown.column(), 14U);
    EXPECT_NE(std::string(unknown.what()).find("unknown generator 'z'"), std::string::npos);

    EXPECT_NE(std::string(parse_error("generators: x:1 y:1\nrelations: x*y + x\n").what()).find("inhomogeneous"),
              std::string::npos);
    EXPECT_NE(std::string(parse_error("generators: x:1\nrelations: x\n").what()).find("degree < 2"), std::string::npos);
    EXPECT_NE(std::string(parse_error("generators: x:1\nrelations: x*x - x*x\n").what()).find("zero relation"),
              std::string::npos);
    EXPECT_NE(std::string(parse_error("generators: x\nrelations:\n").what()).find("name:degree"), std::string::npos);
    EXPECT_NE(std::string(parse_error("generators: x:1\nfield: F 4\nrelations:\n").what()).find("prime"),
              std::string::npos);
    EXPECT_NE(std::string(parse_error("generators: x:1\n").what()).find("relations"), std::string::npos);
    EXPECT_NE(std::string(parse_error("generators: x:1\nrelations: x^\n").what()).find("exponent"), std::string::npos);
}

TEST(Parser, RenderRoundTripsAndFingerprintIsStable)
{
    const auto p = parse_presentation("generators: x:1 y:2\nrelations: x^2*y - y*x^2, y^2\n");
    const auto q = parse_presentation(p.render());
    EXPECT_EQ(p, q);
    EXPECT_EQ(p.fingerprint(), q.fingerprint());
    const auto r = parse_presentation("generators: x:1 y:2\nrelations: y^2, x^2*y - y*x^2\n");
    EXPECT_NE(p.fingerprint(), r.fingerprint());
}

TEST(Presentation, ValidateAllowsLinearRelationsOnRequest)
{
    Presentation p = parse_presentation("generators: x:1 y:1\nrelations:\n");
    p.relations.emplace_back(p.alphabet.word({0}), Rational(1));
    EXPECT_THROW(p.validate(), std::invalid_argument);
    EXPECT_NO_THROW(p.validate(1));
}

TEST(NCPolynomial, MultiplicationAndLeadingTerm)
{
    const Alphabet a({{"x", 1}, {"y", 1}});
    const auto f = parse_polynomial(a, "x*y - y*x");
    const auto g = parse_polynomial(a, "x + y");
    const auto fg = f * g;
    EXPECT_EQ(fg.degree(), 3U);
    EXPECT_EQ(fg.leading_word(), a.word({1, 0, 1}));
    EXPECT_EQ(fg.leading_coeff(), Rational(-1));
    EXPECT_TRUE((f - f).is_zero());
}
