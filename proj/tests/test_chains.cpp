#include <gtest/gtest.h>

#include <random>

#include <ncgrowth/chains.hpp>

#include "oracles.hpp"

using namespace ncgrowth;

namespace
{

MonomialAlgebra mono(std::vector<GeneratorSpec> gens, const std::vector<std::string> &words)
{
    Alphabet a(std::move(gens));
    std::vector<Word> ws;
    for (const auto &w : words) {
        ws.push_back(a.parse_word(w));
    }
    return MonomialAlgebra(a, ws);
}

TruncatedSeries series(const std::vector<long> &v) { return TruncatedSeries(std::vector<Rational>(v.begin(), v.end())); }

} // namespace

TEST(MonomialAlgebra, RejectsNonAntichainAndShortWords)
{
    EXPECT_THROW(mono({{"x", 1}, {"y", 1}}, {"x*y", "x*y*x"}), std::invalid_argument);
    EXPECT_THROW(mono({{"x", 1}}, {"x"}), std::invalid_argument);
    const Alphabet a({{"x", 1}, {"y", 1}});
    const auto m = MonomialAlgebra::minimal(a, {a.parse_word("x*y"), a.parse_word("x*y*x")});
    EXPECT_EQ(m.obstructions().size(), 1U);
}

TEST(MonomialAlgebra, HilbertMatchesWordCount)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned k = 2 + trial % 2;
        const auto anti = oracle::random_antichain(rng, k, 4, 3);
        const Alphabet a = Alphabet::standard(k);
        std::vector<Word> ws;
        for (const auto &w : anti) {
            ws.push_back(a.word(w));
        }
        const MonomialAlgebra m(a, ws);
        EXPECT_EQ(m.hilbert(7), series(oracle::count_avoiding(k, anti, 7))) << m.render();
    }
}

TEST(Overlaps, MatchBruteForceScan)
{
    std::mt19937_64 rng(11);
    const Alphabet a = Alphabet::standard(2);
    std::uniform_int_distribution<int> len(1, 6), bit(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::string b(len(rng), '\0'), c(len(rng), '\0');
        for (auto &ch : b) {
            ch = static_cast<char>(bit(rng));
        }
        for (auto &ch : c) {
            ch = static_cast<char>(bit(rng));
        }
        const auto got = overlap_set(a, a.word(b), a.word(c));
        const auto want = oracle::overlaps(b, c);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].letters, b.substr(b.size() - want[i]));
        }
    }
}

TEST(CombinatorialFreeness, DetectsSubwordsAndOverlaps)
{
    const Alphabet a({{"x", 1}, {"y", 1}});
    auto words = [&](std::initializer_list<const char *> ws) {
        std::vector<Word> out;
        for (const char *w : ws) {
            out.push_back(a.parse_word(w));
        }
        return out;
    };
    EXPECT_TRUE(is_combinatorially_free(a, words({"x*y"})).free);
    EXPECT_EQ(is_combinatorially_free(a, words({"x*y", "x*x*y*y"})).violation, FreenessReport::Violation::subword);
    const auto self = is_combinatorially_free(a, words({"x*x"}));
    EXPECT_FALSE(self.free);
    EXPECT_EQ(self.violation, FreenessReport::Violation::overlap);
    EXPECT_FALSE(is_combinatorially_free(a, words({"x*y", "y*x"})).free);
    EXPECT_FALSE(is_combinatorially_free(a, words({"x*x*y", "x*y*y"})).free);
    EXPECT_FALSE(is_combinatorially_free(a, words({"x*x*y", "y*y*x*y"})).free);
    EXPECT_EQ(is_combinatorially_free(a, words({"x*x*y*y", "x*y*y*y"})).violation, FreenessReport::Violation::overlap);
    EXPECT_FALSE(is_combinatorially_free(a, words({"x*x*y", "x*y*y*x*y"})).free);
}

TEST(Chains, PowersOfXCube)
{
    const auto m = mono({{"x", 1}}, {"x^3"});
    const auto e = enumerate_chains(m, 4, 8);
    std::vector<std::size_t> lengths;
    for (const auto &c : e.chains) {
        lengths.push_back(c.word.length());
    }
    EXPECT_EQ(lengths, (std::vector<std::size_t>{1, 3, 4, 6, 7}));
    EXPECT_TRUE(e.list_complete);
}

TEST(Chains, TorOfXY)
{
    const auto m = mono({{"x", 1}, {"y", 1}}, {"x*y"});
    const auto tor = tor_series(m, 3, 8);
    ASSERT_EQ(tor.size(), 5U);
    EXPECT_EQ(tor[0], TruncatedSeries::one(8));
    EXPECT_EQ(tor[1], (TruncatedSeries{0, 2, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(tor[2], (TruncatedSeries{0, 0, 1, 0, 0, 0, 0, 0, 0}));
    EXPECT_TRUE(tor[3].is_zero());
    EXPECT_TRUE(tor[4].is_zero());
}

TEST(Chains, EulerIdentityOnExamples)
{
    for (const auto &m : {mono({{"x", 1}}, {"x^3"}), mono({{"x", 1}, {"y", 1}}, {"x*y*x", "y*y"}),
                          mono({{"x", 1}, {"y", 2}}, {"x*y*x", "y*y"})}) {
        const auto r = euler_check(m, 12);
        EXPECT_EQ(r.product, TruncatedSeries::one(12));
    }
}

TEST(Chains, FreeSetHasNoRankTwoChains)
{
    const auto f = mono({{"x", 1}, {"y", 1}, {"z", 1}}, {"x*y", "z*z*y"});
    const Alphabet &a = f.alphabet();
    EXPECT_TRUE(is_combinatorially_free(a, f.obstructions()).free);
    EXPECT_TRUE(enumerate_chains(f, 4, 12).table.row(2).is_zero());
}

TEST(PartialEuler, XSquaredValues)
{
    const auto m = mono({{"x", 1}}, {"x^2"});
    const auto r = partial_euler_bounds(m, 1, 6);
    EXPECT_EQ(r.lower.value, (TruncatedSeries{1, 0, 0, 1, 0, 0, 0}));
    EXPECT_EQ(r.upper.value, (TruncatedSeries{1, 0, 0, 0, -1, 0, 0}));
    EXPECT_FALSE(r.lower.equality);
    EXPECT_TRUE(r.lower.holds && r.upper.holds);
}

TEST(PartialEuler, EqualityForGlobalDimensionTwo)
{
    const auto m = mono({{"x", 1}, {"y", 1}}, {"x*y"});
    const auto r = partial_euler_bounds(m, 1, 10);
    EXPECT_TRUE(r.upper.equality);
    EXPECT_TRUE(r.upper.next_rank_vanishes);
}

TEST(Ufnarovski, ClosedForms)
{
    EXPECT_EQ(ufnarovski_rational_series(mono({{"x", 1}, {"y", 1}}, {"x*y"})),
              RationalSeries(Polynomial{1}, Polynomial{1, -2, 1}));
    EXPECT_EQ(ufnarovski_rational_series(mono({{"x", 1}, {"y", 1}}, {"x^2", "y^2"})),
              RationalSeries(Polynomial{1, 1}, Polynomial{1, -1}));
    EXPECT_EQ(ufnarovski_rational_series(mono({{"a", 1}, {"b", 1}, {"c", 1}},
                                              {"a*a", "a*b", "a*c", "b*a", "b*b", "b*c", "c*a", "c*b", "c*c"})),
              RationalSeries::polynomial(Polynomial{1, 3}));
}

TEST(FreeProduct, MonomialSeriesFollowsInverseFormula)
{
    const auto a = mono({{"x", 1}, {"y", 1}}, {"x*y"});
    const auto b = mono({{"z", 1}}, {"z^2"});
    const auto ab = free_product(a, b);
    const TruncatedSeries lhs = inverse(ab.hilbert(10));
    const TruncatedSeries rhs = inverse(a.hilbert(10)) + inverse(b.hilbert(10)) - TruncatedSeries::one(10);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(ab.hilbert(8), (TruncatedSeries{1, 3, 7, 16, 36, 81, 182, 409, 919}));
}

TEST(Insulation, CaseOneWord)
{
    const auto a = mono({{"x", 1}}, {});
    const auto b = mono({{"y", 1}}, {"y^3"});
    const auto ins = insulated_monomial(a, b, "x*x");
    EXPECT_EQ(ins.construction, 1U);
    EXPECT_EQ(ins.q, 6U);
    const Alphabet &al = ins.product.alphabet();
    EXPECT_EQ(ins.p, al.parse_word("y*(x*y^2)^6*x*x*(y*x)^6"));
    EXPECT_EQ(ins.degree(), 33U);
    EXPECT_TRUE(ins.report.ok) << ins.report.failure;
}

TEST(Insulation, CaseTwoWordAndReportedOverlap)
{
    const auto a = mono({{"x", 1}}, {});
    const auto b = mono({{"y1", 1}, {"y2", 1}}, {});
    const auto ins = insulated_monomial(a, b, "x*x");
    EXPECT_EQ(ins.construction, 2U);
    EXPECT_EQ(ins.q, 3U);
    const Alphabet &al = ins.product.alphabet();
    EXPECT_EQ(ins.p, al.parse_word("(x*y1)^3*x*x*(y2*x)^3"));
    // y1 p y1 ends with y2 x y1, y2 p y1 starts with it.
    EXPECT_FALSE(ins.report.ok);
    ASSERT_TRUE(ins.report.witness);
    EXPECT_EQ(al.render(*ins.report.witness), "y2*x*y1");
}

TEST(Insulation, VerifierOnSmallWords)
{
    const auto f = mono({{"x", 1}, {"y", 1}}, {});
    const Alphabet &a = f.alphabet();
    EXPECT_FALSE(verify_insulation(f, a.parse_word("x*y*x"), {1}).ok);
    EXPECT_TRUE(verify_insulation(f, a.parse_word("x*x"), {1}).ok);
    const auto g = mono({{"x", 1}, {"y", 1}}, {"x*x"});
    EXPECT_FALSE(verify_insulation(g, g.alphabet().parse_word("y*x*x*y"), {1}).ok);
}

TEST(Insulation, Preconditions)
{
    const auto a = mono({{"x", 1}}, {});
    EXPECT_THROW(insulated_monomial(a, mono({{"y", 1}}, {"y^2"}), "x*x"), std::invalid_argument);
    EXPECT_THROW(insulated_monomial(a, mono({{"y", 1}}, {}), "x*y"), std::invalid_argument);
    EXPECT_THROW(insulated_monomial(mono({{"x", 1}}, {"x^2"}), mono({{"y", 1}}, {}), "x*x"), std::invalid_argument);
}

TEST(InsertedChains, ClosedFormMatchesDirectForFreeFactors)
{
    const auto a = mono({{"x", 1}}, {});
    for (const auto &b : {mono({{"y", 1}}, {}), mono({{"y1", 1}, {"y2", 1}}, {})}) {
        const auto ins = insulated_monomial(a, b, "x*x");
        const unsigned d = ins.degree() + 8;
        const auto closed = inserted_chain_series(b, ins.degree(), 4, d);
        EXPECT_EQ(closed, inserted_chain_series_direct(ins, 4, d));
        EXPECT_NO_THROW(euler_check(ins.quotient(), d));
    }
}

TEST(InsertedChains, GeometricFormForOneFreeGenerator)
{
    // C'(s,t) = s t^{b+2} / (1 - s t^{b+1}).
    const auto b = mono({{"y", 1}}, {});
    const unsigned bdeg = 10, d = 40;
    const auto closed = inserted_chain_series(b, bdeg, 4, d);
    for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned k = 0; k <= d; ++k) {
            const bool hit = n >= 1 && k == bdeg + 2 + (n - 1) * (bdeg + 1);
            EXPECT_EQ(closed.at(n, k), hit ? 1 : 0) << n << "," << k;
        }
    }
}

TEST(InsertedChains, CubeFactorDiffersFromClosedForm)
{
    // The B-chain y^3 overlaps the prefix y^2 of y p y, giving a rank-2 chain
    // not of the shape c_1 p c_2.
    const auto a = mono({{"x", 1}}, {});
    const auto b = mono({{"y", 1}}, {"y^3"});
    const auto ins = insulated_monomial(a, b, "x*x");
    const unsigned d = ins.degree() + 8;
    const auto diff = inserted_chain_series(b, ins.degree(), 4, d).first_difference(inserted_chain_series_direct(ins, 4, d));
    ASSERT_TRUE(diff);
    EXPECT_EQ(diff->first, 2U);
    EXPECT_EQ(diff->second, 36U);
    EXPECT_NO_THROW(euler_check(ins.quotient(), d));
}

TEST(InsertedChains, RankOneCountForTwoLetters)
{
    const auto b = mono({{"y1", 1}, {"y2", 1}}, {});
    EXPECT_EQ(inserted_chain_series(b, 14, 3, 24).at(1, 16), 4);
}
