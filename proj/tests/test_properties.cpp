#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include <ncgrowth/ncgrowth.hpp>

#include "oracles.hpp"

using namespace ncgrowth;
namespace fs = std::filesystem;

namespace
{

struct CorpusEntry {
    std::string name;
    Presentation presentation;
    unsigned degree = 8;
};

std::vector<CorpusEntry> load_corpus(unsigned cap)
{
    std::vector<CorpusEntry> out;
    for (const auto &e : fs::directory_iterator(NCGROWTH_CORPUS_DIR)) {
        if (e.path().extension() != ".alg") {
            continue;
        }
        std::ifstream in(e.path());
        std::stringstream ss;
        ss << in.rdbuf();
        CorpusEntry c{e.path().stem().string(), parse_presentation(ss.str()), cap};
        std::ifstream side(fs::path(e.path()).replace_extension(".expected"));
        if (side) {
            c.degree = std::min(cap, nlohmann::json::parse(side).value("max_degree", cap));
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.name < b.name; });
    return out;
}

NCPolynomial<Rational> random_relation(std::mt19937_64 &rng, const Alphabet &a, unsigned degree)
{
    std::uniform_int_distribution<int> coeff(-2, 2), sparse(0, 2);
    NCPolynomial<Rational> f;
    for (const auto &w : oracle::words({1, 1}, degree)) {
        if (sparse(rng) == 0) {
            f.add_term(a.word(std::string(w.begin(), w.end())), Rational(coeff(rng)));
        }
    }
    if (f.is_zero()) {
        std::uniform_int_distribution<int> letter(0, 1);
        std::string w(degree, '\0');
        for (auto &ch : w) {
            ch = static_cast<char>(letter(rng));
        }
        f.add_term(a.word(w), Rational(1));
    }
    return f;
}

} // namespace

TEST(Properties, EulerIdentityOnRandomAntichains)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned k = 1 + trial % 3;
        const auto anti = oracle::random_antichain(rng, k, 4, 4);
        const Alphabet a = Alphabet::standard(k);
        std::vector<Word> ws;
        for (const auto &w : anti) {
            ws.push_back(a.word(w));
        }
        const MonomialAlgebra m(a, ws);
        const auto r = euler_check(m, 12);
        ASSERT_EQ(r.product, TruncatedSeries::one(12)) << m.render();
        const auto words = oracle::count_avoiding(k, anti, 8);
        ASSERT_EQ(r.hilbert.truncate(8), TruncatedSeries(std::vector<Rational>(words.begin(), words.end())))
            << m.render();
    }
}

TEST(Properties, SlackEqualsOmega3OnRandomPresentations)
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> count(1, 2), deg(2, 3);
    const Alphabet a = Alphabet::standard(2);
    for (int trial = 0; trial < 50; ++trial) {
        Presentation p{a, {}, {}};
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            p.relations.push_back(random_relation(rng, a, static_cast<unsigned>(deg(rng))));
        }
        const auto q = hilbert_series<Rational>(p, 8);
        const auto oracle = oracle::hilbert(p, 8);
        ASSERT_EQ(q.hilbert, TruncatedSeries(std::vector<Rational>(oracle.hilbert.begin(), oracle.hilbert.end())))
            << p.render();
        const auto slack = gs_slack(q);
        ASSERT_EQ(slack, omega3_series(q, 8)) << p.render();
        const auto expected = oracle::slack({1, 1}, oracle);
        ASSERT_EQ(slack, TruncatedSeries(std::vector<Rational>(expected.begin(), expected.end()))) << p.render();
        for (unsigned i = 0; i <= slack.degree(); ++i) {
            ASSERT_GE(slack[i], 0) << p.render();
        }
    }
}

TEST(Properties, RoutesAgreeOnCorpus)
{
    const auto corpus = load_corpus(8);
    ASSERT_GE(corpus.size(), 15U);
    for (const auto &c : corpus) {
        const auto v = strongly_free(c.presentation, c.degree);
        for (const auto &r : v.routes) {
            if (!r.applicable) {
                continue;
            }
            EXPECT_EQ(r.refuted, v.refuted()) << c.name << " " << r.name;
            if (v.refuted()) {
                EXPECT_EQ(r.degree, v.degree) << c.name << " " << r.name;
            }
        }
        EXPECT_EQ(v.slack, v.omega3) << c.name;
    }
}

TEST(Properties, FreeProductFormulaOnCorpusPairs)
{
    const auto corpus = load_corpus(5);
    unsigned pairs = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = i; j < corpus.size(); ++j) {
            const auto &a = corpus[i].presentation, &b = corpus[j].presentation;
            if (a.alphabet.size() + b.alphabet.size() > 4 || !(a.field == b.field)) {
                continue;
            }
            const auto r = free_product(a, b, 5);
            EXPECT_TRUE(r.agrees) << corpus[i].name << " * " << corpus[j].name;
            ++pairs;
        }
    }
    EXPECT_GE(pairs, 50U);
}

TEST(Properties, PadPreservesVerdictsOnCorpus)
{
    for (const auto &c : load_corpus(6)) {
        const auto v = strongly_free(c.presentation, c.degree);
        for (unsigned extra : {1U, 2U}) {
            if (c.presentation.alphabet.size() + extra > 4) {
                continue;
            }
            const auto w = strongly_free(pad_pair(c.presentation, extra), c.degree);
            EXPECT_EQ(v.refuted(), w.refuted()) << c.name;
            EXPECT_EQ(v.degree, w.degree) << c.name;
        }
    }
}

TEST(Properties, DoublePreservesVerdictsAcrossSeeds)
{
    unsigned checked = 0;
    for (const auto &c : load_corpus(6)) {
        const auto &p = c.presentation;
        const unsigned s = static_cast<unsigned>(p.alphabet.size());
        if (s != 2 || !p.alphabet.standard_grading() || p.relations.size() > 1 || p.relations.empty() ||
            p.relations[0].degree() != 2) {
            continue;
        }
        const auto v = strongly_free(p, 6);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto d = double_pair(p, seed);
            const auto w = strongly_free(d.presentation, 6);
            EXPECT_EQ(v.refuted(), w.refuted()) << c.name << " seed " << seed;
            EXPECT_EQ(v.degree, w.degree) << c.name << " seed " << seed;
            ++checked;
        }
    }
    EXPECT_GE(checked, 100U);
}

TEST(Properties, RadiusOfFreeProductAgainstAmbient)
{
    unsigned certified = 0, refuted = 0;
    for (const auto &c : load_corpus(10)) {
        const auto &p = c.presentation;
        if (p.relations.empty()) {
            continue;
        }
        const Presentation ambient{p.alphabet, {}, p.field};
        const auto r = radius_product_bound(ambient, p.relations, c.degree);
        if (!r.ambient_vs_product.certified) {
            continue;
        }
        ++certified;
        refuted += r.verdict.refuted() ? 1 : 0;
        EXPECT_EQ(r.ambient_vs_product.relation, r.verdict.refuted() ? ">" : "=") << c.name;
        if (r.bound.certified) {
            EXPECT_NE(r.bound.relation, "<") << c.name;
        }
    }
    EXPECT_GE(certified, 8U);
    EXPECT_GE(refuted, 3U);
    EXPECT_GT(certified, refuted);
}
