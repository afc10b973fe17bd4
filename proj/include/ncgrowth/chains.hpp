#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <ncgrowth/automaton.hpp>
#include <ncgrowth/groebner.hpp>
#include <ncgrowth/numeric.hpp>
#include <ncgrowth/presentation.hpp>
#include <ncgrowth/series.hpp>

namespace ncgrowth
{

// Quotient of a free algebra by an ideal generated by words.
class MonomialAlgebra
{
public:
    MonomialAlgebra() = default;
    MonomialAlgebra(Alphabet alphabet, std::vector<Word> obstructions)
        : alphabet_(std::move(alphabet)), obstructions_(std::move(obstructions))
    {
        std::sort(obstructions_.begin(), obstructions_.end());
        obstructions_.erase(std::unique(obstructions_.begin(), obstructions_.end()), obstructions_.end());
        for (const auto &u : obstructions_) {
            if (u.length() < 2) {
                throw std::invalid_argument("obstruction '" + alphabet_.render(u) + "' has length below 2");
            }
            for (char c : u.letters) {
                if (static_cast<Letter>(c) >= alphabet_.size()) {
                    throw std::out_of_range("obstruction letter outside the alphabet");
                }
            }
        }
        for (const auto &a : obstructions_) {
            for (const auto &b : obstructions_) {
                if (!(a == b) && b.letters.find(a.letters) != std::string::npos) {
                    throw std::invalid_argument("obstruction '" + alphabet_.render(a) + "' is a subword of '" +
                                                alphabet_.render(b) + "'");
                }
            }
        }
    }

    // Keeps only the subword-minimal words, so any word set is accepted.
    static MonomialAlgebra minimal(Alphabet alphabet, std::vector<Word> words)
    {
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        std::vector<Word> kept;
        for (const auto &w : words) {
            const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Word &k) {
                return w.letters.find(k.letters) != std::string::npos;
            });
            if (!redundant) {
                kept.push_back(w);
            }
        }
        return MonomialAlgebra(std::move(alphabet), std::move(kept));
    }

    const Alphabet &alphabet() const { return alphabet_; }
    const std::vector<Word> &obstructions() const { return obstructions_; }
    ObstructionAutomaton automaton() const { return ObstructionAutomaton(alphabet_, obstructions_); }
    bool is_normal(const Word &w) const { return automaton().accepts(w.letters); }
    TruncatedSeries hilbert(unsigned degree) const { return automaton().count(degree); }

    Presentation presentation() const
    {
        Presentation p{alphabet_, {}, FieldSpec{}};
        for (const auto &u : obstructions_) {
            p.relations.emplace_back(u, Rational(1));
        }
        return p;
    }

    std::string render() const
    {
        std::string out;
        for (const auto &u : obstructions_) {
            out += (out.empty() ? "" : ", ") + alphabet_.render(u);
        }
        return "{" + out + "}";
    }

private:
    Alphabet alphabet_;
    std::vector<Word> obstructions_;
};

// Words that are a proper suffix of b and a proper prefix of c, shortest first.
inline std::vector<Word> overlap_set(const Alphabet &alphabet, const Word &b, const Word &c)
{
    if (b.empty() || c.empty()) {
        throw std::invalid_argument("overlap of an empty word");
    }
    std::vector<Word> out;
    const std::size_t maxk = std::min(b.length(), c.length());
    for (std::size_t k = 1; k < maxk; ++k) {
        if (b.letters.compare(b.length() - k, k, c.letters, 0, k) == 0) {
            out.push_back(alphabet.word(c.letters.substr(0, k)));
        }
    }
    return out;
}

struct FreenessReport {
    enum class Violation { none, subword, overlap };
    bool free = true;
    Violation violation = Violation::none;
    std::size_t first = 0;
    std::size_t second = 0;
    Word witness;

    std::string describe(const Alphabet &alphabet, const std::vector<Word> &words) const
    {
        switch (violation) {
        case Violation::none:
            return "combinatorially free";
        case Violation::subword:
            return "'" + alphabet.render(words[first]) + "' is a subword of '" + alphabet.render(words[second]) + "'";
        case Violation::overlap:
            return "'" + alphabet.render(words[first]) + "' and '" + alphabet.render(words[second]) + "' overlap in '" +
                   alphabet.render(witness) + "'";
        }
        return {};
    }
};

inline FreenessReport is_combinatorially_free(const Alphabet &alphabet, const std::vector<Word> &words)
{
    FreenessReport report;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].empty()) {
            throw std::invalid_argument("empty word in a monomial set");
        }
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i != j && words[j].letters.find(words[i].letters) != std::string::npos) {
                return {false, FreenessReport::Violation::subword, i, j, words[i]};
            }
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            auto ov = overlap_set(alphabet, words[i], words[j]);
            if (!ov.empty()) {
                return {false, FreenessReport::Violation::overlap, i, j, ov.front()};
            }
        }
    }
    return report;
}

// Table c[j][i] of rank-j, degree-i counts.
class BigradedSeries
{
public:
    BigradedSeries() = default;
    BigradedSeries(unsigned max_rank, unsigned max_degree)
        : max_rank_(max_rank), max_degree_(max_degree), c_(max_rank + 1, std::vector<Integer>(max_degree + 1))
    {
    }

    unsigned max_rank() const { return max_rank_; }
    unsigned max_degree() const { return max_degree_; }
    Integer &at(unsigned rank, unsigned degree) { return c_.at(rank).at(degree); }
    const Integer &at(unsigned rank, unsigned degree) const { return c_.at(rank).at(degree); }

    TruncatedSeries row(unsigned rank) const
    {
        TruncatedSeries out(max_degree_);
        if (rank <= max_rank_) {
            for (unsigned i = 0; i <= max_degree_; ++i) {
                out[i] = Rational(c_[rank][i]);
            }
        }
        return out;
    }

    // sum_j c_j^i s^j t^i as a series in t.
    TruncatedSeries at_s(const Rational &s) const
    {
        TruncatedSeries out(max_degree_);
        Rational sj = 1;
        for (unsigned j = 0; j <= max_rank_; ++j) {
            for (unsigned i = 0; i <= max_degree_; ++i) {
                out[i] += sj * Rational(c_[j][i]);
            }
            sj *= s;
        }
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(),
                           [](const auto &r) { return std::all_of(r.begin(), r.end(), [](const Integer &v) { return v == 0; }); });
    }

    // First (rank, degree) where the tables differ within the common bounds.
    std::optional<std::pair<unsigned, unsigned>> first_difference(const BigradedSeries &o) const
    {
        const unsigned r = std::min(max_rank_, o.max_rank_), d = std::min(max_degree_, o.max_degree_);
        for (unsigned i = 0; i <= d; ++i) {
            for (unsigned j = 0; j <= r; ++j) {
                if (c_[j][i] != o.c_[j][i]) {
                    return std::make_pair(j, i);
                }
            }
        }
        return std::nullopt;
    }

    BigradedSeries truncate(unsigned max_rank, unsigned max_degree) const
    {
        BigradedSeries out(std::min(max_rank, max_rank_), std::min(max_degree, max_degree_));
        for (unsigned j = 0; j <= out.max_rank_; ++j) {
            for (unsigned i = 0; i <= out.max_degree_; ++i) {
                out.c_[j][i] = c_[j][i];
            }
        }
        return out;
    }

    friend BigradedSeries operator+(const BigradedSeries &a, const BigradedSeries &b) { return combine(a, b, 1); }
    friend BigradedSeries operator-(const BigradedSeries &a, const BigradedSeries &b) { return combine(a, b, -1); }
    friend BigradedSeries operator*(const BigradedSeries &a, const BigradedSeries &b)
    {
        BigradedSeries out(std::min(a.max_rank_, b.max_rank_), std::min(a.max_degree_, b.max_degree_));
        for (unsigned ja = 0; ja <= out.max_rank_; ++ja) {
            for (unsigned ia = 0; ia <= out.max_degree_; ++ia) {
                if (a.c_[ja][ia] == 0) {
                    continue;
                }
                for (unsigned jb = 0; ja + jb <= out.max_rank_; ++jb) {
                    for (unsigned ib = 0; ia + ib <= out.max_degree_; ++ib) {
                        out.c_[ja + jb][ia + ib] += a.c_[ja][ia] * b.c_[jb][ib];
                    }
                }
            }
        }
        return out;
    }
    friend bool operator==(const BigradedSeries &a, const BigradedSeries &b)
    {
        return a.max_rank_ == b.max_rank_ && a.max_degree_ == b.max_degree_ && a.c_ == b.c_;
    }

    // Monomial s^rank t^degree.
    static BigradedSeries monomial(unsigned rank, unsigned degree, unsigned max_rank, unsigned max_degree)
    {
        BigradedSeries out(max_rank, max_degree);
        if (rank <= max_rank && degree <= max_degree) {
            out.c_[rank][degree] = 1;
        }
        return out;
    }

private:
    static BigradedSeries combine(const BigradedSeries &a, const BigradedSeries &b, int sign)
    {
        BigradedSeries out(std::min(a.max_rank_, b.max_rank_), std::min(a.max_degree_, b.max_degree_));
        for (unsigned j = 0; j <= out.max_rank_; ++j) {
            for (unsigned i = 0; i <= out.max_degree_; ++i) {
                out.c_[j][i] = a.c_[j][i] + sign * b.c_[j][i];
            }
        }
        return out;
    }

    unsigned max_rank_ = 0;
    unsigned max_degree_ = 0;
    std::vector<std::vector<Integer>> c_;
};

struct Chain {
    Word word;
    unsigned rank = 0;
    std::size_t tail_length = 0;

    Word tail(const Alphabet &alphabet) const { return alphabet.subword(word, word.length() - tail_length, std::string::npos); }
};

struct ChainEnumeration {
    BigradedSeries table;
    std::vector<Chain> chains; // sorted by rank, then deglex
    bool list_complete = true;
};

namespace detail
{

// Tails t such that r t = v u with u an obstruction, len v < len r, and no
// other obstruction occurrence in r t.
class ChainExtender
{
public:
    explicit ChainExtender(const MonomialAlgebra &m) : m_(m), automaton_(m.automaton()) {}

    const std::vector<std::string> &extensions(const std::string &r)
    {
        auto it = memo_.find(r);
        if (it != memo_.end()) {
            return it->second;
        }
        std::vector<std::string> out;
        for (const auto &u : m_.obstructions()) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                const std::size_t overlap = r.size() - i;
                if (u.length() <= overlap || u.letters.compare(0, overlap, r, i, overlap) != 0) {
                    continue;
                }
                std::string t = u.letters.substr(overlap);
                const std::string rt = r + t;
                if (automaton_.accepts(std::string_view(rt).substr(0, rt.size() - 1))) {
                    out.push_back(std::move(t));
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return memo_.emplace(r, std::move(out)).first->second;
    }

private:
    const MonomialAlgebra &m_;
    ObstructionAutomaton automaton_;
    std::map<std::string, std::vector<std::string>> memo_;
};

} // namespace detail

// Anick chains of rank <= max_rank and degree <= max_degree.  The count table
// is always exact; the explicit list is kept while it has at most list_cap
// entries.
inline ChainEnumeration enumerate_chains(const MonomialAlgebra &m, unsigned max_rank, unsigned max_degree,
                                         std::size_t list_cap = 200'000)
{
    const Alphabet &alpha = m.alphabet();
    ChainEnumeration out{BigradedSeries(max_rank, max_degree), {}, true};
    detail::ChainExtender extender(m);
    // (tail, degree) -> number of chains of the current rank.
    std::map<std::pair<std::string, unsigned>, Integer> frontier;
    std::vector<Chain> current;
    for (std::size_t l = 0; l < alpha.size(); ++l) {
        const Word w = alpha.letter(static_cast<Letter>(l));
        if (w.degree <= max_degree) {
            frontier[{w.letters, w.degree}] += 1;
            current.push_back(Chain{w, 0, 1});
        }
    }
    for (unsigned rank = 0; rank <= max_rank && !frontier.empty(); ++rank) {
        for (const auto &[key, count] : frontier) {
            out.table.at(rank, key.second) += count;
        }
        if (out.list_complete) {
            std::sort(current.begin(), current.end(), [](const Chain &a, const Chain &b) { return a.word < b.word; });
            out.chains.insert(out.chains.end(), current.begin(), current.end());
        }
        if (rank == max_rank) {
            break;
        }
        std::map<std::pair<std::string, unsigned>, Integer> next;
        for (const auto &[key, count] : frontier) {
            for (const auto &t : extender.extensions(key.first)) {
                const unsigned d = key.second + alpha.degree_of(t);
                if (d <= max_degree) {
                    next[{t, d}] += count;
                }
            }
        }
        std::vector<Chain> grown;
        if (out.list_complete) {
            for (const auto &c : current) {
                for (const auto &t : extender.extensions(c.tail(alpha).letters)) {
                    Word w = c.word * alpha.word(t);
                    if (w.degree > max_degree) {
                        continue;
                    }
                    if (out.chains.size() + grown.size() >= list_cap) {
                        out.list_complete = false;
                        break;
                    }
                    grown.push_back(Chain{std::move(w), rank + 1, t.size()});
                }
                if (!out.list_complete) {
                    break;
                }
            }
            if (!out.list_complete) {
                grown.clear();
            }
        }
        frontier = std::move(next);
        current = std::move(grown);
    }
    return out;
}

// H_0 = 1 and H_{n+1} = degree series of rank-n chains.
inline std::vector<TruncatedSeries> tor_series(const MonomialAlgebra &m, unsigned max_rank, unsigned max_degree)
{
    const auto chains = enumerate_chains(m, max_rank, max_degree, 0);
    std::vector<TruncatedSeries> out{TruncatedSeries::one(max_degree)};
    for (unsigned n = 0; n <= max_rank; ++n) {
        out.push_back(chains.table.row(n));
    }
    return out;
}

struct EulerReport {
    unsigned degree = 0;
    TruncatedSeries hilbert;   // normal-word counts M(t)
    TruncatedSeries chain_side; // 1 - C(-1, t)
    TruncatedSeries product;   // M(t) (1 - C(-1, t)), equal to 1
};

// Checks M(t) (1 - C(-1,t)) = 1 to degree D; a failure is an internal error.
inline EulerReport euler_check(const MonomialAlgebra &m, unsigned degree)
{
    const auto chains = enumerate_chains(m, degree, degree, 0);
    EulerReport r;
    r.degree = degree;
    r.hilbert = m.hilbert(degree);
    r.chain_side = TruncatedSeries::one(degree) - chains.table.at_s(Rational(-1));
    r.product = r.hilbert * r.chain_side;
    if (!(r.product == TruncatedSeries::one(degree))) {
        const auto diff = series_compare(r.product, TruncatedSeries::one(degree));
        throw InternalInconsistency("Euler identity fails at degree " + std::to_string(diff.first_difference.value_or(0)) +
                                    " for obstructions " + m.render());
    }
    return r;
}

struct PartialEulerForm {
    unsigned top_rank = 0;          // chains of ranks 0..top_rank enter the sum
    TruncatedSeries value;          // R(t) (1 - C_0 + C_1 - ... +- C_top)
    bool lower_bound = true;        // value >= 1 (odd top rank) or value <= 1
    bool holds = true;
    bool equality = true;           // value == 1 to the degree bound
    bool next_rank_vanishes = true; // no chains of rank top_rank + 1 to the degree bound
};

struct PartialEulerReport {
    unsigned index = 0;
    unsigned degree = 0;
    PartialEulerForm lower; // top rank 2i-1, value >= 1
    PartialEulerForm upper; // top rank 2i, value <= 1
};

// Alternating truncations of the Euler characteristic of the minimal
// resolution.  Equality in a form holds exactly when the first omitted chain
// rank is empty.
inline PartialEulerReport partial_euler_bounds(const MonomialAlgebra &m, unsigned index, unsigned degree)
{
    if (index == 0) {
        throw std::invalid_argument("partial Euler index must be at least 1");
    }
    const unsigned top = 2 * index + 1;
    const auto chains = enumerate_chains(m, top, degree, 0);
    const TruncatedSeries hilbert = m.hilbert(degree);
    const TruncatedSeries one = TruncatedSeries::one(degree);
    auto form = [&](unsigned top_rank, bool lower) {
        PartialEulerForm f;
        f.top_rank = top_rank;
        f.lower_bound = lower;
        TruncatedSeries sum = one;
        for (unsigned j = 0; j <= top_rank; ++j) {
            const TruncatedSeries row = chains.table.row(j);
            sum = (j % 2 == 0) ? sum - row : sum + row;
        }
        f.value = hilbert * sum;
        const auto cmp = series_compare(f.value, one);
        f.holds = lower ? (cmp.relation == OrderingReport::Relation::greater_equal ||
                           cmp.relation == OrderingReport::Relation::equal)
                        : (cmp.relation == OrderingReport::Relation::less_equal ||
                           cmp.relation == OrderingReport::Relation::equal);
        f.equality = cmp.relation == OrderingReport::Relation::equal;
        f.next_rank_vanishes = chains.table.row(top_rank + 1).is_zero();
        if (!f.holds || f.equality != f.next_rank_vanishes) {
            throw InternalInconsistency("partial Euler bound of top rank " + std::to_string(top_rank) +
                                        " inconsistent for obstructions " + m.render());
        }
        return f;
    };
    PartialEulerReport r;
    r.index = index;
    r.degree = degree;
    r.lower = form(2 * index - 1, true);
    r.upper = form(2 * index, false);
    return r;
}

// Certified rational Hilbert series of a monomial algebra with finitely many
// obstructions.
inline RationalSeries ufnarovski_rational_series(const MonomialAlgebra &m) { return m.automaton().rational_series(); }

// Free product of monomial algebras on disjoint alphabets: letters of b are
// renumbered after those of a.
inline MonomialAlgebra free_product(const MonomialAlgebra &a, const MonomialAlgebra &b)
{
    std::vector<GeneratorSpec> gens = a.alphabet().generators();
    for (const auto &g : b.alphabet().generators()) {
        if (a.alphabet().find(g.name)) {
            throw std::invalid_argument("generator '" + g.name + "' occurs in both factors");
        }
        gens.push_back(g);
    }
    const Alphabet alpha(gens);
    std::vector<Word> obs;
    for (const auto &u : a.obstructions()) {
        obs.push_back(alpha.word(u.letters));
    }
    const auto shift = static_cast<char>(a.alphabet().size());
    for (const auto &u : b.obstructions()) {
        std::string s = u.letters;
        for (auto &c : s) {
            c = static_cast<char>(c + shift);
        }
        obs.push_back(alpha.word(s));
    }
    return MonomialAlgebra(alpha, std::move(obs));
}

struct InsulationReport {
    bool ok = true;
    std::string failure;
    std::size_t pairs_checked = 0;
    std::optional<Word> witness;
};

// Brute-force check of the insulation property of p relative to the letters Y
// inside the monomial algebra m.
inline InsulationReport verify_insulation(const MonomialAlgebra &m, const Word &p, const std::vector<Letter> &ys)
{
    const Alphabet &alpha = m.alphabet();
    const auto automaton = m.automaton();
    InsulationReport r;
    if (!automaton.accepts(p.letters)) {
        r.ok = false;
        r.failure = "p vanishes: it contains an obstruction";
        return r;
    }
    auto pij = [&](Letter i, Letter j) { return alpha.letter(i) * p * alpha.letter(j); };
    for (Letter i : ys) {
        for (Letter j : ys) {
            const Word w = pij(i, j);
            if (!automaton.accepts(w.letters)) {
                r.ok = false;
                r.failure = "p_" + alpha[i].name + alpha[j].name + " vanishes";
                r.witness = w;
                return r;
            }
        }
    }
    for (Letter i : ys) {
        for (Letter j : ys) {
            for (Letter k : ys) {
                for (Letter l : ys) {
                    ++r.pairs_checked;
                    const auto ov = overlap_set(alpha, pij(i, j), pij(k, l));
                    const bool expected_single = j == k;
                    const bool good = expected_single ? (ov.size() == 1 && ov.front() == alpha.letter(j)) : ov.empty();
                    if (!good) {
                        r.ok = false;
                        r.failure = "p_" + alpha[i].name + alpha[j].name + " and p_" + alpha[k].name + alpha[l].name +
                                    (expected_single ? " do not overlap in exactly the shared letter"
                                                     : " overlap although the inner letters differ");
                        for (const auto &w : ov) {
                            if (!(w == alpha.letter(j))) {
                                r.witness = w;
                                break;
                            }
                        }
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

struct InsulatedMonomial {
    MonomialAlgebra product; // A * B
    Word p;
    unsigned q = 0;
    unsigned construction = 0; // 1: one generator in B, 2: several
    std::vector<Letter> ys;   // generators of B inside the product alphabet
    InsulationReport report;

    unsigned degree() const { return p.degree; }
    std::vector<Word> inserted_words() const
    {
        std::vector<Word> out;
        const Alphabet &alpha = product.alphabet();
        for (Letter i : ys) {
            for (Letter j : ys) {
                out.push_back(alpha.letter(i) * p * alpha.letter(j));
            }
        }
        return out;
    }
    // The monomial algebra (A * B) / (p_ij).
    MonomialAlgebra quotient() const
    {
        std::vector<Word> obs = product.obstructions();
        auto extra = inserted_words();
        obs.insert(obs.end(), extra.begin(), extra.end());
        return MonomialAlgebra(product.alphabet(), std::move(obs));
    }
};

namespace detail
{

inline std::string repeat(const std::string &s, unsigned n)
{
    std::string out;
    for (unsigned i = 0; i < n; ++i) {
        out += s;
    }
    return out;
}

} // namespace detail

// Builds the insulated monomial p from a word n = x n' x of A * B, with x a
// generator of A.  B must have dimension at least 3.  The result carries the
// brute-force insulation check; callers must inspect report.ok.
inline InsulatedMonomial insulated_monomial(const MonomialAlgebra &a, const MonomialAlgebra &b, const std::string &n_text)
{
    const auto b_counts = b.hilbert(2 * b.alphabet().max_degree());
    Rational dim_b = 0;
    for (unsigned i = 0; i <= b_counts.degree(); ++i) {
        dim_b += b_counts[i];
    }
    if (dim_b < 3) {
        throw std::invalid_argument("the second factor has dimension " + to_string(dim_b) + ", at least 3 is required");
    }
    InsulatedMonomial out{free_product(a, b), Word{}, 0, 0, {}, {}};
    const Alphabet &alpha = out.product.alphabet();
    const Word n = alpha.parse_word(n_text);
    const std::size_t na = a.alphabet().size();
    if (n.length() < 2 || n.letters.front() != n.letters.back() || static_cast<Letter>(n.letters.front()) >= na) {
        throw std::invalid_argument("n must have the form x n' x with x a generator of the first factor");
    }
    if (!out.product.is_normal(n)) {
        throw std::invalid_argument("n is zero in the free product");
    }
    for (std::size_t l = na; l < alpha.size(); ++l) {
        out.ys.push_back(static_cast<Letter>(l));
    }
    const std::string x(1, n.letters.front());
    if (out.ys.size() == 1) {
        out.construction = 1;
        const std::string y(1, static_cast<char>(out.ys.front()));
        const std::string block = x + y + y;
        unsigned l = 0;
        while (n.letters.compare(l * block.size(), block.size(), block) == 0) {
            ++l;
        }
        const std::string n1 = n.letters.substr(l * block.size());
        out.q = std::max<unsigned>(l, static_cast<unsigned>(n1.size()) + 3) + 1;
        out.p = alpha.word(y + detail::repeat(block, out.q) + n1 + detail::repeat(y + x, out.q));
    } else {
        out.construction = 2;
        const std::string y1(1, static_cast<char>(out.ys[0]));
        const std::string y2(1, static_cast<char>(out.ys[1]));
        out.q = static_cast<unsigned>(n.length()) + 1;
        out.p = alpha.word(detail::repeat(x + y1, out.q) + n.letters + detail::repeat(y2 + x, out.q));
    }
    out.report = verify_insulation(out.product, out.p, out.ys);
    return out;
}

// C'(s,t) = sum_{i>=1} (s t^b)^i C^B(s,t)^{i+1}, truncated.
inline BigradedSeries inserted_chain_series(const MonomialAlgebra &b_algebra, unsigned b, unsigned max_rank,
                                            unsigned max_degree)
{
    const BigradedSeries cb = enumerate_chains(b_algebra, max_rank, max_degree, 0).table;
    const BigradedSeries step = BigradedSeries::monomial(1, b, max_rank, max_degree) * cb;
    BigradedSeries term = step * cb;
    BigradedSeries total(max_rank, max_degree);
    while (!term.is_zero()) {
        total = total + term;
        term = term * step;
    }
    return total;
}

// The same table by direct enumeration: chains of (A * B)/(p_ij) minus those of A * B.
inline BigradedSeries inserted_chain_series_direct(const InsulatedMonomial &ins, unsigned max_rank, unsigned max_degree)
{
    const auto with = enumerate_chains(ins.quotient(), max_rank, max_degree, 0).table;
    const auto without = enumerate_chains(ins.product, max_rank, max_degree, 0).table;
    return with - without;
}

struct AssociatedMonomial {
    MonomialAlgebra algebra;
    bool truncated = false; // obstructions certified only to `degree`
    unsigned degree = 0;
};

template <typename K>
AssociatedMonomial associated_monomial(const QuotientAlgebra<K> &q)
{
    return {MonomialAlgebra(q.alphabet(), q.basis.obstructions()), !q.basis.globally_complete(), q.degree()};
}

} // namespace ncgrowth
