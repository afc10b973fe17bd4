#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include <ncgrowth/automaton.hpp>
#include <ncgrowth/numeric.hpp>
#include <ncgrowth/presentation.hpp>
#include <ncgrowth/series.hpp>
#include <ncgrowth/sparse_echelon.hpp>

namespace ncgrowth
{

// Raised when a proven identity fails: always a bug.
class InternalInconsistency : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

struct CompletionConfig {
    std::size_t max_rules = 100'000;
    // Overlaps beyond the degree bound examined by the global completeness test.
    std::size_t max_global_checks = 50'000;
};

// leading -> tail, i.e. the monic polynomial leading - tail lies in the ideal.
template <typename K>
struct RewriteRule {
    Word leading;
    NCPolynomial<K> tail;

    unsigned degree() const { return leading.degree; }
};

namespace detail
{

template <typename K>
K unit_like(const FieldSpec &field)
{
    return field_element<K>(Rational(1), field);
}

} // namespace detail

// Inter-reduced rewrite system complete up to `complete_to_degree`.
template <typename K>
class GroebnerBasis
{
public:
    GroebnerBasis() = default;
    GroebnerBasis(Alphabet alphabet, FieldSpec field) : alphabet_(std::move(alphabet)), field_(field) {}

    const Alphabet &alphabet() const { return alphabet_; }
    const FieldSpec &field() const { return field_; }
    const std::vector<RewriteRule<K>> &rules() const { return rules_; }
    unsigned complete_to_degree() const { return complete_to_; }
    bool globally_complete() const { return globally_complete_; }
    const std::vector<std::string> &diagnostics() const { return diagnostics_; }

    std::vector<Word> obstructions() const
    {
        std::vector<Word> out;
        out.reserve(rules_.size());
        for (const auto &r : rules_) {
            out.push_back(r.leading);
        }
        return out;
    }

    K one() const { return detail::unit_like<K>(field_); }

    NCPolynomial<K> rule_polynomial(std::size_t i) const
    {
        NCPolynomial<K> p = -rules_[i].tail;
        p.add_term(rules_[i].leading, one());
        return p;
    }

    // (rule index, start position) of the leftmost leading-word occurrence.
    std::optional<std::pair<std::size_t, std::size_t>> find_leading(const Word &w) const
    {
        const std::string &s = w.letters;
        for (std::size_t pos = 0; pos < s.size(); ++pos) {
            for (std::size_t len : lengths_) {
                if (pos + len > s.size()) {
                    break;
                }
                auto it = index_.find(s.substr(pos, len));
                if (it != index_.end()) {
                    return std::make_pair(it->second, pos);
                }
            }
        }
        return std::nullopt;
    }

    bool is_normal(const Word &w) const { return !find_leading(w); }

    // Full normal form.  Certified only for degrees <= complete_to_degree()
    // unless the basis is globally complete.
    NCPolynomial<K> reduce(const NCPolynomial<K> &f) const
    {
        typename NCPolynomial<K>::Terms work = f.terms();
        NCPolynomial<K> result;
        while (!work.empty()) {
            auto it = work.begin();
            const Word w = it->first;
            const K c = it->second;
            work.erase(it);
            auto hit = find_leading(w);
            if (!hit) {
                result.add_term(w, c);
                continue;
            }
            const auto &rule = rules_[hit->first];
            const Word left = alphabet_.subword(w, 0, hit->second);
            const Word right = alphabet_.subword(w, hit->second + rule.leading.length(), std::string::npos);
            for (const auto &[tw, tc] : rule.tail) {
                const Word nw = left * tw * right;
                auto [jt, inserted] = work.try_emplace(nw, c * tc);
                if (!inserted) {
                    jt->second += c * tc;
                    if (is_zero(jt->second)) {
                        work.erase(jt);
                    }
                }
            }
        }
        return result;
    }

    bool certified_for(unsigned degree) const { return globally_complete_ || degree <= complete_to_; }

    // Mutators used by completion.
    void add_rule(RewriteRule<K> rule)
    {
        const std::size_t idx = rules_.size();
        index_.emplace(rule.leading.letters, idx);
        lengths_.insert(std::lower_bound(lengths_.begin(), lengths_.end(), rule.leading.length()), rule.leading.length());
        lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
        rules_.push_back(std::move(rule));
    }
    std::vector<RewriteRule<K>> &mutable_rules() { return rules_; }
    void truncate_rules(std::size_t n)
    {
        rules_.resize(n);
        index_.clear();
        lengths_.clear();
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            index_.emplace(rules_[i].leading.letters, i);
            lengths_.push_back(rules_[i].leading.length());
        }
        std::sort(lengths_.begin(), lengths_.end());
        lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
    }
    void set_complete_to(unsigned d) { complete_to_ = d; }
    void set_globally_complete(bool v) { globally_complete_ = v; }
    void add_diagnostic(std::string msg) { diagnostics_.push_back(std::move(msg)); }

private:
    Alphabet alphabet_;
    FieldSpec field_;
    std::vector<RewriteRule<K>> rules_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> lengths_;
    unsigned complete_to_ = 0;
    bool globally_complete_ = false;
    std::vector<std::string> diagnostics_;
};

// Result of completing a presentation: the basis plus, for every input
// relation, whether it is a minimal generator of the ideal.
template <typename K>
struct Completion {
    GroebnerBasis<K> basis;
    std::vector<bool> relation_minimal;
};

namespace detail
{

struct Overlap {
    Word word;
    std::size_t first;  // rule whose leading word is a prefix of `word`
    std::size_t second; // rule whose leading word is a suffix of `word`
    std::size_t shift;  // start of the second leading word inside `word`

    friend bool operator<(const Overlap &a, const Overlap &b)
    {
        return std::tie(a.word, a.first, a.second, a.shift) < std::tie(b.word, b.first, b.second, b.shift);
    }
};

// All proper overlaps between leading words of rules a and b (a first).
template <typename K>
void overlaps_of(const GroebnerBasis<K> &gb, std::size_t a, std::size_t b, std::map<unsigned, std::vector<Overlap>> &out)
{
    const Word &la = gb.rules()[a].leading;
    const Word &lb = gb.rules()[b].leading;
    const std::size_t maxk = std::min(la.length(), lb.length());
    for (std::size_t k = 1; k < maxk; ++k) {
        if (la.letters.compare(la.length() - k, k, lb.letters, 0, k) == 0) {
            Word w = gb.alphabet().word(la.letters + lb.letters.substr(k));
            const unsigned d = w.degree;
            out[d].push_back(Overlap{std::move(w), a, b, la.length() - k});
        }
    }
}

template <typename K>
NCPolynomial<K> s_polynomial(const GroebnerBasis<K> &gb, const Overlap &o)
{
    const auto &alpha = gb.alphabet();
    const auto &ra = gb.rules()[o.first];
    const auto &rb = gb.rules()[o.second];
    // (la - ta) g - f (lb - tb) = f tb - ta g
    const Word g = alpha.subword(o.word, ra.leading.length(), std::string::npos);
    const Word f = alpha.subword(o.word, 0, o.shift);
    NCPolynomial<K> s = rb.tail.sandwich(f, Word{});
    s -= ra.tail.sandwich(Word{}, g);
    return s;
}

} // namespace detail

// Degree-by-degree completion of a homogeneous ideal.  Within a degree the
// S-polynomials are processed first (sorted by overlap word), then the input
// relations in listed order; a relation that survives reduction is a minimal
// generator.
template <typename K>
Completion<K> complete(const Presentation &pres, unsigned max_degree, const CompletionConfig &config = {})
{
    pres.validate(1);
    Completion<K> out{GroebnerBasis<K>(pres.alphabet, pres.field), std::vector<bool>(pres.relations.size(), false)};
    auto &gb = out.basis;
    std::vector<NCPolynomial<K>> rels;
    for (const auto &r : pres.relations) {
        rels.push_back(r.template map_coefficients<K>([&](const Rational &c) { return field_element<K>(c, pres.field); }));
    }
    std::map<unsigned, std::vector<detail::Overlap>> pending;
    unsigned done = 0;
    bool capped = false;
    for (unsigned n = 1; n <= max_degree && !capped; ++n) {
        const std::size_t first_rule_of_degree = gb.rules().size();
        auto insert_candidate = [&](const NCPolynomial<K> &cand) -> bool {
            NCPolynomial<K> red = gb.reduce(cand);
            if (red.is_zero()) {
                return false;
            }
            red = red.monic();
            RewriteRule<K> rule{red.leading_word(), NCPolynomial<K>{}};
            for (const auto &[w, c] : red) {
                if (!(w == rule.leading)) {
                    rule.tail.add_term(w, -c);
                }
            }
            // Back-substitute into same-degree tails to stay inter-reduced.
            for (std::size_t i = first_rule_of_degree; i < gb.rules().size(); ++i) {
                auto &other = gb.mutable_rules()[i];
                const K c = other.tail.coeff(rule.leading);
                if (!is_zero(c)) {
                    other.tail.add_term(rule.leading, -c);
                    other.tail += rule.tail.scaled(c);
                }
            }
            gb.add_rule(std::move(rule));
            return true;
        };
        if (auto it = pending.find(n); it != pending.end()) {
            auto overlaps = std::move(it->second);
            pending.erase(it);
            std::sort(overlaps.begin(), overlaps.end());
            for (const auto &o : overlaps) {
                insert_candidate(detail::s_polynomial(gb, o));
            }
        }
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (rels[i].degree() == n && !rels[i].is_zero()) {
                out.relation_minimal[i] = insert_candidate(rels[i]);
            }
        }
        if (gb.rules().size() > config.max_rules) {
            gb.truncate_rules(first_rule_of_degree);
            gb.add_diagnostic("rule cap " + std::to_string(config.max_rules) + " exceeded at degree " +
                              std::to_string(n) + "; completion stopped at degree " + std::to_string(n - 1));
            for (std::size_t i = 0; i < rels.size(); ++i) {
                if (rels[i].degree() >= n) {
                    out.relation_minimal[i] = false;
                }
            }
            capped = true;
            break;
        }
        for (std::size_t i = first_rule_of_degree; i < gb.rules().size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                detail::overlaps_of(gb, i, j, pending);
                if (i != j) {
                    detail::overlaps_of(gb, j, i, pending);
                }
            }
        }
        done = n;
    }
    gb.set_complete_to(done);
    if (capped) {
        return out;
    }
    bool complete = pres.max_relation_degree() <= max_degree;
    if (!complete) {
        gb.add_diagnostic("relations above the degree bound were not processed");
    }
    std::size_t checks = 0;
    for (auto &[d, overlaps] : pending) {
        if (!complete) {
            break;
        }
        for (const auto &o : overlaps) {
            if (++checks > config.max_global_checks) {
                gb.add_diagnostic("global completeness check abandoned after " +
                                  std::to_string(config.max_global_checks) + " overlaps");
                complete = false;
                break;
            }
            if (!gb.reduce(detail::s_polynomial(gb, o)).is_zero()) {
                complete = false;
                break;
            }
        }
    }
    gb.set_globally_complete(complete);
    return out;
}

template <typename K>
GroebnerBasis<K> complete_to_degree(const Presentation &pres, unsigned max_degree, const CompletionConfig &config = {})
{
    return complete<K>(pres, max_degree, config).basis;
}

template <typename K>
struct NormalFormResult {
    NCPolynomial<K> value;
    bool certified = true;
};

template <typename K>
NormalFormResult<K> normal_form(const NCPolynomial<K> &f, const GroebnerBasis<K> &gb)
{
    return {gb.reduce(f), gb.certified_for(f.degree())};
}

// R = F/I with its Hilbert series to the completion degree.
template <typename K>
struct QuotientAlgebra {
    Presentation presentation;
    GroebnerBasis<K> basis;
    TruncatedSeries hilbert;
    std::optional<RationalSeries> certified;
    std::vector<bool> relation_minimal;
    unsigned requested_degree = 0;

    unsigned degree() const { return hilbert.degree(); }
    bool truncated() const { return degree() < requested_degree; }
    const Alphabet &alphabet() const { return presentation.alphabet; }

    std::vector<std::size_t> dependent_relations() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < relation_minimal.size(); ++i) {
            if (!relation_minimal[i]) {
                out.push_back(i);
            }
        }
        return out;
    }
    std::vector<NCPolynomial<Rational>> minimal_relations() const
    {
        std::vector<NCPolynomial<Rational>> out;
        for (std::size_t i = 0; i < relation_minimal.size(); ++i) {
            if (relation_minimal[i]) {
                out.push_back(presentation.relations[i]);
            }
        }
        return out;
    }
    ObstructionAutomaton automaton() const { return ObstructionAutomaton(alphabet(), basis.obstructions()); }
};

template <typename K>
QuotientAlgebra<K> hilbert_series(const Presentation &pres, unsigned max_degree, const CompletionConfig &config = {})
{
    auto comp = complete<K>(pres, max_degree, config);
    QuotientAlgebra<K> q{pres, std::move(comp.basis), TruncatedSeries(), std::nullopt, std::move(comp.relation_minimal),
                         max_degree};
    const ObstructionAutomaton automaton(pres.alphabet, q.basis.obstructions());
    const unsigned d = q.basis.globally_complete() ? max_degree : q.basis.complete_to_degree();
    q.hilbert = automaton.count(d);
    if (q.basis.globally_complete()) {
        q.certified = automaton.rational_series();
    }
    return q;
}

// u(t): number of minimal ideal generators by degree.
template <typename K>
TruncatedSeries minimal_relation_series(const QuotientAlgebra<K> &q)
{
    TruncatedSeries u(q.degree());
    for (std::size_t i = 0; i < q.relation_minimal.size(); ++i) {
        const unsigned d = q.presentation.relations[i].degree();
        if (q.relation_minimal[i] && d <= u.degree()) {
            u[d] += 1;
        }
    }
    return u;
}

// dim ker d2 by degree: d2 sends c r_i to sum_j c a_i^j u_j where the minimal
// relation f_i = sum_j a_i^j x_j.
template <typename K>
TruncatedSeries omega3_series(const QuotientAlgebra<K> &q, unsigned max_degree)
{
    if (max_degree > q.degree()) {
        throw std::invalid_argument("omega3 degree exceeds the certified Hilbert series degree");
    }
    const auto &alpha = q.alphabet();
    const auto normal = q.automaton().words(max_degree);
    std::vector<std::unordered_map<std::string, std::size_t>> position(max_degree + 1);
    for (unsigned d = 0; d <= max_degree; ++d) {
        for (std::size_t i = 0; i < normal[d].size(); ++i) {
            position[d].emplace(normal[d][i].letters, i);
        }
    }
    struct Minimal {
        unsigned degree;
        std::vector<NCPolynomial<K>> parts;
    };
    std::vector<Minimal> minimal;
    for (const auto &f : q.minimal_relations()) {
        auto fk = f.template map_coefficients<K>([&](const Rational &c) { return field_element<K>(c, q.presentation.field); });
        minimal.push_back({f.degree(), right_decomposition(fk, alpha)});
    }
    TruncatedSeries out(max_degree);
    for (unsigned n = 1; n <= max_degree; ++n) {
        // Column blocks: generator j owns the normal words of degree n - deg x_j.
        std::vector<std::size_t> offset(alpha.size() + 1, 0);
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            const unsigned dj = alpha.degree(static_cast<Letter>(j));
            offset[j + 1] = offset[j] + (dj <= n ? normal[n - dj].size() : 0);
        }
        SparseEchelon<K> echelon;
        std::size_t rows = 0;
        for (const auto &m : minimal) {
            if (m.degree > n) {
                continue;
            }
            for (const auto &w : normal[n - m.degree]) {
                ++rows;
                typename SparseEchelon<K>::Row row;
                for (std::size_t j = 0; j < alpha.size(); ++j) {
                    if (m.parts[j].is_zero()) {
                        continue;
                    }
                    const unsigned dj = alpha.degree(static_cast<Letter>(j));
                    const auto image = q.basis.reduce(m.parts[j].sandwich(w, Word{}));
                    for (const auto &[word, c] : image) {
                        row.emplace(offset[j] + position[n - dj].at(word.letters), c);
                    }
                }
                echelon.insert(std::move(row));
            }
        }
        out[n] = static_cast<long>(rows - echelon.rank());
    }
    return out;
}

// R(t)(1 - g(t) + u(t)) - 1; nonnegative by the Golod-Shafarevich inequality.
inline TruncatedSeries gs_slack(const TruncatedSeries &hilbert, const TruncatedSeries &generators,
                                const TruncatedSeries &relations)
{
    const unsigned d = hilbert.degree();
    TruncatedSeries factor = TruncatedSeries::one(d) - generators.truncate(d) + relations.truncate(d);
    TruncatedSeries slack = hilbert * factor - TruncatedSeries::one(d);
    if (!slack.nonnegative()) {
        throw InternalInconsistency("negative Golod-Shafarevich slack coefficient");
    }
    return slack;
}

template <typename K>
TruncatedSeries gs_slack(const QuotientAlgebra<K> &q)
{
    return gs_slack(q.hilbert, q.alphabet().generator_series(q.degree()), minimal_relation_series(q));
}

} // namespace ncgrowth
