#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <ncgrowth/automaton.hpp>
#include <ncgrowth/chains.hpp>
#include <ncgrowth/groebner.hpp>
#include <ncgrowth/numeric.hpp>
#include <ncgrowth/presentation.hpp>
#include <ncgrowth/series.hpp>

namespace ncgrowth
{

// Runs fn.template operator()<K>() with K the coefficient type of the field.
template <typename F>
decltype(auto) dispatch_field(const FieldSpec &field, F &&fn)
{
    if (field.rational()) {
        return fn.template operator()<Rational>();
    }
    return fn.template operator()<ModP>();
}

// Field-erased summary of a completed quotient.
struct AlgebraSeries {
    TruncatedSeries hilbert;
    std::optional<RationalSeries> certified;
    bool globally_complete = false;
    unsigned requested_degree = 0;
    std::vector<bool> relation_minimal;
    TruncatedSeries relation_series; // u(t)
    std::vector<Word> obstructions;
    std::vector<std::string> diagnostics;

    unsigned degree() const { return hilbert.degree(); }
    bool truncated() const { return degree() < requested_degree; }
};

template <typename K>
AlgebraSeries summarize(const QuotientAlgebra<K> &q)
{
    return {q.hilbert,
            q.certified,
            q.basis.globally_complete(),
            q.requested_degree,
            q.relation_minimal,
            minimal_relation_series(q),
            q.basis.obstructions(),
            q.basis.diagnostics()};
}

inline AlgebraSeries algebra_series(const Presentation &pres, unsigned degree, const CompletionConfig &config = {})
{
    return dispatch_field(pres.field, [&]<typename K>() { return summarize(hilbert_series<K>(pres, degree, config)); });
}

// A real number known exactly, up to an interval, only from below, or infinite.
struct RealValue {
    enum class Kind { exact, interval, lower_bound, infinite };
    Kind kind = Kind::exact;
    Rational lower;
    Rational upper;

    static RealValue exact(Rational v) { return {Kind::exact, v, v}; }
    static RealValue interval(Rational lo, Rational hi) { return {Kind::interval, std::move(lo), std::move(hi)}; }
    static RealValue at_least(Rational lo) { return {Kind::lower_bound, lo, lo}; }
    static RealValue infinite() { return {Kind::infinite, 0, 0}; }

    std::string kind_name() const
    {
        switch (kind) {
        case Kind::exact:
            return "exact";
        case Kind::interval:
            return "interval";
        case Kind::lower_bound:
            return "lower-bound";
        case Kind::infinite:
            return "infinite";
        }
        return "?";
    }
    std::string to_string() const
    {
        switch (kind) {
        case Kind::exact:
            return ncgrowth::to_string(lower);
        case Kind::interval:
            return "[" + ncgrowth::to_string(lower) + ", " + ncgrowth::to_string(upper) + "]";
        case Kind::lower_bound:
            return ">= " + ncgrowth::to_string(lower);
        case Kind::infinite:
            return "inf";
        }
        return "?";
    }
};

struct BoundReport {
    std::string name;
    RealValue left;
    RealValue right;
    std::string relation; // "=", ">", "<", ">=-to-degree", "?"
    bool certified = false;
    std::vector<std::string> notes;
};

namespace detail
{

// Number of distinct real roots of p in (lo, hi].
inline int roots_in(const Polynomial &p, const Rational &lo, const Rational &hi)
{
    if (p.degree() < 1) {
        return 0;
    }
    const Polynomial sq = divmod(p, gcd(p, p.derivative())).first;
    const auto chain = sturm_chain(sq);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// Whether the root of `p` isolated in [lo, hi] is also a root of `q`.
inline bool shares_isolated_root(const Polynomial &p, const PositiveRoot &root, const Polynomial &q)
{
    if (q.is_zero()) {
        return true;
    }
    const Polynomial g = gcd(p, q);
    if (g.degree() < 1) {
        return false;
    }
    if (root.exact()) {
        return ncgrowth::is_zero(g(root.lower));
    }
    return ncgrowth::is_zero(g(root.lower)) || roots_in(g, root.lower, root.upper) > 0;
}

inline std::string ordinal_relation(int cmp) { return cmp == 0 ? "=" : (cmp > 0 ? ">" : "<"); }

} // namespace detail

// ---------------------------------------------------------------------------
// Strong freeness

struct RouteResult {
    std::string name;
    bool applicable = false;
    bool refuted = false;
    unsigned degree = 0; // first failure degree, or the verification bound
    bool exact = false;  // degree-independent conclusion
    std::string detail;
};

struct StronglyFreeVerdict {
    enum class Status { verified, refuted };
    Status status = Status::verified;
    unsigned degree = 0;
    bool exact = false;
    std::vector<RouteResult> routes;
    TruncatedSeries slack;
    TruncatedSeries omega3;
    std::vector<std::size_t> dependent_relations;
    std::vector<std::string> warnings;

    bool refuted() const { return status == Status::refuted; }
    std::string status_name() const
    {
        if (status == Status::refuted) {
            return "refuted";
        }
        return exact ? "strongly-free" : "verified-to-degree";
    }
    const RouteResult *route(const std::string &name) const
    {
        for (const auto &r : routes) {
            if (r.name == name) {
                return &r;
            }
        }
        return nullptr;
    }
};

struct StronglyFreeConfig {
    CompletionConfig completion;
    bool omega3 = true; // the kernel route is the most expensive one
};

namespace detail
{

inline RouteResult series_route(std::string name, const TruncatedSeries &s)
{
    RouteResult r{std::move(name), true, false, s.degree(), false, {}};
    if (auto f = s.first_nonzero()) {
        r.refuted = true;
        r.degree = *f;
        r.detail = "coefficient " + to_string(s[*f]) + " at degree " + std::to_string(*f);
    } else {
        r.detail = "zero to degree " + std::to_string(s.degree());
    }
    return r;
}

// Per-degree Govorov (an) values (s a_{n-1} - a_n) / a_{n-l}.
inline std::vector<std::pair<unsigned, Rational>> govorov_an_values(const TruncatedSeries &a, unsigned s, unsigned l)
{
    std::vector<std::pair<unsigned, Rational>> out;
    for (unsigned n = std::max(l, 1U); n <= a.degree(); ++n) {
        if (sgn(a[n - l]) > 0) {
            out.emplace_back(n, (Rational(s) * a[n - 1] - a[n]) / a[n - l]);
        }
    }
    return out;
}

inline std::optional<unsigned> uniform_relation_degree(const std::vector<NCPolynomial<Rational>> &rels)
{
    if (rels.empty()) {
        return std::nullopt;
    }
    const unsigned l = rels.front().degree();
    for (const auto &r : rels) {
        if (r.degree() != l) {
            return std::nullopt;
        }
    }
    return l;
}

inline std::vector<NCPolynomial<Rational>> minimal_subset(const Presentation &pres, const std::vector<bool> &minimal)
{
    std::vector<NCPolynomial<Rational>> out;
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
        if (minimal[i]) {
            out.push_back(pres.relations[i]);
        }
    }
    return out;
}

} // namespace detail

// Strong freeness of the relations of `pres` in the free algebra on its
// generators, cross-checked over every applicable route.
inline StronglyFreeVerdict strongly_free(const Presentation &pres, unsigned degree, const StronglyFreeConfig &config = {})
{
    StronglyFreeVerdict v;
    AlgebraSeries alg;
    dispatch_field(pres.field, [&]<typename K>() {
        const auto q = hilbert_series<K>(pres, degree, config.completion);
        alg = summarize(q);
        v.slack = gs_slack(q);
        if (config.omega3) {
            v.omega3 = omega3_series(q, q.degree());
        }
        return 0;
    });
    const unsigned d = alg.degree();
    if (alg.truncated()) {
        v.warnings.push_back("completion stopped at degree " + std::to_string(d) + " below the requested " +
                             std::to_string(degree));
    }
    for (std::size_t i = 0; i < alg.relation_minimal.size(); ++i) {
        if (!alg.relation_minimal[i] && pres.relations[i].degree() <= d) {
            v.dependent_relations.push_back(i);
        }
    }
    if (!v.dependent_relations.empty()) {
        v.warnings.push_back(std::to_string(v.dependent_relations.size()) +
                             " relation(s) are not minimal generators; the verdict concerns the minimal subset");
    }

    v.routes.push_back(detail::series_route("slack", v.slack));
    if (config.omega3) {
        auto r = detail::series_route("omega3", v.omega3);
        if (!(v.omega3 == v.slack)) {
            throw InternalInconsistency("Golod-Shafarevich slack differs from dim ker d2");
        }
        v.routes.push_back(std::move(r));
    }

    const auto minimal = detail::minimal_subset(pres, alg.relation_minimal);
    const auto l = detail::uniform_relation_degree(minimal);
    RouteResult an{"govorov-an", false, false, d, false, {}};
    if (l && pres.alphabet.standard_grading()) {
        an.applicable = true;
        const Rational t = static_cast<long>(minimal.size());
        for (const auto &[n, value] : detail::govorov_an_values(alg.hilbert, static_cast<unsigned>(pres.alphabet.size()), *l)) {
            if (value != t) {
                an.refuted = true;
                an.degree = n;
                an.detail = "value " + to_string(value) + " != " + to_string(t) + " at n = " + std::to_string(n);
                break;
            }
        }
        if (!an.refuted) {
            an.detail = "equality for all n <= " + std::to_string(d);
        }
    } else {
        an.detail = l ? "generators of degree > 1" : "relations of mixed degrees";
    }
    v.routes.push_back(an);

    RouteResult comb{"combinatorial", false, false, d, true, {}};
    if (pres.monomial() && !minimal.empty()) {
        comb.applicable = true;
        std::vector<Word> words;
        for (const auto &f : minimal) {
            words.push_back(f.leading_word());
        }
        const auto report = is_combinatorially_free(pres.alphabet, words);
        comb.detail = report.describe(pres.alphabet, words);
        if (!report.free) {
            comb.refuted = true;
            // Lowest-degree rank-2 chain; rank-2 chains have degree below
            // the sum of two obstruction degrees.
            unsigned cap = 0;
            for (const auto &w : words) {
                cap = std::max(cap, w.degree);
            }
            const MonomialAlgebra m(pres.alphabet, words);
            const auto row = enumerate_chains(m, 2, 2 * cap, 0).table.row(2);
            const auto f = row.first_nonzero();
            if (!f) {
                throw InternalInconsistency("monomial set with an overlap has no rank-2 chain");
            }
            comb.degree = *f;
        }
    } else {
        comb.detail = pres.monomial() ? "no relations" : "relations are not monomial";
    }
    v.routes.push_back(comb);

    // Degree-independent closed-form slack.
    RouteResult closed{"closed-form", false, false, d, true, {}};
    if (alg.certified && alg.globally_complete) {
        closed.applicable = true;
        Polynomial factor = Polynomial::constant(1) - Polynomial::from_series(alg.relation_series.truncate(0));
        std::vector<Rational> coeffs(pres.max_relation_degree() + pres.alphabet.max_degree() + 1);
        coeffs[0] = 1;
        for (const auto &g : pres.alphabet.generators()) {
            coeffs[g.degree] -= 1;
        }
        for (const auto &f : minimal) {
            coeffs[f.degree()] += 1;
        }
        factor = Polynomial(coeffs);
        const RationalSeries slack =
            *alg.certified * RationalSeries::polynomial(factor) - RationalSeries::polynomial(Polynomial::constant(1));
        if (slack.numerator().is_zero()) {
            closed.detail = "slack is identically zero";
        } else {
            closed.refuted = true;
            unsigned k = 0;
            while (ncgrowth::is_zero(slack.numerator().coeff(k))) {
                ++k;
            }
            closed.degree = k;
            closed.detail = "slack = " + slack.to_string();
        }
    } else {
        closed.detail = "no certified closed form";
    }
    v.routes.push_back(closed);

    // Agreement: bounded routes see the same first failure within d; exact
    // routes must be consistent with them.
    std::optional<unsigned> failure;
    for (const auto &r : v.routes) {
        if (!r.applicable) {
            continue;
        }
        const std::optional<unsigned> f = r.refuted ? std::optional<unsigned>(r.degree) : std::nullopt;
        const std::optional<unsigned> within = (f && *f <= d) ? f : std::nullopt;
        if (&r == &v.routes.front()) {
            failure = within;
            continue;
        }
        if (within != failure) {
            throw InternalInconsistency("strong-freeness routes disagree: " + v.routes.front().name + " vs " + r.name);
        }
    }
    v.degree = d;
    v.status = StronglyFreeVerdict::Status::verified;
    if (failure) {
        v.status = StronglyFreeVerdict::Status::refuted;
        v.degree = *failure;
        v.exact = true;
    }
    for (const auto &r : v.routes) {
        if (!r.applicable || !r.exact) {
            continue;
        }
        if (r.refuted && !failure) {
            v.status = StronglyFreeVerdict::Status::refuted;
            v.degree = r.degree;
            v.exact = true;
            failure = r.degree;
        } else if (!r.refuted) {
            if (failure) {
                throw InternalInconsistency("exact route " + r.name + " contradicts a bounded refutation");
            }
            v.exact = true;
        }
    }
    return v;
}

// Strong freeness of `alpha` inside A = F/(ambient relations): compares
// (B * k<alpha>)(t) with A(t), B = A/(alpha).
inline StronglyFreeVerdict strongly_free_in(const Presentation &ambient, const std::vector<NCPolynomial<Rational>> &alpha,
                                            unsigned degree, const StronglyFreeConfig &config = {})
{
    if (ambient.relations.empty()) {
        Presentation p = ambient;
        p.relations = alpha;
        return strongly_free(p, degree, config);
    }
    Presentation joint = ambient;
    joint.relations.insert(joint.relations.end(), alpha.begin(), alpha.end());
    const AlgebraSeries a = algebra_series(ambient, degree, config.completion);
    const AlgebraSeries b = algebra_series(joint, degree, config.completion);
    const unsigned d = std::min(a.degree(), b.degree());
    StronglyFreeVerdict v;
    v.degree = d;
    TruncatedSeries alpha_series(d);
    for (std::size_t i = ambient.relations.size(); i < joint.relations.size(); ++i) {
        const unsigned k = joint.relations[i].degree();
        if (!b.relation_minimal[i] && k <= d) {
            v.dependent_relations.push_back(i - ambient.relations.size());
        }
        if (b.relation_minimal[i] && k <= d) {
            alpha_series[k] += 1;
        }
    }
    // (B * k<alpha>)^{-1} = B^{-1} - alpha(t).
    const TruncatedSeries c = inverse(inverse(b.hilbert.truncate(d)) - alpha_series);
    const auto cmp = series_compare(c, a.hilbert.truncate(d));
    if (cmp.relation == OrderingReport::Relation::less_equal || cmp.relation == OrderingReport::Relation::incomparable) {
        throw InternalInconsistency("free-product series falls below the ambient series");
    }
    v.slack = c - a.hilbert.truncate(d);
    RouteResult r{"free-product", true, false, d, false, {}};
    if (cmp.first_difference) {
        r.refuted = true;
        r.degree = *cmp.first_difference;
        r.detail = "(B * k<alpha>)(t) exceeds A(t) at degree " + std::to_string(r.degree);
        v.status = StronglyFreeVerdict::Status::refuted;
        v.degree = r.degree;
        v.exact = true;
    } else {
        r.detail = "series agree to degree " + std::to_string(d);
    }
    v.routes.push_back(r);
    if (a.truncated() || b.truncated()) {
        v.warnings.push_back("completion truncated below the requested degree");
    }
    return v;
}

// ---------------------------------------------------------------------------
// Govorov bounds

struct GovorovRsReport {
    BoundReport bound;
    unsigned s = 0, l = 0, t = 0;
    RealValue r_at_inverse_s; // R(1/s)
};

inline GovorovRsReport govorov_rs_bound(const Presentation &pres, unsigned degree, const CompletionConfig &config = {})
{
    if (!pres.alphabet.standard_grading()) {
        throw std::invalid_argument("the (Rs) bound needs all generators in degree 1");
    }
    const AlgebraSeries alg = algebra_series(pres, degree, config);
    const auto minimal = detail::minimal_subset(pres, alg.relation_minimal);
    const auto l = detail::uniform_relation_degree(minimal);
    if (!l) {
        throw std::invalid_argument(minimal.empty() ? "the (Rs) bound needs at least one relation"
                                                    : "relations of mixed degrees: use the gs command");
    }
    GovorovRsReport rep;
    rep.s = static_cast<unsigned>(pres.alphabet.size());
    rep.l = *l;
    rep.t = static_cast<unsigned>(minimal.size());
    const Rational x = Rational(1, rep.s);
    const Rational sl = pow(Rational(rep.s), rep.l);
    rep.bound.name = "govorov-rs";
    rep.bound.left = RealValue::exact(rep.t);
    if (alg.certified) {
        try {
            const Rational r = (*alg.certified)(x);
            rep.r_at_inverse_s = RealValue::exact(r);
            rep.bound.right = RealValue::exact(sl / r);
            rep.bound.certified = true;
            rep.bound.relation = detail::ordinal_relation(cmp(Rational(rep.t), sl / r));
        } catch (const std::domain_error &) {
            rep.r_at_inverse_s = RealValue::infinite();
            rep.bound.right = RealValue::exact(0);
            rep.bound.certified = true;
            rep.bound.relation = ">";
            rep.bound.notes.push_back("R diverges at 1/s");
        }
    } else {
        const Rational partial = evaluate_at(alg.hilbert, x).value;
        rep.r_at_inverse_s = RealValue::at_least(partial);
        rep.bound.right = RealValue::interval(0, sl / partial);
        rep.bound.relation = ">=-to-degree";
        rep.bound.notes.push_back("R(1/s) bounded below by the partial sum to degree " + std::to_string(alg.degree()));
    }
    if (rep.bound.certified && rep.bound.relation == "<") {
        throw InternalInconsistency("Govorov (Rs) inequality violated");
    }
    return rep;
}

struct GovorovAnReport {
    BoundReport bound;
    unsigned s = 0, l = 0, t = 0;
    std::vector<std::pair<unsigned, Rational>> values;
    std::optional<Rational> supremum;
    bool all_equal = true;
};

inline GovorovAnReport govorov_an_bound(const Presentation &pres, unsigned degree, const CompletionConfig &config = {})
{
    if (!pres.alphabet.standard_grading()) {
        throw std::invalid_argument("the (an) bound needs all generators in degree 1");
    }
    const AlgebraSeries alg = algebra_series(pres, degree, config);
    const auto minimal = detail::minimal_subset(pres, alg.relation_minimal);
    GovorovAnReport rep;
    rep.s = static_cast<unsigned>(pres.alphabet.size());
    rep.t = static_cast<unsigned>(minimal.size());
    if (minimal.empty()) {
        rep.l = 2;
    } else if (auto l = detail::uniform_relation_degree(minimal)) {
        rep.l = *l;
    } else {
        throw std::invalid_argument("relations of mixed degrees: use the gs command");
    }
    rep.values = detail::govorov_an_values(alg.hilbert, rep.s, rep.l);
    for (const auto &[n, value] : rep.values) {
        if (!rep.supremum || value > *rep.supremum) {
            rep.supremum = value;
        }
        rep.all_equal = rep.all_equal && value == Rational(rep.t);
        if (value > Rational(rep.t)) {
            throw InternalInconsistency("Govorov (an) inequality violated at n = " + std::to_string(n));
        }
    }
    rep.bound.name = "govorov-an";
    rep.bound.left = RealValue::exact(rep.t);
    rep.bound.right = rep.supremum ? RealValue::exact(*rep.supremum) : RealValue::exact(0);
    rep.bound.relation = rep.all_equal ? "=" : ">";
    rep.bound.certified = !alg.truncated();
    rep.bound.notes.push_back("values for n <= " + std::to_string(alg.degree()));
    return rep;
}

// ---------------------------------------------------------------------------
// Free products

inline void require_connected(const TruncatedSeries &a)
{
    if (a[0] != 1) {
        throw std::invalid_argument("free product needs connected series (constant term 1)");
    }
}

// (A * B)^{-1} = A^{-1} + B^{-1} - 1.
inline TruncatedSeries free_product_series(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_connected(a);
    require_connected(b);
    const unsigned d = std::min(a.degree(), b.degree());
    return inverse(inverse(a.truncate(d)) + inverse(b.truncate(d)) - TruncatedSeries::one(d));
}

inline RationalSeries free_product_series(const RationalSeries &a, const RationalSeries &b)
{
    if (a.numerator().coeff(0) != a.denominator().coeff(0) || b.numerator().coeff(0) != b.denominator().coeff(0)) {
        throw std::invalid_argument("free product needs connected series (constant term 1)");
    }
    const RationalSeries one = RationalSeries::polynomial(Polynomial::constant(1));
    return (a.reciprocal() + b.reciprocal() - one).reciprocal();
}

// Presentation of A * B on the disjoint union of the generators.  Clashing
// names in b get a numeric suffix.
inline Presentation disjoint_union(const Presentation &a, const Presentation &b)
{
    if (!(a.field == b.field)) {
        throw std::invalid_argument("free product of presentations over different fields");
    }
    std::vector<GeneratorSpec> gens = a.alphabet.generators();
    std::vector<std::string> used;
    for (const auto &g : gens) {
        used.push_back(g.name);
    }
    auto taken = [&](const std::string &n) { return std::find(used.begin(), used.end(), n) != used.end(); };
    for (const auto &g : b.alphabet.generators()) {
        std::string name = g.name;
        for (unsigned k = 2; taken(name); ++k) {
            name = g.name + "_" + std::to_string(k);
        }
        used.push_back(name);
        gens.push_back({name, g.degree});
    }
    Presentation out{Alphabet(gens), a.relations, a.field};
    const auto shift = static_cast<char>(a.alphabet.size());
    for (const auto &r : b.relations) {
        NCPolynomial<Rational> moved;
        for (const auto &[w, c] : r) {
            std::string s = w.letters;
            for (auto &ch : s) {
                ch = static_cast<char>(ch + shift);
            }
            moved.add_term(out.alphabet.word(s), c);
        }
        out.relations.push_back(std::move(moved));
    }
    return out;
}

struct FreeProductReport {
    TruncatedSeries series;
    std::optional<RationalSeries> rational;
    Presentation union_presentation;
    TruncatedSeries direct;
    bool agrees = true;
    unsigned degree = 0;
};

inline FreeProductReport free_product(const Presentation &a, const Presentation &b, unsigned degree,
                                      const CompletionConfig &config = {})
{
    const AlgebraSeries sa = algebra_series(a, degree, config);
    const AlgebraSeries sb = algebra_series(b, degree, config);
    FreeProductReport rep;
    rep.series = free_product_series(sa.hilbert, sb.hilbert);
    if (sa.certified && sb.certified) {
        rep.rational = free_product_series(*sa.certified, *sb.certified);
    }
    rep.union_presentation = disjoint_union(a, b);
    const AlgebraSeries su = algebra_series(rep.union_presentation, degree, config);
    rep.degree = std::min(rep.series.degree(), su.degree());
    rep.direct = su.hilbert.truncate(rep.degree);
    rep.agrees = rep.direct == rep.series.truncate(rep.degree);
    if (!rep.agrees) {
        throw InternalInconsistency("free-product formula disagrees with the union presentation");
    }
    if (rep.rational && !(rep.rational->expand(rep.degree) == rep.direct)) {
        throw InternalInconsistency("closed-form free-product series disagrees with the union presentation");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Growth

struct GrowthConfig {
    CompletionConfig completion;
    Rational width = default_isolation_width();
    unsigned window = 0; // 0: max(4, D/5)
};

inline unsigned default_window(unsigned degree) { return std::min(degree, std::max(4U, degree / 5)); }

struct GrowthReport {
    GrowthEstimate estimate;
    TruncatedSeries hilbert;
    std::optional<RationalSeries> certified;
    unsigned window = 0;
    std::vector<std::string> warnings;
};

inline GrowthReport growth_report(const AlgebraSeries &alg, const GrowthConfig &config = {})
{
    GrowthReport rep;
    rep.hilbert = alg.hilbert;
    rep.certified = alg.certified;
    if (alg.certified) {
        rep.estimate = growth_from_rational(*alg.certified, config.width);
        return rep;
    }
    rep.window = config.window ? config.window : default_window(alg.degree());
    rep.estimate = estimate_growth_from_coefficients(alg.hilbert, rep.window);
    rep.warnings.push_back("growth exponent estimated from coefficients to degree " + std::to_string(alg.degree()) +
                           "; not certified");
    return rep;
}

inline GrowthReport growth_report(const Presentation &pres, unsigned degree, const GrowthConfig &config = {})
{
    return growth_report(algebra_series(pres, degree, config.completion), config);
}

// Radius of convergence as a real value (infinite for finite-dimensional).
inline RealValue radius_value(const GrowthEstimate &g)
{
    if (g.finite_dimensional) {
        return RealValue::infinite();
    }
    if (g.certified && g.radius.exact()) {
        return RealValue::exact(g.radius.lower);
    }
    if (g.certified) {
        return RealValue::interval(g.radius.lower, g.radius.upper);
    }
    return RealValue::interval(Rational(1) / g.upper, sgn(g.lower) > 0 ? Rational(1) / g.lower : Rational(0));
}

struct RadiusComparison {
    std::string relation = "?"; // relation of r(first) to r(second)
    bool certified = false;
};

// Compares the radii of two series; exact equality of irrational radii is
// decided through the common factor of the denominators.
inline RadiusComparison compare_radii(const GrowthReport &a, const GrowthReport &b)
{
    RadiusComparison out;
    const bool both = a.estimate.certified && b.estimate.certified;
    const RealValue ra = radius_value(a.estimate), rb = radius_value(b.estimate);
    if (ra.kind == RealValue::Kind::infinite || rb.kind == RealValue::Kind::infinite) {
        out.certified = both;
        out.relation = ra.kind == rb.kind ? "=" : (ra.kind == RealValue::Kind::infinite ? ">" : "<");
        return out;
    }
    if (both && a.certified && b.certified &&
        detail::shares_isolated_root(a.certified->denominator(), a.estimate.radius, b.certified->denominator())) {
        // r(a) is a pole of b; since it lies in b's isolating interval or below,
        // it equals r(b) only if it is not smaller than r(b).
        if (ra.upper >= rb.lower && rb.upper >= ra.lower) {
            out.relation = "=";
            out.certified = true;
            return out;
        }
    }
    if (ra.upper < rb.lower) {
        out.relation = "<";
    } else if (rb.upper < ra.lower) {
        out.relation = ">";
    } else if (ra.kind == RealValue::Kind::exact && rb.kind == RealValue::Kind::exact) {
        out.relation = "=";
    } else {
        return out;
    }
    out.certified = both;
    return out;
}

// ---------------------------------------------------------------------------
// Main bound B(r(A)) S(r(A)) >= 1

struct MainBoundReport {
    BoundReport bound;
    GrowthReport ambient;             // A
    GrowthReport quotient;            // B = A / (S)
    std::optional<GrowthReport> product; // C = B * k<S>
    RadiusComparison ambient_vs_product; // r(A) against r(C)
    StronglyFreeVerdict verdict;
    bool equality_matches_verdict = true;
};

inline MainBoundReport radius_product_bound(const Presentation &ambient, const std::vector<NCPolynomial<Rational>> &s_set,
                                          unsigned degree, const GrowthConfig &config = {})
{
    MainBoundReport rep;
    Presentation joint = ambient;
    joint.relations.insert(joint.relations.end(), s_set.begin(), s_set.end());
    const AlgebraSeries a = algebra_series(ambient, degree, config.completion);
    const AlgebraSeries b = algebra_series(joint, degree, config.completion);
    rep.ambient = growth_report(a, config);
    rep.quotient = growth_report(b, config);
    StronglyFreeConfig sf;
    sf.completion = config.completion;
    rep.verdict = strongly_free_in(ambient, s_set, degree, sf);

    std::vector<Rational> s_coeffs(1);
    for (std::size_t i = ambient.relations.size(); i < joint.relations.size(); ++i) {
        if (!b.relation_minimal[i]) {
            continue;
        }
        const unsigned k = joint.relations[i].degree();
        if (s_coeffs.size() <= k) {
            s_coeffs.resize(k + 1);
        }
        s_coeffs[k] += 1;
    }
    const Polynomial s_poly(s_coeffs);
    rep.bound.name = "main";
    rep.bound.right = RealValue::exact(1);

    if (a.certified && b.certified) {
        const RationalSeries c_inv =
            b.certified->reciprocal() - RationalSeries::polynomial(s_poly);
        rep.product = GrowthReport{growth_from_rational(c_inv.reciprocal(), config.width), {}, c_inv.reciprocal(), 0, {}};
        rep.product->hilbert = c_inv.reciprocal().expand(std::min(degree, 30U));
        rep.ambient_vs_product = compare_radii(rep.ambient, *rep.product);
    }

    const GrowthEstimate &ga = rep.ambient.estimate;
    if (ga.finite_dimensional) {
        rep.bound.left = RealValue::infinite();
        rep.bound.relation = ">";
        rep.bound.notes.push_back("A is finite-dimensional; r(A) is infinite");
    } else if (a.certified && b.certified) {
        rep.bound.certified = true;
        const PositiveRoot &root = ga.radius;
        // B(r) S(r) = 1 - B(r) C^{-1}(r), and C^{-1}(r) = 0 iff r(C) = r(A).
        const RationalSeries c_inv = b.certified->reciprocal() - RationalSeries::polynomial(s_poly);
        if (detail::shares_isolated_root(a.certified->denominator(), root, b.certified->denominator())) {
            rep.bound.left = RealValue::infinite();
            rep.bound.relation = ">";
            rep.bound.notes.push_back("B diverges at r(A)");
        } else if (root.exact()) {
            const Rational v = (*b.certified)(root.lower) * s_poly(root.lower);
            rep.bound.left = RealValue::exact(v);
            rep.bound.relation = detail::ordinal_relation(cmp(v, Rational(1)));
        } else if (detail::shares_isolated_root(a.certified->denominator(), root, c_inv.numerator())) {
            rep.bound.left = RealValue::exact(1);
            rep.bound.relation = "=";
            rep.bound.notes.push_back("r(A) is irrational; equality certified through C^{-1}(r(A)) = 0");
        } else {
            // B and S increase on [0, r(B)); refine until the interval clears 1.
            Rational w = config.width;
            PositiveRoot r = root;
            for (int iter = 0;; ++iter) {
                const Rational lo = (*b.certified)(r.lower) * s_poly(r.lower);
                const Rational hi = (*b.certified)(r.upper) * s_poly(r.upper);
                rep.bound.left = RealValue::interval(lo, hi);
                if (lo > 1) {
                    rep.bound.relation = ">";
                    break;
                }
                if (iter == 40) {
                    rep.bound.relation = "?";
                    rep.bound.notes.push_back("interval does not separate from 1 at the refinement limit");
                    break;
                }
                w /= 1024;
                r = smallest_positive_pole(*a.certified, w);
            }
            rep.bound.notes.push_back("interval width from an isolating interval of r(A)");
        }
    } else {
        // Partial sums of B at the lower end of r(A) bound the value below.
        const RealValue ra = radius_value(ga);
        const Rational x = ra.lower;
        const Rational lo = evaluate_at(b.hilbert, x).value * s_poly(x);
        rep.bound.left = RealValue::at_least(lo);
        rep.bound.relation = ">=-to-degree";
        rep.bound.notes.push_back("uncertified: r(A) or B(t) has no closed form");
    }
    if (rep.bound.certified && rep.bound.relation == "<") {
        throw InternalInconsistency("B(r(A)) S(r(A)) < 1");
    }
    if (rep.bound.certified && (rep.bound.relation == "=" || rep.bound.relation == ">")) {
        const bool equality = rep.bound.relation == "=";
        rep.equality_matches_verdict = equality != rep.verdict.refuted();
        if (!rep.equality_matches_verdict && (rep.verdict.exact || rep.verdict.refuted())) {
            throw InternalInconsistency("main bound equality disagrees with the strong-freeness verdict");
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quotient probes

struct ProbeReport {
    GrowthReport algebra;  // A
    GrowthReport quotient; // A / I
    RadiusComparison comparison; // r(A/I) against r(A)
    std::string conclusion;
};

inline Presentation with_relations(Presentation base, const std::vector<NCPolynomial<Rational>> &extra)
{
    base.relations.insert(base.relations.end(), extra.begin(), extra.end());
    return base;
}

namespace detail
{

inline void require_nonzero_in(const Presentation &a, const std::vector<NCPolynomial<Rational>> &gens,
                               const CompletionConfig &config)
{
    unsigned top = a.max_relation_degree();
    for (const auto &g : gens) {
        top = std::max(top, g.degree());
    }
    dispatch_field(a.field, [&]<typename K>() {
        const auto gb = complete_to_degree<K>(a, top, config);
        bool any = false;
        for (const auto &g : gens) {
            auto gk = g.template map_coefficients<K>([&](const Rational &c) { return field_element<K>(c, a.field); });
            any = any || !gb.reduce(gk).is_zero();
        }
        if (!any) {
            throw std::invalid_argument("the ideal generators are zero in A");
        }
        return 0;
    });
}

} // namespace detail

inline ProbeReport quotient_growth_probe(const Presentation &a, const std::vector<NCPolynomial<Rational>> &ideal,
                                         unsigned degree, const GrowthConfig &config = {})
{
    detail::require_nonzero_in(a, ideal, config.completion);
    ProbeReport rep;
    rep.algebra = growth_report(a, degree, config);
    rep.quotient = growth_report(with_relations(a, ideal), degree, config);
    rep.comparison = compare_radii(rep.quotient, rep.algebra);
    if (!rep.comparison.certified) {
        rep.conclusion = "undetermined (uncertified radii)";
    } else if (rep.comparison.relation == "=") {
        rep.conclusion = "refutes extremality: r(A/I) = r(A)";
    } else if (rep.comparison.relation == ">") {
        rep.conclusion = "supports extremality for this ideal: r(A/I) > r(A)";
    } else {
        throw InternalInconsistency("quotient has smaller radius than the algebra");
    }
    return rep;
}

struct AnnihilatingPairReport {
    bool product_zero = true;
    unsigned degree = 0;
    std::optional<std::string> witness; // nonzero i * w * j
    GrowthReport algebra, by_i, by_j;
    std::string min_relation = "?"; // min{r(A/I), r(A/J)} against r(A)
    bool min_identity = false;
    bool certified = false;
};

// Checks I * J = 0 to the degree bound (i w j = 0 for every normal word w) and
// compares min{r(A/I), r(A/J)} with r(A).
inline AnnihilatingPairReport annihilating_pair_check(const Presentation &a, const std::vector<NCPolynomial<Rational>> &ideal_i,
                                                      const std::vector<NCPolynomial<Rational>> &ideal_j, unsigned degree,
                                                      const GrowthConfig &config = {})
{
    AnnihilatingPairReport rep;
    rep.degree = degree;
    dispatch_field(a.field, [&]<typename K>() {
        const auto q = hilbert_series<K>(a, degree, config.completion);
        const auto words = q.automaton().words(degree);
        auto conv = [&](const NCPolynomial<Rational> &f) {
            return f.template map_coefficients<K>([&](const Rational &c) { return field_element<K>(c, a.field); });
        };
        for (const auto &fi : ideal_i) {
            for (const auto &fj : ideal_j) {
                const auto ki = conv(fi), kj = conv(fj);
                for (unsigned d = 0; d + fi.degree() + fj.degree() <= q.degree(); ++d) {
                    for (const auto &w : words[d]) {
                        const auto prod = ki * NCPolynomial<K>(w, q.basis.one()) * kj;
                        if (!q.basis.reduce(prod).is_zero()) {
                            rep.product_zero = false;
                            rep.witness = fi.to_string(a.alphabet) + " * " + a.alphabet.render(w) + " * " +
                                          fj.to_string(a.alphabet);
                            return 0;
                        }
                    }
                }
            }
        }
        rep.degree = q.degree();
        return 0;
    });
    rep.algebra = growth_report(a, degree, config);
    rep.by_i = growth_report(with_relations(a, ideal_i), degree, config);
    rep.by_j = growth_report(with_relations(a, ideal_j), degree, config);
    const auto ci = compare_radii(rep.by_i, rep.algebra);
    const auto cj = compare_radii(rep.by_j, rep.algebra);
    rep.certified = ci.certified && cj.certified;
    if (ci.relation == "=" || cj.relation == "=") {
        rep.min_relation = "=";
    } else if (ci.relation == ">" && cj.relation == ">") {
        rep.min_relation = ">";
    }
    rep.min_identity = rep.min_relation == "=";
    return rep;
}

// ---------------------------------------------------------------------------
// Reductions on pairs (s, t)

namespace detail
{

inline std::string fresh_name(const Alphabet &alphabet, const std::string &stem, unsigned &counter)
{
    for (;;) {
        std::string name = stem + std::to_string(++counter);
        if (!alphabet.find(name)) {
            return name;
        }
    }
}

inline Presentation extend_alphabet(const Presentation &pres, unsigned extra, const std::string &stem,
                                    std::vector<Letter> *fresh = nullptr)
{
    std::vector<GeneratorSpec> gens = pres.alphabet.generators();
    unsigned counter = 0;
    for (unsigned i = 0; i < extra; ++i) {
        if (fresh) {
            fresh->push_back(static_cast<Letter>(gens.size()));
        }
        gens.push_back({fresh_name(pres.alphabet, stem, counter), 1});
    }
    Presentation out{Alphabet(gens), {}, pres.field};
    for (const auto &r : pres.relations) {
        NCPolynomial<Rational> moved;
        for (const auto &[w, c] : r) {
            moved.add_term(out.alphabet.word(w.letters), c);
        }
        out.relations.push_back(std::move(moved));
    }
    return out;
}

inline void require_quadratic_standard(const Presentation &pres)
{
    if (!pres.alphabet.standard_grading()) {
        throw std::invalid_argument("the reduction needs all generators in degree 1");
    }
    for (const auto &r : pres.relations) {
        if (r.degree() != 2) {
            throw std::invalid_argument("the reduction needs quadratic relations");
        }
    }
}

} // namespace detail

// Same relations in F_{s+l}.
inline Presentation pad_pair(const Presentation &pres, unsigned extra)
{
    return detail::extend_alphabet(pres, extra, "p");
}

struct GenericQuadraticSet {
    Presentation presentation; // relations on the given letters only
    StronglyFreeVerdict verdict;
    unsigned attempts = 0;
    std::uint64_t seed = 0;
};

struct GenericConfig {
    unsigned verify_degree = 6;
    unsigned max_attempts = 8;
    long coefficient_range = 7; // coefficients in [-range, range]
    CompletionConfig completion;
};

// q random quadratic forms in the s given letters, accepted once verified
// strongly free to the configured degree.  The stream is keyed by (seed, s, q).
inline GenericQuadraticSet generic_quadratic_set(const Alphabet &alphabet, unsigned q, std::uint64_t seed,
                                                 const GenericConfig &config = {}, FieldSpec field = {})
{
    const unsigned s = static_cast<unsigned>(alphabet.size());
    if (4ULL * q > static_cast<unsigned long long>(s) * s) {
        throw std::invalid_argument("no strongly free set of " + std::to_string(q) + " quadratic elements exists in " +
                                    std::to_string(s) + " generators (needs 4q <= s^2)");
    }
    if (!alphabet.standard_grading()) {
        throw std::invalid_argument("generic quadratic sets need generators of degree 1");
    }
    GenericQuadraticSet out;
    out.seed = seed;
    for (unsigned attempt = 0; attempt < config.max_attempts; ++attempt) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), s, q, attempt};
        std::mt19937_64 rng(seq);
        const auto span = static_cast<std::uint64_t>(2 * config.coefficient_range + 1);
        Presentation p{alphabet, {}, field};
        for (unsigned k = 0; k < q; ++k) {
            NCPolynomial<Rational> f;
            for (unsigned i = 0; i < s; ++i) {
                for (unsigned j = 0; j < s; ++j) {
                    const long c = static_cast<long>(rng() % span) - config.coefficient_range;
                    f.add_term(alphabet.word({i, j}), Rational(c));
                }
            }
            if (f.is_zero()) {
                f.add_term(alphabet.word({0, s - 1}), Rational(1));
            }
            p.relations.push_back(std::move(f));
        }
        out.attempts = attempt + 1;
        out.presentation = p;
        if (q == 0) {
            out.verdict.degree = config.verify_degree;
            out.verdict.exact = true;
            return out;
        }
        StronglyFreeConfig sf;
        sf.completion = config.completion;
        sf.omega3 = false;
        out.verdict = strongly_free(p, config.verify_degree, sf);
        if (!out.verdict.refuted() && out.verdict.dependent_relations.empty()) {
            return out;
        }
    }
    throw std::runtime_error("no strongly free generic set found after " + std::to_string(config.max_attempts) +
                             " attempts; try a different seed");
}

struct DoublePairResult {
    Presentation presentation; // alpha and beta in F_{2s}
    GenericQuadraticSet beta;
};

// alpha (t quadratic relations in F_s, s even) together with a strongly free
// set beta of s^2/4 - t quadratic elements on s fresh letters.
inline DoublePairResult double_pair(const Presentation &alpha, std::uint64_t seed, const GenericConfig &config = {})
{
    detail::require_quadratic_standard(alpha);
    const unsigned s = static_cast<unsigned>(alpha.alphabet.size());
    const unsigned t = static_cast<unsigned>(alpha.relations.size());
    if (s % 2 != 0) {
        throw std::invalid_argument("doubling needs an even number of generators");
    }
    if (4 * t > s * s) {
        throw std::invalid_argument("t = " + std::to_string(t) + " exceeds s^2/4 = " + std::to_string(s * s / 4) +
                                    ": no strongly free set of that size exists");
    }
    std::vector<Letter> fresh;
    DoublePairResult out;
    out.presentation = detail::extend_alphabet(alpha, s, "d", &fresh);
    std::vector<GeneratorSpec> fresh_gens;
    for (Letter l : fresh) {
        fresh_gens.push_back(out.presentation.alphabet[l]);
    }
    out.beta = generic_quadratic_set(Alphabet(fresh_gens), s * s / 4 - t, seed, config, alpha.field);
    const auto shift = static_cast<char>(s);
    for (const auto &r : out.beta.presentation.relations) {
        NCPolynomial<Rational> moved;
        for (const auto &[w, c] : r) {
            std::string letters = w.letters;
            for (auto &ch : letters) {
                ch = static_cast<char>(ch + shift);
            }
            moved.add_term(out.presentation.alphabet.word(letters), c);
        }
        out.presentation.relations.push_back(std::move(moved));
    }
    return out;
}

struct GammaReport {
    Presentation presentation; // alpha plus all z_i z_j
    unsigned s = 0, m = 0, a = 0;
    StronglyFreeVerdict alpha_verdict;
    TruncatedSeries direct;                // Hilbert series of C from its presentation
    TruncatedSeries formula;               // B^{-1} + (1 + m t)^{-1} - 1, inverted
    std::optional<RationalSeries> closed_form; // strongly free case
    std::optional<bool> factorization_matches;
    RealValue delta; // C^{-1}(1/s) - C_sf^{-1}(1/s) = B^{-1}(1/s) - a/s^2
    std::string delta_relation = "?";
};

// C^{-1}(t) (1 + m t) for strongly free alpha: (1 - s t + a t^2)(1 + m t) - m t.
inline Polynomial gamma_closed_numerator(unsigned s, unsigned a, unsigned m)
{
    const Polynomial b_inv({Rational(1), Rational(-static_cast<long>(s)), Rational(a)});
    const Polynomial one_mt({Rational(1), Rational(m)});
    return b_inv * one_mt - Polynomial::monomial(1, Rational(m));
}

// The large-scale identity (1 - 60d x + 225 d^2 x^2)(1 + 4d x) - 4d x
// = (1 - 60 d x)(1 - 15 d^2 x^2).
inline bool large_scale_factorization_holds(unsigned d)
{
    const long dd = d;
    const Polynomial lhs = gamma_closed_numerator(60 * d, 225 * d * d, 4 * d);
    const Polynomial rhs = Polynomial({Rational(1), Rational(-60 * dd)}) *
                           Polynomial({Rational(1), Rational(0), Rational(-15 * dd * dd)});
    return lhs == rhs;
}

inline GammaReport gamma_from_alpha(const Presentation &alpha, unsigned m, unsigned degree,
                                    const CompletionConfig &config = {})
{
    detail::require_quadratic_standard(alpha);
    GammaReport rep;
    rep.s = static_cast<unsigned>(alpha.alphabet.size());
    rep.m = m;
    std::vector<Letter> fresh;
    rep.presentation = detail::extend_alphabet(alpha, m, "z", &fresh);
    for (Letter i : fresh) {
        for (Letter j : fresh) {
            rep.presentation.relations.emplace_back(rep.presentation.alphabet.word({i, j}), Rational(1));
        }
    }
    StronglyFreeConfig sf;
    sf.completion = config;
    rep.alpha_verdict = strongly_free(alpha, degree, sf);
    const AlgebraSeries b = algebra_series(alpha, degree, config);
    const AlgebraSeries c = algebra_series(rep.presentation, degree, config);
    for (bool minimal : b.relation_minimal) {
        rep.a += minimal ? 1 : 0;
    }
    const unsigned d = std::min(b.degree(), c.degree());
    rep.direct = c.hilbert.truncate(d);
    TruncatedSeries z(d);
    z[0] = 1;
    if (d >= 1) {
        z[1] = m;
    }
    rep.formula = free_product_series(b.hilbert.truncate(d), z);
    if (!(rep.formula == rep.direct)) {
        throw InternalInconsistency("C(t) differs from the free-product formula");
    }
    const Rational x(1, rep.s);
    const Rational target = Rational(rep.a) / Rational(rep.s * rep.s);
    if (!rep.alpha_verdict.refuted()) {
        rep.closed_form = RationalSeries(Polynomial({Rational(1), Rational(m)}), gamma_closed_numerator(rep.s, rep.a, m));
        rep.factorization_matches = rep.closed_form->expand(d) == rep.direct;
    }
    if (b.certified) {
        const RationalSeries b_inv = b.certified->reciprocal();
        const Rational v = b_inv(x) - target;
        rep.delta = RealValue::exact(v);
        rep.delta_relation = detail::ordinal_relation(sgn(v));
    } else {
        // B(1/s) >= partial sum, so B^{-1}(1/s) <= 1 / partial sum.
        const Rational upper = Rational(1) / evaluate_at(b.hilbert, x).value - target;
        rep.delta = RealValue::interval(-target, upper);
        rep.delta_relation = sgn(upper) < 0 ? "<" : "?";
    }
    if (rep.delta_relation == ">") {
        throw InternalInconsistency("B^{-1}(1/s) exceeds t/s^2");
    }
    return rep;
}

} // namespace ncgrowth
