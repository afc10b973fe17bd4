#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <ncgrowth/chains.hpp>
#include <ncgrowth/groebner.hpp>
#include <ncgrowth/growth.hpp>
#include <ncgrowth/presentation.hpp>
#include <ncgrowth/series.hpp>

namespace ncgrowth::cli
{

using nlohmann::json;

inline constexpr int schema_version = 1;

struct Request {
    std::string command;
    std::string subcommand; // reduce: pad | double | gamma
    std::vector<std::string> inputs;
    unsigned max_degree = 12;
    std::optional<unsigned> max_rank;
    std::uint64_t seed = 0;
    std::string format = "json";
    unsigned precision = 40; // isolation width 2^-precision
    std::size_t max_rules = 100000;
    bool canonical = false;
    std::optional<std::string> expect;
    std::optional<std::string> ambient;
    // command-specific
    unsigned extra = 1;  // reduce pad
    unsigned m = 1;      // reduce gamma
    std::string word;    // insulate
    std::vector<std::string> ideal;  // probe-extremal
    std::vector<std::string> ideal2; // probe-extremal, annihilating pair
    unsigned window = 0;             // growth estimator window, 0 = default

    unsigned rank() const { return max_rank.value_or(max_degree); }
    CompletionConfig completion() const
    {
        CompletionConfig c;
        c.max_rules = max_rules;
        return c;
    }
    Rational width() const
    {
        Rational w = 1;
        mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), precision);
        return w;
    }
    GrowthConfig growth() const { return {completion(), width(), window}; }
};

// Error with the exit code to report.
class CommandError : public std::runtime_error
{
  public:
    CommandError(const std::string &what, int code = 1) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

  private:
    int code_;
};

struct Outcome {
    json report;
    int exit_code = 0;
};

// ---------------------------------------------------------------------------
// Serialization

inline json to_json(const Rational &r) { return to_string(r); }

inline json to_json(const TruncatedSeries &s)
{
    json out = json::array();
    for (const auto &c : s.coefficients()) {
        out.push_back(to_string(c));
    }
    return out;
}

inline json to_json(const Polynomial &p)
{
    json out = json::array();
    for (const auto &c : p.coefficients()) {
        out.push_back(to_string(c));
    }
    return out;
}

inline json to_json(const RationalSeries &r)
{
    return {{"numerator", to_json(r.numerator())}, {"denominator", to_json(r.denominator())}, {"text", r.to_string()}};
}

inline json to_json(const RealValue &v)
{
    json out{{"kind", v.kind_name()}};
    if (v.kind != RealValue::Kind::infinite) {
        out["lower"] = to_string(v.lower);
        out["upper"] = to_string(v.upper);
    }
    return out;
}

inline json to_json(const BoundReport &b)
{
    return {{"name", b.name},           {"left", to_json(b.left)}, {"right", to_json(b.right)},
            {"relation", b.relation},   {"certified", b.certified}, {"notes", b.notes}};
}

inline json to_json(const PositiveRoot &r)
{
    if (!r.exists()) {
        return {{"kind", "infinite"}};
    }
    return {{"kind", r.exact() ? "exact" : "interval"}, {"lower", to_string(r.lower)}, {"upper", to_string(r.upper)}};
}

inline json to_json(const GrowthReport &g)
{
    const auto &e = g.estimate;
    json out{{"certified", e.certified},
             {"method", to_string(e.method)},
             {"p", {to_string(e.lower), to_string(e.upper)}},
             {"finite_dimensional", e.finite_dimensional},
             {"subexponential", e.subexponential}};
    out["radius"] = to_json(radius_value(e));
    if (g.certified) {
        out["closed_form"] = to_json(*g.certified);
    }
    if (!e.certified) {
        out["window"] = g.window;
    }
    return out;
}

inline json to_json(const StronglyFreeVerdict &v)
{
    json routes = json::array();
    for (const auto &r : v.routes) {
        routes.push_back({{"name", r.name},
                          {"applicable", r.applicable},
                          {"refuted", r.refuted},
                          {"degree", r.degree},
                          {"exact", r.exact},
                          {"detail", r.detail}});
    }
    json out{{"status", v.status_name()}, {"degree", v.degree}, {"exact", v.exact}, {"routes", routes},
             {"slack", to_json(v.slack)}};
    if (!v.omega3.coefficients().empty()) {
        out["omega3"] = to_json(v.omega3);
    }
    out["dependent_relations"] = v.dependent_relations;
    return out;
}

inline json to_json(const BigradedSeries &b)
{
    json rows = json::array();
    for (unsigned n = 0; n <= b.max_rank(); ++n) {
        json row = json::array();
        for (unsigned d = 0; d <= b.max_degree(); ++d) {
            row.push_back(b.at(n, d).get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json words_json(const Alphabet &alphabet, const std::vector<Word> &words, std::size_t cap = 500)
{
    json out = json::array();
    for (std::size_t i = 0; i < words.size() && i < cap; ++i) {
        out.push_back(alphabet.render(words[i]));
    }
    return out;
}

// Plain-text rendering of a report.
inline void render_text(std::ostream &os, const json &j, const std::string &indent = "")
{
    auto scalar = [](const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const json &v = it.value();
            const bool flat_array =
                v.is_array() && std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_primitive(); });
            if (v.is_primitive()) {
                os << indent << it.key() << ": " << scalar(v) << '\n';
            } else if (flat_array) {
                os << indent << it.key() << ":";
                for (const auto &e : v) {
                    os << ' ' << scalar(e);
                }
                os << '\n';
            } else {
                os << indent << it.key() << ":\n";
                render_text(os, v, indent + "  ");
            }
        }
    } else if (j.is_array()) {
        for (const auto &e : j) {
            if (e.is_primitive()) {
                os << indent << "- " << scalar(e) << '\n';
            } else {
                os << indent << "-\n";
                render_text(os, e, indent + "  ");
            }
        }
    } else {
        os << indent << scalar(j) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Input

inline Presentation load_presentation(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw CommandError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto p = parse_presentation(buf.str());
        return p;
    } catch (const ParseError &e) {
        throw CommandError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                           e.what());
    }
}

inline std::vector<NCPolynomial<Rational>> parse_list(const Alphabet &alphabet, const std::vector<std::string> &items)
{
    std::vector<NCPolynomial<Rational>> out;
    for (const auto &item : items) {
        std::size_t start = 0;
        while (start <= item.size()) {
            std::size_t comma = item.find(',', start);
            if (comma == std::string::npos) {
                comma = item.size();
            }
            const std::string piece = item.substr(start, comma - start);
            if (piece.find_first_not_of(" \t") != std::string::npos) {
                auto f = parse_polynomial(alphabet, piece);
                if (f.is_zero() || !f.homogeneous()) {
                    throw CommandError("'" + piece + "' is not a nonzero homogeneous element");
                }
                out.push_back(std::move(f));
            }
            start = comma + 1;
        }
    }
    return out;
}

inline MonomialAlgebra monomial_of(const Presentation &pres, const Request &req, std::vector<std::string> &warnings)
{
    if (pres.monomial()) {
        std::vector<Word> words;
        for (const auto &r : pres.relations) {
            words.push_back(r.leading_word());
        }
        return MonomialAlgebra::minimal(pres.alphabet, words);
    }
    AssociatedMonomial am = dispatch_field(pres.field, [&]<typename K>() {
        return associated_monomial(hilbert_series<K>(pres, req.max_degree, req.completion()));
    });
    if (am.truncated) {
        warnings.push_back("obstructions of the associated monomial algebra are complete only to degree " +
                           std::to_string(am.degree));
    }
    return am.algebra;
}

inline void require_inputs(const Request &req, std::size_t n)
{
    if (req.inputs.size() != n) {
        throw CommandError(req.command + " expects " + std::to_string(n) + " input file(s)");
    }
}

inline json presentation_json(const Presentation &p)
{
    return {{"text", p.render()}, {"fingerprint", p.fingerprint()}, {"field", p.field.name()}};
}

// ---------------------------------------------------------------------------
// Commands

inline bool expectation_matches(const std::string &expect, const StronglyFreeVerdict &v)
{
    if (expect == "refuted") {
        return v.refuted();
    }
    if (expect == "verified") {
        return !v.refuted();
    }
    if (expect == "strongly-free") {
        return !v.refuted() && v.exact;
    }
    throw CommandError("--expect must be refuted, verified or strongly-free for this command");
}

inline void add_warnings(json &report, const std::vector<std::string> &warnings)
{
    for (const auto &w : warnings) {
        report["warnings"].push_back(w);
    }
}

inline json cmd_hilbert(const Request &req, std::vector<std::string> &warnings)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    const AlgebraSeries a = algebra_series(p, req.max_degree, req.completion());
    if (a.truncated()) {
        warnings.push_back("rule cap reached; series computed to degree " + std::to_string(a.degree()));
    }
    json out{{"presentation", presentation_json(p)},
             {"hilbert", to_json(a.hilbert)},
             {"degree", a.degree()},
             {"globally_complete", a.globally_complete},
             {"obstructions", words_json(p.alphabet, a.obstructions)},
             {"relation_series", to_json(a.relation_series)}};
    if (a.certified) {
        out["closed_form"] = to_json(*a.certified);
    }
    return out;
}

inline json cmd_chains(const Request &req, std::vector<std::string> &warnings)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    const MonomialAlgebra m = monomial_of(p, req, warnings);
    const auto e = enumerate_chains(m, req.rank(), req.max_degree);
    json chains = json::array();
    for (std::size_t i = 0; i < e.chains.size() && i < 500; ++i) {
        const auto &c = e.chains[i];
        chains.push_back({{"rank", c.rank}, {"word", m.alphabet().render(c.word)},
                          {"tail", m.alphabet().render(c.tail(m.alphabet()))}});
    }
    if (!e.list_complete || e.chains.size() > 500) {
        warnings.push_back("chain list truncated; the table is complete");
    }
    return {{"presentation", presentation_json(p)},
            {"obstructions", words_json(m.alphabet(), m.obstructions())},
            {"max_rank", req.rank()},
            {"table", to_json(e.table)},
            {"chains", chains}};
}

inline json cmd_euler(const Request &req, std::vector<std::string> &warnings)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    const MonomialAlgebra m = monomial_of(p, req, warnings);
    const EulerReport r = euler_check(m, req.max_degree);
    json partial = json::array();
    for (unsigned i = 1; 2 * i <= std::max(2U, req.rank()) && i <= 3; ++i) {
        const auto b = partial_euler_bounds(m, i, req.max_degree);
        auto form = [](const PartialEulerForm &f) {
            return json{{"top_rank", f.top_rank},
                        {"value", to_json(f.value)},
                        {"direction", f.lower_bound ? ">= 1" : "<= 1"},
                        {"holds", f.holds},
                        {"equality", f.equality},
                        {"next_rank_vanishes", f.next_rank_vanishes}};
        };
        partial.push_back({{"index", i}, {"lower", form(b.lower)}, {"upper", form(b.upper)}});
    }
    return {{"presentation", presentation_json(p)},
            {"holds", true},
            {"degree", r.degree},
            {"hilbert", to_json(r.hilbert)},
            {"chain_side", to_json(r.chain_side)},
            {"product", to_json(r.product)},
            {"partial", partial}};
}

inline StronglyFreeVerdict verdict_for(const Request &req, const Presentation &p)
{
    StronglyFreeConfig cfg;
    cfg.completion = req.completion();
    if (req.ambient) {
        const Presentation a = load_presentation(*req.ambient);
        if (!(a.alphabet == p.alphabet) || !(a.field == p.field)) {
            throw CommandError("ambient and input presentations must share generators and field");
        }
        return strongly_free_in(a, p.relations, req.max_degree, cfg);
    }
    return strongly_free(p, req.max_degree, cfg);
}

inline json cmd_strongly_free(const Request &req, std::vector<std::string> &warnings, int &code)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    const StronglyFreeVerdict v = verdict_for(req, p);
    warnings.insert(warnings.end(), v.warnings.begin(), v.warnings.end());
    if (!v.refuted() && !v.exact) {
        warnings.push_back("verified to degree " + std::to_string(v.degree) + " only");
    }
    if (req.expect && !expectation_matches(*req.expect, v)) {
        code = 2;
    }
    return {{"presentation", presentation_json(p)}, {"verdict", to_json(v)}};
}

inline json cmd_gs(const Request &req, std::vector<std::string> &warnings)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    StronglyFreeConfig cfg;
    cfg.completion = req.completion();
    const StronglyFreeVerdict v = strongly_free(p, req.max_degree, cfg);
    const AlgebraSeries a = algebra_series(p, req.max_degree, req.completion());
    warnings.insert(warnings.end(), v.warnings.begin(), v.warnings.end());
    json out{{"presentation", presentation_json(p)},
             {"hilbert", to_json(a.hilbert)},
             {"generators", to_json(p.alphabet.generator_series(a.degree()))},
             {"relations", to_json(a.relation_series)},
             {"slack", to_json(v.slack)},
             {"omega3", to_json(v.omega3)},
             {"inequality_holds", v.slack.nonnegative()},
             {"equality_to_degree", !v.refuted()}};
    if (const RouteResult *r = v.route("closed-form"); r && r->applicable) {
        out["closed_form_slack"] = r->detail;
    }
    return out;
}

inline json cmd_govorov(const Request &req, std::vector<std::string> &warnings)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    json out{{"presentation", presentation_json(p)}};
    const auto rs = govorov_rs_bound(p, req.max_degree, req.completion());
    out["rs"] = {{"s", rs.s}, {"l", rs.l}, {"t", rs.t}, {"R_at_inverse_s", to_json(rs.r_at_inverse_s)},
                 {"bound", to_json(rs.bound)}};
    if (!rs.bound.certified) {
        warnings.push_back("R(1/s) not certified");
    }
    const auto an = govorov_an_bound(p, req.max_degree, req.completion());
    json values = json::array();
    for (const auto &[n, v] : an.values) {
        values.push_back({{"n", n}, {"value", to_string(v)}});
    }
    out["an"] = {{"values", values}, {"all_equal", an.all_equal}, {"bound", to_json(an.bound)}};
    return out;
}

inline json cmd_growth(const Request &req, std::vector<std::string> &warnings)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    const GrowthReport g = growth_report(p, req.max_degree, req.growth());
    warnings.insert(warnings.end(), g.warnings.begin(), g.warnings.end());
    return {{"presentation", presentation_json(p)}, {"hilbert", to_json(g.hilbert)}, {"growth", to_json(g)}};
}

inline json cmd_free_product(const Request &req, std::vector<std::string> &)
{
    require_inputs(req, 2);
    const Presentation a = load_presentation(req.inputs[0]);
    const Presentation b = load_presentation(req.inputs[1]);
    const FreeProductReport r = free_product(a, b, req.max_degree, req.completion());
    json out{{"left", presentation_json(a)},
             {"right", presentation_json(b)},
             {"union", presentation_json(r.union_presentation)},
             {"series", to_json(r.series)},
             {"direct", to_json(r.direct)},
             {"agrees", r.agrees},
             {"degree", r.degree}};
    if (r.rational) {
        out["closed_form"] = to_json(*r.rational);
    }
    return out;
}

inline json cmd_main_bound(const Request &req, std::vector<std::string> &warnings, int &code)
{
    require_inputs(req, 1);
    const Presentation s = load_presentation(req.inputs[0]);
    Presentation ambient{s.alphabet, {}, s.field};
    if (req.ambient) {
        ambient = load_presentation(*req.ambient);
        if (!(ambient.alphabet == s.alphabet) || !(ambient.field == s.field)) {
            throw CommandError("ambient and input presentations must share generators and field");
        }
    }
    const MainBoundReport r = radius_product_bound(ambient, s.relations, req.max_degree, req.growth());
    if (!r.bound.certified) {
        warnings.push_back("bound not certified: one-sided conclusion only");
    }
    warnings.insert(warnings.end(), r.verdict.warnings.begin(), r.verdict.warnings.end());
    json out{{"ambient", presentation_json(ambient)},
             {"set", presentation_json(s)},
             {"bound", to_json(r.bound)},
             {"ambient_growth", to_json(r.ambient)},
             {"quotient_growth", to_json(r.quotient)},
             {"verdict", to_json(r.verdict)},
             {"equality_matches_verdict", r.equality_matches_verdict}};
    if (r.product) {
        out["product_growth"] = to_json(*r.product);
        out["ambient_vs_product"] = {{"relation", r.ambient_vs_product.relation},
                                     {"certified", r.ambient_vs_product.certified}};
    }
    if (req.expect && !expectation_matches(*req.expect, r.verdict)) {
        code = 2;
    }
    return out;
}

inline json cmd_insulate(const Request &req, std::vector<std::string> &, int &code)
{
    require_inputs(req, 2);
    const Presentation pa = load_presentation(req.inputs[0]);
    const Presentation pb = load_presentation(req.inputs[1]);
    if (!pa.monomial() || !pb.monomial()) {
        throw CommandError("insulate expects monomial presentations");
    }
    if (req.word.empty()) {
        throw CommandError("insulate needs --word");
    }
    std::vector<std::string> unused;
    const MonomialAlgebra a = monomial_of(pa, req, unused);
    const MonomialAlgebra b = monomial_of(pb, req, unused);
    const InsulatedMonomial ins = insulated_monomial(a, b, req.word);
    const Alphabet &alpha = ins.product.alphabet();
    const unsigned rank = req.max_rank.value_or(4);
    const unsigned degree = ins.degree() + 8;
    const auto closed = inserted_chain_series(b, ins.degree(), rank, degree);
    const auto direct = inserted_chain_series_direct(ins, rank, degree);
    json report{{"ok", ins.report.ok}, {"pairs_checked", ins.report.pairs_checked}, {"failure", ins.report.failure}};
    if (ins.report.witness) {
        report["witness"] = alpha.render(*ins.report.witness);
    }
    json out{{"product", ins.product.render()},
             {"p", alpha.render(ins.p)},
             {"b", ins.degree()},
             {"q", ins.q},
             {"construction", ins.construction},
             {"inserted_words", words_json(alpha, ins.inserted_words())},
             {"insulation", report},
             {"inserted_chains", {{"max_rank", rank},
                                  {"max_degree", degree},
                                  {"closed_form", to_json(closed)},
                                  {"direct", to_json(direct)},
                                  {"agree", closed == direct}}}};
    if (req.expect) {
        if (*req.expect != "insulated" && *req.expect != "not-insulated") {
            throw CommandError("--expect must be insulated or not-insulated for insulate");
        }
        if ((*req.expect == "insulated") != ins.report.ok) {
            code = 2;
        }
    }
    return out;
}

inline json cmd_reduce(const Request &req, std::vector<std::string> &warnings)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    StronglyFreeConfig sf;
    sf.completion = req.completion();
    sf.omega3 = false;
    auto verdict = [&](const Presentation &x) {
        auto v = strongly_free(x, req.max_degree, sf);
        warnings.insert(warnings.end(), v.warnings.begin(), v.warnings.end());
        return v;
    };
    json out{{"input", presentation_json(p)}};
    if (req.subcommand == "pad") {
        const Presentation padded = pad_pair(p, req.extra);
        const auto before = verdict(p), after = verdict(padded);
        out["output"] = presentation_json(padded);
        out["hilbert"] = to_json(algebra_series(padded, req.max_degree, req.completion()).hilbert);
        out["verdict_before"] = to_json(before);
        out["verdict_after"] = to_json(after);
        out["preserved"] = before.refuted() == after.refuted() && (!before.refuted() || before.degree == after.degree);
    } else if (req.subcommand == "double") {
        GenericConfig g;
        g.completion = req.completion();
        const DoublePairResult d = double_pair(p, req.seed, g);
        const auto before = verdict(p), after = verdict(d.presentation);
        out["output"] = presentation_json(d.presentation);
        out["beta"] = {{"size", d.beta.presentation.relations.size()}, {"attempts", d.beta.attempts},
                       {"verdict", to_json(d.beta.verdict)}};
        out["verdict_before"] = to_json(before);
        out["verdict_after"] = to_json(after);
        out["preserved"] = before.refuted() == after.refuted() && (!before.refuted() || before.degree == after.degree);
    } else if (req.subcommand == "gamma") {
        const GammaReport g = gamma_from_alpha(p, req.m, req.max_degree, req.completion());
        out["output"] = presentation_json(g.presentation);
        out["s"] = g.s;
        out["m"] = g.m;
        out["a"] = g.a;
        out["alpha_verdict"] = to_json(g.alpha_verdict);
        out["hilbert"] = to_json(g.direct);
        out["formula"] = to_json(g.formula);
        if (g.closed_form) {
            out["closed_form"] = to_json(*g.closed_form);
            out["factorization_matches"] = *g.factorization_matches;
        }
        out["delta"] = to_json(g.delta);
        out["delta_relation"] = g.delta_relation;
        if (g.delta.kind != RealValue::Kind::exact) {
            warnings.push_back("B(t) has no closed form: delta bounded only");
        }
    } else {
        throw CommandError("reduce needs one of pad, double, gamma");
    }
    return out;
}

inline json cmd_probe(const Request &req, std::vector<std::string> &warnings)
{
    require_inputs(req, 1);
    const Presentation p = load_presentation(req.inputs[0]);
    if (req.ideal.empty()) {
        throw CommandError("probe-extremal needs --ideal");
    }
    const auto ideal = parse_list(p.alphabet, req.ideal);
    json out{{"presentation", presentation_json(p)}};
    const ProbeReport pr = quotient_growth_probe(p, ideal, req.max_degree, req.growth());
    out["algebra_growth"] = to_json(pr.algebra);
    out["quotient_growth"] = to_json(pr.quotient);
    out["comparison"] = {{"relation", pr.comparison.relation}, {"certified", pr.comparison.certified}};
    out["conclusion"] = pr.conclusion;
    if (!pr.comparison.certified) {
        warnings.push_back("radii not certified");
    }
    if (!req.ideal2.empty()) {
        const auto j = parse_list(p.alphabet, req.ideal2);
        const AnnihilatingPairReport a = annihilating_pair_check(p, ideal, j, req.max_degree, req.growth());
        json ap{{"product_zero", a.product_zero},
                {"degree", a.degree},
                {"r_A", to_json(radius_value(a.algebra.estimate))},
                {"r_A_mod_I", to_json(radius_value(a.by_i.estimate))},
                {"r_A_mod_J", to_json(radius_value(a.by_j.estimate))},
                {"min_relation", a.min_relation},
                {"min_identity", a.min_identity},
                {"certified", a.certified}};
        if (a.witness) {
            ap["witness"] = *a.witness;
        }
        out["annihilating_pair"] = ap;
        if (a.product_zero) {
            warnings.push_back("I J = 0 checked to degree " + std::to_string(a.degree) + " only");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Corpus

struct CorpusEntry {
    std::string name;
    std::string status; // pass | fail | skip
    std::vector<std::string> messages;
};

namespace detail
{

inline std::optional<std::string> compare_field(const json &expected, const json &actual, const std::string &key)
{
    if (!expected.contains(key)) {
        return std::nullopt;
    }
    if (expected[key] != actual) {
        return key + ": expected " + expected[key].dump() + ", got " + actual.dump();
    }
    return std::nullopt;
}

} // namespace detail

// Runs one presentation against its sidecar expectation object.
inline std::vector<std::string> check_expectation(const Presentation &p, const json &expected, const Request &req)
{
    std::vector<std::string> errors;
    const unsigned degree = expected.value("max_degree", req.max_degree);
    const AlgebraSeries a = algebra_series(p, degree, req.completion());
    auto push = [&](std::optional<std::string> e) {
        if (e) {
            errors.push_back(*e);
        }
    };
    push(detail::compare_field(expected, to_json(a.hilbert), "hilbert"));
    if (expected.contains("relations_minimal")) {
        push(detail::compare_field(expected, to_json(a.relation_series), "relations_minimal"));
    }
    if (expected.contains("slack") || expected.contains("strongly_free")) {
        StronglyFreeConfig cfg;
        cfg.completion = req.completion();
        const StronglyFreeVerdict v = strongly_free(p, degree, cfg);
        push(detail::compare_field(expected, to_json(v.slack), "slack"));
        if (expected.contains("strongly_free")) {
            const json &e = expected["strongly_free"];
            const std::string status = v.refuted() ? "refuted" : "verified";
            if (e.value("status", status) != status) {
                errors.push_back("strongly_free.status: expected " + e.value("status", "") + ", got " + status);
            }
            if (v.refuted() && e.contains("degree") && e["degree"].get<unsigned>() != v.degree) {
                errors.push_back("strongly_free.degree: expected " + e["degree"].dump() + ", got " +
                                 std::to_string(v.degree));
            }
        }
    }
    if (expected.contains("euler") && p.monomial()) {
        std::vector<Word> words;
        for (const auto &r : p.relations) {
            words.push_back(r.leading_word());
        }
        const auto m = MonomialAlgebra::minimal(p.alphabet, words);
        const auto e = euler_check(m, degree);
        push(detail::compare_field(expected, json(e.product == TruncatedSeries::one(degree)), "euler"));
    }
    return errors;
}

struct CorpusSummary {
    std::vector<CorpusEntry> entries;
    std::size_t passed = 0, failed = 0, skipped = 0;
};

inline CorpusSummary run_corpus(const std::filesystem::path &dir, const Request &req)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        throw CommandError("'" + dir.string() + "' is not a directory");
    }
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".alg") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    CorpusSummary s;
    for (const auto &f : files) {
        CorpusEntry entry{f.filename().string(), "pass", {}};
        fs::path sidecar = f;
        sidecar.replace_extension(".expected");
        json expected;
        bool usable = fs::exists(sidecar);
        if (!usable) {
            entry.messages.push_back("missing sidecar");
        } else {
            std::ifstream in(sidecar);
            expected = json::parse(in, nullptr, false);
            if (expected.is_discarded() || !expected.is_object()) {
                usable = false;
                entry.messages.push_back("unreadable sidecar");
            }
        }
        if (!usable) {
            entry.status = "skip";
            ++s.skipped;
            s.entries.push_back(std::move(entry));
            continue;
        }
        try {
            const Presentation p = load_presentation(f.string());
            entry.messages = check_expectation(p, expected, req);
        } catch (const std::exception &e) {
            entry.messages.push_back(std::string("error: ") + e.what());
        }
        if (entry.messages.empty()) {
            ++s.passed;
        } else {
            entry.status = "fail";
            ++s.failed;
        }
        s.entries.push_back(std::move(entry));
    }
    return s;
}

inline json cmd_corpus(const Request &req, std::vector<std::string> &warnings, int &code)
{
    require_inputs(req, 1);
    const CorpusSummary s = run_corpus(req.inputs[0], req);
    json entries = json::array();
    for (const auto &e : s.entries) {
        entries.push_back({{"file", e.name}, {"status", e.status}, {"messages", e.messages}});
        if (e.status == "skip") {
            warnings.push_back(e.name + ": " + e.messages.front() + "; skipped");
        }
    }
    if (s.failed > 0) {
        code = 1;
    }
    return {{"entries", entries}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
}

// ---------------------------------------------------------------------------

inline Outcome run_command(const Request &req)
{
    if (req.max_degree < 2) {
        throw CommandError("--max-degree must be at least 2");
    }
    if (req.max_rules == 0 || req.precision == 0) {
        throw CommandError("caps must be positive");
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::vector<std::string> warnings;
    json result;
    const std::string &c = req.command;
    if (c == "hilbert") {
        result = cmd_hilbert(req, warnings);
    } else if (c == "chains") {
        result = cmd_chains(req, warnings);
    } else if (c == "euler") {
        result = cmd_euler(req, warnings);
    } else if (c == "strongly-free") {
        result = cmd_strongly_free(req, warnings, out.exit_code);
    } else if (c == "gs") {
        result = cmd_gs(req, warnings);
    } else if (c == "govorov") {
        result = cmd_govorov(req, warnings);
    } else if (c == "growth") {
        result = cmd_growth(req, warnings);
    } else if (c == "free-product") {
        result = cmd_free_product(req, warnings);
    } else if (c == "main-bound") {
        result = cmd_main_bound(req, warnings, out.exit_code);
    } else if (c == "insulate") {
        result = cmd_insulate(req, warnings, out.exit_code);
    } else if (c == "reduce") {
        result = cmd_reduce(req, warnings);
    } else if (c == "probe-extremal") {
        result = cmd_probe(req, warnings);
    } else if (c == "corpus") {
        result = cmd_corpus(req, warnings, out.exit_code);
    } else {
        throw CommandError("unknown command '" + c + "'");
    }
    json request{{"command", c},
                 {"inputs", req.inputs},
                 {"max_degree", req.max_degree},
                 {"max_rank", req.rank()},
                 {"seed", req.seed},
                 {"precision", req.precision}};
    if (!req.subcommand.empty()) {
        request["subcommand"] = req.subcommand;
    }
    if (req.ambient) {
        request["ambient"] = *req.ambient;
    }
    out.report = {{"schema", schema_version}, {"request", request}, {"result", result}, {"warnings", json::array()}};
    add_warnings(out.report, warnings);
    if (!req.canonical) {
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.report["timing"] = {{"seconds", seconds}};
    }
    return out;
}

} // namespace ncgrowth::cli
