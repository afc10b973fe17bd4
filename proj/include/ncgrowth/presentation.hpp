#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <ncgrowth/numeric.hpp>
#include <ncgrowth/series.hpp>

namespace ncgrowth
{

using Letter = unsigned char;

// A monomial of the free algebra.  Letters are generator indices stored in a
// string; the degree is cached so that the order below needs no alphabet.
struct Word {
    std::string letters;
    unsigned degree = 0;

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Letter operator[](std::size_t i) const { return static_cast<Letter>(letters[i]); }

    // Deglex: degree, then length, then lexicographic by generator index.
    friend std::strong_ordering operator<=>(const Word &a, const Word &b)
    {
        if (auto c = a.degree <=> b.degree; c != 0) {
            return c;
        }
        if (auto c = a.letters.size() <=> b.letters.size(); c != 0) {
            return c;
        }
        const int c = a.letters.compare(b.letters);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator==(const Word &a, const Word &b) { return a.letters == b.letters; }

    friend Word operator*(const Word &a, const Word &b) { return Word{a.letters + b.letters, a.degree + b.degree}; }
};

inline std::strong_ordering deglex_compare(const Word &a, const Word &b)
{
    return a <=> b;
}

struct WordHash {
    std::size_t operator()(const Word &w) const { return std::hash<std::string>{}(w.letters); }
};

struct GeneratorSpec {
    std::string name;
    unsigned degree = 1;

    friend bool operator==(const GeneratorSpec &, const GeneratorSpec &) = default;
};

class Alphabet
{
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<GeneratorSpec> gens) : gens_(std::move(gens))
    {
        if (gens_.size() > 255) {
            throw std::invalid_argument("at most 255 generators are supported");
        }
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const std::string &n = gens_[i].name;
            if (n.empty() || std::isdigit(static_cast<unsigned char>(n[0])) ||
                !std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
                throw std::invalid_argument("invalid generator name '" + n + "'");
            }
            if (gens_[i].degree < 1) {
                throw std::invalid_argument("generator " + gens_[i].name + " must have degree >= 1");
            }
            if (!index_.emplace(gens_[i].name, static_cast<Letter>(i)).second) {
                throw std::invalid_argument("duplicate generator " + gens_[i].name);
            }
        }
    }

    // Generators x1..xs (or names from `prefix`) of degree 1.
    static Alphabet standard(unsigned s, const std::string &prefix = "x")
    {
        std::vector<GeneratorSpec> g;
        for (unsigned i = 1; i <= s; ++i) {
            g.push_back({prefix + std::to_string(i), 1});
        }
        return Alphabet(std::move(g));
    }

    std::size_t size() const { return gens_.size(); }
    const std::vector<GeneratorSpec> &generators() const { return gens_; }
    const GeneratorSpec &operator[](std::size_t i) const { return gens_.at(i); }
    unsigned degree(Letter l) const { return gens_.at(l).degree; }
    unsigned max_degree() const
    {
        unsigned m = 1;
        for (const auto &g : gens_) {
            m = std::max(m, g.degree);
        }
        return m;
    }
    bool standard_grading() const
    {
        return std::all_of(gens_.begin(), gens_.end(), [](const GeneratorSpec &g) { return g.degree == 1; });
    }

    std::optional<Letter> find(std::string_view name) const
    {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    unsigned degree_of(std::string_view letters) const
    {
        unsigned d = 0;
        for (char c : letters) {
            d += degree(static_cast<Letter>(c));
        }
        return d;
    }

    Word word(std::string letters) const
    {
        const unsigned d = degree_of(letters);
        return Word{std::move(letters), d};
    }
    Word word(std::initializer_list<unsigned> letters) const
    {
        std::string s;
        for (unsigned l : letters) {
            if (l >= gens_.size()) {
                throw std::out_of_range("letter out of range");
            }
            s.push_back(static_cast<char>(l));
        }
        return word(std::move(s));
    }
    Word letter(Letter l) const { return Word{std::string(1, static_cast<char>(l)), degree(l)}; }

    // Parses "x*y^2*x" (or "1" for the unit word) into a word.
    Word parse_word(std::string_view text) const;

    Word subword(const Word &w, std::size_t pos, std::size_t len) const { return word(w.letters.substr(pos, len)); }

    std::string render(const Word &w) const
    {
        if (w.empty()) {
            return "1";
        }
        std::string out;
        std::size_t i = 0;
        while (i < w.length()) {
            std::size_t j = i;
            while (j < w.length() && w.letters[j] == w.letters[i]) {
                ++j;
            }
            if (!out.empty()) {
                out += '*';
            }
            out += gens_.at(w[i]).name;
            if (j - i > 1) {
                out += '^' + std::to_string(j - i);
            }
            i = j;
        }
        return out;
    }

    // g(t) = sum_i t^{deg x_i}.
    TruncatedSeries generator_series(unsigned degree) const
    {
        TruncatedSeries g(degree);
        for (const auto &gen : gens_) {
            if (gen.degree <= degree) {
                g[gen.degree] += 1;
            }
        }
        return g;
    }

    friend bool operator==(const Alphabet &a, const Alphabet &b) { return a.gens_ == b.gens_; }

private:
    std::vector<GeneratorSpec> gens_;
    std::unordered_map<std::string, Letter> index_;
};

// Hilbert series 1/(1 - g(t)) of the free algebra on `gens`.
inline TruncatedSeries free_series(const std::vector<GeneratorSpec> &gens, unsigned degree)
{
    TruncatedSeries s(degree);
    s[0] = 1;
    for (unsigned n = 1; n <= degree; ++n) {
        for (const auto &g : gens) {
            if (g.degree <= n) {
                s[n] += s[n - g.degree];
            }
        }
    }
    return s;
}

inline TruncatedSeries free_series(const Alphabet &alphabet, unsigned degree)
{
    return free_series(alphabet.generators(), degree);
}

// Element of the free algebra: words with nonzero coefficients, largest first.
template <typename K>
class NCPolynomial
{
public:
    using Terms = std::map<Word, K, std::greater<Word>>;

    NCPolynomial() = default;
    NCPolynomial(const Word &w, const K &c) { add_term(w, c); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms &terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    const Word &leading_word() const
    {
        if (terms_.empty()) {
            throw std::logic_error("zero polynomial has no leading word");
        }
        return terms_.begin()->first;
    }
    const K &leading_coeff() const
    {
        if (terms_.empty()) {
            throw std::logic_error("zero polynomial has no leading coefficient");
        }
        return terms_.begin()->second;
    }

    bool homogeneous() const
    {
        return terms_.empty() || terms_.begin()->first.degree == terms_.rbegin()->first.degree;
    }
    // Degree of the leading word; for homogeneous polynomials the degree.
    unsigned degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree; }
    unsigned low_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree; }
    bool monomial() const { return terms_.size() == 1; }

    K coeff(const Word &w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? K{} : it->second;
    }

    void add_term(const Word &w, const K &c)
    {
        if (ncgrowth::is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (ncgrowth::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    NCPolynomial &operator+=(const NCPolynomial &o)
    {
        for (const auto &[w, c] : o.terms_) {
            add_term(w, c);
        }
        return *this;
    }
    NCPolynomial &operator-=(const NCPolynomial &o)
    {
        for (const auto &[w, c] : o.terms_) {
            add_term(w, -c);
        }
        return *this;
    }
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial &b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial &b) { return a -= b; }
    NCPolynomial operator-() const
    {
        NCPolynomial out;
        for (const auto &[w, c] : terms_) {
            out.terms_.emplace(w, -c);
        }
        return out;
    }

    friend NCPolynomial operator*(const NCPolynomial &a, const NCPolynomial &b)
    {
        NCPolynomial out;
        for (const auto &[wa, ca] : a.terms_) {
            for (const auto &[wb, cb] : b.terms_) {
                out.add_term(wa * wb, ca * cb);
            }
        }
        return out;
    }

    NCPolynomial scaled(const K &c) const
    {
        NCPolynomial out;
        if (ncgrowth::is_zero(c)) {
            return out;
        }
        for (const auto &[w, v] : terms_) {
            out.terms_.emplace(w, v * c);
        }
        return out;
    }

    // left * this * right
    NCPolynomial sandwich(const Word &left, const Word &right) const
    {
        NCPolynomial out;
        for (const auto &[w, c] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), left * w * right, c);
        }
        return out;
    }

    NCPolynomial monic() const
    {
        if (terms_.empty()) {
            return *this;
        }
        return scaled(inverse(leading_coeff()));
    }

    template <typename K2, typename F>
    NCPolynomial<K2> map_coefficients(F &&f) const
    {
        NCPolynomial<K2> out;
        for (const auto &[w, c] : terms_) {
            out.add_term(w, f(c));
        }
        return out;
    }

    friend bool operator==(const NCPolynomial &a, const NCPolynomial &b) { return a.terms_ == b.terms_; }

    std::string to_string(const Alphabet &alphabet) const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[w, c] : terms_) {
            std::string cs = ncgrowth::to_string(c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) {
                cs.erase(0, 1);
            }
            if (first) {
                os << (negative ? "-" : "");
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            const bool unit_coeff = cs == "1";
            if (w.empty()) {
                os << cs;
            } else if (unit_coeff) {
                os << alphabet.render(w);
            } else {
                os << cs << '*' << alphabet.render(w);
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

template <typename K>
NCPolynomial<K> poly_arith(char op, const NCPolynomial<K> &a, const NCPolynomial<K> &b)
{
    switch (op) {
    case '+':
        return a + b;
    case '-':
        return a - b;
    case '*':
        return a * b;
    default:
        throw std::invalid_argument(std::string("unknown polynomial operation ") + op);
    }
}

// f = sum_j a^j x_j, grouping words by their final letter.  Entry j is a^j.
template <typename K>
std::vector<NCPolynomial<K>> right_decomposition(const NCPolynomial<K> &f, const Alphabet &alphabet)
{
    std::vector<NCPolynomial<K>> parts(alphabet.size());
    for (const auto &[w, c] : f) {
        if (w.empty()) {
            throw std::invalid_argument("right decomposition needs a polynomial without constant term");
        }
        const Letter last = w[w.length() - 1];
        parts[last].add_term(alphabet.word(w.letters.substr(0, w.length() - 1)), c);
    }
    return parts;
}

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct Presentation {
    Alphabet alphabet;
    std::vector<NCPolynomial<Rational>> relations;
    FieldSpec field;

    unsigned max_relation_degree() const
    {
        unsigned d = 0;
        for (const auto &r : relations) {
            d = std::max(d, r.degree());
        }
        return d;
    }

    // Checks the homogeneity / degree / nonzero invariants.  Quotient probes
    // pass min_degree 1 to allow killing generators.
    void validate(unsigned min_degree = 2) const
    {
        for (std::size_t i = 0; i < relations.size(); ++i) {
            const auto &r = relations[i];
            const std::string which = "relation " + std::to_string(i + 1);
            if (r.is_zero()) {
                throw std::invalid_argument(which + " is zero");
            }
            if (!r.homogeneous()) {
                throw std::invalid_argument(which + " is inhomogeneous");
            }
            if (r.degree() < min_degree) {
                throw std::invalid_argument(which + " has degree < " + std::to_string(min_degree));
            }
        }
    }

    bool monomial() const
    {
        return std::all_of(relations.begin(), relations.end(), [](const auto &r) { return r.monomial(); });
    }

    // Canonical text form; parses back to an equal presentation.
    std::string render() const
    {
        std::ostringstream os;
        os << "generators:";
        for (const auto &g : alphabet.generators()) {
            os << ' ' << g.name << ':' << g.degree;
        }
        os << "\nfield: " << (field.rational() ? "Q" : "F " + std::to_string(field.characteristic)) << "\nrelations:\n";
        for (const auto &r : relations) {
            os << r.to_string(alphabet) << '\n';
        }
        return os.str();
    }

    // FNV-1a of the canonical form.
    std::string fingerprint() const
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : render()) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        std::ostringstream os;
        os << std::hex << std::setw(16) << std::setfill('0') << h;
        return os.str();
    }

    friend bool operator==(const Presentation &a, const Presentation &b)
    {
        return a.alphabet == b.alphabet && a.relations == b.relations && a.field == b.field;
    }
};

namespace detail
{

// Recursive-descent parser for one relation line.
class PolyParser
{
public:
    PolyParser(const Alphabet &alphabet, std::string_view text, std::size_t line, std::size_t col0)
        : alphabet_(alphabet), text_(text), line_(line), col0_(col0)
    {
    }

    NCPolynomial<Rational> parse_all()
    {
        auto p = parse_sum();
        skip_ws();
        if (pos_ < text_.size()) {
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(line_, col0_ + pos_ + 1, msg); }

    void skip_ws()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    NCPolynomial<Rational> parse_sum()
    {
        skip_ws();
        NCPolynomial<Rational> acc;
        bool negative = false;
        if (peek('+') || peek('-')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        auto t = parse_product();
        acc += negative ? -t : t;
        while (peek('+') || peek('-')) {
            negative = text_[pos_] == '-';
            ++pos_;
            t = parse_product();
            acc += negative ? -t : t;
        }
        return acc;
    }

    bool factor_starts()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            return false;
        }
        const char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    NCPolynomial<Rational> parse_product()
    {
        if (!factor_starts()) {
            fail("expected a term");
        }
        auto acc = parse_power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                if (!factor_starts()) {
                    fail("expected a factor after '*'");
                }
                acc = acc * parse_power();
            } else if (factor_starts()) {
                acc = acc * parse_power();
            } else {
                return acc;
            }
        }
    }

    NCPolynomial<Rational> parse_power()
    {
        auto base = parse_atom();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected an exponent");
            }
            const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (e > 1000) {
                fail("exponent too large");
            }
            NCPolynomial<Rational> out(Word{}, Rational(1));
            for (unsigned long i = 0; i < e; ++i) {
                out = out * base;
            }
            return out;
        }
        return base;
    }

    NCPolynomial<Rational> parse_atom()
    {
        skip_ws();
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_sum();
            if (!peek(')')) {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    ++pos_;
                }
                if (dstart == pos_) {
                    fail("expected a denominator");
                }
            }
            Rational value;
            try {
                value = parse_rational(text_.substr(start, pos_ - start));
            } catch (const std::invalid_argument &e) {
                pos_ = start;
                fail(e.what());
            }
            return NCPolynomial<Rational>(Word{}, value);
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const auto name = text_.substr(start, pos_ - start);
        auto letter = alphabet_.find(name);
        if (!letter) {
            pos_ = start;
            fail("unknown generator '" + std::string(name) + "'");
        }
        return NCPolynomial<Rational>(alphabet_.letter(*letter), Rational(1));
    }

    const Alphabet &alphabet_;
    std::string_view text_;
    std::size_t line_;
    std::size_t col0_;
    std::size_t pos_ = 0;
};

inline std::string normalize_unicode(std::string line)
{
    // U+2212 MINUS SIGN -> '-'
    const std::string minus = "\xE2\x88\x92";
    for (std::size_t p; (p = line.find(minus)) != std::string::npos;) {
        line.replace(p, minus.size(), "-");
    }
    return line;
}

inline std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

} // namespace detail

inline Word Alphabet::parse_word(std::string_view text) const
{
    auto p = detail::PolyParser(*this, text, 1, 0).parse_all();
    if (!p.monomial() || p.leading_coeff() != 1) {
        throw std::invalid_argument("not a monomial: " + std::string(text));
    }
    return p.leading_word();
}

// Parses a polynomial over an existing alphabet (single line, no validation).
inline NCPolynomial<Rational> parse_polynomial(const Alphabet &alphabet, std::string_view text)
{
    return detail::PolyParser(alphabet, detail::normalize_unicode(std::string(text)), 1, 0).parse_all();
}

// Presentation file:
//   generators: x:1 y:1      (repeatable)
//   field: Q | F p
//   relations:
//   x*y - y*x                (one or more per line, comma separated)
// '#' starts a comment.
inline Presentation parse_presentation(std::string_view text)
{
    Presentation pres;
    std::vector<GeneratorSpec> gens;
    bool in_relations = false;
    bool alphabet_built = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    auto build_alphabet = [&](std::size_t line, std::size_t col) {
        if (alphabet_built) {
            return;
        }
        try {
            pres.alphabet = Alphabet(gens);
        } catch (const std::invalid_argument &e) {
            throw ParseError(line, col, e.what());
        }
        alphabet_built = true;
    };
    auto add_relations = [&](const std::string &body, std::size_t col_offset) {
        std::size_t piece_start = 0;
        while (piece_start <= body.size()) {
            std::size_t comma = body.find(',', piece_start);
            if (comma == std::string::npos) {
                comma = body.size();
            }
            const std::string piece = body.substr(piece_start, comma - piece_start);
            if (!detail::trim(piece).empty()) {
                const std::size_t col = col_offset + piece_start;
                std::size_t lead = 0;
                while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) {
                    ++lead;
                }
                auto poly = detail::PolyParser(pres.alphabet, piece, line_no, col).parse_all();
                if (poly.is_zero()) {
                    throw ParseError(line_no, col + lead + 1, "zero relation");
                }
                if (!poly.homogeneous()) {
                    throw ParseError(line_no, col + lead + 1, "inhomogeneous relation");
                }
                if (poly.degree() < 2) {
                    throw ParseError(line_no, col + lead + 1, "relation of degree < 2");
                }
                pres.relations.push_back(std::move(poly));
            }
            piece_start = comma + 1;
        }
    };
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string line = detail::normalize_unicode(std::string(text.substr(start, end - start)));
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string trimmed = detail::trim(line);
        if (trimmed.empty()) {
            continue;
        }
        const std::size_t indent = line.find_first_not_of(" \t");
        auto keyword = [&](std::string_view kw) { return trimmed.rfind(kw, 0) == 0; };
        if (keyword("relations:")) {
            if (in_relations) {
                throw ParseError(line_no, indent + 1, "duplicate 'relations:' section");
            }
            in_relations = true;
            build_alphabet(line_no, indent + 1);
            const std::size_t after = line.find("relations:") + 10;
            add_relations(line.substr(after), after);
            continue;
        }
        if (in_relations) {
            add_relations(line, 0);
            continue;
        }
        if (keyword("generators:")) {
            std::istringstream is(line.substr(line.find("generators:") + 11));
            std::string tok;
            while (is >> tok) {
                const auto colon = tok.find(':');
                const std::size_t col = line.find(tok) + 1;
                if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size()) {
                    throw ParseError(line_no, col, "expected name:degree, got '" + tok + "'");
                }
                const std::string name = tok.substr(0, colon);
                if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
                    !std::all_of(name.begin(), name.end(),
                                 [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
                    throw ParseError(line_no, col, "invalid generator name '" + name + "'");
                }
                const std::string deg = tok.substr(colon + 1);
                if (!std::all_of(deg.begin(), deg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
                    deg.size() > 6) {
                    throw ParseError(line_no, col + colon + 1, "invalid degree '" + deg + "'");
                }
                const unsigned d = static_cast<unsigned>(std::stoul(deg));
                if (d < 1) {
                    throw ParseError(line_no, col + colon + 1, "generator degree must be >= 1");
                }
                gens.push_back({name, d});
            }
            continue;
        }
        if (keyword("field:")) {
            std::string spec = detail::trim(line.substr(line.find("field:") + 6));
            spec.erase(std::remove_if(spec.begin(), spec.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                       spec.end());
            if (spec == "Q") {
                pres.field = FieldSpec{0};
            } else if (spec.size() > 1 && spec[0] == 'F' &&
                       std::all_of(spec.begin() + 1, spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                       spec.size() < 11) {
                const unsigned long p = std::stoul(spec.substr(1));
                if (p > 0xFFFFFFFFUL || !is_prime(static_cast<std::uint32_t>(p))) {
                    throw ParseError(line_no, indent + 1, "field characteristic must be prime");
                }
                pres.field = FieldSpec{static_cast<std::uint32_t>(p)};
            } else {
                throw ParseError(line_no, indent + 1, "field must be 'Q' or 'F <prime>'");
            }
            continue;
        }
        throw ParseError(line_no, indent + 1, "expected 'generators:', 'field:' or 'relations:'");
    }
    if (!in_relations) {
        throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'relations:' section");
    }
    return pres;
}

} // namespace ncgrowth
