#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <ncgrowth/numeric.hpp>

namespace ncgrowth
{

// Power series c_0 + c_1 t + ... + c_D t^D known exactly up to t^D.
class TruncatedSeries
{
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(unsigned degree) : coeffs_(degree + 1) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("a truncated series needs at least one coefficient");
        }
    }
    TruncatedSeries(std::initializer_list<long> coeffs)
    {
        for (long c : coeffs) {
            coeffs_.emplace_back(c);
        }
        if (coeffs_.empty()) {
            throw std::invalid_argument("a truncated series needs at least one coefficient");
        }
    }

    static TruncatedSeries one(unsigned degree)
    {
        TruncatedSeries s(degree);
        s.coeffs_[0] = 1;
        return s;
    }

    // c t^k truncated at `degree` (zero when k > degree).
    static TruncatedSeries monomial(unsigned k, const Rational &c, unsigned degree)
    {
        TruncatedSeries s(degree);
        if (k <= degree) {
            s.coeffs_[k] = c;
        }
        return s;
    }

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Rational &operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational &operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<Rational> &coefficients() const { return coeffs_; }

    // Coefficient or zero beyond the stored range.
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    TruncatedSeries truncate(unsigned degree) const
    {
        if (degree > this->degree()) {
            throw std::invalid_argument("cannot extend a truncated series");
        }
        return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + degree + 1));
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return ncgrowth::is_zero(c); });
    }

    std::optional<unsigned> first_nonzero() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!ncgrowth::is_zero(coeffs_[i])) {
                return static_cast<unsigned>(i);
            }
        }
        return std::nullopt;
    }

    bool nonnegative() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return sgn(c) >= 0; });
    }

    bool integral() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return is_integer(c); });
    }

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            out.push_back(c.get_str());
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
    {
        os << '[';
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            os << (i ? ", " : "") << s.coeffs_[i];
        }
        return os << ']';
    }

private:
    std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, sub, mul };

// Result is truncated at the smaller of the two degrees.
inline TruncatedSeries series_arith(SeriesOp op, const TruncatedSeries &a, const TruncatedSeries &b)
{
    const unsigned d = std::min(a.degree(), b.degree());
    TruncatedSeries out(d);
    switch (op) {
    case SeriesOp::add:
        for (unsigned i = 0; i <= d; ++i) {
            out[i] = a[i] + b[i];
        }
        break;
    case SeriesOp::sub:
        for (unsigned i = 0; i <= d; ++i) {
            out[i] = a[i] - b[i];
        }
        break;
    case SeriesOp::mul:
        for (unsigned i = 0; i <= d; ++i) {
            if (ncgrowth::is_zero(a[i])) {
                continue;
            }
            for (unsigned j = 0; i + j <= d; ++j) {
                out[i + j] += a[i] * b[j];
            }
        }
        break;
    }
    return out;
}

inline TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return series_arith(SeriesOp::add, a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return series_arith(SeriesOp::sub, a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return series_arith(SeriesOp::mul, a, b);
}
inline TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a)
{
    TruncatedSeries out = a;
    for (unsigned i = 0; i <= out.degree(); ++i) {
        out[i] *= c;
    }
    return out;
}

// b with a*b = 1 + O(t^{D+1}).
inline TruncatedSeries inverse(const TruncatedSeries &a)
{
    if (ncgrowth::is_zero(a[0])) {
        throw std::domain_error("not invertible as power series");
    }
    const unsigned d = a.degree();
    TruncatedSeries b(d);
    const Rational inv0 = Rational(1) / a[0];
    b[0] = inv0;
    for (unsigned n = 1; n <= d; ++n) {
        Rational acc = 0;
        for (unsigned k = 1; k <= n; ++k) {
            if (!ncgrowth::is_zero(a[k])) {
                acc += a[k] * b[n - k];
            }
        }
        b[n] = -acc * inv0;
    }
    return b;
}

struct OrderingReport {
    enum class Relation { equal, greater_equal, less_equal, incomparable };

    Relation relation = Relation::equal;
    std::optional<unsigned> first_difference;
    std::optional<unsigned> first_greater; // first i with a_i > b_i
    std::optional<unsigned> first_less;    // first i with a_i < b_i
    unsigned degree = 0;                   // the comparison holds to this degree only
};

inline std::string to_string(OrderingReport::Relation r)
{
    switch (r) {
    case OrderingReport::Relation::equal:
        return "=";
    case OrderingReport::Relation::greater_equal:
        return ">=";
    case OrderingReport::Relation::less_equal:
        return "<=";
    case OrderingReport::Relation::incomparable:
        return "incomparable";
    }
    return "?";
}

inline OrderingReport series_compare(const TruncatedSeries &a, const TruncatedSeries &b)
{
    OrderingReport rep;
    rep.degree = std::min(a.degree(), b.degree());
    for (unsigned i = 0; i <= rep.degree; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c == 0) {
            continue;
        }
        if (!rep.first_difference) {
            rep.first_difference = i;
        }
        if (c > 0 && !rep.first_greater) {
            rep.first_greater = i;
        }
        if (c < 0 && !rep.first_less) {
            rep.first_less = i;
        }
    }
    using R = OrderingReport::Relation;
    if (!rep.first_difference) {
        rep.relation = R::equal;
    } else if (rep.first_greater && rep.first_less) {
        rep.relation = R::incomparable;
    } else {
        rep.relation = rep.first_greater ? R::greater_equal : R::less_equal;
    }
    return rep;
}

// Univariate polynomial over Q, coefficients from t^0 upward, no trailing zeros.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs)
    {
        for (long v : coeffs) {
            c_.emplace_back(v);
        }
        trim();
    }
    static Polynomial constant(const Rational &v) { return Polynomial(std::vector<Rational>{v}); }
    static Polynomial monomial(unsigned k, const Rational &v)
    {
        std::vector<Rational> c(k + 1);
        c[k] = v;
        return Polynomial(std::move(c));
    }
    static Polynomial from_series(const TruncatedSeries &s) { return Polynomial(s.coefficients()); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational> &coefficients() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational &x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d.push_back(c_[i] * static_cast<long>(i));
        }
        return Polynomial(std::move(d));
    }

    Polynomial monic() const
    {
        if (c_.empty()) {
            return *this;
        }
        Polynomial out = *this;
        const Rational lc = c_.back();
        for (auto &v : out.c_) {
            v /= lc;
        }
        return out;
    }

    TruncatedSeries to_series(unsigned degree) const
    {
        TruncatedSeries s(degree);
        for (std::size_t i = 0; i < c_.size() && i <= degree; ++i) {
            s[i] = c_[i];
        }
        return s;
    }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b)
    {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = a.coeff(i) + b.coeff(i);
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b)
    {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = a.coeff(i) - b.coeff(i);
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Rational &s, const Polynomial &a)
    {
        std::vector<Rational> r = a.c_;
        for (auto &v : r) {
            v *= s;
        }
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.c_ == b.c_; }

    // Euclidean division: a = q*b + r, deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b)
    {
        if (b.is_zero()) {
            throw std::domain_error("polynomial division by zero");
        }
        std::vector<Rational> rem = a.c_;
        const int db = b.degree();
        if (a.degree() < db) {
            return {Polynomial{}, a};
        }
        std::vector<Rational> quot(a.c_.size() - b.c_.size() + 1);
        const Rational lc = b.leading();
        for (int i = a.degree(); i >= db; --i) {
            if (ncgrowth::is_zero(rem[i])) {
                continue;
            }
            const Rational q = rem[i] / lc;
            quot[i - db] = q;
            for (int j = 0; j <= db; ++j) {
                rem[i - db + j] -= q * b.c_[j];
            }
        }
        rem.resize(db);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    // Monic gcd (zero only if both are zero).
    friend Polynomial gcd(Polynomial a, Polynomial b)
    {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    // Same roots, integer coefficients with content 1 and positive leading coefficient.
    Polynomial primitive_integer() const
    {
        if (c_.empty()) {
            return *this;
        }
        Integer l = 1;
        for (const auto &v : c_) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        }
        std::vector<Integer> z;
        Integer g = 0;
        for (const auto &v : c_) {
            Integer zi = v.get_num() * (l / v.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zi.get_mpz_t());
            z.push_back(zi);
        }
        if (sgn(c_.back()) < 0) {
            g = -g;
        }
        std::vector<Rational> r;
        for (auto &zi : z) {
            r.emplace_back(Integer(zi / g));
        }
        return Polynomial(std::move(r));
    }

    std::string to_string(const std::string &var = "t") const
    {
        if (c_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (ncgrowth::is_zero(c_[i])) {
                continue;
            }
            Rational v = c_[i];
            if (!first) {
                os << (sgn(v) < 0 ? " - " : " + ");
                v = abs(v);
            } else if (sgn(v) < 0) {
                os << "-";
                v = abs(v);
            }
            first = false;
            if (i == 0 || v != 1) {
                os << v;
                if (i > 0) {
                    os << "*";
                }
            }
            if (i > 0) {
                os << var;
                if (i > 1) {
                    os << "^" << i;
                }
            }
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && ncgrowth::is_zero(c_.back())) {
            c_.pop_back();
        }
    }

    std::vector<Rational> c_;
};

// Certified closed form numerator/denominator with denominator(0) = 1 and no
// common factor.
class RationalSeries
{
public:
    RationalSeries() : num_(Polynomial::constant(1)), den_(Polynomial::constant(1)) {}
    RationalSeries(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator))
    {
        if (ncgrowth::is_zero(den_.coeff(0))) {
            throw std::invalid_argument("denominator vanishes at 0");
        }
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        const Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rational d0 = den_.coeff(0);
        num_ = (Rational(1) / d0) * num_;
        den_ = (Rational(1) / d0) * den_;
    }
    static RationalSeries polynomial(Polynomial p) { return RationalSeries(std::move(p), Polynomial::constant(1)); }

    const Polynomial &numerator() const { return num_; }
    const Polynomial &denominator() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    TruncatedSeries expand(unsigned degree) const
    {
        // den * s = num, den(0) = 1.
        TruncatedSeries s(degree);
        for (unsigned n = 0; n <= degree; ++n) {
            Rational acc = num_.coeff(n);
            const int dd = den_.degree();
            for (int k = 1; k <= dd && static_cast<unsigned>(k) <= n; ++k) {
                if (!ncgrowth::is_zero(den_.coeff(k))) {
                    acc -= den_.coeff(k) * s[n - k];
                }
            }
            s[n] = acc;
        }
        return s;
    }

    Rational operator()(const Rational &x) const
    {
        const Rational d = den_(x);
        if (ncgrowth::is_zero(d)) {
            throw std::domain_error("pole of rational series at " + x.get_str());
        }
        return num_(x) / d;
    }

    RationalSeries reciprocal() const
    {
        if (ncgrowth::is_zero(num_.coeff(0))) {
            throw std::domain_error("not invertible as power series");
        }
        return RationalSeries(den_, num_);
    }

    friend RationalSeries operator+(const RationalSeries &a, const RationalSeries &b)
    {
        return RationalSeries(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalSeries operator-(const RationalSeries &a, const RationalSeries &b)
    {
        return RationalSeries(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalSeries operator*(const RationalSeries &a, const RationalSeries &b)
    {
        return RationalSeries(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const RationalSeries &a, const RationalSeries &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

private:
    Polynomial num_;
    Polynomial den_;
};

inline TruncatedSeries expand_rational(const RationalSeries &r, unsigned degree)
{
    return r.expand(degree);
}

struct Evaluation {
    Rational value;
    bool partial_sum = false; // true when only a truncated sum was available
};

inline Evaluation evaluate_at(const RationalSeries &r, const Rational &x)
{
    return {r(x), false};
}

inline Evaluation evaluate_at(const TruncatedSeries &a, const Rational &x)
{
    Rational acc = 0;
    for (int i = static_cast<int>(a.degree()); i >= 0; --i) {
        acc = acc * x + a[i];
    }
    return {acc, true};
}

namespace detail
{

inline std::vector<Polynomial> sturm_chain(const Polynomial &p)
{
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) {
            break;
        }
        chain.push_back(Rational(-1) * r);
    }
    if (chain.back().is_zero()) {
        chain.pop_back();
    }
    return chain;
}

inline int sign_variations(const std::vector<Polynomial> &chain, const Rational &x)
{
    int count = 0, last = 0;
    for (const auto &q : chain) {
        const int s = sgn(q(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

inline Rational floor_of(const Rational &x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

// Rational with the smallest denominator in [lo, hi], 0 <= lo <= hi.
inline Rational simplest_between(const Rational &lo, const Rational &hi)
{
    const Rational fl = floor_of(lo);
    if (fl == lo) {
        return lo;
    }
    if (fl + 1 <= hi) {
        return fl + 1;
    }
    return fl + Rational(1) / simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

} // namespace detail

// Smallest positive real root of a polynomial, exact when rational.
struct PositiveRoot {
    enum class Kind { none, exact, isolated };

    Kind kind = Kind::none;
    Rational lower; // root in [lower, upper]; equal when exact
    Rational upper;

    bool exists() const { return kind != Kind::none; }
    bool exact() const { return kind == Kind::exact; }
    Rational width() const { return upper - lower; }
};

inline Rational default_isolation_width()
{
    Rational w(1);
    w /= Rational(Integer(1) << 40);
    return w;
}

// Sturm-count bisection on the square-free part; the returned interval
// contains the root, has width <= `width`, and no root lies in (0, lower).
inline PositiveRoot smallest_positive_root(const Polynomial &p, const Rational &width = default_isolation_width())
{
    PositiveRoot out;
    if (p.degree() <= 0) {
        return out;
    }
    Polynomial sq = p;
    const Polynomial g = gcd(p, p.derivative());
    if (g.degree() > 0) {
        sq = divmod(p, g).first;
    }
    sq = sq.primitive_integer();
    if (ncgrowth::is_zero(sq.coeff(0))) {
        throw std::invalid_argument("polynomial vanishes at 0");
    }
    const auto chain = detail::sturm_chain(sq);
    Rational bound = 0;
    for (int i = 0; i < sq.degree(); ++i) {
        bound = std::max(bound, Rational(abs(sq.coeff(i) / sq.leading())));
    }
    bound += 1;
    const int v0 = detail::sign_variations(chain, Rational(0));
    auto roots_upto = [&](const Rational &x) { return v0 - detail::sign_variations(chain, x); };
    if (roots_upto(bound) == 0) {
        return out;
    }
    Rational lo = 0, hi = bound;
    Rational lc = abs(sq.leading());
    const Rational rational_width = Rational(1) / (lc * lc * 2);
    const Rational target = std::min(width, rational_width);
    while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        const int below = roots_upto(mid);
        // A root hit exactly is the smallest one when nothing lies in (0, mid).
        if (below == 1 && ncgrowth::is_zero(sq(mid))) {
            out.kind = PositiveRoot::Kind::exact;
            out.lower = out.upper = mid;
            return out;
        }
        if (below >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // Two rationals with denominators dividing lc differ by at least 1/lc^2,
    // so a rational root must be the simplest rational in [lo, hi].
    const Rational cand = detail::simplest_between(lo, hi);
    if (ncgrowth::is_zero(sq(cand))) {
        out.kind = PositiveRoot::Kind::exact;
        out.lower = out.upper = cand;
        return out;
    }
    out.kind = PositiveRoot::Kind::isolated;
    out.lower = lo;
    out.upper = hi;
    while (out.upper - out.lower > width) {
        Rational mid = (out.lower + out.upper) / 2;
        if (roots_upto(mid) >= 1) {
            out.upper = mid;
        } else {
            out.lower = mid;
        }
    }
    return out;
}

inline PositiveRoot smallest_positive_pole(const RationalSeries &r, const Rational &width = default_isolation_width())
{
    return smallest_positive_root(r.denominator(), width);
}

// Uncertified or certified exponent of growth p(A) = 1/r(A).
struct GrowthEstimate {
    enum class Method { rational_pole, coefficient_root, ratio_fit };

    Rational lower; // bounds on p(A)
    Rational upper;
    bool certified = false;
    Method method = Method::ratio_fit;
    bool finite_dimensional = false; // r = infinity, p = 0 by convention
    bool subexponential = false;     // r = 1
    PositiveRoot radius;             // set on the certified path

    Rational width() const { return upper - lower; }
    bool contains(const Rational &x) const { return lower <= x && x <= upper; }
};

inline std::string to_string(GrowthEstimate::Method m)
{
    switch (m) {
    case GrowthEstimate::Method::rational_pole:
        return "rational-pole";
    case GrowthEstimate::Method::coefficient_root:
        return "coefficient-root";
    case GrowthEstimate::Method::ratio_fit:
        return "ratio-fit";
    }
    return "?";
}

// Certified p(A) from a closed form; p is refined to the requested width.
inline GrowthEstimate growth_from_rational(const RationalSeries &r, const Rational &width = default_isolation_width())
{
    GrowthEstimate g;
    g.certified = true;
    g.method = GrowthEstimate::Method::rational_pole;
    Rational w = width;
    for (;;) {
        g.radius = smallest_positive_pole(r, w);
        if (!g.radius.exists()) {
            g.finite_dimensional = true;
            g.lower = g.upper = 0;
            return g;
        }
        if (g.radius.exact()) {
            g.lower = g.upper = Rational(1) / g.radius.lower;
            g.subexponential = g.radius.lower == 1;
            return g;
        }
        g.lower = Rational(1) / g.radius.upper;
        g.upper = Rational(1) / g.radius.lower;
        if (g.upper - g.lower <= width) {
            return g;
        }
        w /= 4;
    }
}

namespace detail
{

inline Rational outward(long double v, bool down)
{
    // Relative pad well above double rounding; the double converts exactly.
    const long double pad = std::fabs(v) * 1e-12L + 1e-15L;
    return Rational(static_cast<double>(down ? v - pad : v + pad));
}

} // namespace detail

// Ratio-fit bracket from the trailing `window` coefficients: plain period-d
// ratio roots and their linear extrapolation in 1/n.  Never certified.
inline GrowthEstimate estimate_growth_from_coefficients(const TruncatedSeries &a, unsigned window)
{
    if (!a.nonnegative()) {
        throw std::invalid_argument("growth estimation needs nonnegative coefficients");
    }
    const unsigned d = a.degree();
    if (window == 0 || window > d) {
        throw std::invalid_argument("window must be in [1, D]");
    }
    GrowthEstimate g;
    g.method = GrowthEstimate::Method::ratio_fit;
    unsigned period = 0;
    for (unsigned n = 1; n <= d; ++n) {
        if (!ncgrowth::is_zero(a[n])) {
            period = std::gcd(period, n);
        }
    }
    bool tail_zero = true;
    for (unsigned n = d - window + 1; n <= d; ++n) {
        tail_zero = tail_zero && ncgrowth::is_zero(a[n]);
    }
    if (period == 0 || tail_zero) {
        g.finite_dimensional = true;
        g.lower = g.upper = 0;
        return g;
    }
    auto ratio = [&](unsigned n) -> std::optional<long double> {
        if (n < period || ncgrowth::is_zero(a[n]) || ncgrowth::is_zero(a[n - period])) {
            return std::nullopt;
        }
        const Rational q = a[n] / a[n - period];
        return std::pow(static_cast<long double>(q.get_d()), 1.0L / period);
    };
    std::vector<long double> candidates;
    for (unsigned n = d - window + 1; n <= d; ++n) {
        auto r = ratio(n);
        if (!r) {
            continue;
        }
        candidates.push_back(*r);
        if (n >= 2 * period) {
            if (auto prev = ratio(n - period)) {
                const long double fit = (static_cast<long double>(n) * *r - static_cast<long double>(n - period) * *prev) /
                                        static_cast<long double>(period);
                candidates.push_back(fit);
            }
        }
    }
    if (candidates.empty()) {
        throw std::invalid_argument("window contains no usable coefficient ratios");
    }
    const auto [mn, mx] = std::minmax_element(candidates.begin(), candidates.end());
    g.lower = detail::outward(*mn, true);
    if (sgn(g.lower) < 0) {
        g.lower = 0;
    }
    g.upper = detail::outward(*mx, false);
    return g;
}

} // namespace ncgrowth
