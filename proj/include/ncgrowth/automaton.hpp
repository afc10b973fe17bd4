#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include <ncgrowth/numeric.hpp>
#include <ncgrowth/presentation.hpp>
#include <ncgrowth/series.hpp>

namespace ncgrowth
{

// Minimal linear recurrence of a sequence over Q.  Returns the connection
// polynomial C (C(0) = 1) and the recurrence length L:
//   sum_{i=0..L} C_i s_{n-i} = 0 for all n >= L.
inline std::pair<Polynomial, unsigned> berlekamp_massey(const std::vector<Rational> &seq)
{
    std::vector<Rational> c{Rational(1)}, b{Rational(1)};
    unsigned len = 0, shift = 1;
    Rational last = 1;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        Rational d = seq[n];
        for (unsigned i = 1; i <= len && i < c.size(); ++i) {
            d += c[i] * seq[n - i];
        }
        if (is_zero(d)) {
            ++shift;
            continue;
        }
        const Rational coef = d / last;
        std::vector<Rational> next = c;
        if (next.size() < b.size() + shift) {
            next.resize(b.size() + shift);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            next[i + shift] -= coef * b[i];
        }
        if (2 * len <= n) {
            b = c;
            len = static_cast<unsigned>(n + 1 - len);
            last = d;
            shift = 1;
        } else {
            ++shift;
        }
        c = std::move(next);
    }
    return {Polynomial(std::move(c)), len};
}

// Aho-Corasick automaton recognising words that avoid a set of obstruction
// words.  Live states are the trie nodes whose suffix chain contains no
// complete obstruction.
class ObstructionAutomaton
{
public:
    ObstructionAutomaton(const Alphabet &alphabet, const std::vector<Word> &obstructions) : alphabet_(alphabet)
    {
        const std::size_t k = alphabet.size();
        nodes_.push_back(Node{std::vector<int>(k, -1), 0, false});
        for (const auto &w : obstructions) {
            if (w.empty()) {
                throw std::invalid_argument("empty obstruction word");
            }
            int cur = 0;
            for (char c : w.letters) {
                const auto l = static_cast<Letter>(c);
                if (l >= k) {
                    throw std::out_of_range("obstruction letter outside the alphabet");
                }
                if (nodes_[cur].next[l] < 0) {
                    nodes_[cur].next[l] = static_cast<int>(nodes_.size());
                    nodes_.push_back(Node{std::vector<int>(k, -1), 0, false});
                }
                cur = nodes_[cur].next[l];
            }
            nodes_[cur].dead = true;
        }
        // BFS fills failure links and completes the goto function.
        std::deque<int> queue;
        for (std::size_t l = 0; l < k; ++l) {
            int &nx = nodes_[0].next[l];
            if (nx < 0) {
                nx = 0;
            } else {
                nodes_[nx].fail = 0;
                queue.push_back(nx);
            }
        }
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            nodes_[u].dead = nodes_[u].dead || nodes_[nodes_[u].fail].dead;
            for (std::size_t l = 0; l < k; ++l) {
                const int v = nodes_[u].next[l];
                if (v >= 0) {
                    nodes_[v].fail = nodes_[nodes_[u].fail].next[l];
                    queue.push_back(v);
                } else {
                    nodes_[u].next[l] = nodes_[nodes_[u].fail].next[l];
                }
            }
        }
        // Compact numbering of live states; the root is live unless an
        // obstruction is empty (rejected above).
        live_index_.assign(nodes_.size(), -1);
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (!nodes_[i].dead) {
                live_index_[i] = static_cast<int>(live_.size());
                live_.push_back(static_cast<int>(i));
            }
        }
    }

    const Alphabet &alphabet() const { return alphabet_; }
    std::size_t live_states() const { return live_.size(); }

    // Next live state (as a live index) or -1 when an obstruction completes.
    int next(int live_state, Letter l) const
    {
        const int node = nodes_[live_[live_state]].next[l];
        return live_index_[node];
    }

    bool accepts(std::string_view letters) const
    {
        int s = 0;
        for (char c : letters) {
            s = next(s, static_cast<Letter>(c));
            if (s < 0) {
                return false;
            }
        }
        return true;
    }

    // Number of accepted (normal) words of each degree <= D.
    TruncatedSeries count(unsigned degree) const
    {
        std::vector<std::vector<Integer>> table(degree + 1, std::vector<Integer>(live_.size()));
        table[0][0] = 1;
        for (unsigned d = 0; d <= degree; ++d) {
            for (std::size_t s = 0; s < live_.size(); ++s) {
                if (table[d][s] == 0) {
                    continue;
                }
                for (std::size_t l = 0; l < alphabet_.size(); ++l) {
                    const unsigned nd = d + alphabet_.degree(static_cast<Letter>(l));
                    if (nd > degree) {
                        continue;
                    }
                    const int t = next(static_cast<int>(s), static_cast<Letter>(l));
                    if (t >= 0) {
                        table[nd][t] += table[d][s];
                    }
                }
            }
        }
        TruncatedSeries out(degree);
        for (unsigned d = 0; d <= degree; ++d) {
            Integer sum = 0;
            for (const auto &v : table[d]) {
                sum += v;
            }
            out[d] = Rational(sum);
        }
        return out;
    }

    // Accepted words grouped by degree, each group in ascending deglex order.
    std::vector<std::vector<Word>> words(unsigned degree, std::size_t cap = 5'000'000) const
    {
        std::vector<std::vector<std::pair<Word, int>>> layers(degree + 1);
        layers[0].push_back({Word{}, 0});
        std::size_t total = 1;
        for (unsigned d = 0; d <= degree; ++d) {
            for (std::size_t i = 0; i < layers[d].size(); ++i) {
                for (std::size_t l = 0; l < alphabet_.size(); ++l) {
                    const auto letter = static_cast<Letter>(l);
                    const unsigned nd = d + alphabet_.degree(letter);
                    if (nd > degree) {
                        continue;
                    }
                    const int t = next(layers[d][i].second, letter);
                    if (t < 0) {
                        continue;
                    }
                    if (++total > cap) {
                        throw std::length_error("normal word enumeration exceeds the configured cap");
                    }
                    layers[nd].push_back({layers[d][i].first * alphabet_.letter(letter), t});
                }
            }
        }
        std::vector<std::vector<Word>> out(degree + 1);
        for (unsigned d = 0; d <= degree; ++d) {
            for (auto &entry : layers[d]) {
                out[d].push_back(std::move(entry.first));
            }
            std::sort(out[d].begin(), out[d].end());
        }
        return out;
    }

    // Exact closed form of the normal-word series.  The sequence satisfies a
    // recurrence of order at most (live states) * (max generator degree), so
    // twice that many terms determine it.
    RationalSeries rational_series() const
    {
        const unsigned bound = static_cast<unsigned>(live_.size()) * alphabet_.max_degree();
        const unsigned terms = 2 * bound + 8;
        const TruncatedSeries seq = count(terms);
        auto [conn, len] = berlekamp_massey(seq.coefficients());
        if (len > bound) {
            throw std::logic_error("recurrence longer than the transfer-matrix bound");
        }
        std::vector<Rational> num(len == 0 ? 1 : len);
        for (unsigned n = 0; n < num.size(); ++n) {
            for (int i = 0; i <= conn.degree() && static_cast<unsigned>(i) <= n; ++i) {
                num[n] += conn.coeff(i) * seq[n - i];
            }
        }
        RationalSeries r(Polynomial(std::move(num)), conn);
        if (!(r.expand(terms) == seq)) {
            throw std::logic_error("closed form does not reproduce the normal-word counts");
        }
        return r;
    }

private:
    struct Node {
        std::vector<int> next;
        int fail = 0;
        bool dead = false;
    };

    Alphabet alphabet_;
    std::vector<Node> nodes_;
    std::vector<int> live_;
    std::vector<int> live_index_;
};

} // namespace ncgrowth
