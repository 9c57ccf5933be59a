#pragma once

// Test-only reference implementations, kept independent of the library's
// rewriting and rank paths: a plain-rational Gaussian elimination, a naive
// exhaustive free-algebra rewriter, a classical Chevalley-Eilenberg complex
// for trivially graded algebras, and a classical H^2 computation.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "colorlie/enveloping.hpp"

namespace oracles {

using colorlie::ColorLieAlgebra;
using colorlie::CycScalar;
using colorlie::NCPoly;
using colorlie::Word;

using QMatrix = std::vector<std::vector<mpq_class>>;

inline size_t q_rank(QMatrix m) {
    size_t rank = 0;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[rank][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

inline mpq_class to_q(const CycScalar& s) {
    if (!s.is_rational()) throw std::runtime_error("oracle needs rational scalars");
    return s.rational_part();
}

// Structure constants as rationals; only valid for trivially graded input.
inline std::map<std::pair<int, int>, std::map<int, mpq_class>> q_brackets(
    const ColorLieAlgebra& l) {
    std::map<std::pair<int, int>, std::map<int, mpq_class>> out;
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < l.dim(); ++j)
            for (const auto& [k, c] : l.bracket(i, j))
                if (!c.is_zero()) out[{i, j}][k] = to_q(c);
    return out;
}

// ---- naive exhaustive rewriter -------------------------------------------
// Expands every reducible word at its rightmost redex, one full sweep at a
// time, until nothing changes. No worklist, no merging tricks.
inline NCPoly naive_normal_form(const colorlie::EnvelopingAlgebra& e, const NCPoly& input) {
    const ColorLieAlgebra& l = e.algebra();
    auto reducible_at = [&](const Word& w) -> std::optional<size_t> {
        for (size_t t = w.size(); t-- > 1;) {
            size_t s = t - 1;
            if (w[s] > w[t]) return s;
            if (w[s] == w[t] && l.parity_of(w[s]) == -1) return s;
        }
        return std::nullopt;
    };
    NCPoly current = input;
    for (;;) {
        bool changed = false;
        NCPoly next;
        for (const auto& [w, c] : current) {
            auto t = reducible_at(w);
            if (!t) {
                colorlie::add_term(next, w, c);
                continue;
            }
            changed = true;
            size_t s = *t;
            uint32_t a = w[s], b = w[s + 1];
            auto splice = [&](std::optional<uint32_t> letter) {
                Word r(w.begin(), w.begin() + s);
                if (letter) r.push_back(*letter);
                r.insert(r.end(), w.begin() + s + 2, w.end());
                return r;
            };
            if (a > b) {
                Word swapped = w;
                std::swap(swapped[s], swapped[s + 1]);
                colorlie::add_term(next, swapped, c * l.eps_ij(a, b));
                for (const auto& [k, coeff] : l.bracket(a, b))
                    colorlie::add_term(next, splice(static_cast<uint32_t>(k)), c * coeff);
                colorlie::add_term(next, splice(std::nullopt), c * e.omega().value(l, a, b));
            } else {
                CycScalar half = CycScalar::from_rational(mpq_class(1, 2), e.order());
                for (const auto& [k, coeff] : l.bracket(a, a))
                    colorlie::add_term(next, splice(static_cast<uint32_t>(k)), c * coeff * half);
                colorlie::add_term(next, splice(std::nullopt),
                                   c * e.omega().value(l, a, a) * half);
            }
        }
        current = std::move(next);
        if (!changed) return current;
    }
}

// ---- classical Chevalley-Eilenberg, trivial coefficients ------------------
// Cochains are alternating forms on strictly increasing index tuples;
// delta f(x_0..x_n) = sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..hat i..hat j..).
struct ClassicalCE {
    int dim;
    std::map<std::pair<int, int>, std::map<int, mpq_class>> brackets;

    explicit ClassicalCE(const ColorLieAlgebra& l) : dim(l.dim()), brackets(q_brackets(l)) {}

    std::vector<std::vector<int>> tuples(int n) const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        build(n, 0, cur, out);
        return out;
    }

    void build(int n, int start, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) const {
        if (n == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < dim; ++i) {
            cur.push_back(i);
            build(n - 1, i + 1, cur, out);
            cur.pop_back();
        }
    }

    // sign of sorting a tuple; nullopt if repeated
    static std::optional<std::pair<int, std::vector<int>>> sort_tuple(std::vector<int> t) {
        int sign = 1;
        for (size_t i = 1; i < t.size(); ++i)
            for (size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
                std::swap(t[j - 1], t[j]);
                sign = -sign;
            }
        for (size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i] == t[i + 1]) return std::nullopt;
        return std::make_pair(sign, t);
    }

    QMatrix delta(int n) const {
        auto src = tuples(n), dst = tuples(n + 1);
        std::map<std::vector<int>, size_t> src_index;
        for (size_t i = 0; i < src.size(); ++i) src_index[src[i]] = i;
        QMatrix m(dst.size(), std::vector<mpq_class>(src.size(), 0));
        for (size_t row = 0; row < dst.size(); ++row) {
            const auto& v = dst[row];
            for (size_t i = 0; i < v.size(); ++i)
                for (size_t j = i + 1; j < v.size(); ++j) {
                    auto br = brackets.find({v[i], v[j]});
                    if (br == brackets.end()) continue;
                    std::vector<int> rest;
                    for (size_t t = 0; t < v.size(); ++t)
                        if (t != i && t != j) rest.push_back(v[t]);
                    for (const auto& [k, c] : br->second) {
                        std::vector<int> tup;
                        tup.push_back(k);
                        tup.insert(tup.end(), rest.begin(), rest.end());
                        auto sorted = sort_tuple(tup);
                        if (!sorted) continue;
                        int sgn = ((i + j) % 2 == 0 ? 1 : -1) * sorted->first;
                        m[row][src_index[sorted->second]] += sgn * c;
                    }
                }
        }
        return m;
    }

    // dim H^n for n = 0..n_max with trivial coefficients
    std::vector<long> cohomology(int n_max) const {
        std::vector<long> h;
        size_t prev_rank = 0;
        for (int n = 0; n <= n_max; ++n) {
            long dim_n = static_cast<long>(tuples(n).size());
            size_t rank_n = q_rank(delta(n));
            h.push_back(dim_n - static_cast<long>(rank_n) - static_cast<long>(prev_rank));
            prev_rank = rank_n;
        }
        return h;
    }
};

// ---- classical H^2 with scalar coefficients -------------------------------
inline long classical_h2(const ColorLieAlgebra& l) {
    ClassicalCE ce(l);
    auto pairs = ce.tuples(2);
    auto triples = ce.tuples(3);
    std::map<std::vector<int>, size_t> pair_index;
    for (size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = i;

    // Z^2 = kernel of the classical delta_2 (as a matrix triples x pairs).
    QMatrix d2(triples.size(), std::vector<mpq_class>(pairs.size(), 0));
    for (size_t row = 0; row < triples.size(); ++row) {
        const auto& v = triples[row];
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j) {
                auto br = ce.brackets.find({v[i], v[j]});
                if (br == ce.brackets.end()) continue;
                int other = 0;
                for (size_t t = 0; t < 3; ++t)
                    if (t != i && t != j) other = v[t];
                for (const auto& [k, c] : br->second) {
                    auto sorted = ClassicalCE::sort_tuple({k, other});
                    if (!sorted) continue;
                    int sgn = ((i + j) % 2 == 0 ? 1 : -1) * sorted->first;
                    d2[row][pair_index[sorted->second]] += sgn * c;
                }
            }
    }
    long z2 = static_cast<long>(pairs.size()) - static_cast<long>(q_rank(d2));

    // B^2 = image of lambda -> -lambda([x,y]).
    QMatrix d1(pairs.size(), std::vector<mpq_class>(ce.dim, 0));
    for (size_t row = 0; row < pairs.size(); ++row) {
        auto br = ce.brackets.find({pairs[row][0], pairs[row][1]});
        if (br == ce.brackets.end()) continue;
        for (const auto& [k, c] : br->second) d1[row][k] -= c;
    }
    long b2 = static_cast<long>(q_rank(d1));
    return z2 - b2;
}

}  // namespace oracles
