#include "colorlie/enveloping.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorlie {

void add_term(NCPoly& p, const Word& w, const CycScalar& c) {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end())
        p.emplace(w, c);
    else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

void add_scaled(NCPoly& p, const NCPoly& q, const CycScalar& c) {
    if (c.is_zero()) return;
    for (const auto& [w, coeff] : q) add_term(p, w, coeff * c);
}

EnvelopingAlgebra::EnvelopingAlgebra(ColorLieAlgebra l, Cocycle2 omega)
    : l_(std::move(l)), omega_(std::move(omega)) {
    parity_.reserve(l_.dim());
    for (int i = 0; i < l_.dim(); ++i) parity_.push_back(l_.parity_of(i));
}

bool EnvelopingAlgebra::reducible_pair(uint32_t a, uint32_t b) const {
    return a > b || (a == b && parity_[a] == -1);
}

std::optional<size_t> EnvelopingAlgebra::find_redex(const Word& w, Strategy s) const {
    if (w.size() < 2) return std::nullopt;
    if (s == Strategy::Leftmost) {
        for (size_t t = 0; t + 1 < w.size(); ++t)
            if (reducible_pair(w[t], w[t + 1])) return t;
    } else {
        for (size_t t = w.size() - 1; t-- > 0;)
            if (reducible_pair(w[t], w[t + 1])) return t;
    }
    return std::nullopt;
}

void EnvelopingAlgebra::expand_redex(NCPoly& out, const Word& w, size_t t,
                                     const CycScalar& c) const {
    const uint32_t a = w[t], b = w[t + 1];
    auto with_letter = [&](uint32_t k) {
        // w with the pair at (t, t+1) replaced by the single letter k
        Word r;
        r.reserve(w.size() - 1);
        r.insert(r.end(), w.begin(), w.begin() + t);
        r.push_back(k);
        r.insert(r.end(), w.begin() + t + 2, w.end());
        return r;
    };
    Word without;  // w with the pair removed
    without.reserve(w.size() - 2);
    without.insert(without.end(), w.begin(), w.begin() + t);
    without.insert(without.end(), w.begin() + t + 2, w.end());

    if (a > b) {
        // x_a x_b -> eps x_b x_a + [x_a, x_b] + omega(x_a, x_b)
        Word swapped = w;
        std::swap(swapped[t], swapped[t + 1]);
        add_term(out, swapped, c * l_.eps_ij(a, b));
        for (const auto& [k, coeff] : l_.bracket(a, b)) add_term(out, with_letter(k), c * coeff);
        add_term(out, without, c * omega_.value(l_, a, b));
    } else {
        // odd square: x_a x_a -> ([x_a,x_a] + omega(x_a,x_a)) / 2
        CycScalar half = CycScalar::from_rational(Rational(1, 2), order());
        for (const auto& [k, coeff] : l_.bracket(a, a))
            add_term(out, with_letter(k), c * coeff * half);
        add_term(out, without, c * omega_.value(l_, a, a) * half);
    }
}

PBWElement EnvelopingAlgebra::normal_form_counted(const NCPoly& p, uint64_t& steps,
                                                  const RewriteOptions& opts) const {
    steps = 0;
    PBWElement result;
    NCPoly pending = p;
    while (!pending.empty()) {
        // Largest word first so shorter spawn terms merge before processing.
        auto it = std::prev(pending.end());
        Word w = it->first;
        CycScalar c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        auto t = find_redex(w, opts.strategy);
        if (!t) {
            add_term(result, w, c);
            continue;
        }
        ++steps;
        if (opts.budget && steps > opts.budget)
            throw std::runtime_error("rewrite step budget exceeded");
        expand_redex(pending, w, *t, c);
    }
    return result;
}

PBWElement EnvelopingAlgebra::normal_form(const NCPoly& p, const RewriteOptions& opts) const {
    uint64_t steps = 0;
    return normal_form_counted(p, steps, opts);
}

PBWElement EnvelopingAlgebra::multiply(const PBWElement& a, const PBWElement& b) const {
    NCPoly prod;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            add_term(prod, w, ca * cb);
        }
    return normal_form(prod);
}

PBWElement EnvelopingAlgebra::one() const {
    PBWElement r;
    r.emplace(Word{}, CycScalar::one(order()));
    return r;
}

PBWElement EnvelopingAlgebra::bracket_in_u(int i, int j) const {
    NCPoly p;
    add_term(p, Word{static_cast<uint32_t>(i), static_cast<uint32_t>(j)}, CycScalar::one(order()));
    add_term(p, Word{static_cast<uint32_t>(j), static_cast<uint32_t>(i)}, -l_.eps_ij(i, j));
    return normal_form(p);
}

const OverlapReport& EnvelopingAlgebra::check_overlaps() {
    if (checked_) return overlap_report_;
    overlap_report_ = OverlapReport{};
    const int d = l_.dim();
    for (int k = 0; k < d; ++k)
        for (int j = 0; j <= k; ++j) {
            if (!reducible_pair(k, j)) continue;
            for (int i = 0; i <= j; ++i) {
                if (!reducible_pair(j, i)) continue;
                ++overlap_report_.ambiguities;
                Word w{static_cast<uint32_t>(k), static_cast<uint32_t>(j),
                       static_cast<uint32_t>(i)};
                NCPoly left, right;
                expand_redex(left, w, 0, CycScalar::one(order()));
                expand_redex(right, w, 1, CycScalar::one(order()));
                PBWElement diff = normal_form(left);
                add_scaled(diff, normal_form(right), -CycScalar::one(order()));
                if (!diff.empty())
                    overlap_report_.mismatches.push_back(
                        {{i, j, k}, std::move(diff)});
            }
        }
    checked_ = true;
    trusted_ = overlap_report_.ok();
    return overlap_report_;
}

GroupElement EnvelopingAlgebra::degree_of_word(const Word& w) const {
    GroupElement g = group_identity(l_.group);
    for (uint32_t i : w) g = group_compose(l_.group, g, l_.deg(i));
    return g;
}

bool EnvelopingAlgebra::is_ordered_monomial(const Word& w) const {
    for (size_t t = 0; t + 1 < w.size(); ++t) {
        if (w[t] > w[t + 1]) return false;
        if (w[t] == w[t + 1] && parity_[w[t]] == -1) return false;
    }
    return true;
}

namespace {
void enumerate_monomials(int d, const std::vector<int>& parity, int n, uint32_t min_index,
                         Word& prefix, std::vector<Word>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (uint32_t i = min_index; i < static_cast<uint32_t>(d); ++i) {
        prefix.push_back(i);
        enumerate_monomials(d, parity, n - 1, parity[i] == -1 ? i + 1 : i, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<Word> EnvelopingAlgebra::monomials(int n) const {
    std::vector<Word> out;
    Word prefix;
    enumerate_monomials(l_.dim(), parity_, n, 0, prefix, out);
    return out;
}

std::vector<Word> EnvelopingAlgebra::monomials_up_to(int n) const {
    std::vector<Word> out;
    for (int k = 0; k <= n; ++k) {
        auto part = monomials(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

DimsTable EnvelopingAlgebra::dims(int max_degree) const {
    DimsTable table;
    for (int n = 0; n <= max_degree; ++n) {
        auto& row = table.pbw[n];
        for (const auto& m : monomials(n)) ++row[degree_of_word(m)];
    }
    // Independent count: convolve per-generator Hilbert series of S(L)
    // (even generators polynomial, odd generators square-zero).
    std::map<int, std::map<GroupElement, long>> sym;
    sym[0][group_identity(l_.group)] = 1;
    for (int i = 0; i < l_.dim(); ++i) {
        std::map<int, std::map<GroupElement, long>> next;
        for (const auto& [n, row] : sym)
            for (const auto& [g, count] : row) {
                int max_mult = parity_[i] == -1 ? 1 : max_degree - n;
                GroupElement acc = g;
                for (int m = 0; m <= max_mult && n + m <= max_degree; ++m) {
                    if (m > 0) acc = group_compose(l_.group, acc, l_.deg(i));
                    next[n + m][acc] += count;
                }
            }
        sym = std::move(next);
    }
    for (int n = 0; n <= max_degree; ++n) table.symmetric[n];  // force empty rows to exist
    for (const auto& [n, row] : sym)
        for (const auto& [g, count] : row)
            if (count) table.symmetric[n][g] = count;
    // Drop zero entries on the pbw side for comparability.
    for (auto& [n, row] : table.pbw)
        for (auto it = row.begin(); it != row.end();)
            it = it->second == 0 ? row.erase(it) : std::next(it);
    table.match = true;
    for (int n = 0; n <= max_degree; ++n)
        if (table.pbw[n] != table.symmetric[n]) table.match = false;
    return table;
}

PBWElement EnvelopingAlgebra::symbol(const PBWElement& a) const {
    if (a.empty()) throw std::invalid_argument("symbol of zero");
    size_t top = 0;
    for (const auto& [w, c] : a) top = std::max(top, w.size());
    PBWElement s;
    for (const auto& [w, c] : a)
        if (w.size() == top) s.emplace(w, c);
    return s;
}

std::string EnvelopingAlgebra::word_name(const Word& w) const {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += l_.gens[w[i]].name;
    }
    return s;
}

mpz_class rewrite_step_bound(int n, int d) {
    // T(len, inv) = worst-case rule applications starting from one word:
    // a swap lowers the inversion count by one, a bracket spawns up to d
    // words one letter shorter, the scalar part one word two letters shorter.
    if (n < 0) return 0;
    std::vector<std::vector<mpz_class>> t(n + 1);
    std::vector<mpz_class> tmax(n + 1);
    for (int len = 0; len <= n; ++len) {
        int maxinv = len * (len - 1) / 2;
        t[len].resize(maxinv + 1);
        for (int inv = 0; inv <= maxinv; ++inv) {
            if (len < 2) {
                t[len][inv] = 0;
                continue;
            }
            mpz_class spawn = 1 + d * tmax[len - 1] + tmax[len - 2];
            t[len][inv] = inv > 0 ? spawn + t[len][inv - 1] : spawn;
        }
        tmax[len] = t[len][maxinv];
    }
    return tmax[n];
}

IsoReport filtered_iso(const EnvelopingAlgebra& e1, const EnvelopingAlgebra& e2,
                       const Cochain1& lambda, int max_degree) {
    const ColorLieAlgebra& l = e1.algebra();
    IsoReport report;

    // Precondition: delta lambda = omega1 - omega2.
    Cocycle2 delta = coboundary(l, lambda);
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i; j < l.dim(); ++j) {
            CycScalar want = e1.omega().value(l, i, j) - e2.omega().value(l, i, j);
            if (delta.value(l, i, j) != want) return report;  // not cohomologous via this lambda
        }
    report.cohomologous = true;
    report.lambda = lambda;

    const unsigned order = l.order;
    auto psi_word = [&](const Word& w) {
        // Product of (x_i + lambda_i) over the letters of w, in the free algebra.
        NCPoly acc;
        acc.emplace(Word{}, CycScalar::one(order));
        for (uint32_t i : w) {
            NCPoly next;
            CycScalar li = lambda.value(l, static_cast<int>(i));
            for (const auto& [u, c] : acc) {
                Word ui = u;
                ui.push_back(i);
                add_term(next, ui, c);
                add_term(next, u, c * li);
            }
            acc = std::move(next);
        }
        return acc;
    };

    // (a) Defining relations of E1 map to zero in E2.
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j <= i; ++j) {
            if (i == j && l.parity_of(i) != -1) continue;  // trivial relation
            NCPoly image = psi_word({static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
            add_scaled(image, psi_word({static_cast<uint32_t>(j), static_cast<uint32_t>(i)}),
                       -l.eps_ij(i, j));
            for (const auto& [k, c] : l.bracket(i, j))
                add_scaled(image, psi_word({static_cast<uint32_t>(k)}), -c);
            add_term(image, Word{}, -e1.omega().value(l, i, j));
            PBWElement nf = e2.normal_form(image);
            if (!nf.empty()) report.relation_defects.push_back({{i, j}, std::move(nf)});
        }

    // (b)+(c) PBW basis maps triangularly with top coefficient 1 = identity
    // on symbols.
    for (const auto& m : e2.monomials_up_to(max_degree)) {
        PBWElement image = e2.normal_form(psi_word(m));
        bool good = true;
        auto it = image.find(m);
        if (it == image.end() || !it->second.is_one()) good = false;
        for (const auto& [w, c] : image)
            if (w.size() >= m.size() && w != m) good = false;
        if (!good) report.triangularity_failures.push_back(m);
    }
    return report;
}

}  // namespace colorlie
