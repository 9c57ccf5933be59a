#include "colorlie/hopf.hpp"

#include <stdexcept>

namespace colorlie {

void add_term(TensorSquare& t, const Word& a, const Word& b, const CycScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end())
        t.emplace(std::move(key), c);
    else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

TensorSquare braided_mul(const EnvelopingAlgebra& e, const TensorSquare& s,
                         const TensorSquare& t) {
    const ColorLieAlgebra& l = e.algebra();
    TensorSquare out;
    for (const auto& [ab, c1] : s)
        for (const auto& [ab2, c2] : t) {
            CycScalar braid =
                l.eps_of(e.degree_of_word(ab.second), e.degree_of_word(ab2.first));
            // components multiply in U, then renormalize
            PBWElement left, right;
            add_term(left, ab.first, CycScalar::one(e.order()));
            add_term(right, ab.second, CycScalar::one(e.order()));
            PBWElement a2, b2;
            add_term(a2, ab2.first, CycScalar::one(e.order()));
            add_term(b2, ab2.second, CycScalar::one(e.order()));
            PBWElement aa = e.multiply(left, a2);
            PBWElement bb = e.multiply(right, b2);
            CycScalar f = c1 * c2 * braid;
            for (const auto& [wa, ca] : aa)
                for (const auto& [wb, cb] : bb) add_term(out, wa, wb, f * ca * cb);
        }
    return out;
}

namespace {

void require_untwisted(const EnvelopingAlgebra& e, const char* what) {
    if (!e.omega().is_zero())
        throw std::domain_error(std::string(what) +
                                " requires omega = 0; run hopf_ideal_check for the obstruction");
}

TensorSquare unit_tensor(const EnvelopingAlgebra& e) {
    TensorSquare t;
    add_term(t, Word{}, Word{}, CycScalar::one(e.order()));
    return t;
}

TensorSquare primitive(const EnvelopingAlgebra& e, uint32_t i) {
    TensorSquare t;
    add_term(t, Word{i}, Word{}, CycScalar::one(e.order()));
    add_term(t, Word{}, Word{i}, CycScalar::one(e.order()));
    return t;
}

}  // namespace

TensorSquare coproduct(const EnvelopingAlgebra& e, const PBWElement& a) {
    require_untwisted(e, "coproduct");
    TensorSquare out;
    for (const auto& [w, c] : a) {
        TensorSquare acc = unit_tensor(e);
        for (uint32_t i : w) acc = braided_mul(e, acc, primitive(e, i));
        for (const auto& [ab, coeff] : acc) add_term(out, ab.first, ab.second, coeff * c);
    }
    return out;
}

CycScalar counit(const EnvelopingAlgebra& e, const PBWElement& a) {
    auto it = a.find(Word{});
    return it == a.end() ? CycScalar::zero(e.order()) : it->second;
}

PBWElement antipode(const EnvelopingAlgebra& e, const PBWElement& a) {
    require_untwisted(e, "antipode");
    const ColorLieAlgebra& l = e.algebra();
    PBWElement out;
    for (const auto& [w, c] : a) {
        // S(x_{i_1} ... x_{i_n}): peel letters from the left;
        // S(x u) = eps(|x|,|u|) S(u) S(x) = -eps(|x|,|u|) S(u) x.
        PBWElement s = e.one();
        for (size_t t = w.size(); t-- > 0;) {
            Word tail(w.begin() + t + 1, w.end());
            PBWElement x;
            add_term(x, Word{w[t]}, CycScalar::one(e.order()));
            PBWElement sx = e.multiply(s, x);
            s.clear();
            add_scaled(s, sx, -l.eps_of(l.deg(w[t]), e.degree_of_word(tail)));
        }
        add_scaled(out, s, c);
    }
    return out;
}

HopfReport hopf_ideal_check(const EnvelopingAlgebra& e, int max_degree) {
    const ColorLieAlgebra& l = e.algebra();
    HopfReport report;

    // Obstruction table: counit and coproduct residue of every defining
    // relation r = x_i x_j - eps x_j x_i - [x_i,x_j] - omega(x_i,x_j).
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i; j < l.dim(); ++j) {
            if (i == j && l.parity_of(i) != -1) continue;
            CycScalar wij = e.omega().value(l, i, j);
            // Delta(r) - r x 1 - 1 x r in the free tensor square; the mixed
            // terms cancel by antisymmetry of eps, leaving omega(i,j) 1 x 1.
            TensorSquare residue;
            {
                auto free_mul = [&](const TensorSquare& s, const TensorSquare& t) {
                    // braided product without normalization (tensor algebra)
                    TensorSquare out;
                    for (const auto& [ab, c1] : s)
                        for (const auto& [cd, c2] : t) {
                            CycScalar braid = l.eps_of(e.degree_of_word(ab.second),
                                                       e.degree_of_word(cd.first));
                            Word a = ab.first;
                            a.insert(a.end(), cd.first.begin(), cd.first.end());
                            Word b = ab.second;
                            b.insert(b.end(), cd.second.begin(), cd.second.end());
                            add_term(out, a, b, c1 * c2 * braid);
                        }
                    return out;
                };
                auto primitive_free = [&](uint32_t g) { return primitive(e, g); };
                TensorSquare d_ij = free_mul(primitive_free(i), primitive_free(j));
                TensorSquare d_ji = free_mul(primitive_free(j), primitive_free(i));
                residue = d_ij;
                for (const auto& [ab, c] : d_ji)
                    add_term(residue, ab.first, ab.second, -l.eps_ij(i, j) * c);
                for (const auto& [k, c] : l.bracket(i, j)) {
                    for (const auto& [ab, pc] : primitive_free(static_cast<uint32_t>(k)))
                        add_term(residue, ab.first, ab.second, -c * pc);
                }
                add_term(residue, Word{}, Word{}, -wij);
                // subtract r x 1 and 1 x r
                auto sub_r = [&](bool left) {
                    auto put = [&](const Word& w, const CycScalar& c) {
                        if (left)
                            add_term(residue, w, Word{}, -c);
                        else
                            add_term(residue, Word{}, w, -c);
                    };
                    put(Word{static_cast<uint32_t>(i), static_cast<uint32_t>(j)},
                        CycScalar::one(e.order()));
                    put(Word{static_cast<uint32_t>(j), static_cast<uint32_t>(i)},
                        -l.eps_ij(i, j));
                    for (const auto& [k, c] : l.bracket(i, j)) put(Word{static_cast<uint32_t>(k)}, -c);
                    put(Word{}, -wij);
                };
                sub_r(true);
                sub_r(false);
            }
            // Reduce both legs modulo the ideal (I x T + T x I is the kernel
            // of componentwise normalization).
            TensorSquare reduced;
            for (const auto& [ab, c] : residue) {
                NCPoly pa, pb;
                add_term(pa, ab.first, CycScalar::one(e.order()));
                add_term(pb, ab.second, CycScalar::one(e.order()));
                PBWElement na = e.normal_form(pa), nb = e.normal_form(pb);
                for (const auto& [wa, ca] : na)
                    for (const auto& [wb, cb] : nb) add_term(reduced, wa, wb, c * ca * cb);
            }
            CycScalar counit_of_r = -wij;
            CycScalar res = CycScalar::zero(e.order());
            auto it = reduced.find(std::make_pair(Word{}, Word{}));
            if (it != reduced.end()) res = it->second;
            bool scalar_only = reduced.size() <= 1 && (reduced.empty() || it != reduced.end());
            if (!counit_of_r.is_zero() || !res.is_zero() || !scalar_only)
                report.obstructions.push_back({i, j, counit_of_r, res});
        }

    // Hopf axioms on the untwisted algebra.
    EnvelopingAlgebra e0(l, Cocycle2{});
    e0.check_overlaps();
    if (!e0.trusted()) {
        report.axioms_ok = false;
        report.axiom_failures.push_back("untwisted algebra fails the overlap check");
        return report;
    }
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& m : e0.monomials(n)) {
            PBWElement mono;
            add_term(mono, m, CycScalar::one(e0.order()));
            TensorSquare d = coproduct(e0, mono);

            // coassociativity: (Delta x id) Delta = (id x Delta) Delta
            std::map<std::tuple<Word, Word, Word>, CycScalar> lhs, rhs;
            for (const auto& [ab, c] : d) {
                PBWElement first;
                add_term(first, ab.first, CycScalar::one(e0.order()));
                for (const auto& [uv, c2] : coproduct(e0, first)) {
                    auto key = std::make_tuple(uv.first, uv.second, ab.second);
                    auto [it2, fresh] = lhs.emplace(key, c * c2);
                    if (!fresh) {
                        it2->second += c * c2;
                        if (it2->second.is_zero()) lhs.erase(it2);
                    }
                }
                PBWElement second;
                add_term(second, ab.second, CycScalar::one(e0.order()));
                for (const auto& [uv, c2] : coproduct(e0, second)) {
                    auto key = std::make_tuple(ab.first, uv.first, uv.second);
                    auto [it2, fresh] = rhs.emplace(key, c * c2);
                    if (!fresh) {
                        it2->second += c * c2;
                        if (it2->second.is_zero()) rhs.erase(it2);
                    }
                }
            }
            if (!(lhs == rhs)) {
                report.axioms_ok = false;
                report.axiom_failures.push_back("coassociativity fails on " +
                                                (m.empty() ? "1" : e0.word_name(m)));
            }

            // counit: (counit x id) Delta = id = (id x counit) Delta
            PBWElement left_counit, right_counit;
            for (const auto& [ab, c] : d) {
                if (ab.first.empty()) add_term(right_counit, ab.second, c);
                if (ab.second.empty()) add_term(left_counit, ab.first, c);
            }
            if (!(left_counit == mono) || !(right_counit == mono)) {
                report.axioms_ok = false;
                report.axiom_failures.push_back("counit identity fails on " +
                                                (m.empty() ? "1" : e0.word_name(m)));
            }

            // antipode: m(S x id) Delta = counit(a) 1 = m(id x S) Delta
            PBWElement s_conv, conv_s;
            for (const auto& [ab, c] : d) {
                PBWElement a1, a2;
                add_term(a1, ab.first, CycScalar::one(e0.order()));
                add_term(a2, ab.second, CycScalar::one(e0.order()));
                add_scaled(s_conv, e0.multiply(antipode(e0, a1), a2), c);
                add_scaled(conv_s, e0.multiply(a1, antipode(e0, a2)), c);
            }
            PBWElement expected;
            add_scaled(expected, e0.one(), counit(e0, mono));
            if (!(s_conv == expected) || !(conv_s == expected)) {
                report.axioms_ok = false;
                report.axiom_failures.push_back("antipode identity fails on " +
                                                (m.empty() ? "1" : e0.word_name(m)));
            }
        }
    return report;
}

}  // namespace colorlie
