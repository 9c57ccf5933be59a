#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/algebra.hpp"

namespace colorlie {

/// A word in the free algebra on the generators, as index sequence.
using Word = std::vector<uint32_t>;

/// Degree-lexicographic order: shorter words first, then lexicographic.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Element of the tensor algebra: finite scalar combination of words.
/// Zero coefficients are never stored.
using NCPoly = std::map<Word, CycScalar, WordLess>;

/// Same representation, with the invariant that every word is an ordered
/// monomial: weakly increasing indices, strictly increasing at odd generators.
using PBWElement = NCPoly;

void add_term(NCPoly& p, const Word& w, const CycScalar& c);
void add_scaled(NCPoly& p, const NCPoly& q, const CycScalar& c);

enum class Strategy { Leftmost, Rightmost };

struct RewriteOptions {
    Strategy strategy = Strategy::Leftmost;
    uint64_t budget = 0;  // 0 = unlimited; rewriting terminates regardless
};

struct OverlapMismatch {
    std::array<int, 3> triple;  // ascending generator indices
    PBWElement difference;
};

struct OverlapReport {
    size_t ambiguities = 0;
    std::vector<OverlapMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Table (word length n, G-degree) -> monomial count, with the matching
/// eps-symmetric-algebra count computed by an independent route.
struct DimsTable {
    std::map<int, std::map<GroupElement, long>> pbw;
    std::map<int, std::map<GroupElement, long>> symmetric;
    bool match = false;
};

struct IsoReport {
    bool cohomologous = false;
    Cochain1 lambda;
    std::vector<std::pair<std::pair<int, int>, PBWElement>> relation_defects;
    std::vector<Word> triangularity_failures;
    bool ok() const { return cohomologous && relation_defects.empty() && triangularity_failures.empty(); }
};

/// U_omega(L): the straightening rewriting system
///   x_j x_i -> eps(j,i) x_i x_j + [x_j,x_i] + omega(x_j,x_i)      (j > i)
///   x_i x_i -> ([x_i,x_i] + omega(x_i,x_i)) / 2                   (x_i odd)
/// Trusted once every overlap ambiguity resolves (check_overlaps).
class EnvelopingAlgebra {
  public:
    EnvelopingAlgebra(ColorLieAlgebra l, Cocycle2 omega);

    const ColorLieAlgebra& algebra() const { return l_; }
    const Cocycle2& omega() const { return omega_; }
    unsigned order() const { return l_.order; }
    bool trusted() const { return trusted_; }

    /// Resolves every ambiguity x_k x_j x_i both ways; empty mismatch list
    /// marks the algebra trusted (the PBW monomials are then a basis).
    const OverlapReport& check_overlaps();

    PBWElement normal_form(const NCPoly& p, const RewriteOptions& opts = {}) const;
    /// Same, reporting the number of rule applications.
    PBWElement normal_form_counted(const NCPoly& p, uint64_t& steps,
                                   const RewriteOptions& opts = {}) const;

    PBWElement multiply(const PBWElement& a, const PBWElement& b) const;
    PBWElement one() const;

    /// x_i x_j - eps(i,j) x_j x_i as a PBW element; by the defining relations
    /// it equals [x_i,x_j] + omega(x_i,x_j) 1.
    PBWElement bracket_in_u(int i, int j) const;

    /// Monomial counts per length <= max_degree and G-degree, against the
    /// eps-symmetric algebra counted by generating-series convolution.
    DimsTable dims(int max_degree) const;

    /// Top filtration component; the image in gr U = S(L).
    PBWElement symbol(const PBWElement& a) const;

    GroupElement degree_of_word(const Word& w) const;
    bool is_ordered_monomial(const Word& w) const;
    /// All PBW monomials of length exactly n, in lexicographic order.
    std::vector<Word> monomials(int n) const;
    /// All PBW monomials of length <= n, shortest first.
    std::vector<Word> monomials_up_to(int n) const;

    std::string word_name(const Word& w) const;  // "." joined generator names

  private:
    bool reducible_pair(uint32_t a, uint32_t b) const;
    std::optional<size_t> find_redex(const Word& w, Strategy s) const;
    // Expands the redex at position t of w into `out` (scaled by c).
    void expand_redex(NCPoly& out, const Word& w, size_t t, const CycScalar& c) const;

    ColorLieAlgebra l_;
    Cocycle2 omega_;
    std::vector<int> parity_;  // per generator
    bool trusted_ = false;
    bool checked_ = false;
    OverlapReport overlap_report_;
};

/// Upper bound on rule applications when rewriting one word of length n over
/// d generators; computed from the (length, inversions) termination order.
mpz_class rewrite_step_bound(int n, int d);

/// Psi(x_i) = x_i + lambda_i, extended multiplicatively, checked to be a
/// filtered isomorphism U_{omega1}(L) -> U_{omega2}(L): relations map to zero,
/// PBW monomials up to max_degree map triangularly (symbol identity).
IsoReport filtered_iso(const EnvelopingAlgebra& e1, const EnvelopingAlgebra& e2,
                       const Cochain1& lambda, int max_degree);

}  // namespace colorlie
