#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/modules.hpp"

namespace colorlie {

/// Basis of the n-th eps-exterior power: weakly increasing index words,
/// strictly increasing at even generators (odd generators may repeat).
std::vector<Word> wedge_basis(const ColorLieAlgebra& l, int n);

/// Wedge dimensions per length 0..n_max by generating-series convolution
/// (even generators contribute 1 + t q^deg, odd ones a geometric series);
/// an independent route to |wedge_basis|.
std::vector<long> wedge_dims_series(const ColorLieAlgebra& l, int n_max);

/// Expresses an arbitrary index word in the wedge basis: the accumulated
/// sign from a wedge b = -eps(|a|,|b|) b wedge a, or nullopt when the word
/// vanishes (repeated even generator).
std::optional<std::pair<CycScalar, Word>> straighten_wedge(const ColorLieAlgebra& l, Word w);

/// Same for the eps-symmetric algebra S(L): a b = eps(|a|,|b|) b a, repeated
/// odd generators vanish.
std::optional<std::pair<CycScalar, Word>> straighten_symmetric(const ColorLieAlgebra& l, Word w);

/// Cochain space C^n = Hom(wedge^n L, M); basis vector (u, r) sends the
/// wedge basis element u to the module basis vector m_r.
struct CochainSpace {
    std::vector<Word> wedges;
    int module_dim = 0;
    std::vector<GroupElement> degrees;  // per basis index u*module_dim + r

    size_t dim() const { return wedges.size() * module_dim; }
    size_t index(size_t wedge_idx, size_t r) const { return wedge_idx * module_dim + r; }
};

CochainSpace cochain_space(const ColorLieAlgebra& l, const GradedModule& m, int n);

/// Matrix of the coboundary C^n -> C^{n+1} in the enumerated bases, with the
/// sign bookkeeping eps_i = prod_{h<i} eps(|x_h|,|x_i|).
Matrix coboundary_matrix(const ColorLieAlgebra& l, const GradedModule& m, int n);

struct ComplexCheck {
    bool squares_to_zero = true;
    std::vector<int> nonzero_at;  // degrees n with delta_{n+1} delta_n != 0
    /// Measured pairing phi phi - eps phi phi - phi([,]) per generator pair.
    std::map<std::pair<int, int>, Matrix> measured;
    bool measured_twist_zero = true;
    /// omega(x_i,x_j) id - measured(i,j): zero exactly when the module is an
    /// honest (omega,L)-module for the supplied omega.
    std::map<std::pair<int, int>, Matrix> defect_vs_omega;
};

/// Computes delta_{n+1} delta_n for n < n_max and the twist-defect report of
/// the module against `w`. The square is asserted zero only by callers that
/// require it; here failures are findings.
ComplexCheck verify_complex(const ColorLieAlgebra& l, const Cocycle2& w, const GradedModule& m,
                            int n_max);

struct BlockDims {
    long dim = 0;       // dim C^n in this G-degree block
    long rank_out = 0;  // rank of delta_n restricted to the block
    long h = 0;         // dim H^n in the block
};

enum class DegreeFilter { Identity, All };

struct ComplexReport {
    int n_max = 0;
    std::map<int, std::map<GroupElement, BlockDims>> blocks;

    long total_h(int n) const;
    long h_at(int n, const GroupElement& g) const;
};

/// Cohomology dimensions per degree block through exact ranks; requires the
/// complex to square to zero (throws otherwise).
ComplexReport cohomology_dims(const ColorLieAlgebra& l, const Cocycle2& w, const GradedModule& m,
                              int n_max, DegreeFilter filter);

/// Element of the free resolution term U tensor wedge^n, keyed by wedge word.
using ResolutionElement = std::map<Word, PBWElement, WordLess>;

/// The resolution differential: moves one wedge letter into the U-coefficient
/// with its sign, plus the bracket contraction terms.
ResolutionElement resolution_d(const EnvelopingAlgebra& e, const ResolutionElement& elt);

struct KoszulBlock {
    long dim = 0;
    long rank_out = 0;  // rank of the differential leaving this spot
    long rank_in = 0;   // rank of the differential arriving here
    bool exact = false;
    bool composite_zero = true;
};

struct ResolutionReport {
    /// d o d on the resolution over U(L_omega), where the central extension
    /// absorbs omega and K really is a module. This must vanish.
    bool dd_zero = true;
    std::vector<std::pair<int, Word>> dd_failures;  // homological degree + wedge
    /// d o d on the quotient-side complex U_omega(L) tensor wedge(L), with
    /// brackets in L and omega re-entering through the coefficient products.
    /// Nonzero entries are findings: they reproduce omega on wedge pairs.
    bool quotient_dd_zero = true;
    std::vector<std::pair<int, Word>> quotient_dd_defects;
    // Koszul homology of gr: key (total degree, homological degree >= 1).
    std::map<std::pair<int, int>, KoszulBlock> koszul;
    bool koszul_exact = true;
};

/// (a) d composed with d on every wedge basis element with unit coefficient,
/// n <= n_max, over U(L_omega); (b) the same on the quotient side, surfaced
/// as findings; (c) exactness of the associated-graded Koszul complex
/// S(L) tensor wedge in homological degrees >= 1 per total degree <= deg_max.
ResolutionReport verify_resolution(const EnvelopingAlgebra& e, int n_max, int deg_max);

/// The Koszul part alone, usable with an unvalidated algebra (for seeding
/// deliberate sign corruptions in tests).
void koszul_check(const ColorLieAlgebra& l, int deg_max, ResolutionReport& report);

struct HochschildRow {
    std::map<GroupElement, long> per_degree;
    long total = 0;
};

/// dim H^n(L, adjoint truncated at N) for each requested truncation; only
/// values that stabilize in N are meaningful for U_omega(L) itself.
std::map<int, HochschildRow> hochschild_truncated(const EnvelopingAlgebra& e, int n,
                                                  const std::vector<int>& truncations);

}  // namespace colorlie
