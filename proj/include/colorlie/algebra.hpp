#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/grading.hpp"
#include "colorlie/linalg.hpp"

namespace colorlie {

/// Coefficient vector of an element of L in the generator basis (sparse).
using LinComb = std::map<int, CycScalar>;

struct Generator {
    std::string name;
    GroupElement degree;
};

/// Color Lie algebra given by homogeneous generators and structure constants.
/// Bracket entries are kept exactly as provided (both orientations may be
/// present, which lets the validator report antisymmetry violations); lookups
/// derive the missing orientation through eps-antisymmetry.
struct ColorLieAlgebra {
    unsigned order = 1;  // cyclotomic order of all coefficients
    GroupSpec group;
    Bicharacter eps;
    std::vector<Generator> gens;
    std::map<std::pair<int, int>, LinComb> bracket_raw;

    int dim() const { return static_cast<int>(gens.size()); }
    const GroupElement& deg(int i) const { return gens[i].degree; }
    CycScalar eps_of(const GroupElement& g, const GroupElement& h) const {
        return eps_eval(eps, g, h);
    }
    CycScalar eps_ij(int i, int j) const { return eps_of(deg(i), deg(j)); }
    int parity_of(int i) const { return parity(eps, deg(i)); }

    /// [x_i, x_j]; derives i>j entries from the stored orientation when absent.
    LinComb bracket(int i, int j) const;
    /// Bracket extended bilinearly to coefficient vectors.
    LinComb bracket(const LinComb& a, const LinComb& b) const;

    GroupElement degree_of(const LinComb& v) const;  // throws on inhomogeneous input
    int index_of(const std::string& name) const;     // -1 when absent
};

/// Degree-zero eps-antisymmetric scalar 2-cocycle, sparse on generator pairs.
/// Same raw-orientation storage discipline as brackets.
struct Cocycle2 {
    std::map<std::pair<int, int>, CycScalar> raw;

    CycScalar value(const ColorLieAlgebra& l, int i, int j) const;
    CycScalar value(const ColorLieAlgebra& l, const LinComb& a, const LinComb& b) const;
    bool is_zero() const;
};

/// Degree-zero 1-cochain: a scalar per identity-degree generator.
struct Cochain1 {
    std::map<int, CycScalar> lambda;

    CycScalar value(const ColorLieAlgebra& l, int i) const;
};

/// Grading compatibility, eps-antisymmetry and the eps-Jacobi identity,
/// exhaustively over all generator pairs/triples.
ValidationReport validate_algebra(const ColorLieAlgebra& l);

/// Degree-zero support, eps-antisymmetry and the eps-cocycle identity.
ValidationReport validate_cocycle(const ColorLieAlgebra& l, const Cocycle2& w);

/// L_omega = L + K x with x central of identity degree and
/// [a,b]' = [a,b] + omega(a,b) x. The new generator is appended last.
ColorLieAlgebra central_extension(const ColorLieAlgebra& l, const Cocycle2& w);

/// (delta lambda)(x,y) = -lambda([x,y]).
Cocycle2 coboundary(const ColorLieAlgebra& l, const Cochain1& lam);

/// Solves delta lambda = w1 - w2 exactly; nullopt when not cohomologous.
std::optional<Cochain1> is_cohomologous(const ColorLieAlgebra& l, const Cocycle2& w1,
                                        const Cocycle2& w2);

struct H2Result {
    int dimension = 0;
    std::vector<Cocycle2> representatives;
    int z2_dim = 0;
    int b2_dim = 0;
};

/// H^2 of the identity-degree block: kernel of the cocycle-identity system
/// modulo coboundaries, by exact rank computation.
H2Result h2_scalar(const ColorLieAlgebra& l);

}  // namespace colorlie
