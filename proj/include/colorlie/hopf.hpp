#pragma once

#include <map>
#include <string>
#include <vector>

#include "colorlie/enveloping.hpp"

namespace colorlie {

/// Element of the braided tensor square, keyed by pairs of PBW monomials.
/// Multiplication follows (a x b)(a' x b') = eps(|b|,|a'|) aa' x bb'.
using TensorSquare = std::map<std::pair<Word, Word>, CycScalar>;

void add_term(TensorSquare& t, const Word& a, const Word& b, const CycScalar& c);

TensorSquare braided_mul(const EnvelopingAlgebra& e, const TensorSquare& s, const TensorSquare& t);

/// Delta(x_i) = x_i x 1 + 1 x x_i extended as a braided algebra map.
/// Only defined on U(L) with zero twist; throws otherwise.
TensorSquare coproduct(const EnvelopingAlgebra& e, const PBWElement& a);

/// Coefficient of the empty monomial.
CycScalar counit(const EnvelopingAlgebra& e, const PBWElement& a);

/// S(x_i) = -x_i extended eps-anti-multiplicatively:
/// S(uv) = eps(|u|,|v|) S(v) S(u). Zero twist only.
PBWElement antipode(const EnvelopingAlgebra& e, const PBWElement& a);

struct HopfObstruction {
    int i, j;
    CycScalar counit_value;       // counit of the defining relation, = -omega(i,j)
    CycScalar coproduct_residue;  // coefficient of 1 x 1 in Delta(r) - r x 1 - 1 x r mod the ideal
};

struct HopfReport {
    /// Coassociativity / counit / antipode identities for the zero-twist
    /// enveloping algebra, verified on PBW monomials up to max_degree.
    bool axioms_ok = true;
    std::vector<std::string> axiom_failures;
    /// Nonempty exactly when omega has nonzero entries: the defining ideal of
    /// U_omega(L) fails to be a Hopf ideal by these scalars.
    std::vector<HopfObstruction> obstructions;
};

/// Verifies the color Hopf axioms on U(L) (omega = 0) and computes the
/// counit / coproduct obstruction of each defining relation of U_omega(L).
HopfReport hopf_ideal_check(const EnvelopingAlgebra& e, int max_degree);

}  // namespace colorlie
