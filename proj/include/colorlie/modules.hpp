#pragma once

#include <map>
#include <string>
#include <vector>

#include "colorlie/enveloping.hpp"
#include "colorlie/linalg.hpp"

namespace colorlie {

struct BasisVector {
    std::string name;
    GroupElement degree;
};

/// Finite-dimensional graded module given by one action matrix per generator
/// (columns act on basis vectors: phi(x_i) m_s = sum_r M[r][s] m_r).
/// `twist` is the scalar 2-cocycle the action is claimed to satisfy in
///   phi(x)phi(y) - eps phi(y)phi(x) = phi([x,y]) + twist(x,y) id.
struct GradedModule {
    std::string name;
    std::vector<BasisVector> basis;
    std::map<int, Matrix> actions;
    Cocycle2 twist;

    int dim() const { return static_cast<int>(basis.size()); }
    const Matrix& action(int i) const;
};

/// The pairing phi(x_i)phi(x_j) - eps phi(x_j)phi(x_i) - phi([x_i,x_j]) per
/// generator pair i <= j; the module's measured twist. All-zero means M is an
/// honest L-module.
std::map<std::pair<int, int>, Matrix> measured_pairing(const ColorLieAlgebra& l,
                                                       const GradedModule& m);

/// Degree compatibility of every action matrix plus the twisted commutation
/// rule against `w`; violations carry the defect matrix rendered as text.
ValidationReport validate_module(const ColorLieAlgebra& l, const Cocycle2& w,
                                 const GradedModule& m);

/// The U_omega(L)-action extended multiplicatively along PBW monomials.
/// Requires the module to satisfy the rule with twist = e.omega().
class InducedAction {
  public:
    InducedAction(const EnvelopingAlgebra& e, GradedModule m);

    Matrix matrix_of_word(const Word& w) const;
    Matrix matrix_of(const PBWElement& a) const;
    const GradedModule& module() const { return module_; }

  private:
    const EnvelopingAlgebra& env_;
    GradedModule module_;
};

/// Truncated adjoint module on the PBW monomials of length <= cutoff, with
/// ad(x) m = x m - eps(|x|,|m|) m x computed in U_omega(L). The action closes
/// within the truncation (asserted) and its measured twist is zero.
GradedModule adjoint_truncated(const EnvelopingAlgebra& e, int cutoff);

/// The one-dimensional trivial module (identity degree, zero action).
GradedModule trivial_module(const ColorLieAlgebra& l);

}  // namespace colorlie
