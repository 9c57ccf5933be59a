#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colorlie/scalars.hpp"

namespace colorlie {

/// One violated invariant, reported as data. `at` holds the offending indices
/// (generator pair, triple, ...), `kind` is a stable machine-readable tag.
struct Violation {
    std::string kind;
    std::vector<int> at;
    std::string detail;
};

using ValidationReport = std::vector<Violation>;

/// Finitely generated abelian group Z^r x prod Z_{m_i}. Free coordinates
/// come first, torsion coordinates are stored reduced into [0, m_i).
struct GroupSpec {
    int free_rank = 0;
    std::vector<long> torsion;

    int rank() const { return free_rank + static_cast<int>(torsion.size()); }
};

struct GroupElement {
    std::vector<long> coords;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    bool operator!=(const GroupElement& o) const { return coords != o.coords; }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }

    bool is_identity() const {
        for (long c : coords)
            if (c != 0) return false;
        return true;
    }

    std::string to_string() const;
};

GroupElement group_identity(const GroupSpec& spec);
GroupElement group_reduce(const GroupSpec& spec, GroupElement g);
GroupElement group_compose(const GroupSpec& spec, const GroupElement& g, const GroupElement& h);
GroupElement group_invert(const GroupSpec& spec, const GroupElement& g);

/// Antisymmetric bicharacter, stored by its values on the group generators.
/// eps(g,h) for arbitrary elements is the biadditive extension
/// prod_{i,j} B[i][j]^{g_i h_j}.
struct Bicharacter {
    unsigned order = 1;  // cyclotomic order of the entries
    std::vector<std::vector<CycScalar>> values;
};

CycScalar eps_eval(const Bicharacter& b, const GroupElement& g, const GroupElement& h);

/// eps(g,g), always +1 or -1 for a valid bicharacter; -1 is "odd".
int parity(const Bicharacter& b, const GroupElement& g);

/// Checks antisymmetry B[i][j]B[j][i] = 1, diagonal B[i][i]^2 = 1 and
/// torsion well-definedness B[i][j]^{m} = 1 on torsion generators.
ValidationReport validate_bicharacter(const GroupSpec& spec, const Bicharacter& b);

}  // namespace colorlie
