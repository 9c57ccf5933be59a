#include "colorlie/algebra.hpp"

#include <array>
#include <stdexcept>

namespace colorlie {

namespace {

void add_scaled(LinComb& acc, const LinComb& v, const CycScalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, coeff] : v) {
        auto it = acc.find(k);
        if (it == acc.end())
            acc.emplace(k, coeff * c);
        else {
            it->second += coeff * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

LinComb scaled(const LinComb& v, const CycScalar& c) {
    LinComb r;
    add_scaled(r, v, c);
    return r;
}

std::string lincomb_str(const ColorLieAlgebra& l, const LinComb& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : v) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*" + l.gens[k].name;
    }
    return s;
}

}  // namespace

LinComb ColorLieAlgebra::bracket(int i, int j) const {
    auto it = bracket_raw.find({i, j});
    if (it != bracket_raw.end()) return it->second;
    auto rev = bracket_raw.find({j, i});
    if (rev != bracket_raw.end()) return scaled(rev->second, -eps_ij(i, j));
    return {};
}

LinComb ColorLieAlgebra::bracket(const LinComb& a, const LinComb& b) const {
    LinComb r;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) add_scaled(r, bracket(i, j), ca * cb);
    return r;
}

GroupElement ColorLieAlgebra::degree_of(const LinComb& v) const {
    if (v.empty()) return group_identity(group);
    const GroupElement& d = deg(v.begin()->first);
    for (const auto& [k, c] : v)
        if (!(deg(k) == d)) throw std::domain_error("inhomogeneous element has no degree");
    return d;
}

int ColorLieAlgebra::index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (gens[i].name == name) return i;
    return -1;
}

CycScalar Cocycle2::value(const ColorLieAlgebra& l, int i, int j) const {
    auto it = raw.find({i, j});
    if (it != raw.end()) return it->second;
    auto rev = raw.find({j, i});
    if (rev != raw.end()) return -l.eps_ij(i, j) * rev->second;
    return CycScalar::zero(l.order);
}

CycScalar Cocycle2::value(const ColorLieAlgebra& l, const LinComb& a, const LinComb& b) const {
    CycScalar r = CycScalar::zero(l.order);
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) r += ca * cb * value(l, i, j);
    return r;
}

bool Cocycle2::is_zero() const {
    for (const auto& [ij, c] : raw)
        if (!c.is_zero()) return false;
    return true;
}

CycScalar Cochain1::value(const ColorLieAlgebra& l, int i) const {
    auto it = lambda.find(i);
    return it == lambda.end() ? CycScalar::zero(l.order) : it->second;
}

ValidationReport validate_algebra(const ColorLieAlgebra& l) {
    ValidationReport report = validate_bicharacter(l.group, l.eps);
    if (!report.empty()) return report;  // eps values below would be meaningless
    const int d = l.dim();

    // Grading: c_{ij}^k != 0 forces |x_k| = |x_i| |x_j|.
    for (const auto& [ij, comb] : l.bracket_raw) {
        GroupElement target = group_compose(l.group, l.deg(ij.first), l.deg(ij.second));
        for (const auto& [k, c] : comb) {
            if (c.is_zero()) continue;
            if (!(l.deg(k) == target))
                report.push_back({"grading",
                                  {ij.first, ij.second, k},
                                  "bracket target " + l.gens[k].name + " has degree " +
                                      l.deg(k).to_string() + ", expected " + target.to_string()});
        }
    }

    // eps-antisymmetry on every unordered pair (diagonal included: even
    // generators must have [x,x] = 0 in characteristic zero).
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            if (i == j && l.parity_of(i) == -1) continue;  // no constraint for odd diagonal
            LinComb lhs = l.bracket(i, j);
            add_scaled(lhs, l.bracket(j, i), l.eps_ij(i, j));
            if (!lhs.empty())
                report.push_back({"eps_antisymmetry",
                                  {i, j},
                                  "[x_i,x_j] + eps [x_j,x_i] = " + lincomb_str(l, lhs)});
        }

    // eps-Jacobi on all triples.
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                if (!(a <= b && b <= c)) continue;
                LinComb sum;
                LinComb xa{{a, CycScalar::one(l.order)}};
                LinComb xb{{b, CycScalar::one(l.order)}};
                LinComb xc{{c, CycScalar::one(l.order)}};
                add_scaled(sum, l.bracket(xa, l.bracket(xb, xc)), l.eps_ij(c, a));
                add_scaled(sum, l.bracket(xb, l.bracket(xc, xa)), l.eps_ij(a, b));
                add_scaled(sum, l.bracket(xc, l.bracket(xa, xb)), l.eps_ij(b, c));
                if (!sum.empty())
                    report.push_back(
                        {"jacobi", {a, b, c}, "eps-Jacobi sum = " + lincomb_str(l, sum)});
            }
    return report;
}

ValidationReport validate_cocycle(const ColorLieAlgebra& l, const Cocycle2& w) {
    ValidationReport report;
    const int d = l.dim();
    const GroupElement e = group_identity(l.group);

    for (const auto& [ij, c] : w.raw) {
        if (c.is_zero()) continue;
        if (ij.first < 0 || ij.first >= d || ij.second < 0 || ij.second >= d) {
            report.push_back({"cocycle_index", {ij.first, ij.second}, "index out of range"});
            continue;
        }
        if (!(group_compose(l.group, l.deg(ij.first), l.deg(ij.second)) == e))
            report.push_back({"cocycle_degree",
                              {ij.first, ij.second},
                              "omega supported on non-identity degree pair"});
    }

    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            CycScalar s = w.value(l, i, j) + l.eps_ij(i, j) * w.value(l, j, i);
            if (i == j && l.parity_of(i) == -1) continue;
            if (!s.is_zero())
                report.push_back({"cocycle_antisymmetry",
                                  {i, j},
                                  "omega(i,j) + eps omega(j,i) = " + s.to_string()});
        }

    for (int x = 0; x < d; ++x)
        for (int y = x; y < d; ++y)
            for (int z = y; z < d; ++z) {
                LinComb lx{{x, CycScalar::one(l.order)}};
                LinComb ly{{y, CycScalar::one(l.order)}};
                LinComb lz{{z, CycScalar::one(l.order)}};
                CycScalar s = l.eps_ij(z, x) * w.value(l, lx, l.bracket(ly, lz)) +
                              l.eps_ij(x, y) * w.value(l, ly, l.bracket(lz, lx)) +
                              l.eps_ij(y, z) * w.value(l, lz, l.bracket(lx, ly));
                if (!s.is_zero())
                    report.push_back(
                        {"cocycle_identity", {x, y, z}, "cyclic sum = " + s.to_string()});
            }
    return report;
}

ColorLieAlgebra central_extension(const ColorLieAlgebra& l, const Cocycle2& w) {
    ValidationReport bad = validate_cocycle(l, w);
    if (!bad.empty()) throw std::invalid_argument("central_extension: cocycle invalid");
    ColorLieAlgebra ext = l;
    const int c = l.dim();  // index of the new central generator
    std::string name = "x";
    while (ext.index_of(name) >= 0) name += "'";
    ext.gens.push_back({name, group_identity(l.group)});
    ext.bracket_raw.clear();
    for (int i = 0; i < c; ++i)
        for (int j = i; j < c; ++j) {
            LinComb comb = l.bracket(i, j);
            CycScalar wij = w.value(l, i, j);
            if (!wij.is_zero()) comb[c] = wij;
            if (!comb.empty()) ext.bracket_raw[{i, j}] = std::move(comb);
        }
    return ext;
}

Cocycle2 coboundary(const ColorLieAlgebra& l, const Cochain1& lam) {
    const GroupElement e = group_identity(l.group);
    for (const auto& [i, c] : lam.lambda)
        if (!c.is_zero() && !(l.deg(i) == e))
            throw std::invalid_argument("1-cochain supported outside identity degree");
    Cocycle2 w;
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i; j < l.dim(); ++j) {
            CycScalar v = CycScalar::zero(l.order);
            for (const auto& [k, c] : l.bracket(i, j)) v -= c * lam.value(l, k);
            if (!v.is_zero()) w.raw[{i, j}] = v;
        }
    return w;
}

namespace {

// Basis of the degree-zero eps-antisymmetric pair space: (i,j) with i<j and
// |x_i||x_j| = e, plus odd diagonals (i,i) with |x_i|^2 = e.
std::vector<std::pair<int, int>> cocycle_support(const ColorLieAlgebra& l) {
    std::vector<std::pair<int, int>> pairs;
    const GroupElement e = group_identity(l.group);
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i; j < l.dim(); ++j) {
            if (!(group_compose(l.group, l.deg(i), l.deg(j)) == e)) continue;
            if (i == j && l.parity_of(i) != -1) continue;
            pairs.push_back({i, j});
        }
    return pairs;
}

Cocycle2 from_coordinates(const std::vector<std::pair<int, int>>& support,
                          const std::vector<CycScalar>& coords) {
    Cocycle2 w;
    for (size_t t = 0; t < support.size(); ++t)
        if (!coords[t].is_zero()) w.raw[support[t]] = coords[t];
    return w;
}

std::vector<CycScalar> to_coordinates(const ColorLieAlgebra& l,
                                      const std::vector<std::pair<int, int>>& support,
                                      const Cocycle2& w) {
    std::vector<CycScalar> coords;
    coords.reserve(support.size());
    for (auto [i, j] : support) coords.push_back(w.value(l, i, j));
    return coords;
}

// Matrix of the cocycle identity, rows = generator triples, cols = support.
Matrix cocycle_identity_matrix(const ColorLieAlgebra& l,
                               const std::vector<std::pair<int, int>>& support) {
    const int d = l.dim();
    std::vector<std::array<int, 3>> triples;
    for (int x = 0; x < d; ++x)
        for (int y = x; y < d; ++y)
            for (int z = y; z < d; ++z) triples.push_back({x, y, z});
    Matrix m(triples.size(), support.size(), l.order);
    for (size_t col = 0; col < support.size(); ++col) {
        Cocycle2 unit;
        unit.raw[support[col]] = CycScalar::one(l.order);
        for (size_t row = 0; row < triples.size(); ++row) {
            auto [x, y, z] = triples[row];
            LinComb lx{{x, CycScalar::one(l.order)}};
            LinComb ly{{y, CycScalar::one(l.order)}};
            LinComb lz{{z, CycScalar::one(l.order)}};
            m.at(row, col) = l.eps_ij(z, x) * unit.value(l, lx, l.bracket(ly, lz)) +
                             l.eps_ij(x, y) * unit.value(l, ly, l.bracket(lz, lx)) +
                             l.eps_ij(y, z) * unit.value(l, lz, l.bracket(lx, ly));
        }
    }
    return m;
}

std::vector<int> identity_degree_generators(const ColorLieAlgebra& l) {
    std::vector<int> idx;
    const GroupElement e = group_identity(l.group);
    for (int i = 0; i < l.dim(); ++i)
        if (l.deg(i) == e) idx.push_back(i);
    return idx;
}

}  // namespace

std::optional<Cochain1> is_cohomologous(const ColorLieAlgebra& l, const Cocycle2& w1,
                                        const Cocycle2& w2) {
    auto support = cocycle_support(l);
    auto unknowns = identity_degree_generators(l);
    Matrix m(support.size(), unknowns.size(), l.order);
    for (size_t col = 0; col < unknowns.size(); ++col) {
        Cochain1 unit;
        unit.lambda[unknowns[col]] = CycScalar::one(l.order);
        auto coords = to_coordinates(l, support, coboundary(l, unit));
        for (size_t row = 0; row < support.size(); ++row) m.at(row, col) = coords[row];
    }
    std::vector<CycScalar> rhs;
    for (auto [i, j] : support) rhs.push_back(w1.value(l, i, j) - w2.value(l, i, j));
    auto sol = solve(std::move(m), std::move(rhs));
    if (!sol) return std::nullopt;
    Cochain1 lam;
    for (size_t col = 0; col < unknowns.size(); ++col)
        if (!(*sol)[col].is_zero()) lam.lambda[unknowns[col]] = (*sol)[col];
    return lam;
}

H2Result h2_scalar(const ColorLieAlgebra& l) {
    auto support = cocycle_support(l);
    H2Result res;
    if (support.empty()) return res;

    auto z_basis = kernel_basis(cocycle_identity_matrix(l, support));
    res.z2_dim = static_cast<int>(z_basis.size());

    std::vector<std::vector<CycScalar>> b_basis;
    for (int i : identity_degree_generators(l)) {
        Cochain1 unit;
        unit.lambda[i] = CycScalar::one(l.order);
        b_basis.push_back(to_coordinates(l, support, coboundary(l, unit)));
    }
    {
        Matrix bm(support.size(), b_basis.size(), l.order);
        for (size_t j = 0; j < b_basis.size(); ++j)
            for (size_t i = 0; i < support.size(); ++i) bm.at(i, j) = b_basis[j][i];
        res.b2_dim = static_cast<int>(rank(std::move(bm)));
    }

    res.dimension = res.z2_dim - res.b2_dim;
    for (size_t k : independent_from(b_basis, z_basis, support.size(), l.order))
        res.representatives.push_back(from_coordinates(support, z_basis[k]));
    return res;
}

}  // namespace colorlie
