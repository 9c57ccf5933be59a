#include "colorlie/grading.hpp"

#include <stdexcept>

namespace colorlie {

std::string GroupElement::to_string() const {
    if (is_identity()) return "e";
    std::string s;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s;
}

GroupElement group_identity(const GroupSpec& spec) {
    return GroupElement{std::vector<long>(spec.rank(), 0)};
}

GroupElement group_reduce(const GroupSpec& spec, GroupElement g) {
    if (static_cast<int>(g.coords.size()) != spec.rank())
        throw std::invalid_argument("group element has wrong number of coordinates");
    for (size_t t = 0; t < spec.torsion.size(); ++t) {
        long m = spec.torsion[t];
        long& c = g.coords[spec.free_rank + t];
        c %= m;
        if (c < 0) c += m;
    }
    return g;
}

GroupElement group_compose(const GroupSpec& spec, const GroupElement& g, const GroupElement& h) {
    if (g.coords.size() != h.coords.size())
        throw std::invalid_argument("group element length mismatch");
    GroupElement r = g;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += h.coords[i];
    return group_reduce(spec, std::move(r));
}

GroupElement group_invert(const GroupSpec& spec, const GroupElement& g) {
    GroupElement r = g;
    for (auto& c : r.coords) c = -c;
    return group_reduce(spec, std::move(r));
}

CycScalar eps_eval(const Bicharacter& b, const GroupElement& g, const GroupElement& h) {
    CycScalar r = CycScalar::one(b.order);
    for (size_t i = 0; i < g.coords.size(); ++i) {
        if (g.coords[i] == 0) continue;
        for (size_t j = 0; j < h.coords.size(); ++j) {
            if (h.coords[j] == 0) continue;
            long long e = static_cast<long long>(g.coords[i]) * h.coords[j];
            r = r * b.values[i][j].pow(e);
        }
    }
    return r;
}

int parity(const Bicharacter& b, const GroupElement& g) {
    CycScalar p = eps_eval(b, g, g);
    if (p.is_one()) return +1;
    if ((-p).is_one()) return -1;
    throw std::domain_error("eps(g,g) is not +1 or -1; bicharacter invalid");
}

ValidationReport validate_bicharacter(const GroupSpec& spec, const Bicharacter& b) {
    ValidationReport report;
    int n = spec.rank();
    if (static_cast<int>(b.values.size()) != n) {
        report.push_back({"bicharacter_shape", {}, "matrix size does not match generator count"});
        return report;
    }
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(b.values[i].size()) != n) {
            report.push_back({"bicharacter_shape", {i}, "row length does not match generator count"});
            return report;
        }
    for (int i = 0; i < n; ++i) {
        const CycScalar& d = b.values[i][i];
        if (!(d * d).is_one())
            report.push_back({"bicharacter_diagonal", {i}, "B[i][i]^2 = " + (d * d).to_string()});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CycScalar prod = b.values[i][j] * b.values[j][i];
            if (!prod.is_one())
                report.push_back(
                    {"bicharacter_antisymmetry", {i, j}, "B[i][j]*B[j][i] = " + prod.to_string()});
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i >= spec.free_rank) {
                long m = spec.torsion[i - spec.free_rank];
                if (!b.values[i][j].pow(m).is_one())
                    report.push_back({"bicharacter_torsion",
                                      {i, j},
                                      "B[i][j]^" + std::to_string(m) + " = " +
                                          b.values[i][j].pow(m).to_string() +
                                          " but generator i has order " + std::to_string(m)});
            }
            if (j >= spec.free_rank) {
                long m = spec.torsion[j - spec.free_rank];
                if (!b.values[i][j].pow(m).is_one())
                    report.push_back({"bicharacter_torsion",
                                      {i, j},
                                      "B[i][j]^" + std::to_string(m) + " = " +
                                          b.values[i][j].pow(m).to_string() +
                                          " but generator j has order " + std::to_string(m)});
            }
        }
    return report;
}

}  // namespace colorlie
