#include "colorlie/modules.hpp"

#include <stdexcept>

namespace colorlie {

const Matrix& GradedModule::action(int i) const {
    auto it = actions.find(i);
    if (it == actions.end()) throw std::invalid_argument("no action matrix for generator");
    return it->second;
}

namespace {

std::string matrix_str(const Matrix& m) {
    std::string s = "[";
    for (size_t r = 0; r < m.rows(); ++r) {
        if (r) s += "; ";
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ", ";
            s += m.at(r, c).to_string();
        }
    }
    return s + "]";
}

}  // namespace

std::map<std::pair<int, int>, Matrix> measured_pairing(const ColorLieAlgebra& l,
                                                       const GradedModule& m) {
    std::map<std::pair<int, int>, Matrix> out;
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i; j < l.dim(); ++j) {
            Matrix d = m.action(i) * m.action(j) - (m.action(j) * m.action(i)) * l.eps_ij(i, j);
            for (const auto& [k, c] : l.bracket(i, j)) d = d - m.action(k) * c;
            out.emplace(std::make_pair(i, j), std::move(d));
        }
    return out;
}

ValidationReport validate_module(const ColorLieAlgebra& l, const Cocycle2& w,
                                 const GradedModule& m) {
    ValidationReport report;
    const int n = m.dim();
    for (int i = 0; i < l.dim(); ++i) {
        auto it = m.actions.find(i);
        if (it == m.actions.end()) {
            report.push_back({"module_action_missing", {i}, "no matrix for " + l.gens[i].name});
            continue;
        }
        const Matrix& mat = it->second;
        if (mat.rows() != static_cast<size_t>(n) || mat.cols() != static_cast<size_t>(n)) {
            report.push_back({"module_shape", {i}, "matrix is not dim x dim"});
            continue;
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (mat.at(r, c).is_zero()) continue;
                GroupElement want = group_compose(l.group, l.deg(i), m.basis[c].degree);
                if (!(m.basis[r].degree == want))
                    report.push_back({"module_degree",
                                      {i, r, c},
                                      "entry maps degree " + m.basis[c].degree.to_string() +
                                          " to " + m.basis[r].degree.to_string() + ", expected " +
                                          want.to_string()});
            }
    }
    if (!report.empty()) return report;

    Matrix id = Matrix::identity(n, l.order);
    for (const auto& [ij, d] : measured_pairing(l, m)) {
        Matrix defect = d - id * w.value(l, ij.first, ij.second);
        if (!defect.is_zero())
            report.push_back({"module_c24",
                              {ij.first, ij.second},
                              "defect = " + matrix_str(defect)});
    }
    return report;
}

InducedAction::InducedAction(const EnvelopingAlgebra& e, GradedModule m)
    : env_(e), module_(std::move(m)) {
    ValidationReport bad = validate_module(e.algebra(), e.omega(), module_);
    if (!bad.empty())
        throw std::invalid_argument("module does not satisfy the twisted rule for this algebra");
}

Matrix InducedAction::matrix_of_word(const Word& w) const {
    Matrix acc = Matrix::identity(module_.dim(), env_.order());
    for (uint32_t i : w) acc = acc * module_.action(static_cast<int>(i));
    return acc;
}

Matrix InducedAction::matrix_of(const PBWElement& a) const {
    Matrix acc(module_.dim(), module_.dim(), env_.order());
    for (const auto& [w, c] : a) acc = acc + matrix_of_word(w) * c;
    return acc;
}

GradedModule adjoint_truncated(const EnvelopingAlgebra& e, int cutoff) {
    const ColorLieAlgebra& l = e.algebra();
    GradedModule m;
    m.name = "adjoint:" + std::to_string(cutoff);
    std::vector<Word> basis = e.monomials_up_to(cutoff);
    std::map<Word, size_t, WordLess> index;
    for (size_t t = 0; t < basis.size(); ++t) {
        const Word& w = basis[t];
        m.basis.push_back({w.empty() ? "1" : e.word_name(w), e.degree_of_word(w)});
        index.emplace(w, t);
    }
    for (int i = 0; i < l.dim(); ++i) {
        Matrix mat(basis.size(), basis.size(), l.order);
        for (size_t col = 0; col < basis.size(); ++col) {
            const Word& w = basis[col];
            NCPoly p;
            Word left{static_cast<uint32_t>(i)};
            left.insert(left.end(), w.begin(), w.end());
            add_term(p, left, CycScalar::one(l.order));
            Word right = w;
            right.push_back(static_cast<uint32_t>(i));
            add_term(p, right, -l.eps_of(l.deg(i), e.degree_of_word(w)));
            for (const auto& [word, c] : e.normal_form(p)) {
                auto it = index.find(word);
                if (it == index.end())
                    throw std::logic_error(
                        "adjoint action left the truncation; rewriting is inconsistent");
                mat.at(it->second, col) = c;
            }
        }
        m.actions.emplace(i, std::move(mat));
    }
    // twist stays zero: ad factors through the central extension with the
    // center acting by zero.
    return m;
}

GradedModule trivial_module(const ColorLieAlgebra& l) {
    GradedModule m;
    m.name = "trivial";
    m.basis.push_back({"1", group_identity(l.group)});
    for (int i = 0; i < l.dim(); ++i) m.actions.emplace(i, Matrix(1, 1, l.order));
    return m;
}

}  // namespace colorlie
