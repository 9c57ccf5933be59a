#include "colorlie/driver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "colorlie/hopf.hpp"

namespace colorlie {

using nlohmann::json;

namespace {

json violations_json(const ValidationReport& report, const std::string& scope) {
    json a = json::array();
    for (const auto& v : report)
        a.push_back({{"kind", v.kind}, {"at", v.at}, {"detail", v.detail}, {"scope", scope}});
    return a;
}

json pbw_json(const EnvelopingAlgebra& e, const PBWElement& p) {
    json o = json::object();
    for (const auto& [w, c] : p) o[e.word_name(w)] = c.to_string();
    return o;
}

Word parse_word(const ColorLieAlgebra& l, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string name;
    while (in >> name) {
        int idx = l.index_of(name);
        if (idx < 0) throw std::invalid_argument("unknown generator \"" + name + "\" in word");
        w.push_back(static_cast<uint32_t>(idx));
    }
    return w;
}

std::string opt(const std::map<std::string, std::string>& options, const std::string& key,
                const std::string& fallback) {
    auto it = options.find(key);
    return it == options.end() ? fallback : it->second;
}

int opt_int(const std::map<std::string, std::string>& options, const std::string& key,
            int fallback) {
    auto it = options.find(key);
    if (it == options.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (...) {
        throw std::invalid_argument("option --" + key + " must be an integer");
    }
}

// Full validation sweep: bicharacter/algebra, every cocycle, every module
// against its declared twist.
json validate_all(const AlgebraFile& f) {
    json all = json::array();
    ValidationReport algebra_report = validate_algebra(f.algebra);
    for (auto& v : violations_json(algebra_report, "algebra")) all.push_back(v);
    bool eps_ok = true;
    for (const auto& v : algebra_report)
        if (v.kind.rfind("bicharacter", 0) == 0) eps_ok = false;
    if (!eps_ok) return all;  // eps-dependent checks below would be meaningless
    for (auto& v : violations_json(validate_cocycle(f.algebra, f.omega), "cocycle:omega"))
        all.push_back(v);
    for (const auto& [name, w] : f.variants)
        for (auto& v : violations_json(validate_cocycle(f.algebra, w), "cocycle:" + name))
            all.push_back(v);
    for (const auto& m : f.modules)
        for (auto& v :
             violations_json(validate_module(f.algebra, m.twist, m), "module:" + m.name))
            all.push_back(v);
    return all;
}

bool has_structural_violation(const json& violations) {
    static const std::set<std::string> structural = {
        "bicharacter_shape",     "bicharacter_diagonal", "bicharacter_antisymmetry",
        "bicharacter_torsion",   "grading",              "eps_antisymmetry",
        "cocycle_degree",        "cocycle_antisymmetry", "cocycle_index",
        "module_action_missing", "module_shape"};
    for (const auto& v : violations)
        if (structural.count(v.at("kind").get<std::string>())) return true;
    return false;
}

// Shared preamble for the rewriting commands: an enveloping algebra is only
// handed out when the structural data is sound; jacobi / cocycle-identity
// failures surface as overlap mismatches instead.
EnvelopingAlgebra make_env(const AlgebraFile& f, json& violations) {
    violations = validate_all(f);
    if (has_structural_violation(violations))
        throw std::domain_error("structural validation failed; cannot rewrite");
    EnvelopingAlgebra e(f.algebra, f.omega);
    e.check_overlaps();
    return e;
}

json degree_key_table(const std::map<int, std::map<GroupElement, long>>& t,
                      const std::string& prefix) {
    json o = json::object();
    for (const auto& [n, row] : t)
        for (const auto& [g, count] : row)
            o[prefix + std::to_string(n) + "@" + g.to_string()] = count;
    return o;
}

json cocycle_entries_json(const ColorLieAlgebra& l, const Cocycle2& w) {
    json a = json::array();
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i; j < l.dim(); ++j) {
            CycScalar v = w.value(l, i, j);
            if (!v.is_zero()) a.push_back({{"i", i}, {"j", j}, {"value", v.to_string()}});
        }
    return a;
}

json lambda_json(const ColorLieAlgebra& l, const Cochain1& lam) {
    json o = json::object();
    for (const auto& [i, c] : lam.lambda)
        if (!c.is_zero()) o[l.gens[i].name] = c.to_string();
    return o;
}

}  // namespace

RunResult run_command(const std::string& command, const AlgebraFile& f,
                      const std::map<std::string, std::string>& options,
                      const std::string& digest) {
    RunResult out;
    out.report["command"] = command;
    out.report["digest"] = digest;
    out.report["violations"] = json::array();
    json& results = out.report["results"] = json::object();

    if (command == "check") {
        out.report["violations"] = validate_all(f);
        results["valid"] = out.report["violations"].empty();
        results["generators"] = f.algebra.dim();
        results["cyclotomic_order"] = f.order;
        out.exit_code = out.report["violations"].empty() ? 0 : 1;
        return out;
    }

    if (command == "overlaps") {
        json violations = validate_all(f);
        out.report["violations"] = violations;
        if (has_structural_violation(violations)) {
            results["structural_violations"] = true;
            out.exit_code = 1;
            return out;
        }
        results["structural_violations"] = false;
        EnvelopingAlgebra e(f.algebra, f.omega);
        const OverlapReport& rep = e.check_overlaps();
        results["ambiguities"] = rep.ambiguities;
        json mismatches = json::array();
        for (const auto& m : rep.mismatches)
            mismatches.push_back({{"triple", m.triple}, {"difference", pbw_json(e, m.difference)}});
        results["mismatches"] = mismatches;
        results["trusted"] = rep.ok();
        out.exit_code = rep.ok() ? 0 : 1;
        return out;
    }

    if (command == "nf" || command == "mul") {
        json violations;
        EnvelopingAlgebra e = make_env(f, violations);
        out.report["violations"] = violations;
        bool force = opt(options, "force", "") == "true";
        if (!e.trusted() && !force) {
            results["trusted"] = false;
            results["hint"] = "overlap check failed; rerun with --force to explore anyway";
            out.exit_code = 1;
            return out;
        }
        RewriteOptions ropts;
        if (!e.trusted()) ropts.budget = 1000000;
        results["trusted"] = e.trusted();
        if (command == "nf") {
            Word w = parse_word(f.algebra, opt(options, "word", ""));
            NCPoly p;
            add_term(p, w, CycScalar::one(f.order));
            results["word"] = opt(options, "word", "");
            results["normal_form"] = pbw_json(e, e.normal_form(p, ropts));
        } else {
            Word a = parse_word(f.algebra, opt(options, "lhs", ""));
            Word b = parse_word(f.algebra, opt(options, "rhs", ""));
            NCPoly pa, pb;
            add_term(pa, a, CycScalar::one(f.order));
            add_term(pb, b, CycScalar::one(f.order));
            PBWElement na = e.normal_form(pa, ropts), nb = e.normal_form(pb, ropts);
            results["lhs"] = pbw_json(e, na);
            results["rhs"] = pbw_json(e, nb);
            results["product"] = pbw_json(e, e.multiply(na, nb));
        }
        return out;
    }

    if (command == "dims") {
        json violations;
        EnvelopingAlgebra e = make_env(f, violations);
        out.report["violations"] = violations;
        if (!e.trusted()) {
            results["trusted"] = false;
            out.exit_code = 1;
            return out;
        }
        int maxdeg = opt_int(options, "max-degree", 6);
        DimsTable t = e.dims(maxdeg);
        results["max_degree"] = maxdeg;
        results["pbw"] = degree_key_table(t.pbw, "");
        results["symmetric"] = degree_key_table(t.symmetric, "");
        results["match"] = t.match;
        out.exit_code = t.match ? 0 : 1;
        return out;
    }

    if (command == "h2") {
        ValidationReport bad = validate_algebra(f.algebra);
        out.report["violations"] = violations_json(bad, "algebra");
        if (!bad.empty()) {
            out.exit_code = 1;
            return out;
        }
        H2Result h2 = h2_scalar(f.algebra);
        results["dimension"] = h2.dimension;
        results["z2_dim"] = h2.z2_dim;
        results["b2_dim"] = h2.b2_dim;
        json reps = json::array();
        for (const auto& w : h2.representatives) reps.push_back(cocycle_entries_json(f.algebra, w));
        results["representatives"] = reps;
        return out;
    }

    if (command == "cohomologous" || command == "iso") {
        json violations = validate_all(f);
        out.report["violations"] = violations;
        if (has_structural_violation(violations)) {
            out.exit_code = 1;
            return out;
        }
        const Cocycle2& w1 = f.cocycle_by_name(opt(options, "w1", "omega"));
        const Cocycle2& w2 = f.cocycle_by_name(opt(options, "w2", "zero"));
        auto lam = is_cohomologous(f.algebra, w1, w2);
        results["w1"] = opt(options, "w1", "omega");
        results["w2"] = opt(options, "w2", "zero");
        results["cohomologous"] = bool(lam);
        if (lam) results["lambda"] = lambda_json(f.algebra, *lam);
        if (command == "cohomologous") {
            out.exit_code = lam ? 0 : 1;
            return out;
        }
        if (!lam) {
            results["iso"] = false;
            results["hint"] = "twists are not cohomologous; no filtered isomorphism exists";
            out.exit_code = 1;
            return out;
        }
        int maxdeg = opt_int(options, "max-degree", 4);
        EnvelopingAlgebra e1(f.algebra, w1), e2(f.algebra, w2);
        e1.check_overlaps();
        e2.check_overlaps();
        if (!e1.trusted() || !e2.trusted()) {
            results["iso"] = false;
            results["hint"] = "overlap check failed";
            out.exit_code = 1;
            return out;
        }
        IsoReport rep = filtered_iso(e1, e2, *lam, maxdeg);
        results["max_degree"] = maxdeg;
        results["relations_ok"] = rep.relation_defects.empty();
        results["triangular_ok"] = rep.triangularity_failures.empty();
        results["iso"] = rep.ok();
        json defects = json::array();
        for (const auto& [ij, d] : rep.relation_defects)
            defects.push_back(
                {{"i", ij.first}, {"j", ij.second}, {"image", pbw_json(e2, d)}});
        results["relation_defects"] = defects;
        out.exit_code = rep.ok() ? 0 : 1;
        return out;
    }

    if (command == "cohomology") {
        json violations;
        EnvelopingAlgebra e = make_env(f, violations);
        out.report["violations"] = violations;
        if (!e.trusted()) {
            out.exit_code = 1;
            return out;
        }
        std::string module_name = opt(options, "module", "trivial");
        GradedModule m = f.module_by_name(module_name, e);
        int n_max = opt_int(options, "n-max", 4);
        std::string degree = opt(options, "degree", "identity");
        if (degree != "identity" && degree != "all")
            throw std::invalid_argument("--degree must be identity or all");
        ComplexCheck check = verify_complex(f.algebra, f.omega, m, n_max);
        results["module"] = module_name;
        results["n_max"] = n_max;
        results["degree_filter"] = degree;
        results["squares_to_zero"] = check.squares_to_zero;
        results["measured_twist_zero"] = check.measured_twist_zero;
        if (!check.squares_to_zero) {
            results["hint"] =
                "coboundary does not square to zero for this module; dimensions undefined";
            out.exit_code = 1;
            return out;
        }
        ComplexReport rep = cohomology_dims(
            f.algebra, f.omega, m, n_max,
            degree == "identity" ? DegreeFilter::Identity : DegreeFilter::All);
        json table = json::object();
        json cdims = json::object();
        for (const auto& [n, row] : rep.blocks)
            for (const auto& [g, b] : row) {
                table["H" + std::to_string(n) + "@" + g.to_string()] = b.h;
                cdims["C" + std::to_string(n) + "@" + g.to_string()] = b.dim;
            }
        results["table"] = table;
        results["cochain_dims"] = cdims;
        return out;
    }

    if (command == "resolution-check") {
        json violations;
        EnvelopingAlgebra e = make_env(f, violations);
        out.report["violations"] = violations;
        if (!e.trusted()) {
            out.exit_code = 1;
            return out;
        }
        int n_max = opt_int(options, "n-max", 4);
        int deg_max = opt_int(options, "deg-max", 5);
        ResolutionReport rep = verify_resolution(e, n_max, deg_max);
        results["n_max"] = n_max;
        results["deg_max"] = deg_max;
        results["dd_zero"] = rep.dd_zero;
        results["quotient_dd_zero"] = rep.quotient_dd_zero;
        json qdefects = json::array();
        for (const auto& [n, w] : rep.quotient_dd_defects)
            qdefects.push_back({{"n", n}, {"wedge", e.word_name(w)}});
        results["quotient_dd_defects"] = qdefects;
        results["koszul_exact"] = rep.koszul_exact;
        json kz = json::object();
        for (const auto& [key, block] : rep.koszul)
            kz["D" + std::to_string(key.first) + ",n" + std::to_string(key.second)] = {
                {"dim", block.dim},
                {"rank_out", block.rank_out},
                {"rank_in", block.rank_in},
                {"exact", block.exact}};
        results["koszul"] = kz;
        out.exit_code = (rep.dd_zero && rep.koszul_exact) ? 0 : 1;
        return out;
    }

    if (command == "hochschild") {
        json violations;
        EnvelopingAlgebra e = make_env(f, violations);
        out.report["violations"] = violations;
        if (!e.trusted()) {
            out.exit_code = 1;
            return out;
        }
        int n = opt_int(options, "n", 0);
        std::vector<int> cutoffs;
        std::istringstream in(opt(options, "truncations", "1,2,3,4"));
        std::string piece;
        while (std::getline(in, piece, ',')) {
            if (piece.empty()) continue;
            cutoffs.push_back(std::stoi(piece));
        }
        results["n"] = n;
        json table = json::object();
        for (const auto& [cutoff, row] : hochschild_truncated(e, n, cutoffs)) {
            json jr;
            jr["total"] = row.total;
            json per = json::object();
            for (const auto& [g, d] : row.per_degree) per[g.to_string()] = d;
            jr["per_degree"] = per;
            table[std::to_string(cutoff)] = jr;
        }
        results["table"] = table;
        return out;
    }

    if (command == "hopf-check") {
        json violations;
        EnvelopingAlgebra e = make_env(f, violations);
        out.report["violations"] = violations;
        int maxdeg = opt_int(options, "max-degree", 4);
        HopfReport rep = hopf_ideal_check(e, maxdeg);
        results["max_degree"] = maxdeg;
        results["axioms_ok"] = rep.axioms_ok;
        results["axiom_failures"] = rep.axiom_failures;
        json obs = json::array();
        for (const auto& o : rep.obstructions)
            obs.push_back({{"i", o.i},
                           {"j", o.j},
                           {"counit", o.counit_value.to_string()},
                           {"coproduct_residue", o.coproduct_residue.to_string()}});
        results["obstructions"] = obs;
        out.exit_code = rep.axioms_ok ? 0 : 1;
        return out;
    }

    throw std::invalid_argument("unknown command \"" + command + "\"");
}

RunResult run_on_text(const std::string& command, const std::string& json_text,
                      const std::map<std::string, std::string>& options) {
    try {
        AlgebraFile f = parse_algebra_file(json_text);
        return run_command(command, f, options, content_digest(json_text));
    } catch (const std::invalid_argument& err) {
        RunResult out;
        out.report["command"] = command;
        out.report["error"] = err.what();
        out.exit_code = 2;
        return out;
    } catch (const std::domain_error& err) {
        RunResult out;
        out.report["command"] = command;
        out.report["error"] = err.what();
        out.exit_code = 1;
        return out;
    }
}

}  // namespace colorlie
