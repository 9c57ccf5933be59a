#include "colorlie/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace colorlie {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& why) {
    throw std::invalid_argument("algebra file: " + where + ": " + why);
}

GroupElement parse_degree(const json& j, const GroupSpec& spec, const std::string& where) {
    if (!j.is_array()) bad(where, "degree must be an array of integers");
    GroupElement g;
    for (const auto& c : j) {
        if (!c.is_number_integer()) bad(where, "degree entries must be integers");
        g.coords.push_back(c.get<long>());
    }
    if (static_cast<int>(g.coords.size()) != spec.rank())
        bad(where, "degree length " + std::to_string(g.coords.size()) + " does not match group rank " +
                       std::to_string(spec.rank()));
    return group_reduce(spec, std::move(g));
}

int parse_gen_index(const json& j, const ColorLieAlgebra& l, const std::string& where) {
    int idx = -1;
    if (j.is_number_integer())
        idx = j.get<int>();
    else if (j.is_string()) {
        const std::string s = j.get<std::string>();
        idx = l.index_of(s);
        if (idx < 0) {
            try {
                idx = std::stoi(s);
            } catch (...) {
                bad(where, "unknown generator \"" + s + "\"");
            }
        }
    } else
        bad(where, "generator reference must be an index or a name");
    if (idx < 0 || idx >= l.dim()) bad(where, "generator index out of range");
    return idx;
}

Cocycle2 parse_cocycle_entries(const json& j, const ColorLieAlgebra& l, unsigned order,
                               const std::string& where) {
    Cocycle2 w;
    if (!j.is_array()) bad(where, "cocycle must be an array of {i, j, value}");
    for (const auto& entry : j) {
        int i = parse_gen_index(entry.at("i"), l, where);
        int k = parse_gen_index(entry.at("j"), l, where);
        CycScalar v = parse_scalar(entry.at("value").get<std::string>(), order);
        auto key = std::make_pair(i, k);
        if (w.raw.count(key)) bad(where, "duplicate cocycle entry");
        w.raw.emplace(key, std::move(v));
    }
    return w;
}

}  // namespace

const Cocycle2& AlgebraFile::cocycle_by_name(const std::string& name) const {
    static const Cocycle2 zero{};
    if (name == "omega") return omega;
    if (name == "zero") return zero;
    auto it = variants.find(name);
    if (it == variants.end()) throw std::invalid_argument("unknown cocycle \"" + name + "\"");
    return it->second;
}

GradedModule AlgebraFile::module_by_name(const std::string& name,
                                         const EnvelopingAlgebra& e) const {
    if (name == "trivial") return trivial_module(algebra);
    if (name.rfind("adjoint:", 0) == 0)
        return adjoint_truncated(e, std::stoi(name.substr(8)));
    for (const auto& m : modules)
        if (m.name == name) return m;
    throw std::invalid_argument("unknown module \"" + name + "\"");
}

AlgebraFile parse_algebra_file(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& err) {
        bad("(root)", std::string("not valid JSON: ") + err.what());
    }
    AlgebraFile f;

    const json& jg = j.contains("group") ? j.at("group") : json::object();
    f.algebra.group.free_rank = jg.value("free_rank", 0);
    if (f.algebra.group.free_rank < 0) bad("group.free_rank", "must be nonnegative");
    if (jg.contains("torsion"))
        for (const auto& m : jg.at("torsion")) {
            long t = m.get<long>();
            if (t < 2) bad("group.torsion", "orders must be >= 2");
            f.algebra.group.torsion.push_back(t);
        }

    if (j.contains("cyclotomic_order")) {
        long n = j.at("cyclotomic_order").get<long>();
        if (n < 1) bad("cyclotomic_order", "must be a positive integer");
        f.order = static_cast<unsigned>(n);
    } else {
        unsigned n = 1;
        for (long t : f.algebra.group.torsion) n = std::lcm(n, static_cast<unsigned>(t));
        f.order = n;
    }
    f.algebra.order = f.order;

    const int rank = f.algebra.group.rank();
    f.algebra.eps.order = f.order;
    f.algebra.eps.values.assign(rank, std::vector<CycScalar>(rank, CycScalar::one(f.order)));
    if (j.contains("bicharacter")) {
        const json& jb = j.at("bicharacter");
        if (!jb.is_array() || static_cast<int>(jb.size()) != rank)
            bad("bicharacter", "must be a " + std::to_string(rank) + "x" + std::to_string(rank) +
                                   " matrix of scalar literals");
        for (int r = 0; r < rank; ++r) {
            if (!jb[r].is_array() || static_cast<int>(jb[r].size()) != rank)
                bad("bicharacter", "row " + std::to_string(r) + " has wrong length");
            for (int c = 0; c < rank; ++c)
                f.algebra.eps.values[r][c] = parse_scalar(jb[r][c].get<std::string>(), f.order);
        }
    } else if (rank > 0) {
        bad("bicharacter", "required for a nontrivial grading group");
    }

    if (!j.contains("generators")) bad("generators", "missing");
    for (const auto& gen : j.at("generators")) {
        Generator g;
        g.name = gen.at("name").get<std::string>();
        if (g.name.empty() || g.name.find('.') != std::string::npos ||
            g.name.find(' ') != std::string::npos)
            bad("generators", "names must be nonempty without '.' or spaces");
        if (f.algebra.index_of(g.name) >= 0) bad("generators", "duplicate name " + g.name);
        g.degree = parse_degree(gen.contains("degree") ? gen.at("degree") : json::array(),
                                f.algebra.group, "generators." + g.name);
        f.algebra.gens.push_back(std::move(g));
    }

    if (j.contains("brackets"))
        for (const auto& entry : j.at("brackets")) {
            int i = parse_gen_index(entry.at("i"), f.algebra, "brackets");
            int k = parse_gen_index(entry.at("j"), f.algebra, "brackets");
            LinComb comb;
            for (const auto& [key, lit] : entry.at("coeffs").items()) {
                int target = parse_gen_index(json(key), f.algebra, "brackets.coeffs");
                CycScalar c = parse_scalar(lit.get<std::string>(), f.order);
                if (!c.is_zero()) comb[target] = std::move(c);
            }
            auto key = std::make_pair(i, k);
            if (f.algebra.bracket_raw.count(key)) bad("brackets", "duplicate (i,j) entry");
            if (!comb.empty()) f.algebra.bracket_raw.emplace(key, std::move(comb));
        }

    if (j.contains("cocycle"))
        f.omega = parse_cocycle_entries(j.at("cocycle"), f.algebra, f.order, "cocycle");
    if (j.contains("cocycles"))
        for (const auto& entry : j.at("cocycles")) {
            std::string name = entry.at("name").get<std::string>();
            if (name == "omega" || name == "zero") bad("cocycles", "\"" + name + "\" is reserved");
            f.variants[name] =
                parse_cocycle_entries(entry.at("entries"), f.algebra, f.order, "cocycles." + name);
        }

    if (j.contains("modules"))
        for (const auto& jm : j.at("modules")) {
            GradedModule m;
            m.name = jm.at("name").get<std::string>();
            for (const auto& bv : jm.at("basis"))
                m.basis.push_back({bv.at("name").get<std::string>(),
                                   parse_degree(bv.at("degree"), f.algebra.group,
                                                "modules." + m.name + ".basis")});
            const int dim = m.dim();
            for (const auto& [gen_name, rows] : jm.at("actions").items()) {
                int gi = parse_gen_index(json(gen_name), f.algebra, "modules." + m.name);
                Matrix mat(dim, dim, f.order);
                if (static_cast<int>(rows.size()) != dim)
                    bad("modules." + m.name, "action matrix must be dim x dim");
                for (int r = 0; r < dim; ++r) {
                    if (static_cast<int>(rows[r].size()) != dim)
                        bad("modules." + m.name, "action matrix must be dim x dim");
                    for (int c = 0; c < dim; ++c)
                        mat.at(r, c) = parse_scalar(rows[r][c].get<std::string>(), f.order);
                }
                m.actions.emplace(gi, std::move(mat));
            }
            std::string twist = jm.value("twist", "zero");
            if (twist == "omega")
                m.twist = f.omega;
            else if (twist != "zero")
                bad("modules." + m.name + ".twist", "must be \"zero\" or \"omega\"");
            f.modules.push_back(std::move(m));
        }

    return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str());
}

namespace {

json degree_json(const GroupElement& g) {
    json a = json::array();
    for (long c : g.coords) a.push_back(c);
    return a;
}

json cocycle_json(const ColorLieAlgebra& l, const Cocycle2& w) {
    json a = json::array();
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i; j < l.dim(); ++j) {
            CycScalar v = w.value(l, i, j);
            if (v.is_zero()) continue;
            a.push_back({{"i", i}, {"j", j}, {"value", v.to_string()}});
        }
    return a;
}

}  // namespace

std::string serialize_algebra_file(const AlgebraFile& f) {
    const ColorLieAlgebra& l = f.algebra;
    json j;
    j["cyclotomic_order"] = f.order;
    j["group"] = {{"free_rank", l.group.free_rank}, {"torsion", l.group.torsion}};
    json jb = json::array();
    for (const auto& row : l.eps.values) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        jb.push_back(r);
    }
    j["bicharacter"] = jb;
    json gens = json::array();
    for (const auto& g : l.gens) gens.push_back({{"name", g.name}, {"degree", degree_json(g.degree)}});
    j["generators"] = gens;
    json brackets = json::array();
    for (int i = 0; i < l.dim(); ++i)
        for (int k = i; k < l.dim(); ++k) {
            LinComb comb = l.bracket(i, k);
            if (comb.empty()) continue;
            json coeffs = json::object();
            for (const auto& [t, c] : comb) coeffs[std::to_string(t)] = c.to_string();
            brackets.push_back({{"i", i}, {"j", k}, {"coeffs", coeffs}});
        }
    j["brackets"] = brackets;
    j["cocycle"] = cocycle_json(l, f.omega);
    if (!f.variants.empty()) {
        json vs = json::array();
        for (const auto& [name, w] : f.variants)
            vs.push_back({{"name", name}, {"entries", cocycle_json(l, w)}});
        j["cocycles"] = vs;
    }
    if (!f.modules.empty()) {
        json ms = json::array();
        for (const auto& m : f.modules) {
            json jm;
            jm["name"] = m.name;
            json basis = json::array();
            for (const auto& b : m.basis)
                basis.push_back({{"name", b.name}, {"degree", degree_json(b.degree)}});
            jm["basis"] = basis;
            json actions = json::object();
            for (const auto& [gi, mat] : m.actions) {
                json rows = json::array();
                for (size_t r = 0; r < mat.rows(); ++r) {
                    json row = json::array();
                    for (size_t c = 0; c < mat.cols(); ++c) row.push_back(mat.at(r, c).to_string());
                    rows.push_back(row);
                }
                actions[l.gens[gi].name] = rows;
            }
            jm["actions"] = actions;
            jm["twist"] = m.twist.is_zero() ? "zero" : "omega";
            ms.push_back(jm);
        }
        j["modules"] = ms;
    }
    return j.dump(2) + "\n";
}

std::string content_digest(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace colorlie
