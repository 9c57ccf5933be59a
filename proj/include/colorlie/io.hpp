#pragma once

#include <map>
#include <string>
#include <vector>

#include "colorlie/cohomology.hpp"

namespace colorlie {

/// One problem instance: the algebra, its main cocycle "omega", optional
/// named cocycle variants, and optional modules. "zero" always names the
/// zero cocycle; "trivial" and "adjoint:N" always name modules.
struct AlgebraFile {
    unsigned order = 1;
    ColorLieAlgebra algebra;
    Cocycle2 omega;
    std::map<std::string, Cocycle2> variants;
    std::vector<GradedModule> modules;

    const Cocycle2& cocycle_by_name(const std::string& name) const;
    /// Resolves "trivial", "adjoint:N" (built on demand) or a declared module.
    GradedModule module_by_name(const std::string& name, const EnvelopingAlgebra& e) const;
};

/// Parses the JSON schema; throws std::invalid_argument with the offending
/// key on schema violations. Unknown cyclotomic_order defaults to the lcm of
/// the torsion orders (minimum 1).
AlgebraFile parse_algebra_file(const std::string& json_text);
AlgebraFile load_algebra_file(const std::string& path);

/// Canonical re-serialization (brackets and cocycles in i <= j orientation).
std::string serialize_algebra_file(const AlgebraFile& f);

/// FNV-1a 64-bit over the raw bytes, as fixed-width hex.
std::string content_digest(const std::string& bytes);

}  // namespace colorlie
