#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "colorlie/driver.hpp"

namespace {

struct CommonArgs {
    std::string file;
    bool verbose = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("file", args.file, "algebra description file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--verbose", args.verbose, "human-readable summary on stderr");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "colorlie: exact computer algebra for twisted enveloping algebras of color Lie "
        "algebras"};
    app.require_subcommand(1);

    CommonArgs args;
    std::map<std::string, std::string> options;

    auto add_opt = [&](CLI::App* cmd, const std::string& name, const std::string& help) {
        cmd->add_option_function<std::string>(
            "--" + name, [&options, name](const std::string& v) { options[name] = v; }, help);
    };

    CLI::App* check = app.add_subcommand("check", "validate all axioms of the input");
    add_common(check, args);
    CLI::App* overlaps =
        app.add_subcommand("overlaps", "resolve every rewriting ambiguity both ways");
    add_common(overlaps, args);

    CLI::App* nf = app.add_subcommand("nf", "normal form of a word (PBW basis)");
    add_common(nf, args);
    add_opt(nf, "word", "whitespace-separated generator names, e.g. \"p q q\"");
    nf->add_flag_callback("--force", [&options] { options["force"] = "true"; },
                          "explore an untrusted algebra with a step budget");

    CLI::App* mul = app.add_subcommand("mul", "product of two words in U_omega(L)");
    add_common(mul, args);
    add_opt(mul, "lhs", "left word");
    add_opt(mul, "rhs", "right word");

    CLI::App* dims = app.add_subcommand("dims", "PBW dimension table vs the symmetric algebra");
    add_common(dims, args);
    add_opt(dims, "max-degree", "maximum filtration degree (default 6)");

    CLI::App* h2 = app.add_subcommand("h2", "dimension and representatives of H^2");
    add_common(h2, args);

    CLI::App* coh = app.add_subcommand("cohomologous", "decide whether two cocycles differ by a coboundary");
    add_common(coh, args);
    add_opt(coh, "w1", "first cocycle name (default omega)");
    add_opt(coh, "w2", "second cocycle name (default zero)");

    CLI::App* iso = app.add_subcommand("iso", "construct and verify the filtered isomorphism");
    add_common(iso, args);
    add_opt(iso, "w1", "first cocycle name (default omega)");
    add_opt(iso, "w2", "second cocycle name (default zero)");
    add_opt(iso, "max-degree", "PBW degree bound for the triangularity check (default 4)");

    CLI::App* cohom = app.add_subcommand("cohomology", "cohomology dimensions of a module");
    add_common(cohom, args);
    add_opt(cohom, "module", "module name: declared name, trivial, or adjoint:N");
    add_opt(cohom, "n-max", "highest cohomological degree (default 4)");
    add_opt(cohom, "degree", "identity|all G-degree blocks (default identity)");

    CLI::App* res = app.add_subcommand("resolution-check", "d o d = 0 and Koszul exactness of gr");
    add_common(res, args);
    add_opt(res, "n-max", "homological degree bound (default 4)");
    add_opt(res, "deg-max", "total degree bound for the Koszul check (default 5)");

    CLI::App* hoch = app.add_subcommand("hochschild", "Hochschild dimensions via truncated adjoints");
    add_common(hoch, args);
    add_opt(hoch, "n", "cohomological degree (default 0)");
    add_opt(hoch, "truncations", "comma-separated filtration cutoffs (default 1,2,3,4)");

    CLI::App* hopf = app.add_subcommand("hopf-check", "color Hopf axioms and the omega obstruction");
    add_common(hopf, args);
    add_opt(hopf, "max-degree", "PBW degree bound for the axiom checks (default 4)");

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    std::ifstream in(args.file);
    std::stringstream ss;
    ss << in.rdbuf();

    auto start = std::chrono::steady_clock::now();
    colorlie::RunResult result = colorlie::run_on_text(command, ss.str(), options);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    std::cout << result.report.dump(2) << "\n";
    if (args.verbose) {
        std::cerr << command << " " << args.file << ": exit " << result.exit_code << ", "
                  << elapsed << " ms";
        if (result.report.contains("violations"))
            std::cerr << ", " << result.report["violations"].size() << " violation(s)";
        std::cerr << "\n";
    }
    return result.exit_code;
}
