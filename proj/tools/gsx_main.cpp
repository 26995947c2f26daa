#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "gsx/problem.hpp"

namespace {

int run(const std::string& command, const std::string& path, const std::string& format,
        std::optional<std::size_t> max_deg, std::optional<std::size_t> max_iter) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    gsx::ProblemFile pf;
    try {
        pf = gsx::parse_problem(text);
    } catch (const gsx::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    // Flags override file options.
    if (max_deg)
        pf.options.max_deg = max_deg;
    if (max_iter)
        pf.options.max_iter = max_iter;
    auto fmt = format == "machine" ? gsx::OutputFormat::Machine : gsx::OutputFormat::Text;
    gsx::RunResult result = gsx::run_command(command, pf, fmt);
    std::cout << result.output;
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-Shirshov bases and singular extensions of presented algebras"};
    app.set_version_flag("--version", std::string("gsx ") + gsx::kVersion);
    app.require_subcommand(1);

    struct Common {
        std::string file;
        std::string format = "text";
        std::optional<std::size_t> max_deg;
        std::optional<std::size_t> max_iter;
    };

    static const std::vector<std::pair<std::string, std::string>> commands = {
        {"gsb-check", "Check whether the relation set is a Groebner-Shirshov basis"},
        {"complete", "Run bounded critical-pair completion"},
        {"nf", "Reduce the input polynomial to its normal form"},
        {"irr", "List irreducible words up to the degree bound"},
        {"ext-conditions", "Derive the symbolic extension conditions"},
        {"ext-cocycle", "Check the cocycle condition of a finite-dimensional factor set"},
        {"ext-verify", "Verify a concrete factor set and the resulting extension"},
        {"ext-build", "Construct the extension and emit its presentation"},
    };

    std::vector<std::shared_ptr<Common>> opts;
    for (const auto& [name, help] : commands) {
        auto common = std::make_shared<Common>();
        opts.push_back(common);
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", common->file, "problem file (JSON)")->required();
        sub->add_option("--format", common->format, "output format")
            ->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--max-deg", common->max_deg, "override options.max_deg");
        sub->add_option("--max-iter", common->max_iter, "override options.max_iter");
        std::string cmd = name;
        sub->callback([common, cmd]() {
            std::exit(run(cmd, common->file, common->format, common->max_deg, common->max_iter));
        });
    }

    CLI11_PARSE(app, argc, argv);
    return 0;
}
