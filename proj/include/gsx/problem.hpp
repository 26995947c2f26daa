#ifndef GSX_PROBLEM_HPP
#define GSX_PROBLEM_HPP

#include <optional>

#include "gsx/extension.hpp"

namespace gsx {

// The factor block of a problem file: absent, purely symbolic, the
// pair-symbol lens, or a concrete assignment.
struct FactorBlock {
    enum class Mode { None, Symbolic, Pairs, Assign, AssignPairs };
    Mode mode = Mode::None;
    bool antisymmetric = false;               // Pairs
    std::map<std::string, Vec> assign;        // Assign (presentation mode)
    std::vector<std::vector<Vec>> assign_pairs; // AssignPairs (finite mode)
};

struct ProblemOptions {
    std::optional<std::size_t> max_deg;
    std::optional<std::size_t> max_iter;
};

// One self-describing input file; parses to exactly one engine
// configuration.
struct ProblemFile {
    enum class Mode { Presentation, Finite };

    Field field = Field::rationals();
    Mode mode = Mode::Presentation;
    std::optional<Presentation> presentation; // Presentation mode
    std::optional<BimoduleSpec> module;       // Presentation mode, optional
    std::optional<FiniteAlgebraSpec> finite;  // Finite mode
    FactorBlock factor;
    std::optional<Poly> input; // polynomial for `nf`
    ProblemOptions options;

    // Degree bound: explicit option or 1 + twice the maximum leading degree.
    std::size_t effective_max_deg(const Presentation& p) const;
    std::size_t effective_max_iter() const;
};

// Parses the documented JSON syntax; numeric literals are exact strings or
// integers. Syntax errors carry line/column, semantic errors the offending
// key path.
ProblemFile parse_problem(const std::string& text);

// Canonical serialization; parse(render_problem(p)) reproduces p.
std::string render_problem(const ProblemFile& p);

enum class OutputFormat { Text, Machine };

struct RunResult {
    int exit_code; // 0 holds, 1 property fails, 2 input error, 3 truncated
    std::string output;
};

// command in {gsb-check, complete, nf, irr, ext-conditions, ext-cocycle,
// ext-verify, ext-build}. Output is deterministic and ends with exactly one
// trailing newline.
RunResult run_command(const std::string& command, const ProblemFile& pf,
                      OutputFormat fmt = OutputFormat::Text);

extern const char* const kVersion;

} // namespace gsx

#endif
