#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/check_result.hpp"
#include "twistlab/rational.hpp"
#include "twistlab/sparse_matrix.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

inline constexpr std::string_view kSuiteNames[] = {"core",    "twist-axioms", "chain",     "nine-states", "diagram",
                                                   "rmatrix", "antipode",     "matreshka", "transitions"};

enum class OutputFormat { text, json };

struct SuiteConfig {
    int N = 6;
    std::vector<std::string> suites;
    std::vector<int> r_values;  // empty: every admissible r
    std::vector<Rational> alpha_values = {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 5)};
    std::vector<std::string> witness_reps = {"fundamental"};
    OutputFormat output = OutputFormat::text;
    std::optional<std::filesystem::path> dump_dir;
    std::uint64_t seed = 20240611;
    int core_cases = 250;
};

/// Throws ConfigInvalid on N < 2, unknown suite or witness names, N < 6 with
/// nine-states/diagram, or an r outside [3, N-2] for those suites.
void validate(const SuiteConfig& cfg);

/// Parses the JSON config structure (same field names as the report echo).
[[nodiscard]] SuiteConfig parse_config(std::string_view json_text);

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckResult> checks;  // sorted by name
    std::size_t passed = 0;
    std::size_t failed = 0;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool all_passed() const { return failed == 0; }
};

/// Runs every requested suite under every witness representation. Failed
/// checks are results; only structural errors throw.
[[nodiscard]] SuiteReport run_suite(const SuiteConfig& cfg);

[[nodiscard]] std::string emit_report(const SuiteReport& rep, OutputFormat format);

/// "dim d" then "row col num den" per stored entry, row-major.
void dump_matrix(const SparseMatrix& m, const std::filesystem::path& path);
[[nodiscard]] std::string dump_matrix_string(const SparseMatrix& m);
[[nodiscard]] SparseMatrix read_matrix(const std::filesystem::path& path);
[[nodiscard]] SparseMatrix parse_matrix(std::string_view text);

/// Twists addressable by name: "jordanian", "extended", "chain" (maximal),
/// "chain:<p>", "alternative", or a nine-state name such as "E1J1J0".
/// `alpha` and `r` parametrize "extended"; `r` the nine states.
[[nodiscard]] TwistSequence named_twist(std::string_view name, int N, const Rational& alpha, int r);

/// The nine tables (and the 2-Jordanian block) as JSON.
[[nodiscard]] std::string tables_json(int N, int r);

}  // namespace twistlab
