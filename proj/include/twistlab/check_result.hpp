#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "twistlab/sparse_matrix.hpp"

namespace twistlab {

/// Outcome of one exact identity check. passed holds iff residual_nnz == 0.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t residual_nnz = 0;
    std::size_t dims = 0;
    double elapsed_seconds = 0.0;
    std::string detail;
};

/// Compares lhs and rhs exactly.
[[nodiscard]] CheckResult compare(std::string name, const SparseMatrix& lhs, const SparseMatrix& rhs);

/// Folds sub-results: passes iff all pass; residuals add up; failing names go to detail.
[[nodiscard]] CheckResult combine(std::string name, const std::vector<CheckResult>& parts);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace twistlab
