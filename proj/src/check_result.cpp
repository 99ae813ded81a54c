#include "twistlab/check_result.hpp"

#include <algorithm>

namespace twistlab {

CheckResult compare(std::string name, const SparseMatrix& lhs, const SparseMatrix& rhs) {
    CheckResult r;
    r.name = std::move(name);
    r.dims = lhs.dim();
    r.residual_nnz = residual_nnz(lhs, rhs);
    r.passed = r.residual_nnz == 0;
    return r;
}

CheckResult combine(std::string name, const std::vector<CheckResult>& parts) {
    CheckResult r;
    r.name = std::move(name);
    for (const auto& p : parts) {
        r.residual_nnz += p.residual_nnz;
        r.dims = std::max(r.dims, p.dims);
        r.elapsed_seconds += p.elapsed_seconds;
        if (!p.passed) {
            r.passed = false;
            if (!r.detail.empty()) r.detail += "; ";
            r.detail += p.name;
            if (!p.detail.empty()) r.detail += " [" + p.detail + "]";
        }
    }
    return r;
}

}  // namespace twistlab
