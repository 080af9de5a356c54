#include "richardson/linalg.hpp"

#include <cassert>
#include <utility>

namespace richardson {

int exact_rank(IntMat m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw contract_error("exact_rank: ragged matrix");

    // One-step Bareiss. Entries stay equal to minors of the input, so every
    // division below is exact.
    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Int num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                assert(num % prev == 0);
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) return {};
    const size_t n = a.size(), k = b.size(), m = b[0].size();
    if (a[0].size() != k) throw contract_error("mat_mul: shape mismatch");
    IntMat r(n, IntVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

}  // namespace richardson
