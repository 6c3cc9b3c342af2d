// Dense exact linear algebra over the quadratic scalar field.
//
// Small utilities used by operator-commutation checks and sector audits:
// matrix product and difference, zero test, and rank by fraction-free-ish
// Gauss-Jordan elimination (exact division in the field, so no pivot
// growth concerns beyond rational size).

#pragma once

#include "dcs/params.hpp"

#include <stdexcept>
#include <vector>

namespace dcs {

using QuadMatrix = std::vector<std::vector<QuadScalar>>;

inline QuadMatrix mat_mul(const QuadMatrix& A, const QuadMatrix& B) {
    const std::size_t n = A.size();
    if (n == 0) return {};
    const std::size_t k = A[0].size(), m = B.empty() ? 0 : B[0].size();
    if (B.size() != k) throw std::invalid_argument("mat_mul: inner dimension mismatch");
    QuadMatrix C(n, std::vector<QuadScalar>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (A[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

inline QuadMatrix mat_sub(const QuadMatrix& A, const QuadMatrix& B) {
    if (A.size() != B.size()) throw std::invalid_argument("mat_sub: dimension mismatch");
    QuadMatrix C = A;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != B[i].size()) throw std::invalid_argument("mat_sub: dimension mismatch");
        for (std::size_t j = 0; j < A[i].size(); ++j) C[i][j] -= B[i][j];
    }
    return C;
}

inline bool mat_is_zero(const QuadMatrix& A) {
    for (const auto& row : A)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

// Rank by Gauss-Jordan elimination (exact).  The input is copied.
inline std::size_t mat_rank(QuadMatrix A) {
    const std::size_t rows = A.size();
    if (rows == 0) return 0;
    const std::size_t cols = A[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(A[rank], A[piv]);
        const QuadScalar inv = A[rank][col].inverse();
        for (auto& x : A[rank]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][col].is_zero()) continue;
            const QuadScalar f = A[i][col];
            for (std::size_t j = 0; j < cols; ++j) A[i][j] -= f * A[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t mat_kernel_dim(const QuadMatrix& A) {
    if (A.empty()) return 0;
    return A[0].size() - mat_rank(A);
}

}  // namespace dcs
