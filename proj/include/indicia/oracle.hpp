#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "indicia/diff_operator.hpp"
#include "indicia/linalg.hpp"

namespace indicia {

/// Matrix of P from degree-<= d polynomial vectors (dimension N(d+1)) into
/// degree-<= d - n' vectors, computed by differentiating each monomial
/// vector. Column index j*N + c is x^j e_c; row index e*N + r is x^e e_r.
ScalarMatrix polynomial_truncation(const DiffOperator& op, std::int64_t d);

/// Matrix of the jet map C[[x]]^N / x^K -> C[[x]]^N / x^{K-n}.
ScalarMatrix jet_truncation(const DiffOperator& op, std::size_t K);

/// Degree past every nonnegative integer root of l and d by the coefficient
/// degree span (max deg A_i - min nu(A_i)).
std::int64_t large_degree_threshold(const DiffOperator& op);

struct PolynomialIndexRow {
    std::int64_t degree = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    std::size_t dim_ker = 0;
    std::size_t dim_coker = 0;
    std::int64_t index = 0;
};

struct PolynomialIndexExperiment {
    std::vector<PolynomialIndexRow> rows;
    std::int64_t expected = 0;   // N n'
    std::int64_t threshold = 0;  // large_degree_threshold
    bool conclusive = false;     // l != 0 and d != 0
    bool stabilized = false;     // ker, coker constant over the last three rows and index = N n'
};

PolynomialIndexExperiment polynomial_index_experiment(const DiffOperator& op, const std::vector<std::int64_t>& degrees);

struct FormalKernelRow {
    std::size_t K = 0;
    std::size_t raw_kernel_dim = 0;        // kernel of the K-jet map
    std::size_t extendable_kernel_dim = 0; // kernel jets that survive a longer truncation
    std::size_t lookahead = 0;             // jet order used for the extension test
    std::size_t series_engine_dim = 0;     // formal_kernel_jets(op, K - 1)
};

struct FormalKernelExperiment {
    std::vector<FormalKernelRow> rows;
    bool stabilized = false; // extendable dimension constant over the last three K and equal to the series engine
};

FormalKernelExperiment formal_kernel_experiment(const DiffOperator& op, const std::vector<std::size_t>& Ks);

struct CokernelWitnesses {
    std::int64_t k = 0;
    bool auto_selected = false;
    std::size_t expected = 0;             // (n - n') N
    std::vector<PolyVector> witnesses;    // x^{k-n+t} e_c, 0 <= t < n - n'
    std::size_t source_dim = 0;           // valuation >= k, degree <= k + span
    std::size_t target_dim = 0;
    std::size_t image_rank = 0;
    std::size_t combined_rank = 0;        // rank of image together with witnesses
    bool verified = false;
};

/// Witnesses of a complement of P(M(k)) in M(k - n), M(j) the polynomial
/// vectors of valuation >= j. Without k the smallest admissible value past
/// large_degree_threshold and n is used. Throws HypothesisViolation if l or d
/// vanishes identically, if some integer root of l or d is >= k, or if k < n.
CokernelWitnesses cokernel_witnesses(const DiffOperator& op, std::optional<std::int64_t> k = std::nullopt);

} // namespace indicia
