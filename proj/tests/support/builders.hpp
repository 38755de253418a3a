#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "indicia/diff_operator.hpp"
#include "indicia/expression.hpp"

namespace indicia::testing {

using MatrixText = std::vector<std::vector<std::string>>;

inline PolyMatrix matrix_of(const MatrixText& rows) {
    PolyMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = parse_poly(rows[r][c]);
    return m;
}

/// Operator from A_0, ..., A_m written in the expression grammar.
inline DiffOperator op_of(const std::vector<MatrixText>& coeffs) {
    std::vector<PolyMatrix> mats;
    for (const auto& c : coeffs) mats.push_back(matrix_of(c));
    return DiffOperator(std::move(mats));
}

/// Scalar operator from a_0, ..., a_m.
inline DiffOperator scalar_op(const std::vector<std::string>& coeffs) {
    std::vector<MatrixText> mats;
    for (const auto& c : coeffs) mats.push_back({{c}});
    return op_of(mats);
}

inline PolyVector poly_vector(const std::vector<std::string>& entries) {
    PolyVector v;
    for (const auto& e : entries) v.push_back(parse_poly(e));
    return v;
}

/// Random polynomial with small integer (occasionally Gaussian) coefficients.
inline Poly random_poly(std::mt19937& rng, int max_degree, double zero_probability = 0.3, bool gaussian = false) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::bernoulli_distribution zero(zero_probability);
    if (zero(rng)) return Poly();
    const int d = deg(rng);
    std::vector<Scalar> c;
    for (int i = 0; i <= d; ++i)
        c.push_back(gaussian ? Scalar(mpq_class(coeff(rng)), mpq_class(coeff(rng))) : Scalar(coeff(rng)));
    return Poly(std::move(c));
}

inline PolyMatrix random_matrix(std::mt19937& rng, std::size_t N, int max_degree, double zero_probability = 0.3) {
    PolyMatrix m(N, N);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) m(r, c) = random_poly(rng, max_degree, zero_probability);
    return m;
}

/// Random operator with N <= max_N, m <= max_m and entry degree <= max_degree;
/// resampled until det A_m != 0.
inline DiffOperator random_operator(std::mt19937& rng, std::size_t max_N, std::size_t max_m, int max_degree) {
    std::uniform_int_distribution<std::size_t> dimN(1, max_N);
    std::uniform_int_distribution<std::size_t> ord(0, max_m);
    for (;;) {
        const std::size_t N = dimN(rng);
        const std::size_t m = ord(rng);
        std::vector<PolyMatrix> mats;
        for (std::size_t i = 0; i <= m; ++i) mats.push_back(random_matrix(rng, N, max_degree));
        if (determinant(mats.back()).is_zero()) continue;
        return DiffOperator(std::move(mats));
    }
}

/// Random operator from the family above, resampled until l, d != 0.
inline DiffOperator random_nondegenerate_operator(std::mt19937& rng, std::size_t max_N, std::size_t max_m,
                                                  int max_degree) {
    for (;;) {
        DiffOperator op = random_operator(rng, max_N, max_m, max_degree);
        if (indicial_polynomial(op).is_zero() || degree_polynomial(op).is_zero()) continue;
        return op;
    }
}

/// Operator with exactly the given N and m, resampled until det A_m, l and d
/// are all nonzero.
inline DiffOperator random_nondegenerate_operator_of(std::mt19937& rng, std::size_t N, std::size_t m, int max_degree) {
    for (;;) {
        std::vector<PolyMatrix> mats;
        for (std::size_t i = 0; i <= m; ++i) mats.push_back(random_matrix(rng, N, max_degree));
        if (determinant(mats.back()).is_zero()) continue;
        DiffOperator op(std::move(mats));
        if (indicial_polynomial(op).is_zero() || degree_polynomial(op).is_zero()) continue;
        return op;
    }
}

inline PolyVector random_poly_vector(std::mt19937& rng, std::size_t N, int max_degree) {
    PolyVector v(N);
    for (auto& p : v) p = random_poly(rng, max_degree, 0.1);
    return v;
}

} // namespace indicia::testing
