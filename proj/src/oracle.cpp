#include "indicia/oracle.hpp"

#include <algorithm>
#include <limits>

#include "indicia/errors.hpp"
#include "indicia/roots.hpp"
#include "indicia/series.hpp"

namespace indicia {

namespace {

/// Columns: x^j e_c for j in [j_lo, j_hi]. Rows: x^e e_r for e in [e_lo, e_hi].
ScalarMatrix image_matrix(const DiffOperator& op, std::int64_t j_lo, std::int64_t j_hi, std::int64_t e_lo,
                          std::int64_t e_hi) {
    const std::size_t N = op.dimension();
    const std::size_t cols = j_hi >= j_lo ? static_cast<std::size_t>(j_hi - j_lo + 1) * N : 0;
    const std::size_t rows = e_hi >= e_lo ? static_cast<std::size_t>(e_hi - e_lo + 1) * N : 0;
    ScalarMatrix a(rows, cols);
    for (std::int64_t j = j_lo; j <= j_hi; ++j)
        for (std::size_t c = 0; c < N; ++c) {
            PolyVector u(N);
            u[c] = Poly::monomial(Scalar(1), static_cast<std::size_t>(j));
            const PolyVector image = op.apply(u);
            const std::size_t col = static_cast<std::size_t>(j - j_lo) * N + c;
            for (std::size_t r = 0; r < N; ++r)
                for (std::int64_t e = std::max<std::int64_t>(e_lo, 0); e <= e_hi; ++e)
                    a(static_cast<std::size_t>(e - e_lo) * N + r, col) = image[r].coeff(e);
        }
    return a;
}

std::vector<std::int64_t> integer_root_values(const Poly& p) {
    std::vector<std::int64_t> out;
    if (p.is_zero()) return out;
    for (const auto& r : integer_roots(p)) out.push_back(r.value.to_int64());
    return out;
}

} // namespace

ScalarMatrix polynomial_truncation(const DiffOperator& op, std::int64_t d) {
    return image_matrix(op, 0, d, 0, d - op.structure().n_prime);
}

ScalarMatrix jet_truncation(const DiffOperator& op, std::size_t K) {
    return image_matrix(op, 0, static_cast<std::int64_t>(K) - 1, 0, static_cast<std::int64_t>(K) - op.structure().n - 1);
}

std::int64_t large_degree_threshold(const DiffOperator& op) {
    std::int64_t root = 0;
    for (const Poly& p : {indicial_polynomial(op), degree_polynomial(op)}) {
        if (p.is_zero()) continue;
        if (const auto r = max_nonnegative_integer_root(p)) root = std::max(root, *r);
    }
    std::int64_t top = 0;
    std::int64_t low = std::numeric_limits<std::int64_t>::max();
    const auto& st = op.structure();
    for (std::size_t i = 0; i < st.degrees.size(); ++i) {
        if (!st.degrees[i].is_finite()) continue;
        top = std::max(top, st.degrees[i].value());
        low = std::min(low, st.valuations[i].value());
    }
    return root + (top - low) + 1;
}

PolynomialIndexExperiment polynomial_index_experiment(const DiffOperator& op, const std::vector<std::int64_t>& degrees) {
    PolynomialIndexExperiment ex;
    const auto N = static_cast<std::int64_t>(op.dimension());
    ex.expected = N * op.structure().n_prime;
    ex.threshold = large_degree_threshold(op);
    ex.conclusive = !indicial_polynomial(op).is_zero() && !degree_polynomial(op).is_zero();
    for (const std::int64_t d : degrees) {
        const ScalarMatrix a = polynomial_truncation(op, d);
        PolynomialIndexRow row;
        row.degree = d;
        row.source_dim = a.cols();
        row.target_dim = a.rows();
        row.rank = rank(a);
        row.dim_ker = row.source_dim - row.rank;
        row.dim_coker = row.target_dim - row.rank;
        row.index = static_cast<std::int64_t>(row.dim_ker) - static_cast<std::int64_t>(row.dim_coker);
        ex.rows.push_back(row);
    }
    if (ex.rows.size() >= 3) {
        const auto& last = ex.rows.back();
        ex.stabilized = last.index == ex.expected;
        for (std::size_t i = ex.rows.size() - 3; i < ex.rows.size(); ++i)
            ex.stabilized = ex.stabilized && ex.rows[i].dim_ker == last.dim_ker &&
                            ex.rows[i].dim_coker == last.dim_coker && ex.rows[i].index == last.index;
    }
    return ex;
}

FormalKernelExperiment formal_kernel_experiment(const DiffOperator& op, const std::vector<std::size_t>& Ks) {
    FormalKernelExperiment ex;
    const auto& st = op.structure();
    const std::size_t N = op.dimension();
    const Poly l = indicial_polynomial(op);
    std::size_t root = 0;
    if (!l.is_zero())
        if (const auto r = max_nonnegative_integer_root(l)) root = static_cast<std::size_t>(*r);
    for (const std::size_t K : Ks) {
        FormalKernelRow row;
        row.K = K;
        row.raw_kernel_dim = nullspace(jet_truncation(op, K)).size();
        row.lookahead = 2 * K + N * op.order() + static_cast<std::size_t>(st.n - st.n_prime) + root;
        std::vector<ScalarVector> projected;
        for (const auto& v : nullspace(jet_truncation(op, row.lookahead)))
            projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(K * N));
        row.extendable_kernel_dim = echelon_basis(projected, K * N).size();
        row.series_engine_dim = K == 0 ? 0 : formal_kernel_jets(op, K - 1).basis.size();
        ex.rows.push_back(row);
    }
    if (ex.rows.size() >= 3) {
        ex.stabilized = true;
        const auto& last = ex.rows.back();
        for (std::size_t i = ex.rows.size() - 3; i < ex.rows.size(); ++i)
            ex.stabilized = ex.stabilized && ex.rows[i].extendable_kernel_dim == last.extendable_kernel_dim &&
                            ex.rows[i].extendable_kernel_dim == ex.rows[i].series_engine_dim;
    }
    return ex;
}

CokernelWitnesses cokernel_witnesses(const DiffOperator& op, std::optional<std::int64_t> k) {
    const Poly l = indicial_polynomial(op);
    const Poly d = degree_polynomial(op);
    if (l.is_zero() || d.is_zero()) throw HypothesisViolation("cokernel witnesses require l(k) and d(k) not identically zero");
    const auto& st = op.structure();
    std::vector<std::int64_t> roots = integer_root_values(l);
    for (const auto r : integer_root_values(d)) roots.push_back(r);

    CokernelWitnesses w;
    if (k) {
        w.k = *k;
    } else {
        w.auto_selected = true;
        w.k = std::max<std::int64_t>(large_degree_threshold(op), st.n);
        for (const auto r : roots) w.k = std::max(w.k, r + 1);
    }
    for (const auto r : roots)
        if (r >= w.k)
            throw HypothesisViolation("integer root " + std::to_string(r) + " of l or d is not below k = " +
                                      std::to_string(w.k));
    if (w.k < st.n) throw HypothesisViolation("k = " + std::to_string(w.k) + " is below n = " + std::to_string(st.n));

    const std::size_t N = op.dimension();
    const auto gap = static_cast<std::size_t>(st.n - st.n_prime);
    w.expected = gap * N;
    for (std::size_t t = 0; t < gap; ++t)
        for (std::size_t c = 0; c < N; ++c) {
            PolyVector v(N);
            v[c] = Poly::monomial(Scalar(1), static_cast<std::size_t>(w.k - st.n + static_cast<std::int64_t>(t)));
            w.witnesses.push_back(std::move(v));
        }

    const std::int64_t span = std::max<std::int64_t>(static_cast<std::int64_t>(gap), 2);
    const std::int64_t e_lo = w.k - st.n;
    const std::int64_t e_hi = w.k + span - st.n_prime;
    ScalarMatrix image = image_matrix(op, w.k, w.k + span, e_lo, e_hi);
    w.source_dim = image.cols();
    w.target_dim = image.rows();
    w.image_rank = rank(image);
    ScalarMatrix combined(image.rows(), image.cols() + w.witnesses.size());
    for (std::size_t r = 0; r < image.rows(); ++r)
        for (std::size_t c = 0; c < image.cols(); ++c) combined(r, c) = image(r, c);
    for (std::size_t i = 0; i < w.witnesses.size(); ++i)
        for (std::size_t c = 0; c < N; ++c) {
            const Poly& p = w.witnesses[i][c];
            if (p.is_zero()) continue;
            const auto e = static_cast<std::int64_t>(p.size()) - 1;
            combined(static_cast<std::size_t>(e - e_lo) * N + c, image.cols() + i) = Scalar(1);
        }
    w.combined_rank = rank(combined);
    w.verified = w.image_rank == w.source_dim && w.combined_rank == w.target_dim &&
                 w.combined_rank == w.image_rank + w.witnesses.size();
    return w;
}

} // namespace indicia
