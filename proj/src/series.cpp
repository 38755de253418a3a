#include "indicia/series.hpp"

#include <algorithm>
#include <cmath>

#include "indicia/errors.hpp"
#include "indicia/roots.hpp"

namespace indicia {

bool SeriesJet::is_zero() const {
    for (const auto& c : coeffs)
        for (const auto& s : c)
            if (!s.is_zero()) return false;
    return true;
}

PolyVector SeriesJet::to_polynomials() const {
    if (!exponent.is_integer() || exponent.re() < 0)
        throw std::domain_error("jet exponent is not a nonnegative integer");
    const auto shift = static_cast<std::size_t>(exponent.to_int64());
    const std::size_t N = coeffs.empty() ? 0 : coeffs.front().size();
    PolyVector out(N);
    for (std::size_t c = 0; c < N; ++c) {
        std::vector<Scalar> v(shift + coeffs.size());
        for (std::size_t j = 0; j < coeffs.size(); ++j) v[shift + j] = coeffs[j][c];
        out[c] = Poly(std::move(v));
    }
    return out;
}

namespace {

Scalar binomial(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b));
}

struct Context {
    explicit Context(const DiffOperator& op)
        : fam(indicial_family(op)), l(determinant(fam.lowest())), N(op.dimension()), m(op.order()),
          n(op.structure().n), n_prime(op.structure().n_prime) {}

    IndicialFamily fam;
    Poly l;
    std::size_t N;
    std::size_t m;
    std::int64_t n;
    std::int64_t n_prime;

    std::int64_t lowest_row() const { return std::min<std::int64_t>(0, -n); }
};

/// Rows: coefficient of x^{k0+e}, e in [e_lo, e_hi]. Columns: u_j, j in [j_lo, j_hi].
ScalarMatrix recurrence_matrix(const Context& ctx, const Scalar& k0, std::int64_t e_lo, std::int64_t e_hi,
                               std::size_t j_lo, std::size_t j_hi) {
    const std::size_t N = ctx.N;
    const std::size_t row_blocks = e_hi >= e_lo ? static_cast<std::size_t>(e_hi - e_lo + 1) : 0;
    ScalarMatrix a(row_blocks * N, (j_hi - j_lo + 1) * N);
    for (std::size_t j = j_lo; j <= j_hi; ++j) {
        const Scalar k = k0 + Scalar(static_cast<long>(j));
        for (std::int64_t s = ctx.fam.s_min(); s <= ctx.fam.s_max(); ++s) {
            const std::int64_t e = static_cast<std::int64_t>(j) + s;
            if (e < e_lo || e > e_hi) continue;
            const ScalarMatrix blk = ctx.fam.evaluate(s, k);
            const std::size_t r0 = static_cast<std::size_t>(e - e_lo) * N;
            const std::size_t c0 = (j - j_lo) * N;
            for (std::size_t r = 0; r < N; ++r)
                for (std::size_t c = 0; c < N; ++c) a(r0 + r, c0 + c) = blk(r, c);
        }
    }
    return a;
}

ScalarMatrix kernel_system(const Context& ctx, std::size_t T) {
    return recurrence_matrix(ctx, Scalar(0), ctx.lowest_row(), static_cast<std::int64_t>(T) - ctx.n, 0, T);
}

ScalarVector rhs_vector(const Context& ctx, const PolyVector& g, std::size_t T) {
    const std::int64_t e_lo = ctx.lowest_row();
    const std::int64_t e_hi = static_cast<std::int64_t>(T) - ctx.n;
    ScalarVector b;
    for (std::int64_t e = e_lo; e <= e_hi; ++e)
        for (std::size_t c = 0; c < ctx.N; ++c) b.push_back(g[c].coeff(e));
    return b;
}

std::vector<ScalarVector> truncated(const std::vector<ScalarVector>& vs, std::size_t len) {
    std::vector<ScalarVector> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len));
    return out;
}

struct Projection {
    std::vector<ScalarVector> echelon;
    std::size_t lookahead = 0;
    bool exact = true;
};

std::vector<ScalarVector> projection_at(const Context& ctx, std::size_t T, std::size_t T_ahead) {
    const std::size_t len = ctx.N * (T + 1);
    return echelon_basis(truncated(nullspace(kernel_system(ctx, T_ahead)), len), len);
}

Projection projected_kernel(const Context& ctx, std::size_t T) {
    Projection p;
    if (!ctx.l.is_zero()) {
        // Past the last nonnegative integer root of l every step is uniquely solvable.
        const auto r = max_nonnegative_integer_root(ctx.l);
        p.lookahead = std::max<std::size_t>(T, r ? static_cast<std::size_t>(*r) : 0);
        p.echelon = projection_at(ctx, T, p.lookahead);
        return p;
    }
    p.exact = false;
    const std::size_t window = ctx.N * (ctx.m + static_cast<std::size_t>(ctx.n - ctx.n_prime) + 1) + 1;
    const std::size_t cap = T + 6 * window;
    std::size_t ahead = T;
    auto current = projection_at(ctx, T, ahead);
    std::size_t stable = 0;
    while (stable < window && ahead < cap) {
        ++ahead;
        auto next = projection_at(ctx, T, ahead);
        stable = next.size() == current.size() ? stable + 1 : 0;
        current = std::move(next);
    }
    p.lookahead = ahead;
    p.echelon = std::move(current);
    return p;
}

SeriesJet jet_from_vector(const ScalarVector& v, std::size_t N) {
    const std::size_t lead = leading_index(v);
    SeriesJet jet;
    const std::size_t j0 = lead < v.size() ? lead / N : 0;
    jet.exponent = Scalar(static_cast<long>(j0));
    for (std::size_t j = j0; j * N < v.size(); ++j)
        jet.coeffs.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(j * N),
                                v.begin() + static_cast<std::ptrdiff_t>((j + 1) * N));
    return jet;
}

} // namespace

PolyVector apply_with_exponent(const DiffOperator& op, const Scalar& k0, const PolyVector& u) {
    const std::size_t N = op.dimension();
    const std::size_t m = op.order();
    if (u.size() != N) throw std::invalid_argument("vector length does not match operator dimension");
    std::vector<PolyVector> derivs{u};
    for (std::size_t r = 1; r <= m; ++r) {
        PolyVector d = derivs.back();
        for (auto& p : d) p = p.derivative();
        derivs.push_back(std::move(d));
    }
    PolyVector out(N);
    for (std::size_t i = 0; i <= m; ++i) {
        PolyVector inner(N);
        for (std::size_t r = 0; r <= i; ++r) {
            const Scalar c = binomial(i, r) * Poly::falling_factorial(i - r).evaluate(k0);
            if (c.is_zero()) continue;
            for (std::size_t q = 0; q < N; ++q) inner[q] += (derivs[r][q] * c).mul_x_pow(m - i + r);
        }
        const PolyVector term = op.coefficient(i) * inner;
        for (std::size_t q = 0; q < N; ++q) out[q] += term[q];
    }
    return out;
}

KernelJets formal_kernel_jets(const DiffOperator& op, std::size_t T) {
    const Context ctx(op);
    const Projection p = projected_kernel(ctx, T);
    KernelJets out;
    out.lookahead = p.lookahead;
    out.exact = p.exact;
    for (const auto& v : p.echelon) out.basis.push_back(jet_from_vector(v, ctx.N));
    return out;
}

std::optional<SeriesSolution> solve_series(const DiffOperator& op, const PolyVector& g, std::size_t T) {
    const Context ctx(op);
    if (g.size() != ctx.N) throw std::invalid_argument("right-hand side length does not match operator dimension");
    const auto base = solve_linear(kernel_system(ctx, T), rhs_vector(ctx, g, T));
    if (!base) return std::nullopt;
    const Projection p = projected_kernel(ctx, T);
    SeriesSolution out;
    out.lookahead = p.lookahead;
    ScalarVector particular = base->particular;
    if (p.lookahead > T) {
        const auto ahead = solve_linear(kernel_system(ctx, p.lookahead), rhs_vector(ctx, g, p.lookahead));
        if (ahead)
            particular.assign(ahead->particular.begin(),
                              ahead->particular.begin() + static_cast<std::ptrdiff_t>(ctx.N * (T + 1)));
        else
            out.extends = false;
    }
    particular = reduce_modulo(std::move(particular), p.echelon);
    out.jet.exponent = Scalar(0);
    for (std::size_t j = 0; j <= T; ++j)
        out.jet.coeffs.emplace_back(particular.begin() + static_cast<std::ptrdiff_t>(j * ctx.N),
                                    particular.begin() + static_cast<std::ptrdiff_t>((j + 1) * ctx.N));
    return out;
}

FrobeniusResult frobenius_jets(const DiffOperator& op, const Scalar& k0, std::size_t T) {
    const Context ctx(op);
    if (ctx.l.is_zero()) throw HypothesisViolation("frobenius_jets requires l(k) not identically zero");
    FrobeniusResult result;
    result.exponent = k0;
    result.truncation = T;
    const std::size_t N = ctx.N;
    const std::vector<ScalarVector> initial = nullspace(ctx.fam.evaluate(-ctx.n, k0));

    for (const auto& v : initial) {
        FrobeniusBranch branch;
        branch.initial = v;
        std::optional<LinearSolution> last;
        bool aborted = false;
        for (std::size_t t = 1; t <= T; ++t) {
            // Rows e = -n + 1 .. -n + t; unknowns u_1..u_t; u_0 = v moved to the right.
            const std::int64_t e_lo = -ctx.n + 1;
            const std::int64_t e_hi = -ctx.n + static_cast<std::int64_t>(t);
            const ScalarMatrix a = recurrence_matrix(ctx, k0, e_lo, e_hi, 1, t);
            const ScalarMatrix a0 = recurrence_matrix(ctx, k0, e_lo, e_hi, 0, 0);
            ScalarVector b = a0.apply(v);
            for (auto& s : b) s = -s;
            last = solve_linear(a, b);
            const Scalar kt = k0 + Scalar(static_cast<long>(t));
            const bool resonant = ctx.l.evaluate(kt).is_zero();
            if (resonant || !last) {
                const std::size_t dim = nullspace(ctx.fam.evaluate(-ctx.n, kt)).size();
                branch.trace.steps.push_back({t, last.has_value(), dim});
            }
            if (!last) {
                aborted = true;
                break;
            }
        }
        if (!aborted) {
            SeriesJet jet;
            jet.exponent = k0;
            jet.coeffs.push_back(v);
            for (std::size_t t = 1; t <= T; ++t)
                jet.coeffs.emplace_back(last->particular.begin() + static_cast<std::ptrdiff_t>((t - 1) * N),
                                        last->particular.begin() + static_cast<std::ptrdiff_t>(t * N));
            branch.jet = std::move(jet);
        }
        result.branches.push_back(std::move(branch));
    }
    return result;
}

GrowthReport divergence_probe(const SeriesJet& jet) {
    GrowthReport r;
    const std::size_t T = jet.truncation();
    if (jet.coeffs.size() < 9) {
        r.note = "truncation below 8: probe not applicable";
        return r;
    }
    r.applicable = true;
    auto size_of = [](const ScalarVector& v) {
        mpq_class best = 0;
        for (const auto& s : v) best = std::max(best, s.norm());
        return best;
    };
    constexpr std::size_t window = 6;
    struct Pair {
        std::size_t j;
        mpq_class q;
    };
    std::vector<Pair> pairs;
    for (std::size_t j = T - window; j < T; ++j) {
        const mpq_class a = size_of(jet.coeffs[j]);
        const mpq_class b = size_of(jet.coeffs[j + 1]);
        if (sgn(a) == 0 || sgn(b) == 0) continue;
        const mpq_class q = b / (a * (j + 1) * (j + 1));
        pairs.push_back({j, q});
        r.max_ratio = std::max(r.max_ratio, std::sqrt(q.get_d()));
    }
    r.window_pairs = pairs.size();
    if (pairs.size() < 2) {
        r.note = "fewer than two nonzero coefficient pairs in the window";
        return r;
    }
    const mpq_class first = pairs.front().q * (pairs.front().j + 1);
    const mpq_class last = pairs.back().q * (pairs.back().j + 1);
    r.factorial_growth = last >= first;
    r.note = r.factorial_growth ? "ratio |u_{j+1}|/((j+1)|u_j|) does not decay" : "ratio decays";
    return r;
}

} // namespace indicia
