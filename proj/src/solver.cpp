#include "indicia/solver.hpp"

#include <algorithm>

#include "indicia/errors.hpp"

namespace indicia {

RationalVector::RationalVector(PolyVector numerators, Poly denominator)
    : numerators_(std::move(numerators)), denominator_(std::move(denominator)) {
    if (denominator_.is_zero()) throw std::domain_error("zero denominator");
    if (is_zero()) {
        denominator_ = Poly(1);
        return;
    }
    Poly g = denominator_;
    for (const auto& p : numerators_) g = gcd(g, p);
    denominator_ = exact_div(denominator_, g);
    for (auto& p : numerators_) p = exact_div(p, g);
    const Scalar scale = Scalar(1) / denominator_.leading();
    denominator_ *= scale;
    for (auto& p : numerators_) p *= scale;
}

RationalVector RationalVector::from_functions(const std::vector<RationalFunction>& fs) {
    Poly den(1);
    for (const auto& f : fs) den = exact_div(den * f.denominator(), gcd(den, f.denominator()));
    PolyVector nums;
    for (const auto& f : fs) nums.push_back(f.numerator() * exact_div(den, f.denominator()));
    return RationalVector(std::move(nums), std::move(den));
}

bool RationalVector::is_zero() const {
    return std::all_of(numerators_.begin(), numerators_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::vector<RationalFunction> RationalVector::functions() const {
    std::vector<RationalFunction> out;
    for (const auto& p : numerators_) out.emplace_back(p, denominator_);
    return out;
}

ExtendedInt RationalVector::pole_order(const Scalar& alpha) const {
    ExtendedInt best = ExtendedInt::minus_infinity();
    for (const auto& f : functions()) best = max(best, f.pole_order(alpha));
    return best;
}

DegreeBound degree_bound(const DiffOperator& op, ExtendedInt g_degree) {
    const Poly d = degree_polynomial(op);
    if (d.is_zero()) throw HypothesisViolation("degree bound requires d(k) not identically zero");
    DegreeBound b;
    if (g_degree.is_finite()) b.rhs_driven = g_degree.value() + op.structure().n_prime;
    b.indicial = max_nonnegative_integer_root(d);
    if (b.rhs_driven) b.bound = b.rhs_driven;
    if (b.indicial) b.bound = b.bound ? std::max(*b.bound, *b.indicial) : *b.indicial;
    return b;
}

namespace {

ExtendedInt vector_degree(const PolyVector& v) {
    ExtendedInt d = ExtendedInt::minus_infinity();
    for (const auto& p : v) d = max(d, p.degree());
    return d;
}

bool is_zero_vector(const PolyVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyVector unflatten(const ScalarVector& x, std::size_t N, std::size_t degree) {
    PolyVector out(N);
    for (std::size_t c = 0; c < N; ++c) {
        std::vector<Scalar> coeffs(degree + 1);
        for (std::size_t j = 0; j <= degree; ++j) coeffs[j] = x[j * N + c];
        out[c] = Poly(std::move(coeffs));
    }
    return out;
}

Scalar binomial(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b));
}

} // namespace

PolynomialSolution solve_polynomial(const DiffOperator& op, const PolyVector& g) {
    const std::size_t N = op.dimension();
    if (g.size() != N) throw std::invalid_argument("right-hand side length does not match operator dimension");
    PolynomialSolution sol;
    sol.bound = degree_bound(op, vector_degree(g));
    if (!sol.bound.bound || *sol.bound.bound < 0) {
        if (is_zero_vector(g)) sol.particular = PolyVector(N);
        return sol;
    }
    const auto B = static_cast<std::size_t>(*sol.bound.bound);
    const ExtendedInt gdeg = vector_degree(g);
    std::int64_t target = *sol.bound.bound - op.structure().n_prime;
    if (gdeg.is_finite()) target = std::max(target, gdeg.value());
    const auto rows_deg = static_cast<std::size_t>(std::max<std::int64_t>(target, 0));

    ScalarMatrix a(N * (rows_deg + 1), N * (B + 1));
    for (std::size_t j = 0; j <= B; ++j)
        for (std::size_t c = 0; c < N; ++c) {
            PolyVector u(N);
            u[c] = Poly::monomial(Scalar(1), j);
            const PolyVector image = op.apply(u);
            for (std::size_t r = 0; r < N; ++r)
                for (std::size_t e = 0; e < image[r].size(); ++e) a(e * N + r, j * N + c) = image[r].coeffs()[e];
        }
    ScalarVector b(N * (rows_deg + 1));
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t e = 0; e < g[r].size(); ++e) b[e * N + r] = g[r].coeffs()[e];

    const auto lin = solve_linear(a, b);
    for (const auto& k : nullspace(a)) sol.kernel.push_back(unflatten(k, N, B));
    if (lin) sol.particular = unflatten(lin->particular, N, B);

    if (sol.particular && op.apply(*sol.particular) != g) throw std::logic_error("polynomial solution failed plug-back");
    for (const auto& k : sol.kernel)
        if (!is_zero_vector(op.apply(k))) throw std::logic_error("polynomial kernel element failed plug-back");
    return sol;
}

RationalSolution solve_rational(const DiffOperator& op, const RationalVector& g, GroundField field) {
    const std::size_t N = op.dimension();
    const std::size_t m = op.order();
    if (g.size() != N) throw std::invalid_argument("right-hand side length does not match operator dimension");
    if (degree_polynomial(op).is_zero())
        throw HypothesisViolation("rational solver requires d(k) not identically zero");

    const Poly singular = op.leading_determinant() * g.denominator();
    const Factorization f = linear_factors(singular, field);
    if (!f.fully_resolved())
        throw UnsupportedFactorization("factor " + f.unresolved.to_string() + " of det A_m * den(g) has no roots in " +
                                       (field == GroundField::Rational ? "Q" : "Q(i)"));

    RationalSolution sol;
    Poly q(1);
    for (const auto& root : f.roots) {
        PoleBound pb;
        pb.point = root.value;
        const DiffOperator local = op.shifted(root.value);
        pb.local_n = local.structure().n;
        pb.local_indicial = indicial_polynomial(local);
        if (pb.local_indicial.is_zero())
            throw HypothesisViolation("local indicial polynomial vanishes identically at x = " + root.value.to_string());
        if (const auto r = min_integer_root(pb.local_indicial)) pb.indicial_source = -*r;
        const ExtendedInt gp = g.pole_order(root.value);
        if (gp.is_finite()) pb.rhs_source = gp.value() - pb.local_n;
        pb.order = std::max<std::int64_t>({0, pb.indicial_source.value_or(0), pb.rhs_source.value_or(0)});
        const Poly lin = Poly({-root.value, Scalar(1)});
        q *= lin.pow(static_cast<std::size_t>(pb.order));
        sol.poles.push_back(std::move(pb));
    }
    sol.multiplier = q;

    // (1/q)^{(t)} = h_t / q^{t+1}
    std::vector<Poly> h{Poly(1)};
    const Poly dq = q.derivative();
    for (std::size_t t = 0; t < m; ++t) h.push_back(h[t].derivative() * q - Scalar(static_cast<long>(t + 1)) * dq * h[t]);

    // q^{m+1} den(g) P(v / q) = sum_r B_r v^{(r)}
    std::vector<PolyMatrix> conj;
    for (std::size_t r = 0; r <= m; ++r) {
        PolyMatrix br(N, N);
        for (std::size_t i = r; i <= m; ++i) {
            const Poly factor = binomial(i, r) * q.pow(m - i + r) * h[i - r] * g.denominator();
            br += factor * op.coefficient(i);
        }
        conj.push_back(std::move(br));
    }
    const DiffOperator conjugated(std::move(conj));
    PolyVector rhs;
    const Poly qm = q.pow(m + 1);
    for (const auto& p : g.numerators()) rhs.push_back(qm * p);

    const PolynomialSolution ps = solve_polynomial(conjugated, rhs);
    for (const auto& v : ps.kernel) sol.kernel.emplace_back(v, q);
    if (ps.particular) sol.particular = RationalVector(*ps.particular, q);

    const auto target = g.functions();
    if (sol.particular && op.apply(sol.particular->functions()) != target)
        throw std::logic_error("rational solution failed plug-back");
    for (const auto& k : sol.kernel)
        for (const auto& f0 : op.apply(k.functions()))
            if (!f0.is_zero()) throw std::logic_error("rational kernel element failed plug-back");
    return sol;
}

} // namespace indicia
