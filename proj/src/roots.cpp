#include "indicia/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace indicia {

std::size_t Factorization::root_count() const {
    std::size_t n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

namespace {

// ---------------------------------------------------------------------------
// integer factorization

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            mpz_class diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(mpz_class n, std::vector<mpz_class>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        primes.push_back(n);
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gaussian integers

struct GaussInt {
    mpz_class re, im;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpz_class norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

// a / b if exact.
std::optional<GaussInt> exact_quotient(const GaussInt& a, const GaussInt& b) {
    const mpz_class n = norm(b);
    const mpz_class re = a.re * b.re + a.im * b.im;
    const mpz_class im = a.im * b.re - a.re * b.im;
    if (re % n != 0 || im % n != 0) return std::nullopt;
    return GaussInt{re / n, im / n};
}

// s^2 + t^2 = p for a prime p = 1 mod 4.
GaussInt split_prime(const mpz_class& p) {
    // sqrt(-1) mod p from a quadratic non-residue, then Euclid (Cornacchia).
    mpz_class c = 2;
    while (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) ++c;
    mpz_class r;
    const mpz_class exp = (p - 1) / 4;
    mpz_powm(r.get_mpz_t(), c.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    mpz_class a = p, b = r;
    mpz_class limit;
    mpz_sqrt(limit.get_mpz_t(), p.get_mpz_t());
    while (b > limit) {
        mpz_class t = a % b;
        a = b;
        b = t;
    }
    mpz_class s2 = p - b * b;
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), s2.get_mpz_t());
    return {b, t};
}

// All Gaussian divisors of a (a != 0) up to units.
std::vector<GaussInt> gaussian_divisors(const GaussInt& a) {
    std::vector<std::pair<GaussInt, unsigned>> prime_powers;
    GaussInt rest = a;
    for (const auto& [p, e] : factor_integer(norm(a))) {
        std::vector<GaussInt> candidates;
        if (p == 2) candidates.push_back({1, 1});
        else if (p % 4 == 3) candidates.push_back({p, 0});
        else {
            GaussInt pi = split_prime(p);
            candidates.push_back(pi);
            candidates.push_back({pi.re, -pi.im});
        }
        for (const auto& pi : candidates) {
            unsigned k = 0;
            while (auto q = exact_quotient(rest, pi)) {
                rest = *q;
                ++k;
            }
            if (k > 0) prime_powers.emplace_back(pi, k);
        }
        (void)e;
    }
    std::vector<GaussInt> out{{1, 0}};
    for (const auto& [pi, k] : prime_powers) {
        const std::size_t base = out.size();
        GaussInt pk{1, 0};
        for (unsigned j = 1; j <= k; ++j) {
            pk = mul(pk, pi);
            for (std::size_t i = 0; i < base; ++i) out.push_back(mul(out[i], pk));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

mpz_class lcm_of_denominators(const Poly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    return l;
}

// Strip the factor x^v and record the root 0.
Poly strip_zero_root(const Poly& p, std::vector<Root>& roots) {
    const auto v = p.valuation().value();
    if (v == 0) return p;
    roots.push_back({Scalar(0), static_cast<std::size_t>(v)});
    std::vector<Scalar> c(p.coeffs().begin() + v, p.coeffs().end());
    return Poly(std::move(c));
}

// Divide out every candidate that is a root, recording multiplicities.
Poly deflate(Poly p, const std::vector<Scalar>& candidates, std::vector<Root>& roots) {
    for (const auto& r : candidates) {
        if (p.is_constant()) break;
        if (!p.evaluate(r).is_zero()) continue;
        const Poly lin({-r, Scalar(1)});
        std::size_t mult = 0;
        while (!p.is_constant()) {
            auto [q, rem] = divmod(p, lin);
            if (!rem.is_zero()) break;
            p = std::move(q);
            ++mult;
        }
        roots.push_back({r, mult});
    }
    return p;
}

// Rational roots of a polynomial with rational coefficients.
Poly rational_roots_of_real(Poly p, std::vector<Root>& roots) {
    if (p.is_constant()) return p;
    p = strip_zero_root(p, roots);
    if (p.is_constant()) return p;
    const Poly scaled = p * Scalar(mpq_class(lcm_of_denominators(p)));
    const mpz_class a0 = abs(scaled.coeffs().front().re().get_num());
    const mpz_class ad = abs(scaled.leading().re().get_num());
    const auto num_divs = divisors(a0);
    const auto den_divs = divisors(ad);
    std::set<mpq_class> seen;
    std::vector<Scalar> candidates;
    for (const auto& u : num_divs)
        for (const auto& w : den_divs)
            for (int sign : {1, -1}) {
                mpq_class q(sign * u, w);
                q.canonicalize();
                if (seen.insert(q).second) candidates.emplace_back(q);
            }
    std::sort(candidates.begin(), candidates.end());
    return deflate(std::move(p), candidates, roots);
}

Poly gaussian_roots(Poly p, std::vector<Root>& roots) {
    if (p.is_constant()) return p;
    const Poly scaled = p * Scalar(mpq_class(lcm_of_denominators(p)));
    const GaussInt a0{scaled.coeffs().front().re().get_num(), scaled.coeffs().front().im().get_num()};
    const GaussInt ad{scaled.leading().re().get_num(), scaled.leading().im().get_num()};
    const auto num_divs = gaussian_divisors(a0);
    const auto den_divs = gaussian_divisors(ad);
    const GaussInt units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<Scalar> candidates;
    for (const auto& u0 : num_divs)
        for (const auto& unit : units) {
            const GaussInt u = mul(u0, unit);
            const Scalar su(mpq_class(u.re), mpq_class(u.im));
            for (const auto& w : den_divs) {
                Scalar cand = su / Scalar(mpq_class(w.re), mpq_class(w.im));
                if (cand.is_real()) continue; // rational roots were handled already
                candidates.push_back(std::move(cand));
            }
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return deflate(std::move(p), candidates, roots);
}

void sort_roots(std::vector<Root>& roots) {
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n_in) {
    if (n_in == 0) throw std::domain_error("factor_integer(0)");
    mpz_class n = abs(n_in);
    std::vector<mpz_class> primes;
    for (unsigned long d = 2; d < 1000 && n > 1; ++d) {
        while (n % d == 0) {
            primes.emplace_back(d);
            n /= d;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<mpz_class, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
    }
    return out;
}

std::vector<Root> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
    Poly real = p.real_part();
    Poly imag = p.imag_part();
    Poly g = imag.is_zero() ? real : gcd(real, imag);
    std::vector<Root> roots;
    // Multiplicities must be measured on p itself, not on the gcd.
    std::vector<Root> candidates;
    rational_roots_of_real(g, candidates);
    for (const auto& r : candidates) roots.push_back({r.value, root_multiplicity(p, r.value)});
    sort_roots(roots);
    return roots;
}

std::vector<Root> integer_roots(const Poly& p) {
    std::vector<Root> out;
    for (auto& r : rational_roots(p))
        if (r.value.is_integer()) out.push_back(r);
    return out;
}

std::optional<std::int64_t> max_nonnegative_integer_root(const Poly& p) {
    std::optional<std::int64_t> best;
    for (const auto& r : integer_roots(p)) {
        const auto v = r.value.to_int64();
        if (v >= 0 && (!best || v > *best)) best = v;
    }
    return best;
}

std::optional<std::int64_t> min_integer_root(const Poly& p) {
    auto roots = integer_roots(p);
    if (roots.empty()) return std::nullopt;
    return roots.front().value.to_int64();
}

Factorization linear_factors(const Poly& p, GroundField field) {
    if (p.is_zero()) throw std::domain_error("linear_factors of zero polynomial");
    Factorization f;
    f.leading = p.leading();
    std::vector<Root> roots = rational_roots(p);
    Poly rest = p.monic();
    for (const auto& r : roots)
        rest = exact_div(rest, Poly({-r.value, Scalar(1)}).pow(r.multiplicity));
    if (field == GroundField::GaussianRational) rest = gaussian_roots(std::move(rest), roots);
    sort_roots(roots);
    f.roots = std::move(roots);
    f.unresolved = rest.monic();
    if (f.unresolved.is_zero()) f.unresolved = Poly(1);
    return f;
}

} // namespace indicia
