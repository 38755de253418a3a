#include "indicia/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "indicia/analysis.hpp"
#include "indicia/errors.hpp"
#include "indicia/io.hpp"
#include "indicia/oracle.hpp"
#include "indicia/riccati.hpp"
#include "indicia/series.hpp"
#include "indicia/solver.hpp"

namespace indicia::cli {

namespace {

Json ext_json(const ExtendedInt& v) {
    if (v.is_finite()) return v.value();
    return v.to_string();
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

Json poly_matrix_json(const PolyMatrix& m, std::string_view var = "x") {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string(var));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json rational_matrix_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json poly_vector_json(const PolyVector& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
}

Json scalar_vector_json(const ScalarVector& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s.to_string());
    return a;
}

Json rational_vector_json(const RationalVector& v) {
    Json j;
    j["numerators"] = poly_vector_json(v.numerators());
    j["denominator"] = v.denominator().to_string();
    return j;
}

Json roots_json(const std::vector<Root>& roots) {
    Json a = Json::array();
    for (const auto& r : roots) a.push_back(Json{{"value", r.value.to_string()}, {"multiplicity", r.multiplicity}});
    return a;
}

Json classification_json(const ClassificationReport& c) {
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["citation"] = c.citation;
    j["note"] = c.note;
    j["leading_det_vanishes"] = c.leading_det_vanishes;
    j["m_in_J"] = c.m_in_J;
    j["indicial_vanishes"] = c.indicial_vanishes;
    j["det_valuation"] = ext_json(c.det_valuation);
    j["leading_valuation"] = ext_json(c.leading_valuation);
    return j;
}

Json trace_json(const ResonanceTrace& t) {
    Json a = Json::array();
    for (const auto& s : t.steps)
        a.push_back(Json{{"offset", s.offset}, {"solvable", s.solvable}, {"kernel_dimension", s.kernel_dimension}});
    return a;
}

Json jet_json(const SeriesJet& jet, const ResonanceTrace& trace = {}) {
    Json j;
    j["exponent"] = jet.exponent.to_string();
    Json coeffs = Json::array();
    for (const auto& c : jet.coeffs) coeffs.push_back(scalar_vector_json(c));
    j["coefficients"] = std::move(coeffs);
    j["resonances"] = trace_json(trace);
    return j;
}

Json growth_json(const GrowthReport& g) {
    Json j;
    j["applicable"] = g.applicable;
    j["factorial_growth"] = g.factorial_growth;
    j["max_ratio"] = g.max_ratio;
    j["window_pairs"] = g.window_pairs;
    j["note"] = g.note;
    return j;
}

Json frobenius_json(const FrobeniusResult& f) {
    Json j;
    j["exponent"] = f.exponent.to_string();
    j["truncation"] = f.truncation;
    Json branches = Json::array();
    for (const auto& b : f.branches) {
        Json bj;
        bj["initial"] = scalar_vector_json(b.initial);
        bj["completed"] = b.trace.completed();
        bj["resonances"] = trace_json(b.trace);
        bj["jet"] = b.jet ? jet_json(*b.jet, b.trace) : Json(nullptr);
        branches.push_back(std::move(bj));
    }
    j["branches"] = std::move(branches);
    return j;
}

Json point_json(const PointCertificate& p) {
    Json j;
    j["alpha"] = p.alpha.to_string();
    j["classification"] = classification_json(p.classification);
    j["local_indicial"] = p.local_indicial.to_string("k");
    j["roots"] = roots_json(p.roots);
    j["unresolved"] = p.unresolved.to_string("k");
    Json traces = Json::array();
    for (const auto& t : p.traces) {
        Json tj;
        tj["exponent"] = t.exponent.to_string();
        Json branches = Json::array();
        for (const auto& b : t.branches)
            branches.push_back(Json{{"initial", scalar_vector_json(b.initial)},
                                    {"completed", b.trace.completed()},
                                    {"resonances", trace_json(b.trace)}});
        tj["branches"] = std::move(branches);
        traces.push_back(std::move(tj));
    }
    j["trace"] = std::move(traces);
    j["verdict"] = to_string(p.verdict);
    j["reason"] = p.reason;
    return j;
}

Json lift_json(const LiftResult& l) {
    return Json{{"W", rational_matrix_json(l.W)}, {"Y", rational_matrix_json(l.Y)}, {"verified", l.verified}};
}

std::vector<std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) return {std::stoll(text)};
        const std::int64_t a = std::stoll(text.substr(0, dots));
        const std::int64_t b = std::stoll(text.substr(dots + 2));
        if (b < a || b - a > 10000) throw InvalidOperator("empty or oversized range " + text);
        std::vector<std::int64_t> out;
        for (std::int64_t v = a; v <= b; ++v) out.push_back(v);
        return out;
    } catch (const std::logic_error&) {
        throw ParseError("expected an integer or a range a..b, got \"" + text + "\"", 1, 1);
    }
}

/// Indented rendering of a report for humans; objects become "key: value"
/// lines and scalar arrays stay on one line.
void render_text(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto primitive = [](const Json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    auto flat = [](const Json& v) {
        return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    };
    auto inline_array = [&](const Json& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + primitive(v[i]);
        return s + "]";
    };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_primitive()) out << pad << key << ": " << primitive(value) << "\n";
            else if (flat(value)) out << pad << key << ": " << inline_array(value) << "\n";
            else if (value.empty()) out << pad << key << ": " << (value.is_array() ? "[]" : "{}") << "\n";
            else {
                out << pad << key << ":\n";
                render_text(value, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_primitive()) out << pad << "- " << primitive(value) << "\n";
            else if (flat(value)) out << pad << "- " << inline_array(value) << "\n";
            else {
                out << pad << "-\n";
                render_text(value, out, indent + 2);
            }
        }
    } else {
        out << pad << primitive(j) << "\n";
    }
}

struct Context {
    ExpressionOptions options;
    std::string input_text;
    Json auxiliary = Json::object();
    Json citations = Json::array();

    std::string read_aux(const std::string& role, const std::string& path) {
        std::string text = read_file(path);
        auxiliary[role] = digest(text);
        return text;
    }
    void cite(const std::string& c) {
        if (!c.empty() && std::find(citations.begin(), citations.end(), c) == citations.end()) citations.push_back(c);
    }
};

Json analyze(Context& ctx) {
    const DiffOperator op = parse_operator(ctx.input_text, ctx.options);
    const StructureData& s = op.structure();
    const IndexReport idx = indices(op);
    const IndicialFamily fam = indicial_family(op);
    const RationalityCondition cond = check_rationality_condition(op);

    Json r;
    r["N"] = op.dimension();
    r["order"] = op.order();
    Json vals = Json::array(), degs = Json::array();
    for (const auto& v : s.valuations) vals.push_back(ext_json(v));
    for (const auto& d : s.degrees) degs.push_back(ext_json(d));
    r["valuations"] = std::move(vals);
    r["degrees"] = std::move(degs);
    r["n"] = s.n;
    r["n_prime"] = s.n_prime;
    r["J"] = s.J;
    r["J_prime"] = s.J_prime;
    r["leading_determinant"] = op.leading_determinant().to_string();
    Json family = Json::array();
    for (std::int64_t k = fam.s_min(); k <= fam.s_max(); ++k)
        family.push_back(Json{{"s", k}, {"matrix", poly_matrix_json(fam.at(k), "k")}});
    r["indicial_family"] = std::move(family);
    r["l"] = idx.l_poly.to_string("k");
    r["d"] = idx.d_poly.to_string("k");
    r["l_vanishes"] = idx.l_poly.is_zero();
    r["d_vanishes"] = idx.d_poly.is_zero();

    Json ij;
    ij["chi_formal"] = optional_json(idx.chi_formal);
    ij["chi_formal_reason"] = idx.chi_formal_reason;
    ij["chi_convergent"] = idx.chi_convergent;
    ij["chi_polynomial"] = optional_json(idx.chi_polynomial);
    ij["chi_polynomial_reason"] = idx.chi_polynomial_reason;
    r["indices"] = std::move(ij);
    r["classification"] = classification_json(idx.classification);
    ctx.cite(idx.classification.citation);

    r["rationality_condition"] =
        Json{{"verdict", to_string(cond.verdict)}, {"lhs", cond.lhs}, {"rhs", cond.rhs}, {"reason", cond.reason}};
    ctx.cite(cond.reason);

    Json points = Json::array();
    std::string unresolved = "1";
    if (!op.leading_determinant().is_constant()) {
        const Factorization f = linear_factors(op.leading_determinant(), ctx.options.field);
        unresolved = f.unresolved.to_string();
        for (const auto& root : f.roots) {
            const ClassificationReport c = classify_at(op, root.value);
            ctx.cite(c.citation);
            points.push_back(Json{{"alpha", root.value.to_string()}, {"classification", classification_json(c)}});
        }
    }
    r["singular_points"] = std::move(points);
    r["unresolved_singular_factor"] = unresolved;
    return r;
}

Json classify(Context& ctx, const std::string& point) {
    const DiffOperator op = parse_operator(ctx.input_text, ctx.options);
    const Scalar alpha = parse_scalar(point, ctx.options);
    const ClassificationReport c = classify_at(op, alpha);
    ctx.cite(c.citation);
    return Json{{"point", alpha.to_string()}, {"classification", classification_json(c)}};
}

PolyVector polynomial_rhs(const RationalVector& g, std::size_t N, const std::string& mode) {
    if (g.size() != N) throw InvalidOperator("right-hand side has " + std::to_string(g.size()) + " components, expected " + std::to_string(N));
    if (!g.denominator().is_constant()) throw InvalidOperator(mode + " needs a polynomial right-hand side");
    const Scalar inv = Scalar(1) / g.denominator().leading();
    PolyVector out;
    for (const auto& p : g.numerators()) out.push_back(p * inv);
    return out;
}

struct SeriesOptions {
    std::string point = "0";
    std::string exponent;
    std::optional<std::size_t> terms;
    std::string rhs;
};

Json series(Context& ctx, const SeriesOptions& so) {
    DiffOperator op = parse_operator(ctx.input_text, ctx.options);
    const Scalar alpha = parse_scalar(so.point, ctx.options);
    const std::size_t T = so.terms.value_or(2 * (op.dimension() * op.order() + static_cast<std::size_t>(op.max_coefficient_degree())));
    if (!alpha.is_zero()) op = op.shifted(alpha);

    Json r;
    r["point"] = alpha.to_string();
    r["truncation"] = T;
    if (!so.rhs.empty()) {
        const RationalVector g = parse_rhs(ctx.read_aux("rhs", so.rhs), ctx.options);
        PolyVector gv = polynomial_rhs(g, op.dimension(), "series");
        for (auto& p : gv) p = p.shifted(alpha);
        r["mode"] = "rhs";
        const auto sol = solve_series(op, gv, T);
        r["solvable"] = sol.has_value();
        if (sol) {
            r["jet"] = jet_json(sol->jet);
            r["lookahead"] = sol->lookahead;
            r["extends"] = sol->extends;
            const GrowthReport g2 = divergence_probe(sol->jet);
            r["growth"] = growth_json(g2);
            if (g2.applicable) ctx.cite("ratio test: factorial growth when (j+1) q_j does not decrease on the trailing window");
        } else {
            r["jet"] = nullptr;
        }
    } else if (!so.exponent.empty()) {
        const Scalar k0 = parse_scalar(so.exponent, ctx.options);
        r["mode"] = "frobenius";
        const FrobeniusResult f = frobenius_jets(op, k0, T);
        r["frobenius"] = frobenius_json(f);
        Json growth = Json::array();
        for (const auto& b : f.branches) growth.push_back(b.jet ? growth_json(divergence_probe(*b.jet)) : Json(nullptr));
        r["growth"] = std::move(growth);
    } else {
        r["mode"] = "kernel";
        const KernelJets kj = formal_kernel_jets(op, T);
        r["lookahead"] = kj.lookahead;
        r["exact"] = kj.exact;
        Json jets = Json::array(), growth = Json::array();
        for (const auto& jet : kj.basis) {
            jets.push_back(jet_json(jet));
            growth.push_back(growth_json(divergence_probe(jet)));
        }
        r["jets"] = std::move(jets);
        r["growth"] = std::move(growth);
    }
    return r;
}

Json solve(Context& ctx, const std::string& rhs_path, const std::string& mode) {
    const DiffOperator op = parse_operator(ctx.input_text, ctx.options);
    RationalVector g = RationalVector::from_polynomials(PolyVector(op.dimension()));
    if (!rhs_path.empty()) g = parse_rhs(ctx.read_aux("rhs", rhs_path), ctx.options);
    if (g.size() != op.dimension())
        throw InvalidOperator("right-hand side has " + std::to_string(g.size()) + " components, expected " +
                              std::to_string(op.dimension()));

    Json r;
    r["mode"] = mode;
    if (mode == "polynomial") {
        const PolynomialSolution sol = solve_polynomial(op, polynomial_rhs(g, op.dimension(), "polynomial mode"));
        r["degree_bound"] = Json{{"bound", optional_json(sol.bound.bound)},
                                 {"rhs_driven", optional_json(sol.bound.rhs_driven)},
                                 {"indicial", optional_json(sol.bound.indicial)}};
        Json kernel = Json::array();
        for (const auto& k : sol.kernel) kernel.push_back(poly_vector_json(k));
        r["kernel"] = std::move(kernel);
        r["solvable"] = sol.particular.has_value();
        r["particular"] = sol.particular ? poly_vector_json(*sol.particular) : Json(nullptr);
        ctx.cite("degree bound: deg u <= max(deg g + n', largest nonnegative integer root of d)");
    } else {
        const RationalSolution sol = solve_rational(op, g, ctx.options.field);
        Json poles = Json::array();
        for (const auto& p : sol.poles)
            poles.push_back(Json{{"point", p.point.to_string()},
                                 {"order", p.order},
                                 {"local_n", p.local_n},
                                 {"local_indicial", p.local_indicial.to_string("k")},
                                 {"indicial_source", optional_json(p.indicial_source)},
                                 {"rhs_source", optional_json(p.rhs_source)}});
        r["poles"] = std::move(poles);
        r["multiplier"] = sol.multiplier.to_string();
        Json kernel = Json::array();
        for (const auto& k : sol.kernel) kernel.push_back(rational_vector_json(k));
        r["kernel"] = std::move(kernel);
        r["solvable"] = sol.particular.has_value();
        r["particular"] = sol.particular ? rational_vector_json(*sol.particular) : Json(nullptr);
        ctx.cite("pole bound: p = max(0, -(least integer root of l_alpha), polord_alpha(g) - n_alpha)");
    }
    return r;
}

std::string canonical_theorem(const std::string& t) {
    if (t == "6" || t == "convergence") return "convergence";
    if (t == "7" || t == "rational") return "rational";
    if (t == "8" || t == "algebraic") return "algebraic";
    throw InvalidOperator("unknown criterion \"" + t + "\" (expected convergence, rational or algebraic)");
}

Json points_json(Context& ctx, const std::vector<PointCertificate>& points) {
    Json a = Json::array();
    for (const auto& p : points) {
        ctx.cite(p.classification.citation);
        a.push_back(point_json(p));
    }
    return a;
}

Json riccati(Context& ctx, const std::string& theorem, const std::string& lift_path) {
    const RiccatiSystem sys = parse_riccati(ctx.input_text, ctx.options);
    const Linearization lin = linearize(sys, ctx.options.field);
    const std::string which = canonical_theorem(theorem);

    Json r;
    r["theorem"] = which;
    r["verdict"] = nullptr;
    Json z = Json::array();
    for (const auto& a : lin.singular_points) z.push_back(a.to_string());
    r["singular_points"] = std::move(z);
    r["unresolved"] = lin.unresolved.to_string();
    r["c1"] = sys.c1().to_string();
    r["linearized_operator"] = operator_to_json(lin.op);

    Verdict verdict = Verdict::Indeterminate;
    if (which == "convergence") {
        const ConvergenceCheck c = check_convergence(sys, lin);
        verdict = !c.part1 || c.part2 == Verdict::Fails ? Verdict::Fails : c.part2;
        r["part1"] = Json{{"holds", c.part1}, {"lhs", ext_json(c.part1_lhs)}, {"rhs", ext_json(c.part1_rhs)}};
        r["part2"] = to_string(c.part2);
        r["points"] = points_json(ctx, c.points);
        r["note"] = c.note;
        ctx.cite("formal solutions at 0 converge when 2 - v(c1) >= max(1 - nu(A_1), -nu(A_0))");
        ctx.cite("single-valued solutions are meromorphic when every point of Z is regular singular");
    } else if (which == "rational") {
        const RationalityCheck c = check_rational_solutions(sys, lin);
        verdict = c.verdict;
        r["degree_polynomial_nonzero"] = c.degree_polynomial_nonzero;
        r["d"] = c.d_poly.to_string("k");
        r["degree_inequality"] =
            Json{{"holds", c.degree_inequality}, {"lhs", ext_json(c.degree_lhs)}, {"rhs", ext_json(c.degree_rhs)}};
        r["points"] = points_json(ctx, c.points);
        r["note"] = c.note;
        ctx.cite("rational solutions: d != 0, 2 - deg c1 >= min(1 - deg A_1, -deg A_0), simple integer exponents "
                 "with solvable resonances at every point of Z");
        Json lifts = Json::array();
        if (verdict == Verdict::Holds)
            for (const auto& l : rational_lifts(sys, lin, ctx.options.field)) lifts.push_back(lift_json(l));
        r["lifts"] = std::move(lifts);
    } else {
        const AlgebraicityCheck c = check_algebraic_solutions(sys, lin);
        verdict = c.verdict;
        r["points"] = points_json(ctx, c.points);
        r["note"] = c.note;
        ctx.cite("algebraic solutions: regular singular with mN simple rational exponents, no integer differences");
    }
    r["verdict"] = to_string(verdict);

    if (!lift_path.empty()) {
        const RationalMatrix W = parse_rational_matrix(ctx.read_aux("lift", lift_path), ctx.options);
        if (W.rows() != sys.dimension())
            throw InvalidOperator("lift matrix is " + std::to_string(W.rows()) + " x " + std::to_string(W.rows()) +
                                  ", expected N = " + std::to_string(sys.dimension()));
        r["lift"] = lift_json(lift_and_verify(sys, W));
    }
    return r;
}

struct OracleOptions {
    std::string degrees;
    std::string jets;
    std::string witness_k;
};

Json oracle(Context& ctx, const OracleOptions& oo) {
    const DiffOperator op = parse_operator(ctx.input_text, ctx.options);
    Json r;

    std::vector<std::int64_t> degrees;
    if (oo.degrees.empty()) {
        const std::int64_t t = std::max<std::int64_t>(large_degree_threshold(op), 0);
        for (std::int64_t d = t; d < t + 6; ++d) degrees.push_back(d);
    } else {
        degrees = parse_range(oo.degrees);
    }
    const PolynomialIndexExperiment pe = polynomial_index_experiment(op, degrees);
    Json rows = Json::array();
    for (const auto& row : pe.rows)
        rows.push_back(Json{{"degree", row.degree},
                            {"source_dim", row.source_dim},
                            {"target_dim", row.target_dim},
                            {"rank", row.rank},
                            {"dim_ker", row.dim_ker},
                            {"dim_coker", row.dim_coker},
                            {"index", row.index}});
    Json pj;
    pj["expected"] = pe.expected;
    pj["threshold"] = pe.threshold;
    pj["conclusive"] = pe.conclusive;
    pj["stabilized"] = pe.stabilized;
    pj["stabilized_index"] = pe.stabilized ? Json(pe.rows.back().index) : Json(nullptr);
    pj["rows"] = std::move(rows);
    r["polynomial_index"] = std::move(pj);
    ctx.cite("polynomial index N n' for large degree when l != 0 and d != 0");

    if (!oo.jets.empty()) {
        std::vector<std::size_t> Ks;
        for (const auto k : parse_range(oo.jets)) {
            if (k < 1) throw InvalidOperator("jet orders must be positive");
            Ks.push_back(static_cast<std::size_t>(k));
        }
        const FormalKernelExperiment fe = formal_kernel_experiment(op, Ks);
        Json frows = Json::array();
        for (const auto& row : fe.rows)
            frows.push_back(Json{{"K", row.K},
                                 {"raw_kernel_dim", row.raw_kernel_dim},
                                 {"extendable_kernel_dim", row.extendable_kernel_dim},
                                 {"lookahead", row.lookahead},
                                 {"series_engine_dim", row.series_engine_dim}});
        r["formal_kernel"] = Json{{"stabilized", fe.stabilized},
                                  {"stabilized_dim", fe.stabilized ? Json(fe.rows.back().extendable_kernel_dim) : Json(nullptr)},
                                  {"rows", std::move(frows)}};
    }

    if (!oo.witness_k.empty()) {
        std::optional<std::int64_t> k;
        if (oo.witness_k != "auto") k = parse_range(oo.witness_k).front();
        const CokernelWitnesses w = cokernel_witnesses(op, k);
        Json ws = Json::array();
        for (const auto& v : w.witnesses) ws.push_back(poly_vector_json(v));
        r["cokernel_witnesses"] = Json{{"k", w.k},
                                       {"auto_selected", w.auto_selected},
                                       {"expected", w.expected},
                                       {"count", w.witnesses.size()},
                                       {"witnesses", std::move(ws)},
                                       {"source_dim", w.source_dim},
                                       {"target_dim", w.target_dim},
                                       {"image_rank", w.image_rank},
                                       {"combined_rank", w.combined_rank},
                                       {"verified", w.verified}};
        ctx.cite("cokernel of P on M(k) has dimension (n - n') N past every integer root of l and d");
    }
    return r;
}

} // namespace

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Exact analysis of matrix linear differential operators with polynomial coefficients", "indicia");
    app.require_subcommand(1);
    std::string format = "json";
    std::string field = "gaussian";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--field", field, "Ground field for constants and roots")->check(CLI::IsMember({"gaussian", "rational"}));

    std::string input;
    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Input JSON file")->required();
        sub->fallthrough();
        return sub;
    };

    std::string point;
    SeriesOptions so;
    std::size_t terms = 0;
    std::string rhs, mode = "polynomial";
    std::string theorem, lift;
    OracleOptions oo;

    auto* analyze_cmd = with_input(app.add_subcommand("analyze", "Structure data, indices and classification at 0"));
    auto* classify_cmd = with_input(app.add_subcommand("classify", "Classification at a point"));
    classify_cmd->add_option("--point", point, "Point, e.g. 1/2+3i")->required();
    auto* series_cmd = with_input(app.add_subcommand("series", "Formal power-series jets"));
    series_cmd->add_option("--point", so.point, "Expansion point");
    series_cmd->add_option("--exponent", so.exponent, "Frobenius starting exponent");
    auto* terms_opt = series_cmd->add_option("--terms", terms, "Truncation order T");
    series_cmd->add_option("--rhs", so.rhs, "Right-hand side JSON file");
    auto* solve_cmd = with_input(app.add_subcommand("solve", "Polynomial or rational solutions"));
    solve_cmd->add_option("--rhs", rhs, "Right-hand side JSON file (default 0)");
    solve_cmd->add_option("--mode", mode, "Solution space")->check(CLI::IsMember({"polynomial", "rational"}));
    auto* riccati_cmd = with_input(app.add_subcommand("riccati", "Criteria for matrix Riccati systems"));
    riccati_cmd->add_option("--theorem", theorem, "convergence, rational or algebraic")->required();
    riccati_cmd->add_option("--lift", lift, "Matrix W JSON file to lift to Y = -C^{-1} W' W^{-1}");
    auto* oracle_cmd = with_input(app.add_subcommand("oracle", "Finite-dimensional truncation experiments"));
    oracle_cmd->add_option("--degrees", oo.degrees, "Degree range a..b");
    oracle_cmd->add_option("--jets", oo.jets, "Jet order range a..b");
    oracle_cmd->add_option("--witness-k", oo.witness_k, "Valuation k for cokernel witnesses, or auto");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: USAGE: " << e.what() << "\n";
        return exit_input_error;
    }

    Context ctx;
    ctx.options.field = field == "rational" ? GroundField::Rational : GroundField::GaussianRational;
    try {
        ctx.input_text = read_file(input);
        Json results;
        std::string command;
        if (analyze_cmd->parsed()) results = analyze(ctx), command = "analyze";
        else if (classify_cmd->parsed()) results = classify(ctx, point), command = "classify";
        else if (series_cmd->parsed()) {
            if (*terms_opt) so.terms = terms;
            results = series(ctx, so), command = "series";
        } else if (solve_cmd->parsed()) results = solve(ctx, rhs, mode), command = "solve";
        else if (riccati_cmd->parsed()) results = riccati(ctx, theorem, lift), command = "riccati";
        else results = oracle(ctx, oo), command = "oracle";

        Json report;
        report["command"] = args;
        report["subcommand"] = command;
        report["input_digest"] = "fnv1a64:" + digest(ctx.input_text);
        if (!ctx.auxiliary.empty()) {
            Json aux = Json::object();
            for (const auto& [role, d] : ctx.auxiliary.items()) aux[role] = "fnv1a64:" + d.get<std::string>();
            report["auxiliary_digests"] = std::move(aux);
        }
        report["results"] = std::move(results);
        report["citations"] = std::move(ctx.citations);
        if (format == "json") out << report.dump(2) << "\n";
        else render_text(report, out, 0);
        return exit_ok;
    } catch (const ParseError& e) {
        err << "error: PARSE_ERROR: " << e.bare_message() << " at line " << e.line() << ", column " << e.column() << "\n";
        return exit_input_error;
    } catch (const InputFileError& e) {
        err << "error: IO_ERROR: " << e.what() << "\n";
        return exit_input_error;
    } catch (const InvalidOperator& e) {
        err << "error: INVALID_OPERATOR: " << e.what() << "\n";
        return exit_input_error;
    } catch (const HypothesisViolation& e) {
        err << "error: HYPOTHESIS_VIOLATION: " << e.what() << "\n";
        return exit_hypothesis_error;
    } catch (const UnsupportedFactorization& e) {
        err << "error: UNSUPPORTED_FACTORIZATION: " << e.what() << "\n";
        return exit_hypothesis_error;
    } catch (const SingularMatrix& e) {
        err << "error: SINGULAR_MATRIX: " << e.what() << "\n";
        return exit_hypothesis_error;
    }
}

} // namespace indicia::cli
