// Command-line front end: every computation in the library, the verification
// suites, and matrix-cache management.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 invalid input.
// All output is deterministic; JSON is emitted through one renderer so that
// cache hits and misses are byte-identical.
#include <CLI11.hpp>

#include "kappa/kappa.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace kappa;

// ---------------------------------------------------------------------------
// plumbing

MatrixCache resolve_cache(const std::string& flag_dir, bool no_cache) {
    if (no_cache) return MatrixCache();
    if (!flag_dir.empty()) return MatrixCache(flag_dir);
    const char* env = std::getenv("KAPPA_CACHE_DIR");
    if (env != nullptr && *env != '\0') return MatrixCache(env);
    return MatrixCache();
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        size_t pos = 0;
        int v = std::stoi(cur, &pos);
        if (pos != cur.size()) throw std::invalid_argument("bad integer '" + cur + "' in list");
        out.push_back(v);
        cur.clear();
    };
    for (char c : csv) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur += c;
    }
    flush();
    return out;
}

std::string exps_str(const std::vector<int>& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

std::string pad2(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

// ---------------------------------------------------------------------------
// verification suites

struct VerifyCase {
    std::string label;
    bool pass = false;
    std::string detail;  // empty unless failing needs explanation
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    void add(std::string label, bool pass, std::string detail = "") {
        cases.push_back({std::move(label), pass, std::move(detail)});
    }

    int failed() const {
        int f = 0;
        for (const auto& c : cases)
            if (!c.pass) ++f;
        return f;
    }

    int emit() {
        std::sort(cases.begin(), cases.end(),
                  [](const VerifyCase& a, const VerifyCase& b) { return a.label < b.label; });
        ojson j;
        j["suite"] = suite;
        ojson arr = ojson::array();
        for (const auto& c : cases) {
            ojson cj;
            cj["label"] = c.label;
            cj["pass"] = c.pass;
            if (!c.detail.empty()) cj["detail"] = c.detail;
            arr.push_back(cj);
        }
        j["cases"] = arr;
        j["total"] = cases.size();
        j["failed"] = failed();
        std::cout << render_json(j);
        return failed() == 0 ? 0 : 1;
    }
};

void suite_golden6(VerifyReport& rep) {
    const RationalMatrix x = matrix_X(6, 0);
    const RationalMatrix y = matrix_Y0(6);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const std::string where =
                " " + x.row_index()[static_cast<size_t>(i)].str() + " x " +
                x.col_index()[static_cast<size_t>(j)].str();
            Rational gx = Rational::parse(golden::kX6[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            Rational gy = Rational::parse(golden::kY6[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            rep.add("X" + where, x.at(i, j) == gx,
                    x.at(i, j) == gx ? "" : "expected " + gx.str() + ", got " + x.at(i, j).str());
            rep.add("Y" + where, y.at(i, j) == gy,
                    y.at(i, j) == gy ? "" : "expected " + gy.str() + ", got " + y.at(i, j).str());
        }
}

void suite_product(VerifyReport& rep, int max_d) {
    for (int d = 2; d <= max_d; ++d) {
        const RationalMatrix l = matrix_L0(d);

        std::string bad;
        for (int i = 0; i < l.rows() && bad.empty(); ++i)
            for (int j = i + 1; j < l.cols(); ++j)
                if (!l.at(i, j).is_zero()) {
                    bad = "nonzero above diagonal at " + l.row_index()[static_cast<size_t>(i)].str() +
                          " x " + l.col_index()[static_cast<size_t>(j)].str();
                    break;
                }
        rep.add("d=" + pad2(d) + " lower-triangular", bad.empty(), bad);

        bad.clear();
        for (int i = 0; i < l.rows() && bad.empty(); ++i) {
            const Partition& p = l.row_index()[static_cast<size_t>(i)];
            Rational want = L0_diagonal_value(p, d);
            if (l.at(i, i) != want)
                bad = "diagonal at " + p.str() + ": expected " + want.str() + ", got " +
                      l.at(i, i).str();
        }
        rep.add("d=" + pad2(d) + " diagonal", bad.empty(), bad);

        if (d <= 8) {
            const RationalMatrix ls = matrix_L_via_series(d);
            bad.clear();
            for (int i = 0; i < l.rows() && bad.empty(); ++i)
                for (int j = 0; j < l.cols(); ++j)
                    if (ls.at(i, j) != l.at(i, j)) {
                        bad = "series route differs at " +
                              l.row_index()[static_cast<size_t>(i)].str() + " x " +
                              l.col_index()[static_cast<size_t>(j)].str() + ": " +
                              ls.at(i, j).str() + " vs " + l.at(i, j).str();
                        break;
                    }
            rep.add("d=" + pad2(d) + " series-match", bad.empty(), bad);
        }
    }
}

void suite_det(VerifyReport& rep, int max_d) {
    for (int d = 2; d <= max_d; ++d) {
        Rational closed = determinant_formula(d);
        Rational elim = determinant(matrix_X(d, 0));
        rep.add("d=" + pad2(d), closed == elim,
                closed == elim ? "" : "closed form " + closed.str() + " vs elimination " + elim.str());
    }
}

void suite_nonsingular(VerifyReport& rep, int max_d) {
    for (int d = 2; d <= max_d; ++d)
        for (int delta = 0; delta <= d - 2; ++delta) {
            RationalMatrix m = matrix_M(d, delta);
            int r = rank(m);
            rep.add("d=" + pad2(d) + " delta=" + pad2(delta), r == m.rows(),
                    r == m.rows() ? "" : "rank " + std::to_string(r) + " of " + std::to_string(m.rows()));
        }
}

void suite_rank(VerifyReport& rep, int max_zeta) {
    // Corank of the κ-coordinate relation system = basis size.
    for (long long zeta = 3; zeta <= max_zeta; ++zeta)
        for (int d = 2; d <= static_cast<int>(zeta) - 1; ++d) {
            const int delta = static_cast<int>(zeta) - 1 - d;
            if (delta < 0 || delta > d - 2) continue;
            RelationSystem sys = relation_rows_kappa(d, zeta);
            int total = static_cast<int>(enumerate(d).size());
            int expect = static_cast<int>(enumerate_bounded(d, static_cast<int>(zeta) - d).size());
            int r = rank(sys.kappa_rows);
            rep.add("corank z=" + pad2(static_cast<int>(zeta)) + " d=" + pad2(d),
                    total - r == expect,
                    total - r == expect ? ""
                                        : "|P(d)|-rank = " + std::to_string(total - r) +
                                              ", basis size = " + std::to_string(expect));
        }

    // Genus-0 dimension bookkeeping.
    for (long long n = 3; n <= 10; ++n) {
        RingContext ctx(0, n);
        for (int d = 0; d <= static_cast<int>(ctx.zeta()); ++d) {
            int dim = dimension(ctx, d);
            int expect =
                d == 0 ? 1
                       : static_cast<int>(enumerate_bounded(
                             d, std::max(0, std::min(static_cast<int>(n) - 2 - d, d))).size());
            rep.add("genus0 n=" + pad2(static_cast<int>(n)) + " d=" + pad2(d), dim == expect,
                    dim == expect ? "" : "dimension " + std::to_string(dim) + " vs partition count " +
                                             std::to_string(expect));
        }
    }

    // Same ζ, different (g,n): identical bases and identical reductions.
    const std::vector<RingContext> contexts = {RingContext(3, 1), RingContext(2, 3),
                                               RingContext(1, 5), RingContext(0, 7)};
    for (int d = 3; d <= 4; ++d) {
        // probe: Σ_i i·κ_{p_i} over P(d) in canonical order
        KappaPoly probe(d, Rational(contexts[0].zeta()));
        int i = 1;
        for (const Partition& p : enumerate(d)) probe.add_term(p, Rational(i++));
        BasisExpression ref = reduce(contexts[0], probe);
        for (size_t c = 1; c < contexts.size(); ++c) {
            BasisExpression got = reduce(contexts[c], probe);
            bool same = got.coords == ref.coords &&
                        canonical_basis(contexts[c], d) == canonical_basis(contexts[0], d);
            rep.add("invariance d=" + pad2(d) + " g=" + std::to_string(contexts[c].g) +
                        ",n=" + std::to_string(contexts[c].n),
                    same, same ? "" : "reduction differs from the (3,1) context");
        }
    }
}

void suite_oracle(VerifyReport& rep) {
    const std::vector<Rational> zetas = {Rational(1), Rational(3), Rational(7, 2)};
    std::vector<std::vector<int>> shapes;
    for (int a = 0; a <= 8; ++a) shapes.push_back({a});
    for (int a = 0; a <= 8; ++a)
        for (int b = a; a + b <= 8; ++b) shapes.push_back({b, a});
    for (int a = 0; a <= 8; ++a)
        for (int b = a; a + b <= 8; ++b)
            for (int c = b; a + b + c <= 8; ++c) shapes.push_back({c, b, a});

    for (const Rational& zeta : zetas) {
        PushforwardCalculator calc(zeta);
        for (const auto& e : shapes) {
            KappaPoly lhs = calc.psi(e);
            KappaPoly rhs = oracle_pushforward(e, zeta);
            bool same = lhs.same_terms(rhs);
            rep.add("zeta=" + zeta.numerator().str() +
                        (zeta.is_integer() ? "" : "/" + zeta.denominator().str()) + " e=" +
                        exps_str(e),
                    same, same ? "" : "routes disagree");
        }
    }
}

void suite_series(VerifyReport& rep, int order) {
    // Constant-minus-x identity.
    BracketedSeries fe = F_series({}, order);
    {
        std::string bad;
        if (fe.coeff(0) != Rational(1)) bad = "coeff 0 is " + fe.coeff(0).str();
        if (bad.empty() && order >= 1 && fe.coeff(1) != Rational(-1))
            bad = "coeff 1 is " + fe.coeff(1).str();
        for (int n = 2; n <= order && bad.empty(); ++n)
            if (!fe.coeff(n).is_zero()) bad = "coeff " + std::to_string(n) + " is " + fe.coeff(n).str();
        rep.add("empty-alpha = 1 - x", bad.empty(), bad);
    }

    // Degree bound: F_α vanishes past x^{1+|α|}.
    const int N = 15;
    std::vector<std::vector<int>> alphas;
    for (int a = 0; a <= 6; ++a) alphas.push_back({a});
    for (int a = 0; a <= 6; ++a)
        for (int b = std::max(a, 1); a + b <= 6; ++b) alphas.push_back({a, b});
    for (int a = 0; a <= 6; ++a)
        for (int b = std::max(a, 1); a + b <= 6; ++b)
            for (int c = b; a + b + c <= 6; ++c) alphas.push_back({a, b, c});
    for (const auto& alpha : alphas) {
        int total = 0;
        for (int a : alpha) total += a;
        BracketedSeries f = F_series(alpha, N);
        std::string bad;
        for (int n = total + 2; n <= N && bad.empty(); ++n)
            if (!f.coeff(n).is_zero())
                bad = "coeff of x^" + std::to_string(n) + " is " + f.coeff(n).str();
        rep.add("degree-bound alpha=" + exps_str(alpha), bad.empty(), bad);
    }

    // Leading coefficient of the one-entry series.
    for (int a = 0; a <= 8; ++a) {
        BracketedSeries f = F_series({a}, a + 1);
        Rational want = Rational(BigInt(1), BigInt(a + 1) * factorial(a + 1));
        if (a % 2 != 0) want = -want;
        Rational got = f.coeff(a + 1);
        rep.add("leading a=" + pad2(a), got == want,
                got == want ? "" : "expected " + want.str() + ", got " + got.str());
    }

    // J recursion and closed form.
    for (int k = 1; k <= 10; ++k) {
        Rational rec = J_recursive(k);
        Rational closed = J_closed(k);
        Rational literal(BigInt(1), BigInt(k) * factorial(k));
        bool ok = rec == closed && closed == literal;
        rep.add("J k=" + pad2(k), ok,
                ok ? "" : "recursive " + rec.str() + ", closed " + closed.str());
    }
}

void suite_minor(VerifyReport& rep, int max_d) {
    for (int d = 2; d <= max_d; ++d) {
        const RationalMatrix full = matrix_X(d, 0);
        for (int delta = 0; delta <= d - 2; ++delta) {
            RationalMatrix sub = matrix_X(d, delta);
            std::string bad;
            if (full.rows() < sub.rows()) bad = "index size inversion";
            for (int i = 0; i < sub.rows() && bad.empty(); ++i)
                for (int j = 0; j < sub.cols(); ++j)
                    if (sub.at(i, j) != full.at(i, j) ||
                        sub.row_index()[static_cast<size_t>(i)] !=
                            full.row_index()[static_cast<size_t>(i)]) {
                        bad = "mismatch at row " + std::to_string(i) + ", col " + std::to_string(j);
                        break;
                    }
            rep.add("d=" + pad2(d) + " delta=" + pad2(delta), bad.empty(), bad);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorial calculus for the kappa ring of compact-type moduli"};
    app.require_subcommand(1);

    std::string cache_dir_flag;
    bool no_cache = false;
    app.add_option("--cache-dir", cache_dir_flag, "Matrix cache directory (overrides KAPPA_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "Disable the matrix cache");

    // partitions ------------------------------------------------------------
    auto* cmd_partitions = app.add_subcommand("partitions", "Enumerate partitions in canonical order");
    int pa_d = 0;
    int pa_delta = 0;
    std::string pa_format = "json";
    cmd_partitions->add_option("--d", pa_d, "Degree")->required();
    auto* pa_delta_opt = cmd_partitions->add_option("--delta", pa_delta, "Restrict to P_delta(d)");
    cmd_partitions->add_option("--format", pa_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // matrix ----------------------------------------------------------------
    auto* cmd_matrix = app.add_subcommand("matrix", "Emit one of the relation matrices");
    std::string mx_kind;
    int mx_d = 0;
    int mx_delta = 0;
    std::string mx_format = "json";
    cmd_matrix->add_option("--kind", mx_kind, "X, Y, L, or M")
        ->required()
        ->check(CLI::IsMember({"X", "Y", "L", "M"}));
    cmd_matrix->add_option("--d", mx_d, "Degree")->required();
    cmd_matrix->add_option("--delta", mx_delta, "Index bound (X and M; Y and L require 0)");
    cmd_matrix->add_option("--format", mx_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // series ----------------------------------------------------------------
    auto* cmd_series = app.add_subcommand("series", "Coefficients of a bracketed generating function");
    std::string se_alpha;
    int se_order = 20;
    std::string se_format = "json";
    cmd_series->add_option("--alpha", se_alpha, "Comma-separated indices (may be empty)");
    cmd_series->add_option("--order", se_order, "Truncation order");
    cmd_series->add_option("--format", se_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // dim -------------------------------------------------------------------
    auto* cmd_dim = app.add_subcommand("dim", "Dimension and canonical basis of one graded piece");
    long long di_g = 0, di_n = 0;
    int di_d = 0;
    cmd_dim->add_option("--g", di_g, "Genus")->required();
    cmd_dim->add_option("--n", di_n, "Marking count")->required();
    cmd_dim->add_option("--d", di_d, "Degree")->required();

    // reduce ----------------------------------------------------------------
    auto* cmd_reduce = app.add_subcommand("reduce", "Express every degree-d monomial in the basis");
    long long re_g = 0, re_n = 0;
    int re_d = 0;
    cmd_reduce->add_option("--g", re_g, "Genus")->required();
    cmd_reduce->add_option("--n", re_n, "Marking count")->required();
    cmd_reduce->add_option("--d", re_d, "Degree")->required();

    // det -------------------------------------------------------------------
    auto* cmd_det = app.add_subcommand("det", "Determinant of the scaling matrix, both routes");
    int de_d = 0;
    cmd_det->add_option("--d", de_d, "Degree")->required();

    // verify ----------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    std::string ve_suite;
    int ve_d = -1;
    long long ve_zeta = -1;
    int ve_order = -1;
    cmd_verify->add_option("--suite", ve_suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(
            {"golden6", "product", "det", "nonsingular", "rank", "oracle", "series", "minor"}));
    cmd_verify->add_option("--d", ve_d, "Degree bound (suite-dependent default)");
    cmd_verify->add_option("--zeta", ve_zeta, "Zeta bound (rank suite)");
    cmd_verify->add_option("--order", ve_order, "Truncation order (series suite)");

    // cache -----------------------------------------------------------------
    auto* cmd_cache = app.add_subcommand("cache", "List or clear the matrix cache");
    bool ca_clear = false;
    cmd_cache->add_flag("--clear", ca_clear, "Remove every cache entry");

    // let the global cache flags be given after the subcommand name too
    for (CLI::App* sub : {cmd_partitions, cmd_matrix, cmd_series, cmd_dim, cmd_reduce, cmd_det,
                          cmd_verify, cmd_cache})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text on stdout, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        const MatrixCache cache = resolve_cache(cache_dir_flag, no_cache);

        if (cmd_partitions->parsed()) {
            std::vector<Partition> list = pa_delta_opt->count() > 0
                                              ? enumerate_P_delta(pa_d, pa_delta)
                                              : enumerate(pa_d);
            if (pa_format == "csv")
                std::cout << partitions_to_csv(list);
            else {
                ojson j;
                j["d"] = pa_d;
                if (pa_delta_opt->count() > 0)
                    j["delta"] = pa_delta;
                else
                    j["delta"] = nullptr;
                j["count"] = list.size();
                j["partitions"] = partitions_to_json(list);
                std::cout << render_json(j);
            }
            return 0;
        }

        if (cmd_matrix->parsed()) {
            if ((mx_kind == "Y" || mx_kind == "L") && mx_delta != 0)
                throw std::invalid_argument("matrix: kind " + mx_kind + " is only defined at delta 0");
            RationalMatrix m = cache.load_or_compute(mx_kind, mx_d, mx_delta, [&]() {
                if (mx_kind == "X") return matrix_X(mx_d, mx_delta);
                if (mx_kind == "M") return matrix_M(mx_d, mx_delta);
                if (mx_kind == "Y") return matrix_Y0(mx_d);
                return matrix_L0(mx_d);
            });
            if (mx_format == "csv")
                std::cout << matrix_to_csv(m);
            else
                std::cout << render_json(matrix_to_json(mx_kind, mx_d, mx_delta, m));
            return 0;
        }

        if (cmd_series->parsed()) {
            std::vector<int> alpha = parse_int_list(se_alpha);
            std::sort(alpha.begin(), alpha.end());  // zero (if any) leads
            if (se_order < 0) throw std::invalid_argument("series: negative order");
            BracketedSeries f = F_series(alpha, se_order);
            if (se_format == "csv")
                std::cout << series_to_csv(f);
            else
                std::cout << render_json(series_to_json(alpha, f));
            return 0;
        }

        if (cmd_dim->parsed()) {
            RingContext ctx(di_g, di_n);
            ojson j;
            j["g"] = di_g;
            j["n"] = di_n;
            j["zeta"] = ctx.zeta();
            j["d"] = di_d;
            j["dimension"] = dimension(ctx, di_d);
            j["basis"] = partitions_to_json(canonical_basis(ctx, di_d));
            std::cout << render_json(j);
            return 0;
        }

        if (cmd_reduce->parsed()) {
            RingContext ctx(re_g, re_n);
            ReductionPlan plan(re_d, ctx.zeta());
            ojson j;
            j["g"] = re_g;
            j["n"] = re_n;
            j["zeta"] = ctx.zeta();
            j["d"] = re_d;
            j["basis"] = partitions_to_json(plan.basis());
            ojson reductions = ojson::object();
            for (const Partition& p : re_d == 0 ? std::vector<Partition>{Partition{}}
                                                : enumerate(re_d)) {
                KappaPoly mono = KappaPoly::monomial(p, Rational(ctx.zeta()));
                ojson coords = ojson::object();
                for (const auto& [b, c] : plan.apply(mono)) coords[partition_key(b)] = c.str();
                reductions[partition_key(p)] = coords;
            }
            j["reductions"] = reductions;
            std::cout << render_json(j);
            return 0;
        }

        if (cmd_det->parsed()) {
            Rational closed = determinant_formula(de_d);
            Rational elim = determinant(matrix_X(de_d, 0));
            ojson j;
            j["d"] = de_d;
            j["closed_form"] = closed.str();
            j["elimination"] = elim.str();
            j["agree"] = closed == elim;
            std::cout << render_json(j);
            return closed == elim ? 0 : 1;
        }

        if (cmd_verify->parsed()) {
            VerifyReport rep;
            rep.suite = ve_suite;
            if (ve_suite == "golden6")
                suite_golden6(rep);
            else if (ve_suite == "product")
                suite_product(rep, ve_d > 0 ? ve_d : 10);
            else if (ve_suite == "det")
                suite_det(rep, ve_d > 0 ? ve_d : 8);
            else if (ve_suite == "nonsingular")
                suite_nonsingular(rep, ve_d > 0 ? ve_d : 9);
            else if (ve_suite == "rank")
                suite_rank(rep, ve_zeta > 0 ? ve_zeta : 8);
            else if (ve_suite == "oracle")
                suite_oracle(rep);
            else if (ve_suite == "series")
                suite_series(rep, ve_order > 0 ? ve_order : 20);
            else
                suite_minor(rep, ve_d > 0 ? ve_d : 10);
            return rep.emit();
        }

        if (cmd_cache->parsed()) {
            if (!cache.enabled())
                throw std::invalid_argument(
                    "cache: no directory configured (set KAPPA_CACHE_DIR or pass --cache-dir)");
            ojson j;
            j["dir"] = cache.dir().string();
            if (ca_clear) {
                j["removed"] = cache.clear();
            } else {
                ojson entries = ojson::array();
                for (const std::string& name : cache.list()) entries.push_back(name);
                j["entries"] = entries;
            }
            std::cout << render_json(j);
            return 0;
        }
    } catch (const ReductionUnavailableError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}
