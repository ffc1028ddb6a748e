#include "gl3/clebsch_gordan.hpp"
#include "gl3/coefficient_flow.hpp"
#include "gl3/gamma.hpp"
#include "gl3/lie.hpp"
#include "gl3/minimal.hpp"
#include "gl3/verify.hpp"
#include "gl3/whittaker.hpp"
#include "gl3/wigner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace gl3;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

double parse_double(std::string_view s, const std::string& what) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("cannot parse " + what + ": '" + std::string(s) + "'");
    return v;
}

// a, bi, a+bi, a-bi, i, -i
cplx parse_complex(std::string s) {
    std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
    if (s.empty()) throw UsageError("empty complex number");
    if (s.back() != 'i') return parse_double(s[0] == '+' ? s.substr(1) : s, "complex number");
    s.pop_back();
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (!im.empty() && im[0] == '+') im.erase(0, 1);
    const double imv = im.empty() ? 1.0 : im == "-" ? -1.0 : parse_double(im, "imaginary part");
    return {re.empty() ? 0.0 : parse_double(re[0] == '+' ? re.substr(1) : re, "real part"), imv};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
    return out;
}

// "a+bi,c+di[,e+fi]", the third entry inferred from the zero sum
SpectralParameter parse_mu(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2 && parts.size() != 3) throw UsageError("--mu takes two or three comma-separated entries");
    const cplx a = parse_complex(parts[0]), b = parse_complex(parts[1]);
    if (parts.size() == 2) return SpectralParameter::from_two(a, b);
    try {
        return {a, b, parse_complex(parts[2])};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::array<double, 2> parse_y(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw UsageError("--y takes y1,y2");
    const std::array<double, 2> y{parse_double(parts[0], "y1"), parse_double(parts[1], "y2")};
    if (!(y[0] > 0 && y[1] > 0)) throw UsageError("y1 and y2 must be positive");
    return y;
}

json cnum(cplx z) {
    if (z.imag() == 0.0) return z.real();
    return json::array({z.real(), z.imag()});
}

json cvec(const CVec& v) {
    json a = json::array();
    for (auto& x : v.data()) a.push_back(cnum(x));
    return a;
}

json cmat(const CMat& M) {
    json rows = json::array();
    for (int mp = -M.d(); mp <= M.d(); ++mp) rows.push_back(cvec(M.row(mp)));
    return rows;
}

json mu_json(const SpectralParameter& mu) { return json::array({cnum(mu.mu1), cnum(mu.mu2), cnum(mu.mu3)}); }

struct Globals {
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    std::optional<double> panel_width, target, truncation;
    std::optional<int> nodes_per_panel, max_doublings;
    OracleOptions oracle;
};

json header(const Globals& g, const std::string& command) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["seed"] = g.seed;
    return j;
}

ContourSpec contour_for(const Globals& g, int d, const SpectralParameter& mu) {
    ContourSpec c = default_contour(d, mu);
    if (g.panel_width) c.panel_width = *g.panel_width;
    if (g.nodes_per_panel) c.nodes_per_panel = *g.nodes_per_panel;
    if (g.target) c.target = *g.target;
    if (g.max_doublings) c.max_doublings = *g.max_doublings;
    if (g.truncation) c.T = *g.truncation;
    return c;
}

void require_csv_support(const Globals& g, bool supported, const std::string& cmd) {
    if (g.format == "csv" && !supported) throw UsageError(cmd + " has no CSV form");
}

// ---------------------------------------------------------------- commands

int cmd_wigner(const Globals& g, int d, const std::string& euler, const std::string& element) {
    if (d < 0) throw UsageError("--d must be nonnegative");
    if (euler.empty() == element.empty()) throw UsageError("give exactly one of --euler, --element");
    CMat D;
    json out = header(g, "wigner");
    out["d"] = d;
    if (!element.empty()) {
        Mat3<int> k;
        if (element.size() == 3 && element[0] == 'v')
            k = v_matrix({element[1] == '-' ? -1 : 1, element[2] == '-' ? -1 : 1});
        else
            k = weyl_matrix(weyl_from_name(element));
        const auto E = wigner_D_exact(d, k);
        D = to_numeric(E);
        out["element"] = element;
        json ex = json::array();
        for (int mp = -d; mp <= d; ++mp) {
            json row = json::array();
            for (int m = -d; m <= d; ++m) row.push_back(json::array({E(mp, m).re.str(), E(mp, m).im.str()}));
            ex.push_back(row);
        }
        out["exact"] = ex;
    } else {
        const auto a = split(euler, ',');
        if (a.size() != 3) throw UsageError("--euler takes alpha,beta,gamma");
        const RotationMatrix k =
            euler_rotation(parse_double(a[0], "alpha"), parse_double(a[1], "beta"), parse_double(a[2], "gamma"));
        D = wigner_D(d, k);
        out["euler"] = json::array({parse_double(a[0], "alpha"), parse_double(a[1], "beta"), parse_double(a[2], "gamma")});
    }
    if (g.format == "csv") {
        std::cout << "mp,m,re,im\n";
        for (int mp = -d; mp <= d; ++mp)
            for (int m = -d; m <= d; ++m) std::cout << mp << ',' << m << ',' << json(D(mp, m).real()) << ',' << json(D(mp, m).imag()) << '\n';
        return 0;
    }
    out["matrix"] = cmat(D);
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_cg(const Globals& g, int d, int k, int a) {
    if (d < 0 || (k != 1 && k != 2) || std::abs(a) > k) throw UsageError("need d >= 0, k in {1,2}, |a| <= k");
    const CGTable t = cg_matrix(d, k, a);
    if (g.format == "csv") {
        std::cout << "m,i,exact,value\n";
        for (int m = -d; m <= d; ++m)
            for (int i = -k; i <= k; ++i) std::cout << m << ',' << i << ',' << t(m, i).str() << ',' << json(t(m, i).to_double()) << '\n';
        return 0;
    }
    json out = header(g, "cg");
    out["d"] = d;
    out["k"] = k;
    out["a"] = a;
    json exact = json::array(), value = json::array();
    for (int m = -d; m <= d; ++m) {
        json er = json::array(), vr = json::array();
        for (int i = -k; i <= k; ++i) {
            er.push_back(t(m, i).str());
            vr.push_back(t(m, i).to_double());
        }
        exact.push_back(er);
        value.push_back(vr);
    }
    out["exact"] = exact;
    out["value"] = value;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_eigen(const Globals& g, const std::string& mu_s, const std::vector<double>& xs) {
    require_csv_support(g, false, "eigen");
    const SpectralParameter mu = parse_mu(mu_s);
    json out = header(g, "eigen");
    out["mu"] = mu_json(mu);
    out["lambda1"] = cnum(lambda1(mu));
    out["lambda2"] = cnum(lambda2(mu));
    json lx = json::array();
    for (double x : xs) lx.push_back({{"x", x}, {"value", cnum(lambda_x_eigenvalue(mu, x))}});
    out["lambda_x"] = lx;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_classify(const Globals& g, int d, const std::string& mu_s) {
    require_csv_support(g, false, "classify");
    if (d < 0) throw UsageError("--d must be nonnegative");
    const StandardMu s = StandardMu::from_mu(parse_mu(mu_s));
    const MinimalClass mc = classify_minimal(d, s);
    json out = header(g, "classify");
    out["d"] = d;
    out["mu"] = mu_json(mc.mu);
    out["standard_form"] = {{"kind", s.kind == StandardMu::Kind::unitary ? "unitary" : "shifted"}, {"a", s.a}, {"b", s.b}};
    out["case"] = mc.case_tag;
    out["chi"] = {{"e1", mc.chi.e1}, {"e2", mc.chi.e2}};
    json basis = json::array();
    for (size_t i = 0; i < mc.basis.size(); ++i)
        basis.push_back({{"label", mc.labels[i]},
                         {"delta", mc.parities[i].delta},
                         {"eps", mc.parities[i].eps},
                         {"vector", cvec(mc.basis[i])}});
    out["basis"] = basis;
    out["lowering_residual"] = mc.lowering_residual;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_whittaker(const Globals& g, int d, const std::string& mu_s, const std::vector<std::string>& ys_s, bool serial) {
    if (d < 0) throw UsageError("--d must be nonnegative");
    const SpectralParameter mu = parse_mu(mu_s);
    std::vector<std::array<double, 2>> ys;
    for (auto& y : ys_s) ys.push_back(parse_y(y));
    if (ys.empty()) ys.push_back({1.0, 1.0});
    const ContourSpec c = contour_for(g, d, mu);
    const auto res = w_star_grid(d, ys, mu, c, !serial);
    if (g.format == "csv") {
        std::cout << "y1,y2,mp,re,im,error\n";
        for (size_t i = 0; i < ys.size(); ++i)
            for (int mp = -d; mp <= d; ++mp)
                std::cout << json(ys[i][0]) << ',' << json(ys[i][1]) << ',' << mp << ',' << json(res[i].value(mp).real()) << ','
                          << json(res[i].value(mp).imag()) << ',' << json(res[i].error[mp + d]) << '\n';
        return 0;
    }
    json out = header(g, "whittaker");
    out["d"] = d;
    out["mu"] = mu_json(mu);
    out["contour"] = {{"s1", c.s1}, {"s2", c.s2}, {"panel_width", c.panel_width}, {"nodes_per_panel", c.nodes_per_panel}};
    json pts = json::array();
    for (size_t i = 0; i < ys.size(); ++i)
        pts.push_back({{"y", json::array({ys[i][0], ys[i][1]})},
                       {"T", res[i].T},
                       {"nodes", res[i].nodes},
                       {"value", cvec(res[i].value)},
                       {"error", res[i].error}});
    out["points"] = pts;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_oracle(const Globals& g, int d, const std::string& mu_s, const std::vector<std::string>& ys_s) {
    require_csv_support(g, false, "oracle");
    if (d < 0) throw UsageError("--d must be nonnegative");
    const SpectralParameter mu = parse_mu(mu_s);
    std::vector<std::array<double, 2>> ys;
    for (auto& y : ys_s) ys.push_back(parse_y(y));
    if (ys.empty()) ys.push_back({1.0, 1.0});
    json rows = json::array();
    auto emit = [&](const std::string& identity, std::array<double, 2> y, int m, cplx lhs, cplx rhs) {
        rows.push_back({{"identity", identity},
                        {"y", json::array({y[0], y[1]})},
                        {"m", m},
                        {"oracle", cnum(lhs)},
                        {"mellin_barnes", cnum(rhs)},
                        {"rel_error", std::abs(lhs - rhs) / std::abs(rhs)}});
    };
    for (auto y : ys) {
        if (d == 0) {
            const cplx o = jacquet_full_matrix(0, y[0], y[1], mu, {}, g.oracle).value(0, 0);
            emit("Lambda W^0", y, 0, lambda_alpha({0, 0, 0}, mu) * o, w_star(0, y[0], y[1], mu, contour_for(g, 0, mu)).value(0));
        } else if (d == 1) {
            const CMat W = jacquet_full_matrix(1, y[0], y[1], mu, {}, g.oracle).value;
            const CVec a = bu(1, 0, -1) * W, b = bu(1, 1, -1) * W, e = bu(1, 1, 1) * W;
            const SpectralParameter m4 = weyl_action(mu, Weyl::w4), m5 = weyl_action(mu, Weyl::w5);
            const WStarResult w0 = w_star(1, y[0], y[1], mu, contour_for(g, 1, mu));
            const WStarResult w4 = w_star(1, y[0], y[1], m4, contour_for(g, 1, m4));
            const WStarResult w5 = w_star(1, y[0], y[1], m5, contour_for(g, 1, m5));
            for (int m = -1; m <= 1; ++m) {
                emit("sqrt2 Lambda_011 bu^-_0 W^1", y, m, std::sqrt(2.0) * lambda_alpha({0, 1, 1}, mu) * a(m), w0.value(m));
                emit("-2 Lambda_101 bu^-_1 W^1 (mu^w4)", y, m, -2.0 * lambda_alpha({1, 0, 1}, mu) * b(m), w4.value(m));
                emit("2 Lambda_110 bu^+_1 W^1 (mu^w5)", y, m, 2.0 * lambda_alpha({1, 1, 0}, mu) * e(m), w5.value(m));
            }
        } else {
            const EvalResult o = jacquet_central_oracle(d, y[0], y[1], mu, -d, g.oracle);
            const WStarResult w = w_star(d, y[0], y[1], mu, contour_for(g, d, mu));
            emit("Lambda* W^d_{-d,0}", y, 0, lambda_star(d, mu) * o.value, w.value(0));
            const EvalResult top = jacquet_central_oracle(d, y[0], y[1], mu, d, g.oracle);
            rows.push_back({{"identity", "W^d_{d,0} = 0"}, {"y", json::array({y[0], y[1]})}, {"m", 0}, {"oracle", cnum(top.value)}});
        }
    }
    json out = header(g, "oracle");
    out["d"] = d;
    out["mu"] = mu_json(mu);
    out["comparisons"] = rows;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_multiplicities(const Globals& g, int d0, int max_d) {
    if (d0 < 0 || max_d < 0) throw UsageError("--d0 and --max-d must be nonnegative");
    if (g.format == "csv") {
        std::cout << "d,multiplicity\n";
        for (int d = 0; d <= max_d; ++d) std::cout << d << ',' << multiplicity(d0, d) << '\n';
        return 0;
    }
    json out = header(g, "multiplicities");
    out["d0"] = d0;
    json rows = json::array();
    for (int d = 0; d <= max_d; ++d) rows.push_back({{"d", d}, {"multiplicity", multiplicity(d0, d)}});
    out["rows"] = rows;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_verify(const Globals& g, const std::string& which) {
    std::vector<std::string> names;
    if (which == "all") {
        names = suite_names();
    } else {
        const auto& all = suite_names();
        if (std::find(all.begin(), all.end(), which) == all.end()) throw UsageError("unknown suite: " + which);
        names = {which};
    }
    bool ok = true;
    json suites = json::array();
    if (g.format == "csv") std::cout << "suite,criterion,check,passed,value,tolerance,count\n";
    for (const auto& n : names) {
        const SuiteReport r = run_suite(n, g.seed);
        ok = ok && r.passed();
        json checks = json::array();
        for (const auto& c : r.checks) {
            if (g.format == "csv")
                std::cout << n << ',' << r.criterion << ",\"" << c.name << "\"," << (c.passed ? "true" : "false") << ','
                          << json(c.value) << ',' << json(c.tolerance) << ',' << c.count << '\n';
            json cj{{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"tolerance", c.tolerance}, {"count", c.count}};
            if (!c.detail.empty()) cj["detail"] = c.detail;
            checks.push_back(cj);
        }
        suites.push_back({{"suite", n},
                          {"criterion", r.criterion},
                          {"passed", r.passed()},
                          {"seconds", r.seconds},
                          {"budget_seconds", r.budget_seconds},
                          {"checks", checks}});
    }
    if (g.format != "csv") {
        json out = header(g, "verify");
        out["passed"] = ok;
        out["suites"] = suites;
        std::cout << out.dump(2) << '\n';
    }
    return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GL(3) Wigner, Clebsch-Gordan, Casimir and Whittaker toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file with defaults for any long option");

    Globals g;
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "seed for random test points")->envname("GL3_SEED");
    app.add_option("--panel-width", g.panel_width, "Gauss-Legendre panel width on each contour line");
    app.add_option("--nodes-per-panel", g.nodes_per_panel, "Gauss-Legendre nodes per panel");
    app.add_option("--target", g.target, "truncation-doubling target");
    app.add_option("--max-doublings", g.max_doublings, "doublings of T before giving up");
    app.add_option("--truncation", g.truncation, "initial truncation T; 0 picks 30 + 5 max|Im mu|");
    app.add_option("--half-periods", g.oracle.half_periods, "oracle half periods per side");
    app.add_option("--oracle-nodes", g.oracle.nodes, "oracle Gauss-Legendre nodes per half period");
    app.add_option("--de-step", g.oracle.de_step, "oracle double-exponential step");
    app.add_option("--inner-panel", g.oracle.inner_panel, "oracle widest finite panel");

    int d = 0, k = 1, a = 0, d0 = 0, max_d = 6;
    std::string euler, element, mu = "0,0", suite;
    std::vector<double> xs{0.0};
    std::vector<std::string> ys;
    bool serial = false;

    auto* wig = app.add_subcommand("wigner", "D^d(k) for Euler angles or a named element");
    wig->add_option("--d", d, "dimension parameter")->required();
    wig->add_option("--euler", euler, "alpha,beta,gamma");
    wig->add_option("--element", element, "I, w2, w3, w4, w5, wl, v--, v-+, v+-");

    auto* cgc = app.add_subcommand("cg", "Clebsch-Gordan table C^{d,k,a}_{m,i}");
    cgc->add_option("--d", d)->required();
    cgc->add_option("--k", k)->required();
    cgc->add_option("--a", a)->required();

    auto* eig = app.add_subcommand("eigen", "lambda1, lambda2 and Lambda_x for mu");
    eig->add_option("--mu", mu, "a+bi,c+di[,e+fi]")->required();
    eig->add_option("--x", xs, "points x for Lambda_x")->delimiter(',');

    auto* cls = app.add_subcommand("classify", "minimal vectors at (d, mu); mu in standard form");
    cls->add_option("--d", d)->required();
    cls->add_option("--mu", mu)->required();

    auto* wh = app.add_subcommand("whittaker", "W^{d*}(y, mu) by Mellin-Barnes quadrature");
    wh->add_option("--d", d)->required();
    wh->add_option("--mu", mu)->required();
    wh->add_option("--y", ys, "y1,y2 (repeatable)")->take_all();
    wh->add_flag("--serial", serial, "skip OpenMP");

    auto* orc = app.add_subcommand("oracle", "Jacquet-integral oracle against W^{d*}");
    orc->add_option("--d", d)->required();
    orc->add_option("--mu", mu)->required();
    orc->add_option("--y", ys, "y1,y2 (repeatable)")->take_all();

    auto* mult = app.add_subcommand("multiplicities", "multiplicity of weight d over minimal weight d0");
    mult->add_option("--d0", d0);
    mult->add_option("--max-d", max_d)->required();

    auto* ver = app.add_subcommand("verify", "run an invariant suite");
    std::string suites_help = "all";
    for (auto& n : suite_names()) suites_help += ", " + n;
    ver->add_option("suite", suite, suites_help)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*wig) return cmd_wigner(g, d, euler, element);
        if (*cgc) return cmd_cg(g, d, k, a);
        if (*eig) return cmd_eigen(g, mu, xs);
        if (*cls) return cmd_classify(g, d, mu);
        if (*wh) return cmd_whittaker(g, d, mu, ys, serial);
        if (*orc) return cmd_oracle(g, d, mu, ys);
        if (*mult) return cmd_multiplicities(g, d0, max_d);
        if (*ver) return cmd_verify(g, suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
