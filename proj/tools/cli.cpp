#include "cli.hpp"

#include "ybalg/algebra.hpp"
#include "ybalg/ansatz.hpp"
#include "ybalg/colored.hpp"
#include "ybalg/compare.hpp"
#include "ybalg/error.hpp"
#include "ybalg/frt.hpp"
#include "ybalg/funceq.hpp"
#include "ybalg/onepar.hpp"
#include "ybalg/search.hpp"
#include "ybalg/ybsystem.hpp"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <variant>

namespace ybalg::cli {

std::filesystem::path default_out_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return env && *env ? std::filesystem::path(env) : std::filesystem::path(".");
}

void write_json(const std::filesystem::path& path, const Json& j) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path);
    if (!os) throw InvalidInput("cannot write " + path.string());
    os << j.dump(2) << '\n';
    if (!os) throw InvalidInput("cannot write " + path.string());
}

namespace {

// ---- parameter access ------------------------------------------------------

std::optional<Scalar> opt_scalar(const Json& p, const char* key, Field f) {
    if (!p.contains(key) || p.at(key).is_null()) return std::nullopt;
    return scalar_from_json(p.at(key), f);
}

Scalar scalar(const Json& p, const char* key, const Scalar& def, Field f) {
    return opt_scalar(p, key, f).value_or(def.in(f));
}

std::string text(const Json& p, const char* key, const std::string& def) {
    if (!p.contains(key)) return def;
    if (!p.at(key).is_string()) throw InvalidInput(std::string("parameter '") + key + "' must be a string");
    return p.at(key).get<std::string>();
}

long long integer(const Json& p, const char* key, long long def) {
    if (!p.contains(key)) return def;
    if (!p.at(key).is_number_integer()) throw InvalidInput(std::string("parameter '") + key + "' must be an integer");
    return p.at(key).get<long long>();
}

Field field_param(const Json& p, const Globals& g) {
    return p.contains("field") ? parse_field(text(p, "field", "")) : g.field;
}

double tol_param(const Json& p, const Globals& g) {
    return p.contains("tol") ? p.at("tol").get<double>() : g.tol;
}

std::uint64_t seed_param(const Json& p, const Globals& g) {
    return p.contains("seed") ? p.at("seed").get<std::uint64_t>() : g.seed;
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool vanishes(const Scalar& x, double tol) { return x.is_exact() ? x.is_zero() : x.is_zero(tol); }

// ---- algebra selection -----------------------------------------------------

Algebra make_algebra(const Json& p, Field f) {
    std::optional<Algebra> a;
    if (p.contains("algebra_file")) {
        std::ifstream is(text(p, "algebra_file", ""));
        if (!is) throw InvalidInput("cannot read algebra file");
        a = algebra_from_json(Json::parse(is));
    } else {
        const std::string kind = text(p, "algebra", "quadratic");
        if (kind == "quadratic") {
            a = quadratic_algebra(scalar(p, "sigma", 1, Field::rational));
        } else if (kind == "cubic") {
            a = cubic_algebra(scalar(p, "eps", 2, Field::rational), scalar(p, "rho", 5, Field::rational));
        } else {
            throw UnknownKind("unknown algebra '" + kind + "'");
        }
    }
    if (auto report = validate(*a); !report.ok())
        throw InvalidInput("algebra fails " + report.violations.front().identity);
    return a->in(f);
}

Json algebra_description(const Json& p) {
    Json d;
    if (p.contains("algebra_file")) {
        d["file"] = p.at("algebra_file");
        return d;
    }
    const std::string kind = text(p, "algebra", "quadratic");
    d["kind"] = kind;
    if (kind == "quadratic") d["sigma"] = scalar_to_json(scalar(p, "sigma", 1, Field::rational));
    if (kind == "cubic") {
        d["eps"] = scalar_to_json(scalar(p, "eps", 2, Field::rational));
        d["rho"] = scalar_to_json(scalar(p, "rho", 5, Field::rational));
    }
    return d;
}

// ---- sampling --------------------------------------------------------------

// Portable draws: mt19937_64 output is fully specified, and the reductions
// below avoid the implementation-defined standard distributions.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long long integer(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>((rng_() >> 11) % span);
    }

    Scalar rational() {
        Rational r(static_cast<long>(integer(-9, 9)), static_cast<long>(integer(1, 5)));
        r.canonicalize();
        return Scalar(std::move(r));
    }

    Scalar nonzero() {
        for (;;) {
            Scalar s = rational();
            if (!s.is_zero()) return s;
        }
    }

    Scalar colour(bool integral) { return integral ? Scalar(integer(-3, 3)) : rational(); }

private:
    std::mt19937_64 rng_;
};

// ---- verify ----------------------------------------------------------------

enum class Group { colored, onepar, braid };

Group group_of(const std::string& family) {
    if (family == "okado" || family == "twisted_prop1") return Group::braid;
    try {
        parse_colored_kind(family);
        return Group::colored;
    } catch (const UnknownKind&) {
    }
    try {
        parse_onepar_kind(family);
    } catch (const UnknownKind&) {
        throw UnknownKind("unknown family '" + family + "'");
    }
    return Group::onepar;
}

struct Check {
    Scalar residual;
    Json operands;  // filled only when the check fails
};

Json sides_json(const IdentitySides& s) { return {{"lhs", matrix_json(s.lhs.mat())}, {"rhs", matrix_json(s.rhs.mat())}}; }

Check inverse_check(const Op2& r, const Op2& inv, double tol) {
    const Op2 id = identity_op2(r.n());
    const Matrix left = (r * inv - id).mat();
    const Matrix right = (inv * r - id).mat();
    Scalar res = left.max_abs();
    if (res < right.max_abs()) res = right.max_abs();
    Check c{res, {}};
    if (!vanishes(res, tol))
        c.operands = {{"R", matrix_json(r.mat())}, {"R_inv", matrix_json(inv.mat())}, {"R_Rinv", matrix_json((r * inv).mat())},
                      {"Rinv_R", matrix_json((inv * r).mat())}};
    return c;
}

Json coeffs_json(const Coeffs& k) {
    return {{"alpha", scalar_to_json(k.alpha)}, {"beta", scalar_to_json(k.beta)}, {"gamma", scalar_to_json(k.gamma)}};
}

Check system_check(const SystemResidual& r, double tol, Json operands) {
    Check c{max_abs(r), {}};
    if (!vanishes(c.residual, tol)) {
        Json lhs = Json::array();
        for (const auto& x : r) lhs.push_back(scalar_to_json(x));
        operands["equations"] = std::move(lhs);
        c.operands = std::move(operands);
    }
    return c;
}

TaskOutcome run_verify(const Json& p, const Globals& g) {
    const std::string family = text(p, "family", "thm1");
    const Group group = group_of(family);
    const Field f = field_param(p, g);
    const double tol = tol_param(p, g);
    const long long samples = integer(p, "samples", 10);
    if (samples < 1) throw InvalidInput("samples must be positive");
    const Scalar shift = scalar(p, "gamma_shift", 0, f);
    const bool shifted = !shift.is_zero();
    const std::string identity =
        text(p, "identity", group == Group::braid ? "braid" : "qybe");
    if (identity != "qybe" && identity != "inverse" && identity != "system" && identity != "braid")
        throw UnknownKind("unknown identity '" + identity + "'");
    if ((identity == "braid") != (group == Group::braid))
        throw InvalidInput("identity '" + identity + "' does not apply to family '" + family + "'");
    if (shifted && group == Group::braid) throw InvalidInput("gamma_shift applies to ansatz families only");
    if (shifted && identity == "inverse") throw InvalidInput("gamma_shift does not combine with the inverse check");

    Sampler rng(seed_param(p, g));
    Json report;
    report["command"] = "verify";
    report["family"] = family;
    report["identity"] = identity;
    report["field"] = to_string(f);
    report["seed"] = seed_param(p, g);
    if (shifted) report["gamma_shift"] = scalar_to_json(shift);
    if (group != Group::braid) report["algebra"] = algebra_description(p);

    std::optional<Algebra> algebra;
    if (group != Group::braid) algebra = make_algebra(p, f);
    const bool exact = f == Field::rational;

    Json rows = Json::array();
    Json first_failure;
    Scalar worst = Scalar(0).in(f);
    bool ok = true;

    for (long long i = 0; i < samples; ++i) {
        Json colours, params;
        Check c;
        if (group == Group::colored) {
            const ColoredKind kind = parse_colored_kind(family);
            const bool integral = exact && (kind == ColoredKind::thm2 || kind == ColoredKind::remark2);
            ColoredParams cp{scalar(p, "p", rng.nonzero(), f), scalar(p, "q", rng.nonzero(), f),
                             scalar(p, "s", rng.nonzero(), f)};
            Scalar u, v, w;
            do {
                u = rng.colour(integral).in(f);
                v = rng.colour(integral).in(f);
                w = rng.colour(integral).in(f);
            } while (u == v || u == w || v == w);
            if (identity == "inverse" && kind == ColoredKind::thm1) {
                // Admissible colours only.
                while (cp.p * u == cp.q * v || cp.q * u == cp.p * v) v = rng.colour(false).in(f);
            }
            colours = {{"u", scalar_to_json(u)}, {"v", scalar_to_json(v)}, {"w", scalar_to_json(w)}};
            params = {{"p", scalar_to_json(cp.p)}, {"q", scalar_to_json(cp.q)}};
            if (kind == ColoredKind::thm2 || kind == ColoredKind::remark2) params["s"] = scalar_to_json(cp.s);

            std::optional<ColoredFamily> fam;
            std::optional<Coalgebra> coalg;
            if (kind == ColoredKind::coalgebra_thm1) {
                coalg = dual_coalgebra(*algebra);
                fam.emplace(*coalg, cp);
            } else {
                fam.emplace(kind, *algebra, cp);
            }
            auto coeffs = [&](const Scalar& a, const Scalar& b) {
                Coeffs k = fam->coefficients(a, b);
                k.gamma += shift;
                return k;
            };
            ColoredOperator op = [&](const Scalar& a, const Scalar& b) {
                if (!shifted) return (*fam)(a, b);
                return coalg ? ansatz_operator(*coalg, coeffs(a, b)) : ansatz_operator(*algebra, coeffs(a, b));
            };
            if (identity == "qybe") {
                IdentitySides s = colored_qybe_sides(op, u, v, w);
                c.residual = s.residual();
                if (!vanishes(c.residual, tol)) {
                    c.operands = sides_json(s);
                    c.operands["R12"] = matrix_json(op(u, v).mat());
                    c.operands["R13"] = matrix_json(op(u, w).mat());
                    c.operands["R23"] = matrix_json(op(v, w).mat());
                }
            } else if (identity == "system") {
                c = system_check(eval_colored_system(coeffs, u, v, w), tol,
                                 {{"leg12", coeffs_json(coeffs(u, v))},
                                  {"leg13", coeffs_json(coeffs(u, w))},
                                  {"leg23", coeffs_json(coeffs(v, w))}});
            } else {
                if (kind == ColoredKind::thm1)
                    c = inverse_check(op(u, v), thm1_inv(*algebra, cp.p, cp.q, u, v), tol);
                else if (kind == ColoredKind::thm2)
                    c = inverse_check(op(u, v), thm2_inv(*algebra, cp.p, cp.q, cp.s, u, v), tol);
                else
                    throw InvalidInput("no inverse formula for family '" + family + "'");
            }
        } else if (group == Group::onepar) {
            const OneParKind kind = parse_onepar_kind(family);
            const Scalar q = scalar(p, "q", rng.nonzero(), f);
            Scalar x = rng.nonzero().in(f), z = rng.nonzero().in(f);
            if (identity == "inverse" && kind == OneParKind::prop1)
                while (x == q || q * x == Scalar(1)) x = rng.nonzero().in(f);
            colours = {{"x", scalar_to_json(x)}, {"z", scalar_to_json(z)}};
            if (kind == OneParKind::prop1 || kind == OneParKind::prop1_coalgebra) params["q"] = scalar_to_json(q);

            std::optional<OneParFamily> fam;
            std::optional<Coalgebra> coalg;
            if (kind == OneParKind::prop1_coalgebra) {
                coalg = dual_coalgebra(*algebra);
                fam.emplace(*coalg, q);
            } else {
                fam.emplace(kind, *algebra, q);
            }
            auto coeffs = [&](const Scalar& a) {
                Coeffs k = fam->coefficients(a);
                k.gamma += shift;
                return k;
            };
            SpectralOperator op = [&](const Scalar& a) {
                if (!shifted) return (*fam)(a);
                return coalg ? ansatz_operator(*coalg, coeffs(a)) : ansatz_operator(*algebra, coeffs(a));
            };
            CompositionMap phi = [&](const Scalar& a, const Scalar& b) { return fam->phi(a, b); };
            if (identity == "qybe") {
                IdentitySides s = onepar_qybe_sides({op, phi}, x, z);
                c.residual = s.residual();
                if (!vanishes(c.residual, tol)) {
                    const Scalar m = phi(x, z);
                    c.operands = sides_json(s);
                    c.operands["phi"] = scalar_to_json(m);
                    c.operands["R12"] = matrix_json(op(x).mat());
                    c.operands["R13"] = matrix_json(op(m).mat());
                    c.operands["R23"] = matrix_json(op(z).mat());
                }
            } else if (identity == "system") {
                c = system_check(eval_onepar_system(coeffs, phi, x, z), tol,
                                 {{"leg12", coeffs_json(coeffs(x))},
                                  {"leg13", coeffs_json(coeffs(phi(x, z)))},
                                  {"leg23", coeffs_json(coeffs(z))}});
            } else {
                if (kind == OneParKind::prop1)
                    c = inverse_check(op(x), prop1_inv(*algebra, q, x), tol);
                else if (kind == OneParKind::prop2)
                    c = inverse_check(op(x), prop2_inv(*algebra, x), tol);
                else
                    throw InvalidInput("no inverse formula for family '" + family + "'");
            }
        } else {
            const Scalar q = scalar(p, "q", rng.nonzero(), f);
            const Scalar sigma = scalar(p, "sigma", 0, f);
            const Scalar x = rng.nonzero().in(f), y = rng.nonzero().in(f);
            colours = {{"x", scalar_to_json(x)}, {"y", scalar_to_json(y)}};
            params["q"] = scalar_to_json(q);
            SpectralOperator rhat = [&](const Scalar& a) {
                return family == "okado" ? okado_rhat(q, a) : twisted_prop1_rhat(q, sigma, a);
            };
            if (family == "twisted_prop1") params["sigma"] = scalar_to_json(sigma);
            IdentitySides s = braid_sides(rhat, x, y);
            c.residual = s.residual();
            if (!vanishes(c.residual, tol)) c.operands = sides_json(s);
        }

        const bool pass = vanishes(c.residual, tol);
        if (worst < abs(c.residual)) worst = abs(c.residual);
        rows.push_back({{"colours", colours}, {"params", params}, {"residual", scalar_to_json(c.residual)}});
        if (!pass && ok) {
            ok = false;
            first_failure = {{"sample", i}, {"identity", identity}, {"colours", colours}, {"params", params},
                             {"residual", scalar_to_json(c.residual)}, {"operands", c.operands}};
        }
    }
    report["samples"] = std::move(rows);
    report["max_residual"] = scalar_to_json(worst);
    report["pass"] = ok;
    if (!ok) report["first_failure"] = first_failure;

    std::ostringstream line;
    line << "verify " << family << " " << identity << ": " << (ok ? "pass" : "FAIL") << " (" << samples
         << " samples, max residual " << worst.str() << ")";
    return {ok, std::move(report), line.str()};
}

// ---- matrix ------------------------------------------------------------------

std::string render(const LabelledMatrix& m, const std::string& format) {
    if (format == "json") return to_json(m).dump(2) + "\n";
    if (format == "latex") return to_latex(m.entries);
    if (format == "csv") {
        std::ostringstream os;
        write_csv(os, m.entries);
        return os.str();
    }
    throw UnknownKind("unknown format '" + format + "'");
}

void emit(const Json& p, const std::string& rendered, Json& report) {
    if (p.contains("out")) {
        const std::filesystem::path out = text(p, "out", "");
        if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
        std::ofstream os(out);
        if (!os || !(os << rendered)) throw InvalidInput("cannot write " + out.string());
        report["written"] = out.string();
    }
}

TaskOutcome run_matrix(const Json& p, const Globals& g) {
    const std::string family = text(p, "family", "thm1");
    const std::string format = text(p, "format", "json");
    const Field f = field_param(p, g);
    Json report;
    report["command"] = "matrix";
    report["family"] = family;
    LabelledMatrix m;
    const Group group = group_of(family);
    if (group == Group::colored) {
        const ColoredKind kind = parse_colored_kind(family);
        const Algebra a = make_algebra(p, f);
        ColoredParams cp{scalar(p, "p", 1, f), scalar(p, "q", 1, f), scalar(p, "s", 1, f)};
        const Scalar u = scalar(p, "u", 2, f), v = scalar(p, "v", 1, f);
        std::optional<ColoredFamily> fam;
        if (kind == ColoredKind::coalgebra_thm1)
            fam.emplace(dual_coalgebra(a), cp);
        else
            fam.emplace(kind, a, cp);
        MatrixForm form = matrix_form(*fam, u, v);
        m = {fam->dim(), form.basis, form.matrix};
        Json sh = Json::object();
        for (const auto& [name, value] : form.shorthand) sh[name] = scalar_to_json(value);
        if (!form.shorthand.empty()) report["shorthand"] = std::move(sh);
        report["algebra"] = algebra_description(p);
        report["colours"] = {{"u", scalar_to_json(u)}, {"v", scalar_to_json(v)}};
    } else if (group == Group::onepar) {
        const OneParKind kind = parse_onepar_kind(family);
        const Algebra a = make_algebra(p, f);
        const Scalar q = scalar(p, "q", 1, f), x = scalar(p, "x", 2, f);
        std::optional<OneParFamily> fam;
        if (kind == OneParKind::prop1_coalgebra)
            fam.emplace(dual_coalgebra(a), q);
        else
            fam.emplace(kind, a, q);
        m = labelled((*fam)(x), fam->labels());
        report["algebra"] = algebra_description(p);
        report["colours"] = {{"x", scalar_to_json(x)}};
    } else {
        const Scalar q = scalar(p, "q", 2, f), x = scalar(p, "x", 3, f);
        const Op2 r = family == "okado" ? okado_rhat(q, x) : twisted_prop1_rhat(q, scalar(p, "sigma", 0, f), x);
        m = labelled(r, quadratic_algebra(Scalar(0)).labels());
        report["colours"] = {{"x", scalar_to_json(x)}};
    }
    const std::string rendered = render(m, format);
    report["format"] = format;
    report["matrix"] = to_json(m);
    if (format != "json") report["text"] = rendered;
    emit(p, rendered, report);
    return {true, std::move(report), "matrix " + family + " (" + std::to_string(m.entries.rows()) + "x" +
                                         std::to_string(m.entries.cols()) + ")"};
}

// ---- search ------------------------------------------------------------------

TaskOutcome run_search(const Json& p, const Globals& g) {
    SearchConfig cfg;
    cfg.shape = parse_shape(text(p, "shape", "linear"));
    cfg.system = parse_system(text(p, "system", "colored"));
    cfg.phi = parse_phi(text(p, "phi", "product"));
    cfg.seed = seed_param(p, g);
    cfg.restarts = static_cast<int>(integer(p, "restarts", 50));
    cfg.threads = static_cast<unsigned>(integer(p, "threads", 1));
    if (p.contains("grid")) {
        const Json& grid = p.at("grid");
        if (cfg.system == SystemKind::colored) {
            cfg.colored_grid.clear();
            for (const auto& t : grid) {
                if (t.size() != 3) throw InvalidInput("coloured grid entries need three colours");
                cfg.colored_grid.push_back({scalar_from_json(t[0], Field::float64).to_double(),
                                            scalar_from_json(t[1], Field::float64).to_double(),
                                            scalar_from_json(t[2], Field::float64).to_double()});
            }
        } else {
            cfg.onepar_grid.clear();
            for (const auto& t : grid) {
                if (t.size() != 2) throw InvalidInput("one-parameter grid entries need two colours");
                cfg.onepar_grid.push_back({scalar_from_json(t[0], Field::float64).to_double(),
                                           scalar_from_json(t[1], Field::float64).to_double()});
            }
        }
    }
    const auto results = search(cfg);

    Json report;
    report["command"] = "search";
    report["shape"] = to_string(cfg.shape);
    report["system"] = to_string(cfg.system);
    if (cfg.system == SystemKind::onepar) report["phi"] = to_string(cfg.phi);
    report["seed"] = cfg.seed;
    report["restarts"] = cfg.restarts;
    std::map<std::string, int> counts;
    Json rows = Json::array();
    for (const auto& r : results) {
        counts[to_string(r.classification)]++;
        rows.push_back({{"restart", r.restart},
                        {"seed", r.seed},
                        {"params", r.params},
                        {"objective", r.objective},
                        {"holdout_objective", r.holdout_objective},
                        {"iterations", r.iterations},
                        {"classification", to_string(r.classification)}});
    }
    report["counts"] = counts;
    report["results"] = std::move(rows);

    bool ok = true;
    if (p.contains("require")) {
        // Passes when some converged result carries one of the listed classifications.
        const auto wanted = p.at("require").get<std::vector<std::string>>();
        for (const auto& w : wanted) {
            bool known = false;
            for (int c = 0; c <= static_cast<int>(Classification::not_converged); ++c)
                known = known || w == to_string(static_cast<Classification>(c));
            if (!known) throw UnknownKind("unknown classification '" + w + "'");
        }
        ok = false;
        for (const auto& r : results)
            if (r.objective < cfg.converged_tol &&
                std::find(wanted.begin(), wanted.end(), to_string(r.classification)) != wanted.end())
                ok = true;
        report["require"] = wanted;
        report["pass"] = ok;
    }
    emit(p, report.dump(2) + "\n", report);

    std::ostringstream line;
    line << "search " << report["shape"].get<std::string>() << "/" << report["system"].get<std::string>() << ":";
    for (const auto& [k, n] : counts) line << " " << k << "=" << n;
    return {ok, std::move(report), line.str()};
}

// ---- frt ---------------------------------------------------------------------

Json poly_json(const NCPoly& x) { return x.str(); }

struct FrtSample {
    Rational u, v, p, q, sigma;
};

Json frt_sample(const FrtSample& s, RelationList list, bool& ok) {
    const Matrix r = thm1_op(quadratic_algebra(Scalar(s.sigma)), s.p, s.q, s.u, s.v).mat();
    const auto entries = rtt_residual(r);
    const RelationSet rels = list == RelationList::claimed ? claimed_relations(s.u, s.v, s.p, s.q, s.sigma)
                                                           : pq_limit_relations(s.sigma, s.u, s.v);
    const SpanReport rep = span_membership(entries, rels);
    const bool symmetric = uv_symmetry_check(rels);
    const SpanReport closed = span_membership(entries, with_exchange(rels));

    Json j;
    j["params"] = {{"u", s.u.get_str()}, {"v", s.v.get_str()}, {"p", s.p.get_str()}, {"q", s.q.get_str()},
                   {"sigma", s.sigma.get_str()}};
    j["relations"] = Json::array();
    for (std::size_t i = 0; i < rels.size(); ++i)
        j["relations"].push_back({{"label", rels.labels[i]}, {"poly", poly_json(rels.relations[i])}});
    Json rows = Json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& m = rep.entries[i];
        Json e{{"row", i / 4}, {"col", i % 4}, {"entry", poly_json(entries[i])}, {"member", m.member}};
        if (m.member) {
            Json coeffs = Json::array();
            for (const auto& c : m.coefficients) coeffs.push_back(c.get_str());
            e["coefficients"] = std::move(coeffs);
        } else {
            e["residue"] = poly_json(m.residue);
        }
        rows.push_back(std::move(e));
    }
    j["entries"] = std::move(rows);
    j["members"] = rep.member_count();
    j["entries_rank"] = rep.entries_rank;
    j["relations_rank"] = rep.relations_rank;
    j["joint_rank"] = rep.joint_rank;
    j["relations_in_entry_span"] = rep.relations_in_entries();
    j["uv_symmetric"] = symmetric;
    j["with_exchange"] = {{"members", closed.member_count()},
                          {"relations_rank", closed.relations_rank},
                          {"joint_rank", closed.joint_rank}};
    const bool pass = rep.all_members() && symmetric;
    j["pass"] = pass;
    ok = ok && pass;
    return j;
}

TaskOutcome run_frt(const Json& p, const Globals& g) {
    const std::string list_name = text(p, "list", "claimed");
    RelationList list;
    if (list_name == "claimed")
        list = RelationList::claimed;
    else if (list_name == "pq_limit")
        list = RelationList::pq_limit;
    else
        throw UnknownKind("unknown relation list '" + list_name + "'");

    auto rat = [&](const char* key, const Rational& def) { return scalar(p, key, def, Field::rational).rational(); };
    std::vector<FrtSample> samples;
    const long long count = integer(p, "samples", 0);
    if (count > 0) {
        Sampler rng(seed_param(p, g));
        while (static_cast<long long>(samples.size()) < count) {
            FrtSample s{rng.rational().rational(), rng.rational().rational(), rng.nonzero().rational(),
                        rng.nonzero().rational(), rat("sigma", 0)};
            if (p.contains("p")) s.p = rat("p", 1);
            if (p.contains("q")) s.q = rat("q", 1);
            if (list == RelationList::pq_limit) s.p = s.q;
            if (s.u == s.v || s.p * s.u == s.q * s.v || s.q * s.u == s.p * s.v) continue;
            samples.push_back(s);
        }
    } else {
        FrtSample s{rat("u", 2), rat("v", 1), rat("p", 1), rat("q", 3), rat("sigma", 0)};
        if (list == RelationList::pq_limit) s.p = s.q;
        samples.push_back(s);
    }

    bool ok = true;
    Json report;
    report["command"] = "frt";
    report["list"] = list_name;
    report["samples"] = Json::array();
    std::size_t members = 0;
    for (const auto& s : samples) {
        report["samples"].push_back(frt_sample(s, list, ok));
        members += report["samples"].back()["members"].get<std::size_t>();
    }
    report["pass"] = ok;
    emit(p, report.dump(2) + "\n", report);
    std::ostringstream line;
    line << "frt " << list_name << ": " << (ok ? "pass" : "FAIL") << " (" << members << "/" << 16 * samples.size()
         << " residual entries in the relation span)";
    return {ok, std::move(report), line.str()};
}

// ---- ybsystem ---------------------------------------------------------------

TaskOutcome run_ybsystem(const Json& p, const Globals& g) {
    const Field f = field_param(p, g);
    const double tol = tol_param(p, g);
    Json q = p;
    if (!q.contains("sigma") && !q.contains("algebra")) q["sigma"] = 0;
    const Algebra a = make_algebra(q, f);
    const Scalar lambda = scalar(p, "lambda", 1, f), mu = scalar(p, "mu", 1, f);
    const WXZSystem sys = thm3_system(a, lambda, mu);
    const auto res = wxz_residuals(sys);
    const std::string format = text(p, "emit", "json");

    Json report;
    report["command"] = "ybsystem";
    report["algebra"] = algebra_description(q);
    report["lambda"] = scalar_to_json(lambda);
    report["mu"] = scalar_to_json(mu);
    static constexpr const char* names[] = {"WWW", "ZZZ", "WXX", "XXZ"};
    bool ok = true;
    Json rj;
    for (std::size_t i = 0; i < 4; ++i) {
        rj[names[i]] = scalar_to_json(res[i]);
        ok = ok && vanishes(res[i], tol);
    }
    report["residuals"] = rj;
    std::string rendered;
    Json ms;
    for (const auto& [name, op] : {std::pair{"W", &sys.w}, std::pair{"X", &sys.x}, std::pair{"Z", &sys.z}}) {
        LabelledMatrix m = labelled(*op, a.labels());
        ms[name] = to_json(m);
        if (format != "json") rendered += std::string("% ") + name + "\n" + render(m, format);
    }
    report["matrices"] = std::move(ms);
    if (format == "json")
        rendered = report.dump(2) + "\n";
    else
        report["text"] = rendered;
    report["pass"] = ok;
    emit(p, rendered, report);
    return {ok, std::move(report), std::string("ybsystem: ") + (ok ? "pass" : "FAIL")};
}

// ---- compare -----------------------------------------------------------------

TaskOutcome run_compare(const Json& p, const Globals& g) {
    const Field f = field_param(p, g);
    const double tol = tol_param(p, g);
    const Scalar q = scalar(p, "q", 2, f), x = scalar(p, "x", 3, f), y = scalar(p, "y", 5, f);
    const Scalar sigma = scalar(p, "sigma", 0, f);
    std::vector<Scalar> xs;
    if (p.contains("xs"))
        for (const auto& v : p.at("xs")) xs.push_back(scalar_from_json(v, f));
    else
        xs = {Scalar(1).in(f), Scalar(2).in(f), Scalar(3).in(f)};

    SpectralOperator ok_op = [&](const Scalar& a) { return okado_rhat(q, a); };
    SpectralOperator tw_op = [&](const Scalar& a) { return twisted_prop1_rhat(q, sigma, a); };
    const Scalar r_ok = braid_residual(ok_op, x, y);
    const Scalar r_tw = braid_residual(tw_op, x, y);

    Json report;
    report["command"] = "compare";
    report["q"] = scalar_to_json(q);
    report["sigma"] = scalar_to_json(sigma);
    report["x"] = scalar_to_json(x);
    report["y"] = scalar_to_json(y);
    report["okado"] = matrix_json(okado_rhat(q, x).mat());
    report["twisted_prop1"] = matrix_json(twisted_prop1_rhat(q, sigma, x).mat());
    report["braid_residual"] = {{"okado", scalar_to_json(r_ok)}, {"twisted_prop1", scalar_to_json(r_tw)}};

    Json q1 = Json::array();
    for (const auto& e : compare_q1(xs).entries)
        q1.push_back({{"x", scalar_to_json(e.x)},
                      {"okado", matrix_json(e.okado)},
                      {"twisted_prop1", matrix_json(e.twisted)},
                      {"difference", matrix_json(e.difference)},
                      {"verdict", to_string(e.verdict)},
                      {"ratio", scalar_to_json(e.ratio)}});
    report["q1"] = std::move(q1);
    const bool ok = vanishes(r_ok, tol) && vanishes(r_tw, tol);
    report["pass"] = ok;
    emit(p, report.dump(2) + "\n", report);
    std::string verdicts;
    for (const auto& e : report["q1"]) verdicts += " x=" + e["x"].dump() + ":" + e["verdict"].get<std::string>();
    return {ok, std::move(report), std::string("compare: braid ") + (ok ? "pass" : "FAIL") + ";" + verdicts};
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

TaskOutcome run_task(const std::string& command, const Json& params, const Globals& g) {
    if (!params.is_object() && !params.is_null()) throw InvalidInput("task params must be an object");
    const Json p = params.is_null() ? Json::object() : params;
    if (command == "verify") return run_verify(p, g);
    if (command == "matrix") return run_matrix(p, g);
    if (command == "search") return run_search(p, g);
    if (command == "frt") return run_frt(p, g);
    if (command == "ybsystem") return run_ybsystem(p, g);
    if (command == "compare") return run_compare(p, g);
    throw UnknownKind("unknown command '" + command + "'");
}

int run_campaign(const Json& config, Globals g, std::ostream& log) {
    struct Task {
        std::string name, command, expect;
        Json params;
    };
    std::vector<Task> tasks;
    try {
        if (!config.is_object() || !config.contains("tasks") || !config.at("tasks").is_array())
            throw InvalidInput("campaign needs a \"tasks\" array");
        std::size_t i = 0;
        for (const auto& t : config.at("tasks")) {
            Task task;
            task.command = t.at("command").get<std::string>();
            task.name = t.contains("name") ? t.at("name").get<std::string>() : "task" + std::to_string(i);
            task.expect = t.contains("expect") ? t.at("expect").get<std::string>() : "pass";
            if (task.expect != "pass" && task.expect != "fail") throw InvalidInput("expect must be pass or fail");
            task.params = t.contains("params") ? t.at("params") : Json::object();
            tasks.push_back(std::move(task));
            ++i;
        }
    } catch (const Json::exception& e) {
        log << "error: bad campaign config: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        log << "error: " << e.what() << '\n';
        return kUsageError;
    }

    const std::string started = timestamp();
    struct Result {
        std::optional<TaskOutcome> outcome;
        std::string error;
    };
    std::vector<std::future<Result>> futures;
    for (const auto& t : tasks)
        futures.push_back(std::async(std::launch::async, [&t, &g]() -> Result {
            try {
                return {run_task(t.command, t.params, g), {}};
            } catch (const std::exception& e) {
                return {std::nullopt, e.what()};
            }
        }));

    int code = kOk;
    Json summary = Json::array();
    bool reported_failure = false;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& t = tasks[i];
        Result r = futures[i].get();
        if (!r.outcome) {
            log << "error: task '" << t.name << "': " << r.error << '\n';
            summary.push_back({{"name", t.name}, {"command", t.command}, {"error", r.error}});
            code = kUsageError;
            continue;
        }
        const bool matched = r.outcome->ok == (t.expect == "pass");
        Json out{{"name", t.name},  {"command", t.command},  {"params", t.params},
                 {"expect", t.expect}, {"ok", r.outcome->ok}, {"matched", matched},
                 {"report", r.outcome->report}};
        write_json(g.out_dir / (t.name + ".json"), out);
        summary.push_back({{"name", t.name}, {"command", t.command}, {"expect", t.expect}, {"ok", r.outcome->ok},
                           {"matched", matched}});
        log << (matched ? "ok   " : "FAIL ") << t.name << ": " << r.outcome->summary << '\n';
        if (!matched) {
            if (code == kOk) code = kVerificationFailed;
            if (!reported_failure && r.outcome->report.contains("first_failure")) {
                log << "     first failing identity: " << r.outcome->report["first_failure"].dump() << '\n';
                reported_failure = true;
            }
        }
    }
    write_json(g.out_dir / "summary.json", Json{{"seed", g.seed}, {"field", to_string(g.field)}, {"tasks", summary},
                                                {"exit_code", code}});
    char host[256] = {};
    gethostname(host, sizeof host - 1);
    write_json(g.out_dir / "metadata.json",
               Json{{"started", started}, {"finished", timestamp()}, {"host", std::string(host)}});
    return code;
}

}  // namespace ybalg::cli
