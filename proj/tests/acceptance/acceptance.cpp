// Acceptance gate: one PASS/FAIL line per criterion.
//
// Exit status is 0 iff the set of failing criteria equals --known-red
// (default: empty). A known-red criterion still prints FAIL with its
// diagnostics; it only stops a red criterion from failing the whole run,
// and a known-red criterion that unexpectedly passes fails the run.

#include "oracles.hpp"
#include "ybalg/colored.hpp"
#include "ybalg/compare.hpp"
#include "ybalg/error.hpp"
#include "ybalg/frt.hpp"
#include "ybalg/funceq.hpp"
#include "ybalg/onepar.hpp"
#include "ybalg/search.hpp"
#include "ybalg/ybsystem.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace ybalg;
using oracle::q;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            if (notes.size() < 12) notes.push_back(what);
        }
    }
    template <typename Ex, typename F>
    void require_throws(F&& f, const std::string& what) {
        try {
            f();
        } catch (const Ex&) {
            return;
        } catch (...) {
        }
        require(false, what + " did not raise the expected error");
    }
};

std::vector<Algebra> thm1_algebras() {
    return {quadratic_algebra(0), quadratic_algebra(1), cubic_algebra(0, 0), cubic_algebra(2, 5), cubic_algebra(1, 0)};
}

std::string s(const Scalar& x) { return x.str(); }

// ---- 1 --------------------------------------------------------------------

Outcome thm1_residual() {
    Outcome o;
    oracle::Rng rng(101);
    int checked = 0;
    for (const Algebra& a : thm1_algebras())
        for (int i = 0; i < 10; ++i) {
            const Scalar p = rng.rational(), qq = rng.rational(), u = rng.rational(), v = rng.rational(),
                         w = rng.rational();
            ColoredOperator f = [&](const Scalar& x, const Scalar& y) { return thm1_op(a, p, qq, x, y); };
            const Scalar r = colored_qybe_residual(f, u, v, w);
            o.require(r.is_exact() && r.is_zero(), "dim " + std::to_string(a.dim()) + " p=" + s(p) + " q=" + s(qq) +
                                                       " (u,v,w)=(" + s(u) + "," + s(v) + "," + s(w) + ")");
            ++checked;
        }
    o.notes.insert(o.notes.begin(), std::to_string(checked) + " exact samples over 5 algebras");
    return o;
}

// ---- 2 --------------------------------------------------------------------

Outcome matrices() {
    Outcome o;
    oracle::Rng rng(202);
    for (int i = 0; i < 6; ++i) {
        const Scalar sigma = rng.rational(), p = rng.rational(), qq = rng.rational(), u = rng.rational(),
                     v = rng.rational();
        o.require(thm1_op(quadratic_algebra(sigma), p, qq, u, v).mat() == oracle::poly_quadratic_matrix(sigma, p, qq, u, v), "poly_quadratic_matrix");

        const Scalar p2 = rng.nonzero(), q2 = rng.nonzero(), s2 = rng.nonzero();
        const long iu = rng.integer(-3, 3), iv = rng.integer(-3, 3);
        o.require(thm2_op(quadratic_algebra(sigma), p2, q2, s2, Scalar(iu), Scalar(iv)).mat() ==
                      oracle::exp_quadratic_matrix(sigma, p2, q2, s2, iu, iv),
                  "exp_quadratic_matrix");

        const Scalar x = rng.rational();
        o.require(prop1_op(quadratic_algebra(sigma), qq, x).mat() == oracle::onepar_quadratic_matrix(sigma, qq, x), "onepar_quadratic_matrix");

        const Scalar l = rng.rational(), m = rng.rational();
        const WXZSystem sys = thm3_system(quadratic_algebra(sigma), l, m);
        o.require(sys.w.mat() == oracle::w_matrix(sigma, l), "w_matrix");
        o.require(sys.z.mat() == oracle::z_matrix(sigma, m), "z_matrix");
        o.require(sys.x.mat() == oracle::x_matrix(sigma), "x_matrix");

        const Scalar eps = rng.nonzero(), rho = rng.nonzero();
        const Algebra b = cubic_algebra(eps, rho);
        o.require(thm1_op(b, p, qq, u, v).mat() == oracle::poly_cubic_matrix(eps, rho, p, qq, u, v), "poly_cubic_matrix");
        o.require(thm2_op(b, p2, q2, s2, Scalar(iu), Scalar(iv)).mat() ==
                      oracle::exp_cubic_matrix(eps, rho, p2, q2, s2, iu, iv),
                  "9x9 exponential matrix");
    }
    o.notes.insert(o.notes.begin(), "6 samples per reference matrix");
    return o;
}

// ---- 3 --------------------------------------------------------------------

Outcome inverses() {
    Outcome o;
    oracle::Rng rng(303);
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    for (const Algebra& a : thm1_algebras()) {
        const Op2 id = identity_op2(a.dim());
        for (int i = 0; i < 3;) {
            const Scalar p = rng.rational(), qq = rng.rational(), u = rng.rational(), v = rng.rational();
            if (p * u == qq * v || qq * u == p * v) continue;
            const Op2 r = thm1_op(a, p, qq, u, v), ri = thm1_inv(a, p, qq, u, v);
            o.require(r * ri == id && ri * r == id, "thm1 inverse at p=" + s(p) + " q=" + s(qq));
            ++i, ++n1;
        }
        for (int i = 0; i < 3; ++i, ++n2) {
            const Scalar p = rng.nonzero(), qq = rng.nonzero(), ss = rng.nonzero();
            const Scalar u(rng.integer(-3, 3)), v(rng.integer(-3, 3));
            const Op2 r = thm2_op(a, p, qq, ss, u, v), ri = thm2_inv(a, p, qq, ss, u, v);
            o.require(r * ri == id && ri * r == id, "thm2 inverse");
        }
        for (int i = 0; i < 3;) {
            const Scalar qq = rng.rational(), x = rng.rational();
            if (x == qq || qq * x == Scalar(1)) continue;
            const Op2 r = prop1_op(a, qq, x), ri = prop1_inv(a, qq, x);
            o.require(r * ri == id && ri * r == id, "prop1 inverse");
            ++i, ++n3;
        }
        for (int i = 0; i < 3; ++i, ++n4) {
            const Scalar x = rng.nonzero();
            const Op2 r = prop2_op(a, x), ri = prop2_inv(a, x);
            o.require(r * ri == id && ri * r == id, "prop2 inverse");
        }
    }
    const Algebra a = quadratic_algebra(1);
    o.require_throws<SingularColour>([&] { thm1_inv(a, 2, 3, 3, 2); }, "thm1_inv at pu = qv");
    o.require_throws<SingularColour>([&] { thm1_inv(a, 2, 3, 2, 3); }, "thm1_inv at qu = pv");
    o.require_throws<ZeroParameter>([&] { thm2_inv(a, 2, 0, 3, 1, 1); }, "thm2_inv with q = 0");
    o.require_throws<SingularColour>([&] { prop1_inv(a, 2, 2); }, "prop1_inv at x = q");
    o.require_throws<SingularColour>([&] { prop1_inv(a, 2, q(1, 2)); }, "prop1_inv at qx = 1");
    o.require_throws<ZeroParameter>([&] { prop2_inv(a, 0); }, "prop2_inv at x = 0");
    o.notes.insert(o.notes.begin(), "samples thm1/thm2/prop1/prop2 = " + std::to_string(n1) + "/" + std::to_string(n2) +
                                        "/" + std::to_string(n3) + "/" + std::to_string(n4));
    return o;
}

// ---- 4 --------------------------------------------------------------------

bool zero(const SystemResidual& r) {
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

Outcome systems() {
    Outcome o;
    const SearchConfig grid;
    for (const char* kind : {"thm1", "thm2", "remark2"}) {
        const CatalogueEntry e = catalogue(kind, {2, 3, 5});
        for (const auto& [u, v, w] : grid.colored_grid) {
            // Exact exponentials need integer colours; the fractional grid
            // point is checked for the polynomial family only.
            const Scalar su = Scalar(u).in(Field::rational), sv = Scalar(v).in(Field::rational),
                         sw = Scalar(w).in(Field::rational);
            if (std::string(kind) != "thm1" && !(su.is_integer() && sv.is_integer() && sw.is_integer())) {
                // Irrational values there; checked in float mode instead,
                // relative to the cube of the largest coefficient.
                double m = 0;
                for (const auto& [x, y] : {std::pair{u, v}, {u, w}, {v, w}})
                    for (const Coeffs k = e.colored(Scalar(x), Scalar(y)); const Scalar& c : {k.alpha, k.beta, k.gamma})
                        m = std::max(m, std::abs(c.to_double()));
                const double r = max_abs(eval_colored_system(e.colored, Scalar(u), Scalar(v), Scalar(w))).to_double();
                o.require(r <= 1e-12 * m * m * m, std::string(kind) + " on the fractional grid point (float)");
                continue;
            }
            o.require(zero(eval_colored_system(e.colored, su, sv, sw)), std::string(kind) + " on the grid");
        }
    }
    for (const char* kind : {"prop1", "prop2", "remark_x"}) {
        const CatalogueEntry e = catalogue(kind, {1, 3});
        for (const auto& [x, z] : grid.onepar_grid)
            o.require(zero(eval_onepar_system(e.onepar, e.phi, Scalar(x).in(Field::rational), Scalar(z).in(Field::rational))),
                      std::string(kind) + " on the grid");
    }
    oracle::Rng rng(404);
    for (const Scalar c : {Scalar(2), Scalar(-3), q(1, 5)})
        for (int i = 0; i < 5; ++i) {
            const Scalar a = rng.rational(), b = rng.rational(), g = rng.rational();
            ColoredCoeffFn t = [=](const Scalar& u, const Scalar& v) { return Coeffs{a * u - v, b * v + 1, g * u * u}; };
            ColoredCoeffFn ct = [=](const Scalar& u, const Scalar& v) { return c * t(u, v); };
            OneParCoeffFn f = [=](const Scalar& x) { return Coeffs{a + x, b * x, g - x}; };
            OneParCoeffFn cf = [=](const Scalar& x) { return c * f(x); };
            const Scalar u = rng.rational(), v = rng.rational(), w = rng.rational();
            const auto r = eval_colored_system(t, u, v, w), cr = eval_colored_system(ct, u, v, w);
            const auto fr = eval_onepar_system(f, phi_product, u, v), cfr = eval_onepar_system(cf, phi_product, u, v);
            for (std::size_t k = 0; k < 5; ++k) {
                o.require(cr[k] == c * c * c * r[k], "coloured homogeneity, c=" + s(c));
                o.require(cfr[k] == c * c * c * fr[k], "one-parameter homogeneity, c=" + s(c));
            }
        }
    return o;
}

// ---- 5 --------------------------------------------------------------------

std::string positions(const SpanReport& r) {
    std::string out;
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        if (!r.entries[i].member) out += (out.empty() ? "" : ",") + std::to_string(i);
    return out.empty() ? "none" : out;
}

Matrix thm1_matrix(int sigma, const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v) {
    return thm1_op(quadratic_algebra(sigma), p, q, u, v).mat();
}

Outcome frt_span() {
    Outcome o;
    oracle::Rng rng(505);
    std::size_t worst_members = 16, worst_limit = 16;
    bool symmetric = true, closed_ok = true;
    std::string first_detail;
    for (int sigma : {0, 1})
        for (int i = 0; i < 5;) {
            const Scalar u = rng.rational(), v = rng.rational(), p = rng.nonzero(), qq = rng.nonzero();
            if (u == v || p * u == qq * v || qq * u == p * v || p == qq) continue;
            ++i;
            const Rational S(sigma);
            const RelationSet rels = claimed_relations(u.rational(), v.rational(), p.rational(), qq.rational(), S);
            const auto entries = rtt_residual(thm1_matrix(sigma, p, qq, u, v));
            const SpanReport rep = span_membership(entries, rels);
            worst_members = std::min(worst_members, rep.member_count());
            const bool sym = uv_symmetry_check(rels);
            symmetric = symmetric && sym;
            const SpanReport closed = span_membership(entries, with_exchange(rels));
            closed_ok = closed_ok && closed.all_members();
            if (first_detail.empty() && !rep.all_members()) {
                std::ostringstream d;
                d << "sigma=" << sigma << " (u,v,p,q)=(" << s(u) << "," << s(v) << "," << s(p) << "," << s(qq)
                  << "): entries outside span at row-major positions " << positions(rep) << "; ranks entries/relations/joint = "
                  << rep.entries_rank << "/" << rep.relations_rank << "/" << rep.joint_rank;
                first_detail = d.str();
            }
            // p = q limit.
            const RelationSet lim = pq_limit_relations(S, u.rational(), v.rational());
            const auto lim_entries = rtt_residual(thm1_matrix(sigma, p, p, u, v));
            worst_limit = std::min(worst_limit, span_membership(lim_entries, lim).member_count());
        }
    o.require(worst_members == 16, "claimed list: as few as " + std::to_string(worst_members) + "/16 entries in span");
    o.require(worst_limit == 16, "p = q list: as few as " + std::to_string(worst_limit) + "/16 entries in span");
    o.require(symmetric, "exchange symmetry check fails");
    if (!first_detail.empty()) o.notes.push_back(first_detail);
    o.notes.push_back(std::string("adding the u<->v exchanged relations ") +
                      (closed_ok ? "puts every entry in the span at every sample" : "still leaves entries outside"));
    return o;
}

// ---- 6 --------------------------------------------------------------------

Outcome wxz() {
    Outcome o;
    for (int sigma : {0, 1})
        for (const auto& [l, m] : {std::pair{Scalar(1), Scalar(1)}, {Scalar(3), Scalar(5)}, {Scalar(-2), q(1, 2)}}) {
            const auto r = wxz_residuals(thm3_system(quadratic_algebra(sigma), l, m));
            for (const auto& x : r)
                o.require(x.is_exact() && x.is_zero(), "sigma=" + std::to_string(sigma) + " lambda=" + s(l) + " mu=" + s(m));
        }
    return o;
}

// ---- 7 --------------------------------------------------------------------

Outcome braid() {
    Outcome o;
    const Scalar triples[][3] = {{2, 3, 5}, {3, q(1, 2), 4}, {q(1, 2), 2, 3}};
    for (const auto& t : triples) {
        SpectralOperator ok = [&](const Scalar& x) { return okado_rhat(t[0], x); };
        SpectralOperator tw = [&](const Scalar& x) { return twisted_prop1_rhat(t[0], 0, x); };
        const std::string at = "(q,x,y)=(" + s(t[0]) + "," + s(t[1]) + "," + s(t[2]) + ")";
        o.require(braid_residual(ok, t[1], t[2]).is_zero(), "Okado braid residual at " + at);
        o.require(braid_residual(tw, t[1], t[2]).is_zero(), "twisted braid residual at " + at);
    }
    const CompareReport r = compare_q1({1, 2, 3});
    o.require(r.entries.size() == 3, "q = 1 report has three entries");
    std::string verdicts;
    for (const auto& e : r.entries) verdicts += (verdicts.empty() ? "" : ", ") + ("x=" + s(e.x) + " " + to_string(e.verdict));
    o.notes.push_back("q = 1 verdicts: " + verdicts);
    return o;
}

// ---- 8 --------------------------------------------------------------------

Outcome search_criterion() {
    Outcome o;
    SearchConfig cfg;
    cfg.seed = 42;
    cfg.restarts = 50;
    const auto first = search(cfg);
    const auto again = search(cfg);
    cfg.threads = 4;
    const auto threaded = search(cfg);
    int hits = 0;
    for (const auto& r : first)
        hits += r.objective < 1e-8 &&
                (r.classification == Classification::thm1_family || r.classification == Classification::degenerate);
    o.require(hits >= 1, "no thm1-family or degenerate result below 1e-8");
    bool same = first.size() == again.size() && first.size() == threaded.size();
    for (std::size_t i = 0; same && i < first.size(); ++i)
        same = first[i].params == again[i].params && first[i].params == threaded[i].params &&
               first[i].objective == threaded[i].objective && first[i].classification == threaded[i].classification;
    o.require(same, "results differ between runs or thread counts");
    o.notes.push_back(std::to_string(hits) + " qualifying results of 50");
    return o;
}

// ---- 9 --------------------------------------------------------------------

Outcome properties() {
    Outcome o;
    oracle::Rng rng(909);
    const Algebra b = cubic_algebra(2, 5);
    // Gauge invariance.
    auto phi = [](const Scalar& u, const Scalar& v) { return u + 2 * v + 1; };
    ColoredOperator plain = [&](const Scalar& u, const Scalar& v) { return thm1_op(b, 1, 3, u, v); };
    ColoredOperator gauged = [&](const Scalar& u, const Scalar& v) { return phi(u, v) * plain(u, v); };
    for (int i = 0; i < 5; ++i) {
        const Scalar u = rng.rational(), v = rng.rational(), w = rng.rational();
        o.require(colored_qybe_residual(gauged, u, v, w).is_zero(), "gauge invariance");
    }
    // Leg embedding against leg-wise application.
    const Op2 r = thm1_op(b, q(1), q(2), q(3), q(-1, 2));
    const std::pair<Legs, oracle::Legs> legs[] = {
        {Legs::l12, oracle::Legs::l12}, {Legs::l13, oracle::Legs::l13}, {Legs::l23, oracle::Legs::l23}};
    for (int i = 0; i < 5; ++i) {
        Vector t;
        for (int k = 0; k < 27; ++k) t.push_back(rng.rational());
        for (const auto& [mine, ref] : legs)
            o.require(embed_leg(r, mine).mat() * t == oracle::apply_leg(r.mat(), 3, ref, t), "leg embedding");
    }
    // Twist involution.
    for (int i = 0; i < 5; ++i) {
        const Op2 x = thm1_op(b, rng.rational(), rng.rational(), rng.rational(), rng.rational());
        o.require(twist_compose(twist_compose(x)) == x, "twist involution");
    }
    // thm1 with p = 1 is v times prop1 at u/v.
    for (const Algebra& a : thm1_algebras())
        for (int i = 0; i < 5; ++i) {
            const Scalar qq = rng.rational(), u = rng.rational(), v = rng.nonzero();
            o.require(thm1_op(a, 1, qq, u, v).mat() == v * prop1_op(a, qq, u / v).mat(), "scaling relation");
        }
    // Coalgebra operator on the dual coalgebra is the transpose.
    for (const Algebra& a : thm1_algebras())
        for (int i = 0; i < 5; ++i) {
            const Scalar p = rng.rational(), qq = rng.rational(), u = rng.rational(), v = rng.rational();
            o.require(coalgebra_colored_op(dual_coalgebra(a), p, qq, u, v).mat() == thm1_op(a, p, qq, u, v).mat().transpose(),
                      "duality");
        }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> known_red;
    app.add_option("--known-red", known_red, "criteria expected to fail")->delimiter(',');
    CLI11_PARSE(app, argc, argv);
    const std::set<int> expected(known_red.begin(), known_red.end());

    const std::vector<Criterion> criteria = {
        {1, "coloured QYBE for the first family", 5, thm1_residual},
        {2, "reference matrices", 5, matrices},
        {3, "inverses", 5, inverses},
        {4, "functional systems", 5, systems},
        {5, "RTT entries in the relation span", 10, frt_span},
        {6, "WXZ systems", 2, wxz},
        {7, "braid relation and q = 1 comparison", 2, braid},
        {8, "seeded search", 60, search_criterion},
        {9, "property suites", 5, properties},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s) o.require(false, "over the runtime budget");
        if (!o.pass) failed.insert(c.id);
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
                  << static_cast<long>(secs * 1000) << " ms)" << (o.pass || !expected.count(c.id) ? "" : "  [known red]")
                  << "\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    }
    if (failed == expected) return 0;
    for (int id : failed)
        if (!expected.count(id)) std::cout << "unexpected failure: criterion " << id << "\n";
    for (int id : expected)
        if (!failed.count(id)) std::cout << "known-red criterion " << id << " now passes; update --known-red\n";
    return 1;
}
