#include "run.hpp"

#include "fmethod/dualizer.hpp"
#include "fmethod/fischer.hpp"
#include "fmethod/reps.hpp"
#include "fmethod/singular.hpp"
#include "fmethod/verma.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fmethod::cli {

using nlohmann::json;

namespace {

struct Options {
    int n = 1;
    std::string lambda = "0";
    int a = 1;
    int max_m = 4;
    int max_q = 3;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    bool no_timing = false;
    std::string sigma;
    bool geometric = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GaussScalar parse_lambda(const std::string& s) {
    try {
        return GaussScalar::parse(s);
    } catch (const std::exception& e) {
        throw UsageError("malformed --lambda '" + s + "': " + e.what());
    }
}

void add_defect(RunReport& r, std::string name, std::string expected, std::string got, std::size_t terms) {
    r.details.push_back({std::move(name), std::move(expected), std::move(got), terms});
}

// Zero-or-residual record for an operator identity.
template <class T>
void add_equality(RunReport& r, std::string name, const T& expected, const T& got) {
    const T diff = got - expected;
    r.details.push_back({std::move(name), expected.to_string(), got.to_string(), diff.terms().size()});
}

// Seeded polynomial with z-degree 0, xy-degree <= max_m, q-degree <= max_q.
PolyVec random_vector(int n, int max_m, int max_q, std::mt19937_64& rng) {
    const VarSpace s = fourier_space(n);
    std::vector<Exps> pool;
    for (int m = 0; m <= max_m; ++m)
        for (auto& k : slice_basis(s, m, max_q))
            if (z_degree(s, k) == 0) pool.push_back(std::move(k));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    PolyVec v(s);
    for (int t = 0; t < 6; ++t) v.add_term(pool[pick(rng)], GaussScalar(Rational(coef(rng)), Rational(coef(rng))));
    return v;
}

void cmd_verify_rep(const Options& o, RunReport& r) {
    const RepParams p{o.n, parse_lambda(o.lambda)};
    Rep rep;
    if (o.geometric) {
        const SigmaModel sigma = SigmaModel::parse(o.sigma.empty() ? "ssw_dual" : o.sigma);
        r.params["picture"] = "geometric";
        r.params["sigma"] = sigma.name();
        rep = [p, sigma](const BasisElem& x) { return pi_geom(p, sigma, x); };
    } else if (!o.sigma.empty()) {
        const SigmaModel sigma = SigmaModel::parse(o.sigma);
        r.params["picture"] = "fourier";
        r.params["sigma"] = sigma.name();
        rep = [p, sigma](const BasisElem& x) { return pi_hat_general(p, sigma, x); };
    } else {
        r.params["picture"] = "fourier";
        rep = [p](const BasisElem& x) { return pi_hat(p, x); };
    }
    const DefectReport d = check_homomorphism(rep, o.n);
    for (const auto& e : d.defects)
        add_defect(r, "[" + e.x.name() + "," + e.y.name() + "]", "0", e.defect.to_string(), e.defect.size());
    add_defect(r, "basis pairs checked", std::to_string(d.pairs_checked), std::to_string(d.pairs_checked), 0);
}

void cmd_verify_sl2(const Options& o, RunReport& r) {
    for (const auto& rel : sl2_relations(o.n)) add_equality(r, rel.name, rel.expected, rel.got);
}

void cmd_verify_fischer(const Options& o, RunReport& r) {
    for (int m = 0; m <= o.max_m; ++m) {
        const HarmonicSlice slice = mm_basis(o.n, m, o.max_q);
        for (std::size_t b = 0; b < slice.basis.size(); ++b)
            for (int rr = 1; rr <= 6; ++rr) {
                const LadderResult lr = ladder_check(o.n, m, rr, slice.basis[b]);
                if (!lr.ok)
                    add_defect(r, "ladder m=" + std::to_string(m) + " r=" + std::to_string(rr) + " v=" +
                                      slice.basis[b].to_string(),
                               "identity", lr.detail, 1);
            }
        add_defect(r, "ladder m=" + std::to_string(m), "dim M_m box", std::to_string(slice.basis.size()), 0);
    }
    std::mt19937_64 rng(o.seed);
    const Sl2Ops t = build_sl2_ops(o.n);
    for (int trial = 0; trial < 8; ++trial) {
        const PolyVec v = random_vector(o.n, o.max_m, o.max_q, rng);
        const auto comps = decompose(o.n, v, o.max_q + 2 * o.max_m);
        PolyVec back(v.space());
        std::size_t bad = 0;
        for (const auto& c : comps) {
            if (!apply(t.Ds, c.harmonic).is_zero()) ++bad;
            PolyVec lifted = c.harmonic;
            for (int k = 0; k < c.b; ++k) lifted = apply(t.Xs, lifted);
            back += lifted;
        }
        add_defect(r, "decompose #" + std::to_string(trial), v.to_string(), back.to_string(), (back - v).size() + bad);
    }
}

void cmd_scan_singular(const Options& o, RunReport& r) {
    const RepParams p{o.n, parse_lambda(o.lambda)};
    json boxes = json::array();
    for (int m = 0; m <= o.max_m; ++m) {
        const auto kernel = kernel_search(p, m, o.max_q);
        json gens = json::array();
        for (const auto& v : kernel) gens.push_back(v.to_string());
        boxes.push_back({{"m", m}, {"q_max", o.max_q}, {"kernel_dim", kernel.size()}, {"generators", gens}});
        add_defect(r, "kernel m=" + std::to_string(m), "annihilated by d_i, e_i, a",
                   "dim " + std::to_string(kernel.size()), 0);
    }
    r.result = {{"boxes", boxes}, {"completeness", "box-relative"}};
}

void cmd_classify(const Options& o, RunReport& r) {
    const SingularReport rep = classify({o.n, parse_lambda(o.lambda)}, o.max_m, o.max_q);
    for (const auto& b : rep.boxes) {
        const std::size_t diff = static_cast<std::size_t>(std::abs(b.kernel_dim - b.predicted_dim)) +
                                 (b.generators_in_kernel ? 0 : 1);
        add_defect(r, "box m=" + std::to_string(b.m) + " q<=" + std::to_string(b.q_max),
                   std::to_string(b.predicted_dim), std::to_string(b.kernel_dim), diff);
    }
    r.result = rep.to_json();
}

void cmd_build_t(const Options& o, RunReport& r) {
    const auto coeffs = t_coefficients(o.n, o.a);
    add_defect(r, "recurrence", "true", recurrence_verify(o.n, o.a, coeffs) ? "true" : "false",
               recurrence_verify(o.n, o.a, coeffs) ? 0 : 1);
    const WeylOp t = t_operator(o.n, o.a);
    const RepParams p{o.n, GaussScalar(make_rational(o.a, 2))};
    for (const auto& v : mm_basis(o.n, 0, o.max_q).basis) {
        const PolyVec w = apply(t, v);
        for (int i = 1; i <= o.n; ++i)
            for (const auto& x : {BasisElem::d(i), BasisElem::e(i)}) {
                const PolyVec img = apply(pi_hat(p, x), w);
                add_defect(r, x.name() + " T v, v=" + v.to_string(), "0", img.to_string(), img.size());
            }
    }
    json cj = json::array();
    for (const auto& c : coeffs) cj.push_back(c.to_string());
    r.result = {{"coefficients", cj}, {"operator", t.to_string()}};
}

void cmd_build_phi0(const Options& o, RunReport& r) {
    const VermaHom h = phi0_build(o.n, o.a);
    if (o.a <= 4) add_equality(r, "closed form", phi0_closed_form(o.n, o.a), h.element);
    const RepParams p{o.n, h.lambda + GaussScalar(static_cast<long>(o.n + 1))};
    const WeylOp t = t_operator(o.n, o.a);
    for (const auto& v : mm_basis(o.n, 0, o.max_q).basis) {
        PolyVec expected = apply(t, v);
        if (o.a % 2) expected = -expected;
        add_equality(r, "tau_phi(phi0 v) = (-1)^a T v, v=" + v.to_string(), expected, tau_phi_apply(p, h.element, v));
    }
    r.result = {{"element", h.element.to_string()}, {"lambda", h.lambda.to_string()}, {"mu", h.mu.to_string()}};
}

void cmd_build_d(const Options& o, RunReport& r) {
    const WeylOp d = dualize(phi0_build(o.n, o.a).element);
    if (o.a <= 4) add_equality(r, "closed form D_a", explicit_Da(o.n, o.a).op, d);
    r.result = {{"operator", d.to_string()}};
}

void intertwine_details(const Options& o, RunReport& r, const WeylOp& d) {
    const IntertwineReport ir = intertwine_all(o.n, o.a, d);
    for (const auto& [x, defect] : ir.defects) add_defect(r, "defect " + x.name(), "0", defect.to_string(), defect.size());
    add_defect(r, "basis elements checked", std::to_string(ir.checked), std::to_string(ir.checked), 0);
}

void cmd_check_intertwine(const Options& o, RunReport& r) {
    const WeylOp d = o.a <= 4 ? explicit_Da(o.n, o.a).op : dualize(phi0_build(o.n, o.a).element);
    r.params["operator"] = o.a <= 4 ? "closed form D_a" : "dual of phi0";
    intertwine_details(o, r, d);
}

void cmd_check_factorization(const Options& o, RunReport& r) {
    const WeylOp f = factorized_Da(o.n, o.a);
    if (o.a <= 4) add_equality(r, "factorized = closed form", explicit_Da(o.n, o.a).op, f);
    intertwine_details(o, r, f);
    r.params["claim"] = "evidence only";
}

void check_ranges(const Options& o) {
    if (o.n < 1 || o.n > 4) throw UsageError("--n must be in 1..4");
    if (o.a < 1 || o.a > 12) throw UsageError("--a must be in 1..12");
    if (o.max_m < 0 || o.max_m > 8) throw UsageError("--max-m must be in 0..8");
    if (o.max_q < 0 || o.max_q > 8) throw UsageError("--max-q must be in 0..8");
    if (o.format != "json" && o.format != "markdown") throw UsageError("--format must be json or markdown");
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::truncated: return "truncated";
    }
    return "?";
}

json RunReport::to_json() const {
    json d = json::array();
    for (const auto& x : details)
        d.push_back({{"name", x.name}, {"expected", x.expected}, {"got", x.got}, {"defect_terms", x.defect_terms}});
    json j = {{"command", command}, {"params", params}, {"status", to_string(status)}, {"details", d},
              {"timing_ms", timing_ms}};
    if (!result.is_null()) j["result"] = result;
    return j;
}

std::string RunReport::to_markdown() const {
    std::ostringstream s;
    s << "# " << command << "\n\n";
    s << "- status: " << to_string(status) << "\n";
    for (const auto& [k, v] : params.items()) s << "- " << k << ": " << v.dump() << "\n";
    s << "- timing_ms: " << timing_ms << "\n\n";
    s << "| check | expected | got | defect terms |\n|---|---|---|---|\n";
    for (const auto& d : details) s << "| " << d.name << " | " << d.expected << " | " << d.got << " | " << d.defect_terms << " |\n";
    if (!result.is_null()) s << "\n```json\n" << result.dump(2) << "\n```\n";
    return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using Handler = std::function<void(const Options&, RunReport&)>;
    const std::map<std::string, Handler> handlers = {
        {"verify-rep", cmd_verify_rep},       {"verify-sl2", cmd_verify_sl2},
        {"verify-fischer", cmd_verify_fischer}, {"scan-singular", cmd_scan_singular},
        {"classify", cmd_classify},           {"build-T", cmd_build_t},
        {"build-phi0", cmd_build_phi0},       {"build-D", cmd_build_d},
        {"check-intertwine", cmd_check_intertwine}, {"check-factorization", cmd_check_factorization},
    };

    Options o;
    CLI::App app{"Exact verification of the symplectic Dirac operator constructions"};
    app.require_subcommand(1);
    for (const auto& [name, h] : handlers) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--n", o.n, "rank n of sp(2n+2)");
        sub->add_option("--lambda", o.lambda, "scalar parameter as a fraction, e.g. -3/2");
        sub->add_option("--a", o.a, "operator order");
        sub->add_option("--max-m", o.max_m, "largest homogeneity");
        sub->add_option("--max-q", o.max_q, "largest q-degree");
        sub->add_option("--seed", o.seed, "seed for randomized vectors (mt19937_64)");
        sub->add_option("--out", o.out, "report path");
        sub->add_option("--format", o.format, "json or markdown");
        sub->add_flag("--no-timing", o.no_timing, "write timing_ms = 0");
        sub->add_option("--sigma", o.sigma, "ssw, ssw_dual or trivial_character (verify-rep)");
        sub->add_flag("--geometric", o.geometric, "use the geometric picture (verify-rep)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    RunReport r;
    r.command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
        check_ranges(o);
        r.params = {{"n", o.n},         {"lambda", o.lambda}, {"a", o.a},
                    {"max_m", o.max_m}, {"max_q", o.max_q},   {"seed", o.seed}};
        handlers.at(r.command)(o, r);
        r.status = Status::pass;
        for (const auto& d : r.details)
            if (d.defect_terms) r.status = Status::fail;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const TruncationError& e) {
        r.status = Status::truncated;
        add_defect(r, "truncation", "within box", e.what(), 0);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
    const auto stop = std::chrono::steady_clock::now();
    r.timing_ms =
        o.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

    const std::string text = o.format == "markdown" ? r.to_markdown() : r.to_json().dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            err << "cannot write " << o.out << "\n";
            return 2;
        }
        f << text;
    }
    return r.status == Status::pass ? 0 : 1;
}

}  // namespace fmethod::cli
