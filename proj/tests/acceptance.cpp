// One PASS/FAIL line per acceptance criterion, with its wall-clock limit.

#include "fmethod/dualizer.hpp"
#include "fmethod/fischer.hpp"
#include "fmethod/reps.hpp"
#include "fmethod/singular.hpp"
#include "fmethod/verma.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace fmethod;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

// Collects the first few failures so the summary line stays short.
struct Tally {
    int checks = 0, failures = 0;
    std::ostringstream first;
    void expect(bool cond, const std::string& what) {
        ++checks;
        if (cond) return;
        if (failures < 3) first << (failures ? "; " : "") << what;
        ++failures;
    }
    Outcome outcome(const std::string& extra = "") const {
        std::ostringstream s;
        s << checks << " checks";
        if (failures) s << ", " << failures << " failed: " << first.str();
        if (!extra.empty()) s << "; " << extra;
        return {failures == 0, s.str()};
    }
};

GaussScalar Q(long p, long q) { return GaussScalar::frac(p, q); }

Outcome homomorphism() {
    Tally t;
    for (int n = 1; n <= 3; ++n)
        for (const GaussScalar& l : {Q(0, 1), Q(1, 3), Q(-3, 2), Q(5, 2), Q(7, 11)}) {
            const RepParams p{n, l};
            const DefectReport r = check_homomorphism([&](const BasisElem& x) { return pi_hat(p, x); }, n);
            t.expect(r.ok(), "n=" + std::to_string(n) + " lambda=" + l.to_string());
        }
    return t.outcome();
}

Outcome sl2() {
    Tally t;
    for (int n = 1; n <= 3; ++n)
        for (const auto& rel : sl2_relations(n)) t.expect(rel.expected == rel.got, rel.name + " n=" + std::to_string(n));
    return t.outcome();
}

Outcome ladder() {
    Tally t;
    for (int n = 1; n <= 2; ++n)
        for (int m = 0; m <= 4; ++m)
            for (const auto& v : mm_basis(n, m, 3).basis)
                for (int r = 1; r <= 6; ++r) {
                    const LadderResult res = ladder_check(n, m, r, v);
                    t.expect(res.ok, res.detail);
                }
    return t.outcome();
}

Outcome classification() {
    Tally t;
    struct Rep {
        int n;
        GaussScalar lambda;
        int row;
    };
    const std::vector<Rep> reps = {
        {1, Q(1, 3), 1},  {1, Q(-1, 1), 2}, {1, Q(-3, 2), 3}, {1, Q(-1, 2), 4},
        {2, Q(1, 7), 1},  {2, Q(-2, 1), 2}, {2, Q(-3, 2), 3}, {2, Q(-1, 2), 4},
    };
    for (const auto& r : reps) {
        const SingularReport rep = classify({r.n, r.lambda}, 5, 4);
        const std::string tag = "n=" + std::to_string(r.n) + " lambda=" + r.lambda.to_string();
        t.expect(rep.info.row == r.row, tag + " row");
        t.expect(rep.match, tag + " match");
    }
    // generic control: the kernel lives in the m = 0 slice only
    for (int n = 1; n <= 2; ++n) {
        const SingularReport rep = classify({n, Q(2, 9)}, 5, 4);
        t.expect(rep.info.kind == SingularCase::generic_M0_only, "control case");
        for (const auto& b : rep.boxes)
            t.expect((b.m == 0) == (b.kernel_dim > 0), "control n=" + std::to_string(n) + " m=" + std::to_string(b.m));
    }
    return t.outcome();
}

Outcome t_operator_check() {
    Tally t;
    for (int n = 1; n <= 3; ++n)
        for (int a = 1; a <= 10; ++a) {
            const std::string tag = "n=" + std::to_string(n) + " a=" + std::to_string(a);
            t.expect(recurrence_verify(n, a, t_coefficients(n, a)), tag + " recurrence");
            const WeylOp op = t_operator(n, a);
            const RepParams p{n, Q(a, 2)};
            std::vector<WeylOp> nil;
            for (int i = 1; i <= n; ++i) {
                nil.push_back(pi_hat(p, BasisElem::d(i)));
                nil.push_back(pi_hat(p, BasisElem::e(i)));
            }
            for (const auto& v : mm_basis(n, 0, 3).basis) {
                const PolyVec w = apply(op, v);
                bool zero = true;
                for (const auto& x : nil) zero = zero && apply(x, w).is_zero();
                t.expect(zero, tag + " singular on " + v.to_string());
            }
        }
    return t.outcome();
}

Outcome beta_identities() {
    Tally t;
    const GaussScalar I = GaussScalar::i(), half = Q(1, 2);
    for (int n = 1; n <= 3; ++n) {
        const UbarElem P = qs_ps_elems(n).Ps, c = UbarElem::letter(n, {LetterKind::c});
        const GaussScalar N{static_cast<long>(n)};
        const std::string tag = " n=" + std::to_string(n);
        t.expect(beta_qs_expand(n, 1) == P, "k=1" + tag);
        t.expect(beta_qs_expand(n, 2) == P.pow(2) - c * (I * half * N), "k=2" + tag);
        t.expect(beta_qs_expand(n, 3) == P.pow(3) - P * c * (I * half * (GaussScalar(3) * N + GaussScalar(1))), "k=3" + tag);
        t.expect(beta_qs_expand(n, 4) == P.pow(4) - P.pow(2) * c * (I * half * (GaussScalar(6) * N + GaussScalar(4))) -
                                             c.pow(2) * (Q(1, 4) * (GaussScalar(3) * N * N + GaussScalar(3) * N)),
                 "k=4" + tag);
    }
    return t.outcome();
}

Outcome phi0_oracle() {
    Tally t;
    for (int n = 1; n <= 3; ++n)
        for (int a = 1; a <= 4; ++a)
            t.expect(phi0_build(n, a).element == phi0_closed_form(n, a),
                     "closed form n=" + std::to_string(n) + " a=" + std::to_string(a));
    for (int n = 1; n <= 3; ++n)
        for (int a = 1; a <= (n < 3 ? 6 : 4); ++a) {
            const VermaHom h = phi0_build(n, a);
            const RepParams p{n, h.lambda + GaussScalar(static_cast<long>(n + 1))};
            const WeylOp op = t_operator(n, a);
            const GaussScalar sign = a % 2 ? -1 : 1;
            for (const auto& v : mm_basis(n, 0, n < 3 ? 3 : 2).basis)
                t.expect(tau_phi_apply(p, h.element, v) == apply(op, v) * sign,
                         "square n=" + std::to_string(n) + " a=" + std::to_string(a));
        }
    return t.outcome("square checked as tau_phi(phi0 v) = (-1)^a T_a v");
}

Outcome duality() {
    Tally t;
    for (int n = 1; n <= 2; ++n)
        for (int a = 1; a <= 4; ++a)
            t.expect(dualize(phi0_build(n, a).element) == explicit_Da(n, a).op,
                     "n=" + std::to_string(n) + " a=" + std::to_string(a));
    return t.outcome();
}

Outcome intertwining() {
    Tally t;
    for (int n = 1; n <= 2; ++n)
        for (int a = 1; a <= 4; ++a) {
            const IntertwineReport r = intertwine_all(n, a, explicit_Da(n, a).op);
            t.expect(r.ok() && r.checked == lie_dim(n), "n=" + std::to_string(n) + " a=" + std::to_string(a));
        }
    std::ostringstream ctl;
    for (int n = 1; n <= 2; ++n) {
        const IntertwineReport r = intertwine_all(n, 1, dirac_hat(n));
        t.expect(!r.ok(), "uncorrected D_s intertwines for n=" + std::to_string(n));
        ctl << (n > 1 ? ", " : "") << "n=" << n << ": " << r.defects.size() << " defects";
    }
    return t.outcome("negative control " + ctl.str());
}

Outcome factorization() {
    Tally t;
    for (int n = 1; n <= 2; ++n) {
        for (int a = 1; a <= 4; ++a)
            t.expect(factorized_Da(n, a) == explicit_Da(n, a).op, "n=" + std::to_string(n) + " a=" + std::to_string(a));
        for (int a = 5; a <= 6; ++a)
            t.expect(intertwine_all(n, a, factorized_Da(n, a)).ok(),
                     "defect n=" + std::to_string(n) + " a=" + std::to_string(a));
    }
    return t.outcome("evidence only, no proof");
}

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> all = {
        {1, "Lie homomorphism of pi_hat, n<=3, five lambdas", 60, homomorphism},
        {2, "sl(2) relations, n<=3", 1, sl2},
        {3, "ladder identity, m<=4, r<=6, q<=3, n<=2", 30, ladder},
        {4, "singular vector classification, m<=5, q<=4, n<=2", 600, classification},
        {5, "T operator recurrence and singularity, a<=10, n<=3", 60, t_operator_check},
        {6, "beta expansions, k<=4, n<=3", 10, beta_identities},
        {7, "phi0 closed forms and commuting square", 60, phi0_oracle},
        {8, "dual of phi0 equals D_1..D_4, n<=2", 60, duality},
        {9, "intertwining of D_1..D_4 and negative control", 300, intertwining},
        {10, "factorized D_a: equality a<=4, intertwining a=5,6", 600, factorization},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_s;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / limit %.0fs", secs, c.limit_s);
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " [" << timing << "] " << c.name
                  << " (" << o.note << (in_time ? "" : "; over time limit") << ")" << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
    return failed ? 1 : 0;
}
