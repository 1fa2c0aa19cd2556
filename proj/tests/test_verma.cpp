#include "oracle.hpp"

#include "fmethod/fischer.hpp"
#include "fmethod/ops.hpp"
#include "fmethod/singular.hpp"
#include "fmethod/verma.hpp"

#include <doctest.h>

using namespace fmethod;
using K = LetterKind;

namespace {

UbarElem L(int n, K k, int j = 0) { return UbarElem::letter(n, {k, j}); }

// beta of a symmetric element via the all-orderings oracle, End S letters appended.
UbarElem beta_by_orderings(const SymElem& s) {
    const int n = s.n();
    const PbwLayout lay{n};
    UbarElem out(n);
    for (const auto& [key, c] : s.terms()) {
        oracle::Word ubar, ends;
        for (int j = 1; j <= n; ++j) {
            for (int t = 0; t < key[lay.f(j)]; ++t) ubar.push_back({K::f, j});
            for (int t = 0; t < key[lay.g(j)]; ++t) ubar.push_back({K::g, j});
        }
        for (int t = 0; t < key[lay.c()]; ++t) ubar.push_back({K::c, 0});
        for (int j = 1; j <= n; ++j)
            for (int t = 0; t < key[lay.q(j)]; ++t) ends.push_back({K::q, j});
        for (int j = 1; j <= n; ++j)
            for (int t = 0; t < key[lay.dq(j)]; ++t) ends.push_back({K::dq, j});
        UbarElem b = ubar.empty() ? UbarElem::scalar(n, 1) : oracle::beta_all_orderings(n, ubar);
        out += b * oracle::normal_form(n, ends) * c;
    }
    return out;
}

}  // namespace

TEST_CASE("Q_s and P_s") {
    const GaussScalar I = GaussScalar::i();
    const QsPs qp = qs_ps_elems(1);
    CHECK(qp.Ps == L(1, K::f, 1) * L(1, K::q, 1) * I + L(1, K::g, 1) * L(1, K::dq, 1));
    for (int n = 1; n <= 3; ++n) {
        const QsPs e = qs_ps_elems(n);
        CHECK((as_ubar(e.Qs) + e.Ps).is_zero());
    }
    // g1 dq1 f1 q1 reorders to (f1 g1 + c)(q1 dq1 + 1), so P_s^2 carries i c
    const UbarElem p2 = qp.Ps.pow(2);
    CHECK(p2.coeff(Exps{1, 1, 0, 1, 1}) == GaussScalar(2) * I);
    CHECK(p2.coeff(Exps{0, 0, 1, 0, 0}) == I);
}

TEST_CASE("beta of powers of the lift of P_s") {
    const GaussScalar I = GaussScalar::i(), half = GaussScalar::frac(1, 2);
    for (int n = 1; n <= 3; ++n) {
        const UbarElem P = qs_ps_elems(n).Ps, c = L(n, K::c);
        const GaussScalar N{static_cast<long>(n)};
        CHECK(beta_qs_expand(n, 1) == P);
        CHECK(beta_qs_expand(n, 2) == P.pow(2) - c * (I * half * N));
        CHECK(beta_qs_expand(n, 3) == P.pow(3) - P * c * (I * half * (GaussScalar(3) * N + GaussScalar(1))));
        CHECK(beta_qs_expand(n, 4) == P.pow(4) - P.pow(2) * c * (I * half * (GaussScalar(6) * N + GaussScalar(4))) -
                                          c.pow(2) * (GaussScalar::frac(1, 4) * (GaussScalar(3) * N * N + GaussScalar(3) * N)));
    }
    const UbarElem P3 = qs_ps_elems(3).Ps;
    CHECK(beta_qs_expand(3, 2) == P3.pow(2) - L(3, K::c) * (GaussScalar::frac(3, 2) * GaussScalar::i()));
    const UbarElem P1 = qs_ps_elems(1).Ps, c1 = L(1, K::c);
    CHECK(beta_qs_expand(1, 4) == P1.pow(4) - P1.pow(2) * c1 * (GaussScalar(5) * GaussScalar::i()) -
                                      c1.pow(2) * GaussScalar::frac(3, 2));
}

TEST_CASE("beta_qs_expand agrees with the all-orderings oracle") {
    for (int n = 1; n <= 2; ++n) {
        const SymElem lift = -qs_ps_elems(n).Qs;
        for (int k = 0; k <= 4; ++k) CHECK(beta_qs_expand(n, k) == beta_by_orderings(lift.pow(k)));
    }
}

TEST_CASE("phi0 closed forms for a <= 4") {
    for (int n = 1; n <= 3; ++n)
        for (int a = 1; a <= 4; ++a) {
            const VermaHom h = phi0_build(n, a);
            CHECK(h.element == phi0_closed_form(n, a));
            CHECK(h.element.filtration_degree() == a);
            CHECK(h.lambda == -GaussScalar(make_rational(2L * n + 2 - a, 2)));
            CHECK(h.mu == -GaussScalar(make_rational(2L * n + 2 + a, 2)));
        }
    CHECK_THROWS(phi0_closed_form(1, 5));
    CHECK_THROWS(phi0_build(1, 0));
}

TEST_CASE("tau_phi examples") {
    const VarSpace s = fourier_space(1);
    const RepParams p{1, GaussScalar::frac(2, 5)};
    const PolyVec q1 = PolyVec::parse(s, "q1");
    CHECK(tau_phi_apply(p, L(1, K::f, 1), q1) == PolyVec::parse(s, "-x1*q1"));
    CHECK(tau_phi_apply(p, L(1, K::c).pow(3), q1) == PolyVec::parse(s, "-z^3*q1"));
    const VermaHom h = phi0_build(1, 2);
    const RepParams hp{1, h.lambda + GaussScalar(2)};
    const PolyVec one = PolyVec::constant(s, 1);
    CHECK(tau_phi_apply(hp, h.element, one) == apply(t_operator(1, 2), one));
    CHECK_THROWS(tau_phi_apply(p, L(1, K::f, 1), PolyVec::parse(s, "x1")));
}

TEST_CASE("apply_end_s") {
    const VarSpace s = fourier_space(1);
    const UbarElem P = qs_ps_elems(1).Ps;
    CHECK(apply_end_s(P, PolyVec::parse(s, "q1")) ==
          L(1, K::f, 1) * L(1, K::q, 1).pow(2) * GaussScalar::i() + L(1, K::g, 1));
}

TEST_CASE("inv_tau_phi examples and round trip") {
    const VarSpace s = fourier_space(1);
    const RepParams p{1, GaussScalar::frac(3, 2)};
    CHECK(inv_tau_phi(p, PolyVec::parse(s, "-x1"), 1) == L(1, K::f, 1));
    CHECK(inv_tau_phi(p, PolyVec::parse(s, "x1"), 1) == -L(1, K::f, 1));
    CHECK_THROWS(inv_tau_phi(p, PolyVec::parse(s, "x1 + z"), 1));
    for (int n = 1; n <= 2; ++n) {
        const RepParams pp{n, GaussScalar::frac(2, 7)};
        const VarSpace sp = fourier_space(n);
        const PolyVec one = PolyVec::constant(sp, 1);
        for (int m = 0; m <= (n == 1 ? 5 : 4); ++m)
            for (const auto& k : slice_basis(sp, m, n == 1 ? 4 : 2)) {
                const PolyVec t = PolyVec::monomial(sp, k);
                CHECK(tau_phi_apply(pp, inv_tau_phi(pp, t, m), one) == t);
            }
    }
}

TEST_CASE("commuting square and singularity of phi0") {
    for (int n = 1; n <= 2; ++n)
        for (int a = 1; a <= 6; ++a) {
            const VermaHom h = phi0_build(n, a);
            const RepParams p{n, h.lambda + GaussScalar(long(n + 1))};
            const WeylOp t = t_operator(n, a);
            for (const auto& v : mm_basis(n, 0, 2).basis) {
                const PolyVec img = tau_phi_apply(p, h.element, v);
                CHECK(img == apply(t, v) * GaussScalar(a % 2 ? -1 : 1));
                for (int i = 1; i <= n; ++i) {
                    CHECK(apply(pi_hat(p, BasisElem::d(i)), img).is_zero());
                    CHECK(apply(pi_hat(p, BasisElem::e(i)), img).is_zero());
                }
                CHECK(inv_tau_phi(p, apply(t, v), a) == apply_end_s(h.element, v) * GaussScalar(a % 2 ? -1 : 1));
            }
        }
}

TEST_CASE("tau_phi is a u-bar module map") {
    for (int n = 1; n <= 2; ++n) {
        const RepParams p{n, GaussScalar::frac(1, 3)};
        const VarSpace s = fourier_space(n);
        const UbarElem u = L(n, K::g, 1) * L(n, K::f, 1) + L(n, K::c) * L(n, K::f, n) * L(n, K::q, 1);
        const PolyVec v = PolyVec::parse(s, n == 1 ? "q1^2" : "q1*q2");
        for (const auto& [letter, x] :
             std::vector<std::pair<Letter, BasisElem>>{{{K::f, 1}, BasisElem::f(1)}, {{K::g, n}, BasisElem::g(n)}, {{K::c, 0}, BasisElem::c()}})
            CHECK(tau_phi_apply(p, UbarElem::letter(n, letter) * u, v) == apply(pi_hat(p, x), tau_phi_apply(p, u, v)));
    }
}
