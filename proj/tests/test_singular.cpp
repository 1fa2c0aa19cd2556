#include "oracle.hpp"

#include "fmethod/fischer.hpp"
#include "fmethod/linalg.hpp"
#include "fmethod/ops.hpp"
#include "fmethod/singular.hpp"

#include <doctest.h>

#include <random>

using namespace fmethod;

namespace {

std::vector<WeylOp> nilradical_ops(const RepParams& p) {
    std::vector<WeylOp> ops;
    for (int i = 1; i <= p.n; ++i) {
        ops.push_back(pi_hat(p, BasisElem::d(i)));
        ops.push_back(pi_hat(p, BasisElem::e(i)));
    }
    return ops;
}

}  // namespace

TEST_CASE("kernel_search examples") {
    const VarSpace s = fourier_space(1);
    CHECK(kernel_search({1, GaussScalar::frac(1, 3)}, 0, 3).size() == 4);
    CHECK(kernel_search({1, GaussScalar::frac(1, 3)}, 1, 3).empty());
    CHECK(in_span(kernel_search({1, GaussScalar::frac(3, 2)}, 1, 2), PolyVec::parse(s, "x1")));
    CHECK(in_span(kernel_search({1, GaussScalar::frac(5, 2)}, 2, 2), PolyVec::parse(s, "x1^2")));
}

TEST_CASE("kernel_search agrees with a dense nullspace and is sound") {
    for (int n = 1; n <= 2; ++n)
        for (const GaussScalar lam : {GaussScalar::frac(1, 3), GaussScalar(1), GaussScalar::frac(3, 2), GaussScalar(2),
                                      GaussScalar::frac(5, 2)}) {
            const RepParams p{n, lam};
            const VarSpace s = fourier_space(n);
            for (int m = 0; m <= 3; ++m) {
                const auto kernel = kernel_search(p, m, 2);
                CHECK(static_cast<int>(kernel.size()) == oracle::kernel_dim(nilradical_ops(p), slice_basis(s, m, 2), s));
                for (const auto& v : kernel) {
                    for (const auto& op : nilradical_ops(p)) CHECK(oracle::naive_apply(op, v).is_zero());
                    CHECK(oracle::naive_apply(pi_hat(p, BasisElem::a()), v).is_zero());
                }
            }
        }
}

TEST_CASE("lambda candidates") {
    CHECK(lambda_candidates(0, 2, 1) == GaussScalar(1));
    CHECK(lambda_candidates(1, 0, 1) == GaussScalar::frac(3, 2));
    CHECK_FALSE(lambda_candidates(0, 0, 3).has_value());
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 5; ++m) CHECK(lambda_candidates(m, 0, n) == GaussScalar(make_rational(2L * (m + n) - 1, 2)));
}

TEST_CASE("T operator examples") {
    const Sl2Ops t = build_sl2_ops(1);
    Ops o{fourier_space(1)};
    CHECK(t_operator(2, 1) == build_sl2_ops(2).Xs);
    CHECK(t_operator(1, 2) == t.Xs.pow(2) + GaussScalar(make_rational(3, 4), Rational(0)) * GaussScalar::i() * o.z());
    for (int n = 1; n <= 3; ++n)
        CHECK(t_coefficients(n, 2)[1] == GaussScalar::i() * GaussScalar(make_rational(2L * n + 1, 4)));
}

TEST_CASE("T coefficients solve the recurrence") {
    for (int n = 1; n <= 3; ++n)
        for (int a = 1; a <= 10; ++a) {
            CHECK(recurrence_verify(n, a, t_coefficients(n, a)));
            CHECK(general_recurrence_verify(n, 0, a, GaussScalar(make_rational(a, 2)), t_coefficients(n, a)));
        }
    CHECK(recurrence_verify(1, 0, {GaussScalar(1)}));
    CHECK_FALSE(recurrence_verify(1, 2, {GaussScalar(1), GaussScalar(0)}));
    // a single factorial in place of the square fails from k = 2 on
    auto single = t_coefficients(1, 4);
    single[2] = single[2] * GaussScalar::frac(1, 2);
    CHECK_FALSE(recurrence_verify(1, 4, single));
}

TEST_CASE("T_a M_0 is singular at lambda = a/2") {
    for (int n = 1; n <= 2; ++n)
        for (int a = 1; a <= 8; ++a) {
            const RepParams p{n, GaussScalar(make_rational(a, 2))};
            const WeylOp t = t_operator(n, a);
            for (const auto& v : mm_basis(n, 0, 3).basis)
                for (const auto& op : nilradical_ops(p)) CHECK(apply(op, apply(t, v)).is_zero());
        }
}

TEST_CASE("solution operators P1 and P2") {
    const auto [p1, p2] = solution_operators({2, GaussScalar::frac(1, 3)});
    CHECK_FALSE(p1.is_zero());
    CHECK_FALSE(p2.is_zero());
    for (const auto& v : kernel_search({2, GaussScalar(1)}, 2, 2)) {
        const auto [q1, q2] = solution_operators({2, GaussScalar(1)});
        CHECK(apply(q1, v).is_zero());
        CHECK(apply(q2, v).is_zero());
    }
}

TEST_CASE("case table") {
    CHECK(case_of(2, GaussScalar::frac(1, 7)).kind == SingularCase::generic_M0_only);
    CHECK(case_of(1, GaussScalar(-1)).kind == SingularCase::integer_case_T);
    CHECK(case_of(1, GaussScalar::frac(-3, 2)).kind == SingularCase::half_integer_case_T);
    CHECK(case_of(1, GaussScalar::frac(1, 2)).kind == SingularCase::n1_full_case);
    CHECK(case_of(1, GaussScalar::frac(1, 2)).harmonic_m == 2);
    CHECK(case_of(2, GaussScalar::frac(-3, 2)).kind == SingularCase::half_integer_case_T);
    CHECK(case_of(2, GaussScalar::frac(1, 2)).kind == SingularCase::half_integer_case_M_and_X);
    CHECK(case_of(2, GaussScalar::frac(1, 2)).harmonic_m == 2);
    CHECK(case_of(3, GaussScalar(make_rational(1, 3), Rational(1))).kind == SingularCase::generic_M0_only);
}

TEST_CASE("classify examples") {
    const SingularReport g = classify({2, GaussScalar::frac(1, 7)}, 4, 3);
    CHECK(g.info.kind == SingularCase::generic_M0_only);
    CHECK(g.match);
    const SingularReport r = classify({2, GaussScalar::frac(1, 2)}, 4, 3);
    CHECK(r.info.kind == SingularCase::half_integer_case_M_and_X);
    CHECK(r.match);
    const SingularReport n1 = classify({1, GaussScalar::frac(1, 2)}, 4, 3);
    CHECK(n1.info.kind == SingularCase::n1_full_case);
    CHECK(n1.match);
    const auto j = n1.to_json();
    CHECK(j["classification_case"] == "n1_full_case");
    CHECK(j["match"] == true);
    CHECK(j["boxes"].size() == 5);
}

TEST_CASE("generic lambda: nothing outside M_0") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-200, 200);
    for (int trial = 0; trial < 4; ++trial) {
        long k = num(rng);
        if (k % 101 == 0) ++k;
        const GaussScalar lam(make_rational(k, 101));
        for (int n = 1; n <= 2; ++n) {
            REQUIRE(case_of(n, lam).kind == SingularCase::generic_M0_only);
            for (int m = 1; m <= 4; ++m) CHECK(kernel_search({n, lam + GaussScalar(long(n + 1))}, m, 2).empty());
        }
    }
}
