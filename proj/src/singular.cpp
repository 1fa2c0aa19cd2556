#include "fmethod/singular.hpp"

#include "fmethod/fischer.hpp"
#include "fmethod/linalg.hpp"
#include "fmethod/ops.hpp"

#include <map>
#include <stdexcept>

namespace fmethod {

using nlohmann::json;

namespace {

const GaussScalar kI = GaussScalar::i();

// pi_hat(d_i) lowers and pi_hat(e_i) raises this vector by the unit e_i, so
// the kernel splits along it.
std::vector<int> weight(const VarSpace& s, const Exps& k) {
    std::vector<int> w(s.n);
    for (int i = 1; i <= s.n; ++i) w[i - 1] = int(k[s.x(i)]) - int(k[s.y(i)]) - int(k[s.q(i)]);
    return w;
}

// 2*lambda as a positive integer, if it is one.
std::optional<long> twice_if_half_natural(const GaussScalar& lambda) {
    if (!lambda.is_real()) return std::nullopt;
    Rational t = lambda.re() * 2;
    if (t.get_den() != 1 || sgn(t) <= 0) return std::nullopt;
    if (!t.get_num().fits_slong_p()) return std::nullopt;
    return t.get_num().get_si();
}

}  // namespace

std::vector<PolyVec> kernel_search(const RepParams& p, int m, int q_max) {
    if (m < 0 || q_max < 0) throw std::invalid_argument("negative slice bounds");
    const VarSpace s = fourier_space(p.n);
    std::vector<WeylOp> ops;
    for (int i = 1; i <= p.n; ++i) {
        ops.push_back(pi_hat(p, BasisElem::d(i)));
        ops.push_back(pi_hat(p, BasisElem::e(i)));
    }
    std::map<std::vector<int>, std::vector<Exps>> blocks;
    for (auto& k : slice_basis(s, m, q_max)) blocks[weight(s, k)].push_back(std::move(k));

    const WeylOp pa = pi_hat(p, BasisElem::a());
    std::vector<PolyVec> out;
    for (const auto& [w, domain] : blocks) {
        for (auto& v : poly_kernel(s, ops, domain)) {
            if (!apply(pa, v).is_zero()) throw std::logic_error("kernel vector not annihilated by pi(a)");
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::optional<GaussScalar> lambda_candidates(int m, int r, int n) {
    if (m < 0 || r < 0 || n < 1) throw std::invalid_argument("lambda_candidates: bad arguments");
    if (m == 0 && r == 0) return std::nullopt;
    const long s = m + r;
    return GaussScalar(make_rational(s * s + static_cast<long>(m) * (m + 2L * n - 1), 2 * s));
}

std::vector<GaussScalar> t_coefficients(int n, int a) {
    if (a < 1) throw std::invalid_argument("T operator order must be positive");
    const Rational half_a = make_rational(a, 2);
    std::vector<GaussScalar> c;
    for (int k = 0; k <= a / 2; ++k) {
        Rational v = factorial(k) * factorial(k) * gen_binomial(half_a, k) * gen_binomial(half_a - make_rational(1, 2), k) *
                     gen_binomial(half_a - make_rational(1, 2) + n, k);
        c.push_back(pow(kI, k) * GaussScalar(v));
    }
    return c;
}

WeylOp t_operator(int n, int a) {
    const Sl2Ops t = build_sl2_ops(n);
    Ops o{fourier_space(n)};
    const auto coeffs = t_coefficients(n, a);
    WeylOp out(o.s);
    for (int k = 0; k <= a / 2; ++k)
        out += coeffs[k] * (o.z().pow(k) * t.Xs.pow(a - 2 * k));
    return out;
}

bool recurrence_verify(int n, int r, const std::vector<GaussScalar>& coeffs) {
    if (static_cast<int>(coeffs.size()) != r / 2 + 1) return false;
    for (int k = 0; k <= r / 2; ++k) {
        GaussScalar next = k + 1 < static_cast<int>(coeffs.size()) ? coeffs[k + 1] : GaussScalar();
        const long f = static_cast<long>(r - 2 * k) * (r - 2 * k - 1) * (2L * n + r - 2 * k - 1);
        GaussScalar lhs = GaussScalar(2L * (k + 1)) * next - kI * GaussScalar::frac(f, 4) * coeffs[k];
        if (!lhs.is_zero()) return false;
    }
    return true;
}

bool general_recurrence_verify(int n, int m, int r, const GaussScalar& lambda,
                               const std::vector<GaussScalar>& coeffs) {
    if (static_cast<int>(coeffs.size()) != r / 2 + 1) return false;
    const GaussScalar half = GaussScalar::frac(1, 2);
    for (int k = 0; k <= r / 2; ++k) {
        const long j = r - 2 * k;
        GaussScalar c1 = GaussScalar(j + m) * (GaussScalar(static_cast<long>(r - k + m + n)) - lambda - half) -
                         half * GaussScalar(j * (2L * m + 2L * n + j - 1));
        if (!(c1 * coeffs[k]).is_zero()) return false;
        GaussScalar next = k + 1 <= r / 2 ? coeffs[k + 1] : GaussScalar();
        GaussScalar c2 = GaussScalar(2L * (k + 1) * (2L * n + m + j - 2)) * next -
                         kI * GaussScalar::frac(j * (j - 1) * (2L * m + 2L * n + j - 1) * (2L * m + 2L * n + j - 2), 4) *
                             coeffs[k];
        if (!c2.is_zero()) return false;
    }
    return true;
}

std::pair<WeylOp, WeylOp> solution_operators(const RepParams& p) {
    Ops o{fourier_space(p.n)};
    WeylOp p1(o.s), p2(o.s);
    for (int j = 1; j <= p.n; ++j) {
        WeylOp d = pi_hat(p, BasisElem::d(j)), e = pi_hat(p, BasisElem::e(j));
        p1 += o.x(j) * d + o.y(j) * e;
        p2 += o.dx(j) * e - o.dy(j) * d;
    }
    return {p1, p2};
}

std::string to_string(SingularCase c) {
    switch (c) {
        case SingularCase::generic_M0_only: return "generic_M0_only";
        case SingularCase::integer_case_T: return "integer_case_T";
        case SingularCase::half_integer_case_T: return "half_integer_case_T";
        case SingularCase::half_integer_case_M_and_X: return "half_integer_case_M_and_X";
        case SingularCase::n1_full_case: return "n1_full_case";
    }
    return "?";
}

CaseInfo case_of(int n, const GaussScalar& lambda) {
    const GaussScalar shifted = lambda + GaussScalar(static_cast<long>(n + 1));
    CaseInfo info;
    auto twice = twice_if_half_natural(shifted);
    if (!twice) return info;  // row 1
    info.t_order = static_cast<int>(*twice);
    if (*twice % 2 == 0) {
        info.kind = SingularCase::integer_case_T;
        info.row = 2;
        return info;
    }
    // shifted = (2n - 1)/2 + m with m = lambda + 3/2
    const long m = (*twice - (2L * n - 1)) / 2;
    if (n == 1) {
        if (m == 0) {
            info.kind = SingularCase::half_integer_case_T;
            info.row = 3;
        } else {
            info.kind = SingularCase::n1_full_case;
            info.row = 4;
            info.harmonic_m = static_cast<int>(m);
            info.xs_summand = true;
        }
        return info;
    }
    if (*twice < 2L * n + 1) {
        info.kind = SingularCase::half_integer_case_T;
        info.row = 3;
    } else {
        info.kind = SingularCase::half_integer_case_M_and_X;
        info.row = 4;
        info.harmonic_m = static_cast<int>(m);
    }
    return info;
}

std::vector<PolyVec> predicted_generators(int n, const CaseInfo& info, int m, int q_max) {
    std::vector<PolyVec> out;
    if (m == 0)
        for (auto& v : mm_basis(n, 0, q_max).basis) out.push_back(std::move(v));
    if (info.harmonic_m > 0 && m == info.harmonic_m)
        for (auto& v : mm_basis(n, m, q_max).basis) out.push_back(std::move(v));
    if (info.xs_summand && m == info.harmonic_m + 1 && q_max >= 1) {
        const WeylOp xs = build_sl2_ops(n).Xs;
        for (const auto& v : mm_basis(n, info.harmonic_m, q_max - 1).basis) out.push_back(apply(xs, v));
    }
    if (info.t_order > 0 && m == info.t_order && q_max >= info.t_order) {
        const WeylOp t = t_operator(n, info.t_order);
        for (const auto& v : mm_basis(n, 0, q_max - info.t_order).basis) out.push_back(apply(t, v));
    }
    return out;
}

SingularReport classify(const RepParams& p, int m_max, int q_max) {
    SingularReport rep;
    rep.params = p;
    rep.lambda_hat = p.lambda + GaussScalar(static_cast<long>(p.n + 1));
    rep.info = case_of(p.n, p.lambda);
    rep.match = true;
    const RepParams hat{p.n, rep.lambda_hat};
    for (int m = 0; m <= m_max; ++m) {
        auto kernel = kernel_search(hat, m, q_max);
        auto predicted = predicted_generators(p.n, rep.info, m, q_max);
        BoxResult box;
        box.m = m;
        box.q_max = q_max;
        box.kernel_dim = static_cast<int>(kernel.size());
        box.predicted_dim = span_rank(predicted);
        for (const auto& v : predicted)
            if (!in_span(kernel, v)) box.generators_in_kernel = false;
        box.match = box.generators_in_kernel && box.kernel_dim == box.predicted_dim;
        rep.match = rep.match && box.match;
        rep.boxes.push_back(box);
        for (auto& v : kernel) rep.found_generators.push_back(std::move(v));
    }
    return rep;
}

json SingularReport::to_json() const {
    json boxes_j = json::array();
    for (const auto& b : boxes)
        boxes_j.push_back({{"m", b.m},
                           {"q_max", b.q_max},
                           {"kernel_dim", b.kernel_dim},
                           {"predicted_dim", b.predicted_dim},
                           {"generators_in_kernel", b.generators_in_kernel},
                           {"match", b.match}});
    json gens = json::array();
    for (const auto& g : found_generators) gens.push_back(g.to_string());
    return {{"n", params.n},
            {"lambda", params.lambda.to_string()},
            {"lambda_hat", lambda_hat.to_string()},
            {"classification_case", to_string(info.kind)},
            {"table_row", info.row},
            {"t_order", info.t_order},
            {"harmonic_m", info.harmonic_m},
            {"xs_summand", info.xs_summand},
            {"boxes", boxes_j},
            {"found_generators", gens},
            {"match", match}};
}

}  // namespace fmethod
