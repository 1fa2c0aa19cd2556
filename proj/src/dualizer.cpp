#include "fmethod/dualizer.hpp"

#include "fmethod/ops.hpp"
#include "fmethod/verma.hpp"

#include <map>
#include <stdexcept>

namespace fmethod {

namespace {

const GaussScalar kI = GaussScalar::i();

// Cached powers of a fixed operator.
class PowerCache {
public:
    explicit PowerCache(WeylOp base) : base_(std::move(base)) {}
    const WeylOp& operator()(unsigned k) {
        while (pows_.size() <= k)
            pows_.push_back(pows_.empty() ? WeylOp::identity(base_.space()) : pows_.back() * base_);
        return pows_[k];
    }

private:
    WeylOp base_;
    std::vector<WeylOp> pows_;
};

}  // namespace

WeylOp dualize(const UbarElem& u) {
    const int n = u.n();
    const PbwLayout lay{n};
    Ops o{geometric_space(n)};
    const GaussScalar half = GaussScalar::frac(1, 2);
    std::vector<PowerCache> rf, rg, mq, dq;
    for (int j = 1; j <= n; ++j) {
        rf.emplace_back(o.dx(j) + half * (o.y(j) * o.dz()));
        rg.emplace_back(o.dy(j) - half * (o.x(j) * o.dz()));
        mq.emplace_back(o.q(j));
        dq.emplace_back(-o.dq(j));
    }
    PowerCache rc(o.dz());
    WeylOp out(o.s);
    for (const auto& [k, coef] : u.terms()) {
        WeylOp t = WeylOp::scalar(o.s, coef);
        for (int j = 1; j <= n; ++j) t = t * rf[j - 1](k[lay.f(j)]);
        for (int j = 1; j <= n; ++j) t = t * rg[j - 1](k[lay.g(j)]);
        t = t * rc(k[lay.c()]);
        for (int j = 1; j <= n; ++j) t = t * dq[j - 1](k[lay.dq(j)]);
        for (int j = 1; j <= n; ++j) t = t * mq[j - 1](k[lay.q(j)]);
        out += t;
    }
    return out;
}

WeylOp dirac_hat(int n) {
    Ops o{geometric_space(n)};
    WeylOp d(o.s);
    for (int j = 1; j <= n; ++j) d += kI * (o.q(j) * o.dx(j)) - o.dy(j) * o.dq(j);
    return d;
}

WeylOp xs_hat(int n) {
    Ops o{geometric_space(n)};
    WeylOp x(o.s);
    for (int j = 1; j <= n; ++j) x += kI * (o.y(j) * o.q(j)) + o.x(j) * o.dq(j);
    return x;
}

WeylOp contact_dirac(int n) {
    Ops o{geometric_space(n)};
    return dirac_hat(n) + GaussScalar::frac(1, 2) * (xs_hat(n) * o.dz());
}

EquivariantOp explicit_Da(int n, int a) {
    if (a < 1 || a > 4)
        throw std::invalid_argument("closed forms exist for a = 1..4 only; use dualize(phi0_build(n, a))");
    Ops o{geometric_space(n)};
    const WeylOp d1 = contact_dirac(n);
    const WeylOp d1sq = d1 * d1;
    EquivariantOp e{n, a, WeylOp(o.s), GaussScalar(make_rational(-a, 2)), GaussScalar(make_rational(a, 2))};
    switch (a) {
        case 1: e.op = d1; break;
        case 2: e.op = d1sq - GaussScalar::frac(1, 4) * kI * o.dz(); break;
        case 3: e.op = d1 * (d1sq - kI * o.dz()); break;
        case 4:
            e.op = (d1sq - GaussScalar::frac(1, 4) * kI * o.dz()) * (d1sq - GaussScalar::frac(9, 4) * kI * o.dz());
            break;
    }
    return e;
}

WeylOp factorized_Da(int n, int a) {
    if (a < 1) throw std::invalid_argument("operator order must be positive");
    Ops o{geometric_space(n)};
    const WeylOp d1 = contact_dirac(n);
    const WeylOp d1sq = d1 * d1;
    WeylOp out = o.one();
    if (a % 2 == 0) {
        for (long j = 0; j <= (a - 2) / 2; ++j)
            out = out * (d1sq - kI * GaussScalar::frac((2 * j + 1) * (2 * j + 1), 4) * o.dz());
    } else {
        out = d1;
        for (long j = 1; j <= (a - 1) / 2; ++j) out = out * (d1sq - kI * GaussScalar(j * j) * o.dz());
    }
    return out;
}

WeylOp intertwine_defect(int n, int a, const WeylOp& D, const BasisElem& x) {
    const RepParams src{n, GaussScalar(make_rational(-a, 2))};
    const RepParams dst{n, GaussScalar(make_rational(a, 2))};
    return D * pi_star(src, x) - pi_star(dst, x) * D;
}

IntertwineReport intertwine_all(int n, int a, const WeylOp& D) {
    IntertwineReport r;
    for (const auto& x : lie_basis(n)) {
        ++r.checked;
        WeylOp d = intertwine_defect(n, a, D, x);
        if (!d.is_zero()) r.defects.emplace_back(x, std::move(d));
    }
    return r;
}

std::vector<WeylOp> twistor_components(const RepParams& p, const HarmonicSlice& slice) {
    if (p.n != slice.n) throw DimensionError("rank mismatch between parameters and slice");
    const GaussScalar expected(make_rational(2L * (slice.m + p.n) - 1, 2));
    if (!(p.lambda == expected))
        throw std::invalid_argument("twistor components need lambda = m + n - 1/2 = " + expected.to_string());
    std::vector<WeylOp> out;
    for (const auto& w : slice.basis) out.push_back(dualize(inv_tau_phi(p, w, slice.m)));
    return out;
}

}  // namespace fmethod
