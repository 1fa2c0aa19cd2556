#include "fmethod/fischer.hpp"

#include "fmethod/linalg.hpp"
#include "fmethod/ops.hpp"

#include <map>

namespace fmethod {

namespace {

const GaussScalar kI = GaussScalar::i();

// Splits v by xy-degree.
std::map<int, PolyVec> by_xy_degree(const PolyVec& v) {
    std::map<int, PolyVec> parts;
    for (const auto& [k, c] : v.terms()) {
        auto [it, ins] = parts.try_emplace(xy_degree(v.space(), k), PolyVec(v.space()));
        it->second.add_term(k, c);
    }
    return parts;
}

}  // namespace

Sl2Ops build_sl2_ops(int n) {
    Ops o{fourier_space(n)};
    Sl2Ops t{WeylOp(o.s), WeylOp(o.s), WeylOp(o.s)};
    for (int j = 1; j <= n; ++j) {
        t.Ds += kI * (o.q(j) * o.dy(j)) - o.dx(j) * o.dq(j);
        t.E += o.x(j) * o.dx(j) + o.y(j) * o.dy(j);
        t.Xs += kI * (o.x(j) * o.q(j)) + o.y(j) * o.dq(j);
    }
    return t;
}

std::vector<Sl2Relation> sl2_relations(int n) {
    const Sl2Ops t = build_sl2_ops(n);
    const WeylOp en = t.E + WeylOp::scalar(t.E.space(), GaussScalar(static_cast<long>(n)));
    return {{"[E+n,D_s]", -t.Ds, commutator(en, t.Ds)},
            {"[X_s,D_s]", kI * en, commutator(t.Xs, t.Ds)},
            {"[E+n,X_s]", t.Xs, commutator(en, t.Xs)}};
}

HarmonicSlice mm_basis(int n, int m, int q_max) {
    const VarSpace s = fourier_space(n);
    std::vector<Exps> domain;
    for (auto& k : slice_basis(s, m, q_max))
        if (z_degree(s, k) == 0) domain.push_back(std::move(k));
    HarmonicSlice slice{n, m, q_max, {}};
    slice.basis = poly_kernel(s, {build_sl2_ops(n).Ds}, domain);
    return slice;
}

GaussScalar ladder_coefficient(int n, int m, int r) {
    return -kI * GaussScalar::frac(static_cast<long>(r) * (2L * m + 2L * n + r - 1), 2);
}

LadderResult ladder_check(int n, int m, int r, const PolyVec& v) {
    const Sl2Ops t = build_sl2_ops(n);
    Ops o{fourier_space(n)};
    LadderResult res;
    auto fail = [&res](std::string what) {
        if (res.ok) res.detail = std::move(what);
        res.ok = false;
    };
    if (!apply(t.Ds, v).is_zero() || !v.is_homogeneous(m) || v.max_z_degree() != 0) {
        fail("input is not in M_m");
        return res;
    }
    // X_s^j v for j = 0..r
    std::vector<PolyVec> xp{v};
    for (int j = 1; j <= r; ++j) xp.push_back(apply(t.Xs, xp.back()));
    auto xpow = [&](int j) { return j < 0 ? PolyVec(v.space()) : xp[j]; };

    PolyVec lhs = apply(t.Ds, xp[r]);
    PolyVec rhs = xpow(r - 1) * ladder_coefficient(n, m, r);
    if (!(lhs == rhs)) fail("D_s X_s^r v: residual " + (lhs - rhs).to_string());

    // Apply X_s^r to the derivative of v.
    auto xs_r = [&](PolyVec w) {
        for (int j = 0; j < r; ++j) w = apply(t.Xs, w);
        return w;
    };
    const GaussScalar tri = GaussScalar::frac(static_cast<long>(r) * (r - 1), 2);
    for (int i = 1; i <= n; ++i) {
        PolyVec dx = apply(o.dx(i), xp[r]);
        PolyVec ex = apply(o.q(i), xpow(r - 1)) * (kI * GaussScalar(static_cast<long>(r))) +
                     apply(o.y(i), xpow(r - 2)) * (kI * tri) + xs_r(apply(o.dx(i), v));
        if (!(dx == ex)) fail("d/dx" + std::to_string(i) + " X_s^r v: residual " + (dx - ex).to_string());
        PolyVec dy = apply(o.dy(i), xp[r]);
        PolyVec ey = apply(o.dq(i), xpow(r - 1)) * GaussScalar(static_cast<long>(r)) -
                     apply(o.x(i), xpow(r - 2)) * (kI * tri) + xs_r(apply(o.dy(i), v));
        if (!(dy == ey)) fail("d/dy" + std::to_string(i) + " X_s^r v: residual " + (dy - ey).to_string());
    }
    return res;
}

std::vector<FischerComponent> decompose(int n, const PolyVec& v, int q_max) {
    if (v.max_z_degree() != 0) throw std::invalid_argument("decompose expects z-degree 0");
    const Sl2Ops t = build_sl2_ops(n);
    std::map<int, PolyVec> comps;  // b -> m_b
    for (auto& [k, part] : by_xy_degree(v)) {
        PolyVec rest = part;
        while (!rest.is_zero()) {
            // Largest B with D_s^B rest != 0; then D_s^B rest = D_s^B X_s^B m_B.
            std::vector<PolyVec> powers{rest};
            while (true) {
                PolyVec next = apply(t.Ds, powers.back());
                if (next.is_zero()) break;
                powers.push_back(std::move(next));
            }
            const int B = static_cast<int>(powers.size()) - 1;
            const int m = k - B;
            GaussScalar denom(1);
            for (int r = 1; r <= B; ++r) denom *= ladder_coefficient(n, m, r);
            PolyVec mb = powers[B] * denom.inverse();
            if (mb.max_q_degree() > q_max)
                throw TruncationError("Fischer component X_s^" + std::to_string(B) + " needs q-degree " +
                                      std::to_string(mb.max_q_degree()) + " > " + std::to_string(q_max));
            PolyVec lifted = mb;
            for (int r = 0; r < B; ++r) lifted = apply(t.Xs, lifted);
            rest -= lifted;
            auto [it, ins] = comps.try_emplace(B, PolyVec(v.space()));
            it->second += mb;
        }
    }
    std::vector<FischerComponent> out;
    for (auto& [b, mb] : comps)
        if (!mb.is_zero()) out.push_back({b, std::move(mb)});
    return out;
}

}  // namespace fmethod
