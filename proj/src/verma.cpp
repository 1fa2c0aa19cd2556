#include "fmethod/verma.hpp"

#include "fmethod/singular.hpp"

#include <stdexcept>

namespace fmethod {

namespace {

const GaussScalar kI = GaussScalar::i();

// The End S factor of a PBW key as a Fourier-picture operator.
WeylOp end_s_part(const VarSpace& s, const PbwLayout& lay, const Exps& key) {
    Exps mult(s.nvars(), 0), deriv(s.nvars(), 0);
    for (int j = 1; j <= s.n; ++j) {
        mult[s.q(j)] = key[lay.q(j)];
        deriv[s.q(j)] = key[lay.dq(j)];
    }
    return WeylOp::monomial(s, mult, deriv);
}

void require_q_only(const PolyVec& v) {
    const VarSpace& s = v.space();
    for (const auto& [k, c] : v.terms())
        if (xy_degree(s, k) || z_degree(s, k)) throw std::invalid_argument("expected a polynomial in q only");
}

}  // namespace

QsPs qs_ps_elems(int n) {
    QsPs r{SymElem(n), UbarElem(n)};
    for (int j = 1; j <= n; ++j) {
        UbarElem t = UbarElem::letter(n, {LetterKind::f, j}) * UbarElem::letter(n, {LetterKind::q, j}) * kI +
                     UbarElem::letter(n, {LetterKind::g, j}) * UbarElem::letter(n, {LetterKind::dq, j});
        r.Ps += t;
    }
    r.Qs = -as_sym(r.Ps);
    return r;
}

UbarElem beta_qs_expand(int n, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    return symmetrize_beta((-qs_ps_elems(n).Qs).pow(static_cast<unsigned>(k)));
}

VermaHom phi0_build(int n, int a) {
    if (a < 1) throw std::invalid_argument("phi0 order must be positive");
    VermaHom h;
    h.n = n;
    h.a = a;
    h.lambda = -GaussScalar(make_rational(2L * n + 2 - a, 2));
    h.mu = -GaussScalar(make_rational(2L * n + 2 + a, 2));
    const auto coeffs = t_coefficients(n, a);
    const UbarElem c = UbarElem::letter(n, {LetterKind::c});
    h.element = UbarElem(n);
    for (int k = 0; k <= a / 2; ++k) {
        GaussScalar s = k % 2 ? -coeffs[k] : coeffs[k];
        h.element += c.pow(static_cast<unsigned>(k)) * beta_qs_expand(n, a - 2 * k) * s;
    }
    return h;
}

UbarElem phi0_closed_form(int n, int a) {
    const UbarElem P = qs_ps_elems(n).Ps;
    const UbarElem c = UbarElem::letter(n, {LetterKind::c});
    const GaussScalar N{static_cast<long>(n)};
    switch (a) {
        case 1: return P;
        case 2: return P.pow(2) - c * (kI * (N + GaussScalar::frac(1, 4)));
        case 3: return P.pow(3) - c * P * (kI * (GaussScalar(3) * N + GaussScalar(2)));
        case 4:
            return P.pow(4) - c * P.pow(2) * (kI * (GaussScalar(6) * N + GaussScalar::frac(13, 2))) -
                   c.pow(2) * (GaussScalar(3) * N * N + GaussScalar::frac(9, 2) * N + GaussScalar::frac(9, 16));
        default: throw std::invalid_argument("closed forms exist for a = 1..4 only");
    }
}

UbarElem apply_end_s(const UbarElem& u, const PolyVec& v) {
    require_q_only(v);
    const int n = u.n();
    const PbwLayout lay{n};
    const VarSpace& s = v.space();
    UbarElem out(n);
    for (const auto& [k, c] : u.terms()) {
        PolyVec w = apply(end_s_part(s, lay, k), v);
        for (const auto& [wk, wc] : w.terms()) {
            Exps key(k);
            for (int j = 1; j <= n; ++j) {
                key[lay.q(j)] = wk[s.q(j)];
                key[lay.dq(j)] = 0;
            }
            out.add_term(key, c * wc);
        }
    }
    return out;
}

PolyVec tau_phi_apply(const RepParams& p, const UbarElem& u, const PolyVec& v) {
    require_q_only(v);
    const int n = p.n;
    if (u.n() != n || v.space().n != n) throw DimensionError("rank mismatch in tau_phi");
    const PbwLayout lay{n};
    const VarSpace s = fourier_space(n);
    std::vector<WeylOp> pf, pg;
    for (int j = 1; j <= n; ++j) {
        pf.push_back(pi_hat(p, BasisElem::f(j)));
        pg.push_back(pi_hat(p, BasisElem::g(j)));
    }
    const WeylOp pc = pi_hat(p, BasisElem::c());
    PolyVec out(s);
    for (const auto& [k, coef] : u.terms()) {
        PolyVec w = apply(end_s_part(s, lay, k), v);
        for (int t = 0; t < k[lay.c()]; ++t) w = apply(pc, w);
        for (int j = n; j >= 1; --j)
            for (int t = 0; t < k[lay.g(j)]; ++t) w = apply(pg[j - 1], w);
        for (int j = n; j >= 1; --j)
            for (int t = 0; t < k[lay.f(j)]; ++t) w = apply(pf[j - 1], w);
        out += w * coef;
    }
    return out;
}

UbarElem inv_tau_phi(const RepParams& p, const PolyVec& target, int m) {
    const int n = p.n;
    const VarSpace& s = target.space();
    if (!target.is_homogeneous(m)) throw std::invalid_argument("target is not in the m-homogeneity slice");
    const PbwLayout lay{n};
    const PolyVec one = PolyVec::constant(s, GaussScalar(1));
    UbarElem out(n);
    PolyVec rest = target;
    // f^alpha g^beta c^k (x) q^gamma maps to (-1)^(|alpha|+|beta|+k) x^alpha y^beta z^k q^gamma
    // plus terms of strictly larger z-degree; peel off the lowest z-degree.
    for (int guard = 0; !rest.is_zero(); ++guard) {
        if (guard > m / 2 + 1) throw std::logic_error("inv_tau_phi did not terminate");
        int zmin = m;
        for (const auto& [k, c] : rest.terms()) zmin = std::min(zmin, z_degree(s, k));
        UbarElem step(n);
        for (const auto& [k, c] : rest.terms()) {
            if (z_degree(s, k) != zmin) continue;
            Exps key(lay.size(), 0);
            int deg = k[s.z()];
            key[lay.c()] = k[s.z()];
            for (int j = 1; j <= n; ++j) {
                key[lay.f(j)] = k[s.x(j)];
                key[lay.g(j)] = k[s.y(j)];
                key[lay.q(j)] = k[s.q(j)];
                deg += k[s.x(j)] + k[s.y(j)];
            }
            step.add_term(key, deg % 2 ? -c : c);
        }
        rest -= tau_phi_apply(p, step, one);
        out += step;
    }
    return out;
}

}  // namespace fmethod
