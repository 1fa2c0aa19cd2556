#include "fmethod/reps.hpp"

#include "fmethod/ops.hpp"

#include <stdexcept>

namespace fmethod {

namespace {

const GaussScalar kI = GaussScalar::i();
const GaussScalar kHalf = GaussScalar::frac(1, 2);

WeylOp dirac_fourier(const Ops& o) {
    WeylOp d(o.s);
    for (int j = 1; j <= o.s.n; ++j) d += kI * (o.q(j) * o.dy(j)) - o.dx(j) * o.dq(j);
    return d;
}

// Shared part of the Levi generators hA, hB, hC (without sigma).
WeylOp levi_hat(const Ops& o, const BasisElem& x) {
    const int i = x.i, j = x.j;
    switch (x.tag) {
        case GenTag::hA: return o.x(i) * o.dx(j) - o.y(j) * o.dy(i);
        case GenTag::hB: return o.x(i) * o.dy(j) + o.x(j) * o.dy(i);
        case GenTag::hC: return o.y(i) * o.dx(j) + o.y(j) * o.dx(i);
        default: throw std::invalid_argument("not a Levi generator");
    }
}

WeylOp levi_geom(const Ops& o, const BasisElem& x) {
    const int i = x.i, j = x.j;
    switch (x.tag) {
        case GenTag::hA: return o.y(i) * o.dy(j) - o.x(j) * o.dx(i);
        case GenTag::hB: return -(o.y(j) * o.dx(i) + o.y(i) * o.dx(j));
        case GenTag::hC: return -(o.x(j) * o.dy(i) + o.x(i) * o.dy(j));
        default: throw std::invalid_argument("not a Levi generator");
    }
}

}  // namespace

std::string SigmaModel::name() const {
    switch (kind) {
        case SigmaKind::ssw: return "ssw";
        case SigmaKind::ssw_dual: return "ssw_dual";
        case SigmaKind::trivial_character: return "trivial_character";
    }
    return "?";
}

SigmaModel SigmaModel::parse(const std::string& s) {
    if (s == "ssw") return {SigmaKind::ssw};
    if (s == "ssw_dual") return {SigmaKind::ssw_dual};
    if (s == "trivial_character") return {SigmaKind::trivial_character};
    throw ParseError("unknown sigma model '" + s + "'");
}

WeylOp SigmaModel::action(const VarSpace& space, const BasisElem& x) const {
    Ops o{space};
    if (x.tag == GenTag::h || kind == SigmaKind::trivial_character) {
        if (x.tag != GenTag::h && x.tag != GenTag::hA && x.tag != GenTag::hB && x.tag != GenTag::hC)
            throw std::invalid_argument("sigma is only defined on the Levi factor");
        return WeylOp(space);
    }
    const GaussScalar s = kind == SigmaKind::ssw ? kI : -kI;
    const int i = x.i, j = x.j;
    switch (x.tag) {
        case GenTag::hA: return -(o.q(j) * o.dq(i)) - o.k(i == j ? kHalf : GaussScalar());
        case GenTag::hB: return s * (o.dq(i) * o.dq(j));
        case GenTag::hC: return s * (o.q(i) * o.q(j));
        default: throw std::invalid_argument("sigma is only defined on the Levi factor");
    }
}

WeylOp pi_hat(const RepParams& p, const BasisElem& x) {
    const int n = p.n;
    Ops o{fourier_space(n)};
    const SigmaModel sigma{SigmaKind::ssw};
    const GaussScalar nn(static_cast<long>(n));
    const int i = x.i;
    switch (x.tag) {
        case GenTag::f: return -o.x(i) - kHalf * (o.z() * o.dy(i));
        case GenTag::g: return -o.y(i) + kHalf * (o.z() * o.dx(i));
        case GenTag::c: return -o.z();
        case GenTag::h:
            return -o.Ex() - o.Ey() - GaussScalar(2) * o.Ez() + o.k(p.lambda - GaussScalar(n + 1L));
        case GenTag::hA:
        case GenTag::hB:
        case GenTag::hC: return levi_hat(o, x) + sigma.action(o.s, x);
        case GenTag::d: {
            WeylOp inner = o.Ex() + o.Ey() + o.Ez() + o.k(nn - p.lambda - kHalf);
            return GaussScalar(-2) * (o.y(i) * o.dz()) + o.dx(i) * inner + o.q(i) * dirac_fourier(o);
        }
        case GenTag::e: {
            WeylOp inner = o.Ex() + o.Ey() + o.Ez() + o.k(nn - p.lambda - kHalf);
            return GaussScalar(2) * (o.x(i) * o.dz()) + o.dy(i) * inner - kI * (o.dq(i) * dirac_fourier(o));
        }
        case GenTag::a: {
            WeylOp inner = o.Ex() + o.Ey() + o.Ez() + o.k(nn - p.lambda);
            WeylOp ds = dirac_fourier(o);
            return GaussScalar(4) * (o.dz() * inner) + kI * (ds * ds);
        }
    }
    throw std::invalid_argument("unknown basis tag");
}

WeylOp pi_hat_general(const RepParams& p, const SigmaModel& sigma, const BasisElem& x) {
    const int n = p.n;
    Ops o{fourier_space(n)};
    auto sg = [&](const BasisElem& b) { return sigma.action(o.s, b); };
    // sigma_{lambda - rho}(h)
    WeylOp sh = sg(BasisElem::h()) + o.k(p.lambda - GaussScalar(n + 1L));
    WeylOp euler1 = o.Ex() + o.Ey() + o.Ez() - o.one();
    const int i = x.i;
    switch (x.tag) {
        case GenTag::f: return -o.x(i) - kHalf * (o.z() * o.dy(i));
        case GenTag::g: return -o.y(i) + kHalf * (o.z() * o.dx(i));
        case GenTag::c: return -o.z();
        case GenTag::h: return -o.Ex() - o.Ey() - GaussScalar(2) * o.Ez() + sh;
        case GenTag::hA:
        case GenTag::hB:
        case GenTag::hC: return levi_hat(o, x) + sg(x);
        case GenTag::d: {
            WeylOp r = GaussScalar(-2) * (o.y(i) * o.dz()) + o.dx(i) * euler1 - o.dx(i) * sh;
            for (int j = 1; j <= n; ++j)
                r += o.dx(j) * sg(BasisElem::hA(j, i)) + o.dy(j) * sg(BasisElem::hC(i, j));
            return r;
        }
        case GenTag::e: {
            WeylOp r = GaussScalar(2) * (o.x(i) * o.dz()) + o.dy(i) * euler1 - o.dy(i) * sh;
            for (int j = 1; j <= n; ++j)
                r += o.dx(j) * sg(BasisElem::hB(i, j)) - o.dy(j) * sg(BasisElem::hA(i, j));
            return r;
        }
        case GenTag::a: {
            WeylOp r = GaussScalar(4) * (o.dz() * euler1) - GaussScalar(4) * (o.dz() * sh);
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    r -= GaussScalar(2) * (o.dx(a) * o.dy(b) * sg(BasisElem::hA(a, b)));
                    r += o.dx(a) * o.dx(b) * sg(BasisElem::hB(a, b));
                    r -= o.dy(a) * o.dy(b) * sg(BasisElem::hC(a, b));
                }
            return r;
        }
    }
    throw std::invalid_argument("unknown basis tag");
}

WeylOp pi_geom(const RepParams& p, const SigmaModel& sigma, const BasisElem& x) {
    const int n = p.n;
    Ops o{geometric_space(n)};
    auto sg = [&](const BasisElem& b) { return sigma.action(o.s, b); };
    // sigma_{lambda + rho}(h)
    WeylOp sh = sg(BasisElem::h()) + o.k(p.lambda + GaussScalar(n + 1L));
    WeylOp euler = o.Ex() + o.Ey() + o.Ez();
    const int i = x.i;
    switch (x.tag) {
        case GenTag::f: return -o.dx(i) + kHalf * (o.y(i) * o.dz());
        case GenTag::g: return -o.dy(i) - kHalf * (o.x(i) * o.dz());
        case GenTag::c: return -o.dz();
        case GenTag::h: return o.Ex() + o.Ey() + GaussScalar(2) * o.Ez() + sh;
        case GenTag::hA:
        case GenTag::hB:
        case GenTag::hC: return levi_geom(o, x) + sg(x);
        case GenTag::d: {
            WeylOp r = GaussScalar(2) * (o.z() * o.dy(i)) + o.x(i) * euler + o.x(i) * sh;
            for (int j = 1; j <= n; ++j)
                r -= o.x(j) * sg(BasisElem::hA(j, i)) + o.y(j) * sg(BasisElem::hC(i, j));
            return r;
        }
        case GenTag::e: {
            WeylOp r = GaussScalar(-2) * (o.z() * o.dx(i)) + o.y(i) * euler + o.y(i) * sh;
            for (int j = 1; j <= n; ++j)
                r += o.y(j) * sg(BasisElem::hA(i, j)) - o.x(j) * sg(BasisElem::hB(i, j));
            return r;
        }
        case GenTag::a: {
            WeylOp r = GaussScalar(4) * (o.z() * euler) + GaussScalar(4) * (o.z() * sh);
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    r -= GaussScalar(2) * (o.x(a) * o.y(b) * sg(BasisElem::hA(a, b)));
                    r += o.x(a) * o.x(b) * sg(BasisElem::hB(a, b));
                    r -= o.y(a) * o.y(b) * sg(BasisElem::hC(a, b));
                }
            return r;
        }
    }
    throw std::invalid_argument("unknown basis tag");
}

WeylOp rep_of(const Rep& rep, const Expansion& e, const VarSpace& space) {
    WeylOp out(space);
    for (const auto& [b, c] : e) out += rep(b) * c;
    return out;
}

DefectReport check_homomorphism(const Rep& rep, int n) {
    const auto basis = lie_basis(n);
    std::vector<WeylOp> img;
    img.reserve(basis.size());
    for (const auto& b : basis) img.push_back(rep(b));
    std::map<BasisElem, const WeylOp*> table;
    for (std::size_t k = 0; k < basis.size(); ++k) table[basis[k]] = &img[k];

    DefectReport report;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            WeylOp d = commutator(img[a], img[b]);
            for (const auto& [e, c] : bracket_matrix(n, basis[a], basis[b])) d -= *table.at(e) * c;
            ++report.pairs_checked;
            if (!d.is_zero()) report.defects.push_back({basis[a], basis[b], std::move(d)});
        }
    }
    return report;
}

}  // namespace fmethod
