#pragma once

// Operator realizations of sp(2n+2) induced from a parabolic module.
//
// pi_hat         : Fourier picture, inducing module the metaplectic one (closed formulas)
// pi_hat_general : Fourier picture, any SigmaModel, twisted by lambda - rho
// pi_geom        : geometric (hatted) picture, any SigmaModel, twisted by lambda + rho

#include "fmethod/liealg.hpp"
#include "fmethod/weyl.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fmethod {

enum class SigmaKind { ssw, ssw_dual, trivial_character };

/// Action of the Levi factor on S = C[q]. The center (h) acts by 0 before
/// twisting; the nilradical acts trivially.
struct SigmaModel {
    SigmaKind kind = SigmaKind::ssw;

    std::string name() const;
    static SigmaModel parse(const std::string& s);
    /// sigma(X) for X among h, hA, hB, hC. Throws std::invalid_argument otherwise.
    WeylOp action(const VarSpace& space, const BasisElem& x) const;
};

struct RepParams {
    int n = 1;
    GaussScalar lambda;
    int rho_scalar() const { return n + 1; }
};

using Rep = std::function<WeylOp(const BasisElem&)>;

WeylOp pi_hat(const RepParams& p, const BasisElem& x);
WeylOp pi_hat_general(const RepParams& p, const SigmaModel& sigma, const BasisElem& x);
WeylOp pi_geom(const RepParams& p, const SigmaModel& sigma, const BasisElem& x);

/// pi_geom with the dual metaplectic module.
inline WeylOp pi_star(const RepParams& p, const BasisElem& x) {
    return pi_geom(p, SigmaModel{SigmaKind::ssw_dual}, x);
}

/// Linear extension of a basis realization.
WeylOp rep_of(const Rep& rep, const Expansion& e, const VarSpace& space);

struct Defect {
    BasisElem x, y;
    WeylOp defect;
};

struct DefectReport {
    int pairs_checked = 0;
    std::vector<Defect> defects;
    bool ok() const { return defects.empty(); }
};

/// [rep(X), rep(Y)] - rep([X,Y]) for every ordered basis pair X < Y.
DefectReport check_homomorphism(const Rep& rep, int n);

}  // namespace fmethod
