#pragma once

// From Verma-module homomorphisms to equivariant differential operators in the
// geometric picture: the dual substitution, the operators D_a, their
// factorized forms, intertwining defects and the twistor components.

#include "fmethod/fischer.hpp"
#include "fmethod/liealg.hpp"
#include "fmethod/reps.hpp"
#include "fmethod/weyl.hpp"

#include <vector>

namespace fmethod {

/// f_j -> dxh_j + 1/2 yh_j dzh, g_j -> dyh_j - 1/2 xh_j dzh, c -> dzh on the
/// U(u-bar) part (an algebra map); the End S part is transposed,
/// q^gamma dq^delta -> (-dq)^delta q^gamma.
WeylOp dualize(const UbarElem& u);

struct EquivariantOp {
    int n = 1;
    int a = 1;
    WeylOp op;
    GaussScalar source_lambda;  // -a/2
    GaussScalar target_lambda;  // a/2
};

/// D_s-hat and X_s-hat in the geometric picture.
WeylOp dirac_hat(int n);
WeylOp xs_hat(int n);
/// D_s-hat + 1/2 X_s-hat dzh.
WeylOp contact_dirac(int n);

/// The closed forms of D_1..D_4. Throws std::invalid_argument for a > 4.
EquivariantOp explicit_Da(int n, int a);
/// a = 2k+2: prod_{j=0..k} (D1^2 - i(2j+1)^2/4 dzh); a = 2k+1: D1 prod_{j=1..k} (D1^2 - i j^2 dzh).
WeylOp factorized_Da(int n, int a);

/// D pi*_{-a/2}(X) - pi*_{a/2}(X) D, with pi* the geometric realization on the dual module.
WeylOp intertwine_defect(int n, int a, const WeylOp& D, const BasisElem& x);

struct IntertwineReport {
    int checked = 0;
    std::vector<std::pair<BasisElem, WeylOp>> defects;
    bool ok() const { return defects.empty(); }
};
IntertwineReport intertwine_all(int n, int a, const WeylOp& D);

/// dualize(inv_tau_phi(w)) for each basis vector w of the slice. p.lambda is the
/// Fourier-picture parameter and must equal m + n - 1/2.
std::vector<WeylOp> twistor_components(const RepParams& p, const HarmonicSlice& slice);

}  // namespace fmethod
