#pragma once

// Homomorphisms of generalized Verma modules induced from the metaplectic
// module: the elements Q_s, P_s, the symmetrized powers and phi_0, and the
// identification tau_phi of U(u-bar) (x) S with C[x, y, z] (x) S.

#include "fmethod/liealg.hpp"
#include "fmethod/reps.hpp"
#include "fmethod/weyl.hpp"

#include <utility>

namespace fmethod {

struct QsPs {
    SymElem Qs;    // -sum_j (i f_j q_j + g_j dq_j) in S(u-bar) (x) End S
    UbarElem Ps;   //  sum_j (i f_j q_j + g_j dq_j) in U(u-bar) (x) End S
};
QsPs qs_ps_elems(int n);

/// beta applied to the k-th power of the S(u-bar) lift of P_s (that is, to
/// (-Q_s)^k). Equals (-1)^k (beta (x) id)(Q_s^k).
UbarElem beta_qs_expand(int n, int k);

struct VermaHom {
    int n = 1;
    int a = 1;
    UbarElem element;     // phi_0 as an element of U(u-bar) (x) End S
    GaussScalar lambda;   // -(n + 1 - a/2)
    GaussScalar mu;       // -(n + 1 + a/2)
};

/// sum_k (-1)^k a_k c^k beta((-Q_s)^(a-2k)) with a_k the T-operator coefficients.
VermaHom phi0_build(int n, int a);

/// The closed forms for a = 1..4, written in P_s and c directly. Throws
/// std::invalid_argument for other a.
UbarElem phi0_closed_form(int n, int a);

/// Apply the End S factor of every term to v; the result has no dq parts
/// and stands for an element of U(u-bar) (x) S.
UbarElem apply_end_s(const UbarElem& u, const PolyVec& v);

/// sum over terms of pi_hat(f)^alpha pi_hat(g)^beta pi_hat(c)^k (End S part applied to v).
/// v must be a polynomial in q only.
PolyVec tau_phi_apply(const RepParams& p, const UbarElem& u, const PolyVec& v);

/// Preimage of target under tau_phi(., 1), as an element with q-multiplication
/// End S parts only. target must lie in the m-homogeneity slice.
UbarElem inv_tau_phi(const RepParams& p, const PolyVec& target, int m);

}  // namespace fmethod
