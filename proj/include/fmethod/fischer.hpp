#pragma once

// The sl(2) triple (D_s, E + n, X_s) on C[x, y] (x) C[q], harmonic slices
// M_m = ker D_s and the ladder (Fischer) decomposition.

#include "fmethod/weyl.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fmethod {

class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Sl2Ops {
    WeylOp Ds, E, Xs;
};

/// Fourier-picture D_s, E, X_s.
Sl2Ops build_sl2_ops(int n);

struct HarmonicSlice {
    int n = 1, m = 0, q_max = 0;
    std::vector<PolyVec> basis;
};

struct Sl2Relation {
    std::string name;
    WeylOp expected, got;
};
/// [E+n, D_s] = -D_s, [X_s, D_s] = i(E+n), [E+n, X_s] = X_s.
std::vector<Sl2Relation> sl2_relations(int n);

/// ker D_s on xy-degree m, z-degree 0, q-degree <= q_max.
HarmonicSlice mm_basis(int n, int m, int q_max);

/// -i r (2m + 2n + r - 1) / 2
GaussScalar ladder_coefficient(int n, int m, int r);

struct LadderResult {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};

/// Checks D_s X_s^r v and the d/dx_i, d/dy_i expansions of X_s^r v for v in M_m.
LadderResult ladder_check(int n, int m, int r, const PolyVec& v);

struct FischerComponent {
    int b = 0;          // power of X_s
    PolyVec harmonic;   // m_b in ker D_s
};

/// v = sum_b X_s^b m_b with D_s m_b = 0. v must have z-degree 0. Throws
/// TruncationError when a component needs q-degree above q_max.
std::vector<FischerComponent> decompose(int n, const PolyVec& v, int q_max);

}  // namespace fmethod
