#pragma once

// Shorthand constructors for the generators of a Weyl algebra VarSpace.

#include "fmethod/weyl.hpp"

namespace fmethod {

struct Ops {
    VarSpace s;

    WeylOp one() const { return WeylOp::identity(s); }
    WeylOp k(const GaussScalar& c) const { return WeylOp::scalar(s, c); }
    WeylOp x(int i) const { return WeylOp::mul_var(s, s.x(i)); }
    WeylOp y(int i) const { return WeylOp::mul_var(s, s.y(i)); }
    WeylOp z() const { return WeylOp::mul_var(s, s.z()); }
    WeylOp q(int i) const { return WeylOp::mul_var(s, s.q(i)); }
    WeylOp dx(int i) const { return WeylOp::deriv(s, s.x(i)); }
    WeylOp dy(int i) const { return WeylOp::deriv(s, s.y(i)); }
    WeylOp dz() const { return WeylOp::deriv(s, s.z()); }
    WeylOp dq(int i) const { return WeylOp::deriv(s, s.q(i)); }

    WeylOp Ex() const {
        WeylOp e(s);
        for (int j = 1; j <= s.n; ++j) e += x(j) * dx(j);
        return e;
    }
    WeylOp Ey() const {
        WeylOp e(s);
        for (int j = 1; j <= s.n; ++j) e += y(j) * dy(j);
        return e;
    }
    WeylOp Ez() const { return z() * dz(); }
};

}  // namespace fmethod
