#pragma once

// sp(2n+2) in the block layout (1, n, 1, n) with its contact grading, and the
// algebras U(u-bar) (x) End(S), S(u-bar) (x) End(S) where u-bar is the
// Heisenberg algebra spanned by f_i, g_i, c and S = C[q_1..q_n].

#include "fmethod/scalar.hpp"
#include "fmethod/weyl.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace fmethod {

enum class GenTag : std::uint8_t { f, g, c, d, e, a, h, hA, hB, hC };

/// Basis element of sp(2n+2). Indices are 1-based; unused ones stay 0.
///   hA(i,j) = h_{E_ij,0,0},  hB(i,j) = h_{0,E_ij+E_ji,0},  hC(i,j) = h_{0,0,E_ij+E_ji}
/// hB and hC are symmetric in (i,j) and stored with i <= j.
struct BasisElem {
    GenTag tag = GenTag::h;
    int i = 0;
    int j = 0;

    static BasisElem f(int i) { return {GenTag::f, i, 0}; }
    static BasisElem g(int i) { return {GenTag::g, i, 0}; }
    static BasisElem c() { return {GenTag::c, 0, 0}; }
    static BasisElem d(int i) { return {GenTag::d, i, 0}; }
    static BasisElem e(int i) { return {GenTag::e, i, 0}; }
    static BasisElem a() { return {GenTag::a, 0, 0}; }
    static BasisElem h() { return {GenTag::h, 0, 0}; }
    static BasisElem hA(int i, int j) { return {GenTag::hA, i, j}; }
    static BasisElem hB(int i, int j) { return i <= j ? BasisElem{GenTag::hB, i, j} : BasisElem{GenTag::hB, j, i}; }
    static BasisElem hC(int i, int j) { return i <= j ? BasisElem{GenTag::hC, i, j} : BasisElem{GenTag::hC, j, i}; }

    std::string name() const;
    /// Degree in the contact grading: f,g -1; c -2; d,e +1; a +2; Levi 0.
    int grade() const;

    friend auto operator<=>(const BasisElem&, const BasisElem&) = default;
};

/// f_1..f_n, g_1..g_n, c, d_1..d_n, e_1..e_n, a, h, hA(i,j), hB(i<=j), hC(i<=j).
std::vector<BasisElem> lie_basis(int n);
inline int lie_dim(int n) { return (n + 1) * (2 * n + 3); }

class MatG {
public:
    explicit MatG(int n) : n_(n), entries_((2 * n + 2) * (2 * n + 2)) {}

    int n() const { return n_; }
    int size() const { return 2 * n_ + 2; }
    GaussScalar& at(int r, int c) { return entries_[r * size() + c]; }
    const GaussScalar& at(int r, int c) const { return entries_[r * size() + c]; }

    MatG transpose() const;
    MatG& operator+=(const MatG& o);
    MatG& operator-=(const MatG& o);
    MatG& operator*=(const GaussScalar& s);
    friend MatG operator+(MatG a, const MatG& b) { return a += b; }
    friend MatG operator-(MatG a, const MatG& b) { return a -= b; }
    friend MatG operator*(MatG a, const GaussScalar& s) { return a *= s; }
    friend MatG operator*(const MatG& a, const MatG& b);
    friend bool operator==(const MatG&, const MatG&) = default;

    bool is_zero() const;
    /// X^T J + J X == 0 for J = [[0, I], [-I, 0]] in (n+1)-blocks.
    bool is_symplectic() const;

private:
    int n_;
    std::vector<GaussScalar> entries_;
};

MatG symplectic_form(int n);
MatG basis_matrix(int n, const BasisElem& x);

using Expansion = std::map<BasisElem, GaussScalar>;

/// Coordinates of a matrix in lie_basis(n). Throws std::logic_error when the
/// matrix is not in the span.
Expansion expand_matrix(const MatG& m);
Expansion bracket_matrix(int n, const BasisElem& x, const BasisElem& y);
std::string to_string(const Expansion& e);

// ---------------------------------------------------------------------------
// Heisenberg PBW algebras.

/// Key layout of a PBW monomial f^alpha g^beta c^k q^gamma dq^delta.
struct PbwLayout {
    int n;
    int f(int j) const { return j - 1; }
    int g(int j) const { return n + j - 1; }
    int c() const { return 2 * n; }
    int q(int j) const { return 2 * n + j; }
    int dq(int j) const { return 3 * n + j; }
    int size() const { return 4 * n + 1; }
};

enum class LetterKind : std::uint8_t { f, g, c, q, dq };
struct Letter {
    LetterKind kind;
    int index = 0;  // 1-based; ignored for c
};

enum class PbwProduct { enveloping, symmetric };

/// Sparse element over PBW monomials. With PbwProduct::enveloping this is
/// U(u-bar) (x) End S (g_i f_i = f_i g_i + c); with PbwProduct::symmetric the
/// u-bar factor is commutative, i.e. S(u-bar) (x) End S. The End S factor is
/// the Weyl algebra in q with q left of dq in both cases.
template <PbwProduct P>
class PbwElem {
public:
    PbwElem() = default;
    explicit PbwElem(int n) : n_(n) {}

    static PbwElem scalar(int n, const GaussScalar& s);
    static PbwElem letter(int n, Letter l);

    int n() const { return n_; }
    PbwLayout layout() const { return {n_}; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& key, const GaussScalar& c);
    GaussScalar coeff(const Exps& key) const;

    PbwElem& operator+=(const PbwElem& o);
    PbwElem& operator-=(const PbwElem& o);
    PbwElem& operator*=(const GaussScalar& s);
    PbwElem operator-() const;
    friend PbwElem operator+(PbwElem a, const PbwElem& b) { return a += b; }
    friend PbwElem operator-(PbwElem a, const PbwElem& b) { return a -= b; }
    friend PbwElem operator*(PbwElem a, const GaussScalar& s) { return a *= s; }
    friend PbwElem operator*(const GaussScalar& s, PbwElem a) { return a *= s; }
    friend PbwElem operator*(const PbwElem& a, const PbwElem& b) { return multiply(a, b); }
    friend bool operator==(const PbwElem& a, const PbwElem& b) = default;

    PbwElem pow(unsigned k) const;

    /// Largest |alpha| + |beta| + k over the terms; -1 for zero.
    int filtration_degree() const;

    /// "(1/2*i) f1 g1^2 c q1 dq1 + g1"; the bare unit monomial prints as its coefficient.
    std::string to_string() const;

private:
    static PbwElem multiply(const PbwElem& a, const PbwElem& b);

    int n_ = 1;
    Terms terms_;
};

using UbarElem = PbwElem<PbwProduct::enveloping>;
using SymElem = PbwElem<PbwProduct::symmetric>;

/// Multiplies the letters left to right in U(u-bar) (x) End S.
UbarElem heisenberg_normal_form(int n, const std::vector<Letter>& word);

/// beta (x) id: symmetrization of the u-bar factor, End S factor untouched.
UbarElem symmetrize_beta(const SymElem& s);

/// Same element read in the other algebra (identical coefficients on keys).
UbarElem as_ubar(const SymElem& s);
SymElem as_sym(const UbarElem& u);

}  // namespace fmethod
