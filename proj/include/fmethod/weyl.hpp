#pragma once

// Sparse normal-ordered Weyl algebra over the variable families
//   x_1..x_n, y_1..y_n, z, q_1..q_n
// (or their hatted counterparts in the geometric picture), together with
// polynomial vectors in C[x,y,z] (x) C[q] on which the operators act.
//
// A monomial stores multiplication exponents followed by derivative
// exponents, one slot per variable in the order x < y < z < q. In normal
// form every multiplication stands left of every derivative.

#include "fmethod/scalar.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fmethod {

enum class Picture { fourier, geometric };

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct VarSpace {
    int n = 1;
    Picture picture = Picture::fourier;

    int nvars() const { return 3 * n + 1; }
    // 1-based family indices, 0-based slots.
    int x(int i) const { return check(i), i - 1; }
    int y(int i) const { return check(i), n + i - 1; }
    int z() const { return 2 * n; }
    int q(int i) const { return check(i), 2 * n + i; }

    std::string var_name(int slot) const;

    friend bool operator==(const VarSpace&, const VarSpace&) = default;

private:
    void check(int i) const {
        if (i < 1 || i > n) throw DimensionError("variable index out of range");
    }
};

VarSpace fourier_space(int n);
VarSpace geometric_space(int n);

using Exps = std::vector<std::uint8_t>;
using Terms = std::map<Exps, GaussScalar>;

void require_same_space(const VarSpace& a, const VarSpace& b);

class PolyVec;

/// Element of the Weyl algebra in normal form. Zero coefficients are never stored.
class WeylOp {
public:
    WeylOp() = default;
    explicit WeylOp(VarSpace space) : space_(space) {}

    static WeylOp scalar(VarSpace space, const GaussScalar& c);
    static WeylOp identity(VarSpace space) { return scalar(space, GaussScalar(1)); }
    static WeylOp mul_var(VarSpace space, int slot, unsigned power = 1);
    static WeylOp deriv(VarSpace space, int slot, unsigned power = 1);
    /// Single term c * prod v^mult * prod d_v^deriv.
    static WeylOp monomial(VarSpace space, const Exps& mult, const Exps& deriv,
                           const GaussScalar& c = GaussScalar(1));

    const VarSpace& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c * (monomial with packed exponents key).
    void add_term(const Exps& key, const GaussScalar& c);

    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    WeylOp& operator*=(const GaussScalar& c);
    WeylOp operator-() const;

    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator*(WeylOp a, const GaussScalar& c) { return a *= c; }
    friend WeylOp operator*(const GaussScalar& c, WeylOp a) { return a *= c; }
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
    friend bool operator==(const WeylOp& a, const WeylOp& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }

    WeylOp pow(unsigned k) const;

    /// Common (mult-degree - deriv-degree) of all terms under the weights
    /// x,y:1 z:2 q:0; nullopt when terms disagree or the operator is zero.
    std::optional<int> grading_shift() const;
    unsigned max_deriv_order() const;

    std::string to_string() const;
    static WeylOp parse(VarSpace space, std::string_view text);

    nlohmann::json to_json() const;
    static WeylOp from_json(const nlohmann::json& j);

private:
    VarSpace space_{};
    Terms terms_;
};

WeylOp normal_mul(const WeylOp& p, const WeylOp& q);
WeylOp commutator(const WeylOp& p, const WeylOp& q);

/// Polynomial vector in C[x,y,z] (x) C[q]; keys hold multiplication exponents only.
class PolyVec {
public:
    PolyVec() = default;
    explicit PolyVec(VarSpace space) : space_(space) {}

    static PolyVec constant(VarSpace space, const GaussScalar& c);
    static PolyVec monomial(VarSpace space, const Exps& exps, const GaussScalar& c = GaussScalar(1));

    const VarSpace& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exps& key, const GaussScalar& c);
    GaussScalar coeff(const Exps& key) const;

    PolyVec& operator+=(const PolyVec& o);
    PolyVec& operator-=(const PolyVec& o);
    PolyVec& operator*=(const GaussScalar& c);
    PolyVec operator-() const;
    friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
    friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
    friend PolyVec operator*(PolyVec a, const GaussScalar& c) { return a *= c; }
    friend PolyVec operator*(const GaussScalar& c, PolyVec a) { return a *= c; }
    friend bool operator==(const PolyVec& a, const PolyVec& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }

    // Degree statistics over all terms (0 for the zero vector).
    int max_q_degree() const;
    int max_z_degree() const;
    /// True when every term has xy-degree + 2 z-degree == m.
    bool is_homogeneous(int m) const;

    std::string to_string() const;
    static PolyVec parse(VarSpace space, std::string_view text);
    nlohmann::json to_json() const;
    static PolyVec from_json(const nlohmann::json& j);

    friend PolyVec apply(const WeylOp& p, const PolyVec& v);

private:
    VarSpace space_{};
    Terms terms_;
};

PolyVec apply(const WeylOp& p, const PolyVec& v);

// Per-monomial degree helpers on multiplication exponent vectors.
int xy_degree(const VarSpace& s, const Exps& e);
int z_degree(const VarSpace& s, const Exps& e);
int q_degree(const VarSpace& s, const Exps& e);
inline int homogeneity(const VarSpace& s, const Exps& e) { return xy_degree(s, e) + 2 * z_degree(s, e); }

/// All multiplication monomials with xy-degree + 2*z-degree == m and
/// q-degree <= q_max. Ordered by q-degree, then z-degree, then descending
/// lexicographic on the (x,y) exponents, then descending lexicographic on q.
std::vector<Exps> slice_basis(const VarSpace& space, int m, int q_max);

/// All exponent vectors of total degree d over `count` variables in
/// descending lexicographic order.
std::vector<std::vector<int>> compositions(int d, int count);

}  // namespace fmethod
