#pragma once

// Singular vectors of the Fourier-picture realization: exact kernel search on
// homogeneity slices, the closed-form T operators, their recurrences and the
// comparison with the case table of the classification.

#include "fmethod/reps.hpp"
#include "fmethod/weyl.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fmethod {

/// Common kernel of pi_hat(d_i), pi_hat(e_i) on the m-homogeneity slice with
/// q-degree <= q_max. p.lambda is the parameter of pi_hat itself. Throws
/// std::logic_error if a kernel vector is not also killed by pi_hat(a).
std::vector<PolyVec> kernel_search(const RepParams& p, int m, int q_max);

/// lambda = ((m+r)^2 + m(m+2n-1)) / (2(m+r)); nullopt stands for "all lambda" (m = r = 0).
std::optional<GaussScalar> lambda_candidates(int m, int r, int n);

/// a_k = i^k (k!)^2 C(a/2,k) C(a/2-1/2,k) C(a/2-1/2+n,k), k = 0..floor(a/2), the solution
/// of the recurrence below with a_0 = 1. A single k! breaks it from k = 2 on.
std::vector<GaussScalar> t_coefficients(int n, int a);
/// T^n_a = sum_k a_k z^k X_s^(a-2k).
WeylOp t_operator(int n, int a);

/// 2(k+1) a_{k+1} - (i/4)(r-2k)(r-2k-1)(2n+r-2k-1) a_k = 0 for all k (a_{k} = 0 past the end).
bool recurrence_verify(int n, int r, const std::vector<GaussScalar>& coeffs);

/// The two coupled conditions on sum_k a_k z^k X_s^(r-2k) v_m being killed
/// by P_1 and P_2 (first condition for every k, second for k+1 <= floor(r/2)).
bool general_recurrence_verify(int n, int m, int r, const GaussScalar& lambda,
                               const std::vector<GaussScalar>& coeffs);

/// sum_j (x_j pi(d_j) + y_j pi(e_j)) and sum_j (dx_j pi(e_j) - dy_j pi(d_j)).
std::pair<WeylOp, WeylOp> solution_operators(const RepParams& p);

enum class SingularCase {
    generic_M0_only,
    integer_case_T,
    half_integer_case_T,
    half_integer_case_M_and_X,
    n1_full_case
};
std::string to_string(SingularCase c);

/// Where lambda (the character of the inducing module) sits in the case table.
struct CaseInfo {
    SingularCase kind = SingularCase::generic_M0_only;
    int row = 1;          // row of the n = 1 or n >= 2 table
    int t_order = 0;      // a of the T_a M_0 summand, 0 if absent
    int harmonic_m = 0;   // m of the M_m summand, 0 if absent
    bool xs_summand = false;
};
CaseInfo case_of(int n, const GaussScalar& lambda);

struct BoxResult {
    int m = 0;
    int q_max = 0;
    int kernel_dim = 0;
    int predicted_dim = 0;
    bool generators_in_kernel = true;
    bool match = false;
};

struct SingularReport {
    RepParams params;        // lambda of the inducing module
    GaussScalar lambda_hat;  // parameter passed to pi_hat: lambda + n + 1
    CaseInfo info;
    std::vector<BoxResult> boxes;
    std::vector<PolyVec> found_generators;
    bool match = false;

    nlohmann::json to_json() const;
};

/// Predicted singular vectors inside the (m, q <= q_max) box.
std::vector<PolyVec> predicted_generators(int n, const CaseInfo& info, int m, int q_max);

SingularReport classify(const RepParams& p, int m_max, int q_max);

}  // namespace fmethod
