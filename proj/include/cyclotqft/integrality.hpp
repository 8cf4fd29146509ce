#pragma once

#include <vector>

#include "cyclotqft/matrix.hpp"
#include "cyclotqft/modular_data.hpp"

namespace cyclotqft {

/** Change of basis U from the label basis to
 *  { 1 - Z,  X + X',  psi (X - X'),  1 + Z,  Y_1, ..., Y_r },
 *  expressed column-by-column in label coordinates. */
CycloMatrix u_matrix(long p);

/** u_matrix plus the first facts proved about it: conjugation by U makes both
 *  generators block-diagonal 3 + (r+1), and the 3x3 blocks are integral. */
struct SplitWitness {
    bool block_diagonal = false;
    bool h1_integral = false;
    CycloMatrix sigma_u;  // U^{-1} rho(sigma) U
    CycloMatrix tau_u;    // U^{-1} rho(tau) U
};

SplitWitness split_check(long p);

/** The restrictions to the (r+1)-dimensional invariant subspace spanned by
 *  1 + Z, Y_1, ..., Y_r: S' = [[1/sqrt p, a^t/sqrt p], [2a/sqrt p, A]] and
 *  T' = diag(1, theta_1, ..., theta_r), with a the all-ones column. */
std::pair<CycloMatrix, CycloMatrix> sprime_tprime(long p);

/** The diagonal D = diag(1, 2, ..., 2) reconstructed from the symmetry
 *  constraint D^{-1} S' D = (S')^t; throws std::logic_error if the
 *  constraint fails for this candidate. */
CycloMatrix d_matrix(long p);

/** Vandermonde matrix V_{jk} = theta_j^k, 0 <= j, k <= r. */
CycloMatrix v_matrix(long p);

/** Closed form for (S V)_{jk} with S = D^{-1} S' D ... the product of the
 *  symmetrized restriction with the Vandermonde:
 *    (S V)_{00} = sqrt(p);  (S V)_{j0} = 0 for j >= 1;
 *    (S V)_{jk} = jacobi(rk, p) * iota(p) * theta_j^{-1/k} for k >= 1,
 *  where -1/k is the inverse mod p. */
CycloElem sv_closed_form(long p, long j, long k);

struct ClosedFormWitness {
    bool holds = false;
    long j = -1, k = -1;  // first mismatch, when any
};

/** Compares S V (computed as a matrix product) against the closed form,
 *  entry by entry. */
ClosedFormWitness verify_prop1(long p);

/** Coefficients c_0..c_r of P_0(x) = prod_{n=1..r} (x - theta_n)/(1 - theta_n),
 *  ascending powers. */
std::vector<CycloElem> lagrange_p0(long p);

struct FirstColumnWitness {
    bool matches_inverse_column = false;  // coefficients of P_0 == column 0 of V^{-1}
    bool scaled_integral = false;         // sqrt(p) * (V^{-1} S V)_{j0} all integral
};

/** The first-column program: P_0 interpolates column zero of V^{-1}, and the
 *  first column of V^{-1} S V equals sqrt(p) * (column of V^{-1}), hence is
 *  integral after the sqrt(p) closed form. */
FirstColumnWitness verify_prop2(long p);

/** h(x) = (x - 1) prod_k (x - theta_k) and its companion matrix C_h.
 *  Checks V^{-1} T' V = (C_h)^t and that the coefficients b_k of h lie in the
 *  integer ring singled out by p mod 4. */
struct CompanionWitness {
    bool eigen_identity = false;        // h vanishes at 1 and at every theta_k
    bool conjugation_identity = false;  // V^{-1} T' V == (C_h)^t
    bool coefficients_integral = false;
    std::vector<CycloElem> h_coeffs;    // b_0 .. b_{r+1}, ascending, monic
};

CompanionWitness companion_check(long p);

/** W = U (Id_3 direct-sum D V): the full integral change of basis. */
CycloMatrix w_matrix(long p);

/** The full integrality verdict in one record: conjugate both generators by
 *  W and test every entry for membership in the integer ring. */
struct IntegralityReport {
    long p = 0;
    long ring_order = 0;  // p or 4p
    bool block_diagonal = false;
    bool sigma_integral = false;
    bool tau_integral = false;
    bool pass = false;
    long failed_row = -1, failed_col = -1;  // first failing entry, when any
    std::vector<std::vector<bool>> sigma_verdicts;
    std::vector<std::vector<bool>> tau_verdicts;
    CycloMatrix sigma_w;  // W^{-1} rho(sigma) W
    CycloMatrix tau_w;    // W^{-1} rho(tau) W
};

IntegralityReport theorem1_verdict(long p);

}  // namespace cyclotqft
