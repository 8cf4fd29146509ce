#pragma once

#include <vector>

#include "cyclotqft/cyclo.hpp"

namespace cyclotqft {

/** Jacobi symbol (a | n) for odd positive n, by quadratic reciprocity.
 *  Returns -1, 0 or 1; throws std::invalid_argument for even or negative n. */
int jacobi(long a, long n);

/** True for primes; deterministic trial division (inputs here are small). */
bool is_prime(long n);

/** The quadratic Gauss sum  g(p, c) = sum_{l mod p} zeta_p^{c l^2}  inside the
 *  ambient field Q(zeta_{8p}). Requires gcd(c, p) = 1. */
CycloElem gauss_sum(long p, long c);

/** The fourth root of unity iota(p) with g(p, 1) = iota(p) * sqrt(p):
 *  1 when p = 1 mod 4 and i when p = 3 mod 4. */
CycloElem iota(long p);

/** The unit epsilon = (-1)^r * zeta_p^{-r(r+1)/2}, r = (p-1)/2. */
CycloElem epsilon_const(long p);

/** Order m of the integer ring Z[zeta_m] singled out by p mod 4:
 *  m = p when p = 1 mod 4, m = 4p when p = 3 mod 4. */
long ring_order_of(long p);

/** The quotient (1 - zeta_p^k) / (1 - zeta_p^{r k^2}), a unit of Z[zeta_p]. */
CycloElem eta_k(long p, long k);

struct FactorizationWitness {
    bool holds = false;
    CycloElem lhs;  // p as a field element
    CycloElem rhs;  // epsilon * prod (1 - zeta_p^k)^2
};

/** Checks  p = epsilon * prod_{k=1..r} (1 - zeta_p^k)^2  exactly. */
FactorizationWitness verify_lemma3(long p);

/** The unit u with sqrt(p) = u * prod_{k=1..r} (1 - zeta_p^{r k^2}), together
 *  with machine-checked membership of u and u^{-1} in the integer ring. */
struct UnitWitness {
    CycloElem u;
    CycloElem u_inv;
    long ring_order = 0;            // p or 4p
    SubringWitness u_membership;
    SubringWitness u_inv_membership;
    bool product_identity = false;  // u * prod(1 - theta_k) == sqrt(p)
    bool verified = false;          // all of the above
};

/** Computes u and verifies every claim about it. Signals (std::domain_error)
 *  if any factor 1 - theta_k vanishes, which would make u undefined. */
UnitWitness unit_u(long p);

}  // namespace cyclotqft
