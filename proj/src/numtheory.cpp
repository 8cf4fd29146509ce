#include "cyclotqft/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclotqft {

namespace {

long mod(long a, long n) {
    long m = a % n;
    return m < 0 ? m + n : m;
}

// zeta_p^e inside Q(zeta_{8p})
CycloElem zeta_p_pow(long p, long e, const FieldPtr& f) {
    return root_of_unity(f, 8 * mod(e, p));
}

}  // namespace

int jacobi(long a, long n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long m8 = n % 8;
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

CycloElem gauss_sum(long p, long c) {
    if (std::gcd(mod(c, p), p) != 1)
        throw std::invalid_argument("gauss_sum: c must be invertible mod p");
    auto f = ambient_field(p);
    CycloElem g = CycloElem::zero(f);
    for (long l = 0; l < p; ++l) g = g + zeta_p_pow(p, c * l % p * l % p, f);
    return g;
}

CycloElem iota(long p) {
    auto f = ambient_field(p);
    // i = zeta_{8p}^{2p}
    return p % 4 == 1 ? CycloElem::one(f) : root_of_unity(f, 2 * p);
}

CycloElem epsilon_const(long p) {
    auto f = ambient_field(p);
    const long r = (p - 1) / 2;
    CycloElem eps = zeta_p_pow(p, -(r * (r + 1) / 2), f);
    return r % 2 == 0 ? eps : -eps;
}

long ring_order_of(long p) { return p % 4 == 1 ? p : 4 * p; }

CycloElem eta_k(long p, long k) {
    auto f = ambient_field(p);
    const long r = (p - 1) / 2;
    const CycloElem one = CycloElem::one(f);
    const CycloElem num = one - zeta_p_pow(p, k, f);
    const CycloElem den = one - zeta_p_pow(p, r * k % p * k % p, f);
    return num / den;
}

FactorizationWitness verify_lemma3(long p) {
    auto f = ambient_field(p);
    const long r = (p - 1) / 2;
    FactorizationWitness w{false, CycloElem::from_rational(f, Rational(p)),
                           epsilon_const(p)};
    for (long k = 1; k <= r; ++k) {
        const CycloElem factor = CycloElem::one(f) - zeta_p_pow(p, k, f);
        w.rhs = w.rhs * factor * factor;
    }
    w.holds = (w.lhs == w.rhs);
    return w;
}

UnitWitness unit_u(long p) {
    auto f = ambient_field(p);
    const long r = (p - 1) / 2;
    CycloElem prod = CycloElem::one(f);
    for (long k = 1; k <= r; ++k) {
        const CycloElem factor =
            CycloElem::one(f) - zeta_p_pow(p, r * k % p * k % p, f);
        if (factor.is_zero())
            throw std::domain_error("unit_u: vanishing factor 1 - theta_k");
        prod = prod * factor;
    }
    const CycloElem sqrtp = sqrt_p_element(p, f);
    UnitWitness w{sqrtp / prod, CycloElem::zero(f), ring_order_of(p), {}, {}, false,
                  false};
    w.u_inv = w.u.inverse();
    w.product_identity = (w.u * prod == sqrtp);
    w.u_membership = in_subring(w.u, w.ring_order, true);
    w.u_inv_membership = in_subring(w.u_inv, w.ring_order, true);
    w.verified =
        w.product_identity && w.u_membership.member && w.u_inv_membership.member;
    return w;
}

}  // namespace cyclotqft
