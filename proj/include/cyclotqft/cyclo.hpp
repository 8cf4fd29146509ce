#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "cyclotqft/rational.hpp"

namespace cyclotqft {

/** Euler totient, by trial-division factorization. n >= 1. */
long euler_phi(long n);

/** Moebius function. n >= 1. */
int mobius(long n);

/** Coefficients of the N-th cyclotomic polynomial Phi_N, ascending degree,
 *  monic, computed exactly from the Moebius product
 *      Phi_N(x) = prod_{d | N} (x^d - 1)^{mu(N/d)}
 *  by integer polynomial multiplication and exact division. */
std::vector<mpz_class> cyclotomic_poly(long n);

/** The cyclotomic field Q(zeta_N) presented as Q[x] / Phi_N(x).
 *
 * Elements are canonical coefficient vectors over the power basis
 * 1, z, ..., z^{phi(N)-1} where z is the class of x (a primitive N-th root of
 * unity). The field precomputes x^e mod Phi_N for every residue e mod N, which
 * makes both multiplication fold-down and Galois twists table lookups.
 * Instances are immutable and shared; obtain them through get().
 */
class CycloField {
public:
    long order() const { return order_; }     // N
    long degree() const { return degree_; }   // phi(N)
    const std::vector<mpz_class>& modulus() const { return phi_; }

    /** Canonical coefficients of z^{e mod N}; e may be any integer. */
    const std::vector<mpz_class>& power_row(long e) const;

    static std::shared_ptr<const CycloField> get(long n);

private:
    explicit CycloField(long n);

    long order_;
    long degree_;
    std::vector<mpz_class> phi_;
    std::vector<std::vector<mpz_class>> rows_;  // rows_[e] = z^e canonical, e in [0, N)
};

using FieldPtr = std::shared_ptr<const CycloField>;

/** One element of Q(zeta_N). Value type; all operations are exact.
 *
 * Two elements are equal exactly when they live over the same order N and
 * their canonical coefficient vectors agree componentwise. Mixing orders in
 * arithmetic throws std::invalid_argument.
 */
class CycloElem {
public:
    CycloElem(FieldPtr field, std::vector<Rational> coeffs);

    static CycloElem zero(const FieldPtr& f);
    static CycloElem one(const FieldPtr& f);
    static CycloElem from_rational(const FieldPtr& f, const Rational& r);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /** True when the element lies in Q (all basis coefficients beyond 1 vanish). */
    bool is_rational() const;
    /** The value as a Rational; throws std::domain_error if not rational. */
    Rational as_rational() const;

    CycloElem operator-() const;
    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem operator*(const Rational& r) const;
    /** Exact division a/b = a * b^{-1}; throws std::domain_error on zero b. */
    CycloElem operator/(const CycloElem& o) const;

    /** Multiplicative inverse via the extended Euclidean algorithm against
     *  Phi_N. Throws std::domain_error on zero. */
    CycloElem inverse() const;

    /** The Galois twist z^j -> z^{jt mod N}; requires gcd(t, N) = 1. */
    CycloElem galois(long t) const;

    /** Integer power, negative exponents through inverse(). */
    CycloElem pow(long e) const;

    bool operator==(const CycloElem& o) const;
    bool operator!=(const CycloElem& o) const { return !(*this == o); }

    /** Bit-stable text form: nonzero terms "<num>/<den>*z^<k>" in ascending k
     *  joined by '+'; the zero element prints as "0". */
    std::string to_string() const;
    static CycloElem parse(const FieldPtr& f, const std::string& s);

    /** Numerical embedding z -> exp(2*pi*i/N), evaluated with MPFR at the
     *  requested decimal precision (digits >= 15) and rounded to doubles. */
    std::complex<double> embed(long digits = 20) const;

private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const CycloElem& e) { return e.is_zero(); }

/** zeta_N^k as an element of f (k taken mod N). */
CycloElem root_of_unity(const FieldPtr& f, long k);

inline CycloElem inverse(const CycloElem& a) { return a.inverse(); }
inline CycloElem galois(const CycloElem& a, long t) { return a.galois(t); }
inline std::complex<double> embed_complex(const CycloElem& a, long digits = 20) {
    return a.embed(digits);
}

/** Outcome of a subring membership test. Either a certificate (the exact
 *  coordinates of the element over the power basis of zeta_m) or a refusal
 *  carrying the first witness of failure. */
struct SubringWitness {
    bool member = false;
    long subring_order = 0;            // m
    bool integral_required = false;
    std::vector<Rational> coeffs;      // over 1, zeta_m, ..., zeta_m^{phi(m)-1}
    long failing_automorphism = 0;     // first t = 1 mod m with galois(a,t) != a
    long non_integral_index = -1;      // first coefficient outside Z, when relevant
    std::string reason;                // empty on success
};

/** Membership of a in Q(zeta_m) (and in Z[zeta_m] when integral is set), for
 *  m dividing the ambient order N. Decides by (i) invariance under every
 *  Galois twist t = 1 mod m, (ii) an exact linear solve over the power basis
 *  of zeta_m inside Q(zeta_N), (iii) re-expanding the solved coordinates and
 *  comparing with a, and (iv) integrality of the coordinates if requested.
 *  Never accepts without the re-expansion reproducing a exactly. */
SubringWitness in_subring(const CycloElem& a, long m, bool integral);

/** The positive square root of p (p an odd prime dividing N, with 4 | N) as
 *  the quadratic Gauss sum sum_l zeta_p^{l^2}, times -i when p = 3 mod 4.
 *  The positive-real sign convention is validated through the numerical
 *  embedding; a violation throws std::logic_error. */
CycloElem sqrt_p_element(long p, const FieldPtr& f);

/** The ambient field Q(zeta_{8p}) used by everything downstream: it contains
 *  zeta_p, i, zeta_8 and zeta_{4p} at once. */
FieldPtr ambient_field(long p);

}  // namespace cyclotqft
