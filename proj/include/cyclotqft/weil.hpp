#pragma once

#include "cyclotqft/matrix.hpp"

namespace cyclotqft {

/** Element (x, y, z) of the order-p^3 Heisenberg group: the upper
 *  unitriangular 3x3 matrix over Z/p with y and z in the first row and x in
 *  the second. Coordinates are kept reduced mod p. The layout is forced by
 *  the representation formula in pi_phi: it makes pi_phi a homomorphism. */
struct HeisElem {
    long p;
    long x, y, z;

    HeisElem(long p_, long x_, long y_, long z_);

    bool operator==(const HeisElem& o) const {
        return p == o.p && x == o.x && y == o.y && z == o.z;
    }
    bool operator!=(const HeisElem& o) const { return !(*this == o); }
};

/** (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x'y), the matrix product. */
HeisElem heis_mul(const HeisElem& a, const HeisElem& b);
HeisElem heis_inverse(const HeisElem& a);
HeisElem heis_identity(long p);

/** An element of SL(2, Z/p): entries reduced mod p, determinant validated to
 *  be 1 mod p at construction (std::invalid_argument otherwise). */
struct Sl2p {
    long p;
    long a, b, c, d;

    Sl2p(long p_, long a_, long b_, long c_, long d_);

    static Sl2p sigma(long p);  // [[0, -1], [1, 0]]
    static Sl2p tau(long p);    // [[1, 1], [0, 1]]

    Sl2p operator*(const Sl2p& o) const;
    bool operator==(const Sl2p& o) const {
        return p == o.p && a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/** The lift of the defining action on (x, y) to the Heisenberg group:
 *    (x, y) -> (ax + by, cx + dy),
 *    z      -> z + (ac x^2 + 2bc xy + bd y^2) / 2,
 *  with 1/2 the reciprocal of 2 mod p. Fixes the center pointwise; each
 *  alpha acts as a group automorphism and composition follows the matrix
 *  product (both facts are machine-checked in the tests). */
HeisElem sl2_act(const Sl2p& alpha, const HeisElem& h);

/** The additive character j -> zeta_p^{c j} of Z/p, c nonzero mod p. */
class AdditiveCharacter {
public:
    AdditiveCharacter(long p, long c);

    long p() const { return p_; }
    long scale() const { return c_; }
    const FieldPtr& field() const { return field_; }

    /** chi(j), j taken mod p. */
    CycloElem operator()(long j) const;

private:
    long p_;
    long c_;
    FieldPtr field_;
};

/** The choice c = 1, which ties the Weil picture to the label picture. */
AdditiveCharacter special_character(long p);

/** The p-dimensional irreducible representation of the Heisenberg group with
 *  central character chi, on functions Z/p -> C in the delta basis f_0..f_{p-1}:
 *    pi(x,y,z) f_b = chi(z - x (b + y)) f_{b+y}. */
CycloMatrix pi_phi(const AdditiveCharacter& chi, const HeisElem& h);

/** Intertwiner candidates for the two generators:
 *    w_sigma(j, k) = chi(j k),   w_tau = diag(chi(-j^2 / 2)). */
CycloMatrix weil_sigma(const AdditiveCharacter& chi);
CycloMatrix weil_tau(const AdditiveCharacter& chi);

/** Checks  w pi(h) = pi(alpha h) w  on the three generators (1,0,0), (0,1,0),
 *  (0,0,1) of the Heisenberg group; since pi is a homomorphism and alpha an
 *  automorphism, this extends to every element. */
bool intertwines(const AdditiveCharacter& chi, const Sl2p& alpha, const CycloMatrix& w);

/** Restriction data of a p x p matrix to the parity split of functions on
 *  Z/p: the even subspace is spanned by 2 f_0 and f_j + f_{p-j} (j = 1..r),
 *  the odd one by f_j - f_{p-j}. even_block is meaningful only when
 *  even_invariant holds. */
struct ParityDecomposition {
    bool even_invariant = false;
    bool odd_invariant = false;
    CycloMatrix even_block;  // (r+1) x (r+1)
};

ParityDecomposition parity_decomposition(const CycloMatrix& w, long p);

/** The factorization verdict: with the c = 1 character, the even blocks of
 *  the intertwiners reproduce the restricted generator images up to the
 *  recorded scalars,
 *    S' = c_sigma * even(w_sigma)  with  c_sigma * sqrt(p) = 1,
 *    T' = c_tau   * even(w_tau)    with  c_tau = 1,
 *  so the restricted representation factors through SL(2, Z/p) projectively. */
struct WeilFactorizationReport {
    long p = 0;
    bool sigma_intertwines = false;
    bool tau_intertwines = false;
    bool even_invariant = false;  // both intertwiners
    bool odd_invariant = false;   // both intertwiners
    bool sigma_matches = false;   // S' == c_sigma * even(w_sigma)
    bool tau_matches = false;     // T' == c_tau * even(w_tau)
    bool scalars_expected = false;
    bool pass = false;
    CycloElem c_sigma;
    CycloElem c_tau;

    WeilFactorizationReport(long p_, CycloElem cs, CycloElem ct)
        : p(p_), c_sigma(std::move(cs)), c_tau(std::move(ct)) {}
};

WeilFactorizationReport verify_theorem2(long p);

}  // namespace cyclotqft
