#pragma once

#include <string>
#include <vector>

#include "cyclotqft/matrix.hpp"

namespace cyclotqft {

/** Simple-object labels 1, Z, Y_1..Y_r, X, X' for r = (p-1)/2, in that fixed
 *  order. Everything downstream indexes matrices by this order. */
struct LabelSet {
    long p;
    long r;

    explicit LabelSet(long p_);

    long size() const { return r + 4; }
    long unit() const { return 0; }
    long z() const { return 1; }
    long y(long j) const;  // 1 <= j <= r
    long x() const { return r + 2; }
    long xprime() const { return r + 3; }
    std::string name(long idx) const;
};

/** Fusion multiplicities N_{ab}^c over the label set. All values land in
 *  {0, 1}; the table is built from the defining product rules, closed under
 *  the exchange Z tensor X = X', and machine-validated for completeness. */
class FusionTable {
public:
    explicit FusionTable(long p);

    long p() const { return labels_.p; }
    long size() const { return labels_.size(); }
    const LabelSet& labels() const { return labels_; }

    long at(long a, long b, long c) const;

    /** sum_e N_{ab}^e N_{ec}^d == sum_f N_{bc}^f N_{af}^d for all a,b,c,d. */
    bool associativity_holds() const;

    /** d_a d_b = sum_c N_{ab}^c d_c for the exact dimension vector
     *  (1, 1, 2, ..., 2, sqrt(p), sqrt(p)). */
    bool dimension_consistency_holds() const;

private:
    LabelSet labels_;
    std::vector<long> n_;  // size^3, row-major (a, b, c)

    void set(long a, long b, long c, long v);
    std::size_t idx(long a, long b, long c) const;
};

inline FusionTable fusion_table(long p) { return FusionTable(p); }

/** theta_j = zeta_p^{r j^2} for 0 <= j <= r (theta_0 = 1). */
CycloElem theta(long p, long j);

/** psi = zeta_8^r. */
CycloElem psi(long p);

/** The r x r block A with A_{jk} = (zeta_p^{jk} + zeta_p^{-jk}) / sqrt(p),
 *  indices 1..r. */
CycloMatrix a_matrix(long p);

/** The genus-one generator images rho_1(sigma) and rho_1(tau) on the
 *  (r+4)-dimensional label space. */
CycloMatrix rho_sigma(long p);
CycloMatrix rho_tau(long p);

struct VerlindeWitness {
    bool holds = false;
    long a = -1, b = -1, c = -1;  // first mismatch, when any
};

/** Checks N_{ab}^c = sum_x S_{ax} S_{bx} conj(S_{cx}) / S_{1x} exactly,
 *  with S = rho_sigma(p) and the unit label in row 0. */
VerlindeWitness verlinde_check(const CycloMatrix& s, const FusionTable& n);

struct Sl2zScalars {
    bool relations_hold = false;
    CycloElem lambda;  // (S T)^3 = lambda * S^2
    CycloElem mu;      // S^4 = mu * Id
    Sl2zScalars(CycloElem l, CycloElem m) : lambda(std::move(l)), mu(std::move(m)) {}
};

/** Finds the exact scalars lambda, mu witnessing the projective relations
 *  (S T)^3 = lambda S^2 and S^4 = mu Id; relations_hold is false when no
 *  scalar works (reported, not thrown). */
Sl2zScalars sl2z_relations_check(const CycloMatrix& s, const CycloMatrix& t);

}  // namespace cyclotqft
