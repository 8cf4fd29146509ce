#include "cyclotqft/weil.hpp"

#include <stdexcept>

#include "cyclotqft/integrality.hpp"
#include "cyclotqft/numtheory.hpp"

namespace cyclotqft {

namespace {

long mod(long a, long n) {
    long m = a % n;
    return m < 0 ? m + n : m;
}

void require_same_group(long pa, long pb) {
    if (pa != pb) throw std::invalid_argument("mixed moduli");
}

}  // namespace

HeisElem::HeisElem(long p_, long x_, long y_, long z_) : p(p_) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("HeisElem: modulus must be an odd prime");
    x = mod(x_, p);
    y = mod(y_, p);
    z = mod(z_, p);
}

HeisElem heis_mul(const HeisElem& a, const HeisElem& b) {
    require_same_group(a.p, b.p);
    return {a.p, a.x + b.x, a.y + b.y, a.z + b.z + b.x * a.y};
}

HeisElem heis_inverse(const HeisElem& a) { return {a.p, -a.x, -a.y, a.x * a.y - a.z}; }

HeisElem heis_identity(long p) { return {p, 0, 0, 0}; }

Sl2p::Sl2p(long p_, long a_, long b_, long c_, long d_) : p(p_) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("Sl2p: modulus must be an odd prime");
    a = mod(a_, p);
    b = mod(b_, p);
    c = mod(c_, p);
    d = mod(d_, p);
    if (mod(a * d - b * c, p) != 1) throw std::invalid_argument("Sl2p: determinant is not 1");
}

Sl2p Sl2p::sigma(long p) { return {p, 0, -1, 1, 0}; }

Sl2p Sl2p::tau(long p) { return {p, 1, 1, 0, 1}; }

Sl2p Sl2p::operator*(const Sl2p& o) const {
    require_same_group(p, o.p);
    return {p, a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

HeisElem sl2_act(const Sl2p& alpha, const HeisElem& h) {
    require_same_group(alpha.p, h.p);
    const long p = h.p;
    const long inv2 = (p + 1) / 2;  // 2 * (p+1)/2 = p + 1 = 1 mod p
    const long q = mod(alpha.a * alpha.c % p * h.x % p * h.x + 2 * alpha.b * alpha.c % p * h.x % p * h.y +
                           alpha.b * alpha.d % p * h.y % p * h.y,
                       p);
    return {p, alpha.a * h.x + alpha.b * h.y, alpha.c * h.x + alpha.d * h.y, h.z + q * inv2};
}

AdditiveCharacter::AdditiveCharacter(long p, long c) : p_(p), c_(mod(c, p)) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("AdditiveCharacter: modulus must be an odd prime");
    if (c_ == 0) throw std::invalid_argument("AdditiveCharacter: trivial character");
    field_ = ambient_field(p);
}

CycloElem AdditiveCharacter::operator()(long j) const {
    return root_of_unity(field_, 8 * mod(c_ * mod(j, p_), p_));
}

AdditiveCharacter special_character(long p) { return {p, 1}; }

CycloMatrix pi_phi(const AdditiveCharacter& chi, const HeisElem& h) {
    require_same_group(chi.p(), h.p);
    const long p = h.p;
    CycloMatrix m(chi.field(), p, p);
    for (long b = 0; b < p; ++b) {
        const long a = mod(b + h.y, p);
        m.set(a, b, chi(h.z - h.x * a));
    }
    return m;
}

CycloMatrix weil_sigma(const AdditiveCharacter& chi) {
    const long p = chi.p();
    CycloMatrix m(chi.field(), p, p);
    for (long j = 0; j < p; ++j)
        for (long k = 0; k < p; ++k) m.set(j, k, chi(j * k));
    return m;
}

CycloMatrix weil_tau(const AdditiveCharacter& chi) {
    const long p = chi.p();
    const long inv2 = (p + 1) / 2;
    CycloMatrix m(chi.field(), p, p);
    for (long j = 0; j < p; ++j) m.set(j, j, chi(-(j * j % p) * inv2));
    return m;
}

bool intertwines(const AdditiveCharacter& chi, const Sl2p& alpha, const CycloMatrix& w) {
    const long p = chi.p();
    const HeisElem gens[] = {{p, 1, 0, 0}, {p, 0, 1, 0}, {p, 0, 0, 1}};
    for (const auto& h : gens)
        if (w * pi_phi(chi, h) != pi_phi(chi, sl2_act(alpha, h)) * w) return false;
    return true;
}

ParityDecomposition parity_decomposition(const CycloMatrix& w, long p) {
    if (w.rows() != p || w.cols() != p) throw std::invalid_argument("parity_decomposition: size");
    const long r = (p - 1) / 2;
    const auto& f = w.field();
    ParityDecomposition out{true, true, CycloMatrix(f, r + 1, r + 1)};

    // image of the even basis vector e_k (e_0 = 2 f_0, e_k = f_k + f_{p-k})
    for (long k = 0; k <= r; ++k) {
        std::vector<CycloElem> img;
        img.reserve(static_cast<std::size_t>(p));
        for (long a = 0; a < p; ++a) {
            CycloElem v = k == 0 ? w.at(a, 0) * Rational(2)
                                 : w.at(a, k) + w.at(a, p - k);
            img.push_back(std::move(v));
        }
        for (long j = 1; j <= r; ++j)
            if (img[static_cast<std::size_t>(j)] != img[static_cast<std::size_t>(p - j)])
                out.even_invariant = false;
        out.even_block.set(0, k, img[0] * Rational(1, 2));
        for (long j = 1; j <= r; ++j) out.even_block.set(j, k, img[static_cast<std::size_t>(j)]);
    }

    // image of the odd basis vector f_k - f_{p-k} must stay antisymmetric
    for (long k = 1; k <= r && out.odd_invariant; ++k) {
        std::vector<CycloElem> img;
        img.reserve(static_cast<std::size_t>(p));
        for (long a = 0; a < p; ++a) img.push_back(w.at(a, k) - w.at(a, p - k));
        if (!img[0].is_zero()) out.odd_invariant = false;
        for (long j = 1; j <= r; ++j)
            if (img[static_cast<std::size_t>(j)] != -img[static_cast<std::size_t>(p - j)])
                out.odd_invariant = false;
    }
    return out;
}

WeilFactorizationReport verify_theorem2(long p) {
    const AdditiveCharacter chi = special_character(p);
    auto f = chi.field();
    WeilFactorizationReport rep(p, CycloElem::zero(f), CycloElem::zero(f));

    const CycloMatrix ws = weil_sigma(chi);
    const CycloMatrix wt = weil_tau(chi);
    rep.sigma_intertwines = intertwines(chi, Sl2p::sigma(p), ws);
    rep.tau_intertwines = intertwines(chi, Sl2p::tau(p), wt);

    const ParityDecomposition ds = parity_decomposition(ws, p);
    const ParityDecomposition dt = parity_decomposition(wt, p);
    rep.even_invariant = ds.even_invariant && dt.even_invariant;
    rep.odd_invariant = ds.odd_invariant && dt.odd_invariant;

    const auto [sp, tp] = sprime_tprime(p);
    // the (0,0) corners pin the scalars: S'(0,0) = 1/sqrt(p) against
    // even(w_sigma)(0,0) = 1, and T'(0,0) = 1 against even(w_tau)(0,0) = 1
    rep.c_sigma = sp.at(0, 0) / ds.even_block.at(0, 0);
    rep.c_tau = tp.at(0, 0) / dt.even_block.at(0, 0);
    rep.sigma_matches = (sp == ds.even_block.scaled(rep.c_sigma));
    rep.tau_matches = (tp == dt.even_block.scaled(rep.c_tau));

    const CycloElem one = CycloElem::one(f);
    rep.scalars_expected =
        rep.c_sigma * sqrt_p_element(p, f) == one && rep.c_tau == one;
    rep.pass = rep.sigma_intertwines && rep.tau_intertwines && rep.even_invariant &&
               rep.odd_invariant && rep.sigma_matches && rep.tau_matches &&
               rep.scalars_expected;
    return rep;
}

}  // namespace cyclotqft
