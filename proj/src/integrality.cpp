#include "cyclotqft/integrality.hpp"

#include <stdexcept>

#include "cyclotqft/numtheory.hpp"

namespace cyclotqft {

namespace {

long mod(long a, long n) {
    long m = a % n;
    return m < 0 ? m + n : m;
}

long inv_mod(long a, long n) {
    a = mod(a, n);
    for (long x = 1; x < n; ++x)
        if (a * x % n == 1) return x;
    throw std::invalid_argument("inv_mod: not invertible");
}

}  // namespace

CycloMatrix u_matrix(long p) {
    const LabelSet lb(p);
    auto f = ambient_field(p);
    const CycloElem one = CycloElem::one(f);
    const CycloElem ps = psi(p);
    CycloMatrix u(f, lb.size(), lb.size());
    // column 0: 1 - Z
    u.set(lb.unit(), 0, one);
    u.set(lb.z(), 0, -one);
    // column 1: X + X'
    u.set(lb.x(), 1, one);
    u.set(lb.xprime(), 1, one);
    // column 2: psi (X - X')
    u.set(lb.x(), 2, ps);
    u.set(lb.xprime(), 2, -ps);
    // column 3: 1 + Z
    u.set(lb.unit(), 3, one);
    u.set(lb.z(), 3, one);
    // columns 4..: Y_1, ..., Y_r
    for (long j = 1; j <= lb.r; ++j) u.set(lb.y(j), 3 + j, one);
    return u;
}

SplitWitness split_check(long p) {
    const LabelSet lb(p);
    const long n = lb.size();
    const CycloMatrix u = u_matrix(p);
    const CycloMatrix uinv = u.inverse();
    SplitWitness w{false, false, uinv * rho_sigma(p) * u, uinv * rho_tau(p) * u};
    w.block_diagonal = w.sigma_u.block(0, 3, 3, n - 3).is_zero() &&
                       w.sigma_u.block(3, 0, n - 3, 3).is_zero() &&
                       w.tau_u.block(0, 3, 3, n - 3).is_zero() &&
                       w.tau_u.block(3, 0, n - 3, 3).is_zero();
    const long m = ring_order_of(p);
    w.h1_integral = true;
    for (long i = 0; i < 3 && w.h1_integral; ++i)
        for (long j = 0; j < 3 && w.h1_integral; ++j) {
            if (!in_subring(w.sigma_u.at(i, j), m, true).member) w.h1_integral = false;
            if (!in_subring(w.tau_u.at(i, j), m, true).member) w.h1_integral = false;
        }
    return w;
}

std::pair<CycloMatrix, CycloMatrix> sprime_tprime(long p) {
    const LabelSet lb(p);
    auto f = ambient_field(p);
    const long r = lb.r;
    const CycloElem invsqrt = sqrt_p_element(p, f).inverse();
    const CycloMatrix a = a_matrix(p);

    CycloMatrix s(f, r + 1, r + 1);
    s.set(0, 0, invsqrt);
    for (long k = 1; k <= r; ++k) {
        s.set(0, k, invsqrt);
        s.set(k, 0, invsqrt * Rational(2));
        for (long j = 1; j <= r; ++j) s.set(j, k, a.at(j - 1, k - 1));
    }
    CycloMatrix t(f, r + 1, r + 1);
    t.set(0, 0, CycloElem::one(f));
    for (long j = 1; j <= r; ++j) t.set(j, j, theta(p, j));
    return {s, t};
}

CycloMatrix d_matrix(long p) {
    const LabelSet lb(p);
    auto f = ambient_field(p);
    CycloMatrix d(f, lb.r + 1, lb.r + 1);
    d.set(0, 0, CycloElem::one(f));
    for (long j = 1; j <= lb.r; ++j) d.set(j, j, CycloElem::from_rational(f, Rational(2)));
    const auto [s, t] = sprime_tprime(p);
    if (d.inverse() * s * d != s.transpose())
        throw std::logic_error("d_matrix: symmetry constraint failed");
    (void)t;
    return d;
}

CycloMatrix v_matrix(long p) {
    const LabelSet lb(p);
    auto f = ambient_field(p);
    const long r = lb.r;
    CycloMatrix v(f, r + 1, r + 1);
    for (long j = 0; j <= r; ++j) {
        const CycloElem tj = theta(p, j);
        CycloElem acc = CycloElem::one(f);
        for (long k = 0; k <= r; ++k) {
            v.set(j, k, acc);
            if (k < r) acc = acc * tj;
        }
    }
    return v;
}

CycloElem sv_closed_form(long p, long j, long k) {
    const long r = (p - 1) / 2;
    if (j < 0 || j > r || k < 0 || k > r)
        throw std::out_of_range("sv_closed_form: index");
    auto f = ambient_field(p);
    if (k == 0)
        return j == 0 ? sqrt_p_element(p, f) : CycloElem::zero(f);
    const long e = mod(-inv_mod(k, p), p);  // -1/k mod p
    // theta_j^{-1/k} = zeta_p^{r j^2 e}
    CycloElem out = iota(p) * root_of_unity(f, 8 * mod(r * j % p * j % p * e % p, p));
    if (jacobi(r * k % p, p) == -1) out = -out;
    return out;
}

ClosedFormWitness verify_prop1(long p) {
    const long r = (p - 1) / 2;
    const auto [sp, tp] = sprime_tprime(p);
    const CycloMatrix d = d_matrix(p);
    const CycloMatrix s = d.inverse() * sp * d;  // symmetrized restriction
    const CycloMatrix sv = s * v_matrix(p);
    (void)tp;
    for (long j = 0; j <= r; ++j)
        for (long k = 0; k <= r; ++k)
            if (sv.at(j, k) != sv_closed_form(p, j, k)) return {false, j, k};
    return {true, -1, -1};
}

std::vector<CycloElem> lagrange_p0(long p) {
    const long r = (p - 1) / 2;
    auto f = ambient_field(p);
    // expand prod (x - theta_n), then divide by prod (1 - theta_n)
    std::vector<CycloElem> coeffs{CycloElem::one(f)};
    CycloElem denom = CycloElem::one(f);
    for (long n = 1; n <= r; ++n) {
        const CycloElem tn = theta(p, n);
        std::vector<CycloElem> next(coeffs.size() + 1, CycloElem::zero(f));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = next[i + 1] + coeffs[i];
            next[i] = next[i] - coeffs[i] * tn;
        }
        coeffs = std::move(next);
        denom = denom * (CycloElem::one(f) - tn);
    }
    const CycloElem dinv = denom.inverse();
    for (auto& c : coeffs) c = c * dinv;
    return coeffs;  // size r + 1
}

FirstColumnWitness verify_prop2(long p) {
    const long r = (p - 1) / 2;
    auto f = ambient_field(p);
    FirstColumnWitness w;

    const CycloMatrix v = v_matrix(p);
    const CycloMatrix vinv = v.inverse();
    const auto p0 = lagrange_p0(p);
    w.matches_inverse_column = true;
    for (long k = 0; k <= r; ++k)
        if (vinv.at(k, 0) != p0[static_cast<std::size_t>(k)]) {
            w.matches_inverse_column = false;
            break;
        }

    // first column of V^{-1} (S V): by the closed form, S V has first column
    // (sqrt p, 0, ..., 0)^t, so the product column is sqrt(p) * V^{-1} e_0 and
    // must be integral entry by entry.
    const auto [sp, tp] = sprime_tprime(p);
    (void)tp;
    const CycloMatrix d = d_matrix(p);
    const CycloMatrix s = d.inverse() * sp * d;
    const CycloMatrix whole = vinv * s * v;
    const long m = ring_order_of(p);
    w.scaled_integral = true;
    const CycloElem sqrtp = sqrt_p_element(p, f);
    for (long j = 0; j <= r; ++j) {
        if (whole.at(j, 0) != vinv.at(j, 0) * sqrtp) {
            w.scaled_integral = false;
            break;
        }
        if (!in_subring(whole.at(j, 0), m, true).member) {
            w.scaled_integral = false;
            break;
        }
    }
    return w;
}

CompanionWitness companion_check(long p) {
    const long r = (p - 1) / 2;
    auto f = ambient_field(p);
    CompanionWitness w;

    // h(x) = (x - 1) prod_{k=1..r} (x - theta_k), ascending coefficients
    std::vector<CycloElem> h{CycloElem::one(f)};
    std::vector<CycloElem> roots{CycloElem::one(f)};
    for (long k = 1; k <= r; ++k) roots.push_back(theta(p, k));
    for (const auto& root : roots) {
        std::vector<CycloElem> next(h.size() + 1, CycloElem::zero(f));
        for (std::size_t i = 0; i < h.size(); ++i) {
            next[i + 1] = next[i + 1] + h[i];
            next[i] = next[i] - h[i] * root;
        }
        h = std::move(next);
    }
    w.h_coeffs = h;  // degree r + 1, monic

    // every root annihilates h (the eigenvector identity behind the
    // companion form: h(T') = 0 on the diagonal)
    w.eigen_identity = true;
    for (const auto& root : roots) {
        CycloElem acc = CycloElem::zero(f);
        CycloElem powv = CycloElem::one(f);
        for (std::size_t i = 0; i < h.size(); ++i) {
            acc = acc + h[i] * powv;
            powv = powv * root;
        }
        if (!acc.is_zero()) {
            w.eigen_identity = false;
            break;
        }
    }

    // transposed companion matrix of h: subdiagonal ones, last column
    // -b_0..-b_r (ascending-power coefficients); V^{-1} T' V must equal it
    CycloMatrix cht(f, r + 1, r + 1);
    for (long i = 1; i <= r; ++i) cht.set(i, i - 1, CycloElem::one(f));
    for (long i = 0; i <= r; ++i) cht.set(i, r, -h[static_cast<std::size_t>(i)]);

    const auto [sp, tp] = sprime_tprime(p);
    (void)sp;
    const CycloMatrix v = v_matrix(p);
    const CycloMatrix conj = v.inverse() * tp * v;
    w.conjugation_identity = (conj == cht);

    const long m = ring_order_of(p);
    w.coefficients_integral = true;
    for (const auto& c : h)
        if (!in_subring(c, m, true).member) {
            w.coefficients_integral = false;
            break;
        }
    return w;
}

CycloMatrix w_matrix(long p) {
    auto f = ambient_field(p);
    const CycloMatrix id3 = CycloMatrix::identity(f, 3);
    const CycloMatrix dv = d_matrix(p) * v_matrix(p);
    return u_matrix(p) * CycloMatrix::direct_sum(id3, dv);
}

IntegralityReport theorem1_verdict(long p) {
    const LabelSet lb(p);
    const long n = lb.size();
    auto f = ambient_field(p);
    IntegralityReport rep{p,
                          ring_order_of(p),
                          false,
                          false,
                          false,
                          false,
                          -1,
                          -1,
                          {},
                          {},
                          CycloMatrix(f, n, n),
                          CycloMatrix(f, n, n)};
    const CycloMatrix w = w_matrix(p);
    const CycloMatrix winv = w.inverse();
    rep.sigma_w = winv * rho_sigma(p) * w;
    rep.tau_w = winv * rho_tau(p) * w;

    rep.block_diagonal = rep.sigma_w.block(0, 3, 3, n - 3).is_zero() &&
                         rep.sigma_w.block(3, 0, n - 3, 3).is_zero() &&
                         rep.tau_w.block(0, 3, 3, n - 3).is_zero() &&
                         rep.tau_w.block(3, 0, n - 3, 3).is_zero();

    auto scan = [&](const CycloMatrix& mat, std::vector<std::vector<bool>>& verdicts) {
        bool all = true;
        verdicts.assign(static_cast<std::size_t>(n),
                        std::vector<bool>(static_cast<std::size_t>(n), false));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                const bool ok = in_subring(mat.at(i, j), rep.ring_order, true).member;
                verdicts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ok;
                if (!ok) {
                    all = false;
                    if (rep.failed_row < 0) {
                        rep.failed_row = i;
                        rep.failed_col = j;
                    }
                }
            }
        return all;
    };
    rep.sigma_integral = scan(rep.sigma_w, rep.sigma_verdicts);
    rep.tau_integral = scan(rep.tau_w, rep.tau_verdicts);
    rep.pass = rep.block_diagonal && rep.sigma_integral && rep.tau_integral;
    return rep;
}

}  // namespace cyclotqft
