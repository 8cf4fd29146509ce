#include "cyclotqft/modular_data.hpp"

#include <stdexcept>

#include "cyclotqft/numtheory.hpp"

namespace cyclotqft {

namespace {

long mod(long a, long n) {
    long m = a % n;
    return m < 0 ? m + n : m;
}

void require_valid_prime(long p) {
    if (p < 5 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("label set needs an odd prime p >= 5");
}

CycloElem zeta_p_pow(long p, long e, const FieldPtr& f) {
    return root_of_unity(f, 8 * mod(e, p));
}

}  // namespace

LabelSet::LabelSet(long p_) : p(p_), r((p_ - 1) / 2) { require_valid_prime(p_); }

long LabelSet::y(long j) const {
    if (j < 1 || j > r) throw std::out_of_range("LabelSet: y index");
    return 1 + j;
}

std::string LabelSet::name(long idx) const {
    if (idx == 0) return "1";
    if (idx == 1) return "Z";
    if (idx == x()) return "X";
    if (idx == xprime()) return "X'";
    if (idx >= 2 && idx < 2 + r) return "Y" + std::to_string(idx - 1);
    throw std::out_of_range("LabelSet: index");
}

std::size_t FusionTable::idx(long a, long b, long c) const {
    const auto n = static_cast<std::size_t>(size());
    return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
           static_cast<std::size_t>(c);
}

long FusionTable::at(long a, long b, long c) const {
    if (a < 0 || b < 0 || c < 0 || a >= size() || b >= size() || c >= size())
        throw std::out_of_range("FusionTable: index");
    return n_[idx(a, b, c)];
}

void FusionTable::set(long a, long b, long c, long v) { n_[idx(a, b, c)] = v; }

FusionTable::FusionTable(long p) : labels_(p) {
    const long r = labels_.r;
    const long n = labels_.size();
    n_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                  static_cast<std::size_t>(n),
              -1);  // -1 marks "not yet defined"

    const long U = labels_.unit(), Z = labels_.z(), X = labels_.x(),
               XP = labels_.xprime();
    auto Y = [&](long j) { return labels_.y(j); };

    auto define = [&](long a, long b, const std::vector<long>& summands) {
        for (long c = 0; c < n; ++c) set(a, b, c, 0);
        for (long c : summands) {
            if (at(a, b, c) != 0)
                throw std::logic_error("FusionTable: repeated summand");
            set(a, b, c, 1);
        }
    };

    // unit row and column
    for (long b = 0; b < n; ++b) define(U, b, {b});

    // products given by the defining rules (Y indices fold with min{2j, p-2j})
    auto yfold = [&](long s) {
        const long t = mod(s, p);
        return std::min(t, p - t);  // in 1..r for t != 0
    };

    define(Z, Z, {U});
    define(Z, X, {XP});
    for (long j = 1; j <= r; ++j) define(Z, Y(j), {Y(j)});
    {
        std::vector<long> xx{U};
        for (long j = 1; j <= r; ++j) xx.push_back(Y(j));
        define(X, X, xx);
    }
    {
        std::vector<long> xxp{Z};
        for (long j = 1; j <= r; ++j) xxp.push_back(Y(j));
        define(X, XP, xxp);
    }
    for (long j = 1; j <= r; ++j) define(X, Y(j), {X, XP});
    for (long j = 1; j <= r; ++j) {
        const long fold = yfold(2 * j);
        define(Y(j), Y(j), {U, Z, Y(fold)});
    }
    for (long j = 1; j <= r; ++j)
        for (long k = j + 1; k <= r; ++k)
            define(Y(j), Y(k), {Y(yfold(j + k)), Y(yfold(j - k))});

    // completion through X' = Z (x) X: N_{X', b}^d = sum_c N_{Z, b'}...
    // first Z (x) X' = (Z Z) X = X
    define(Z, XP, {X});
    // then X' (x) b = sum_c N_{X b}^c (Z c) for b in {Y_j, X'}
    auto complete_from = [&](long b) {
        std::vector<long> out;
        for (long c = 0; c < n; ++c) {
            if (at(X, b, c) != 1) continue;
            for (long d = 0; d < n; ++d)
                if (at(Z, c, d) == 1) out.push_back(d);
        }
        define(XP, b, out);
    };
    for (long j = 1; j <= r; ++j) complete_from(Y(j));
    complete_from(XP);

    // commutativity closure
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                if (n_[idx(a, b, c)] >= 0 && n_[idx(b, a, c)] < 0)
                    set(b, a, c, at(a, b, c));
            }

    for (const long v : n_)
        if (v < 0) throw std::logic_error("FusionTable: product left undefined");
    if (!dimension_consistency_holds())
        throw std::logic_error("FusionTable: dimension consistency failed");
}

bool FusionTable::associativity_holds() const {
    const long n = size();
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                for (long d = 0; d < n; ++d) {
                    long lhs = 0, rhs = 0;
                    for (long e = 0; e < n; ++e) lhs += at(a, b, e) * at(e, c, d);
                    for (long f = 0; f < n; ++f) rhs += at(b, c, f) * at(a, f, d);
                    if (lhs != rhs) return false;
                }
    return true;
}

bool FusionTable::dimension_consistency_holds() const {
    const long pp = labels_.p;
    auto f = ambient_field(pp);
    const long n = size();
    std::vector<CycloElem> dim(static_cast<std::size_t>(n), CycloElem::one(f));
    dim[0] = CycloElem::one(f);
    dim[1] = CycloElem::one(f);
    for (long j = 1; j <= labels_.r; ++j)
        dim[static_cast<std::size_t>(labels_.y(j))] =
            CycloElem::from_rational(f, Rational(2));
    dim[static_cast<std::size_t>(labels_.x())] = sqrt_p_element(pp, f);
    dim[static_cast<std::size_t>(labels_.xprime())] = sqrt_p_element(pp, f);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            CycloElem rhs = CycloElem::zero(f);
            for (long c = 0; c < n; ++c) {
                if (at(a, b, c) == 0) continue;
                rhs = rhs + dim[static_cast<std::size_t>(c)] * Rational(at(a, b, c));
            }
            if (dim[static_cast<std::size_t>(a)] * dim[static_cast<std::size_t>(b)] !=
                rhs)
                return false;
        }
    return true;
}

CycloElem theta(long p, long j) {
    require_valid_prime(p);
    if (j < 0 || j > (p - 1) / 2) throw std::out_of_range("theta: index");
    auto f = ambient_field(p);
    const long r = (p - 1) / 2;
    return zeta_p_pow(p, r * j % p * j % p, f);
}

CycloElem psi(long p) {
    require_valid_prime(p);
    auto f = ambient_field(p);
    // zeta_8 = zeta_{8p}^p
    return root_of_unity(f, p * ((p - 1) / 2));
}

CycloMatrix a_matrix(long p) {
    require_valid_prime(p);
    auto f = ambient_field(p);
    const long r = (p - 1) / 2;
    const CycloElem invsqrt = sqrt_p_element(p, f).inverse();
    CycloMatrix a(f, r, r);
    for (long j = 1; j <= r; ++j)
        for (long k = 1; k <= r; ++k) {
            const CycloElem num =
                zeta_p_pow(p, j * k % p, f) + zeta_p_pow(p, -(j * k % p), f);
            a.set(j - 1, k - 1, num * invsqrt);
        }
    return a;
}

CycloMatrix rho_sigma(long p) {
    const LabelSet lb(p);
    auto f = ambient_field(p);
    const long n = lb.size();
    const long r = lb.r;
    const CycloElem invsqrt = sqrt_p_element(p, f).inverse();
    const CycloElem halfinv = invsqrt * Rational(1, 2);
    const CycloElem half = CycloElem::from_rational(f, Rational(1, 2));
    const CycloMatrix a = a_matrix(p);

    CycloMatrix s(f, n, n);
    // column of the unit: 1 -> (1 + Z)/(2 sqrt p) + sum_j Y_j/sqrt(p) + (X + X')/2
    s.set(lb.unit(), lb.unit(), halfinv);
    s.set(lb.z(), lb.unit(), halfinv);
    for (long j = 1; j <= r; ++j) s.set(lb.y(j), lb.unit(), invsqrt);
    s.set(lb.x(), lb.unit(), half);
    s.set(lb.xprime(), lb.unit(), half);
    // column of Z: same with X, X' flipped
    s.set(lb.unit(), lb.z(), halfinv);
    s.set(lb.z(), lb.z(), halfinv);
    for (long j = 1; j <= r; ++j) s.set(lb.y(j), lb.z(), invsqrt);
    s.set(lb.x(), lb.z(), -half);
    s.set(lb.xprime(), lb.z(), -half);
    // columns of Y_j: (1 + Z)/sqrt(p) + sum_k A_{kj} Y_k
    for (long j = 1; j <= r; ++j) {
        s.set(lb.unit(), lb.y(j), invsqrt);
        s.set(lb.z(), lb.y(j), invsqrt);
        for (long k = 1; k <= r; ++k) s.set(lb.y(k), lb.y(j), a.at(k - 1, j - 1));
    }
    // columns of X and X': supported on 1, Z, X, X' with half coefficients
    s.set(lb.unit(), lb.x(), half);
    s.set(lb.z(), lb.x(), -half);
    s.set(lb.x(), lb.x(), half);
    s.set(lb.xprime(), lb.x(), -half);
    s.set(lb.unit(), lb.xprime(), half);
    s.set(lb.z(), lb.xprime(), -half);
    s.set(lb.x(), lb.xprime(), -half);
    s.set(lb.xprime(), lb.xprime(), half);
    return s;
}

CycloMatrix rho_tau(long p) {
    const LabelSet lb(p);
    auto f = ambient_field(p);
    CycloMatrix t(f, lb.size(), lb.size());
    t.set(lb.unit(), lb.unit(), CycloElem::one(f));
    t.set(lb.z(), lb.z(), CycloElem::one(f));
    for (long j = 1; j <= lb.r; ++j) t.set(lb.y(j), lb.y(j), theta(p, j));
    t.set(lb.x(), lb.x(), psi(p));
    t.set(lb.xprime(), lb.xprime(), -psi(p));
    return t;
}

VerlindeWitness verlinde_check(const CycloMatrix& s, const FusionTable& n) {
    const long dim = n.size();
    if (s.rows() != dim || s.cols() != dim)
        throw std::invalid_argument("verlinde_check: shape mismatch");
    const auto f = s.field();
    const CycloMatrix sc = s.conj();
    std::vector<CycloElem> unit_row_inv;
    unit_row_inv.reserve(static_cast<std::size_t>(dim));
    for (long x = 0; x < dim; ++x) unit_row_inv.push_back(s.at(0, x).inverse());
    for (long a = 0; a < dim; ++a)
        for (long b = 0; b < dim; ++b)
            for (long c = 0; c < dim; ++c) {
                CycloElem acc = CycloElem::zero(f);
                for (long x = 0; x < dim; ++x)
                    acc = acc + s.at(a, x) * s.at(b, x) * sc.at(c, x) *
                                    unit_row_inv[static_cast<std::size_t>(x)];
                if (acc != CycloElem::from_rational(f, Rational(n.at(a, b, c))))
                    return {false, a, b, c};
            }
    return {true, -1, -1, -1};
}

Sl2zScalars sl2z_relations_check(const CycloMatrix& s, const CycloMatrix& t) {
    const auto f = s.field();
    const CycloMatrix st = s * t;
    const CycloMatrix st3 = st * st * st;
    const CycloMatrix s2 = s * s;
    const CycloMatrix s4 = s2 * s2;

    Sl2zScalars out(CycloElem::zero(f), CycloElem::zero(f));

    const auto pos = s2.first_nonzero();
    if (!pos) return out;
    out.lambda = st3.at(pos->first, pos->second) / s2.at(pos->first, pos->second);
    if (st3 != s2.scaled(out.lambda)) return out;

    const auto id = CycloMatrix::identity(f, s.rows());
    out.mu = s4.at(0, 0);
    if (s4 != id.scaled(out.mu)) return out;

    out.relations_hold = true;
    return out;
}

}  // namespace cyclotqft
