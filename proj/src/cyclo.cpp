#include "cyclotqft/cyclo.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclotqft/linear.hpp"

namespace cyclotqft {

namespace {

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> fs;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            fs.emplace_back(q, e);
        }
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

// product of integer polynomials, ascending coefficients
std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// exact quotient a / b over Z; throws if the division leaves a remainder
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> a,
                                     const std::vector<mpz_class>& b) {
    if (b.empty() || b.back() == 0)
        throw std::invalid_argument("poly_divexact: bad divisor");
    if (a.size() < b.size()) throw std::invalid_argument("poly_divexact: degree");
    std::vector<mpz_class> q(a.size() - b.size() + 1, mpz_class(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class qc;
        mpz_class rem;
        mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), a[i + b.size() - 1].get_mpz_t(),
                    b.back().get_mpz_t());
        if (rem != 0) throw std::logic_error("poly_divexact: inexact division");
        q[i] = qc;
        if (qc == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= qc * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

std::vector<mpz_class> x_pow_minus_one(long d) {
    std::vector<mpz_class> p(static_cast<std::size_t>(d) + 1, mpz_class(0));
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    return p;
}

long normalize_mod(long a, long n) {
    long m = a % n;
    return m < 0 ? m + n : m;
}

}  // namespace

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long out = 1;
    for (auto [q, e] : factorize(n)) {
        long qe = 1;
        for (int i = 1; i < e; ++i) qe *= q;
        out *= qe * (q - 1);
    }
    return out;
}

int mobius(long n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int out = 1;
    for (auto [q, e] : factorize(n)) {
        (void)q;
        if (e > 1) return 0;
        out = -out;
    }
    return out;
}

std::vector<mpz_class> cyclotomic_poly(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    std::vector<mpz_class> num{mpz_class(1)};
    std::vector<std::vector<mpz_class>> dens;
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        const int mu = mobius(n / d);
        if (mu == 1)
            num = poly_mul(num, x_pow_minus_one(d));
        else if (mu == -1)
            dens.push_back(x_pow_minus_one(d));
    }
    for (const auto& den : dens) num = poly_divexact(num, den);
    if (static_cast<long>(num.size()) != euler_phi(n) + 1 || num.back() != 1)
        throw std::logic_error("cyclotomic_poly: degree check failed");
    return num;
}

CycloField::CycloField(long n) : order_(n) {
    phi_ = cyclotomic_poly(n);
    degree_ = static_cast<long>(phi_.size()) - 1;
    rows_.resize(static_cast<std::size_t>(n));
    const auto d = static_cast<std::size_t>(degree_);
    for (long e = 0; e < n; ++e) {
        auto& row = rows_[static_cast<std::size_t>(e)];
        row.assign(d, mpz_class(0));
        if (e < degree_) {
            row[static_cast<std::size_t>(e)] = 1;
        } else {
            // z^e = z * z^{e-1}, reduced with the monic modulus:
            // z^deg = -(phi_0 + phi_1 z + ... + phi_{deg-1} z^{deg-1})
            const auto& prev = rows_[static_cast<std::size_t>(e - 1)];
            const mpz_class& lead = prev[d - 1];
            for (std::size_t k = d; k-- > 1;) row[k] = prev[k - 1] - lead * phi_[k];
            row[0] = -lead * phi_[0];
        }
    }
}

const std::vector<mpz_class>& CycloField::power_row(long e) const {
    return rows_[static_cast<std::size_t>(normalize_mod(e, order_))];
}

FieldPtr CycloField::get(long n) {
    static std::mutex mu;
    static std::map<long, FieldPtr> cache;
    if (n < 1) throw std::invalid_argument("CycloField: order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    FieldPtr f(new CycloField(n));
    cache.emplace(n, f);
    return f;
}

CycloElem::CycloElem(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("CycloElem: null field");
    if (static_cast<long>(coeffs_.size()) != field_->degree())
        throw std::invalid_argument("CycloElem: coefficient count != field degree");
}

CycloElem CycloElem::zero(const FieldPtr& f) {
    return CycloElem(f, std::vector<Rational>(static_cast<std::size_t>(f->degree())));
}

CycloElem CycloElem::one(const FieldPtr& f) { return from_rational(f, Rational(1)); }

CycloElem CycloElem::from_rational(const FieldPtr& f, const Rational& r) {
    std::vector<Rational> c(static_cast<std::size_t>(f->degree()));
    c[0] = r;
    return CycloElem(f, std::move(c));
}

bool CycloElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

Rational CycloElem::as_rational() const {
    if (!is_rational()) throw std::domain_error("CycloElem: not a rational value");
    return coeffs_[0];
}

namespace {
void require_same_field(const CycloElem& a, const CycloElem& b) {
    if (a.field()->order() != b.field()->order())
        throw std::invalid_argument("CycloElem: mixed field orders");
}
}  // namespace

CycloElem CycloElem::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
    return CycloElem(field_, std::move(c));
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k] + o.coeffs_[k];
    return CycloElem(field_, std::move(c));
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k] - o.coeffs_[k];
    return CycloElem(field_, std::move(c));
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    require_same_field(*this, o);
    const auto d = coeffs_.size();
    std::vector<mpq_class> conv(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        const mpq_class& ai = coeffs_[i].raw();
        for (std::size_t j = 0; j < d; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            conv[i + j] += ai * o.coeffs_[j].raw();
        }
    }
    std::vector<mpq_class> out(conv.begin(), conv.begin() + static_cast<long>(d));
    for (std::size_t e = d; e < conv.size(); ++e) {
        if (conv[e] == 0) continue;
        const auto& row = field_->power_row(static_cast<long>(e));
        for (std::size_t k = 0; k < d; ++k) {
            if (row[k] == 0) continue;
            out[k] += conv[e] * row[k];
        }
    }
    std::vector<Rational> c(d);
    for (std::size_t k = 0; k < d; ++k) c[k].raw() = std::move(out[k]);
    return CycloElem(field_, std::move(c));
}

CycloElem CycloElem::operator*(const Rational& r) const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k] * r;
    return CycloElem(field_, std::move(c));
}

CycloElem CycloElem::operator/(const CycloElem& o) const { return *this * o.inverse(); }

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElem: inverse of zero");
    // extended Euclid in Q[x] for gcd(a, Phi_N) = g with s*a + t*Phi = g;
    // Phi_N need not be irreducible for composite-feeling N values, but the
    // gcd of a nonzero reduced element with Phi is a unit whenever a is
    // invertible; a nontrivial gcd means a is a zero divisor and is signaled.
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& p) -> long {
        for (std::size_t i = p.size(); i-- > 0;)
            if (!p[i].is_zero()) return static_cast<long>(i);
        return -1;
    };
    auto trim = [&](Poly& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    Poly r0;
    for (const auto& z : field_->modulus()) r0.emplace_back(z);
    Poly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    Poly s0{Rational(0)}, s1{Rational(1)};  // coefficients on a
    while (deg(r1) > 0) {
        // divide r0 by r1
        Poly q(static_cast<std::size_t>(deg(r0) - deg(r1)) + 1);
        Poly rem = r0;
        const long d1 = deg(r1);
        const Rational& lead = r1[static_cast<std::size_t>(d1)];
        for (long i = deg(rem); i >= d1; --i) {
            Rational c = rem[static_cast<std::size_t>(i)] / lead;
            if (c.is_zero()) continue;
            q[static_cast<std::size_t>(i - d1)] = c;
            for (long j = 0; j <= d1; ++j)
                rem[static_cast<std::size_t>(i - d1 + j)] -=
                    c * r1[static_cast<std::size_t>(j)];
        }
        trim(rem);
        // s_next = s0 - q*s1
        Poly qs(q.size() + s1.size() - 1);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        Poly snext(std::max(s0.size(), qs.size()));
        for (std::size_t i = 0; i < snext.size(); ++i) {
            Rational v = i < s0.size() ? s0[i] : Rational(0);
            if (i < qs.size()) v -= qs[i];
            snext[i] = v;
        }
        trim(snext);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    if (deg(r1) != 0) throw std::domain_error("CycloElem: zero divisor, no inverse");
    const Rational g = r1[0];
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t k = 0; k < s1.size() && k < c.size(); ++k) c[k] = s1[k] / g;
    // s1 has degree < deg(Phi) by the Euclid invariants, so this is canonical
    return CycloElem(field_, std::move(c));
}

CycloElem CycloElem::galois(long t) const {
    const long n = field_->order();
    const long tt = normalize_mod(t, n);
    if (std::gcd(tt, n) != 1)
        throw std::invalid_argument("CycloElem: galois exponent not coprime to order");
    const auto d = coeffs_.size();
    std::vector<mpq_class> out(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (coeffs_[j].is_zero()) continue;
        const auto& row = field_->power_row(static_cast<long>(j) * tt % n);
        for (std::size_t k = 0; k < d; ++k) {
            if (row[k] == 0) continue;
            out[k] += coeffs_[j].raw() * row[k];
        }
    }
    std::vector<Rational> c(d);
    for (std::size_t k = 0; k < d; ++k) c[k].raw() = std::move(out[k]);
    return CycloElem(field_, std::move(c));
}

CycloElem CycloElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElem acc = one(field_);
    CycloElem base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

bool CycloElem::operator==(const CycloElem& o) const {
    if (field_->order() != o.field_->order()) return false;
    return coeffs_ == o.coeffs_;
}

std::string CycloElem::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += '+';
        out += coeffs_[k].to_string();
        out += "*z^";
        out += std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

CycloElem CycloElem::parse(const FieldPtr& f, const std::string& s) {
    if (s == "0") return zero(f);
    std::vector<Rational> c(static_cast<std::size_t>(f->degree()));
    std::vector<bool> seen(c.size(), false);
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto next = s.find("*z^", pos);
        if (next == std::string::npos)
            throw std::invalid_argument("CycloElem: malformed term in '" + s + "'");
        const std::string coeff = s.substr(pos, next - pos);
        std::size_t expEnd = next + 3;
        while (expEnd < s.size() && s[expEnd] != '+') ++expEnd;
        const std::string expStr = s.substr(next + 3, expEnd - (next + 3));
        if (expStr.empty() || coeff.empty())
            throw std::invalid_argument("CycloElem: malformed term in '" + s + "'");
        std::size_t parsedLen = 0;
        const long k = std::stol(expStr, &parsedLen);
        if (parsedLen != expStr.size() || k < 0 || k >= f->degree())
            throw std::invalid_argument("CycloElem: exponent out of range in '" + s + "'");
        if (seen[static_cast<std::size_t>(k)])
            throw std::invalid_argument("CycloElem: duplicate exponent in '" + s + "'");
        seen[static_cast<std::size_t>(k)] = true;
        Rational r = Rational::from_string(coeff);
        if (r.is_zero())
            throw std::invalid_argument("CycloElem: zero term in '" + s + "'");
        c[static_cast<std::size_t>(k)] = r;
        pos = expEnd < s.size() ? expEnd + 1 : expEnd;
        if (expEnd < s.size() && pos >= s.size())
            throw std::invalid_argument("CycloElem: trailing separator in '" + s + "'");
    }
    return CycloElem(f, std::move(c));
}

std::complex<double> CycloElem::embed(long digits) const {
    if (digits < 15) throw std::invalid_argument("CycloElem: need >= 15 digits");
    const auto prec =
        static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.33 + 64);
    mpfr_t re, im, ang, c, s, q, twopi;
    mpfr_inits2(prec, re, im, ang, c, s, q, twopi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(twopi, MPFR_RNDN);
    mpfr_mul_ui(twopi, twopi, 2, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    const long n = field_->order();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        mpfr_mul_ui(ang, twopi, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_div_ui(ang, ang, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_sin_cos(s, c, ang, MPFR_RNDN);
        mpfr_set_q(q, coeffs_[k].raw().get_mpq_t(), MPFR_RNDN);
        mpfr_fma(re, q, c, re, MPFR_RNDN);
        mpfr_fma(im, q, s, im, MPFR_RNDN);
    }
    const double dr = mpfr_get_d(re, MPFR_RNDN);
    const double di = mpfr_get_d(im, MPFR_RNDN);
    mpfr_clears(re, im, ang, c, s, q, twopi, static_cast<mpfr_ptr>(nullptr));
    return {dr, di};
}

CycloElem root_of_unity(const FieldPtr& f, long k) {
    const auto& row = f->power_row(k);
    std::vector<Rational> c(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) c[i] = Rational(row[i]);
    return CycloElem(f, std::move(c));
}

SubringWitness in_subring(const CycloElem& a, long m, bool integral) {
    const FieldPtr& f = a.field();
    const long n = f->order();
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("in_subring: m must divide the field order");
    SubringWitness w;
    w.subring_order = m;
    w.integral_required = integral;

    for (long t = 1 + m; t < n; t += m) {
        if (std::gcd(t, n) != 1) continue;
        if (a.galois(t) != a) {
            w.reason = "not fixed by the subfield Galois group";
            w.failing_automorphism = t;
            return w;
        }
    }

    const long k = euler_phi(m);
    const long d = f->degree();
    std::vector<std::vector<Rational>> basis(static_cast<std::size_t>(d),
                                             std::vector<Rational>(static_cast<std::size_t>(k)));
    const long step = n / m;
    for (long j = 0; j < k; ++j) {
        const auto& row = f->power_row(j * step % n);
        for (long i = 0; i < d; ++i)
            basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rational(row[static_cast<std::size_t>(i)]);
    }
    std::vector<std::vector<Rational>> rhs(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i)
        rhs[static_cast<std::size_t>(i)] = {a.coeffs()[static_cast<std::size_t>(i)]};

    auto sol = solve_exact(basis, rhs, Rational(1));
    if (!sol.solvable) {
        w.reason = "no exact expansion over the subfield power basis";
        return w;
    }
    std::vector<Rational> coords(static_cast<std::size_t>(k));
    for (long j = 0; j < k; ++j) coords[static_cast<std::size_t>(j)] = sol.x[static_cast<std::size_t>(j)][0];

    // re-expand and compare before accepting
    CycloElem expanded = CycloElem::zero(f);
    for (long j = 0; j < k; ++j) {
        if (coords[static_cast<std::size_t>(j)].is_zero()) continue;
        expanded = expanded + root_of_unity(f, j * step) * coords[static_cast<std::size_t>(j)];
    }
    if (expanded != a) {
        w.reason = "re-expansion mismatch";
        return w;
    }

    if (integral) {
        for (long j = 0; j < k; ++j) {
            if (!coords[static_cast<std::size_t>(j)].is_integer()) {
                w.reason = "coordinate outside the integer ring";
                w.non_integral_index = j;
                w.coeffs = std::move(coords);
                return w;
            }
        }
    }
    w.member = true;
    w.coeffs = std::move(coords);
    return w;
}

CycloElem sqrt_p_element(long p, const FieldPtr& f) {
    const long n = f->order();
    if (p < 3 || n % p != 0 || n % 4 != 0)
        throw std::invalid_argument("sqrt_p_element: order must be divisible by 4p");
    const long step = n / p;
    CycloElem g = CycloElem::zero(f);
    for (long l = 0; l < p; ++l) g = g + root_of_unity(f, (l * l % p) * step);
    if (p % 4 == 3) g = g * root_of_unity(f, 3 * (n / 4));  // times -i
    const auto val = g.embed(20);
    if (!(val.real() > 0) || !(std::abs(val.imag()) < 1e-9))
        throw std::logic_error("sqrt_p_element: sign convention violated");
    return g;
}

FieldPtr ambient_field(long p) { return CycloField::get(8 * p); }

}  // namespace cyclotqft
