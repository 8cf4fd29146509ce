#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "cyclotqft/cyclo.hpp"
#include "support.hpp"

using namespace cyclotqft;
using testsupport::random_elem;

namespace {

// Oracle: multiply out prod_{d | n} Phi_d and compare with x^n - 1. This
// exercises every cyclotomic polynomial below n along a route that never
// divides, only multiplies.
std::vector<mpz_class> product_of_divisor_cyclotomics(long n) {
    std::vector<mpz_class> acc{mpz_class(1)};
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        const auto phi = cyclotomic_poly(d);
        std::vector<mpz_class> next(acc.size() + phi.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += acc[i] * phi[j];
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials for prime and small orders") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{mpz_class(-1), mpz_class(1)});
    CHECK(cyclotomic_poly(2) == std::vector<mpz_class>{mpz_class(1), mpz_class(1)});
    // prime order: all-ones polynomial of degree p-1
    for (long p : {5L, 7L, 11L, 13L}) {
        const auto phi = cyclotomic_poly(p);
        REQUIRE(static_cast<long>(phi.size()) == p);
        for (const auto& c : phi) CHECK(c == 1);
    }
    CHECK(static_cast<long>(cyclotomic_poly(40).size()) == 17);  // phi(40) = 16
    CHECK(static_cast<long>(cyclotomic_poly(104).size()) == 49); // phi(104) = 48
}

TEST_CASE("product of divisor cyclotomics reconstructs x^n - 1") {
    for (long n : {12L, 40L, 56L, 88L, 104L}) {
        const auto prod = product_of_divisor_cyclotomics(n);
        REQUIRE(static_cast<long>(prod.size()) == n + 1);
        CHECK(prod.front() == -1);
        CHECK(prod.back() == 1);
        for (long k = 1; k < n; ++k) CHECK(prod[static_cast<std::size_t>(k)] == 0);
    }
}

TEST_CASE("euler phi and moebius basics") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(40) == 16);
    CHECK(euler_phi(104) == 48);
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
}

TEST_CASE("roots of unity satisfy the defining relations") {
    auto f = CycloField::get(40);
    const auto z = root_of_unity(f, 1);
    CHECK(z.pow(40) == CycloElem::one(f));
    CHECK(z.pow(20) == -CycloElem::one(f));
    CHECK(root_of_unity(f, 41) == z);
    CHECK(root_of_unity(f, -1) == z.pow(39));

    // the defining polynomial annihilates the generator
    CycloElem acc = CycloElem::zero(f);
    const auto& phi = f->modulus();
    for (std::size_t k = 0; k < phi.size(); ++k)
        acc = acc + root_of_unity(f, static_cast<long>(k)) * Rational(phi[k]);
    CHECK(acc.is_zero());
}

TEST_CASE("sum of all nontrivial p-th roots is -1") {
    auto f = CycloField::get(5);
    CycloElem s = CycloElem::zero(f);
    for (long k = 1; k < 5; ++k) s = s + root_of_unity(f, k);
    CHECK(s == CycloElem::from_rational(f, Rational(-1)));
}

TEST_CASE("product of (1 - zeta_p^l) over l = 1..p-1 equals p") {
    for (long p : {5L, 7L, 13L}) {
        auto f = CycloField::get(p);
        CycloElem prod = CycloElem::one(f);
        for (long l = 1; l < p; ++l)
            prod = prod * (CycloElem::one(f) - root_of_unity(f, l));
        CHECK(prod == CycloElem::from_rational(f, Rational(p)));
    }
}

TEST_CASE("ring axioms on random triples") {
    auto f = CycloField::get(40);
    std::mt19937_64 rng(12345);
    for (int rep = 0; rep < 40; ++rep) {
        const auto a = random_elem(f, rng);
        const auto b = random_elem(f, rng);
        const auto c = random_elem(f, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * CycloElem::one(f) == a);
        CHECK((a * CycloElem::zero(f)).is_zero());
    }
}

TEST_CASE("inverse round-trips and signals zero") {
    auto f = CycloField::get(40);
    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 25; ++rep) {
        auto a = random_elem(f, rng);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == CycloElem::one(f));
    }
    const auto z = root_of_unity(f, 7);
    CHECK(z.inverse() == root_of_unity(f, 33));
    CHECK(CycloElem::from_rational(f, Rational(2)).inverse() ==
          CycloElem::from_rational(f, Rational(1, 2)));
    auto f5 = CycloField::get(5);
    const auto a = CycloElem::one(f5) - root_of_unity(f5, 1);
    CHECK(a * a.inverse() == CycloElem::one(f5));
    CHECK_THROWS_AS(CycloElem::zero(f).inverse(), std::domain_error);
}

TEST_CASE("galois twists act on exponents and respect the ring structure") {
    auto f = CycloField::get(5);
    const auto z = root_of_unity(f, 1);
    CHECK(z.galois(2) == root_of_unity(f, 2));
    CHECK(CycloElem::from_rational(f, Rational(7, 3)).galois(3) ==
          CycloElem::from_rational(f, Rational(7, 3)));

    auto f40 = CycloField::get(40);
    std::mt19937_64 rng(4242);
    for (long t : {3L, 7L, 9L, 39L}) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto a = random_elem(f40, rng);
            const auto b = random_elem(f40, rng);
            CHECK((a + b).galois(t) == a.galois(t) + b.galois(t));
            CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
        }
    }
    // composition: twist by 3 then 7 equals twist by 21
    const auto a = random_elem(f40, rng);
    CHECK(a.galois(3).galois(7) == a.galois(21));
    CHECK_THROWS_AS(a.galois(5), std::invalid_argument);
    CHECK_THROWS_AS(a.galois(0), std::invalid_argument);
}

TEST_CASE("numerical embedding matches known values and respects products") {
    auto f8 = CycloField::get(8);
    const auto z8 = root_of_unity(f8, 1).embed(20);
    CHECK(std::abs(z8.real() - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(z8.imag() - std::sqrt(0.5)) < 1e-12);

    auto f = CycloField::get(40);
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        const auto a = random_elem(f, rng);
        const auto b = random_elem(f, rng);
        const auto lhs = (a * b).embed(25);
        const auto rhs = a.embed(25) * b.embed(25);
        CHECK(std::abs(lhs - rhs) < 1e-9);
        const auto lhs2 = (a + b).embed(25);
        const auto rhs2 = a.embed(25) + b.embed(25);
        CHECK(std::abs(lhs2 - rhs2) < 1e-9);
    }
    CHECK_THROWS_AS(CycloElem::one(f).embed(10), std::invalid_argument);
}

TEST_CASE("square root elements square to p with positive real embedding") {
    for (long p : {5L, 7L, 11L, 13L}) {
        auto f = ambient_field(p);
        const auto s = sqrt_p_element(p, f);
        CHECK(s * s == CycloElem::from_rational(f, Rational(p)));
        const auto v = s.embed(20);
        CHECK(v.real() > 0);
        CHECK(std::abs(v.imag()) < 1e-9);
        CHECK(std::abs(v.real() - std::sqrt(static_cast<double>(p))) < 1e-9);
    }
    CHECK_THROWS_AS(sqrt_p_element(5, CycloField::get(5)), std::invalid_argument);
}

TEST_CASE("subring membership: accepted certificates re-expand exactly") {
    auto f = CycloField::get(40);  // ambient for p = 5
    // zeta_5 = zeta_40^8 lies in Z[zeta_5]
    const auto z5 = root_of_unity(f, 8);
    auto w = in_subring(z5, 5, true);
    REQUIRE(w.member);
    REQUIRE(w.coeffs.size() == 4);
    CHECK(w.coeffs[0] == Rational(0));
    CHECK(w.coeffs[1] == Rational(1));
    CHECK(w.coeffs[2] == Rational(0));
    CHECK(w.coeffs[3] == Rational(0));

    // 1/2 is in Q(zeta_5) but not in Z[zeta_5]
    const auto half = CycloElem::from_rational(f, Rational(1, 2));
    auto wq = in_subring(half, 5, false);
    CHECK(wq.member);
    auto wz = in_subring(half, 5, true);
    CHECK_FALSE(wz.member);
    CHECK(wz.non_integral_index == 0);
    CHECK(wz.reason == "coordinate outside the integer ring");

    // zeta_40 itself is not fixed by the relative Galois group
    auto wfail = in_subring(root_of_unity(f, 1), 5, false);
    CHECK_FALSE(wfail.member);
    CHECK(wfail.failing_automorphism != 0);
    CHECK(wfail.reason == "not fixed by the subfield Galois group");

    // the whole field is a trivial subring of itself
    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 10; ++rep) {
        const auto a = random_elem(f, rng);
        auto wa = in_subring(a, 40, false);
        CHECK(wa.member);
    }
    CHECK_THROWS_AS(in_subring(z5, 3, false), std::invalid_argument);
}

TEST_CASE("sqrt(13) lies in Z[zeta_13]; sqrt(7) needs the larger ring") {
    {
        auto f = ambient_field(13);
        const auto s = sqrt_p_element(13, f);
        CHECK(in_subring(s, 13, true).member);  // 13 = 1 mod 4
    }
    {
        auto f = ambient_field(7);
        const auto s = sqrt_p_element(7, f);
        CHECK_FALSE(in_subring(s, 7, false).member);  // 7 = 3 mod 4
        CHECK(in_subring(s, 28, true).member);
    }
}

TEST_CASE("serialization round-trips and the format is pinned") {
    auto f = CycloField::get(40);
    CHECK(CycloElem::zero(f).to_string() == "0");
    CHECK(CycloElem::one(f).to_string() == "1/1*z^0");
    const auto e = CycloElem::from_rational(f, Rational(-1, 2)) + root_of_unity(f, 3);
    CHECK(e.to_string() == "-1/2*z^0+1/1*z^3");
    CHECK(CycloElem::parse(f, e.to_string()) == e);
    CHECK(CycloElem::parse(f, "0") == CycloElem::zero(f));

    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 40; ++rep) {
        const auto a = random_elem(f, rng);
        CHECK(CycloElem::parse(f, a.to_string()) == a);
    }
    CHECK_THROWS_AS(CycloElem::parse(f, "1/1*z^99"), std::invalid_argument);
    CHECK_THROWS_AS(CycloElem::parse(f, "oops"), std::invalid_argument);
    CHECK_THROWS_AS(CycloElem::parse(f, "1/1*z^0+"), std::invalid_argument);
    CHECK_THROWS_AS(CycloElem::parse(f, "1/1*z^1+2/1*z^1"), std::invalid_argument);
}

TEST_CASE("mixed field orders are rejected") {
    auto f5 = CycloField::get(5);
    auto f40 = CycloField::get(40);
    CHECK_THROWS_AS(CycloElem::one(f5) + CycloElem::one(f40), std::invalid_argument);
    CHECK_THROWS_AS(CycloElem::one(f5) * CycloElem::one(f40), std::invalid_argument);
}

TEST_CASE("rational invariants: canonical form and zero-denominator signal") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(-4, 2).to_string() == "-2/1");
    CHECK(Rational::from_string("10/4") == Rational(5, 2));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
