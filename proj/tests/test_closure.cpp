#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>
#include <vector>

#include "cyclotqft/closure.hpp"
#include "cyclotqft/modular_data.hpp"

using namespace cyclotqft;

namespace {

// Independent oracle for the 3-dimensional image: its elements are monomial
// matrices whose entries are powers of zeta_8, so the whole group fits in
// (permutation, exponent-vector) pairs over plain integers. No cyclotomic
// arithmetic is involved here at all.
struct Mono {
    std::array<int, 3> perm;  // column j is nonzero in row perm[j]
    std::array<int, 3> exp;   // that entry is zeta_8^{exp[j]}

    bool operator<(const Mono& o) const {
        return perm != o.perm ? perm < o.perm : exp < o.exp;
    }
};

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono c{};
    for (int j = 0; j < 3; ++j) {
        c.perm[j] = a.perm[b.perm[j]];
        c.exp[j] = (b.exp[j] + a.exp[b.perm[j]]) % 8;
    }
    return c;
}

Mono mono_inverse(const Mono& a) {
    Mono c{};
    for (int j = 0; j < 3; ++j) {
        c.perm[a.perm[j]] = j;
        c.exp[a.perm[j]] = (8 - a.exp[j]) % 8;
    }
    return c;
}

Mono mono_normalize(Mono m) {
    int best = 0;
    for (int j = 1; j < 3; ++j)
        if (m.perm[j] * 3 + j < m.perm[best] * 3 + best) best = j;
    const int shift = m.exp[best];
    for (int j = 0; j < 3; ++j) m.exp[j] = (m.exp[j] - shift + 8) % 8;
    return m;
}

std::size_t mono_closure_order(long p) {
    const int r = static_cast<int>((p - 1) / 2);
    const Mono s{{1, 0, 2}, {0, 0, 0}};
    const Mono t{{0, 2, 1}, {0, 0, (2 * r) % 8}};
    const std::array<Mono, 4> step{s, mono_inverse(s), t, mono_inverse(t)};
    std::set<Mono> seen;
    std::vector<Mono> todo;
    const Mono id{{0, 1, 2}, {0, 0, 0}};
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
        const Mono m = todo.back();
        todo.pop_back();
        for (const auto& g : step) {
            const Mono n = mono_normalize(mono_mul(m, g));
            if (seen.insert(n).second) todo.push_back(n);
        }
    }
    return seen.size();
}

}  // namespace

TEST_CASE("projective normalization pins the first nonzero entry to 1") {
    auto f = CycloField::get(8);
    CycloMatrix m(f, 2, 2);
    m.set(0, 1, root_of_unity(f, 3) * Rational(5));
    m.set(1, 0, root_of_unity(f, 1));
    const CycloMatrix n = projective_normalize(m);
    CHECK(n.at(0, 0).is_zero());
    CHECK(n.at(0, 1) == CycloElem::one(f));
    // scalar multiples land on the same representative
    CHECK(projective_normalize(m.scaled(root_of_unity(f, 5))).dump() == n.dump());

    CycloMatrix z(f, 2, 2);
    CHECK_THROWS_AS(projective_normalize(z), std::domain_error);
}

TEST_CASE("closure of a single primitive scalar-free rotation is cyclic") {
    auto f = CycloField::get(8);
    CycloMatrix d(f, 2, 2);
    d.set(0, 0, CycloElem::one(f));
    d.set(1, 1, root_of_unity(f, 1));
    const auto res = projective_closure({d}, 100);
    CHECK(res.complete);
    CHECK(res.order == 8);  // projectively: diag(1, zeta_8^k), k = 0..7
    CHECK(res.digest.size() == 16);
    CHECK(res.keys.size() == res.order);

    CycloMatrix swap2(f, 2, 2);
    swap2.set(0, 1, CycloElem::one(f));
    swap2.set(1, 0, CycloElem::one(f));
    CHECK(projective_closure({swap2}, 100).order == 2);
}

TEST_CASE("a tight cap stops the walk and reports incompleteness") {
    auto f = CycloField::get(8);
    CycloMatrix d(f, 2, 2);
    d.set(0, 0, CycloElem::one(f));
    d.set(1, 1, root_of_unity(f, 1));
    const auto res = projective_closure({d}, 3);
    CHECK(!res.complete);
    CHECK(res.visited > 3);
    CHECK(res.order == 0);
    CHECK(res.keys.empty());
    CHECK(res.digest.empty());
}

TEST_CASE("bad generator lists are rejected") {
    auto f = CycloField::get(8);
    CHECK_THROWS_AS(projective_closure({}, 10), std::invalid_argument);
    CycloMatrix a(f, 2, 2);
    a.set(0, 0, CycloElem::one(f));  // rank 1: not invertible
    CHECK_THROWS_AS(projective_closure({a}, 10), std::domain_error);
    CycloMatrix b(f, 3, 3);
    CHECK_THROWS_AS(projective_closure({CycloMatrix::identity(f, 2), b}, 10),
                    std::invalid_argument);
}

TEST_CASE("the (r+1)-dimensional image closes up with the PSL(2, Z/p) order") {
    for (long p : {5L, 7L}) {
        CAPTURE(p);
        const auto [s, t] = h2_generators(p);
        const auto res = projective_closure({s, t}, 1000);
        CHECK(res.complete);
        CHECK(res.order == psl2_order(p));
        CHECK(res.digest.size() == 16);

        // the result is a set: generator order cannot matter
        const auto swapped = projective_closure({t, s}, 1000);
        CHECK(swapped.order == res.order);
        CHECK(swapped.digest == res.digest);

        // identity is a member
        const auto& f = s.field();
        const std::string id_key = CycloMatrix::identity(f, s.rows()).dump();
        CHECK(std::binary_search(res.keys.begin(), res.keys.end(), id_key));
    }
}

TEST_CASE("expected PSL orders") {
    CHECK(psl2_order(5) == 60);
    CHECK(psl2_order(7) == 168);
    CHECK(psl2_order(11) == 660);
    CHECK(psl2_order(13) == 1092);
}

TEST_CASE("3-dimensional image: monomial, unit entries, oracle order") {
    for (long p : {5L, 7L, 11L, 13L}) {
        CAPTURE(p);
        const auto rep = h1_image_check(p, 100000);
        CHECK(rep.pass);
        CHECK(rep.closure.complete);
        CHECK(rep.monomial);
        CHECK(rep.unit_entries);
        CHECK(rep.closure.order == mono_closure_order(p));
    }
}

TEST_CASE("digests are deterministic and distinguish the two images") {
    const long p = 5;
    const auto a = h1_image_check(p, 100000).closure;
    const auto b = h1_image_check(p, 100000).closure;
    CHECK(a.digest == b.digest);
    CHECK(a.keys == b.keys);
    const auto [s, t] = h2_generators(p);
    const auto h2 = projective_closure({s, t}, 1000);
    CHECK(h2.digest != a.digest);
}

TEST_CASE("the raw 6-dimensional image at p = 5 exceeds a small cap") {
    // its block quotient already has 60 classes, so 50 cannot be enough
    const auto [s, t] = full_generators(5);
    const auto res = projective_closure({s, t}, 50);
    CHECK(!res.complete);
    CHECK(res.visited > 50);
}
