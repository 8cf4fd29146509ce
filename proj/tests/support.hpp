#pragma once

// Shared helpers for the test suites: deterministic random elements and a few
// small oracles that recompute expected values along an independent route.

#include <complex>
#include <random>
#include <vector>

#include "cyclotqft/cyclo.hpp"
#include "cyclotqft/matrix.hpp"

namespace testsupport {

using cyclotqft::CycloElem;
using cyclotqft::FieldPtr;
using cyclotqft::Rational;

/** Desk-scale random element: sparse-ish coefficients with |num| <= 9, den <= 9. */
inline CycloElem random_elem(const FieldPtr& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<int> keep(0, 2);
    std::vector<Rational> c(static_cast<std::size_t>(f->degree()));
    for (auto& x : c)
        if (keep(rng) == 0) x = Rational(num(rng), den(rng));
    return CycloElem(f, std::move(c));
}

inline double cabs(const std::complex<double>& z) { return std::abs(z); }

}  // namespace testsupport
