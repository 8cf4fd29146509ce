#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cyclotqft/matrix.hpp"

namespace cyclotqft {

/** Scales a nonzero matrix so that its first nonzero entry in row-major
 *  order becomes 1: the canonical representative of its projective class.
 *  Throws std::domain_error on the zero matrix. */
CycloMatrix projective_normalize(const CycloMatrix& m);

struct ClosureResult {
    bool complete = false;
    std::size_t order = 0;          // distinct classes (meaningful when complete)
    std::size_t visited = 0;        // classes seen before stopping
    std::string digest;             // 16 hex chars, FNV-1a over the sorted keys
    std::vector<std::string> keys;  // sorted canonical dumps (complete runs only)
};

/** Breadth-first enumeration of the group generated by gens and their
 *  inverses inside the projective linear group. Classes are deduplicated by
 *  the canonical dump of their normalized representative, so the resulting
 *  order, keys and digest do not depend on generator order or traversal.
 *  Stops with complete = false as soon as more than cap classes appear. */
ClosureResult projective_closure(const std::vector<CycloMatrix>& gens, std::size_t cap);

/** Generator images on the 3-dimensional invariant subspace (the upper-left
 *  blocks of the split change of basis). */
std::pair<CycloMatrix, CycloMatrix> h1_generators(long p);

/** Generator images on the (r+1)-dimensional invariant subspace. */
std::pair<CycloMatrix, CycloMatrix> h2_generators(long p);

/** The raw (r+4)-dimensional generator images. */
std::pair<CycloMatrix, CycloMatrix> full_generators(long p);

/** p (p-1) (p+1) / 2: the order of PSL(2, Z/p), which the projective image
 *  on the (r+1)-dimensional piece must reach once it factors through
 *  SL(2, Z/p) with a non-scalar image. */
std::size_t psl2_order(long p);

/** Closure of the 3-dimensional image together with its structure: every
 *  class must be monomial (exactly one nonzero entry per row and per column)
 *  and every entry a root of unity. */
struct H1ImageReport {
    ClosureResult closure;
    bool monomial = false;
    bool unit_entries = false;
    bool pass = false;  // complete && monomial && unit_entries
};

H1ImageReport h1_image_check(long p, std::size_t cap);

}  // namespace cyclotqft
