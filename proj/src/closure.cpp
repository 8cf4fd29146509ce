#include "cyclotqft/closure.hpp"

#include <cstdint>
#include <cstdio>
#include <deque>
#include <set>
#include <stdexcept>

#include "cyclotqft/integrality.hpp"
#include "cyclotqft/modular_data.hpp"

namespace cyclotqft {

namespace {

std::string fnv1a_hex(const std::vector<std::string>& keys) {
    std::uint64_t h = 14695981039346656037ULL;
    auto fold = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    for (const auto& k : keys) {
        for (unsigned char byte : k) fold(byte);
        fold('\n');
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

CycloMatrix projective_normalize(const CycloMatrix& m) {
    const auto pos = m.first_nonzero();
    if (!pos) throw std::domain_error("projective_normalize: zero matrix");
    return m.scaled(m.at(pos->first, pos->second).inverse());
}

ClosureResult projective_closure(const std::vector<CycloMatrix>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("projective_closure: no generators");
    const long n = gens.front().rows();
    const auto& f = gens.front().field();
    std::vector<CycloMatrix> step;
    for (const auto& g : gens) {
        if (g.rows() != n || g.cols() != n || g.field()->order() != f->order())
            throw std::invalid_argument("projective_closure: mixed generator shapes");
        step.push_back(projective_normalize(g));
        step.push_back(projective_normalize(g.inverse()));
    }

    ClosureResult res;
    std::set<std::string> seen;
    std::deque<CycloMatrix> todo;
    CycloMatrix id = CycloMatrix::identity(f, n);
    seen.insert(id.dump());
    todo.push_back(std::move(id));

    while (!todo.empty()) {
        const CycloMatrix m = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : step) {
            CycloMatrix next = projective_normalize(m * g);
            std::string key = next.dump();
            if (seen.insert(std::move(key)).second) {
                if (seen.size() > cap) {
                    res.visited = seen.size();
                    return res;  // complete stays false
                }
                todo.push_back(std::move(next));
            }
        }
    }

    res.complete = true;
    res.order = res.visited = seen.size();
    res.keys.assign(seen.begin(), seen.end());  // std::set iterates in sorted order
    res.digest = fnv1a_hex(res.keys);
    return res;
}

std::pair<CycloMatrix, CycloMatrix> h1_generators(long p) {
    const auto w = split_check(p);
    if (!w.block_diagonal)
        throw std::logic_error("h1_generators: the change of basis failed to split");
    return {w.sigma_u.block(0, 0, 3, 3), w.tau_u.block(0, 0, 3, 3)};
}

std::pair<CycloMatrix, CycloMatrix> h2_generators(long p) { return sprime_tprime(p); }

std::pair<CycloMatrix, CycloMatrix> full_generators(long p) {
    return {rho_sigma(p), rho_tau(p)};
}

std::size_t psl2_order(long p) {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(p - 1) *
           static_cast<std::size_t>(p + 1) / 2;
}

H1ImageReport h1_image_check(long p, std::size_t cap) {
    const auto [s, t] = h1_generators(p);
    const auto& f = s.field();
    const long n = f->order();

    H1ImageReport rep;
    rep.closure = projective_closure({s, t}, cap);
    if (!rep.closure.complete) return rep;

    rep.monomial = true;
    rep.unit_entries = true;
    const CycloElem one = CycloElem::one(f);
    for (const auto& key : rep.closure.keys) {
        const CycloMatrix m = CycloMatrix::parse_dump(key);
        for (long i = 0; i < 3; ++i) {
            long in_row = 0, in_col = 0;
            for (long j = 0; j < 3; ++j) {
                if (!m.at(i, j).is_zero()) {
                    ++in_row;
                    if (m.at(i, j).pow(n) != one) rep.unit_entries = false;
                }
                if (!m.at(j, i).is_zero()) ++in_col;
            }
            if (in_row != 1 || in_col != 1) rep.monomial = false;
        }
        if (!rep.monomial) break;
    }
    rep.pass = rep.closure.complete && rep.monomial && rep.unit_entries;
    return rep;
}

}  // namespace cyclotqft
