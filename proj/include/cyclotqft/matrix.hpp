#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclotqft/cyclo.hpp"

namespace cyclotqft {

/** Dense matrix over one cyclotomic field. All operations are exact; inverses
 *  and solves run fraction-free elimination (see linear.hpp). */
class CycloMatrix {
public:
    CycloMatrix(FieldPtr field, long rows, long cols);

    static CycloMatrix identity(const FieldPtr& f, long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    const CycloElem& at(long i, long j) const;
    void set(long i, long j, CycloElem v);

    CycloMatrix operator+(const CycloMatrix& o) const;
    CycloMatrix operator-(const CycloMatrix& o) const;
    CycloMatrix operator*(const CycloMatrix& o) const;
    CycloMatrix scaled(const CycloElem& s) const;

    CycloMatrix transpose() const;
    /** Entrywise complex conjugation, i.e. the Galois twist z -> z^{-1}. */
    CycloMatrix conj() const;

    bool operator==(const CycloMatrix& o) const;
    bool operator!=(const CycloMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    /** Row-major position of the first nonzero entry, if any. */
    std::optional<std::pair<long, long>> first_nonzero() const;

    CycloElem determinant() const;
    /** Exact inverse; throws std::domain_error when singular. */
    CycloMatrix inverse() const;
    /** Solves (*this) X = rhs exactly; throws std::domain_error when singular. */
    CycloMatrix solve(const CycloMatrix& rhs) const;

    CycloMatrix block(long i0, long j0, long rows, long cols) const;
    void set_block(long i0, long j0, const CycloMatrix& b);
    static CycloMatrix direct_sum(const CycloMatrix& a, const CycloMatrix& b);

    /** Dump format: header "N=<order> rows=<m> cols=<n>", then one serialized
     *  entry per line, row-major. Bit-stable. */
    std::string dump() const;
    static CycloMatrix parse_dump(const std::string& text);
    /** Parses a concatenation of dumps (e.g. a generator pair). */
    static std::vector<CycloMatrix> parse_dumps(const std::string& text);

private:
    FieldPtr field_;
    long rows_;
    long cols_;
    std::vector<CycloElem> e_;

    std::size_t idx(long i, long j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
};

}  // namespace cyclotqft
