#include "cyclotqft/matrix.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cyclotqft/linear.hpp"

namespace cyclotqft {

CycloMatrix::CycloMatrix(FieldPtr field, long rows, long cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("CycloMatrix: bad shape");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              CycloElem::zero(field_));
}

CycloMatrix CycloMatrix::identity(const FieldPtr& f, long n) {
    CycloMatrix m(f, n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, CycloElem::one(f));
    return m;
}

const CycloElem& CycloMatrix::at(long i, long j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("CycloMatrix: index");
    return e_[idx(i, j)];
}

void CycloMatrix::set(long i, long j, CycloElem v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("CycloMatrix: index");
    if (v.field()->order() != field_->order())
        throw std::invalid_argument("CycloMatrix: entry from a different field");
    e_[idx(i, j)] = std::move(v);
}

namespace {
void require_same_shape(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("CycloMatrix: shape mismatch");
}
}  // namespace

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
    require_same_shape(*this, o);
    CycloMatrix r(field_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
    return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
    require_same_shape(*this, o);
    CycloMatrix r(field_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.set(i, j, at(i, j) - o.at(i, j));
    return r;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("CycloMatrix: product shape");
    if (field_->order() != o.field_->order())
        throw std::invalid_argument("CycloMatrix: mixed field orders");
    CycloMatrix r(field_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < o.cols_; ++j) {
            CycloElem acc = CycloElem::zero(field_);
            for (long l = 0; l < cols_; ++l) {
                const CycloElem& a = at(i, l);
                const CycloElem& b = o.at(l, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc = acc + a * b;
            }
            r.set(i, j, std::move(acc));
        }
    }
    return r;
}

CycloMatrix CycloMatrix::scaled(const CycloElem& s) const {
    CycloMatrix r(field_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.set(i, j, at(i, j) * s);
    return r;
}

CycloMatrix CycloMatrix::transpose() const {
    CycloMatrix r(field_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

CycloMatrix CycloMatrix::conj() const {
    CycloMatrix r(field_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            r.set(i, j, at(i, j).galois(field_->order() - 1));
    return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (field_->order() != o.field_->order()) return false;
    return e_ == o.e_;
}

bool CycloMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycloMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

std::optional<std::pair<long, long>> CycloMatrix::first_nonzero() const {
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

namespace {
std::vector<std::vector<CycloElem>> to_grid(const CycloMatrix& m) {
    std::vector<std::vector<CycloElem>> g;
    g.reserve(static_cast<std::size_t>(m.rows()));
    for (long i = 0; i < m.rows(); ++i) {
        std::vector<CycloElem> row;
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        g.push_back(std::move(row));
    }
    return g;
}
}  // namespace

CycloElem CycloMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("CycloMatrix: det of non-square");
    if (rows_ == 0) return CycloElem::one(field_);
    return determinant_exact(to_grid(*this), CycloElem::one(field_));
}

CycloMatrix CycloMatrix::solve(const CycloMatrix& rhs) const {
    if (rows_ != cols_) throw std::invalid_argument("CycloMatrix: solve non-square");
    if (rhs.rows() != rows_) throw std::invalid_argument("CycloMatrix: solve shape");
    auto sol = solve_exact(to_grid(*this), to_grid(rhs), CycloElem::one(field_));
    if (!sol.solvable) throw std::domain_error("CycloMatrix: singular system");
    CycloMatrix x(field_, cols_, rhs.cols());
    for (long i = 0; i < cols_; ++i)
        for (long j = 0; j < rhs.cols(); ++j)
            x.set(i, j, sol.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return x;
}

CycloMatrix CycloMatrix::inverse() const {
    return solve(identity(field_, rows_));
}

CycloMatrix CycloMatrix::block(long i0, long j0, long rows, long cols) const {
    if (i0 < 0 || j0 < 0 || i0 + rows > rows_ || j0 + cols > cols_)
        throw std::out_of_range("CycloMatrix: block range");
    CycloMatrix b(field_, rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) b.set(i, j, at(i0 + i, j0 + j));
    return b;
}

void CycloMatrix::set_block(long i0, long j0, const CycloMatrix& b) {
    if (i0 < 0 || j0 < 0 || i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
        throw std::out_of_range("CycloMatrix: block range");
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) set(i0 + i, j0 + j, b.at(i, j));
}

CycloMatrix CycloMatrix::direct_sum(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.field()->order() != b.field()->order())
        throw std::invalid_argument("CycloMatrix: mixed field orders");
    CycloMatrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

std::string CycloMatrix::dump() const {
    std::ostringstream os;
    os << "N=" << field_->order() << " rows=" << rows_ << " cols=" << cols_ << "\n";
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) os << at(i, j).to_string() << "\n";
    return os.str();
}

namespace {
CycloMatrix parse_one(std::istringstream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw std::invalid_argument("CycloMatrix: missing dump header");
    long n = 0, rows = 0, cols = 0;
    if (std::sscanf(header.c_str(), "N=%ld rows=%ld cols=%ld", &n, &rows, &cols) != 3)
        throw std::invalid_argument("CycloMatrix: malformed header '" + header + "'");
    FieldPtr f = CycloField::get(n);
    CycloMatrix m(f, rows, cols);
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            std::string line;
            if (!std::getline(in, line))
                throw std::invalid_argument("CycloMatrix: truncated dump");
            m.set(i, j, CycloElem::parse(f, line));
        }
    }
    return m;
}
}  // namespace

CycloMatrix CycloMatrix::parse_dump(const std::string& text) {
    std::istringstream in(text);
    return parse_one(in);
}

std::vector<CycloMatrix> CycloMatrix::parse_dumps(const std::string& text) {
    std::istringstream in(text);
    std::vector<CycloMatrix> out;
    while (in.peek() != std::char_traits<char>::eof()) {
        out.push_back(parse_one(in));
        while (in.peek() == '\n') in.get();
    }
    return out;
}

}  // namespace cyclotqft
