#include "nakwide/linalg.hpp"

#include <string>

#include "nakwide/error.hpp"

namespace nakwide::linalg {

bool is_prime(std::uint32_t p) noexcept
{
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw Error(ErrorKind::InvalidConfig, "field characteristic " + std::to_string(p) + " is not a supported prime");
}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0)
        throw Error(ErrorKind::PreconditionViolation, "inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return Element(result);
}

PrimeField::Element PrimeField::from_int(long long v) const noexcept
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return Element(r);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(PrimeField field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorKind::PreconditionViolation, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = field.from_int(rows[r][c]);
    }
    return m;
}

bool Matrix::is_zero() const noexcept
{
    for (auto v : data_)
        if (v != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::column(std::size_t c) const
{
    Matrix col(field_, rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
        col(r, 0) = (*this)(r, c);
    return col;
}

Matrix Matrix::flatten() const
{
    Matrix row(field_, 1, rows_ * cols_);
    row.data_ = data_;
    return row;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_ || !(field_ == rhs.field_))
        throw Error(ErrorKind::PreconditionViolation, "matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    const std::uint64_t p = field_.characteristic();
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = (*this)(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out(r, c) = Element((out(r, c) + a * rhs(k, c)) % p);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::PreconditionViolation, "matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::PreconditionViolation, "matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::scaled(Element s) const
{
    Matrix out = *this;
    for (auto& v : out.data_)
        v = field_.mul(v, s);
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks, PrimeField field, std::size_t rows)
{
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw Error(ErrorKind::PreconditionViolation, "hstack row mismatch");
        cols += b.cols();
    }
    Matrix out(field, rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, offset + c) = b(r, c);
        offset += b.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks, PrimeField field, std::size_t cols)
{
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw Error(ErrorKind::PreconditionViolation, "vstack column mismatch");
        rows += b.rows();
    }
    Matrix out(field, rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out(offset + r, c) = b(r, c);
        offset += b.rows();
    }
    return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks, PrimeField field)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(field, rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

RowEchelon rref(Matrix m)
{
    const PrimeField& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        const auto scale = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) = f.mul(m(row, c), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const auto factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return rref(m).pivot_columns.size();
}

Matrix nullspace(const Matrix& m)
{
    const auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    const std::size_t nullity = m.cols() - pivots.size();
    Matrix basis(m.field(), m.cols(), nullity);
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        basis(free, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = m.field().neg(reduced(r, free));
        ++k;
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw Error(ErrorKind::PreconditionViolation, "solve: row mismatch");
    const auto [reduced, pivots] = rref(hstack({a, b}, a.field(), a.rows()));
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= a.cols())
            return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(pivots[r], c) = reduced(r, a.cols() + c);
    }
    return x;
}

Matrix complement_columns(const Matrix& span)
{
    const std::size_t n = span.rows();
    std::vector<Matrix> chosen;
    Matrix current = span;
    std::size_t current_rank = rank(current);
    for (std::size_t k = 0; k < n && current_rank < n; ++k) {
        Matrix e(span.field(), n, 1);
        e(k, 0) = 1;
        Matrix trial = hstack({current, e}, span.field(), n);
        const std::size_t r = rank(trial);
        if (r > current_rank) {
            current = std::move(trial);
            current_rank = r;
            chosen.push_back(e);
        }
    }
    return hstack(chosen, span.field(), n);
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::PreconditionViolation, "inverse of non-square matrix");
    auto x = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows())
        throw Error(ErrorKind::PreconditionViolation, "inverse of singular matrix");
    return *x;
}

} // namespace nakwide::linalg
