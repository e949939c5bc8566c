#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace nakwide::linalg {

/// The prime field F_p. Elements are canonical residues in [0, p).
class PrimeField {
public:
    using Element = std::uint32_t;

    /// Throws InvalidConfig unless p is a prime below 2^31.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }

    Element add(Element a, Element b) const noexcept { return Element((std::uint64_t(a) + b) % p_); }
    Element sub(Element a, Element b) const noexcept { return Element((std::uint64_t(a) + p_ - b) % p_); }
    Element mul(Element a, Element b) const noexcept { return Element((std::uint64_t(a) * b) % p_); }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const;
    /// Reduces an arbitrary integer into the field.
    Element from_int(long long v) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t p) noexcept;

/// Dense row-major matrix over a prime field. Zero-row and zero-column shapes
/// are valid and used for the zero vector space.
class Matrix {
public:
    using Element = PrimeField::Element;

    Matrix(PrimeField field, std::size_t rows, std::size_t cols);

    static Matrix identity(PrimeField field, std::size_t n);
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return field_; }

    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool is_zero() const noexcept;
    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    /// Row vector holding all entries in row-major order.
    Matrix flatten() const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(Element s) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

Matrix hstack(const std::vector<Matrix>& blocks, PrimeField field, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, PrimeField field, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks, PrimeField field);

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with leftmost-pivot, topmost-row selection.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of {x : m x = 0}, one per free column in increasing order.
Matrix nullspace(const Matrix& m);
/// Some X with a X = b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Columns are the standard basis vectors e_k (k increasing) chosen greedily so
/// that [span | chosen] has full column rank equal to span.rows().
Matrix complement_columns(const Matrix& span);
/// Inverse of a square invertible matrix; throws PreconditionViolation otherwise.
Matrix inverse(const Matrix& m);

} // namespace nakwide::linalg
