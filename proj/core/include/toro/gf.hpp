#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "toro/error.hpp"

namespace toro {

/// Residues are stored reduced, 0 <= value < p.  All arithmetic in the
/// library is exact arithmetic over GF(p); there is no floating point
/// anywhere.
using Scalar = std::uint32_t;

bool is_prime(Scalar p);

/// Checks that p is prime (p >= 2), throws ValidationError otherwise.
void require_prime(Scalar p);

Scalar fp_add(Scalar a, Scalar b, Scalar p);
Scalar fp_sub(Scalar a, Scalar b, Scalar p);
Scalar fp_mul(Scalar a, Scalar b, Scalar p);
Scalar fp_neg(Scalar a, Scalar p);

/// Multiplicative inverse via Fermat; a must be nonzero mod p.
Scalar fp_inv(Scalar a, Scalar p);

/// Reduces a signed integer into [0, p).
Scalar fp_from_int(long long v, Scalar p);

/// Dense row-major matrix over GF(p).  Zero rows or columns are legal and
/// represent maps to or from the zero space.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, Scalar p);

    /// Builds from signed integer rows, reducing mod p.
    static FieldMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows,
                                 Scalar p);
    static FieldMatrix identity(std::size_t n, Scalar p);
    static FieldMatrix zero(std::size_t rows, std::size_t cols, Scalar p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar characteristic() const { return p_; }

    Scalar at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    bool operator==(const FieldMatrix& other) const = default;

    FieldMatrix operator+(const FieldMatrix& other) const;
    FieldMatrix operator-(const FieldMatrix& other) const;
    FieldMatrix operator*(const FieldMatrix& other) const;

    FieldMatrix transpose() const;
    FieldMatrix scaled(Scalar c) const;
    bool is_zero() const;
    bool is_identity() const;

    /// Matrix-vector product; v.size() must equal cols().
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    /// Stacks other below this matrix (column counts must agree).
    FieldMatrix vstack(const FieldMatrix& other) const;

    /// Rows [r0, r1) as a new matrix.
    FieldMatrix row_slice(std::size_t r0, std::size_t r1) const;

    std::vector<Scalar> row(std::size_t r) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Scalar p_ = 2;
    std::vector<Scalar> a_;
};

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m);

/// Reduced row echelon form together with the rank and pivot columns.
struct RrefResult {
    FieldMatrix mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; idempotent on its own output.
RrefResult rref(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);

/// Exact inverse of a square full-rank matrix; throws NotInvertible.
FieldMatrix invert(const FieldMatrix& m);

/// Particular solution x of a * x = b with free variables set to zero
/// (the smallest-pivot solution under the RREF of a).  Returns false if
/// the system is inconsistent.
bool solve(const FieldMatrix& a, const std::vector<Scalar>& b, std::vector<Scalar>& x);

} // namespace toro
