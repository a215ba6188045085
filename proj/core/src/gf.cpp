#include "toro/gf.hpp"

#include <ostream>
#include <sstream>

namespace toro {

bool is_prime(Scalar p) {
    if (p < 2) return false;
    for (Scalar d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(Scalar p) {
    if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
}

Scalar fp_add(Scalar a, Scalar b, Scalar p) {
    Scalar s = a + b;
    return s >= p ? s - p : s;
}

Scalar fp_sub(Scalar a, Scalar b, Scalar p) { return a >= b ? a - b : a + p - b; }

Scalar fp_mul(Scalar a, Scalar b, Scalar p) {
    return static_cast<Scalar>((std::uint64_t(a) * b) % p);
}

Scalar fp_neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }

Scalar fp_inv(Scalar a, Scalar p) {
    if (a == 0) throw NotInvertible("inverse of 0 mod " + std::to_string(p));
    Scalar result = 1;
    Scalar base = a;
    Scalar e = p - 2;
    while (e > 0) {
        if (e & 1) result = fp_mul(result, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return result;
}

Scalar fp_from_int(long long v, Scalar p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Scalar>(r);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, Scalar p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
    require_prime(p);
}

FieldMatrix FieldMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows,
                                   Scalar p) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    FieldMatrix m(r, c, p);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged rows in matrix literal");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = fp_from_int(v, p);
        ++i;
    }
    return m;
}

FieldMatrix FieldMatrix::identity(std::size_t n, Scalar p) {
    FieldMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::zero(std::size_t rows, std::size_t cols, Scalar p) {
    return FieldMatrix(rows, cols, p);
}

static void check_same_field(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.characteristic() != b.characteristic())
        throw DimensionMismatch("mixed characteristics");
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& other) const {
    check_same_field(*this, other);
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    FieldMatrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_add(a_[i], other.a_[i], p_);
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& other) const {
    check_same_field(*this, other);
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    FieldMatrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_sub(a_[i], other.a_[i], p_);
    return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& other) const {
    check_same_field(*this, other);
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    FieldMatrix r(rows_, other.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                Scalar& out = r.at(i, j);
                out = fp_add(out, fp_mul(aik, other.at(k, j), p_), p_);
            }
        }
    }
    return r;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FieldMatrix FieldMatrix::scaled(Scalar c) const {
    FieldMatrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_mul(a_[i], c, p_);
    return r;
}

bool FieldMatrix::is_zero() const {
    for (Scalar v : a_)
        if (v != 0) return false;
    return true;
}

bool FieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

std::vector<Scalar> FieldMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply shape mismatch");
    std::vector<Scalar> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = fp_add(acc, fp_mul(at(i, j), v[j], p_), p_);
        out[i] = acc;
    }
    return out;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& other) const {
    check_same_field(*this, other);
    if (cols_ != other.cols_) throw DimensionMismatch("vstack column mismatch");
    FieldMatrix r(rows_ + other.rows_, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
    return r;
}

FieldMatrix FieldMatrix::row_slice(std::size_t r0, std::size_t r1) const {
    FieldMatrix r(r1 - r0, cols_, p_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i - r0, j) = at(i, j);
    return r;
}

std::vector<Scalar> FieldMatrix::row(std::size_t r) const {
    std::vector<Scalar> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os;
}

RrefResult rref(const FieldMatrix& m) {
    RrefResult res;
    res.mat = m;
    FieldMatrix& a = res.mat;
    const Scalar p = m.characteristic();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
        Scalar inv = fp_inv(a.at(pivot_row, col), p);
        for (std::size_t j = col; j < a.cols(); ++j)
            a.at(pivot_row, j) = fp_mul(a.at(pivot_row, j), inv, p);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row) continue;
            Scalar f = a.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = fp_sub(a.at(i, j), fp_mul(f, a.at(pivot_row, j), p), p);
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

FieldMatrix invert(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw NotInvertible("inverse of non-square matrix");
    const std::size_t n = m.rows();
    FieldMatrix aug(n, 2 * n, m.characteristic());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    if (r.rank != n || (n > 0 && r.pivots.back() >= n))
        throw NotInvertible("singular matrix");
    FieldMatrix inv(n, n, m.characteristic());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

bool solve(const FieldMatrix& a, const std::vector<Scalar>& b, std::vector<Scalar>& x) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve rhs shape mismatch");
    FieldMatrix aug(a.rows(), a.cols() + 1, a.characteristic());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    x.assign(a.cols(), 0);
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::size_t piv = r.pivots[i];
        if (piv == a.cols()) return false; // 0 = 1 row
        x[piv] = r.mat.at(i, a.cols());
    }
    return true;
}

} // namespace toro
