#include "toro/subspace.hpp"

#include <algorithm>

namespace toro {

Subspace Subspace::from_rows(const FieldMatrix& gen) {
    RrefResult r = rref(gen);
    Subspace s;
    s.ambient_ = gen.cols();
    s.basis_ = r.mat.row_slice(0, r.rank);
    s.pivots_ = r.pivots;
    return s;
}

Subspace Subspace::zero(std::size_t ambient, Scalar p) {
    return from_rows(FieldMatrix(0, ambient, p));
}

Subspace Subspace::full(std::size_t ambient, Scalar p) {
    return from_rows(FieldMatrix::identity(ambient, p));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector/ambient mismatch");
    const Scalar p = characteristic();
    std::vector<Scalar> residue = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        Scalar c = residue[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            residue[j] = fp_sub(residue[j], fp_mul(c, basis_.at(i, j), p), p);
    }
    return std::all_of(residue.begin(), residue.end(), [](Scalar x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("ambient mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::vector<Scalar> Subspace::coordinates(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector/ambient mismatch");
    const Scalar p = characteristic();
    // RREF basis: the coordinate along row i is just v at the pivot column.
    std::vector<Scalar> coords(basis_.rows());
    std::vector<Scalar> check(ambient_, 0);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        coords[i] = v[pivots_[i]];
        for (std::size_t j = 0; j < ambient_; ++j)
            check[j] = fp_add(check[j], fp_mul(coords[i], basis_.at(i, j), p), p);
    }
    if (check != v) throw NotRestrictable("vector outside subspace");
    return coords;
}

FieldMatrix Subspace::annihilator() const {
    // Rows spanning {w : B w^T = 0}; over GF(p) the double annihilator
    // recovers the subspace, so ker(annihilator) == *this.
    Subspace orth = kernel(basis_);
    return orth.basis();
}

Subspace image(const FieldMatrix& m) { return Subspace::from_rows(m.transpose()); }

Subspace kernel(const FieldMatrix& m) {
    RrefResult r = rref(m);
    const Scalar p = m.characteristic();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    FieldMatrix gen(n - r.rank, n, p);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        gen.at(row, free) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            gen.at(row, r.pivots[i]) = fp_neg(r.mat.at(i, free), p);
        ++row;
    }
    return Subspace::from_rows(gen);
}

Subspace preimage(const FieldMatrix& m, const Subspace& s) {
    if (s.ambient_dim() != m.rows())
        throw DimensionMismatch("preimage: subspace does not live in the codomain");
    // v in preimage iff (annihilator of s) * m * v = 0.
    FieldMatrix q = s.annihilator();
    return kernel(q * m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect ambient mismatch");
    return kernel(a.annihilator().vstack(b.annihilator()));
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("span_sum ambient mismatch");
    return Subspace::from_rows(a.basis().vstack(b.basis()));
}

Subspace apply(const FieldMatrix& m, const Subspace& s) {
    if (s.ambient_dim() != m.cols()) throw DimensionMismatch("apply ambient mismatch");
    return image(m * s.basis().transpose());
}

QuotientMap quotient(std::size_t v_dim, const Subspace& k) {
    if (k.ambient_dim() != v_dim) throw DimensionMismatch("quotient ambient mismatch");
    const Scalar p = k.characteristic();
    const std::size_t kd = k.dim();
    std::vector<bool> is_pivot(v_dim, false);
    for (std::size_t c : k.pivots()) is_pivot[c] = true;

    // Basis of the full space: rows of k first, then standard vectors at
    // the non-pivot indices in increasing order.
    FieldMatrix basis(v_dim, v_dim, p);
    for (std::size_t i = 0; i < kd; ++i)
        for (std::size_t j = 0; j < v_dim; ++j) basis.at(i, j) = k.basis().at(i, j);
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < v_dim; ++j)
        if (!is_pivot[j]) complement.push_back(j);
    for (std::size_t i = 0; i < complement.size(); ++i) basis.at(kd + i, complement[i]) = 1;

    // Coordinates in that basis are (basis^T)^{-1} v; the quotient keeps
    // the complement block.
    FieldMatrix coords = invert(basis.transpose());
    QuotientMap q;
    q.q_dim = v_dim - kd;
    q.proj = coords.row_slice(kd, v_dim);
    q.section = FieldMatrix(v_dim, q.q_dim, p);
    for (std::size_t i = 0; i < complement.size(); ++i) q.section.at(complement[i], i) = 1;
    return q;
}

FieldMatrix restrict_map(const FieldMatrix& m, const Subspace& dom, const Subspace& cod) {
    if (dom.ambient_dim() != m.cols() || cod.ambient_dim() != m.rows())
        throw DimensionMismatch("restrict_map ambient mismatch");
    FieldMatrix out(cod.dim(), dom.dim(), m.characteristic());
    for (std::size_t j = 0; j < dom.dim(); ++j) {
        std::vector<Scalar> img = m.apply(dom.basis().row(j));
        std::vector<Scalar> c;
        try {
            c = cod.coordinates(img);
        } catch (const NotRestrictable&) {
            throw NotRestrictable("map does not carry domain basis vector " + std::to_string(j) +
                                  " into the codomain subspace");
        }
        for (std::size_t i = 0; i < cod.dim(); ++i) out.at(i, j) = c[i];
    }
    return out;
}

Subspace eigenspace_one(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("eigenspace of non-square matrix");
    return kernel(m - FieldMatrix::identity(m.rows(), m.characteristic()));
}

} // namespace toro
