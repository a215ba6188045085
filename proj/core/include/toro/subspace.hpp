#pragma once

#include "toro/gf.hpp"

namespace toro {

/// A linear subspace of GF(p)^n in canonical form: the stored basis rows
/// are in reduced row echelon form with strictly increasing pivot columns.
/// Two Subspace values are equal as sets iff they compare equal.
class Subspace {
public:
    Subspace() = default;

    /// The span of the rows of gen (gen is canonicalised, not trusted).
    static Subspace from_rows(const FieldMatrix& gen);
    static Subspace zero(std::size_t ambient, Scalar p);
    static Subspace full(std::size_t ambient, Scalar p);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    Scalar characteristic() const { return basis_.characteristic(); }

    /// Basis rows in RREF.
    const FieldMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& other) const = default;

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in the stored basis; throws NotRestrictable if v
    /// is outside the subspace.
    std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const;

    /// A matrix whose kernel is exactly this subspace.
    FieldMatrix annihilator() const;

private:
    std::size_t ambient_ = 0;
    FieldMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Column space of m, canonicalised.
Subspace image(const FieldMatrix& m);

/// Null space of m, canonicalised.
Subspace kernel(const FieldMatrix& m);

/// {v : m v in s}; s must live in the codomain of m.  Always contains
/// kernel(m).
Subspace preimage(const FieldMatrix& m, const Subspace& s);

Subspace intersect(const Subspace& a, const Subspace& b);

/// Smallest subspace containing a and b; satisfies
/// dim a + dim b = dim span_sum + dim intersect.
Subspace span_sum(const Subspace& a, const Subspace& b);

/// Image of a subspace under a matrix.
Subspace apply(const FieldMatrix& m, const Subspace& s);

/// Quotient of GF(p)^v_dim by k: a surjection with kernel exactly k.
/// The quotient basis completes the RREF basis of k by the standard
/// vectors at non-pivot indices, in increasing index order.
struct QuotientMap {
    FieldMatrix proj;    // q_dim x v_dim, kernel exactly k
    FieldMatrix section; // v_dim x q_dim, proj * section = identity
    std::size_t q_dim = 0;
};

QuotientMap quotient(std::size_t v_dim, const Subspace& k);

/// Matrix of m in the stored bases of dom and cod; throws NotRestrictable
/// if some image of a dom basis vector falls outside cod.
FieldMatrix restrict_map(const FieldMatrix& m, const Subspace& dom, const Subspace& cod);

/// kernel(m - identity); m must be square.
Subspace eigenspace_one(const FieldMatrix& m);

} // namespace toro
