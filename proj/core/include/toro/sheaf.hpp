#pragma once

#include <map>
#include <memory>
#include <random>

#include "toro/complex.hpp"

namespace toro {

using Relation = std::pair<CellId, CellId>; // (sigma, tau) with tau a face of sigma

/// Covering face relations of a complex, sorted.
std::vector<Relation> covering_relations(const CellComplex& base);

struct CheckResult {
    bool ok = true;
    Relation relation{0, 0};
    std::string message;
    explicit operator bool() const { return ok; }
};

/// Cellular sheaf: a stalk dimension per base cell and, for every
/// covering relation sigma <= tau, a matrix F(tau) -> F(sigma).
struct CellSheaf {
    std::shared_ptr<const CellComplex> base;
    std::vector<std::size_t> stalk_dim;
    std::map<Relation, FieldMatrix> maps;

    Scalar characteristic() const { return base->characteristic(); }
    const FieldMatrix& map(CellId sigma, CellId tau) const { return maps.at({sigma, tau}); }
    bool operator==(const CellSheaf& other) const;

    /// Shape and contravariant functoriality (length-2 composites agree).
    void validate() const;
};

/// Cellular cosheaf: matrices run the other way, F(sigma) -> F(tau).
struct CellCosheaf {
    std::shared_ptr<const CellComplex> base;
    std::vector<std::size_t> stalk_dim;
    std::map<Relation, FieldMatrix> maps;

    Scalar characteristic() const { return base->characteristic(); }
    const FieldMatrix& map(CellId sigma, CellId tau) const { return maps.at({sigma, tau}); }
    bool operator==(const CellCosheaf& other) const;

    void validate() const;
};

/// True iff every sheaf map is surjective; on failure the witness names
/// the first offending relation.
CheckResult is_episheaf(const CellSheaf& s);

/// True iff every cosheaf map is injective.
CheckResult is_monocosheaf(const CellCosheaf& c);

/// A cosheaf all of whose maps are invertible.
bool is_colocal_system(const CellCosheaf& c);

/// Bisheaf: sheaf, cosheaf over one base and a vertical map per cell,
/// subject to cosheaf(s<=t) . vertical(s) . sheaf(s<=t) == vertical(t)
/// for every covering relation.
struct Bisheaf {
    CellSheaf sheaf;
    CellCosheaf cosheaf;
    std::vector<FieldMatrix> vertical; // per cell: sheaf stalk -> cosheaf stalk

    bool operator==(const Bisheaf& other) const;

    /// Functoriality of both sides plus exact commutation of every
    /// square; throws ValidationError naming the first bad relation.
    void validate() const;
};

/// The circle with m vertices as a cell complex (vertices 0..m-1, edge j
/// from vertex j to vertex j+1 mod m).
CellComplex circle_complex(std::size_t m, Scalar p);

/// Recognizes the canonical circle layout; nullopt for other bases.
struct CircleBase {
    std::size_t m = 0;
    CellId vertex(std::size_t j) const { return j % m; }
    CellId edge(std::size_t j) const { return m + j % m; }
};
std::optional<CircleBase> as_circle(const CellComplex& base);

/// Pullback of a circle-based bisheaf to the k-fold cover of its base.
Bisheaf cover_bisheaf(const Bisheaf& b, std::size_t k);

/// Seeded random (co)sheaves on small bases, for oracles and property
/// suites.  Stalk dimensions are drawn in [0, max_dim].
CellSheaf random_sheaf(std::shared_ptr<const CellComplex> base, std::size_t max_dim,
                       std::mt19937_64& rng);
CellCosheaf random_cosheaf(std::shared_ptr<const CellComplex> base, std::size_t max_dim,
                           std::mt19937_64& rng);

} // namespace toro
