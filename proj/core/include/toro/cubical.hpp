#pragma once

#include <map>

#include "toro/complex.hpp"

namespace toro {

/// An axis-aligned box on the integer grid: per-axis lower corner plus a
/// bitmask of the axes along which it extends by one unit.
struct Cube {
    std::vector<long long> lo;
    unsigned ext_mask = 0;

    std::size_t dim() const;
    bool operator<(const Cube& other) const {
        if (ext_mask != other.ext_mask) return ext_mask < other.ext_mask;
        return lo < other.lo;
    }
    bool operator==(const Cube&) const = default;
};

/// Cubical complex on a grid with extents per axis; the first
/// periodic_axes axes are identified mod their extent.
class CubicalComplex {
public:
    CubicalComplex() = default;

    static CubicalComplex from_cubes(std::vector<long long> extents, std::size_t periodic_axes,
                                     const std::vector<Cube>& cubes, Scalar p);

    const CellComplex& complex() const { return complex_; }
    const Cube& box(CellId id) const { return boxes_[id]; }
    const std::vector<long long>& extents() const { return extents_; }
    std::size_t periodic_axes() const { return periodic_; }
    std::size_t ambient_dim() const { return extents_.size(); }

    std::optional<CellId> find(const Cube& c) const;
    Cube normalized(Cube c) const;

private:
    CellComplex complex_;
    std::vector<Cube> boxes_;
    std::vector<long long> extents_;
    std::size_t periodic_ = 0;
    std::map<Cube, CellId> lookup_;
};

/// Factor-two refinement along all axes; extents double and each cell is
/// carried to the sum of its subcells.
struct CubicalRefinement {
    CubicalComplex refined;
    ChainMap carrier; // old cell id -> chain in the refined complex
};

CubicalRefinement refine2(const CubicalComplex& c);

} // namespace toro
