#pragma once

#include <iosfwd>

#include "toro/sheaf.hpp"

namespace toro {

/// Supported explicit bases: a circle with m cells per dimension, or a
/// product of two circles.  Cells are addressed by label ("v0", "e3",
/// "v0xe1", ...).
struct BaseDesc {
    enum class Kind { Circle, Torus } kind = Kind::Circle;
    std::size_t m1 = 0, m2 = 0;
    std::shared_ptr<const CellComplex> complex;
    std::map<std::string, CellId> name_to_id;
};

BaseDesc make_circle_base(std::size_t m, Scalar p);
BaseDesc make_torus_base(std::size_t m1, std::size_t m2, Scalar p);

/// Parsed contents of an explicit sheaf / cosheaf / bisheaf file.
struct ExplicitInput {
    enum class Kind { Sheaf, Cosheaf, Bisheaf } kind = Kind::Bisheaf;
    BaseDesc base;
    std::size_t degree = 1; // homology degree label carried by the file
    CellSheaf sheaf;
    CellCosheaf cosheaf;
    std::vector<FieldMatrix> vertical;

    Bisheaf bisheaf() const;
};

/// Parses the textual format; throws ParseError with a line number.
ExplicitInput read_explicit(std::istream& in);

void write_sheaf(std::ostream& os, const BaseDesc& base, const CellSheaf& s);
void write_cosheaf(std::ostream& os, const BaseDesc& base, const CellCosheaf& c);
void write_bisheaf(std::ostream& os, const BaseDesc& base, const Bisheaf& b, std::size_t degree);

} // namespace toro
