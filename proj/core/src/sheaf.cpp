#include "toro/sheaf.hpp"

#include <algorithm>

namespace toro {

std::vector<Relation> covering_relations(const CellComplex& base) {
    std::vector<Relation> out;
    for (CellId s = 0; s < base.size(); ++s)
        for (CellId t : base.faces(s)) out.emplace_back(s, t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string relation_name(const CellComplex& base, Relation r) {
    return base.cell(r.first).label + " <= " + base.cell(r.second).label;
}

template <typename Maps>
void check_shapes(const CellComplex& base, const std::vector<std::size_t>& stalk_dim,
                  const Maps& maps, bool contravariant) {
    if (stalk_dim.size() != base.size())
        throw ValidationError("stalk table size does not match the base");
    auto rels = covering_relations(base);
    if (maps.size() != rels.size())
        throw ValidationError("expected one matrix per covering relation");
    for (const Relation& r : rels) {
        auto it = maps.find(r);
        if (it == maps.end())
            throw ValidationError("missing matrix for relation " + relation_name(base, r));
        std::size_t rows = contravariant ? stalk_dim[r.first] : stalk_dim[r.second];
        std::size_t cols = contravariant ? stalk_dim[r.second] : stalk_dim[r.first];
        if (it->second.rows() != rows || it->second.cols() != cols)
            throw ValidationError("matrix shape mismatch at " + relation_name(base, r));
        if (it->second.characteristic() != base.characteristic())
            throw ValidationError("matrix characteristic mismatch at " + relation_name(base, r));
    }
}

// all ways sigma <= tau <= rho through covering relations compose equally
template <typename MapAt>
void check_functorial(const CellComplex& base, MapAt map_at, bool contravariant) {
    for (CellId sigma = 0; sigma < base.size(); ++sigma) {
        std::map<CellId, std::optional<FieldMatrix>> composite;
        for (CellId tau : base.faces(sigma)) {
            for (CellId rho : base.faces(tau)) {
                FieldMatrix m = contravariant ? map_at(sigma, tau) * map_at(tau, rho)
                                              : map_at(tau, rho) * map_at(sigma, tau);
                auto& slot = composite[rho];
                if (!slot) {
                    slot = m;
                } else if (!(*slot == m)) {
                    throw ValidationError("functoriality fails between " +
                                          base.cell(sigma).label + " and " +
                                          base.cell(rho).label);
                }
            }
        }
    }
}

} // namespace

bool CellSheaf::operator==(const CellSheaf& other) const {
    return stalk_dim == other.stalk_dim && maps == other.maps;
}

void CellSheaf::validate() const {
    check_shapes(*base, stalk_dim, maps, true);
    check_functorial(*base, [&](CellId s, CellId t) { return map(s, t); }, true);
}

bool CellCosheaf::operator==(const CellCosheaf& other) const {
    return stalk_dim == other.stalk_dim && maps == other.maps;
}

void CellCosheaf::validate() const {
    check_shapes(*base, stalk_dim, maps, false);
    check_functorial(*base, [&](CellId s, CellId t) { return map(s, t); }, false);
}

CheckResult is_episheaf(const CellSheaf& s) {
    for (const auto& [rel, m] : s.maps) {
        if (rank(m) != s.stalk_dim[rel.first])
            return {false, rel,
                    "map into " + s.base->cell(rel.first).label + " from " +
                        s.base->cell(rel.second).label + " is not surjective"};
    }
    return {};
}

CheckResult is_monocosheaf(const CellCosheaf& c) {
    for (const auto& [rel, m] : c.maps) {
        if (rank(m) != c.stalk_dim[rel.first])
            return {false, rel,
                    "map out of " + c.base->cell(rel.first).label + " into " +
                        c.base->cell(rel.second).label + " is not injective"};
    }
    return {};
}

bool is_colocal_system(const CellCosheaf& c) {
    for (const auto& [rel, m] : c.maps) {
        (void)rel;
        if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
    }
    return true;
}

bool Bisheaf::operator==(const Bisheaf& other) const {
    return sheaf == other.sheaf && cosheaf == other.cosheaf && vertical == other.vertical;
}

void Bisheaf::validate() const {
    sheaf.validate();
    cosheaf.validate();
    const CellComplex& base = *sheaf.base;
    if (cosheaf.base->size() != base.size())
        throw ValidationError("sheaf and cosheaf bases differ");
    if (vertical.size() != base.size()) throw ValidationError("one vertical map per base cell");
    for (CellId s = 0; s < base.size(); ++s)
        if (vertical[s].rows() != cosheaf.stalk_dim[s] || vertical[s].cols() != sheaf.stalk_dim[s])
            throw ValidationError("vertical map shape mismatch at " + base.cell(s).label);
    for (const Relation& r : covering_relations(base)) {
        FieldMatrix lhs =
            cosheaf.map(r.first, r.second) * vertical[r.first] * sheaf.map(r.first, r.second);
        if (!(lhs == vertical[r.second]))
            throw ValidationError("bisheaf square fails at " + relation_name(base, r));
    }
}

CellComplex circle_complex(std::size_t m, Scalar p) {
    std::vector<Cell> cells;
    std::vector<std::vector<std::pair<CellId, Scalar>>> bnd;
    for (std::size_t j = 0; j < m; ++j) {
        cells.push_back({j, 0, "v" + std::to_string(j)});
        bnd.push_back({});
    }
    for (std::size_t j = 0; j < m; ++j) {
        cells.push_back({m + j, 1, "e" + std::to_string(j)});
        CellId a = j, b = (j + 1) % m;
        if (a == b)
            bnd.push_back({});
        else
            bnd.push_back({{b, 1}, {a, fp_neg(1, p)}});
    }
    return CellComplex(std::move(cells), std::move(bnd), p);
}

std::optional<CircleBase> as_circle(const CellComplex& base) {
    std::size_t m = base.cells_of_dim(0).size();
    if (m < 2 || base.size() != 2 * m || base.cells_of_dim(1).size() != m) return std::nullopt;
    for (std::size_t j = 0; j < m; ++j) {
        if (base.cell(j).dim != 0 || base.cell(m + j).dim != 1) return std::nullopt;
        std::vector<CellId> expect{j, (j + 1) % m};
        std::sort(expect.begin(), expect.end());
        if (base.faces(m + j) != expect) return std::nullopt;
    }
    return CircleBase{m};
}

Bisheaf cover_bisheaf(const Bisheaf& b, std::size_t k) {
    auto circ = as_circle(*b.sheaf.base);
    if (!circ) throw UnsupportedGeometry("bisheaf cover needs a circle base");
    if (k < 1) throw ValidationError("cover multiplicity must be at least 1");
    const std::size_t m = circ->m;
    auto base = std::make_shared<CellComplex>(circle_complex(m * k, b.sheaf.characteristic()));
    Bisheaf out;
    out.sheaf.base = base;
    out.cosheaf.base = base;
    out.sheaf.stalk_dim.assign(2 * m * k, 0);
    out.cosheaf.stalk_dim.assign(2 * m * k, 0);
    out.vertical.assign(2 * m * k, FieldMatrix());
    for (std::size_t J = 0; J < m * k; ++J) {
        std::size_t j = J % m;
        out.sheaf.stalk_dim[J] = b.sheaf.stalk_dim[circ->vertex(j)];
        out.sheaf.stalk_dim[m * k + J] = b.sheaf.stalk_dim[circ->edge(j)];
        out.cosheaf.stalk_dim[J] = b.cosheaf.stalk_dim[circ->vertex(j)];
        out.cosheaf.stalk_dim[m * k + J] = b.cosheaf.stalk_dim[circ->edge(j)];
        out.vertical[J] = b.vertical[circ->vertex(j)];
        out.vertical[m * k + J] = b.vertical[circ->edge(j)];
        CellId e_new = m * k + J;
        CellId v_lo = J, v_hi = (J + 1) % (m * k);
        out.sheaf.maps[{e_new, v_lo}] = b.sheaf.map(circ->edge(j), circ->vertex(j));
        out.sheaf.maps[{e_new, v_hi}] = b.sheaf.map(circ->edge(j), circ->vertex(j + 1));
        out.cosheaf.maps[{e_new, v_lo}] = b.cosheaf.map(circ->edge(j), circ->vertex(j));
        out.cosheaf.maps[{e_new, v_hi}] = b.cosheaf.map(circ->edge(j), circ->vertex(j + 1));
    }
    return out;
}

namespace {

FieldMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Scalar p) {
    FieldMatrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng() % p;
    return m;
}

} // namespace

CellSheaf random_sheaf(std::shared_ptr<const CellComplex> base, std::size_t max_dim,
                       std::mt19937_64& rng) {
    CellSheaf s;
    s.base = base;
    const Scalar p = base->characteristic();
    for (CellId i = 0; i < base->size(); ++i) s.stalk_dim.push_back(rng() % (max_dim + 1));
    for (const Relation& r : covering_relations(*base))
        s.maps[r] = random_matrix(rng, s.stalk_dim[r.first], s.stalk_dim[r.second], p);
    return s;
}

CellCosheaf random_cosheaf(std::shared_ptr<const CellComplex> base, std::size_t max_dim,
                           std::mt19937_64& rng) {
    CellCosheaf c;
    c.base = base;
    const Scalar p = base->characteristic();
    for (CellId i = 0; i < base->size(); ++i) c.stalk_dim.push_back(rng() % (max_dim + 1));
    for (const Relation& r : covering_relations(*base))
        c.maps[r] = random_matrix(rng, c.stalk_dim[r.second], c.stalk_dim[r.first], p);
    return c;
}

} // namespace toro
