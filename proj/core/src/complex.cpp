#include "toro/complex.hpp"

#include <algorithm>

namespace toro {

CellComplex::CellComplex(std::vector<Cell> cells,
                         std::vector<std::vector<std::pair<CellId, Scalar>>> boundary, Scalar p)
    : cells_(std::move(cells)), boundary_(std::move(boundary)), p_(p) {
    require_prime(p);
    if (boundary_.size() != cells_.size())
        throw ValidationError("boundary table size does not match cell count");
    for (CellId i = 0; i < cells_.size(); ++i) {
        if (cells_[i].id != i) throw ValidationError("cell ids are not dense 0..N-1");
        max_dim_ = std::max(max_dim_, cells_[i].dim);
    }
    by_dim_.assign(max_dim_ + 1, {});
    index_in_dim_.assign(cells_.size(), 0);
    for (const Cell& c : cells_) {
        index_in_dim_[c.id] = by_dim_[c.dim].size();
        by_dim_[c.dim].push_back(c.id);
    }
    faces_.assign(cells_.size(), {});
    cofaces_.assign(cells_.size(), {});
    for (CellId i = 0; i < cells_.size(); ++i) {
        for (auto [f, inc] : boundary_[i]) {
            if (f >= cells_.size()) throw ValidationError("boundary references unknown cell");
            (void)inc;
            faces_[i].push_back(f);
        }
        std::sort(faces_[i].begin(), faces_[i].end());
        faces_[i].erase(std::unique(faces_[i].begin(), faces_[i].end()), faces_[i].end());
    }
    for (CellId i = 0; i < cells_.size(); ++i)
        for (CellId f : faces_[i]) cofaces_[f].push_back(i);
    for (auto& v : cofaces_) std::sort(v.begin(), v.end());
}

const std::vector<CellId>& CellComplex::cells_of_dim(std::size_t k) const {
    static const std::vector<CellId> empty;
    return k < by_dim_.size() ? by_dim_[k] : empty;
}

FieldMatrix CellComplex::boundary_matrix(std::size_t k) const {
    const auto& cols = cells_of_dim(k);
    if (k == 0) return FieldMatrix(0, cols.size(), p_);
    const auto& rows = cells_of_dim(k - 1);
    FieldMatrix m(rows.size(), cols.size(), p_);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto [f, inc] : boundary_[cols[j]])
            m.at(index_in_dim_[f], j) = fp_add(m.at(index_in_dim_[f], j), inc, p_);
    return m;
}

std::vector<CellId> CellComplex::closure(const std::vector<CellId>& ids) const {
    std::set<CellId> seen(ids.begin(), ids.end());
    std::vector<CellId> stack(ids.begin(), ids.end());
    while (!stack.empty()) {
        CellId c = stack.back();
        stack.pop_back();
        for (CellId f : faces_[c])
            if (seen.insert(f).second) stack.push_back(f);
    }
    return {seen.begin(), seen.end()};
}

bool CellComplex::is_closed(const std::set<CellId>& sub) const {
    for (CellId c : sub)
        for (CellId f : faces_[c])
            if (!sub.count(f)) return false;
    return true;
}

void CellComplex::validate() const {
    for (CellId i = 0; i < cells_.size(); ++i) {
        for (auto [f, inc] : boundary_[i]) {
            (void)inc;
            if (cells_[f].dim + 1 != cells_[i].dim)
                throw ValidationError("gradation: cell " + std::to_string(i) +
                                      " lists a face of dimension " +
                                      std::to_string(cells_[f].dim) + " but has dimension " +
                                      std::to_string(cells_[i].dim));
        }
    }
    for (std::size_t k = 2; k <= max_dim_; ++k) {
        FieldMatrix dd = boundary_matrix(k - 1) * boundary_matrix(k);
        if (!dd.is_zero())
            throw ValidationError("boundary of boundary is nonzero in degree " + std::to_string(k));
    }
}

bool ChainVector::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Scalar v) { return v == 0; });
}

ChainVector zero_chain(const CellComplex& c, std::size_t degree) {
    return ChainVector{degree, std::vector<Scalar>(c.cells_of_dim(degree).size(), 0)};
}

ChainVector add(const ChainVector& a, const ChainVector& b, Scalar p) {
    if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size())
        throw DimensionMismatch("chain addition mismatch");
    ChainVector r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = fp_add(r.coeffs[i], b.coeffs[i], p);
    return r;
}

ChainVector sub(const ChainVector& a, const ChainVector& b, Scalar p) {
    if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size())
        throw DimensionMismatch("chain subtraction mismatch");
    ChainVector r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = fp_sub(r.coeffs[i], b.coeffs[i], p);
    return r;
}

ChainVector scale(const ChainVector& a, Scalar s, Scalar p) {
    ChainVector r = a;
    for (auto& v : r.coeffs) v = fp_mul(v, s, p);
    return r;
}

ChainVector boundary(const CellComplex& c, const ChainVector& z) {
    if (z.degree == 0) return ChainVector{0, {}};
    ChainVector out{z.degree - 1, c.boundary_matrix(z.degree).apply(z.coeffs)};
    return out;
}

ChainVector coboundary(const CellComplex& c, const ChainVector& phi) {
    return ChainVector{phi.degree + 1,
                       c.boundary_matrix(phi.degree + 1).transpose().apply(phi.coeffs)};
}

namespace {

FieldMatrix relative_boundary(const CellComplex& c, const std::vector<CellId>& kept_rows,
                              const std::vector<CellId>& kept_cols) {
    FieldMatrix m(kept_rows.size(), kept_cols.size(), c.characteristic());
    std::vector<std::size_t> row_pos(c.size(), SIZE_MAX);
    for (std::size_t i = 0; i < kept_rows.size(); ++i) row_pos[kept_rows[i]] = i;
    for (std::size_t j = 0; j < kept_cols.size(); ++j)
        for (auto [f, inc] : c.boundary_of(kept_cols[j]))
            if (row_pos[f] != SIZE_MAX)
                m.at(row_pos[f], j) = fp_add(m.at(row_pos[f], j), inc, c.characteristic());
    return m;
}

std::vector<CellId> kept_cells(const CellComplex& c, const std::set<CellId>& sub, std::size_t k) {
    std::vector<CellId> out;
    for (CellId id : c.cells_of_dim(k))
        if (!sub.count(id)) out.push_back(id);
    return out;
}

} // namespace

HomologyBasis homology_impl(const CellComplex& c, const std::vector<CellId>& below,
                            const std::vector<CellId>& kept, const std::vector<CellId>& above,
                            std::size_t degree, bool cohomological) {
    HomologyBasis hb;
    hb.degree_ = degree;
    hb.p_ = c.characteristic();
    hb.chain_len_ = c.cells_of_dim(degree).size();
    hb.kept_ = kept;
    hb.kept_index_.assign(hb.kept_.size(), 0);
    for (std::size_t i = 0; i < hb.kept_.size(); ++i)
        hb.kept_index_[i] = c.index_in_dim(hb.kept_[i]);

    const std::size_t m = hb.kept_.size();
    const Scalar p = c.characteristic();

    FieldMatrix down = relative_boundary(c, below, hb.kept_);
    FieldMatrix up = relative_boundary(c, hb.kept_, above);
    if (!(down * up).is_zero())
        throw InternalInconsistency("projected boundary does not square to zero");
    if (cohomological) {
        FieldMatrix newdown = up.transpose();
        up = down.transpose();
        down = newdown;
    }
    hb.rel_boundary_ = down;

    Subspace cycles = kernel(down);
    Subspace boundaries = image(up);

    // Complete the boundary space to the cycle space; the added rows are
    // the homology representatives.
    Subspace cur = boundaries;
    FieldMatrix reps(0, m, p);
    for (std::size_t i = 0; i < cycles.dim(); ++i) {
        auto row = cycles.basis().row(i);
        if (cur.contains(row)) continue;
        FieldMatrix one(1, m, p);
        for (std::size_t j = 0; j < m; ++j) one.at(0, j) = row[j];
        reps = reps.vstack(one);
        cur = span_sum(cur, Subspace::from_rows(one));
    }

    const std::size_t r = reps.rows();
    for (std::size_t i = 0; i < r; ++i) {
        ChainVector rep{degree, std::vector<Scalar>(hb.chain_len_, 0)};
        for (std::size_t j = 0; j < m; ++j) rep.coeffs[hb.kept_index_[j]] = reps.at(i, j);
        hb.reps_.push_back(std::move(rep));
    }

    // Coordinate functional: write a cycle in the basis (boundaries, reps)
    // and keep the rep block.  Solve through an independent column set.
    FieldMatrix span_rows = boundaries.basis().vstack(reps);
    const std::size_t z = span_rows.rows();
    auto piv = rref(span_rows).pivots;
    FieldMatrix cols(z, z, p);
    for (std::size_t i = 0; i < z; ++i)
        for (std::size_t j = 0; j < z; ++j) cols.at(i, j) = span_rows.at(i, piv[j]);
    FieldMatrix inv_t = z ? invert(cols.transpose()) : FieldMatrix(0, 0, p);
    FieldMatrix selector(z, m, p);
    for (std::size_t j = 0; j < z; ++j) selector.at(j, piv[j]) = 1;
    hb.coord_matrix_ = (inv_t * selector).row_slice(z - r, z);
    return hb;
}

std::vector<Scalar> HomologyBasis::coords_of(const ChainVector& z) const {
    if (!is_relative_cycle(z)) throw ValidationError("chain is not a relative cycle");
    return coords_of_unchecked(z);
}

std::vector<Scalar> HomologyBasis::coords_of_unchecked(const ChainVector& z) const {
    if (z.degree != degree_ || z.coeffs.size() != chain_len_)
        throw DimensionMismatch("chain shape mismatch in coords_of");
    std::vector<Scalar> kept(kept_.size());
    for (std::size_t i = 0; i < kept_.size(); ++i) kept[i] = z.coeffs[kept_index_[i]];
    return coord_matrix_.apply(kept);
}

bool HomologyBasis::is_relative_cycle(const ChainVector& z) const {
    if (z.degree != degree_ || z.coeffs.size() != chain_len_)
        throw DimensionMismatch("chain shape mismatch in cycle check");
    std::vector<Scalar> kept(kept_.size());
    for (std::size_t i = 0; i < kept_.size(); ++i) kept[i] = z.coeffs[kept_index_[i]];
    auto img = rel_boundary_.apply(kept);
    return std::all_of(img.begin(), img.end(), [](Scalar v) { return v == 0; });
}

namespace {

HomologyBasis pair_homology(const CellComplex& c, const std::set<CellId>& sub, std::size_t degree,
                            bool cohomological) {
    if (!c.is_closed(sub)) throw ValidationError("relative part is not a closed subcomplex");
    auto below = degree == 0 ? std::vector<CellId>{} : kept_cells(c, sub, degree - 1);
    auto kept = kept_cells(c, sub, degree);
    auto above = kept_cells(c, sub, degree + 1);
    return homology_impl(c, below, kept, above, degree, cohomological);
}

} // namespace

HomologyBasis homology(const CellComplex& c, std::size_t degree) {
    return pair_homology(c, {}, degree, false);
}

HomologyBasis relative_homology(const CellComplex& c, const std::set<CellId>& sub,
                                std::size_t degree) {
    return pair_homology(c, sub, degree, false);
}

HomologyBasis cohomology(const CellComplex& c, const std::set<CellId>& sub, std::size_t degree) {
    return pair_homology(c, sub, degree, true);
}

HomologyBasis homology_of_kept(const CellComplex& c, const std::set<CellId>& kept,
                               std::size_t degree) {
    auto pick = [&](std::size_t k) {
        std::vector<CellId> out;
        for (CellId id : c.cells_of_dim(k))
            if (kept.count(id)) out.push_back(id);
        return out;
    };
    auto below = degree == 0 ? std::vector<CellId>{} : pick(degree - 1);
    return homology_impl(c, below, pick(degree), pick(degree + 1), degree, false);
}

std::vector<CellId> maximal_subcomplex(const CellComplex& c, const std::vector<CellId>& keep) {
    std::set<CellId> cur(keep.begin(), keep.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = cur.begin(); it != cur.end();) {
            bool ok = true;
            for (CellId f : c.faces(*it))
                if (!cur.count(f)) {
                    ok = false;
                    break;
                }
            if (!ok) {
                it = cur.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    return {cur.begin(), cur.end()};
}

SubcomplexView restrict_complex(const CellComplex& c, const std::vector<CellId>& closed_ids) {
    SubcomplexView view;
    view.to_new.assign(c.size(), std::nullopt);
    view.to_old = closed_ids;
    std::vector<Cell> cells;
    std::vector<std::vector<std::pair<CellId, Scalar>>> bnd;
    for (std::size_t i = 0; i < closed_ids.size(); ++i) {
        view.to_new[closed_ids[i]] = i;
        Cell cc = c.cell(closed_ids[i]);
        cc.id = i;
        cells.push_back(cc);
    }
    for (CellId old : closed_ids) {
        std::vector<std::pair<CellId, Scalar>> row;
        for (auto [f, inc] : c.boundary_of(old)) {
            if (!view.to_new[f]) throw ValidationError("restrict_complex: id set is not closed");
            row.emplace_back(*view.to_new[f], inc);
        }
        bnd.push_back(std::move(row));
    }
    view.complex = CellComplex(std::move(cells), std::move(bnd), c.characteristic());
    return view;
}

CellId product_cell_id(const CellComplex& a, const CellComplex& b, CellId ca, CellId cb) {
    (void)a;
    return ca * b.size() + cb;
}

CellComplex product_complex(const CellComplex& a, const CellComplex& b) {
    if (a.characteristic() != b.characteristic())
        throw DimensionMismatch("product of complexes over different fields");
    const Scalar p = a.characteristic();
    std::vector<Cell> cells;
    std::vector<std::vector<std::pair<CellId, Scalar>>> bnd;
    for (CellId i = 0; i < a.size(); ++i) {
        for (CellId j = 0; j < b.size(); ++j) {
            Cell c;
            c.id = product_cell_id(a, b, i, j);
            c.dim = a.cell(i).dim + b.cell(j).dim;
            c.label = a.cell(i).label + "x" + b.cell(j).label;
            cells.push_back(c);
            std::vector<std::pair<CellId, Scalar>> row;
            for (auto [f, inc] : a.boundary_of(i))
                row.emplace_back(product_cell_id(a, b, f, j), inc);
            Scalar sign = a.cell(i).dim % 2 == 0 ? 1 : p - 1;
            for (auto [f, inc] : b.boundary_of(j))
                row.emplace_back(product_cell_id(a, b, i, f), fp_mul(sign, inc, p));
            bnd.push_back(std::move(row));
        }
    }
    return CellComplex(std::move(cells), std::move(bnd), p);
}

long long euler_characteristic(const CellComplex& c) {
    long long chi = 0;
    for (const Cell& cell : c.cells()) chi += cell.dim % 2 == 0 ? 1 : -1;
    return chi;
}

ChainVector ChainMap::apply(const CellComplex& target, const ChainVector& z,
                            const CellComplex& source, Scalar p) const {
    ChainVector out = zero_chain(target, z.degree);
    const auto& ids = source.cells_of_dim(z.degree);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        Scalar c = z.coeffs[i];
        if (c == 0) continue;
        const ChainVector& img = chain_of[ids[i]];
        for (std::size_t j = 0; j < img.coeffs.size(); ++j)
            out.coeffs[j] = fp_add(out.coeffs[j], fp_mul(c, img.coeffs[j], p), p);
    }
    return out;
}

} // namespace toro
