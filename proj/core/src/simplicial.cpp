#include "toro/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace toro {

namespace {

std::string simplex_label(const std::vector<CellId>& verts) {
    std::ostringstream os;
    os << "s(";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) os << ',';
        os << verts[i];
    }
    os << ')';
    return os.str();
}

} // namespace

SimplicialComplex SimplicialComplex::from_simplices(
    std::size_t num_vertices, const std::vector<std::vector<CellId>>& simplices, Scalar p) {
    std::set<std::vector<CellId>> all;
    for (std::size_t v = 0; v < num_vertices; ++v) all.insert({static_cast<CellId>(v)});
    // generate every subset of every given simplex
    for (const auto& s : simplices) {
        std::vector<CellId> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("simplex with repeated vertices");
        for (CellId v : sorted)
            if (v >= num_vertices) throw ValidationError("simplex references unknown vertex");
        const std::size_t n = sorted.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<CellId> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(sorted[i]);
            all.insert(face);
        }
    }

    // order: (dim, vertex tuple); vertices come first so vertex id == cell id
    std::vector<std::vector<CellId>> ordered(all.begin(), all.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    SimplicialComplex sc;
    sc.verts_ = ordered;
    std::vector<Cell> cells;
    for (CellId i = 0; i < ordered.size(); ++i) {
        sc.lookup_[ordered[i]] = i;
        cells.push_back(Cell{i, ordered[i].size() - 1, simplex_label(ordered[i])});
    }
    std::vector<std::vector<std::pair<CellId, Scalar>>> bnd(ordered.size());
    for (CellId i = 0; i < ordered.size(); ++i) {
        const auto& vs = ordered[i];
        if (vs.size() == 1) continue;
        for (std::size_t drop = 0; drop < vs.size(); ++drop) {
            std::vector<CellId> face;
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (j != drop) face.push_back(vs[j]);
            Scalar sign = drop % 2 == 0 ? 1 : fp_neg(1, p);
            bnd[i].emplace_back(sc.lookup_.at(face), sign);
        }
    }
    sc.complex_ = CellComplex(std::move(cells), std::move(bnd), p);
    return sc;
}

std::optional<CellId> SimplicialComplex::find(const std::vector<CellId>& sorted_vertices) const {
    auto it = lookup_.find(sorted_vertices);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

namespace {

// parity of the permutation taking `from` to `to` (both contain the same
// distinct entries)
bool odd_permutation(const std::vector<CellId>& from, const std::vector<CellId>& to) {
    std::vector<std::size_t> perm(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::find(to.begin(), to.end(), from[i]);
        perm[i] = static_cast<std::size_t>(it - to.begin());
    }
    bool odd = false;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) odd = !odd;
    }
    return odd;
}

} // namespace

Subdivision barycentric_subdivide(const SimplicialComplex& sc) {
    const CellComplex& c = sc.complex();
    const Scalar p = c.characteristic();
    for (const Cell& cell : c.cells())
        if (sc.vertices_of(cell.id).size() != cell.dim + 1)
            throw UnsupportedGeometry("barycentric subdivision needs simplicial input");

    // one new vertex per cell; cells sorted by (dim, id) so original
    // vertices come first and keep their relative order
    std::vector<CellId> order(c.size());
    for (CellId i = 0; i < c.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](CellId a, CellId b) { return c.cell(a).dim < c.cell(b).dim; });
    std::vector<CellId> bary(c.size());
    for (CellId pos = 0; pos < order.size(); ++pos) bary[order[pos]] = pos;

    // proper faces of every cell (any codimension), via closure
    std::vector<std::vector<CellId>> proper_faces(c.size());
    for (CellId i = 0; i < c.size(); ++i) {
        auto cl = c.closure({i});
        for (CellId f : cl)
            if (f != i) proper_faces[i].push_back(f);
    }

    // chains of the face order ending at each cell
    std::vector<std::vector<std::vector<CellId>>> chains_at(c.size());
    for (CellId pos = 0; pos < order.size(); ++pos) {
        CellId id = order[pos];
        chains_at[id].push_back({id});
        for (CellId f : proper_faces[id])
            for (const auto& ch : chains_at[f]) {
                auto ext = ch;
                ext.push_back(id);
                chains_at[id].push_back(std::move(ext));
            }
    }

    std::vector<std::vector<CellId>> simplices;
    for (CellId i = 0; i < c.size(); ++i)
        for (const auto& ch : chains_at[i]) {
            std::vector<CellId> verts;
            for (CellId cell : ch) verts.push_back(bary[cell]);
            simplices.push_back(std::move(verts));
        }

    Subdivision out;
    out.sub = SimplicialComplex::from_simplices(c.size(), simplices, p);
    out.barycenter_of = bary;

    // carrier: each k-cell maps to the signed sum of its full flags
    out.carrier.chain_of.assign(c.size(), ChainVector{});
    for (CellId i = 0; i < c.size(); ++i) {
        const std::size_t k = c.cell(i).dim;
        ChainVector img = zero_chain(out.sub.complex(), k);
        for (const auto& ch : chains_at[i]) {
            if (ch.size() != k + 1) continue;
            bool full = true;
            for (std::size_t d = 0; d < ch.size(); ++d)
                if (c.cell(ch[d]).dim != d) {
                    full = false;
                    break;
                }
            if (!full) continue;
            // permutation sign: vertex introduced at each step of the flag
            // versus the reference (ascending) vertex order of the cell
            std::vector<CellId> intro;
            for (std::size_t d = 0; d < ch.size(); ++d) {
                const auto& cur = sc.vertices_of(ch[d]);
                if (d == 0) {
                    intro.push_back(cur[0]);
                } else {
                    const auto& prev = sc.vertices_of(ch[d - 1]);
                    for (CellId v : cur)
                        if (std::find(prev.begin(), prev.end(), v) == prev.end())
                            intro.push_back(v);
                }
            }
            Scalar sign = odd_permutation(sc.vertices_of(i), intro) ? fp_neg(1, p) : 1;
            std::vector<CellId> verts;
            for (CellId cell : ch) verts.push_back(bary[cell]);
            CellId flag_cell = *out.sub.find(verts);
            std::size_t pos = out.sub.complex().index_in_dim(flag_cell);
            img.coeffs[pos] = fp_add(img.coeffs[pos], sign, p);
        }
        out.carrier.chain_of[i] = std::move(img);
    }
    return out;
}

ChainVector cap_product(const SimplicialComplex& sc, const ChainVector& z,
                        const ChainVector& phi) {
    const CellComplex& c = sc.complex();
    const Scalar p = c.characteristic();
    const std::size_t d = phi.degree;
    if (z.degree < d) throw DimensionMismatch("cap product degree mismatch");
    ChainVector out = zero_chain(c, z.degree - d);
    const auto& ids = c.cells_of_dim(z.degree);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        Scalar coeff = z.coeffs[i];
        if (coeff == 0) continue;
        const auto& vs = sc.vertices_of(ids[i]);
        std::vector<CellId> front(vs.begin(), vs.begin() + d + 1);
        std::vector<CellId> back(vs.begin() + d, vs.end());
        auto front_cell = sc.find(front);
        auto back_cell = sc.find(back);
        if (!front_cell || !back_cell)
            throw ValidationError("cap product: face lookup failed (complex not closed?)");
        Scalar f = phi.coeffs[c.index_in_dim(*front_cell)];
        if (f == 0) continue;
        std::size_t pos = c.index_in_dim(*back_cell);
        out.coeffs[pos] = fp_add(out.coeffs[pos], fp_mul(coeff, f, p), p);
    }
    return out;
}

} // namespace toro
