#include "toro/cubical.hpp"

#include <algorithm>
#include <sstream>

namespace toro {

std::size_t Cube::dim() const {
    unsigned m = ext_mask;
    std::size_t d = 0;
    while (m) {
        d += m & 1u;
        m >>= 1;
    }
    return d;
}

namespace {

std::string cube_label(const Cube& c) {
    std::ostringstream os;
    os << "c(";
    for (std::size_t a = 0; a < c.lo.size(); ++a) {
        if (a) os << ',';
        os << c.lo[a];
        if (c.ext_mask & (1u << a)) os << '+';
    }
    os << ')';
    return os.str();
}

// faces of a cube in boundary order: for the j-th extended axis (ascending),
// contribute (-1)^(j-1) * (upper - lower)
std::vector<std::pair<Cube, int>> cube_boundary(const Cube& c) {
    std::vector<std::pair<Cube, int>> out;
    int j = 0;
    for (std::size_t a = 0; a < c.lo.size(); ++a) {
        if (!(c.ext_mask & (1u << a))) continue;
        int sign = j % 2 == 0 ? 1 : -1;
        Cube upper = c;
        upper.ext_mask &= ~(1u << a);
        upper.lo[a] += 1;
        Cube lower = c;
        lower.ext_mask &= ~(1u << a);
        out.emplace_back(upper, sign);
        out.emplace_back(lower, -sign);
        ++j;
    }
    return out;
}

} // namespace

Cube CubicalComplex::normalized(Cube c) const {
    for (std::size_t a = 0; a < periodic_; ++a) {
        long long n = extents_[a];
        c.lo[a] = ((c.lo[a] % n) + n) % n;
    }
    return c;
}

std::optional<CellId> CubicalComplex::find(const Cube& c) const {
    auto it = lookup_.find(normalized(c));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

CubicalComplex CubicalComplex::from_cubes(std::vector<long long> extents,
                                          std::size_t periodic_axes,
                                          const std::vector<Cube>& cubes, Scalar p) {
    CubicalComplex cc;
    cc.extents_ = std::move(extents);
    cc.periodic_ = periodic_axes;
    if (periodic_axes > cc.extents_.size())
        throw ValidationError("more periodic axes than grid axes");
    for (std::size_t a = 0; a < cc.extents_.size(); ++a) {
        if (cc.extents_[a] < 1) throw ValidationError("grid extent must be positive");
        if (a < periodic_axes && cc.extents_[a] < 2)
            throw ValidationError("periodic axes need extent at least 2");
    }

    // close under faces
    std::set<Cube> all;
    std::vector<Cube> stack;
    for (const Cube& c : cubes) {
        if (c.lo.size() != cc.extents_.size())
            throw ValidationError("cube dimensionality does not match the grid");
        for (std::size_t a = 0; a < cc.extents_.size(); ++a) {
            bool ext = c.ext_mask & (1u << a);
            long long hi = c.lo[a] + (ext ? 1 : 0);
            if (a >= cc.periodic_ && (c.lo[a] < 0 || hi > cc.extents_[a]))
                throw ValidationError("cube outside the grid on a non-periodic axis");
        }
        Cube n = cc.normalized(c);
        if (all.insert(n).second) stack.push_back(n);
    }
    while (!stack.empty()) {
        Cube c = stack.back();
        stack.pop_back();
        for (auto& [f, sign] : cube_boundary(c)) {
            (void)sign;
            Cube n = cc.normalized(f);
            if (all.insert(n).second) stack.push_back(n);
        }
    }

    std::vector<Cube> ordered(all.begin(), all.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Cube& a, const Cube& b) { return a.dim() < b.dim(); });
    cc.boxes_ = ordered;
    for (CellId i = 0; i < ordered.size(); ++i) cc.lookup_[ordered[i]] = i;

    std::vector<Cell> cells;
    std::vector<std::vector<std::pair<CellId, Scalar>>> bnd;
    for (CellId i = 0; i < ordered.size(); ++i) {
        cells.push_back(Cell{i, ordered[i].dim(), cube_label(ordered[i])});
        std::vector<std::pair<CellId, Scalar>> row;
        for (auto& [f, sign] : cube_boundary(ordered[i])) {
            auto id = cc.find(f);
            if (!id) throw InternalInconsistency("cubical face closure is incomplete");
            Scalar inc = sign > 0 ? 1 : fp_neg(1, p);
            row.emplace_back(*id, inc);
        }
        bnd.push_back(std::move(row));
    }
    cc.complex_ = CellComplex(std::move(cells), std::move(bnd), p);
    return cc;
}

CubicalRefinement refine2(const CubicalComplex& c) {
    std::vector<long long> ext2 = c.extents();
    for (auto& n : ext2) n *= 2;
    std::vector<Cube> children;
    for (CellId i = 0; i < c.complex().size(); ++i) {
        const Cube& b = c.box(i);
        std::size_t k = b.dim();
        std::vector<std::size_t> axes;
        for (std::size_t a = 0; a < b.lo.size(); ++a)
            if (b.ext_mask & (1u << a)) axes.push_back(a);
        for (std::size_t off = 0; off < (1u << k); ++off) {
            Cube child = b;
            for (auto& v : child.lo) v *= 2;
            for (std::size_t j = 0; j < k; ++j)
                if (off & (1u << j)) child.lo[axes[j]] += 1;
            children.push_back(child);
        }
    }
    CubicalRefinement out;
    out.refined =
        CubicalComplex::from_cubes(ext2, c.periodic_axes(), children, c.complex().characteristic());

    out.carrier.chain_of.assign(c.complex().size(), ChainVector{});
    for (CellId i = 0; i < c.complex().size(); ++i) {
        const Cube& b = c.box(i);
        std::size_t k = b.dim();
        ChainVector img = zero_chain(out.refined.complex(), k);
        std::vector<std::size_t> axes;
        for (std::size_t a = 0; a < b.lo.size(); ++a)
            if (b.ext_mask & (1u << a)) axes.push_back(a);
        for (std::size_t off = 0; off < (1u << k); ++off) {
            Cube child = b;
            for (auto& v : child.lo) v *= 2;
            for (std::size_t j = 0; j < k; ++j)
                if (off & (1u << j)) child.lo[axes[j]] += 1;
            auto id = out.refined.find(child);
            if (!id) throw InternalInconsistency("refinement lost a subcell");
            img.coeffs[out.refined.complex().index_in_dim(*id)] = 1;
        }
        out.carrier.chain_of[i] = std::move(img);
    }
    return out;
}

} // namespace toro
