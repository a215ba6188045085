#include "toro/periodic.hpp"

#include <algorithm>

namespace toro {

long long rat_floor(const Rat& r) {
    long long n = r.numerator(), d = r.denominator(); // d > 0 by boost invariant
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

static Rat frac_mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

bool meets_open_mod1(const Interval& cell, const Rat& s, const Rat& e) {
    // [lo,hi] meets (s+t, e+t) iff s+t < hi and lo < e+t, except that a
    // degenerate point needs to lie strictly inside
    long long t0 = rat_floor(cell.lo - e) - 1;
    long long t1 = rat_floor(cell.hi - s) + 1;
    for (long long t = t0; t <= t1; ++t) {
        if (cell.lo == cell.hi) {
            if (s + t < cell.lo && cell.lo < e + t) return true;
        } else if (s + t < cell.hi && cell.lo < e + t) {
            return true;
        }
    }
    return false;
}

long long crossings(const Rat& x0, const Rat& x1, const Rat& c) {
    // counts points of c + Z in (x0, x1], signed by orientation
    return rat_floor(x1 - c) - rat_floor(x0 - c);
}

Scalar PeriodicComplex::characteristic() const { return complex().characteristic(); }

const CellComplex& PeriodicComplex::complex() const {
    return kind_ == Kind::Simplicial ? sc_.complex() : cub_.complex();
}

PeriodicComplex PeriodicComplex::simplicial(std::vector<std::vector<Rat>> vertex_coords,
                                            std::size_t d,
                                            const std::vector<std::vector<CellId>>& simplices,
                                            Scalar p) {
    PeriodicComplex g;
    g.kind_ = Kind::Simplicial;
    g.d_ = d;
    g.coords_ = std::move(vertex_coords);
    g.n_ = g.coords_.empty() ? d : g.coords_[0].size();
    if (g.n_ < d) throw ValidationError("fewer ambient coordinates than periodic directions");
    for (auto& vc : g.coords_) {
        if (vc.size() != g.n_) throw ValidationError("ragged vertex coordinate table");
        for (std::size_t i = 0; i < d; ++i) vc[i] = frac_mod1(vc[i]);
    }
    g.sc_ = SimplicialComplex::from_simplices(g.coords_.size(), simplices, p);
    g.compute_lifts();
    return g;
}

PeriodicComplex PeriodicComplex::cubical(std::vector<long long> extents, std::size_t periodic_axes,
                                         const std::vector<Cube>& cubes, Scalar p) {
    return from_cubical(CubicalComplex::from_cubes(std::move(extents), periodic_axes, cubes, p));
}

PeriodicComplex PeriodicComplex::from_cubical(CubicalComplex cc) {
    PeriodicComplex g;
    g.kind_ = Kind::Cubical;
    g.d_ = cc.periodic_axes();
    g.n_ = cc.ambient_dim();
    g.cub_ = std::move(cc);
    return g;
}

void PeriodicComplex::compute_lifts() {
    const CellComplex& c = sc_.complex();
    lifts_.assign(c.size(), {});
    for (CellId id = 0; id < c.size(); ++id) {
        const auto& vs = sc_.vertices_of(id);
        lifts_[id].assign(d_, std::vector<int>(vs.size(), 0));
        for (std::size_t dir = 0; dir < d_; ++dir) {
            std::vector<Rat> vals;
            for (CellId v : vs) vals.push_back(coords_[v][dir]);
            std::vector<Rat> sorted = vals;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            if (sorted.size() < 2) continue;
            // shortest-arc lift: cut the circle at the widest gap
            Rat best_gap = sorted.front() + 1 - sorted.back(); // the wrap gap
            std::size_t cut = sorted.size();                   // sentinel: no crossing
            for (std::size_t j = 0; j + 1 < sorted.size(); ++j) {
                Rat gap = sorted[j + 1] - sorted[j];
                if (gap > best_gap) {
                    best_gap = gap;
                    cut = j;
                }
            }
            if (cut == sorted.size()) continue;
            for (std::size_t s = 0; s < vs.size(); ++s)
                if (vals[s] <= sorted[cut]) lifts_[id][dir][s] = 1;
        }
    }
}

bool PeriodicComplex::wraps(CellId cell, std::size_t dir) const {
    if (kind_ == Kind::Cubical) {
        const Cube& b = cub_.box(cell);
        return (b.ext_mask & (1u << dir)) && b.lo[dir] + 1 == cub_.extents()[dir];
    }
    for (int s : lifts_[cell][dir])
        if (s != 0) return true;
    return false;
}

Interval PeriodicComplex::projection(CellId cell, std::size_t dir) const {
    if (dir >= d_) throw DimensionMismatch("projection direction out of range");
    if (kind_ == Kind::Cubical) {
        const Cube& b = cub_.box(cell);
        Rat lo(b.lo[dir], cub_.extents()[dir]);
        Rat hi = lo + (b.ext_mask & (1u << dir) ? Rat(1, cub_.extents()[dir]) : Rat(0));
        return {lo, hi};
    }
    const auto& vs = sc_.vertices_of(cell);
    Rat lo = coords_[vs[0]][dir] + lifts_[cell][dir][0];
    Rat hi = lo;
    for (std::size_t s = 1; s < vs.size(); ++s) {
        Rat x = coords_[vs[s]][dir] + lifts_[cell][dir][s];
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    Rat shift(rat_floor(lo));
    return {lo - shift, hi - shift};
}

std::pair<Rat, Rat> PeriodicComplex::oriented_projection(CellId cell, std::size_t dir) const {
    if (kind_ == Kind::Cubical) {
        Interval iv = projection(cell, dir);
        return {iv.lo, iv.hi}; // grid edges are oriented lower -> upper
    }
    const auto& vs = sc_.vertices_of(cell);
    if (vs.size() != 2) {
        Interval iv = projection(cell, dir);
        return {iv.lo, iv.lo};
    }
    Rat x0 = coords_[vs[0]][dir] + lifts_[cell][dir][0];
    Rat x1 = coords_[vs[1]][dir] + lifts_[cell][dir][1];
    Rat shift(rat_floor(std::min(x0, x1)));
    return {x0 - shift, x1 - shift};
}

std::pair<Rat, Rat> BaseCellulation::star(CellId base_cell) const {
    const std::size_t m = vertex_angles.size();
    auto angle = [&](std::size_t j) {
        return j < m ? vertex_angles[j] : vertex_angles[j - m] + 1;
    };
    if (base_cell < m) {
        std::size_t j = base_cell;
        Rat lo = j == 0 ? vertex_angles[m - 1] - 1 : vertex_angles[j - 1];
        return {lo, angle(j + 1)};
    }
    std::size_t j = base_cell - m;
    if (j >= m) throw DimensionMismatch("base cell id out of range");
    return {angle(j), angle(j + 1)};
}

Rat BaseCellulation::crossing_angle(CellId base_cell) const {
    const std::size_t m = vertex_angles.size();
    std::size_t j = base_cell < m ? base_cell : base_cell - m;
    if (j >= m) throw DimensionMismatch("base cell id out of range");
    Rat next = j + 1 == m ? vertex_angles[0] + 1 : vertex_angles[j + 1];
    Rat mid = (vertex_angles[j] + next) / 2;
    return mid - Rat(rat_floor(mid));
}

CellComplex BaseCellulation::to_complex(Scalar p) const {
    const std::size_t m = vertex_angles.size();
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

BaseCellulation base_cellulation(const PeriodicComplex& g, std::size_t dir, bool allow_midpoint) {
    if (dir >= g.periodicity()) throw DimensionMismatch("direction out of range");
    BaseCellulation b;
    b.direction = dir;
    std::set<Rat> angles;
    for (CellId v : g.complex().cells_of_dim(0)) angles.insert(g.projection(v, dir).lo);
    if (angles.size() < 2) {
        if (!allow_midpoint)
            throw UnsupportedGeometry("base cellulation needs at least two distinct angles");
        b.artificial_vertex = true;
        if (angles.empty()) {
            angles.insert(Rat(0));
            angles.insert(Rat(1, 2));
            b.artificial_angle = Rat(1, 2);
        } else {
            Rat a = *angles.begin();
            Rat anti = a + Rat(1, 2);
            if (anti >= 1) anti -= 1;
            angles.insert(anti);
            b.artificial_angle = anti;
        }
    }
    b.vertex_angles.assign(angles.begin(), angles.end());
    return b;
}

StarAssignment star_preimages(const PeriodicComplex& w, const BaseCellulation& b) {
    const CellComplex& c = w.complex();
    const std::size_t m = b.num_vertices();
    StarAssignment out;
    out.preimage.assign(2 * m, {});
    out.closed.assign(2 * m, {});
    out.retract.assign(2 * m, {});
    for (CellId base = 0; base < 2 * m; ++base) {
        auto [s, e] = b.star(base);
        for (CellId id = 0; id < c.size(); ++id) {
            Interval iv = w.projection(id, b.direction);
            if (iv.hi - iv.lo >= 1)
                throw UnsupportedGeometry(
                    "a cell projects onto the full circle; refine the cellulation");
            if (meets_open_mod1(iv, s, e)) out.preimage[base].push_back(id);
        }
        out.closed[base] = c.closure(out.preimage[base]);
        out.retract[base] = maximal_subcomplex(c, out.preimage[base]);
    }
    return out;
}

namespace {

// every cell projects inside the closed star of some base vertex
bool fiber_aligned(const PeriodicComplex& w, const BaseCellulation& b) {
    const std::size_t m = b.num_vertices();
    auto angle = [&](long long j) {
        long long mm = static_cast<long long>(m);
        long long wrap = j >= 0 ? j / mm : -((-j + mm - 1) / mm);
        return b.vertex_angles[static_cast<std::size_t>(j - wrap * mm)] + Rat(wrap);
    };
    for (CellId id = 0; id < w.complex().size(); ++id) {
        Interval iv = w.projection(id, b.direction);
        bool ok = false;
        long long t0 = rat_floor(iv.lo) - 1, t1 = rat_floor(iv.hi) + 1;
        for (long long t = t0; t <= t1 && !ok; ++t)
            for (std::size_t j = 0; j < m && !ok; ++j) {
                Rat lo = angle(static_cast<long long>(j) - 1) + t;
                Rat hi = angle(static_cast<long long>(j) + 1) + t;
                if (lo <= iv.lo && iv.hi <= hi) ok = true;
            }
        if (!ok) return false;
    }
    return true;
}

ChainMap identity_chain_map(const CellComplex& c) {
    ChainMap id;
    id.chain_of.assign(c.size(), ChainVector{});
    for (CellId i = 0; i < c.size(); ++i) {
        ChainVector z = zero_chain(c, c.cell(i).dim);
        z.coeffs[c.index_in_dim(i)] = 1;
        id.chain_of[i] = std::move(z);
    }
    return id;
}

ChainMap compose(const ChainMap& first, const ChainMap& then, const CellComplex& mid, Scalar p) {
    ChainMap out;
    out.chain_of.assign(first.chain_of.size(), ChainVector{});
    for (CellId i = 0; i < first.chain_of.size(); ++i) {
        // image of cell i under `first` lives in `mid`; push through `then`
        const ChainVector& z = first.chain_of[i];
        ChainVector acc;
        bool started = false;
        const auto& ids = mid.cells_of_dim(z.degree);
        for (std::size_t s = 0; s < ids.size(); ++s) {
            Scalar cf = z.coeffs[s];
            if (cf == 0) continue;
            const ChainVector& img = then.chain_of[ids[s]];
            if (!started) {
                acc = ChainVector{img.degree, std::vector<Scalar>(img.coeffs.size(), 0)};
                started = true;
            }
            for (std::size_t j = 0; j < img.coeffs.size(); ++j)
                acc.coeffs[j] = fp_add(acc.coeffs[j], fp_mul(cf, img.coeffs[j], p), p);
        }
        if (!started) {
            // zero image: take the shape from any cell of the degree
            acc = ChainVector{z.degree, {}};
            const auto& tids = mid.cells_of_dim(z.degree);
            if (!tids.empty()) acc = ChainVector{z.degree, std::vector<Scalar>(
                                              then.chain_of[tids[0]].coeffs.size(), 0)};
        }
        out.chain_of[i] = std::move(acc);
    }
    return out;
}

PeriodicComplex subdivide_once(const PeriodicComplex& g, ChainMap& carrier_out) {
    const SimplicialComplex& sc = g.simplicial_complex();
    Subdivision sd = barycentric_subdivide(sc);
    carrier_out = sd.carrier;
    // barycenter coordinates average the lifted vertex coordinates of the
    // cell, reduced mod 1 in the periodic directions
    std::vector<std::vector<Rat>> coords(sc.complex().size(),
                                         std::vector<Rat>(g.ambient_dim(), Rat(0)));
    for (CellId id = 0; id < sc.complex().size(); ++id) {
        const auto& vs = sc.vertices_of(id);
        std::vector<Rat>& out = coords[sd.barycenter_of[id]];
        for (std::size_t a = 0; a < g.ambient_dim(); ++a) {
            Rat sum(0);
            for (std::size_t s = 0; s < vs.size(); ++s) {
                Rat x = g.coords()[vs[s]][a];
                if (a < g.periodicity()) x += Rat(g.lift_shift(id, a, s));
                sum += x;
            }
            out[a] = sum / Rat(static_cast<long long>(vs.size()));
        }
    }
    std::vector<std::vector<CellId>> simplices;
    for (CellId i = 0; i < sd.sub.complex().size(); ++i)
        simplices.push_back(sd.sub.vertices_of(i));
    return PeriodicComplex::simplicial(std::move(coords), g.periodicity(), simplices,
                                       g.characteristic());
}

} // namespace

PreparedComplex subdivide_extra(const PreparedComplex& pc) {
    if (pc.w.kind() == PeriodicComplex::Kind::Cubical) {
        CubicalRefinement r = refine2(pc.w.cubical_complex());
        PreparedComplex out;
        out.carrier = compose(pc.carrier, r.carrier, pc.w.complex(), pc.w.characteristic());
        out.w = PeriodicComplex::from_cubical(std::move(r.refined));
        out.rounds = pc.rounds + 1;
        return out;
    }
    ChainMap step;
    PreparedComplex out;
    out.w = subdivide_once(pc.w, step);
    out.carrier = compose(pc.carrier, step, pc.w.complex(), pc.w.characteristic());
    out.rounds = pc.rounds + 1;
    return out;
}

PreparedComplex subdivide_for_fibers(const PeriodicComplex& g, const BaseCellulation& b,
                                     std::size_t max_rounds) {
    PreparedComplex out;
    if (g.kind() == PeriodicComplex::Kind::Cubical) {
        CubicalRefinement r = refine2(g.cubical_complex());
        out.w = PeriodicComplex::from_cubical(std::move(r.refined));
        out.carrier = std::move(r.carrier);
        out.rounds = 1;
        return out;
    }
    out.w = g;
    out.carrier = identity_chain_map(g.complex());
    while (!fiber_aligned(out.w, b)) {
        if (out.rounds >= max_rounds)
            throw UnsupportedGeometry("subdivision limit reached while aligning fibers");
        out = subdivide_extra(std::move(out));
    }
    // one more round so the open preimages retract onto their maximal
    // subcomplexes inside the subdivision
    return subdivide_extra(out);
}

PeriodicComplex k_fold_cover(const PeriodicComplex& g, std::size_t dir, std::size_t k) {
    if (k < 1) throw ValidationError("cover multiplicity must be at least 1");
    if (dir >= g.periodicity()) throw DimensionMismatch("cover direction out of range");
    if (k == 1) return g;
    if (g.kind() == PeriodicComplex::Kind::Cubical) {
        std::vector<long long> ext = g.cubical_complex().extents();
        long long n0 = ext[dir];
        ext[dir] *= static_cast<long long>(k);
        std::vector<Cube> cubes;
        for (CellId id = 0; id < g.complex().size(); ++id) {
            Cube b = g.cubical_complex().box(id);
            for (std::size_t t = 0; t < k; ++t) {
                Cube c = b;
                c.lo[dir] += static_cast<long long>(t) * n0;
                cubes.push_back(c);
            }
        }
        return PeriodicComplex::cubical(std::move(ext), g.periodicity(), cubes,
                                        g.characteristic());
    }
    const SimplicialComplex& sc = g.simplicial_complex();
    const std::size_t nv = g.complex().cells_of_dim(0).size();
    std::vector<std::vector<Rat>> coords(nv * k, std::vector<Rat>(g.ambient_dim()));
    for (std::size_t t = 0; t < k; ++t)
        for (CellId v = 0; v < nv; ++v) {
            auto vc = g.coords()[v];
            vc[dir] = (vc[dir] + Rat(static_cast<long long>(t))) / Rat(static_cast<long long>(k));
            coords[t * nv + v] = vc;
        }
    std::vector<std::vector<CellId>> simplices;
    for (CellId id = 0; id < g.complex().size(); ++id) {
        const auto& vs = sc.vertices_of(id);
        for (std::size_t t = 0; t < k; ++t) {
            std::vector<CellId> img;
            for (std::size_t s = 0; s < vs.size(); ++s) {
                std::size_t copy = (t + static_cast<std::size_t>(g.lift_shift(id, dir, s))) % k;
                img.push_back(copy * nv + vs[s]);
            }
            simplices.push_back(img);
        }
    }
    return PeriodicComplex::simplicial(std::move(coords), g.periodicity(), simplices,
                                       g.characteristic());
}

} // namespace toro
