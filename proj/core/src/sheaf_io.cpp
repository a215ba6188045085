#include "toro/sheaf_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace toro {

namespace {

std::map<std::string, CellId> label_table(const CellComplex& c) {
    std::map<std::string, CellId> out;
    for (const Cell& cell : c.cells()) out[cell.label] = cell.id;
    return out;
}

} // namespace

BaseDesc make_circle_base(std::size_t m, Scalar p) {
    BaseDesc b;
    b.kind = BaseDesc::Kind::Circle;
    b.m1 = m;
    b.complex = std::make_shared<CellComplex>(circle_complex(m, p));
    b.name_to_id = label_table(*b.complex);
    return b;
}

BaseDesc make_torus_base(std::size_t m1, std::size_t m2, Scalar p) {
    BaseDesc b;
    b.kind = BaseDesc::Kind::Torus;
    b.m1 = m1;
    b.m2 = m2;
    b.complex = std::make_shared<CellComplex>(
        product_complex(circle_complex(m1, p), circle_complex(m2, p)));
    b.name_to_id = label_table(*b.complex);
    return b;
}

Bisheaf ExplicitInput::bisheaf() const {
    if (kind != Kind::Bisheaf) throw ValidationError("input does not hold a bisheaf");
    return Bisheaf{sheaf, cosheaf, vertical};
}

namespace {

struct LineReader {
    std::istream& in;
    std::size_t lineno = 0;

    // next non-empty, non-comment line split into tokens
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ss(line);
            tokens.clear();
            std::string tok;
            while (ss >> tok) {
                if (tok[0] == '#') break;
                tokens.push_back(tok);
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    }
};

long long to_int(LineReader& r, const std::string& tok) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) r.fail("bad integer '" + tok + "'");
        return v;
    } catch (const std::exception&) {
        r.fail("bad integer '" + tok + "'");
    }
}

FieldMatrix read_matrix(LineReader& r, std::size_t rows, std::size_t cols, Scalar p) {
    FieldMatrix m(rows, cols, p);
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!r.next(tokens)) r.fail("unexpected end of file inside a matrix block");
        if (tokens.size() != cols) r.fail("expected " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = fp_from_int(to_int(r, tokens[j]), p);
    }
    return m;
}

CellId cell_by_name(LineReader& r, const BaseDesc& base, const std::string& name) {
    auto it = base.name_to_id.find(name);
    if (it == base.name_to_id.end()) r.fail("unknown cell '" + name + "'");
    return it->second;
}

void write_matrix(std::ostream& os, const FieldMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
}

void write_base(std::ostream& os, const BaseDesc& base, Scalar p) {
    os << "field " << p << '\n';
    if (base.kind == BaseDesc::Kind::Circle)
        os << "base circle " << base.m1 << '\n';
    else
        os << "base torus " << base.m1 << ' ' << base.m2 << '\n';
}

} // namespace

ExplicitInput read_explicit(std::istream& in) {
    LineReader r{in};
    std::vector<std::string> t;
    if (!r.next(t)) r.fail("empty input");
    ExplicitInput out;
    if (t.size() != 2 || t[1] != "v1") r.fail("expected '<sheaf|cosheaf|bisheaf> v1' header");
    if (t[0] == "sheaf")
        out.kind = ExplicitInput::Kind::Sheaf;
    else if (t[0] == "cosheaf")
        out.kind = ExplicitInput::Kind::Cosheaf;
    else if (t[0] == "bisheaf")
        out.kind = ExplicitInput::Kind::Bisheaf;
    else
        r.fail("unknown input kind '" + t[0] + "'");

    if (!r.next(t) || t.size() != 2 || t[0] != "field") r.fail("expected 'field <p>'");
    Scalar p = static_cast<Scalar>(to_int(r, t[1]));
    if (!is_prime(p)) r.fail("field characteristic must be prime");

    if (!r.next(t) || t[0] != "base") r.fail("expected 'base circle <m>' or 'base torus <m> <m>'");
    if (t.size() == 3 && t[1] == "circle") {
        long long m = to_int(r, t[2]);
        if (m < 2) r.fail("circle base needs at least two vertices");
        out.base = make_circle_base(static_cast<std::size_t>(m), p);
    } else if (t.size() == 4 && t[1] == "torus") {
        long long m1 = to_int(r, t[2]), m2 = to_int(r, t[3]);
        if (m1 < 2 || m2 < 2) r.fail("torus base needs at least two vertices per circle");
        out.base = make_torus_base(static_cast<std::size_t>(m1), static_cast<std::size_t>(m2), p);
    } else {
        r.fail("expected 'base circle <m>' or 'base torus <m> <m>'");
    }
    const CellComplex& base = *out.base.complex;

    const bool has_sheaf = out.kind != ExplicitInput::Kind::Cosheaf;
    const bool has_cosheaf = out.kind != ExplicitInput::Kind::Sheaf;
    out.sheaf.base = out.base.complex;
    out.cosheaf.base = out.base.complex;
    out.sheaf.stalk_dim.assign(base.size(), 0);
    out.cosheaf.stalk_dim.assign(base.size(), 0);
    out.vertical.assign(base.size(), FieldMatrix());

    std::vector<bool> stalk_seen(base.size(), false);
    std::set<Relation> sheaf_seen, cosheaf_seen;
    std::vector<bool> vertical_seen(base.size(), false);

    while (r.next(t)) {
        if (t[0] == "end") break;
        if (t[0] == "degree") {
            if (t.size() != 2) r.fail("expected 'degree <k>'");
            out.degree = static_cast<std::size_t>(to_int(r, t[1]));
        } else if (t[0] == "stalk") {
            std::size_t want = 1 + (has_sheaf ? 1 : 0) + (has_cosheaf ? 1 : 0);
            if (t.size() != want + 1) r.fail("stalk line has the wrong number of fields");
            CellId id = cell_by_name(r, out.base, t[1]);
            if (stalk_seen[id]) r.fail("duplicate stalk line for '" + t[1] + "'");
            stalk_seen[id] = true;
            std::size_t pos = 2;
            if (has_sheaf) out.sheaf.stalk_dim[id] = static_cast<std::size_t>(to_int(r, t[pos++]));
            if (has_cosheaf) out.cosheaf.stalk_dim[id] = static_cast<std::size_t>(to_int(r, t[pos]));
        } else if ((t[0] == "sheafmap" && has_sheaf) || (t[0] == "map" && out.kind == ExplicitInput::Kind::Sheaf)) {
            if (t.size() != 3) r.fail("expected '" + t[0] + " <sigma> <tau>'");
            Relation rel{cell_by_name(r, out.base, t[1]), cell_by_name(r, out.base, t[2])};
            if (!sheaf_seen.insert(rel).second) r.fail("duplicate sheaf map");
            out.sheaf.maps[rel] =
                read_matrix(r, out.sheaf.stalk_dim[rel.first], out.sheaf.stalk_dim[rel.second], p);
        } else if ((t[0] == "cosheafmap" && has_cosheaf) ||
                   (t[0] == "map" && out.kind == ExplicitInput::Kind::Cosheaf)) {
            if (t.size() != 3) r.fail("expected '" + t[0] + " <sigma> <tau>'");
            Relation rel{cell_by_name(r, out.base, t[1]), cell_by_name(r, out.base, t[2])};
            if (!cosheaf_seen.insert(rel).second) r.fail("duplicate cosheaf map");
            out.cosheaf.maps[rel] = read_matrix(r, out.cosheaf.stalk_dim[rel.second],
                                                out.cosheaf.stalk_dim[rel.first], p);
        } else if (t[0] == "vertical" && out.kind == ExplicitInput::Kind::Bisheaf) {
            if (t.size() != 2) r.fail("expected 'vertical <cell>'");
            CellId id = cell_by_name(r, out.base, t[1]);
            if (vertical_seen[id]) r.fail("duplicate vertical block");
            vertical_seen[id] = true;
            out.vertical[id] =
                read_matrix(r, out.cosheaf.stalk_dim[id], out.sheaf.stalk_dim[id], p);
        } else {
            r.fail("unknown directive '" + t[0] + "'");
        }
    }

    // every relation needs its matrix; absent stalk lines mean dimension 0
    for (const Relation& rel : covering_relations(base)) {
        if (has_sheaf && !sheaf_seen.count(rel)) {
            if (out.sheaf.stalk_dim[rel.first] != 0 || out.sheaf.stalk_dim[rel.second] != 0)
                r.fail("missing sheaf map for a relation with nonzero stalks");
            out.sheaf.maps[rel] = FieldMatrix(0, 0, p);
        }
        if (has_cosheaf && !cosheaf_seen.count(rel)) {
            if (out.cosheaf.stalk_dim[rel.first] != 0 || out.cosheaf.stalk_dim[rel.second] != 0)
                r.fail("missing cosheaf map for a relation with nonzero stalks");
            out.cosheaf.maps[rel] = FieldMatrix(0, 0, p);
        }
    }
    if (out.kind == ExplicitInput::Kind::Bisheaf)
        for (CellId id = 0; id < base.size(); ++id)
            if (!vertical_seen[id]) {
                if (out.sheaf.stalk_dim[id] != 0 && out.cosheaf.stalk_dim[id] != 0)
                    r.fail("missing vertical block for cell with nonzero stalks");
                out.vertical[id] =
                    FieldMatrix(out.cosheaf.stalk_dim[id], out.sheaf.stalk_dim[id], p);
            }
    return out;
}

void write_sheaf(std::ostream& os, const BaseDesc& base, const CellSheaf& s) {
    os << "sheaf v1\n";
    write_base(os, base, s.characteristic());
    for (CellId id = 0; id < base.complex->size(); ++id)
        os << "stalk " << base.complex->cell(id).label << ' ' << s.stalk_dim[id] << '\n';
    for (const auto& [rel, m] : s.maps) {
        os << "map " << base.complex->cell(rel.first).label << ' '
           << base.complex->cell(rel.second).label << '\n';
        write_matrix(os, m);
    }
    os << "end\n";
}

void write_cosheaf(std::ostream& os, const BaseDesc& base, const CellCosheaf& c) {
    os << "cosheaf v1\n";
    write_base(os, base, c.characteristic());
    for (CellId id = 0; id < base.complex->size(); ++id)
        os << "stalk " << base.complex->cell(id).label << ' ' << c.stalk_dim[id] << '\n';
    for (const auto& [rel, m] : c.maps) {
        os << "map " << base.complex->cell(rel.first).label << ' '
           << base.complex->cell(rel.second).label << '\n';
        write_matrix(os, m);
    }
    os << "end\n";
}

void write_bisheaf(std::ostream& os, const BaseDesc& base, const Bisheaf& b, std::size_t degree) {
    os << "bisheaf v1\n";
    write_base(os, base, b.sheaf.characteristic());
    os << "degree " << degree << '\n';
    for (CellId id = 0; id < base.complex->size(); ++id)
        os << "stalk " << base.complex->cell(id).label << ' ' << b.sheaf.stalk_dim[id] << ' '
           << b.cosheaf.stalk_dim[id] << '\n';
    for (const auto& [rel, m] : b.sheaf.maps) {
        os << "sheafmap " << base.complex->cell(rel.first).label << ' '
           << base.complex->cell(rel.second).label << '\n';
        write_matrix(os, m);
    }
    for (const auto& [rel, m] : b.cosheaf.maps) {
        os << "cosheafmap " << base.complex->cell(rel.first).label << ' '
           << base.complex->cell(rel.second).label << '\n';
        write_matrix(os, m);
    }
    for (CellId id = 0; id < base.complex->size(); ++id) {
        os << "vertical " << base.complex->cell(id).label << '\n';
        write_matrix(os, b.vertical[id]);
    }
    os << "end\n";
}

} // namespace toro
