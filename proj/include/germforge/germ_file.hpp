#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "map_germ.hpp"
#include "poly_parser.hpp"
#include "stratification.hpp"

namespace germ {

// Input grammar (whitespace-insensitive, '#' comments to end of line):
//   file      := statement*
//   statement := 'field' ('R'|'C') ';'
//              | 'vars' identifier+ ';'
//              | 'map' NAME ':' nat '->' nat '=' '[' poly (',' poly)* ']' ';'
//              | 'stratum' 'of' NAME ':' 'closure' '[' poly-list ']'
//                          ['minus' '[' poly-list ']'] ['rank' nat] ';'
//              | 'ideal' NAME '=' '[' poly-list ']' ';'
//
// A map's source is the current 'vars' frame; the declared source dimension
// must match its size. The target is the first frame declared after the map
// whose size equals the declared target dimension; failing that, the current
// frame when the sizes agree (identity-style fixtures); otherwise a fresh
// frame named NAME_1..NAME_p. Strata attach to an already declared map and
// their polynomials are read in that map's source frame. At most one 'field'
// statement, and it must precede every 'map'.

struct FileStratum {
    std::string map_name;
    std::vector<QPoly> closure;
    std::vector<QPoly> minus;
    int rank = -1;
};

struct FileIdeal {
    std::string name;
    Ideal ideal;
};

struct GermFile {
    Field field = Field::real;
    std::vector<Ring> frames;
    size_t declared_frames = 0; // frames beyond this index are synthetic targets
    std::vector<MapGerm> maps;
    std::vector<FileStratum> strata;
    std::vector<FileIdeal> ideals;

    // statement order, for canonical printing
    enum class StmtKind { vars, map, stratum, ideal };
    struct Stmt {
        StmtKind kind;
        size_t index;
    };
    std::vector<Stmt> stmts;

    bool has_map(const std::string& name) const {
        for (const auto& m : maps)
            if (m.name == name) return true;
        return false;
    }

    const MapGerm& map(const std::string& name) const {
        for (const auto& m : maps)
            if (m.name == name) return m;
        throw DomainError("no map named '" + name + "' in the input file");
    }

    const Ideal& named_ideal(const std::string& name) const {
        for (const auto& i : ideals)
            if (i.name == name) return i.ideal;
        throw DomainError("no ideal named '" + name + "' in the input file");
    }

    /// User-supplied stratification for a map, if any strata were declared.
    /// Pieces whose support misses the origin are dropped, as in the computed
    /// stratifications.
    std::optional<Stratification> user_stratification(const std::string& map_name) const {
        const MapGerm& m = map(map_name);
        Stratification s;
        s.ring = m.source;
        size_t k = 0;
        bool any = false;
        for (const auto& st : strata) {
            if (st.map_name != map_name) continue;
            any = true;
            Stratum piece;
            piece.label = map_name + ".user" + std::to_string(k++);
            piece.closure = Ideal(m.source, st.closure);
            if (!st.minus.empty()) piece.frontiers.push_back(Ideal(m.source, st.minus));
            piece.expected_rank = st.rank;
            if (detail::normalize_stratum(piece, field)) s.strata.push_back(std::move(piece));
        }
        if (!any) return std::nullopt;
        return s;
    }

    std::string print() const {
        auto poly_list = [](const std::vector<QPoly>& ps) {
            std::string out = "[";
            for (size_t i = 0; i < ps.size(); ++i) {
                if (i) out += ", ";
                out += ps[i].str();
            }
            return out + "]";
        };
        std::string out = field == Field::complex ? "field C;\n" : "field R;\n";
        for (const auto& st : stmts) {
            switch (st.kind) {
            case StmtKind::vars: {
                out += "vars";
                for (const auto& v : frames[st.index]->vars) out += " " + v;
                out += ";\n";
                break;
            }
            case StmtKind::map: {
                const MapGerm& m = maps[st.index];
                out += "map " + m.name + " : " + std::to_string(m.source->nvars()) + " -> " +
                       std::to_string(m.target->nvars()) + " = " + poly_list(m.components) + ";\n";
                break;
            }
            case StmtKind::stratum: {
                const FileStratum& s = strata[st.index];
                out += "stratum of " + s.map_name + " : closure " + poly_list(s.closure);
                if (!s.minus.empty()) out += " minus " + poly_list(s.minus);
                if (s.rank >= 0) out += " rank " + std::to_string(s.rank);
                out += ";\n";
                break;
            }
            case StmtKind::ideal: {
                const FileIdeal& fi = ideals[st.index];
                out += "ideal " + fi.name + " = ";
                std::string gens = "[";
                for (size_t i = 0; i < fi.ideal.gens().size(); ++i) {
                    if (i) gens += ", ";
                    gens += fi.ideal.gens()[i].str();
                }
                out += gens + "];\n";
                break;
            }
            }
        }
        return out;
    }
};

namespace detail {

inline std::string read_identifier(Cursor& c) {
    c.skip_ws_and_comments();
    if (!std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != '_')
        c.fail("expected an identifier");
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_') {
        out += c.peek();
        c.advance();
    }
    return out;
}

inline void expect_char(Cursor& c, char ch, const char* what) {
    c.skip_ws_and_comments();
    if (c.peek() != ch) c.fail(std::string("expected '") + ch + "' " + what);
    c.advance();
}

inline long read_nat(Cursor& c, const char* what) {
    c.skip_ws_and_comments();
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        c.fail(std::string("expected a number for ") + what);
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        d += c.peek();
        c.advance();
    }
    if (d.size() > 6) c.fail(std::string(what) + " too large");
    return std::stol(d);
}

inline std::vector<QPoly> read_poly_list(Cursor& c, const Ring& ring) {
    expect_char(c, '[', "to open a polynomial list");
    std::vector<QPoly> out;
    c.skip_ws_and_comments();
    if (c.peek() == ']') {
        c.advance();
        return out;
    }
    PolyParser parser(c, ring);
    for (;;) {
        out.push_back(parser.expr());
        c.skip_ws_and_comments();
        if (c.peek() == ',') {
            c.advance();
            continue;
        }
        if (c.peek() == ']') {
            c.advance();
            return out;
        }
        c.fail("expected ',' or ']' in a polynomial list");
    }
}

} // namespace detail

inline GermFile parse_germ_file(const std::string& text) {
    detail::Cursor c(text);
    GermFile out;

    struct MapRecord {
        std::string name;
        size_t stmt_pos;
        size_t frame; // current frame at declaration
        long src_dim, tgt_dim;
        std::vector<QPoly> comps;
        int line, col;
    };
    std::vector<MapRecord> records;
    std::vector<size_t> frame_stmt_pos; // statement position of each declared frame
    bool saw_field = false;
    size_t stmt_counter = 0;

    auto current_frame = [&]() -> const Ring& {
        if (out.frames.empty()) c.fail("a 'vars' statement must come first");
        return out.frames.back();
    };

    for (;;) {
        c.skip_ws_and_comments();
        if (c.eof()) break;
        int line = c.line, col = c.col;
        std::string kw = detail::read_identifier(c);
        if (kw == "field") {
            if (saw_field) throw ParseError("duplicate 'field' statement", line, col);
            if (!records.empty())
                throw ParseError("'field' must precede every 'map'", line, col);
            std::string which = detail::read_identifier(c);
            if (which == "R") out.field = Field::real;
            else if (which == "C") out.field = Field::complex;
            else throw ParseError("field must be R or C", line, col);
            saw_field = true;
            detail::expect_char(c, ';', "after the field statement");
            continue;
        }
        if (kw == "vars") {
            std::vector<std::string> names;
            for (;;) {
                c.skip_ws_and_comments();
                if (c.peek() == ';') break;
                names.push_back(detail::read_identifier(c));
            }
            detail::expect_char(c, ';', "after the variable list");
            if (names.empty()) throw ParseError("empty 'vars' statement", line, col);
            for (size_t i = 0; i < names.size(); ++i)
                for (size_t j = i + 1; j < names.size(); ++j)
                    if (names[i] == names[j])
                        throw ParseError("duplicate variable '" + names[i] + "'", line, col);
            out.frames.push_back(make_ring(names, MonomialOrder::degrevlex_order()));
            out.stmts.push_back({GermFile::StmtKind::vars, out.frames.size() - 1});
            frame_stmt_pos.push_back(stmt_counter++);
            continue;
        }
        if (kw == "map") {
            MapRecord r;
            r.name = detail::read_identifier(c);
            r.line = line;
            r.col = col;
            for (const auto& prev : records)
                if (prev.name == r.name)
                    throw ParseError("duplicate map name '" + r.name + "'", line, col);
            detail::expect_char(c, ':', "after the map name");
            r.src_dim = detail::read_nat(c, "source dimension");
            c.skip_ws_and_comments();
            if (c.peek() != '-') c.fail("expected '->'");
            c.advance();
            detail::expect_char(c, '>', "in '->'");
            r.tgt_dim = detail::read_nat(c, "target dimension");
            detail::expect_char(c, '=', "before the component list");
            const Ring& src = current_frame();
            if (static_cast<long>(src->nvars()) != r.src_dim)
                throw ParseError("map " + r.name + " declares source dimension " +
                                     std::to_string(r.src_dim) + " but the current frame has " +
                                     std::to_string(src->nvars()) + " variables",
                                 line, col);
            r.comps = detail::read_poly_list(c, src);
            detail::expect_char(c, ';', "after the map definition");
            if (r.comps.empty())
                throw ParseError("map " + r.name + " has no components", line, col);
            if (static_cast<long>(r.comps.size()) != r.tgt_dim)
                throw ParseError("map " + r.name + " declares target dimension " +
                                     std::to_string(r.tgt_dim) + " but lists " +
                                     std::to_string(r.comps.size()) + " components",
                                 line, col);
            r.frame = out.frames.size() - 1;
            r.stmt_pos = stmt_counter++;
            out.stmts.push_back({GermFile::StmtKind::map, records.size()});
            records.push_back(std::move(r));
            continue;
        }
        if (kw == "stratum") {
            if (detail::read_identifier(c) != "of") c.fail("expected 'of'");
            FileStratum s;
            s.map_name = detail::read_identifier(c);
            const MapRecord* owner = nullptr;
            for (const auto& r : records)
                if (r.name == s.map_name) owner = &r;
            if (!owner)
                throw ParseError("stratum refers to undeclared map '" + s.map_name + "'", line,
                                 col);
            detail::expect_char(c, ':', "after the map name");
            if (detail::read_identifier(c) != "closure") c.fail("expected 'closure'");
            const Ring& src = out.frames[owner->frame];
            s.closure = detail::read_poly_list(c, src);
            c.skip_ws_and_comments();
            while (c.peek() != ';' && !c.eof()) {
                std::string part = detail::read_identifier(c);
                if (part == "minus") s.minus = detail::read_poly_list(c, src);
                else if (part == "rank") s.rank = static_cast<int>(detail::read_nat(c, "rank"));
                else c.fail("expected 'minus', 'rank', or ';'");
                c.skip_ws_and_comments();
            }
            detail::expect_char(c, ';', "after the stratum");
            out.stmts.push_back({GermFile::StmtKind::stratum, out.strata.size()});
            out.strata.push_back(std::move(s));
            stmt_counter++;
            continue;
        }
        if (kw == "ideal") {
            FileIdeal fi;
            fi.name = detail::read_identifier(c);
            for (const auto& other : out.ideals)
                if (other.name == fi.name)
                    throw ParseError("duplicate ideal name '" + fi.name + "'", line, col);
            detail::expect_char(c, '=', "after the ideal name");
            fi.ideal = Ideal(current_frame(), detail::read_poly_list(c, current_frame()));
            detail::expect_char(c, ';', "after the ideal");
            out.stmts.push_back({GermFile::StmtKind::ideal, out.ideals.size()});
            out.ideals.push_back(std::move(fi));
            stmt_counter++;
            continue;
        }
        throw ParseError("unknown statement '" + kw + "'", line, col);
    }

    out.declared_frames = out.frames.size();

    // resolve targets and build the germs, in declaration order
    for (const auto& r : records) {
        Ring target;
        for (size_t fi = 0; fi < out.declared_frames && !target; ++fi) {
            if (frame_stmt_pos[fi] > r.stmt_pos &&
                static_cast<long>(out.frames[fi]->nvars()) == r.tgt_dim)
                target = out.frames[fi];
        }
        if (!target && static_cast<long>(out.frames[r.frame]->nvars()) == r.tgt_dim)
            target = out.frames[r.frame];
        if (!target) {
            std::vector<std::string> names;
            for (long i = 1; i <= r.tgt_dim; ++i)
                names.push_back(r.name + "_" + std::to_string(i));
            target = make_ring(names, MonomialOrder::degrevlex_order());
            out.frames.push_back(target);
        }
        try {
            out.maps.push_back(
                make_map_germ(r.name, out.frames[r.frame], target, r.comps, out.field));
        } catch (const DomainError& e) {
            throw ParseError(std::string("map ") + r.name + ": " + e.what(), r.line, r.col);
        }
    }
    return out;
}

} // namespace germ
