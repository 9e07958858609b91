#pragma once

// Exact projective linear algebra over GF(q) and GF(q^3): canonical points,
// echelon-basis subspaces, span and meet, point enumeration, extension to the
// cubic field and the Frobenius collineation.
//
// Canonical forms: a point's first nonzero coordinate is scaled to 1; a
// subspace is the reduced row echelon basis of its row space. Equality of
// canonical forms is plain coordinate equality, so the structs double as
// dedup keys.

#include <compare>
#include <optional>

#include "bruckbose/gf.hpp"

namespace bruckbose {

// Which field the coordinates are read over. Subfield codes are valid cubic
// codes, so extension reinterprets the same data.
enum class Level : std::uint8_t { base, cubic };

inline int level_size(const GaloisTower& gf, Level lv) {
    return lv == Level::base ? gf.q() : gf.q3();
}

constexpr std::size_t kMaxWidth = 7;  // PG(6, q) needs 7 coordinates

using Coords = std::array<Fel, kMaxWidth>;

struct PPoint {
    Coords c{};
    std::uint8_t width = 0;
    Level level = Level::base;

    friend bool operator==(const PPoint&, const PPoint&) = default;
    friend auto operator<=>(const PPoint&, const PPoint&) = default;
};

struct Subspace {
    std::array<Coords, kMaxWidth> row{};
    std::uint8_t rank = 0;
    std::uint8_t width = 0;
    Level level = Level::base;

    int proj_dim() const { return int(rank) - 1; }
    bool empty() const { return rank == 0; }

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

namespace detail {

inline void check_same_space(const char* op, Level la, std::uint8_t wa, Level lb,
                             std::uint8_t wb) {
    if (la != lb || wa != wb)
        throw PreconditionError(std::string(op) + ": mixed ambient spaces");
}

// Reduce v against the echelon rows of s (in place). Returns the first column
// where the residual is nonzero, or width if it reduced to zero.
inline int reduce_row(const GaloisTower& gf, const Subspace& s, Coords& v) {
    for (int r = 0; r < s.rank; ++r) {
        int piv = 0;
        while (s.row[r][piv] == 0) ++piv;
        if (v[piv] != 0) {
            Fel f = v[piv];
            for (int j = piv; j < s.width; ++j)
                v[j] = gf.sub(v[j], gf.mul(f, s.row[r][j]));
        }
    }
    for (int j = 0; j < s.width; ++j)
        if (v[j] != 0) return j;
    return s.width;
}

}  // namespace detail

inline Subspace empty_subspace(std::uint8_t width, Level level) {
    Subspace s;
    s.width = width;
    s.level = level;
    return s;
}

// Insert a vector into an echelon basis, keeping reduced row echelon form.
// Returns true when the rank grew.
inline bool ss_insert(const GaloisTower& gf, Subspace& s, Coords v) {
    int lead = detail::reduce_row(gf, s, v);
    if (lead == s.width) return false;
    Fel scale = gf.inv(v[lead]);
    for (int j = lead; j < s.width; ++j) v[j] = gf.mul(v[j], scale);
    for (int r = 0; r < s.rank; ++r) {
        Fel f = s.row[r][lead];
        if (f == 0) continue;
        for (int j = 0; j < s.width; ++j)
            s.row[r][j] = gf.sub(s.row[r][j], gf.mul(f, v[j]));
    }
    int pos = 0;
    while (pos < s.rank) {
        int piv = 0;
        while (s.row[pos][piv] == 0) ++piv;
        if (piv > lead) break;
        ++pos;
    }
    for (int r = s.rank; r > pos; --r) s.row[r] = s.row[r - 1];
    s.row[pos] = v;
    ++s.rank;
    return true;
}

inline PPoint make_point(const GaloisTower& gf, Level level,
                         std::initializer_list<Fel> coords) {
    PPoint p;
    p.width = std::uint8_t(coords.size());
    p.level = level;
    int i = 0;
    for (Fel c : coords) p.c[i++] = c;
    int lead = -1;
    for (int j = 0; j < p.width; ++j)
        if (p.c[j] != 0) {
            lead = j;
            break;
        }
    if (lead < 0) throw PreconditionError("projective point needs a nonzero coordinate");
    Fel scale = gf.inv(p.c[lead]);
    for (int j = lead; j < p.width; ++j) p.c[j] = gf.mul(p.c[j], scale);
    for (int j = 0; j < p.width; ++j)
        if (p.c[j] >= level_size(gf, level))
            throw PreconditionError("coordinate not in the coordinate field");
    return p;
}

inline PPoint canon_point(const GaloisTower& gf, Coords c, std::uint8_t width, Level level) {
    PPoint p;
    p.width = width;
    p.level = level;
    p.c = c;
    int lead = -1;
    for (int j = 0; j < width; ++j)
        if (p.c[j] != 0) {
            lead = j;
            break;
        }
    if (lead < 0) throw PreconditionError("projective point needs a nonzero coordinate");
    Fel scale = gf.inv(p.c[lead]);
    for (int j = lead; j < width; ++j) p.c[j] = gf.mul(p.c[j], scale);
    return p;
}

inline Subspace span_points(const GaloisTower& gf, std::span<const PPoint> pts) {
    if (pts.empty()) throw PreconditionError("span of nothing needs an ambient space");
    Subspace s = empty_subspace(pts[0].width, pts[0].level);
    for (const PPoint& p : pts) {
        detail::check_same_space("span", s.level, s.width, p.level, p.width);
        ss_insert(gf, s, p.c);
    }
    return s;
}

inline Subspace span2(const GaloisTower& gf, const Subspace& a, const Subspace& b) {
    detail::check_same_space("span", a.level, a.width, b.level, b.width);
    Subspace s = a;
    for (int r = 0; r < b.rank; ++r) ss_insert(gf, s, b.row[r]);
    return s;
}

inline Subspace span_with_point(const GaloisTower& gf, const Subspace& a, const PPoint& p) {
    detail::check_same_space("span", a.level, a.width, p.level, p.width);
    Subspace s = a;
    ss_insert(gf, s, p.c);
    return s;
}

inline bool contains(const GaloisTower& gf, const Subspace& s, const PPoint& p) {
    detail::check_same_space("contains", s.level, s.width, p.level, p.width);
    Coords v = p.c;
    return detail::reduce_row(gf, s, v) == s.width;
}

// U <= V as subspaces.
inline bool subspace_le(const GaloisTower& gf, const Subspace& u, const Subspace& v) {
    detail::check_same_space("subspace_le", u.level, u.width, v.level, v.width);
    for (int r = 0; r < u.rank; ++r) {
        Coords w = u.row[r];
        if (detail::reduce_row(gf, v, w) != v.width) return false;
    }
    return true;
}

// Annihilator of the row space: all x with U x = 0, as an echelon basis.
inline Subspace null_space(const GaloisTower& gf, const Subspace& u) {
    bool pivot[kMaxWidth] = {};
    int pivcol[kMaxWidth] = {};
    for (int r = 0; r < u.rank; ++r) {
        int piv = 0;
        while (u.row[r][piv] == 0) ++piv;
        pivot[piv] = true;
        pivcol[r] = piv;
    }
    Subspace out = empty_subspace(u.width, u.level);
    for (int f = 0; f < u.width; ++f) {
        if (pivot[f]) continue;
        Coords v{};
        v[f] = 1;
        for (int r = 0; r < u.rank; ++r) v[pivcol[r]] = gf.neg(u.row[r][f]);
        ss_insert(gf, out, v);
    }
    return out;
}

// Intersection of subspaces, computed through the annihilators. The empty
// subspace (projective dimension -1) is a valid result.
inline Subspace meet(const GaloisTower& gf, const Subspace& a, const Subspace& b) {
    detail::check_same_space("meet", a.level, a.width, b.level, b.width);
    Subspace duals = span2(gf, null_space(gf, a), null_space(gf, b));
    return null_space(gf, duals);
}

// All rational points of a nonempty subspace, in ascending coordinate order.
// "Rational" is read over the subspace's own coordinate field.
inline std::vector<PPoint> points_of(const GaloisTower& gf, const Subspace& s) {
    if (s.empty()) throw PreconditionError("points_of: empty subspace");
    int sz = level_size(gf, s.level);
    std::vector<PPoint> out;
    std::size_t expect = 1;
    for (int i = 0; i < s.rank; ++i) expect *= std::size_t(sz);
    expect = (expect - 1) / std::size_t(sz - 1);
    out.reserve(expect);
    std::array<Fel, kMaxWidth> coeff{};
    for (int leadrow = 0; leadrow < s.rank; ++leadrow) {
        // coeff[leadrow] = 1, earlier rows 0, later rows range over the field
        int tail = s.rank - leadrow - 1;
        std::size_t combos = 1;
        for (int i = 0; i < tail; ++i) combos *= std::size_t(sz);
        for (std::size_t n = 0; n < combos; ++n) {
            std::size_t v = n;
            coeff[leadrow] = 1;
            for (int i = 0; i < tail; ++i) {
                coeff[leadrow + 1 + i] = Fel(v % std::size_t(sz));
                v /= std::size_t(sz);
            }
            PPoint p;
            p.width = s.width;
            p.level = s.level;
            for (int j = 0; j < s.width; ++j) {
                Fel acc = 0;
                for (int r = leadrow; r < s.rank; ++r)
                    acc = gf.add(acc, gf.mul(coeff[r], s.row[r][j]));
                p.c[j] = acc;
            }
            out.push_back(p);  // already canonical: leading pivot coordinate is 1
        }
    }
    std::sort(out.begin(), out.end());
    if (out.size() != expect) throw InternalError("points_of: wrong point count");
    return out;
}

inline PPoint extend_point(const GaloisTower&, PPoint p) {
    if (p.level != Level::base) throw PreconditionError("extend: already over GF(q^3)");
    p.level = Level::cubic;
    return p;
}

inline Subspace extend(const GaloisTower&, Subspace s) {
    if (s.level != Level::base) throw PreconditionError("extend: already over GF(q^3)");
    s.level = Level::cubic;  // subfield codes reinterpret verbatim; RREF is preserved
    return s;
}

inline PPoint conjugate_point(const GaloisTower& gf, const PPoint& p) {
    if (p.level != Level::cubic) throw PreconditionError("conjugate: point over GF(q)");
    Coords c{};
    for (int j = 0; j < p.width; ++j) c[j] = gf.frobenius(p.c[j]);
    return canon_point(gf, c, p.width, Level::cubic);
}

inline Subspace conjugate(const GaloisTower& gf, const Subspace& s) {
    if (s.level != Level::cubic) throw PreconditionError("conjugate: subspace over GF(q)");
    Subspace out = empty_subspace(s.width, Level::cubic);
    for (int r = 0; r < s.rank; ++r) {
        Coords v{};
        for (int j = 0; j < s.width; ++j) v[j] = gf.frobenius(s.row[r][j]);
        ss_insert(gf, out, v);
    }
    return out;
}

inline bool frobenius_fixed(const GaloisTower& gf, const PPoint& p) {
    return conjugate_point(gf, p) == p;
}

inline int rank_of_points(const GaloisTower& gf, std::span<const PPoint> pts) {
    Subspace s = span_points(gf, pts);
    return s.rank;
}

inline bool collinear(const GaloisTower& gf, const PPoint& x, const PPoint& y,
                      const PPoint& z) {
    detail::check_same_space("collinear", x.level, x.width, y.level, y.width);
    detail::check_same_space("collinear", x.level, x.width, z.level, z.width);
    std::array<PPoint, 3> pts{x, y, z};
    return rank_of_points(gf, pts) <= 2;
}

// Solve M s = rhs for square M (n x n); nullopt when singular. Used for frame
// transports and internal-coordinate solves.
inline std::optional<std::array<Fel, kMaxWidth>> solve_square(
    const GaloisTower& gf, std::array<Coords, kMaxWidth> m, Coords rhs, int n) {
    for (int r = 0; r < n; ++r) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (m[i][r] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return std::nullopt;
        std::swap(m[r], m[pr]);
        std::swap(rhs[r], rhs[pr]);
        Fel s = gf.inv(m[r][r]);
        for (int j = r; j < n; ++j) m[r][j] = gf.mul(m[r][j], s);
        rhs[r] = gf.mul(rhs[r], s);
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][r] == 0) continue;
            Fel f = m[i][r];
            for (int j = r; j < n; ++j) m[i][j] = gf.sub(m[i][j], gf.mul(f, m[r][j]));
            rhs[i] = gf.sub(rhs[i], gf.mul(f, rhs[r]));
        }
    }
    std::array<Fel, kMaxWidth> out{};
    for (int i = 0; i < n; ++i) out[i] = rhs[i];
    return out;
}

}  // namespace bruckbose
