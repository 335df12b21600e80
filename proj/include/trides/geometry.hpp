#pragma once

// Point/line incidence of PG(h-1,q) and AG(h,3), plus Gaussian binomial
// coefficients. Projective points are normalized coordinate vectors (first
// nonzero coordinate equal to 1) listed in lexicographic order, coordinates
// compared by field-element index. Affine points over GF(3) are identified
// with their base-3 packed coordinate vectors, coordinate 0 most significant,
// so point ids run through all vectors in lexicographic order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trides/errors.hpp"
#include "trides/gf.hpp"
#include "trides/util.hpp"

namespace trides {

using pt = std::uint32_t;
using block_t = std::array<pt, 3>;

// Number of k-dimensional subspaces of an n-dimensional space over GF(q):
// prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1), evaluated exactly.
inline std::uint64_t gaussian(std::int64_t n, std::int64_t k, std::uint64_t q) {
    if (q < 2) throw domain_error("gaussian: q must be >= 2");
    if (k < 0 || k > n) throw domain_error("gaussian: need 0 <= k <= n");
    std::uint64_t g = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        unsigned __int128 wide = static_cast<unsigned __int128>(g) *
                                 (checked_pow(q, static_cast<std::uint64_t>(n - i)) - 1);
        std::uint64_t den = checked_pow(q, static_cast<std::uint64_t>(i + 1)) - 1;
        wide /= den;  // every partial product is itself a Gaussian binomial
        if (wide > ~std::uint64_t{0}) throw size_exceeded("gaussian binomial overflows u64");
        g = static_cast<std::uint64_t>(wide);
    }
    return g;
}

struct proj_geometry {
    std::uint64_t q = 0;
    std::uint32_t h = 0;
    field_table gf;
    std::vector<std::vector<elem>> points;        // normalized, lex sorted
    std::vector<std::vector<pt>> lines;           // sorted point-index sets, lex sorted
    std::vector<std::vector<std::uint32_t>> point_lines;  // incident line ids, ascending

    std::uint64_t v() const { return points.size(); }

    // Point id of the normalized representative of a nonzero vector.
    pt index_of(std::vector<elem> vec) const {
        std::size_t lead = vec.size();
        for (std::size_t i = 0; i < vec.size(); ++i)
            if (vec[i]) { lead = i; break; }
        if (lead == vec.size()) throw index_error("zero vector has no projective point");
        if (vec[lead] != gf.one()) {
            elem scale = gf.inv(vec[lead]);
            for (auto& c : vec) c = gf.mul(scale, c);
        }
        std::uint64_t packed = 0;
        for (elem c : vec) packed = packed * q + c;
        return rep_index[packed];
    }

    std::uint32_t line_through(pt x, pt y) const {
        check_point(x);
        check_point(y);
        if (x == y) throw index_error("line_through needs two distinct points");
        const auto& lx = point_lines[x];
        const auto& ly = point_lines[y];
        std::size_t i = 0, j = 0;
        while (i < lx.size() && j < ly.size()) {
            if (lx[i] == ly[j]) return lx[i];
            if (lx[i] < ly[j]) ++i; else ++j;
        }
        throw error("incidence tables broken: no line through a point pair");
    }

    bool collinear(pt x, pt y, pt z) const {
        check_point(z);
        if (x == z || y == z) throw index_error("collinear needs three distinct points");
        const auto& ln = lines[line_through(x, y)];
        return std::binary_search(ln.begin(), ln.end(), z);
    }

    std::vector<pt> rep_index;  // packed normalized vector -> point id

private:
    void check_point(pt x) const {
        if (x >= points.size()) throw index_error("point index out of range");
    }
};

inline proj_geometry build_pg(std::uint64_t q, std::uint32_t h) {
    if (h < 2) throw domain_error("PG(h-1,q) needs h >= 2");
    auto pp = prime_power_decomp(q);
    if (!pp) throw not_prime_power("q = " + std::to_string(q) + " is not a prime power");
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        space *= q;
        if (space > max_field_size) throw size_exceeded("q^h exceeds the 2^20 cap");
    }

    proj_geometry g;
    g.q = q;
    g.h = h;
    g.gf = build_field(static_cast<std::uint32_t>(pp->first), pp->second);

    // Normalized points in packed ascending order == lex order.
    g.rep_index.assign(space, 0xFFFFFFFFu);
    for (std::uint64_t packed = 1; packed < space; ++packed) {
        std::uint64_t t = packed;
        std::vector<elem> vec(h);
        for (std::uint32_t i = h; i > 0; --i) {
            vec[i - 1] = static_cast<elem>(t % q);
            t /= q;
        }
        std::uint32_t lead = 0;
        while (!vec[lead]) ++lead;
        if (vec[lead] != g.gf.one()) continue;
        g.rep_index[packed] = static_cast<pt>(g.points.size());
        g.points.push_back(std::move(vec));
    }

    const pt v = static_cast<pt>(g.points.size());
    g.point_lines.assign(v, {});
    std::vector<pt> line;
    for (pt i = 0; i < v; ++i) {
        for (pt j = i + 1; j < v; ++j) {
            // span{P_i, P_j}: P_i plus P_j + t*P_i over all scalars t.
            // Emit the line only from its two smallest points, so every
            // line is produced exactly once and the list comes out sorted.
            line.clear();
            line.push_back(i);
            std::vector<elem> w(h);
            bool minimal = true;
            for (elem t = 0; t < q; ++t) {
                for (std::uint32_t c = 0; c < h; ++c)
                    w[c] = g.gf.add(g.points[j][c], g.gf.mul(t, g.points[i][c]));
                pt id = g.index_of(w);
                if (id < j) { minimal = false; break; }
                line.push_back(id);
            }
            if (!minimal) continue;
            std::sort(line.begin(), line.end());
            std::uint32_t lid = static_cast<std::uint32_t>(g.lines.size());
            for (pt x : line) g.point_lines[x].push_back(lid);
            g.lines.push_back(line);
        }
    }
    return g;
}

struct aff_geometry {
    std::uint32_t h = 0;
    std::uint64_t v = 0;  // 3^h
    std::vector<block_t> lines;

    std::vector<std::uint32_t> coords(pt id) const {
        std::vector<std::uint32_t> out(h);
        for (std::uint32_t i = h; i > 0; --i) {
            out[i - 1] = id % 3;
            id /= 3;
        }
        return out;
    }

    pt point_of(const std::vector<std::uint32_t>& c) const {
        if (c.size() != h) throw index_error("coordinate vector has wrong length");
        std::uint64_t acc = 0;
        for (auto x : c) {
            if (x > 2) throw index_error("coordinate out of range");
            acc = acc * 3 + x;
        }
        return static_cast<pt>(acc);
    }
};

inline aff_geometry build_ag3(std::uint32_t h) {
    if (h < 2) throw domain_error("AG(h,3) needs h >= 2 for a non-trivial design");
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        v *= 3;
        if (v > max_field_size) throw size_exceeded("3^h exceeds the 2^20 cap");
    }
    aff_geometry g;
    g.h = h;
    g.v = v;

    // Third point of the line through x and y is -(x+y), digitwise mod 3.
    std::vector<std::uint64_t> pow3(h);
    pow3[h - 1] = 1;
    for (std::uint32_t i = h - 1; i > 0; --i) pow3[i - 1] = pow3[i] * 3;
    for (pt i = 0; i + 1 < v; ++i) {
        for (pt j = i + 1; j < v; ++j) {
            std::uint64_t z = 0;
            for (std::uint32_t c = 0; c < h; ++c) {
                std::uint32_t a = (i / pow3[c]) % 3, b = (j / pow3[c]) % 3;
                z += ((6 - a - b) % 3) * pow3[c];
            }
            if (z > j) g.lines.push_back({i, j, static_cast<pt>(z)});
        }
    }
    return g;
}

}  // namespace trides
