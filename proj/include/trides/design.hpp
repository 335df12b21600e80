#pragma once

// Design data model and the exhaustive 2-design verifier. Designs are simple
// (no repeated blocks), blocks are sorted 3-subsets kept in lexicographic
// order, and only non-trivial point counts (v > 3) are accepted.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trides/errors.hpp"
#include "trides/geometry.hpp"

namespace trides {

struct design {
    std::uint32_t v = 0;
    std::vector<block_t> blocks;
    std::string provenance;

    // Canonicalizes (sorts within blocks and the block list) and validates.
    static design make(std::uint32_t v, std::vector<block_t> blocks, std::string provenance = {}) {
        design d;
        d.v = v;
        d.blocks = std::move(blocks);
        d.provenance = std::move(provenance);
        for (auto& b : d.blocks) std::sort(b.begin(), b.end());
        std::sort(d.blocks.begin(), d.blocks.end());
        d.validate();
        return d;
    }

    void validate() const {
        if (v <= 3) throw domain_error("non-trivial triple design needs v > 3");
        const block_t* prev = nullptr;
        for (const auto& b : blocks) {
            if (!(b[0] < b[1] && b[1] < b[2]))
                throw malformed_block("block is not a strictly ascending triple");
            if (b[2] >= v) throw malformed_block("block index out of range");
            if (prev) {
                if (*prev == b) throw malformed_block("duplicate block");
                if (!(*prev < b)) throw malformed_block("blocks not in lexicographic order");
            }
            prev = &b;
        }
    }
};

struct pair_witness {
    pt x = 0, y = 0;
    std::uint64_t count = 0;      // coverage of (x, y)
    std::uint64_t reference = 0;  // coverage of the first point pair
};

struct design_params {
    std::uint64_t v = 0, b = 0, r = 0, lambda = 0;
    bool is_2design = false;
    std::optional<pair_witness> witness;
};

// Counts the coverage of all v(v-1)/2 unordered pairs. If every pair lies in
// the same number of blocks the design is a 2-design and (b, r, lambda) are
// reported; otherwise lambda = r = 0 and a deviating pair is the witness.
inline design_params verify_2design(const design& D) {
    D.validate();
    design_params out;
    out.v = D.v;
    out.b = D.blocks.size();
    if (D.blocks.empty()) return out;

    const std::uint64_t v = D.v;
    std::vector<std::uint64_t> row(v, 0);  // row[i] = offset of pair (i, i+1)
    for (std::uint64_t i = 1; i < v; ++i) row[i] = row[i - 1] + (v - i);
    auto pair_at = [&](pt i, pt j) { return row[i] + (j - i - 1); };

    std::vector<std::uint32_t> cnt(v * (v - 1) / 2, 0);
    std::vector<std::uint64_t> per_point(v, 0);
    for (const auto& b : D.blocks) {
        ++cnt[pair_at(b[0], b[1])];
        ++cnt[pair_at(b[0], b[2])];
        ++cnt[pair_at(b[1], b[2])];
        ++per_point[b[0]];
        ++per_point[b[1]];
        ++per_point[b[2]];
    }

    const std::uint32_t ref = cnt[0];
    for (pt i = 0; i < v; ++i) {
        for (pt j = i + 1; j < v; ++j) {
            std::uint32_t c = cnt[pair_at(i, j)];
            if (c != ref) {
                out.witness = pair_witness{i, j, c, ref};
                return out;
            }
        }
    }
    out.is_2design = true;
    out.lambda = ref;
    out.r = per_point[0];
    for (pt i = 1; i < v; ++i)
        if (per_point[i] != out.r) throw error("constant pair coverage with non-constant replication");
    return out;
}

// Parameter admissibility: v = 1,3 (mod 6) and lambda divides v - 6.
inline bool admissible(std::int64_t v, std::int64_t lambda) {
    if (v <= 3) throw domain_error("admissible: v must exceed 3");
    if (lambda < 1) throw domain_error("admissible: lambda must be >= 1");
    const auto m6 = v % 6;
    return (m6 == 1 || m6 == 3) && (v - 6) % lambda == 0;
}

}  // namespace trides
