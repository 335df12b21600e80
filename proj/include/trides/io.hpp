#pragma once

// Canonical text formats for designs and groups, plus a content digest.
//
//   design v=<int> k=3
//   provenance=<token>            (optional)
//   <a> <b> <c>                   one block per line, ascending, lex order
//
//   group degree=<int> label=<token>
//   <img0> <img1> ... <img(v-1)>  one generator per line
//
// Writers emit byte-identical output for equal values; readers are strict
// and report 1-based line numbers on failure.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trides/design.hpp"
#include "trides/errors.hpp"
#include "trides/perm.hpp"

namespace trides {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace detail {

struct line_reader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    bool next(std::string& out) {
        if (pos >= text.size()) return false;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        out.assign(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        return true;
    }
};

inline std::uint64_t parse_u64(const std::string& tok, int line, const char* what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error(line, std::string("expected a non-negative integer for ") + what);
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw parse_error(line, std::string("integer out of range for ") + what);
    }
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

inline std::string design_to_text(const design& D) {
    std::string out = "design v=" + std::to_string(D.v) + " k=3\n";
    if (!D.provenance.empty()) out += "provenance=" + D.provenance + "\n";
    for (const auto& b : D.blocks)
        out += std::to_string(b[0]) + " " + std::to_string(b[1]) + " " + std::to_string(b[2]) + "\n";
    return out;
}

inline design design_from_text(std::string_view text) {
    detail::line_reader rd{text};
    std::string line;
    if (!rd.next(line)) throw parse_error(1, "empty design file");
    auto head = detail::split_ws(line);
    if (head.size() != 3 || head[0] != "design" || head[1].rfind("v=", 0) != 0 || head[2] != "k=3")
        throw parse_error(rd.line_no, "expected header 'design v=<int> k=3'");
    std::uint64_t v = detail::parse_u64(head[1].substr(2), rd.line_no, "v");
    if (v <= 3) throw parse_error(rd.line_no, "v must exceed 3");
    if (v > 1 + (std::uint64_t{1} << 21)) throw parse_error(rd.line_no, "v too large");

    std::string provenance;
    std::vector<block_t> blocks;
    bool first_body = true;
    block_t prev{};
    while (rd.next(line)) {
        if (line.empty()) throw parse_error(rd.line_no, "blank line in design file");
        if (first_body && line.rfind("provenance=", 0) == 0) {
            provenance = line.substr(11);
            first_body = false;
            continue;
        }
        first_body = false;
        auto toks = detail::split_ws(line);
        if (toks.size() != 3) throw parse_error(rd.line_no, "block line needs exactly 3 indices");
        block_t b;
        for (int i = 0; i < 3; ++i) {
            std::uint64_t x = detail::parse_u64(toks[i], rd.line_no, "block index");
            if (x >= v) throw parse_error(rd.line_no, "block index out of range");
            b[i] = static_cast<pt>(x);
        }
        if (!(b[0] < b[1] && b[1] < b[2]))
            throw parse_error(rd.line_no, "block indices must be strictly ascending");
        if (!blocks.empty()) {
            if (b == prev) throw parse_error(rd.line_no, "duplicate block");
            if (b < prev) throw parse_error(rd.line_no, "blocks not in lexicographic order");
        }
        blocks.push_back(b);
        prev = b;
    }
    try {
        return design::make(static_cast<std::uint32_t>(v), std::move(blocks), std::move(provenance));
    } catch (const error& e) {
        throw parse_error(1, e.what());
    }
}

inline std::string group_to_text(const perm_group& G) {
    std::string out = "group degree=" + std::to_string(G.degree) +
                      " label=" + (G.label.empty() ? "g" : G.label) + "\n";
    for (const auto& g : G.gens) {
        for (std::uint32_t i = 0; i < G.degree; ++i) {
            if (i) out += ' ';
            out += std::to_string(g[i]);
        }
        out += '\n';
    }
    return out;
}

inline perm_group group_from_text(std::string_view text) {
    detail::line_reader rd{text};
    std::string line;
    if (!rd.next(line)) throw parse_error(1, "empty group file");
    auto head = detail::split_ws(line);
    if (head.size() != 3 || head[0] != "group" || head[1].rfind("degree=", 0) != 0 ||
        head[2].rfind("label=", 0) != 0)
        throw parse_error(rd.line_no, "expected header 'group degree=<int> label=<token>'");
    std::uint64_t degree = detail::parse_u64(head[1].substr(7), rd.line_no, "degree");
    if (degree == 0) throw parse_error(rd.line_no, "degree must be positive");
    if (degree > (std::uint64_t{1} << 21)) throw parse_error(rd.line_no, "degree too large");
    std::string label = head[2].substr(6);

    std::vector<std::vector<std::uint32_t>> gens;
    while (rd.next(line)) {
        if (line.empty()) throw parse_error(rd.line_no, "blank line in group file");
        auto toks = detail::split_ws(line);
        if (toks.size() != degree)
            throw parse_error(rd.line_no, "generator line needs exactly " + std::to_string(degree) + " images");
        std::vector<std::uint32_t> g(degree);
        std::vector<char> seen(degree, 0);
        for (std::uint64_t i = 0; i < degree; ++i) {
            std::uint64_t x = detail::parse_u64(toks[i], rd.line_no, "image");
            if (x >= degree || seen[x])
                throw parse_error(rd.line_no, "generator is not a permutation of 0..degree-1");
            seen[x] = 1;
            g[i] = static_cast<std::uint32_t>(x);
        }
        gens.push_back(std::move(g));
    }
    if (gens.empty()) throw parse_error(rd.line_no + 1, "group file has no generators");
    return perm_group::make(static_cast<std::uint32_t>(degree), std::move(gens), std::move(label));
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error("cannot write '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw error("short write to '" + path + "'");
}

inline design read_design_file(const std::string& path) { return design_from_text(read_text_file(path)); }
inline perm_group read_group_file(const std::string& path) { return group_from_text(read_text_file(path)); }

}  // namespace trides
