#pragma once

#include "mbr/tree.hpp"

#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mbr {

struct Instance {
    Tree tree;
    Weight rho = 0;
    /// Every number in the file was multiplied by this to make it integral.
    Weight scale = 1;
};

namespace detail {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

inline std::int64_t parse_int(std::string_view s, std::size_t line) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw Error(Errc::Parse, "line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    }
    return v;
}

inline Rational parse_rational(std::string_view s, std::size_t line) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return {parse_int(s, line), 1};
    Rational r{parse_int(s.substr(0, slash), line), parse_int(s.substr(slash + 1), line)};
    if (r.den <= 0) throw Error(Errc::Parse, "line " + std::to_string(line) + ": bad denominator");
    auto g = std::gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Parse, "value overflows after scaling");
    return r;
}

} // namespace detail

/// Reads "n rho" followed by n-1 lines "u v lo hi". '#' starts a comment.
/// Numbers may be written p/q; all values are then scaled by the least
/// common denominator.
inline Instance read_instance(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> lines;
    std::string text;
    for (std::size_t no = 1; std::getline(in, text); ++no) {
        if (auto h = text.find('#'); h != std::string::npos) text.resize(h);
        std::istringstream ss(text);
        std::vector<std::string> tok;
        for (std::string w; ss >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        rows.push_back(std::move(tok));
        lines.push_back(no);
    }
    if (rows.empty()) throw Error(Errc::Parse, "empty input");
    if (rows[0].size() != 2) throw Error(Errc::Parse, "line " + std::to_string(lines[0]) + ": expected 'n rho'");
    auto n = detail::parse_int(rows[0][0], lines[0]);
    if (n < 1) throw Error(Errc::Parse, "n must be at least 1");
    if (rows.size() != static_cast<std::size_t>(n)) {
        throw Error(Errc::Parse, "expected " + std::to_string(n - 1) + " edge lines, found " +
                                     std::to_string(rows.size() - 1));
    }
    std::vector<detail::Rational> vals;
    vals.push_back(detail::parse_rational(rows[0][1], lines[0]));
    std::vector<std::pair<Vertex, Vertex>> ends;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 4) throw Error(Errc::Parse, "line " + std::to_string(lines[i]) + ": expected 'u v lo hi'");
        auto u = detail::parse_int(rows[i][0], lines[i]);
        auto v = detail::parse_int(rows[i][1], lines[i]);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw Error(Errc::UnknownVertex, "line " + std::to_string(lines[i]) + ": vertex out of range");
        }
        ends.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        vals.push_back(detail::parse_rational(rows[i][2], lines[i]));
        vals.push_back(detail::parse_rational(rows[i][3], lines[i]));
    }
    std::int64_t scale = 1;
    for (const auto& r : vals) {
        scale = detail::checked_mul(scale / std::gcd(scale, r.den), r.den);
    }
    auto scaled = [&](const detail::Rational& r) { return detail::checked_mul(r.num, scale / r.den); };
    Instance inst;
    inst.scale = scale;
    inst.rho = scaled(vals[0]);
    if (inst.rho < 0) throw Error(Errc::Parse, "rho must be nonnegative");
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        edges.push_back({ends[i].first, ends[i].second, scaled(vals[1 + 2 * i]), scaled(vals[2 + 2 * i])});
    }
    inst.tree = Tree::build(static_cast<std::size_t>(n), edges);
    return inst;
}

inline Instance read_instance(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

inline void write_instance(std::ostream& out, const Tree& t, Weight rho) {
    out << t.size() << ' ' << rho << '\n';
    for (const auto& e : t.edges()) out << e.u << ' ' << e.v << ' ' << e.w.lo << ' ' << e.w.hi << '\n';
}

} // namespace mbr
