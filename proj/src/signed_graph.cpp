#include "sgpi/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace sgpi {

namespace {

void build_csr(NodeId n, std::span<const SignedEdge> edges, int want_sign,
               std::vector<std::int64_t>& off, std::vector<NodeId>& adj) {
    off.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const SignedEdge& e : edges) {
        if (e.sign != want_sign) continue;
        ++off[static_cast<std::size_t>(e.u) + 1];
        ++off[static_cast<std::size_t>(e.v) + 1];
    }
    for (NodeId i = 0; i < n; ++i) off[i + 1] += off[i];
    adj.resize(static_cast<std::size_t>(off[n]));
    std::vector<std::int64_t> cursor(off.begin(), off.end() - 1);
    for (const SignedEdge& e : edges) {
        if (e.sign != want_sign) continue;
        adj[static_cast<std::size_t>(cursor[e.u]++)] = e.v;
        adj[static_cast<std::size_t>(cursor[e.v]++)] = e.u;
    }
    for (NodeId i = 0; i < n; ++i)
        std::sort(adj.begin() + off[i], adj.begin() + off[i + 1]);
}

std::string pair_str(NodeId u, NodeId v) {
    return "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
}

}  // namespace

SignedGraph::SignedGraph(NodeId n, std::span<const SignedEdge> edges) : n_(n) {
    if (n < 2) throw std::invalid_argument("SignedGraph: need n >= 2");
    for (const SignedEdge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw EdgeListError("node id out of range: " +
                                pair_str(e.u, e.v));
        if (e.u == e.v)
            throw EdgeListError("self-loop at node " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("edge sign must be +1 or -1");
    }
    build_csr(n, edges, +1, pos_off_, pos_adj_);
    build_csr(n, edges, -1, neg_off_, neg_adj_);

    for (NodeId i = 0; i < n; ++i) {
        auto pos = pos_neighbors(i);
        auto neg = neg_neighbors(i);
        if (std::adjacent_find(pos.begin(), pos.end()) != pos.end() ||
            std::adjacent_find(neg.begin(), neg.end()) != neg.end())
            throw EdgeListError("duplicate edge at node " + std::to_string(i));
        // sorted disjointness walk
        std::size_t a = 0, b = 0;
        while (a < pos.size() && b < neg.size()) {
            if (pos[a] == neg[b])
                throw EdgeListError("conflicting sign for pair " +
                                    pair_str(i, pos[a]));
            if (pos[a] < neg[b])
                ++a;
            else
                ++b;
        }
    }
}

void SignedGraph::audit() const {
    auto check_side = [&](const std::vector<std::int64_t>& off,
                          const std::vector<NodeId>& adj, const char* side) {
        for (NodeId i = 0; i < n_; ++i) {
            std::span<const NodeId> nb{adj.data() + off[i],
                                       adj.data() + off[i + 1]};
            for (std::size_t k = 0; k < nb.size(); ++k) {
                const NodeId j = nb[k];
                if (j < 0 || j >= n_)
                    throw EdgeListError(std::string("audit: id out of range (") +
                                        side + ")");
                if (j == i)
                    throw EdgeListError(std::string("audit: self-loop (") +
                                        side + ") at node " + std::to_string(i));
                if (k > 0 && nb[k - 1] >= j)
                    throw EdgeListError(std::string("audit: list not sorted "
                                                    "unique (") +
                                        side + ") at node " + std::to_string(i));
                std::span<const NodeId> back{adj.data() + off[j],
                                             adj.data() + off[j + 1]};
                if (!std::binary_search(back.begin(), back.end(), i))
                    throw EdgeListError(std::string("audit: asymmetric (") +
                                        side + ") pair " + pair_str(i, j));
            }
        }
    };
    check_side(pos_off_, pos_adj_, "positive");
    check_side(neg_off_, neg_adj_, "negative");
    for (NodeId i = 0; i < n_; ++i) {
        auto pos = pos_neighbors(i);
        auto neg = neg_neighbors(i);
        std::size_t a = 0, b = 0;
        while (a < pos.size() && b < neg.size()) {
            if (pos[a] == neg[b])
                throw EdgeListError("audit: conflicting sign for pair " +
                                    pair_str(i, pos[a]));
            if (pos[a] < neg[b])
                ++a;
            else
                ++b;
        }
    }
}

namespace {

struct ParsedLine {
    long long u, v, w;
};

bool parse_int(std::string_view tok, long long& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

// Splits on spaces/tabs; expects exactly three integer tokens.
bool parse_line(std::string_view line, ParsedLine& out) {
    long long vals[3];
    int count = 0;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
            ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t')
            ++end;
        if (count == 3) return false;
        if (!parse_int(line.substr(pos, end - pos), vals[count])) return false;
        ++count;
        pos = end;
    }
    if (count != 3) return false;
    out = {vals[0], vals[1], vals[2]};
    return true;
}

}  // namespace

SignedGraph parse_edge_list(std::istream& in, bool one_based) {
    std::vector<SignedEdge> edges;
    std::unordered_map<std::uint64_t, int> seen;
    long long max_id = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view{line};
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        const std::size_t first = view.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        if (view[first] == '%' || view[first] == '#') continue;

        const std::string where = "line " + std::to_string(line_no) + ": ";
        ParsedLine p{};
        if (!parse_line(view, p))
            throw EdgeListError(where + "malformed token in '" + line + "'");
        if (p.w != 1 && p.w != -1)
            throw EdgeListError(where + "edge weight must be 1 or -1, got " +
                                std::to_string(p.w));
        if (one_based) {
            if (p.u < 1 || p.v < 1)
                throw EdgeListError(where +
                                    "node ids must be >= 1 in 1-based input");
            --p.u;
            --p.v;
        }
        if (p.u < 0 || p.v < 0)
            throw EdgeListError(where + "negative node id");
        if (p.u == p.v)
            throw EdgeListError(where + "self-loop at node " +
                                std::to_string(p.u));
        if (p.u > 0x7fffffffLL || p.v > 0x7fffffffLL)
            throw EdgeListError(where + "node id too large");

        const NodeId u = static_cast<NodeId>(std::min(p.u, p.v));
        const NodeId v = static_cast<NodeId>(std::max(p.u, p.v));
        const std::uint64_t key =
            (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        auto [it, inserted] = seen.emplace(key, static_cast<int>(p.w));
        if (!inserted) {
            if (it->second == p.w)
                throw EdgeListError(where + "duplicate edge " + pair_str(u, v));
            throw EdgeListError(where + "conflicting sign for pair " +
                                pair_str(u, v));
        }
        edges.push_back({u, v, static_cast<int>(p.w)});
        max_id = std::max(max_id, std::max(p.u, p.v));
    }
    if (max_id < 1)
        throw EdgeListError("edge list is empty; node count is undefined");
    return SignedGraph(static_cast<NodeId>(max_id + 1), edges);
}

SignedGraph parse_edge_list(const std::string& text, bool one_based) {
    std::istringstream in{text};
    return parse_edge_list(in, one_based);
}

SignedGraph load_edge_list(const std::string& path, bool one_based) {
    std::ifstream in{path};
    if (!in) throw EdgeListError("cannot open file: " + path);
    return parse_edge_list(in, one_based);
}

void serialize_edge_list(const SignedGraph& g, std::ostream& out,
                         bool one_based) {
    const long long shift = one_based ? 1 : 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        auto pos = g.pos_neighbors(i);
        auto neg = g.neg_neighbors(i);
        auto p = std::lower_bound(pos.begin(), pos.end(), i + 1);
        auto q = std::lower_bound(neg.begin(), neg.end(), i + 1);
        while (p != pos.end() || q != neg.end()) {
            const bool take_pos =
                q == neg.end() || (p != pos.end() && *p < *q);
            const NodeId j = take_pos ? *p++ : *q++;
            out << (i + shift) << ' ' << (j + shift) << ' '
                << (take_pos ? 1 : -1) << '\n';
        }
    }
}

std::string serialize_edge_list(const SignedGraph& g, bool one_based) {
    std::ostringstream out;
    serialize_edge_list(g, out, one_based);
    return out.str();
}

namespace {

// Each triangle a < b < c is found once, from edge (a, b) looking for
// common neighbors above b.
std::int64_t count_triangles(const SignedGraph& g, bool positive) {
    std::int64_t total = 0;
    const NodeId n = g.node_count();
    for (NodeId i = 0; i < n; ++i) {
        auto nbi = positive ? g.pos_neighbors(i) : g.neg_neighbors(i);
        for (const NodeId j : nbi) {
            if (j <= i) continue;
            auto nbj = positive ? g.pos_neighbors(j) : g.neg_neighbors(j);
            auto a = std::upper_bound(nbi.begin(), nbi.end(), j);
            auto b = std::upper_bound(nbj.begin(), nbj.end(), j);
            while (a != nbi.end() && b != nbj.end()) {
                if (*a == *b) {
                    ++total;
                    ++a;
                    ++b;
                } else if (*a < *b) {
                    ++a;
                } else {
                    ++b;
                }
            }
        }
    }
    return total;
}

}  // namespace

GraphMoments count_moments(const SignedGraph& g) {
    GraphMoments m;
    m.n_pos = g.pos_edge_count();
    m.n_neg = g.neg_edge_count();
    m.t_pos = count_triangles(g, true);
    m.t_neg = count_triangles(g, false);
    return m;
}

std::pair<std::vector<double>, std::vector<double>> apply_signed(
    const SignedGraph& g, std::span<const double> v) {
    const NodeId n = g.node_count();
    if (std::ssize(v) != n)
        throw std::invalid_argument("apply_signed: vector length " +
                                    std::to_string(v.size()) +
                                    " does not match n = " + std::to_string(n));
    std::vector<double> pos(static_cast<std::size_t>(n), 0.0);
    std::vector<double> neg(static_cast<std::size_t>(n), 0.0);
    for (NodeId i = 0; i < n; ++i) {
        double s = 0.0;
        for (const NodeId j : g.pos_neighbors(i)) s += v[j];
        pos[i] = s;
        double t = 0.0;
        for (const NodeId j : g.neg_neighbors(i)) t += v[j];
        neg[i] = t;
    }
    return {std::move(pos), std::move(neg)};
}

}  // namespace sgpi
