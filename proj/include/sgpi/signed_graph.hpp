#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgpi {

using NodeId = std::int32_t;

// Malformed or inconsistent edge data: parse failures, self-loops,
// duplicate edges, conflicting signs.
class EdgeListError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SignedEdge {
    NodeId u;
    NodeId v;
    int sign;  // +1 or -1
};

/// Immutable sparse symmetric signed adjacency, split into the positive and
/// negative subgraphs. Neighbor lists are held in compressed sorted form
/// (CSR offsets + flat id array) per sign. No self-loops, no pair carries
/// both signs, lists are sorted ascending without duplicates. Safe for
/// concurrent shared reads once constructed.
class SignedGraph {
public:
    /// Builds from an undirected edge list; each unordered pair may appear
    /// at most once. Throws EdgeListError on duplicate edges, conflicting
    /// signs, self-loops or out-of-range ids; std::invalid_argument for
    /// n < 2 or a sign outside {-1, +1}.
    SignedGraph(NodeId n, std::span<const SignedEdge> edges);

    NodeId node_count() const noexcept { return n_; }

    std::span<const NodeId> pos_neighbors(NodeId i) const {
        return {pos_adj_.data() + pos_off_[i],
                pos_adj_.data() + pos_off_[i + 1]};
    }
    std::span<const NodeId> neg_neighbors(NodeId i) const {
        return {neg_adj_.data() + neg_off_[i],
                neg_adj_.data() + neg_off_[i + 1]};
    }

    std::int64_t pos_edge_count() const noexcept {
        return static_cast<std::int64_t>(pos_adj_.size()) / 2;
    }
    std::int64_t neg_edge_count() const noexcept {
        return static_cast<std::int64_t>(neg_adj_.size()) / 2;
    }

    /// Re-checks every structural invariant: sorted unique lists, symmetry,
    /// sign disjointness, no self-loops. Throws EdgeListError on the first
    /// violation. Intended for tests and ingest sanity checks.
    void audit() const;

    bool operator==(const SignedGraph&) const = default;

private:
    NodeId n_ = 0;
    std::vector<std::int64_t> pos_off_, neg_off_;
    std::vector<NodeId> pos_adj_, neg_adj_;
};

/// Edge and triangle counts of the two subgraphs: n_pos = sum_{i<j} A+_ij,
/// t_pos = tr((A+)^3)/6, and likewise for the negative part.
struct GraphMoments {
    std::int64_t n_pos = 0;
    std::int64_t n_neg = 0;
    std::int64_t t_pos = 0;
    std::int64_t t_neg = 0;
};

/// Parses "u v w" edge-list text (KONECT style). Lines starting with '%' or
/// '#' and blank lines are skipped; w must be 1 or -1; each undirected edge
/// may appear at most once in either orientation. Node count is
/// 1 + max node id after the optional 1-based shift.
SignedGraph parse_edge_list(std::istream& in, bool one_based = false);
SignedGraph parse_edge_list(const std::string& text, bool one_based = false);
SignedGraph load_edge_list(const std::string& path, bool one_based = false);

/// Emits edges as "u v w" lines with u < v, sorted lexicographically;
/// round-trips through parse_edge_list.
void serialize_edge_list(const SignedGraph& g, std::ostream& out,
                         bool one_based = false);
std::string serialize_edge_list(const SignedGraph& g, bool one_based = false);

/// Triangle counts use per-edge sorted-neighbor intersection; nothing dense
/// is ever materialized.
GraphMoments count_moments(const SignedGraph& g);

/// (A+ v, A- v) as exact neighbor-list sums. Throws std::invalid_argument
/// on dimension mismatch.
std::pair<std::vector<double>, std::vector<double>> apply_signed(
    const SignedGraph& g, std::span<const double> v);

}  // namespace sgpi
