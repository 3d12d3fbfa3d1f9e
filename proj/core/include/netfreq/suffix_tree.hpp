#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netfreq/text_store.hpp"

namespace netfreq {

/// Stable handle into the node arena. Nodes are never deleted.
enum class NodeId : std::uint32_t {};

inline constexpr NodeId kRoot{0};
inline constexpr NodeId kNoNode{0xFFFFFFFFu};

inline std::uint32_t index_of(NodeId id) { return static_cast<std::uint32_t>(id); }

enum class NodeKind : std::uint8_t { Root, Branching, Leaf };

/// Position of str(node)[1..depth] in the tree; depth(parent(node)) < depth <= depth(node).
/// The empty string is (kRoot, 0).
struct Locus {
    NodeId node = kRoot;
    std::size_t depth = 0;

    friend bool operator==(const Locus&, const Locus&) = default;
};

/// 1-based inclusive label range of a node's incoming edge.
struct EdgeLabel {
    std::size_t start = 0;
    std::size_t end = 0;
};

class OnlineBuilder;

/// Suffix tree (implicit while the text is open, proper once sealed) with
/// suffix links and Weiner links among non-leaf nodes.
///
/// Edge labels are not stored: a node keeps one start position of its path
/// label and, for non-leaves, its string depth. A leaf's depth is derived from
/// the current text length, so all leaf edges grow together on append.
class SuffixTree {
public:
    explicit SuffixTree(std::size_t alphabet_size = kDefaultAlphabetSize);

    const TextStore& text() const { return text_; }
    bool sealed() const { return text_.sealed(); }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t leaf_count() const { return nodes_.size() - inner_.size(); }
    /// Non-root, non-leaf nodes.
    std::size_t branching_count() const { return inner_.size() - 1; }

    NodeKind kind(NodeId u) const;
    bool is_leaf(NodeId u) const { return node(u).inner == kNoInner; }
    bool is_branching(NodeId u) const { return u != kRoot && !is_leaf(u); }

    NodeId parent(NodeId u) const { return node(u).parent; }
    /// kNoNode when u has no child whose edge starts with y (always for leaves).
    NodeId child(NodeId u, Symbol y) const;
    std::vector<std::pair<Symbol, NodeId>> children(NodeId u) const;

    template <typename F>
    void for_each_child(NodeId u, F&& f) const {
        const Node& n = node(u);
        if (n.inner == kNoInner) return;
        const NodeId* row = child_row(n.inner);
        for (std::size_t y = 0; y < width_; ++y) {
            if (row[y] != kNoNode) f(static_cast<Symbol>(y), row[y]);
        }
    }

    /// Throws std::invalid_argument on the root or a leaf.
    NodeId suffix_link(NodeId u) const;
    /// wlink(u, x): the node whose path label is x . str(u), or kNoNode.
    NodeId weiner_link(NodeId u, Symbol x) const;
    std::vector<std::pair<Symbol, NodeId>> weiner_links(NodeId u) const;

    template <typename F>
    void for_each_weiner_link(NodeId u, F&& f) const {
        const Node& n = node(u);
        if (n.inner == kNoInner) return;
        for (NodeId v = inner_[n.inner].wlink_head; v != kNoNode; v = inner_[node(v).inner].wlink_next) {
            f(text_[node(v).start], v);
        }
    }

    /// |str(u)|.
    std::size_t depth(NodeId u) const {
        const Node& n = node(u);
        return n.inner == kNoInner ? text_.size() - n.start : inner_[n.inner].depth;
    }
    /// 1-based start of some occurrence of str(u).
    std::size_t start(NodeId u) const { return node(u).start + 1; }
    EdgeLabel edge_label(NodeId u) const;
    /// First symbol of u's incoming edge label.
    Symbol edge_symbol(NodeId u) const;

    /// Locus of s, or nullopt if s is not a substring. O(|s|) comparisons.
    std::optional<Locus> locate(std::span<const Symbol> s) const;

    /// Number of children of u that are leaves. Throws on a leaf.
    std::size_t leaf_child_count(NodeId u) const;

    /// Leaves in the subtree of u (O(subtree) walk).
    std::size_t subtree_leaf_count(NodeId u) const;

    /// Path label of u (or its first `length` symbols).
    std::vector<Symbol> path_label(NodeId u) const;
    std::vector<Symbol> path_label(Locus locus) const;

    /// One line per node in preorder (children by ascending symbol):
    /// id, kind, parent, edge label "(start,end)", depth, start, slink; tab-separated.
    void dump(std::ostream& out) const;

private:
    friend class OnlineBuilder;

    static constexpr std::uint32_t kNoInner = 0xFFFFFFFFu;

    struct Node {
        NodeId parent = kNoNode;
        std::uint32_t start = 0;      // zero-based
        std::uint32_t inner = kNoInner;
    };

    struct Inner {
        std::uint32_t depth = 0;
        NodeId slink = kNoNode;
        NodeId wlink_head = kNoNode;  // nodes whose suffix link points here
        NodeId wlink_next = kNoNode;  // next node sharing this node's suffix-link target
    };

    const Node& node(NodeId u) const { return nodes_[index_of(u)]; }
    Node& node(NodeId u) { return nodes_[index_of(u)]; }
    const NodeId* child_row(std::uint32_t inner) const { return children_.data() + std::size_t{inner} * width_; }
    NodeId* child_row(std::uint32_t inner) { return children_.data() + std::size_t{inner} * width_; }
    void require_node(NodeId u) const;

    // Mutation, used by OnlineBuilder only.
    void append_symbol(Symbol c) { text_.append(c); }
    void seal_text() { text_.seal(); }
    NodeId add_leaf(NodeId parent, std::size_t start);
    NodeId split_edge(NodeId child, std::size_t depth);
    void set_suffix_link(NodeId from, NodeId to);
    std::size_t edge_start0(NodeId u) const { return node(u).start + depth(parent(u)); }

    TextStore text_;
    std::size_t width_;  // alphabet plus sentinel
    std::vector<Node> nodes_;
    std::vector<Inner> inner_;
    std::vector<NodeId> children_;
};

}  // namespace netfreq
