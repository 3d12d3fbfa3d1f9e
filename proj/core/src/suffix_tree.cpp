#include "netfreq/suffix_tree.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace netfreq {

SuffixTree::SuffixTree(std::size_t alphabet_size) : text_(alphabet_size), width_(alphabet_size + 1) {
    nodes_.push_back(Node{kNoNode, 0, 0});
    inner_.push_back(Inner{});
    children_.assign(width_, kNoNode);
}

void SuffixTree::require_node(NodeId u) const {
    if (index_of(u) >= nodes_.size()) throw std::out_of_range("invalid node id");
}

NodeKind SuffixTree::kind(NodeId u) const {
    require_node(u);
    if (u == kRoot) return NodeKind::Root;
    return is_leaf(u) ? NodeKind::Leaf : NodeKind::Branching;
}

NodeId SuffixTree::child(NodeId u, Symbol y) const {
    const Node& n = node(u);
    if (n.inner == kNoInner || y >= width_) return kNoNode;
    return child_row(n.inner)[y];
}

std::vector<std::pair<Symbol, NodeId>> SuffixTree::children(NodeId u) const {
    require_node(u);
    std::vector<std::pair<Symbol, NodeId>> out;
    for_each_child(u, [&](Symbol y, NodeId v) { out.emplace_back(y, v); });
    return out;
}

NodeId SuffixTree::suffix_link(NodeId u) const {
    require_node(u);
    if (u == kRoot || is_leaf(u)) throw std::invalid_argument("suffix links exist only on branching nodes");
    return inner_[node(u).inner].slink;
}

NodeId SuffixTree::weiner_link(NodeId u, Symbol x) const {
    NodeId found = kNoNode;
    for_each_weiner_link(u, [&](Symbol y, NodeId v) {
        if (y == x) found = v;
    });
    return found;
}

std::vector<std::pair<Symbol, NodeId>> SuffixTree::weiner_links(NodeId u) const {
    require_node(u);
    if (is_leaf(u)) throw std::invalid_argument("Weiner links exist only on branching nodes");
    std::vector<std::pair<Symbol, NodeId>> out;
    for_each_weiner_link(u, [&](Symbol x, NodeId v) { out.emplace_back(x, v); });
    return out;
}

EdgeLabel SuffixTree::edge_label(NodeId u) const {
    require_node(u);
    if (u == kRoot) return {1, 0};
    const std::size_t begin = edge_start0(u);
    return {begin + 1, node(u).start + depth(u)};
}

Symbol SuffixTree::edge_symbol(NodeId u) const { return text_[edge_start0(u)]; }

std::optional<Locus> SuffixTree::locate(std::span<const Symbol> s) const {
    if (s.empty()) throw std::invalid_argument("locate of the empty string");
    NodeId u = kRoot;
    std::size_t matched = 0;
    while (true) {
        const NodeId v = child(u, s[matched]);
        if (v == kNoNode) return std::nullopt;
        const std::size_t begin = node(v).start;
        const std::size_t end = depth(v);
        for (std::size_t d = depth(u); d < end; ++d) {
            if (matched == s.size()) return Locus{v, matched};
            if (text_[begin + d] != s[matched]) return std::nullopt;
            ++matched;
        }
        if (matched == s.size()) return Locus{v, matched};
        u = v;
    }
}

std::size_t SuffixTree::leaf_child_count(NodeId u) const {
    require_node(u);
    if (is_leaf(u)) throw std::invalid_argument("leaf_child_count on a leaf");
    std::size_t count = 0;
    for_each_child(u, [&](Symbol, NodeId v) { count += is_leaf(v) ? 1 : 0; });
    return count;
}

std::size_t SuffixTree::subtree_leaf_count(NodeId u) const {
    require_node(u);
    std::size_t count = 0;
    std::vector<NodeId> stack{u};
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        if (is_leaf(v)) {
            ++count;
            continue;
        }
        for_each_child(v, [&](Symbol, NodeId w) { stack.push_back(w); });
    }
    return count;
}

std::vector<Symbol> SuffixTree::path_label(NodeId u) const { return path_label(Locus{u, depth(u)}); }

std::vector<Symbol> SuffixTree::path_label(Locus locus) const {
    require_node(locus.node);
    const auto all = text_.symbols();
    const std::size_t begin = node(locus.node).start;
    return {all.begin() + begin, all.begin() + begin + locus.depth};
}

NodeId SuffixTree::add_leaf(NodeId parent, std::size_t start) {
    const auto id = NodeId{static_cast<std::uint32_t>(nodes_.size())};
    nodes_.push_back(Node{parent, static_cast<std::uint32_t>(start), kNoInner});
    const Symbol y = text_[start + depth(parent)];
    child_row(node(parent).inner)[y] = id;
    return id;
}

NodeId SuffixTree::split_edge(NodeId v, std::size_t at_depth) {
    const NodeId w = node(v).parent;
    const auto id = NodeId{static_cast<std::uint32_t>(nodes_.size())};
    const auto inner = static_cast<std::uint32_t>(inner_.size());
    const std::uint32_t start = node(v).start;
    const Symbol first = text_[start + depth(w)];
    const Symbol next = text_[start + at_depth];

    nodes_.push_back(Node{w, start, inner});
    inner_.push_back(Inner{static_cast<std::uint32_t>(at_depth), kNoNode, kNoNode, kNoNode});
    children_.resize(children_.size() + width_, kNoNode);

    child_row(node(w).inner)[first] = id;
    child_row(inner)[next] = v;
    node(v).parent = id;
    return id;
}

void SuffixTree::set_suffix_link(NodeId from, NodeId to) {
    Inner& source = inner_[node(from).inner];
    source.slink = to;
    Inner& target = inner_[node(to).inner];
    source.wlink_next = target.wlink_head;
    target.wlink_head = from;
}

void SuffixTree::dump(std::ostream& out) const {
    std::vector<NodeId> stack{kRoot};
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        const EdgeLabel label = edge_label(u);
        const char* kind_name = u == kRoot ? "root" : (is_leaf(u) ? "leaf" : "branch");
        std::string slink = "-";
        if (is_branching(u) && suffix_link(u) != kNoNode) slink = std::to_string(index_of(suffix_link(u)));
        std::string parent_id = u == kRoot ? "-" : std::to_string(index_of(parent(u)));
        out << index_of(u) << '\t' << kind_name << '\t' << parent_id << "\t(" << label.start << ',' << label.end
            << ")\t" << depth(u) << '\t' << start(u) << '\t' << slink << '\n';
        const auto kids = children(u);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(it->second);
    }
}

}  // namespace netfreq
