#pragma once

#include <variant>

#include "netfreq/suffix_tree.hpp"

namespace netfreq {

/// Edge (parent -> old_child) was split by the new branching node.
struct EdgeSplit {
    NodeId old_child;
    NodeId new_node;
};

struct NewLeaf {
    NodeId leaf;
    NodeId parent;
};

/// The active point moved during the phase (emitted once, at phase end).
struct ActiveMoved {
    Locus from;
    Locus to;
};

struct SuffixLinkSet {
    NodeId from;
    NodeId to;
};

using ExtendEvent = std::variant<EdgeSplit, NewLeaf, ActiveMoved, SuffixLinkSet>;

}  // namespace netfreq
