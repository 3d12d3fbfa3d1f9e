#pragma once

#include <cstddef>

#include "netfreq/suffix_tree.hpp"
#include "netfreq/text_store.hpp"

namespace netfreq {

/// One string of positive net frequency: an occurrence of it and its NF.
/// `node` is the branching node whose path label is the string, or, for the
/// longest repeated suffix of an open text lying inside an edge, the child
/// node of that edge.
struct NfReport {
    Occurrence occurrence;
    std::size_t nf = 0;
    NodeId node = kNoNode;
};

}  // namespace netfreq
