#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netfreq/nf_report.hpp"
#include "netfreq/online_builder.hpp"

namespace netfreq {

/// Number of unique right extensions of the string at an implicit node,
/// counting the end of the text as one. Throws if locus is not implicit.
std::size_t rho(const OnlineBuilder& index, Locus locus);

/// Implicit nodes (q, depth + 1) whose string is x . S for the string S at a
/// locus coinciding with a branching node; found through the Weiner links of
/// the node's ancestors. Throws if locus does not coincide with a branching node.
std::vector<Locus> implicit_weiner_links(const OnlineBuilder& index, Locus locus);

/// Net frequency of s in the text read so far (no sentinel).
std::size_t online_single_nf(const OnlineBuilder& index, std::span<const Symbol> s);

/// All strings with positive net frequency in the text read so far,
/// ascending by occurrence.
std::vector<NfReport> online_all_nf(const OnlineBuilder& index);

}  // namespace netfreq
