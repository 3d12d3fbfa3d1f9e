#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "netfreq/nf_report.hpp"
#include "netfreq/suffix_tree.hpp"

namespace netfreq {

/// Net frequency of s in a sealed tree: |r(S)| minus, for every left
/// extension x with a Weiner link, the right extensions unique for both xS and S.
std::size_t offline_single_nf(const SuffixTree& tree, std::span<const Symbol> s);

/// The sets behind offline_single_nf, for inspection.
struct OfflineNfBreakdown {
    std::size_t nf = 0;
    /// r(S): symbols y with f(Sy) = 1 (the sentinel included).
    std::vector<Symbol> unique_right;
    /// L(S): symbols x with f(xS) >= 2.
    std::vector<Symbol> repeated_left;
    /// r(xS) for each x in L(S).
    std::vector<std::pair<Symbol, std::vector<Symbol>>> unique_right_of_left;
};

/// Computes every set by locating each left extension; O(|alphabet| * |s|).
OfflineNfBreakdown offline_nf_breakdown(const SuffixTree& tree, std::span<const Symbol> s);

/// All strings with positive net frequency in a sealed tree, ascending by occurrence.
std::vector<NfReport> offline_all_nf(const SuffixTree& tree);

}  // namespace netfreq
