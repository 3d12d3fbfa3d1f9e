#include "netfreq/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace netfreq::oracle {
namespace {

constexpr Symbol kTerminator = 0xFFFF;

Text with_terminator(std::span<const Symbol> text, bool sealed) {
    Text out(text.begin(), text.end());
    if (sealed) out.push_back(kTerminator);
    return out;
}

std::span<const Symbol> slice(const Text& t, std::size_t begin, std::size_t length) {
    return std::span<const Symbol>(t).subspan(begin, length);
}

}  // namespace

std::size_t frequency(std::span<const Symbol> text, std::span<const Symbol> s) {
    if (s.empty()) throw std::invalid_argument("frequency of the empty string");
    std::size_t count = 0;
    for (std::size_t i = 0; i + s.size() <= text.size(); ++i) {
        if (std::equal(s.begin(), s.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
    }
    return count;
}

std::size_t nf(std::span<const Symbol> text, std::span<const Symbol> s, bool sealed) {
    if (s.empty()) throw std::invalid_argument("net frequency of the empty string");
    const Text t = with_terminator(text, sealed);
    const std::size_t n = t.size();
    const std::size_t m = s.size();
    if (frequency(t, s) < 2) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + m <= n; ++i) {
        if (!std::equal(s.begin(), s.end(), t.begin() + static_cast<std::ptrdiff_t>(i))) continue;
        const bool left_unique = i == 0 || frequency(t, slice(t, i - 1, m + 1)) == 1;
        const bool right_unique = i + m == n || frequency(t, slice(t, i, m + 1)) == 1;
        if (left_unique && right_unique) ++count;
    }
    return count;
}

std::size_t nf_by_extension_pairs(std::span<const Symbol> text, std::span<const Symbol> s) {
    if (s.empty()) throw std::invalid_argument("net frequency of the empty string");
    if (frequency(text, s) < 2) return 0;
    constexpr Symbol kBefore = 0xFFFE;
    Text t{kBefore};
    t.insert(t.end(), text.begin(), text.end());
    t.push_back(kTerminator);

    const std::set<Symbol> symbols(t.begin(), t.end());
    std::size_t pairs = 0;
    Text buf(s.size() + 2);
    std::copy(s.begin(), s.end(), buf.begin() + 1);
    const std::span<const Symbol> all(buf);
    for (Symbol x : symbols) {
        buf.front() = x;
        if (frequency(t, all.first(s.size() + 1)) != 1) continue;
        for (Symbol y : symbols) {
            buf.back() = y;
            if (frequency(t, all.last(s.size() + 1)) == 1 && frequency(t, all) == 1) ++pairs;
        }
    }
    return pairs;
}

std::vector<Text> repeated_suffixes(std::span<const Symbol> text) {
    std::vector<Text> out;
    for (std::size_t length = text.size(); length >= 1; --length) {
        const auto suffix = text.subspan(text.size() - length);
        if (frequency(text, suffix) >= 2) out.emplace_back(suffix.begin(), suffix.end());
    }
    return out;
}

std::vector<Text> distinct_substrings(std::span<const Symbol> text) {
    std::set<Text> seen;
    for (std::size_t i = 0; i < text.size(); ++i) {
        for (std::size_t j = i + 1; j <= text.size(); ++j) seen.emplace(text.begin() + i, text.begin() + j);
    }
    return {seen.begin(), seen.end()};
}

std::vector<NfEntry> all_nf(std::span<const Symbol> text, bool sealed) {
    std::vector<NfEntry> out;
    for (const Text& s : distinct_substrings(text)) {
        if (frequency(text, s) < 2) continue;
        const std::size_t value = nf(text, s, sealed);
        if (value > 0) out.push_back(NfEntry{s, value});
    }
    return out;
}

std::vector<NfEntry> all_nf_lce(std::span<const Symbol> text, bool sealed) {
    const Text t = with_terminator(text, sealed);
    const std::size_t n = t.size();
    // lce[i][k]: longest common prefix of suffixes i and k, rolled row by row from the end.
    std::vector<std::size_t> longest(n + 1, 0);
    std::vector<std::size_t> next_row(n + 1, 0);
    std::vector<std::size_t> row(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = n; k-- > 0;) {
            row[k] = (k != i && t[i] == t[k]) ? 1 + next_row[k + 1] : 0;
            if (k != i) longest[i] = std::max(longest[i], row[k]);
        }
        std::swap(row, next_row);
    }

    std::map<Text, std::size_t> counts;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t m = longest[i];
        if (m == 0) continue;
        if (i > 0 && longest[i - 1] > m) continue;
        counts[Text(t.begin() + i, t.begin() + i + m)] += 1;
    }
    std::vector<NfEntry> out;
    for (auto& [s, value] : counts) out.push_back(NfEntry{s, value});
    return out;
}

}  // namespace netfreq::oracle
