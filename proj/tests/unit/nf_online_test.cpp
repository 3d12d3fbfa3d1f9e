#include <gtest/gtest.h>

#include <set>

#include "netfreq/nf_offline.hpp"
#include "netfreq/nf_online.hpp"
#include "netfreq/online_builder.hpp"
#include "netfreq/oracle.hpp"
#include "test_support.hpp"

namespace netfreq {
namespace {

using testing::sym;
using testing::Text;

OnlineBuilder stream(const Text& t, std::size_t alphabet = kDefaultAlphabetSize) {
    OnlineBuilder b(alphabet);
    b.append(t);
    return b;
}

// Distinct right extensions of s that occur once, plus one for the end of the text.
std::size_t brute_unique_right_with_end(const Text& t, const Text& s) {
    std::set<Symbol> unique;
    for (std::size_t i = 0; i + s.size() < t.size(); ++i) {
        if (!std::equal(s.begin(), s.end(), t.begin() + i)) continue;
        Text ext(s);
        ext.push_back(t[i + s.size()]);
        if (oracle::frequency(t, ext) == 1) unique.insert(t[i + s.size()]);
    }
    return unique.size() + 1;
}

TEST(Rho, LeafEdgeProgression) {
    const auto b = stream(sym("aaaa"));
    const NodeId leaf = b.tree().child(kRoot, 'a');
    EXPECT_EQ(rho(b, Locus{leaf, 3}), 2u);
    EXPECT_EQ(rho(b, Locus{leaf, 2}), 1u);
    EXPECT_EQ(rho(b, Locus{leaf, 1}), 1u);
    EXPECT_EQ(brute_unique_right_with_end(sym("aaaa"), sym("aaa")), 2u);
    EXPECT_EQ(brute_unique_right_with_end(sym("aaaa"), sym("a")), 1u);
}

TEST(Rho, RejectsNonImplicitLocus) {
    const auto b = stream(sym("abcab"));
    const auto locus = b.tree().locate(sym("c"));
    ASSERT_TRUE(locus);
    EXPECT_THROW(rho(b, *locus), std::invalid_argument);
}

TEST(Rho, MatchesBruteForceOnEveryImplicitNode) {
    std::mt19937_64 rng(11);
    bool saw_bare_coinciding = false;
    for (int round = 0; round < 150; ++round) {
        const std::size_t alphabet = 2 + round % 3;
        const Text t = testing::random_text(rng, 1 + rng() % 80, alphabet);
        const auto b = stream(t, alphabet);
        for (const Locus& locus : b.registry().chain()) {
            const Text s = b.tree().path_label(locus);
            const std::size_t value = rho(b, locus);
            ASSERT_EQ(value, brute_unique_right_with_end(t, s)) << testing::show(t) << " / " << testing::show(s);
            if (b.registry().classify(b.tree(), locus) == ImplicitClass::Coinciding && value == 1) {
                saw_bare_coinciding = true;
            }
        }
    }
    EXPECT_TRUE(saw_bare_coinciding);  // Case 2 with no qualifying leaf child
}

TEST(ImplicitWeinerLinks, FromBranchingSuffixToImplicitLeftExtension) {
    // "b" is a branching node and a repeated suffix; "ab" is a repeated suffix inside a leaf edge.
    const auto b = stream(sym("abcbxab"));
    const auto locus = b.tree().locate(sym("b"));
    ASSERT_TRUE(locus);
    const auto links = implicit_weiner_links(b, *locus);
    const auto ab = b.tree().locate(sym("ab"));
    ASSERT_EQ(links.size(), 1u);
    EXPECT_EQ(links[0], *ab);
}

TEST(ImplicitWeinerLinks, EmptyWhenNoLeftExtensionRepeats) {
    // "a" is a repeated suffix on a branching node; "ba", "ca" and "ya" are unique.
    const auto b = stream(sym("baxcaya"));
    const auto locus = b.tree().locate(sym("a"));
    ASSERT_TRUE(locus);
    EXPECT_TRUE(implicit_weiner_links(b, *locus).empty());
}

TEST(ImplicitWeinerLinks, RequiresCoincidingLocus) {
    const auto b = stream(sym("aaaa"));
    EXPECT_THROW(implicit_weiner_links(b, Locus{b.tree().child(kRoot, 'a'), 2}), std::invalid_argument);
}

TEST(ImplicitWeinerLinks, MatchBruteForceOnRandomTexts) {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 100; ++round) {
        const std::size_t alphabet = 2 + round % 3;
        const Text t = testing::random_text(rng, 1 + rng() % 300, alphabet);
        const auto b = stream(t, alphabet);
        const auto repeated = oracle::repeated_suffixes(t);
        for (const Locus& locus : b.registry().chain()) {
            if (b.registry().classify(b.tree(), locus) != ImplicitClass::Coinciding) continue;
            const Text s = b.tree().path_label(locus);
            // Brute force: x . S is a repeated suffix for some symbol x.
            std::set<Text> expected;
            for (std::size_t x = 0; x < alphabet; ++x) {
                Text xs{static_cast<Symbol>(x)};
                xs.insert(xs.end(), s.begin(), s.end());
                if (std::find(repeated.begin(), repeated.end(), xs) != repeated.end()) expected.insert(xs);
            }
            std::set<Text> got;
            for (const Locus& target : implicit_weiner_links(b, locus)) got.insert(b.tree().path_label(target));
            ASSERT_EQ(got, expected) << testing::show(t) << " / " << testing::show(s);
        }
    }
}

TEST(OnlineSingleNf, SampleTextOnStream) {
    const auto b = stream(sym("rstkstcastarstast"));
    EXPECT_EQ(online_single_nf(b, sym("st")), 1u);
}

TEST(OnlineSingleNf, ActivePointString) {
    const Text t = sym("aabaabababaa");
    const auto b = stream(t);
    EXPECT_EQ(b.tree().path_label(b.active_point()), sym("abaa"));
    EXPECT_EQ(online_single_nf(b, sym("abaa")), oracle::nf(t, sym("abaa"), false));
    EXPECT_EQ(online_single_nf(b, sym("abaa")), rho(b, b.active_point()));
}

TEST(OnlineSingleNf, AbsentAndEmpty) {
    const auto b = stream(sym("abab"));
    EXPECT_EQ(online_single_nf(b, sym("abc")), 0u);
    EXPECT_THROW(online_single_nf(b, Text{}), std::invalid_argument);
}

TEST(OnlineSingleNf, EveryPrefixOfShortBinaryTexts) {
    for (const Text& t : testing::all_texts(9, 2)) {
        OnlineBuilder b(2);
        for (std::size_t k = 0; k < t.size(); ++k) {
            b.append(t[k]);
            const Text prefix(t.begin(), t.begin() + k + 1);
            for (const Text& s : oracle::distinct_substrings(prefix)) {
                ASSERT_EQ(online_single_nf(b, s), oracle::nf(prefix, s, false))
                    << testing::show(prefix) << " / " << testing::show(s);
            }
        }
    }
}

TEST(OnlineSingleNf, ZeroShortcutIsSound) {
    // Inside an edge and not the active point: the oracle must agree on zero.
    std::mt19937_64 rng(13);
    for (int round = 0; round < 100; ++round) {
        const Text t = testing::random_text(rng, 1 + rng() % 60, 2 + round % 2);
        const auto b = stream(t, 4);
        for (const Locus& locus : b.registry().chain()) {
            if (locus == b.active_point() || locus.depth == b.tree().depth(locus.node)) continue;
            EXPECT_EQ(oracle::nf(t, b.tree().path_label(locus), false), 0u);
        }
    }
}

TEST(OnlineSingleNf, CoincidingIsMonotoneAlongTheChain) {
    // Shorter repeated suffixes of a coinciding one coincide too.
    std::mt19937_64 rng(14);
    for (int round = 0; round < 200; ++round) {
        const Text t = testing::random_text(rng, 1 + rng() % 100, 2 + round % 3);
        const auto b = stream(t, 4);
        bool seen = false;
        for (const Locus& locus : b.registry().chain()) {
            const bool coinciding = locus.depth == b.tree().depth(locus.node);
            EXPECT_TRUE(!seen || coinciding);
            seen = seen || coinciding;
        }
    }
}

TEST(OnlineAllNf, EmptyText) {
    OnlineBuilder b;
    EXPECT_TRUE(online_all_nf(b).empty());
}

TEST(OnlineAllNf, SampleTextMatchesOracle) {
    const Text t = sym("rstkstcastarstast");
    const auto b = stream(t);
    const auto table = testing::report_map(b.tree(), online_all_nf(b));
    EXPECT_EQ(table, testing::entry_map(oracle::all_nf(t, false)));
    EXPECT_EQ(table.at(sym("st")), 1u);
}

TEST(OnlineAllNf, EveryPrefixOfRandomTernaryStreams) {
    std::mt19937_64 rng(15);
    for (int round = 0; round < 100; ++round) {
        const Text t = testing::random_text(rng, 1 + rng() % 300, 3);
        OnlineBuilder b(3);
        for (std::size_t k = 0; k < t.size(); ++k) {
            b.append(t[k]);
            const Text prefix(t.begin(), t.begin() + k + 1);
            const auto reports = online_all_nf(b);
            const auto table = testing::report_map(b.tree(), reports);
            ASSERT_EQ(reports.size(), table.size());
            ASSERT_LE(reports.size(), prefix.size());
            ASSERT_EQ(table, testing::entry_map(oracle::all_nf_lce(prefix, false))) << testing::show(prefix);
        }
    }
}

TEST(OnlineAllNf, FullyReadStreamAgreesWithSealedCopy) {
    std::mt19937_64 rng(16);
    for (int round = 0; round < 100; ++round) {
        const std::size_t alphabet = 2 + round % 3;
        const Text t = testing::random_text(rng, 1 + rng() % 200, alphabet);
        const auto open = stream(t, alphabet);
        const auto sealed = build_sealed(t, alphabet);
        const auto online = testing::report_map(open.tree(), online_all_nf(open));
        const auto offline = testing::report_map(sealed.tree(), offline_all_nf(sealed.tree()));
        // Net frequency never depends on the terminator, so the tables agree
        // on every string, not just those away from the end of the text.
        EXPECT_EQ(online, offline) << testing::show(t);
        for (const Text& s : oracle::distinct_substrings(Text(t.begin(), t.begin() + std::min<std::size_t>(t.size(), 20)))) {
            EXPECT_EQ(online_single_nf(open, s), offline_single_nf(sealed.tree(), s));
        }
    }
}

}  // namespace
}  // namespace netfreq
