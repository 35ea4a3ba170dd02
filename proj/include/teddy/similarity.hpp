#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace teddy {

/// Rounds 100 * num / den half-up to an integer. den must be > 0.
int round_ratio_100(long long num, long long den);

/// N-gram token ratio: 100 * |G ∩ H| / |G| rounded half-up, where G and H are
/// the sets of distinct n-grams of query and candidate. A sequence shorter
/// than n counts as one gram covering the whole sequence. Deliberately
/// asymmetric (query containment). Throws std::invalid_argument on an empty
/// sequence or n < 1.
int ngram_token_ratio(std::span<const std::string> query,
                      std::span<const std::string> candidate, int n);

/// Ratcliff/Obershelp similarity of two strings: round(100 * 2M / (|a|+|b|))
/// half-up, where M is the total length of matching blocks found by the
/// longest-common-substring recursion. Two empty strings score 100.
int ratcliff_ratio(std::string_view a, std::string_view b);

/// Total matching-block length of the Ratcliff/Obershelp recursion (the M in
/// ratcliff_ratio). Longest matches are chosen earliest-in-a then
/// earliest-in-b.
size_t ratcliff_matching_total(std::string_view a, std::string_view b);

/// Token-set fuzzy ratio. With I = sorted distinct common tokens,
/// A = I ++ sorted distinct query-only tokens and B = I ++ sorted distinct
/// candidate-only tokens (each joined by single spaces), returns
/// max(R(I,A), R(I,B), R(A,B)) where R is ratcliff_ratio. Invariant under
/// permutation of either sequence. Throws std::invalid_argument on an empty
/// sequence.
int token_set_ratio(std::span<const std::string> query,
                    std::span<const std::string> candidate);

/// The three strings the token-set ratio compares, exposed so callers can
/// reuse precomputed sorted distinct token lists.
int token_set_ratio_on_sorted(const std::vector<std::string>& query_sorted,
                              const std::vector<std::string>& cand_sorted);

/// Sorted distinct copy of a token sequence.
std::vector<std::string> sorted_distinct(std::span<const std::string> tokens);

}  // namespace teddy
