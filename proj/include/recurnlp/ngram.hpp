#ifndef RECURNLP_NGRAM_HPP
#define RECURNLP_NGRAM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recurnlp/corpus.hpp"

namespace recurnlp {

// Frequency table of every contiguous k-token window. Sum of counts is
// N - k + 1; b is the number of distinct windows (the vocabulary size B
// when k = 1).
struct NGramProfile {
    int k = 1;
    std::map<std::vector<TokenId>, std::int64_t> freq;
    std::int64_t n = 0; // sequence length N
    std::int64_t b = 0; // distinct windows
};

// Throws InsufficientDataError when k > N or k < 1.
NGramProfile build_profile(const TokenSequence& seq, int k);

// N^-2 * sum_i f(w_i)(f(w_i) - 1) over the unigram table; equals the
// recurrence rate of the theiler=1 auto plot. Requires k == 1, N > 0.
double rr_from_unigrams(const NGramProfile& unigrams);

// Maximally-bounding n-gram tally: det_k maps each order k >= 2 to the
// number of ordered occurrence pairs of k-grams that still repeat after
// discounting occurrences contained in longer credited repeats. n_l is
// the sum over k (the implied number of diagonal lines).
struct BoundingCounts {
    std::map<int, std::int64_t> det_k;
    std::int64_t n_l = 0;
};

// Runs the top-down counting pass, k from N-1 down to 2. At each level
// the occurrences of a k-gram are discounted when their token span lies
// entirely inside a credited occurrence of a longer repeating j-gram;
// k-grams whose discounted frequency f is still >= 2 contribute f^2 - f
// and their surviving occurrences become credited spans for the levels
// below. N < 2 yields empty counts.
BoundingCounts max_bounding_counts(const TokenSequence& seq);

// (sum_k k * det_k) / (sum_i f(w_i)(f(w_i)-1)). Throws
// UndefinedInputError when the unigram recurrence sum is zero.
double det_from_counts(const BoundingCounts& bc, const NGramProfile& unigrams);

// -sum_{det_k > 0} (det_k / n_l) log(det_k / n_l), natural log (bits
// when base2). Throws UndefinedInputError when n_l = 0.
double ent_from_counts(const BoundingCounts& bc, bool base2 = false);

// N * B * RR + B - N: the observed-count chi-square statistic against a
// uniform expectation N/B, recovered from the recurrence rate alone.
double chi_square_from_rr(double rr, std::int64_t n, std::int64_t b);

// Direct observed-vs-uniform chi-square from a unigram table; the
// independent side of the identity above.
double chi_square_direct(const NGramProfile& unigrams);

// Two aggregate entropies of a profile, both in nats and both reported:
// shannon is -sum_g P(g) ln P(g); per_type_mean is the mean of
// P ln P over distinct grams, |ng_k|^-1 * sum_g P(g) ln P(g), a
// nonstandard quantity kept alongside the standard one rather than
// silently corrected.
struct NGramEntropy {
    double shannon = 0.0;
    double per_type_mean = 0.0;
};
NGramEntropy ngram_entropy(const NGramProfile& profile);

// Profile rows as `ngram,count` CSV (tokens joined by single spaces),
// rows sorted by the surface form. vocab must be the sequence the
// profile came from.
std::string profile_csv(const NGramProfile& profile, const TokenSequence& vocab);

} // namespace recurnlp

#endif
