#include "recurnlp/ngram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "recurnlp/errors.hpp"

namespace recurnlp {

NGramProfile build_profile(const TokenSequence& seq, int k) {
    if (k < 1) throw RangeError("n-gram order must be >= 1");
    if (static_cast<std::size_t>(k) > seq.size())
        throw InsufficientDataError("n-gram order " + std::to_string(k) +
                                    " exceeds sequence length " + std::to_string(seq.size()));
    NGramProfile profile;
    profile.k = k;
    profile.n = static_cast<std::int64_t>(seq.size());
    const auto& toks = seq.tokens();
    std::vector<TokenId> window(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= toks.size(); ++i) {
        std::copy_n(toks.begin() + static_cast<std::ptrdiff_t>(i), k, window.begin());
        profile.freq[window] += 1;
    }
    profile.b = static_cast<std::int64_t>(profile.freq.size());
    return profile;
}

double rr_from_unigrams(const NGramProfile& unigrams) {
    if (unigrams.k != 1) throw RangeError("rr_from_unigrams needs a unigram profile");
    if (unigrams.n <= 0) throw UndefinedInputError("recurrence rate undefined for N = 0");
    std::int64_t sum = 0;
    for (const auto& [gram, f] : unigrams.freq) sum += f * (f - 1);
    const double n = static_cast<double>(unigrams.n);
    return static_cast<double>(sum) / (n * n);
}

namespace {

// Exact constant-time k-gram equality keys, suffix-array style: ranks
// for power-of-two window lengths; an arbitrary length-k window is keyed
// by the ranks of its two overlapping 2^l sub-windows (2^l <= k < 2^(l+1)).
class WindowRanks {
public:
    explicit WindowRanks(const std::vector<TokenId>& tokens) : n_(tokens.size()) {
        if (n_ == 0) return;
        levels_.emplace_back(n_);
        auto& base = levels_.back();
        for (std::size_t i = 0; i < n_; ++i) base[i] = static_cast<std::uint32_t>(tokens[i]);
        compress(base);
        for (std::size_t half = 1; half * 2 <= n_; half *= 2) {
            const auto& prev = levels_.back();
            const std::size_t count = n_ - half * 2 + 1;
            std::vector<std::uint32_t> next(count);
            std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(count);
            for (std::size_t i = 0; i < count; ++i)
                keyed[i] = {pack(prev[i], prev[i + half]), static_cast<std::uint32_t>(i)};
            std::sort(keyed.begin(), keyed.end());
            std::uint32_t rank = 0;
            for (std::size_t i = 0; i < count; ++i) {
                if (i > 0 && keyed[i].first != keyed[i - 1].first) ++rank;
                next[keyed[i].second] = rank;
            }
            levels_.push_back(std::move(next));
        }
    }

    // Key comparing equal iff the k-grams at two positions are equal.
    std::uint64_t key(std::size_t pos, std::size_t k) const {
        const std::size_t level = floor_log2(k);
        const std::size_t len = std::size_t{1} << level;
        return pack(levels_[level][pos], levels_[level][pos + k - len]);
    }

private:
    static std::uint64_t pack(std::uint32_t a, std::uint32_t b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    static std::size_t floor_log2(std::size_t x) {
        std::size_t l = 0;
        while ((std::size_t{2} << l) <= x) ++l;
        return l;
    }

    static void compress(std::vector<std::uint32_t>& ranks) {
        std::vector<std::uint32_t> sorted(ranks);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto& r : ranks)
            r = static_cast<std::uint32_t>(
                std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin());
    }

    std::size_t n_ = 0;
    std::vector<std::vector<std::uint32_t>> levels_;
};

// Buckets window positions by exact k-gram identity.
std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>
group_windows(const WindowRanks& ranks, std::size_t n, std::size_t k) {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> groups;
    for (std::size_t i = 0; i + k <= n; ++i)
        groups[ranks.key(i, k)].push_back(static_cast<std::uint32_t>(i));
    return groups;
}

bool any_repeat(const WindowRanks& ranks, std::size_t n, std::size_t k) {
    auto groups = group_windows(ranks, n, k);
    for (const auto& [key, positions] : groups)
        if (positions.size() >= 2) return true;
    return false;
}

} // namespace

BoundingCounts max_bounding_counts(const TokenSequence& seq) {
    BoundingCounts bc;
    const std::size_t n = seq.size();
    if (n < 2) return bc;

    const WindowRanks ranks(seq.tokens());

    // Longest k with any repeated k-gram; repeats are monotone in k, so
    // binary search. Levels above contribute nothing.
    std::size_t lo = 2, hi = n - 1, k_star = 0;
    if (hi >= lo && any_repeat(ranks, n, lo)) {
        k_star = lo;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo + 1) / 2;
            if (any_repeat(ranks, n, mid)) {
                k_star = mid;
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
    }
    if (k_star < 2) return bc;

    // best_end[s]: right end of the longest credited span starting at s.
    std::vector<std::int64_t> best_end(n, -1);
    std::vector<std::int64_t> prefix_max_end(n, -1);

    for (std::size_t k = k_star; k >= 2; --k) {
        std::int64_t running = -1;
        for (std::size_t s = 0; s < n; ++s) {
            running = std::max(running, best_end[s]);
            prefix_max_end[s] = running;
        }

        auto groups = group_windows(ranks, n, k);
        std::int64_t det_k = 0;
        std::vector<std::pair<std::uint32_t, std::int64_t>> new_spans;
        for (const auto& [key, positions] : groups) {
            if (positions.size() < 2) continue;
            // An occurrence is discounted when its span [p, p+k-1] lies
            // inside a credited occurrence of some longer repeating gram.
            std::vector<std::uint32_t> surviving;
            for (std::uint32_t p : positions) {
                const std::int64_t span_end = static_cast<std::int64_t>(p) +
                                              static_cast<std::int64_t>(k) - 1;
                if (prefix_max_end[p] < span_end) surviving.push_back(p);
            }
            if (surviving.size() >= 2) {
                const auto f = static_cast<std::int64_t>(surviving.size());
                det_k += f * f - f;
                for (std::uint32_t p : surviving)
                    new_spans.emplace_back(p, static_cast<std::int64_t>(p) +
                                                  static_cast<std::int64_t>(k) - 1);
            }
        }
        if (det_k > 0) {
            bc.det_k[static_cast<int>(k)] = det_k;
            bc.n_l += det_k;
        }
        for (const auto& [s, e] : new_spans) best_end[s] = std::max(best_end[s], e);
    }
    return bc;
}

double det_from_counts(const BoundingCounts& bc, const NGramProfile& unigrams) {
    if (unigrams.k != 1) throw RangeError("det_from_counts needs a unigram profile");
    std::int64_t denom = 0;
    for (const auto& [gram, f] : unigrams.freq) denom += f * (f - 1);
    if (denom == 0) throw UndefinedInputError("no recurrence: sum f(f-1) is zero");
    std::int64_t num = 0;
    for (const auto& [k, det_k] : bc.det_k) num += static_cast<std::int64_t>(k) * det_k;
    return static_cast<double>(num) / static_cast<double>(denom);
}

double ent_from_counts(const BoundingCounts& bc, bool base2) {
    if (bc.n_l <= 0) throw UndefinedInputError("no lines: N_l is zero");
    double ent = 0.0;
    for (const auto& [k, det_k] : bc.det_k) {
        if (det_k <= 0) continue;
        const double p = static_cast<double>(det_k) / static_cast<double>(bc.n_l);
        ent -= p * std::log(p);
    }
    if (base2) ent /= std::log(2.0);
    return ent;
}

double chi_square_from_rr(double rr, std::int64_t n, std::int64_t b) {
    return static_cast<double>(n) * static_cast<double>(b) * rr + static_cast<double>(b) -
           static_cast<double>(n);
}

double chi_square_direct(const NGramProfile& unigrams) {
    if (unigrams.k != 1) throw RangeError("chi_square_direct needs a unigram profile");
    if (unigrams.n <= 0 || unigrams.b <= 0)
        throw UndefinedInputError("chi-square undefined for an empty profile");
    const double expected = static_cast<double>(unigrams.n) / static_cast<double>(unigrams.b);
    double chi2 = 0.0;
    for (const auto& [gram, f] : unigrams.freq) {
        const double d = static_cast<double>(f) - expected;
        chi2 += d * d / expected;
    }
    return chi2;
}

NGramEntropy ngram_entropy(const NGramProfile& profile) {
    if (profile.freq.empty()) throw UndefinedInputError("entropy of an empty profile");
    const auto windows = profile.n - profile.k + 1;
    NGramEntropy ent;
    double sum_plogp = 0.0;
    for (const auto& [gram, f] : profile.freq) {
        const double p = static_cast<double>(f) / static_cast<double>(windows);
        sum_plogp += p * std::log(p);
    }
    ent.shannon = -sum_plogp;
    ent.per_type_mean = sum_plogp / static_cast<double>(profile.b);
    return ent;
}

std::string profile_csv(const NGramProfile& profile, const TokenSequence& vocab) {
    std::vector<std::pair<std::string, std::int64_t>> rows;
    rows.reserve(profile.freq.size());
    for (const auto& [gram, count] : profile.freq) {
        std::string surface;
        for (std::size_t i = 0; i < gram.size(); ++i) {
            if (i) surface.push_back(' ');
            surface += vocab.surface(gram[i]);
        }
        rows.emplace_back(std::move(surface), count);
    }
    std::sort(rows.begin(), rows.end());
    std::string out = "ngram,count\n";
    for (const auto& [surface, count] : rows) {
        const bool quote = surface.find_first_of(",\"\n") != std::string::npos;
        if (quote) {
            out.push_back('"');
            for (char c : surface) {
                if (c == '"') out.push_back('"');
                out.push_back(c);
            }
            out.push_back('"');
        } else {
            out += surface;
        }
        out.push_back(',');
        out += std::to_string(count);
        out.push_back('\n');
    }
    return out;
}

} // namespace recurnlp
