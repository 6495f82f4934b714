#ifndef RECURNLP_EXPERIMENTS_HPP
#define RECURNLP_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "recurnlp/cluster.hpp"
#include "recurnlp/corpus.hpp"

namespace recurnlp {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// DET vs compressibility over randomly generated strings.
struct CompressionRun {
    double det = 0.0;
    double ratio = 0.0; // 1 - compressed/raw
};

struct CompressionReport {
    std::vector<CompressionRun> runs;
    double pearson_r = 0.0;
    std::uint64_t seed = 0;
    std::string prng;       // generator identity, for reproducing elsewhere
    std::string compressor; // fixed compressor setting
};

// Each run concatenates samples_per_string uniform draws from the six
// substrings "a", "b", "c", "a b", "b c", "a b c" (one xoshiro256**
// stream across all runs, seeded via splitmix64), then records the DET
// of the theiler=1 auto plot against the compressibility ratio of the
// space-joined token string. Requires n_runs >= 2.
CompressionReport compression_experiment(std::size_t n_runs = 1000,
                                         std::size_t samples_per_string = 100,
                                         std::uint64_t seed = kDefaultSeed);

std::string compression_report_json(const CompressionReport& report, bool include_runs = false);
std::string compression_runs_csv(const CompressionReport& report);

// Genre analysis over a labeled corpus.
struct GenreRow {
    std::string label;
    std::int64_t n_docs = 0;
    // Means in display units: rr and det are percentages.
    double rr = 0.0;
    double det = 0.0;
    double maxline = 0.0;
    double meanline = 0.0;
    double ent = 0.0;
};

struct SkippedDoc {
    std::string doc_id;
    std::size_t n_words = 0;
};

struct GenreReport {
    std::vector<GenreRow> rows;            // sorted by label
    std::map<std::string, double> r2;      // measure name -> OLS R^2
    Dendrogram dendrogram;                 // complete linkage over z-scored genre means
    std::string newick;
    std::vector<SkippedDoc> skipped;
};

struct GenreOptions {
    std::size_t slice_start = 5000;
    std::size_t slice_end = 10000;
    std::size_t min_words = 10000;
    std::uint32_t theiler = 1;
    unsigned jobs = 1;          // documents tokenized/measured in parallel
    std::ostream* log = nullptr; // skipped-document log (e.g. &std::cerr)
};

// Tokenizes every manifest entry, skips documents shorter than
// min_words (logging them), measures the [slice_start, slice_end) word
// slice at the given theiler, and aggregates: per-genre means in
// display units, per-measure R^2 from genre labels, and a complete-
// linkage dendrogram over the column-z-scored genre-mean matrix.
// A document row whose label contains ';' counts once per genre.
// Throws InsufficientDataError when fewer than 2 genres have documents.
GenreReport genre_experiment(const CorpusManifest& manifest, const GenreOptions& opts = {});

std::string genre_report_json(const GenreReport& report);
std::string genre_rows_csv(const GenreReport& report);
std::string skipped_csv(const GenreReport& report);

} // namespace recurnlp

#endif
