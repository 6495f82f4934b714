#ifndef RECURNLP_MULTISERIES_HPP
#define RECURNLP_MULTISERIES_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "recurnlp/corpus.hpp"
#include "recurnlp/recurrence.hpp"

namespace recurnlp {

// Cross recurrence of two sequences, matching on surface strings so the
// documents' separate id spaces compare correctly. Rows index seqA,
// columns seqB; no Theiler exclusion (a cross plot has no trivial LOI).
RecurrencePlot build_cross_rp(const TokenSequence& seqA, const TokenSequence& seqB);

// Point-set intersection of plots sharing dimensions; the result keeps
// the largest input theiler. Throws ShapeError on dimension mismatch or
// an empty list.
RecurrencePlot joint_rp(const std::vector<RecurrencePlot>& plots);

struct EmbeddingTable {
    int dim = 0;
    std::unordered_map<std::string, std::vector<double>> vectors;
};

// One word per line followed by D whitespace-separated reals; an
// optional first line "V D" (two integers) is skipped. Throws
// ParseError with the line number on inconsistent dimensions or
// non-numeric fields.
EmbeddingTable load_embeddings(const std::filesystem::path& path);

enum class OovPolicy { Skip, Error };

// Token-by-token path through embedding space. index_map maps each
// retained row back to its original token index. Columns are z-scored
// with the population convention; constant columns become all-zero.
struct TrajectoryMatrix {
    std::size_t dim = 0;
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> index_map;
    bool zscored = false;
};

// Under Skip, out-of-vocabulary tokens are dropped (order preserved);
// under Error the first missing token raises UndefinedInputError naming
// the token and its position.
TrajectoryMatrix build_trajectory(const TokenSequence& seq, const EmbeddingTable& table,
                                  OovPolicy oov = OovPolicy::Skip);

// Thresholded plot over a z-scored trajectory: points (i,j), i != j,
// with Euclidean row distance <= radius. Throws RangeError for a
// negative radius.
RecurrencePlot semantic_rp(const TrajectoryMatrix& traj, double radius);

struct RadiusSearch {
    double radius = 0.0;
    double achieved_rr = 0.0;
    bool met = false; // |achieved_rr - target| <= 0.005
};

// Bisection on the radius until the plot's RR is within 0.005 of
// target_rr or 50 iterations pass. Unreachable targets return the
// nearest boundary (radius 0, or the max pairwise distance) with the
// achieved RR and met = false. Throws InsufficientDataError for
// trajectories with fewer than 2 rows and RangeError for targets
// outside (0,1).
RadiusSearch radius_for_target_rr(const TrajectoryMatrix& traj, double target_rr);

} // namespace recurnlp

#endif
