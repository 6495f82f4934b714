#ifndef RECURNLP_RECURRENCE_HPP
#define RECURNLP_RECURRENCE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "recurnlp/corpus.hpp"

namespace recurnlp {

enum class PlotKind { Auto, Cross, Joint, Thresholded };

struct RpPoint {
    std::uint32_t i;
    std::uint32_t j;

    friend bool operator==(const RpPoint&, const RpPoint&) = default;
    friend auto operator<=>(const RpPoint&, const RpPoint&) = default;
};

// Sparse set of recurrent index pairs. points() is sorted by (i, j) and
// duplicate-free; the dense grid is never materialized. theiler is the
// number of central diagonals excluded (|i-j| < theiler has no points;
// meaningful for Auto and Thresholded plots).
class RecurrencePlot {
public:
    RecurrencePlot(std::uint32_t n_rows, std::uint32_t n_cols,
                   std::vector<RpPoint> points, PlotKind kind, std::uint32_t theiler);

    std::uint32_t n_rows() const { return n_rows_; }
    std::uint32_t n_cols() const { return n_cols_; }
    bool square() const { return n_rows_ == n_cols_; }
    PlotKind kind() const { return kind_; }
    std::uint32_t theiler() const { return theiler_; }
    const std::vector<RpPoint>& points() const { return points_; }
    std::size_t point_count() const { return points_.size(); }

private:
    std::uint32_t n_rows_ = 0;
    std::uint32_t n_cols_ = 0;
    PlotKind kind_ = PlotKind::Auto;
    std::uint32_t theiler_ = 0;
    std::vector<RpPoint> points_;
};

// Auto plot of a categorical sequence: all (i,j) with tokens[i] ==
// tokens[j] and |i-j| >= theiler, built from per-token posting lists.
RecurrencePlot build_rp(const TokenSequence& seq, std::uint32_t theiler = 1);
RecurrencePlot build_rp(std::span<const TokenId> tokens, std::uint32_t theiler = 1);

// |points| / (n_rows * n_cols); N^2 for square plots. Throws
// UndefinedInputError on an empty plot frame (N = 0).
double recurrence_rate(const RecurrencePlot& rp);

// Histogram of diagonal line lengths (maximal runs of length >= 2).
struct LineDistribution {
    std::map<std::int64_t, std::int64_t> counts; // length -> number of lines
    std::int64_t total_points_on_lines = 0;      // sum of length * count
    std::int64_t n_lines = 0;                    // sum of counts
};

// Diagonal-run extraction over every lag not excluded by the plot's
// theiler window. Runs are delimited by gap differencing of absent-cell
// indices with a virtual absent cell at both ends of each diagonal, so
// runs touching the plot edge are counted; a gap of D > 2 between
// successive absent cells is a line of length D - 1.
LineDistribution extract_lines(const RecurrencePlot& rp);

// Literal index-differencing of one diagonal pattern: the 1-based
// positions of absent cells, their successive differences, and the line
// lengths those differences imply. With pad_edges the pattern is framed
// by an absent cell on each side (positions 0 and size+1), which is how
// extract_lines treats real diagonals.
struct GapAnalysis {
    std::vector<std::int64_t> absent_indices;
    std::vector<std::int64_t> gaps;
    std::vector<std::int64_t> line_lengths;
};
GapAnalysis analyze_diagonal(const std::vector<bool>& cells, bool pad_edges = false);

struct RqaMeasures {
    double rr = 0.0;       // fraction of possible points
    double det = 0.0;      // fraction of points on diagonal lines (0 if no points)
    double ent = 0.0;      // entropy of line-length distribution, nats by default
    std::int64_t maxline = 0;
    double meanline = 0.0;
    std::int64_t n_lines = 0;
    double trend = 0.0;    // percentage points per diagonal; 0 when not computable
    std::int64_t n = 0;    // series length (n_rows)
};

struct RqaOptions {
    double trend_exclude_tail = 0.1; // fraction of outermost diagonals dropped from TREND
    bool entropy_base2 = false;      // ENT in bits instead of nats
};

// Full measure suite over one plot. Requires a non-empty frame; TREND is
// filled only for square Auto/Thresholded plots with enough diagonals,
// otherwise left at 0.
RqaMeasures rqa_measures(const RecurrencePlot& rp, const RqaOptions& opts = {});

// Least-squares slope of per-diagonal percent recurrence (upper
// triangle, diagonals 1..Ntilde) against the centered diagonal index,
// where Ntilde = floor((N-1) * (1 - exclude_tail)). Throws
// InsufficientDataError when Ntilde < 2 and ShapeError for plots that
// are not square Auto/Thresholded.
double trend(const RecurrencePlot& rp, double exclude_tail = 0.1);

struct WindowSpec {
    std::size_t winsz; // window length in tokens, >= 2
    std::size_t wshft; // hop in tokens, >= 1
};

// RQA per sliding window; windows start at 0, wshft, 2*wshft, ... while
// a full window fits. Throws InsufficientDataError when winsz > N.
std::vector<std::pair<std::size_t, RqaMeasures>>
windowed_rqa(const TokenSequence& seq, const WindowSpec& w, std::uint32_t theiler = 1,
             const RqaOptions& opts = {});

} // namespace recurnlp

#endif
