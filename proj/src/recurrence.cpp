#include "recurnlp/recurrence.hpp"

#include <algorithm>
#include <cmath>

#include "recurnlp/errors.hpp"

namespace recurnlp {

RecurrencePlot::RecurrencePlot(std::uint32_t n_rows, std::uint32_t n_cols,
                               std::vector<RpPoint> points, PlotKind kind, std::uint32_t theiler)
    : n_rows_(n_rows), n_cols_(n_cols), kind_(kind), theiler_(theiler), points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (const auto& p : points_) {
        if (p.i >= n_rows_ || p.j >= n_cols_)
            throw RangeError("recurrence point (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                             ") outside " + std::to_string(n_rows_) + "x" + std::to_string(n_cols_) +
                             " plot");
        if ((kind_ == PlotKind::Auto || kind_ == PlotKind::Thresholded) && theiler_ > 0) {
            const auto d = p.i > p.j ? p.i - p.j : p.j - p.i;
            if (d < theiler_)
                throw RangeError("point (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                 ") violates theiler window " + std::to_string(theiler_));
        }
    }
}

RecurrencePlot build_rp(std::span<const TokenId> tokens, std::uint32_t theiler) {
    const std::size_t n = tokens.size();
    TokenId max_id = -1;
    for (TokenId t : tokens) {
        if (t < 0) throw RangeError("negative token id");
        max_id = std::max(max_id, t);
    }

    std::vector<std::vector<std::uint32_t>> postings(
        n == 0 ? 0 : static_cast<std::size_t>(max_id) + 1);
    for (std::size_t i = 0; i < n; ++i)
        postings[static_cast<std::size_t>(tokens[i])].push_back(static_cast<std::uint32_t>(i));

    // Walking positions in order keeps the point list sorted by (i, j)
    // without a separate sort.
    std::vector<RpPoint> points;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t j : postings[static_cast<std::size_t>(tokens[i])]) {
            const auto ui = static_cast<std::uint32_t>(i);
            const auto d = ui > j ? ui - j : j - ui;
            if (d >= theiler) points.push_back({ui, j});
        }
    }
    return RecurrencePlot(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n),
                          std::move(points), PlotKind::Auto, theiler);
}

RecurrencePlot build_rp(const TokenSequence& seq, std::uint32_t theiler) {
    return build_rp(std::span<const TokenId>(seq.tokens()), theiler);
}

double recurrence_rate(const RecurrencePlot& rp) {
    if (rp.n_rows() == 0 || rp.n_cols() == 0)
        throw UndefinedInputError("recurrence rate undefined for an empty plot frame");
    return static_cast<double>(rp.point_count()) /
           (static_cast<double>(rp.n_rows()) * static_cast<double>(rp.n_cols()));
}

GapAnalysis analyze_diagonal(const std::vector<bool>& cells, bool pad_edges) {
    GapAnalysis g;
    if (pad_edges) g.absent_indices.push_back(0);
    for (std::size_t t = 0; t < cells.size(); ++t)
        if (!cells[t]) g.absent_indices.push_back(static_cast<std::int64_t>(t) + 1);
    if (pad_edges) g.absent_indices.push_back(static_cast<std::int64_t>(cells.size()) + 1);
    for (std::size_t k = 1; k < g.absent_indices.size(); ++k) {
        const std::int64_t d = g.absent_indices[k] - g.absent_indices[k - 1];
        g.gaps.push_back(d);
        if (d > 2) g.line_lengths.push_back(d - 1);
    }
    return g;
}

LineDistribution extract_lines(const RecurrencePlot& rp) {
    // Cells per lag, indexed along the diagonal; sorted input keeps each
    // bucket ascending.
    std::map<std::int64_t, std::vector<std::uint32_t>> diagonals;
    for (const auto& p : rp.points()) {
        const std::int64_t lag = static_cast<std::int64_t>(p.j) - static_cast<std::int64_t>(p.i);
        if (static_cast<std::uint64_t>(lag < 0 ? -lag : lag) < rp.theiler()) continue;
        diagonals[lag].push_back(lag >= 0 ? p.i : p.j);
    }

    // Gap differencing of the absent-cell indices in closed form: a run
    // of R consecutive present cells sits between two absent cells whose
    // index gap is R + 1, so gaps > 2 are exactly the runs of length >=
    // 2. Virtual absent cells at both diagonal ends are implicit.
    LineDistribution dist;
    for (const auto& [lag, cells] : diagonals) {
        std::size_t run = 1;
        for (std::size_t k = 1; k <= cells.size(); ++k) {
            if (k < cells.size() && cells[k] == cells[k - 1] + 1) {
                ++run;
                continue;
            }
            if (run >= 2) {
                dist.counts[static_cast<std::int64_t>(run)] += 1;
                dist.total_points_on_lines += static_cast<std::int64_t>(run);
                dist.n_lines += 1;
            }
            run = 1;
        }
    }
    return dist;
}

namespace {

double entropy_of_lines(const LineDistribution& lines, bool base2) {
    if (lines.n_lines <= 0) return 0.0;
    double ent = 0.0;
    for (const auto& [len, count] : lines.counts) {
        const double p = static_cast<double>(count) / static_cast<double>(lines.n_lines);
        ent -= p * std::log(p);
    }
    if (base2) ent /= std::log(2.0);
    return ent;
}

bool trend_applicable(const RecurrencePlot& rp) {
    return rp.square() && (rp.kind() == PlotKind::Auto || rp.kind() == PlotKind::Thresholded);
}

double trend_impl(const RecurrencePlot& rp, std::int64_t n_tilde) {
    const std::int64_t n = rp.n_rows();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_tilde) + 1, 0);
    for (const auto& p : rp.points()) {
        if (p.j <= p.i) continue; // upper triangle only
        const std::int64_t lag = static_cast<std::int64_t>(p.j) - static_cast<std::int64_t>(p.i);
        if (lag <= n_tilde) counts[static_cast<std::size_t>(lag)] += 1;
    }
    std::vector<double> rr_i(static_cast<std::size_t>(n_tilde) + 1, 0.0);
    double mean_rr = 0.0;
    for (std::int64_t i = 1; i <= n_tilde; ++i) {
        rr_i[static_cast<std::size_t>(i)] =
            100.0 * static_cast<double>(counts[static_cast<std::size_t>(i)]) /
            static_cast<double>(n - i);
        mean_rr += rr_i[static_cast<std::size_t>(i)];
    }
    mean_rr /= static_cast<double>(n_tilde);
    const double center = static_cast<double>(n_tilde) / 2.0;
    double num = 0.0;
    double den = 0.0;
    for (std::int64_t i = 1; i <= n_tilde; ++i) {
        const double x = static_cast<double>(i) - center;
        num += x * (rr_i[static_cast<std::size_t>(i)] - mean_rr);
        den += x * x;
    }
    return num / den;
}

std::int64_t trend_n_tilde(const RecurrencePlot& rp, double exclude_tail) {
    return static_cast<std::int64_t>(
        std::floor(static_cast<double>(rp.n_rows() - 1) * (1.0 - exclude_tail)));
}

} // namespace

double trend(const RecurrencePlot& rp, double exclude_tail) {
    if (!trend_applicable(rp))
        throw ShapeError("TREND requires a square auto or thresholded plot");
    if (exclude_tail < 0.0 || exclude_tail >= 1.0)
        throw RangeError("exclude_tail must lie in [0,1)");
    if (rp.n_rows() == 0) throw InsufficientDataError("TREND of an empty plot");
    const std::int64_t n_tilde = trend_n_tilde(rp, exclude_tail);
    if (n_tilde < 2)
        throw InsufficientDataError("TREND needs at least 2 diagonals, got " +
                                    std::to_string(n_tilde));
    return trend_impl(rp, n_tilde);
}

RqaMeasures rqa_measures(const RecurrencePlot& rp, const RqaOptions& opts) {
    RqaMeasures m;
    m.n = rp.n_rows();
    m.rr = recurrence_rate(rp);

    const auto lines = extract_lines(rp);
    m.det = rp.point_count() > 0
                ? static_cast<double>(lines.total_points_on_lines) /
                      static_cast<double>(rp.point_count())
                : 0.0;
    m.ent = entropy_of_lines(lines, opts.entropy_base2);
    m.maxline = lines.counts.empty() ? 0 : lines.counts.rbegin()->first;
    m.meanline = lines.n_lines > 0 ? static_cast<double>(lines.total_points_on_lines) /
                                         static_cast<double>(lines.n_lines)
                                   : 0.0;
    m.n_lines = lines.n_lines;

    if (trend_applicable(rp)) {
        const std::int64_t n_tilde = trend_n_tilde(rp, opts.trend_exclude_tail);
        if (n_tilde >= 2) m.trend = trend_impl(rp, n_tilde);
    }
    return m;
}

std::vector<std::pair<std::size_t, RqaMeasures>>
windowed_rqa(const TokenSequence& seq, const WindowSpec& w, std::uint32_t theiler,
             const RqaOptions& opts) {
    if (w.winsz < 2) throw RangeError("winsz must be >= 2");
    if (w.wshft < 1) throw RangeError("wshft must be >= 1");
    if (w.winsz > seq.size())
        throw InsufficientDataError("winsz " + std::to_string(w.winsz) + " exceeds sequence length " +
                                    std::to_string(seq.size()));
    std::vector<std::pair<std::size_t, RqaMeasures>> out;
    const std::span<const TokenId> all(seq.tokens());
    for (std::size_t start = 0; start + w.winsz <= seq.size(); start += w.wshft) {
        const auto rp = build_rp(all.subspan(start, w.winsz), theiler);
        out.emplace_back(start, rqa_measures(rp, opts));
    }
    return out;
}

} // namespace recurnlp
