#include "recurnlp/multiseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "recurnlp/errors.hpp"

namespace recurnlp {

RecurrencePlot build_cross_rp(const TokenSequence& seqA, const TokenSequence& seqB) {
    // Match on surfaces: remap B positions onto A's id space.
    std::vector<std::vector<std::uint32_t>> b_postings(seqA.vocab_size());
    for (std::size_t j = 0; j < seqB.size(); ++j) {
        const auto id = seqA.id_of(seqB.surface(seqB.token_at(j)));
        if (id) b_postings[static_cast<std::size_t>(*id)].push_back(static_cast<std::uint32_t>(j));
    }
    std::vector<RpPoint> points;
    for (std::size_t i = 0; i < seqA.size(); ++i)
        for (std::uint32_t j : b_postings[static_cast<std::size_t>(seqA.token_at(i))])
            points.push_back({static_cast<std::uint32_t>(i), j});
    return RecurrencePlot(static_cast<std::uint32_t>(seqA.size()),
                          static_cast<std::uint32_t>(seqB.size()), std::move(points),
                          PlotKind::Cross, 0);
}

RecurrencePlot joint_rp(const std::vector<RecurrencePlot>& plots) {
    if (plots.empty()) throw ShapeError("joint recurrence needs at least one plot");
    const auto n_rows = plots.front().n_rows();
    const auto n_cols = plots.front().n_cols();
    std::uint32_t theiler = 0;
    for (const auto& p : plots) {
        if (p.n_rows() != n_rows || p.n_cols() != n_cols)
            throw ShapeError("joint recurrence over mismatched plot dimensions: " +
                             std::to_string(p.n_rows()) + "x" + std::to_string(p.n_cols()) +
                             " vs " + std::to_string(n_rows) + "x" + std::to_string(n_cols));
        theiler = std::max(theiler, p.theiler());
    }
    std::vector<RpPoint> acc = plots.front().points();
    for (std::size_t k = 1; k < plots.size(); ++k) {
        std::vector<RpPoint> next;
        std::set_intersection(acc.begin(), acc.end(), plots[k].points().begin(),
                              plots[k].points().end(), std::back_inserter(next));
        acc = std::move(next);
    }
    return RecurrencePlot(n_rows, n_cols, std::move(acc), PlotKind::Joint, theiler);
}

namespace {

bool parse_double(const std::string& field, double& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool is_integer_field(const std::string& field) {
    if (field.empty()) return false;
    return std::all_of(field.begin(), field.end(),
                       [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string f;
    while (ss >> f) fields.push_back(f);
    return fields;
}

} // namespace

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open embeddings file: " + path.string());
    EmbeddingTable table;
    std::string line;
    std::size_t line_no = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (first_content_line && fields.size() == 2 && is_integer_field(fields[0]) &&
            is_integer_field(fields[1])) {
            first_content_line = false; // "V D" header
            continue;
        }
        first_content_line = false;
        if (fields.size() < 2)
            throw ParseError("embeddings line " + std::to_string(line_no) +
                             ": expected word plus components");
        std::vector<double> vec(fields.size() - 1);
        for (std::size_t c = 1; c < fields.size(); ++c) {
            if (!parse_double(fields[c], vec[c - 1]))
                throw ParseError("embeddings line " + std::to_string(line_no) +
                                 ": non-numeric component '" + fields[c] + "'");
        }
        if (table.dim == 0) {
            table.dim = static_cast<int>(vec.size());
        } else if (static_cast<int>(vec.size()) != table.dim) {
            throw ParseError("embeddings line " + std::to_string(line_no) + ": expected " +
                             std::to_string(table.dim) + " components, got " +
                             std::to_string(vec.size()));
        }
        table.vectors[fields[0]] = std::move(vec);
    }
    return table;
}

TrajectoryMatrix build_trajectory(const TokenSequence& seq, const EmbeddingTable& table,
                                  OovPolicy oov) {
    TrajectoryMatrix traj;
    traj.dim = static_cast<std::size_t>(table.dim);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& surface = seq.surface(seq.token_at(i));
        auto it = table.vectors.find(surface);
        if (it == table.vectors.end()) {
            if (oov == OovPolicy::Error)
                throw DataError("token '" + surface + "' at position " + std::to_string(i) +
                                " not in embedding table");
            continue;
        }
        traj.rows.push_back(it->second);
        traj.index_map.push_back(i);
    }
    // Column z-scores, population convention; constant columns go to zero.
    const std::size_t t = traj.rows.size();
    if (t > 0) {
        for (std::size_t c = 0; c < traj.dim; ++c) {
            double m = 0.0;
            for (const auto& row : traj.rows) m += row[c];
            m /= static_cast<double>(t);
            double var = 0.0;
            for (const auto& row : traj.rows) var += (row[c] - m) * (row[c] - m);
            var /= static_cast<double>(t);
            if (var > 0.0) {
                const double sd = std::sqrt(var);
                for (auto& row : traj.rows) row[c] = (row[c] - m) / sd;
            } else {
                for (auto& row : traj.rows) row[c] = 0.0;
            }
        }
    }
    traj.zscored = true;
    return traj;
}

namespace {

double row_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d2 = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) d2 += (a[c] - b[c]) * (a[c] - b[c]);
    return std::sqrt(d2);
}

} // namespace

RecurrencePlot semantic_rp(const TrajectoryMatrix& traj, double radius) {
    if (radius < 0.0) throw RangeError("radius must be non-negative");
    if (!traj.zscored) throw DataError("semantic recurrence needs a z-scored trajectory");
    const std::size_t t = traj.rows.size();
    std::vector<RpPoint> points;
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            if (row_distance(traj.rows[i], traj.rows[j]) <= radius) {
                points.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                points.push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i)});
            }
        }
    }
    return RecurrencePlot(static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t),
                          std::move(points), PlotKind::Thresholded, 1);
}

RadiusSearch radius_for_target_rr(const TrajectoryMatrix& traj, double target_rr) {
    const std::size_t t = traj.rows.size();
    if (t < 2) throw InsufficientDataError("radius search needs at least 2 trajectory rows");
    if (target_rr <= 0.0 || target_rr >= 1.0) throw RangeError("target RR must lie in (0,1)");

    std::vector<double> distances;
    distances.reserve(t * (t - 1) / 2);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
            distances.push_back(row_distance(traj.rows[i], traj.rows[j]));
    std::sort(distances.begin(), distances.end());

    const double tt = static_cast<double>(t) * static_cast<double>(t);
    const auto rr_at = [&](double r) {
        const auto pairs = std::upper_bound(distances.begin(), distances.end(), r) -
                           distances.begin();
        return 2.0 * static_cast<double>(pairs) / tt;
    };
    constexpr double tol = 0.005;

    const double rr_zero = rr_at(0.0);
    if (target_rr <= rr_zero) return {0.0, rr_zero, std::abs(rr_zero - target_rr) <= tol};
    const double max_dist = distances.back();
    const double rr_max = rr_at(max_dist);
    if (target_rr >= rr_max) return {max_dist, rr_max, std::abs(rr_max - target_rr) <= tol};

    // When the first jump already overshoots, no radius can come closer
    // than the boundary; report radius 0 unmet.
    const auto first_pos = std::find_if(distances.begin(), distances.end(),
                                        [](double d) { return d > 0.0; });
    if (first_pos != distances.end()) {
        const double rr_first = rr_at(*first_pos);
        if (rr_first > target_rr + tol && rr_zero < target_rr - tol) return {0.0, rr_zero, false};
    }

    double lo = 0.0, hi = max_dist;
    double mid = hi, achieved = rr_max;
    for (int iter = 0; iter < 50; ++iter) {
        mid = 0.5 * (lo + hi);
        achieved = rr_at(mid);
        if (std::abs(achieved - target_rr) <= tol) return {mid, achieved, true};
        if (achieved < target_rr)
            lo = mid;
        else
            hi = mid;
    }
    return {mid, achieved, false};
}

} // namespace recurnlp
