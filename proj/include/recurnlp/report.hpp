#ifndef RECURNLP_REPORT_HPP
#define RECURNLP_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "recurnlp/recurrence.hpp"

namespace recurnlp {

// Serialization of measure suites shared by the CLI subcommands.
// percent scales rr and det by 100 for display (the library itself
// stores fractions).

std::string measures_json(const RqaMeasures& m, std::uint32_t theiler, bool percent);

std::string measures_csv_header();
std::string measures_csv_row(const RqaMeasures& m, std::uint32_t theiler, bool percent);

// windowed_rqa output: header `window_start,...` plus one row per window.
std::string windowed_csv(const std::vector<std::pair<std::size_t, RqaMeasures>>& windows,
                         std::uint32_t theiler, bool percent);

// RFC-4180 field quoting (quotes fields containing comma, quote or
// newline; doubles embedded quotes). Lines are joined with LF.
std::string csv_escape(const std::string& field);

} // namespace recurnlp

#endif
