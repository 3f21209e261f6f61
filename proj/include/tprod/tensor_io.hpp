#pragma once

// Text tensor files and JSON residual reports.
//
// Tensor file layout:
//
//     # optional comment lines
//     m n p
//     <m lines of n numbers: slice 1>
//
//     <m lines of n numbers: slice 2>
//     ...
//
// Numbers are written with 17 significant digits, so a write/read cycle reproduces every
// double exactly. '#' starts a comment anywhere on a line.

#include "tprod/report.hpp"
#include "tprod/tensor3.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace tprod {

/// Throws ParseError (with line and column) on malformed input.
Tensor3 parse_tensor(std::istream& in);
Tensor3 parse_tensor_string(const std::string& text);
std::string format_tensor(const Tensor3& t);

/// Throws IoError when the file cannot be opened, ParseError when it is malformed.
Tensor3 read_tensor(const std::string& path);
void write_tensor(const std::string& path, const Tensor3& t);

/// {operation, checks: [{name, residual, tolerance, pass}], pass, seconds}
nlohmann::json report_to_json(const ResidualReport& report);
void write_report(const std::string& path, const ResidualReport& report);

} // namespace tprod
