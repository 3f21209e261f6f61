#include "tprod/tensor_io.hpp"

#include "tprod/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace tprod {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return tokens;
}

bool is_comment(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first != std::string_view::npos && line[first] == '#';
}

std::size_t parse_dimension(const Token& tok, std::size_t line) {
    long long v = 0;
    const auto* end = tok.text.data() + tok.text.size();
    const auto [ptr, ec] = std::from_chars(tok.text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("expected an integer dimension, found '" + std::string(tok.text) + "'", line,
                         tok.column);
    }
    if (v <= 0) {
        throw ParseError("dimensions must be positive, found " + std::string(tok.text), line, tok.column);
    }
    return static_cast<std::size_t>(v);
}

double parse_value(const Token& tok, std::size_t line) {
    std::string_view text = tok.text;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("expected a number, found '" + std::string(tok.text) + "'", line, tok.column);
    }
    if (!std::isfinite(v)) {
        throw ParseError("non-finite value '" + std::string(tok.text) + "'", line, tok.column);
    }
    return v;
}

} // namespace

Tensor3 parse_tensor(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    Dims dims;
    bool have_header = false;
    std::vector<double> data;
    std::size_t rows_in_slice = 0;
    std::size_t slices_done = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) {
            continue;
        }
        const std::vector<Token> tokens = tokenize(line);
        if (!have_header) {
            if (tokens.empty()) {
                continue;
            }
            if (tokens.size() != 3) {
                throw ParseError("header must hold exactly three dimensions m n p", line_no,
                                 tokens.size() > 3 ? tokens[3].column : 1);
            }
            dims = {parse_dimension(tokens[0], line_no), parse_dimension(tokens[1], line_no),
                    parse_dimension(tokens[2], line_no)};
            data.reserve(dims.size());
            have_header = true;
            continue;
        }
        if (tokens.empty()) {
            if (rows_in_slice != 0) {
                throw ParseError("blank line inside slice " + std::to_string(slices_done + 1) + " after " +
                                     std::to_string(rows_in_slice) + " of " + std::to_string(dims.m) + " rows",
                                 line_no, 1);
            }
            continue;
        }
        if (slices_done == dims.p) {
            throw ParseError("more rows than the " + std::to_string(dims.m * dims.p) +
                                 " declared by the header",
                             line_no, tokens[0].column);
        }
        if (tokens.size() != dims.n) {
            const std::size_t col = tokens.size() > dims.n ? tokens[dims.n].column : line.size() + 1;
            throw ParseError("expected " + std::to_string(dims.n) + " values, found " +
                                 std::to_string(tokens.size()),
                             line_no, col);
        }
        for (const Token& tok : tokens) {
            data.push_back(parse_value(tok, line_no));
        }
        if (++rows_in_slice == dims.m) {
            rows_in_slice = 0;
            ++slices_done;
        }
    }
    if (!have_header) {
        throw ParseError("missing header line 'm n p'", line_no + 1, 1);
    }
    if (slices_done != dims.p || rows_in_slice != 0) {
        throw ParseError("expected " + std::to_string(dims.m * dims.p) + " rows of data, found " +
                             std::to_string(slices_done * dims.m + rows_in_slice),
                         line_no + 1, 1);
    }
    return Tensor3(dims.m, dims.n, dims.p, std::move(data));
}

Tensor3 parse_tensor_string(const std::string& text) {
    std::istringstream in(text);
    return parse_tensor(in);
}

std::string format_tensor(const Tensor3& t) {
    std::string out = std::to_string(t.rows()) + " " + std::to_string(t.cols()) + " " +
                      std::to_string(t.tubes()) + "\n";
    char buf[64];
    for (std::size_t k = 0; k < t.tubes(); ++k) {
        if (k > 0) {
            out += '\n';
        }
        for (std::size_t i = 0; i < t.rows(); ++i) {
            for (std::size_t j = 0; j < t.cols(); ++j) {
                const auto [ptr, ec] =
                    std::to_chars(buf, buf + sizeof buf, t(i, j, k), std::chars_format::general, 17);
                if (j > 0) {
                    out += ' ';
                }
                out.append(buf, ptr);
            }
            out += '\n';
        }
    }
    return out;
}

Tensor3 read_tensor(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open tensor file '" + path + "'");
    }
    return parse_tensor(in);
}

void write_tensor(const std::string& path, const Tensor3& t) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write tensor file '" + path + "'");
    }
    out << format_tensor(t);
    if (!out) {
        throw IoError("write failed for '" + path + "'");
    }
}

nlohmann::json report_to_json(const ResidualReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks()) {
        checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    return {{"operation", report.operation()}, {"checks", checks}, {"pass", report.pass()},
            {"seconds", report.seconds()}};
}

void write_report(const std::string& path, const ResidualReport& report) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write report '" + path + "'");
    }
    out << report_to_json(report).dump(2) << '\n';
}

} // namespace tprod
