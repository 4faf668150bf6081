#pragma once

#include "recur2d/problem.hpp"
#include "recur2d/solvers.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace recur2d {

class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* instance_magic = "RECUR2D 1";
inline constexpr const char* csv_header =
    "solver,n,seed,mode,rounds,compositions,muladds,elapsed_ns,max_dev";

/// A parsed instance in whichever scalar mode its file declared.
using AnyProblem = std::variant<RecurrenceProblem<double>, RecurrenceProblem<Rational>>;

inline ScalarMode mode_of(const AnyProblem& p) {
    return std::holds_alternative<RecurrenceProblem<Rational>>(p) ? ScalarMode::exact
                                                                  : ScalarMode::f64;
}

inline int size_of(const AnyProblem& p) {
    return std::visit([](const auto& q) { return q.n; }, p);
}

namespace detail {

// Tokenizes one line; a token starting with '#' ends the line (comment).
inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '#') break;
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

struct LineReader {
    std::istream& in;
    int lineno = 0;

    // Next line that carries tokens; skips blanks and comment lines.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            tokens = tokenize(line);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + message);
    }

    std::vector<std::string> expect(const std::string& what) {
        std::vector<std::string> tokens;
        if (!next(tokens)) throw ParseError("unexpected end of input, expected " + what);
        return tokens;
    }
};

template <class S>
std::vector<S> parse_row(LineReader& reader, int n, const std::string& what) {
    const auto tokens = reader.expect(what);
    if (static_cast<int>(tokens.size()) != n)
        reader.fail(what + ": expected " + std::to_string(n) + " scalars, got " +
                    std::to_string(tokens.size()));
    std::vector<S> row;
    row.reserve(std::size_t(n));
    for (const auto& tok : tokens) {
        try {
            row.push_back(ScalarTraits<S>::from_text(tok));
        } catch (const std::invalid_argument& e) {
            reader.fail(what + ": " + e.what());
        }
    }
    return row;
}

template <class S>
void parse_block_keyword(LineReader& reader, const char* keyword) {
    const auto tokens = reader.expect(std::string("block keyword '") + keyword + "'");
    if (tokens.size() != 1 || tokens[0] != keyword)
        reader.fail(std::string("expected block keyword '") + keyword + "', got '" + tokens[0] + "'");
}

template <class S>
RecurrenceProblem<S> parse_body(LineReader& reader, int n) {
    RecurrenceProblem<S> p{n, Grid<S>(n), Grid<S>(n), Grid<S>(n), {}, {}};
    const struct {
        const char* keyword;
        Grid<S>* grid;
    } blocks[] = {{"A", &p.a}, {"B", &p.b}, {"C", &p.c}};
    for (const auto& block : blocks) {
        parse_block_keyword<S>(reader, block.keyword);
        for (int i = 1; i <= n; ++i) {
            const auto row = parse_row<S>(reader, n, std::string(block.keyword) + " row " + std::to_string(i));
            for (int j = 1; j <= n; ++j) block.grid->at(i, j) = row[std::size_t(j - 1)];
        }
    }
    parse_block_keyword<S>(reader, "C0J");
    p.north = parse_row<S>(reader, n, "C0J");
    parse_block_keyword<S>(reader, "CI0");
    p.west = parse_row<S>(reader, n, "CI0");
    return p;
}

}  // namespace detail

inline AnyProblem parse_instance(std::istream& in) {
    detail::LineReader reader{in};
    const auto magic = reader.expect("header");
    if (magic.size() != 2 || magic[0] != "RECUR2D" || magic[1] != "1")
        reader.fail("expected header 'RECUR2D 1'");
    const auto n_line = reader.expect("'n <N>'");
    if (n_line.size() != 2 || n_line[0] != "n") reader.fail("expected 'n <N>'");
    int n = 0;
    try {
        n = std::stoi(n_line[1]);
    } catch (const std::exception&) {
        reader.fail("invalid grid size '" + n_line[1] + "'");
    }
    if (n < 1) reader.fail("grid size must be >= 1, got " + std::to_string(n));
    const auto mode_line = reader.expect("'mode <exact|f64>'");
    if (mode_line.size() != 2 || mode_line[0] != "mode") reader.fail("expected 'mode <exact|f64>'");
    ScalarMode mode;
    try {
        mode = parse_mode(mode_line[1]);
    } catch (const std::invalid_argument& e) {
        reader.fail(e.what());
    }
    if (mode == ScalarMode::exact) return detail::parse_body<Rational>(reader, n);
    return detail::parse_body<double>(reader, n);
}

inline AnyProblem parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

template <class S>
std::string serialize_instance(const RecurrenceProblem<S>& p) {
    validate(p);
    std::string out;
    out += instance_magic;
    out += "\nn " + std::to_string(p.n);
    out += std::string("\nmode ") + mode_name(ScalarTraits<S>::mode) + "\n";
    const auto emit_grid = [&](const char* keyword, const Grid<S>& g) {
        out += keyword;
        out += '\n';
        for (int i = 1; i <= p.n; ++i) {
            for (int j = 1; j <= p.n; ++j) {
                if (j > 1) out += ' ';
                out += ScalarTraits<S>::to_text(g.at(i, j));
            }
            out += '\n';
        }
    };
    emit_grid("A", p.a);
    emit_grid("B", p.b);
    emit_grid("C", p.c);
    const auto emit_row = [&](const char* keyword, const std::vector<S>& row) {
        out += keyword;
        out += '\n';
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ' ';
            out += ScalarTraits<S>::to_text(row[k]);
        }
        out += '\n';
    };
    emit_row("C0J", p.north);
    emit_row("CI0", p.west);
    return out;
}

/// Solution file: n lines of n scalars, row i holds w(i, 1..n).
template <class S>
std::string serialize_solution(const GridSolution<S>& s) {
    std::string out;
    for (int i = 1; i <= s.size(); ++i) {
        for (int j = 1; j <= s.size(); ++j) {
            if (j > 1) out += ' ';
            out += ScalarTraits<S>::to_text(s.at(i, j));
        }
        out += '\n';
    }
    return out;
}

template <class S>
GridSolution<S> parse_solution(std::istream& in, int n) {
    detail::LineReader reader{in};
    Grid<S> w(n);
    for (int i = 1; i <= n; ++i) {
        const auto row = detail::parse_row<S>(reader, n, "solution row " + std::to_string(i));
        for (int j = 1; j <= n; ++j) w.at(i, j) = row[std::size_t(j - 1)];
    }
    return w;
}

/// One CSV row matching csv_header.
inline std::string csv_record(const SolveReport& r, std::uint64_t seed, ScalarMode mode) {
    std::string out;
    out += r.solver;
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(seed);
    out += ',';
    out += mode_name(mode);
    out += ',' + std::to_string(r.rounds);
    out += ',' + std::to_string(r.compositions);
    out += ',' + std::to_string(r.muladds);
    out += ',' + std::to_string(r.elapsed_ns);
    out += ',' + ScalarTraits<double>::to_text(r.max_deviation);
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

inline AnyProblem load_instance(const std::string& path) {
    std::istringstream in(read_file(path));
    return parse_instance(in);
}

}  // namespace recur2d
