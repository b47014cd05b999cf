#include "vcdim/concept_matrix.hpp"

#include "vcdim/core.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace vcdim {

ConceptMatrix::ConceptMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
    if (rows_ == 0 || cols_ == 0)
        throw ContractViolation("concept matrix needs at least one row and one column");
    if (bits_.size() != rows_ * cols_)
        throw ContractViolation("concept matrix data size does not match its shape");
    for (auto b : bits_)
        if (b > 1)
            throw ContractViolation("concept matrix entries must be 0 or 1");
}

ConceptMatrix::ConceptMatrix(const std::vector<std::string>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    if (rows_ == 0 || cols_ == 0)
        throw ContractViolation("concept matrix needs at least one row and one column");
    bits_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ContractViolation("ragged concept matrix row \"" + r + "\"");
        for (char ch : r) {
            if (ch != '0' && ch != '1')
                throw ContractViolation("concept matrix entries must be 0 or 1");
            bits_.push_back(std::uint8_t(ch - '0'));
        }
    }
}

ConceptMatrix ConceptMatrix::canonicalized() const {
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<std::uint8_t> bits;
    std::size_t kept = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        auto row_bits = row(r);
        std::vector<std::uint8_t> key(row_bits.begin(), row_bits.end());
        if (seen.insert(key).second) {
            bits.insert(bits.end(), key.begin(), key.end());
            ++kept;
        }
    }
    return ConceptMatrix(kept, cols_, std::move(bits));
}

std::size_t ConceptMatrix::distinct_rows() const { return canonicalized().rows(); }

std::string ConceptMatrix::row_string(std::size_t r) const {
    std::string s(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c)
        s[c] = char('0' + at(r, c));
    return s;
}

ConceptMatrix read_concept_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t rows = 0, cols = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream header(line);
        long long r = -1, c = -1;
        std::string rest;
        if (!(header >> r >> c) || (header >> rest))
            throw MatrixParseError(line_no, "expected header \"rows cols\"");
        if (r < 1 || c < 1)
            throw MatrixParseError(line_no, "rows and cols must be positive");
        rows = std::size_t(r);
        cols = std::size_t(c);
        break;
    }
    if (rows == 0)
        throw MatrixParseError(line_no + 1, "missing header \"rows cols\"");

    std::vector<std::uint8_t> bits;
    bits.reserve(rows * cols);
    std::size_t read = 0;
    while (read < rows && std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.size() != cols)
            throw MatrixParseError(line_no, "row has " + std::to_string(line.size()) +
                                                " entries, expected " + std::to_string(cols));
        for (char ch : line) {
            if (ch != '0' && ch != '1')
                throw MatrixParseError(line_no, std::string("invalid entry '") + ch + "'");
            bits.push_back(std::uint8_t(ch - '0'));
        }
        ++read;
    }
    if (read < rows)
        throw MatrixParseError(line_no + 1, "expected " + std::to_string(rows) + " rows, found " +
                                            std::to_string(read));
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw MatrixParseError(line_no, "unexpected content after the last row");
    }
    return ConceptMatrix(rows, cols, std::move(bits));
}

ConceptMatrix load_concept_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open matrix file " + path);
    return read_concept_matrix(in);
}

void write_concept_matrix(std::ostream& out, const ConceptMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r)
        out << m.row_string(r) << '\n';
}

} // namespace vcdim
