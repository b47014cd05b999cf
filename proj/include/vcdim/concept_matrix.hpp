#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcdim {

// 0-1 matrix of a finite class over a finite domain: rows are the concepts
// h_1..h_l, columns the domain points x_1..x_m, M(i,j) = h_i(x_j).
class ConceptMatrix {
public:
    ConceptMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);
    explicit ConceptMatrix(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
    std::span<const std::uint8_t> row(std::size_t r) const {
        return {bits_.data() + r * cols_, cols_};
    }

    // Copy with duplicate rows removed, first occurrences kept in order.
    ConceptMatrix canonicalized() const;
    std::size_t distinct_rows() const;

    std::string row_string(std::size_t r) const;

    friend bool operator==(const ConceptMatrix&, const ConceptMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> bits_;
};

// Reported with the 1-based line number of the offending input line.
class MatrixParseError : public std::runtime_error {
public:
    MatrixParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text format: first line "rows cols", then `rows` lines of exactly `cols`
// characters from {'0','1'}. Blank trailing lines are ignored.
ConceptMatrix read_concept_matrix(std::istream& in);
ConceptMatrix load_concept_matrix(const std::string& path);
void write_concept_matrix(std::ostream& out, const ConceptMatrix& m);

} // namespace vcdim
