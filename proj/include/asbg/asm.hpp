#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "asbg/graph.hpp"

namespace asbg {

/// Dense k x l matrix over {-1, 0, +1}, row-major.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t rows, std::size_t cols);
  /// Throws OutOfRange for ragged rows, empty input or entries outside {-1,0,1}.
  explicit SignMatrix(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, int value);

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> data_;
};

/// Whitespace-separated rows, one per line.
SignMatrix parse_matrix(std::string_view text);
std::string format_matrix(const SignMatrix& m);

/// Row and column sums are 1 and the non-zeros of every line alternate in
/// sign (so each line starts and ends with +1).
bool is_asm(const SignMatrix& m);

/// Row i becomes vertex "r<i>", column j becomes "c<j>" (1-based); an edge
/// for each non-zero entry, blue for +1 and red for -1.
ColouredGraph asm_to_asbg(const SignMatrix& m);

std::vector<std::string> asm_row_names(std::size_t rows);
std::vector<std::string> asm_col_names(std::size_t cols);

/// Reads the sign pattern back under the given vertex orders. The two
/// orders must enumerate the two sides of a bipartition of the graph and
/// the graph must have no isolated vertices.
SignMatrix asbg_to_asm(const ColouredGraph& cg, const std::vector<std::string>& row_order,
                       const std::vector<std::string>& col_order);

constexpr int kMaxAsmOrder = 5;

/// Number of n x n ASMs for 1 <= n <= 5, by row-by-row backtracking over
/// column partial sums.
std::uint64_t count_asms(int n);

}  // namespace asbg
