#include "asbg/asm.hpp"

#include <sstream>

namespace asbg {

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

SignMatrix::SignMatrix(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw Error(ErrorKind::OutOfRange, "sign matrix must be at least 1x1");
  rows_ = rows.size();
  cols_ = rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::OutOfRange, "ragged sign matrix");
    for (int x : row) {
      if (x < -1 || x > 1) throw Error(ErrorKind::OutOfRange, "entries must be -1, 0 or 1");
      data_.push_back(static_cast<std::int8_t>(x));
    }
  }
}

void SignMatrix::set(std::size_t i, std::size_t j, int value) {
  if (value < -1 || value > 1) throw Error(ErrorKind::OutOfRange, "entries must be -1, 0 or 1");
  data_[i * cols_ + j] = static_cast<std::int8_t>(value);
}

SignMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<int> row;
    std::string tok;
    while (fields >> tok) {
      if (tok == "1" || tok == "+1") {
        row.push_back(1);
      } else if (tok == "0") {
        row.push_back(0);
      } else if (tok == "-1") {
        row.push_back(-1);
      } else {
        throw Error(ErrorKind::MalformedInput, "bad matrix entry '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return SignMatrix(rows);
}

std::string format_matrix(const SignMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

template <typename At>
bool alternating_line(std::size_t len, At at) {
  int sum = 0;
  int last = -1;  // a line must open with +1
  for (std::size_t k = 0; k < len; ++k) {
    int x = at(k);
    if (x == 0) continue;
    if (x == last) return false;
    last = x;
    sum += x;
  }
  return sum == 1;
}

}  // namespace

bool is_asm(const SignMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!alternating_line(m.cols(), [&](std::size_t j) { return m(i, j); })) return false;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!alternating_line(m.rows(), [&](std::size_t i) { return m(i, j); })) return false;
  return m.rows() > 0 && m.cols() > 0;
}

std::vector<std::string> asm_row_names(std::size_t rows) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= rows; ++i) out.push_back("r" + std::to_string(i));
  return out;
}

std::vector<std::string> asm_col_names(std::size_t cols) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= cols; ++j) out.push_back("c" + std::to_string(j));
  return out;
}

ColouredGraph asm_to_asbg(const SignMatrix& m) {
  if (!is_asm(m)) throw Error(ErrorKind::NotAnAsm, "matrix is not an alternating sign matrix");
  auto rows = asm_row_names(m.rows());
  auto cols = asm_col_names(m.cols());
  std::vector<std::string> names = rows;
  names.insert(names.end(), cols.begin(), cols.end());
  std::vector<NamedEdge> edges;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) edges.emplace_back(rows[i], cols[j]);
  Graph g(std::move(names), std::move(edges));
  Colouring c{std::vector<Colour>(g.edge_count(), Colour::Blue)};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) == -1) c[*g.edge_between(g.id(rows[i]), g.id(cols[j]))] = Colour::Red;
  return make_coloured(std::move(g), std::move(c));
}

SignMatrix asbg_to_asm(const ColouredGraph& cg, const std::vector<std::string>& row_order,
                       const std::vector<std::string>& col_order) {
  const Graph& g = cg.graph;
  if (row_order.empty() || col_order.empty())
    throw Error(ErrorKind::InvalidOrder, "row and column orders must be non-empty");
  std::vector<int> role(g.vertex_count(), 0);  // 1 row, 2 column
  auto claim = [&](const std::vector<std::string>& order, int r) {
    for (const auto& name : order) {
      auto v = g.find(name);
      if (!v) throw Error(ErrorKind::InvalidOrder, "order names unknown vertex '" + name + "'");
      if (role[*v] != 0) throw Error(ErrorKind::InvalidOrder, "vertex '" + name + "' listed twice");
      role[*v] = r;
    }
  };
  claim(row_order, 1);
  claim(col_order, 2);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (role[v] == 0) throw Error(ErrorKind::InvalidOrder, "order misses vertex '" + g.name(v) + "'");
    if (g.degree(v) == 0)
      throw Error(ErrorKind::InvalidOrder, "isolated vertex '" + g.name(v) + "' has no matrix line");
  }
  for (const Edge& e : g.edges())
    if (role[e.u] == role[e.v])
      throw Error(ErrorKind::InvalidOrder, "orders are not the two sides of a bipartition");
  SignMatrix m(row_order.size(), col_order.size());
  for (std::size_t i = 0; i < row_order.size(); ++i) {
    VertexId r = g.id(row_order[i]);
    for (std::size_t j = 0; j < col_order.size(); ++j) {
      if (auto e = g.edge_between(r, g.id(col_order[j])))
        m.set(i, j, cg.colouring[*e] == Colour::Blue ? 1 : -1);
    }
  }
  return m;
}

namespace {

// Column partial sums of an ASM prefix are always 0 or 1, and a +1 may only
// land on a 0-column, a -1 only on a 1-column. Every completed row adds 1 to
// the total, so after n rows all columns are at 1 without a final check.
struct AsmCounter {
  int n;
  std::vector<int> col_sum;
  std::uint64_t count = 0;

  void row(int r) {
    if (r == n) {
      ++count;
      return;
    }
    fill(r, 0, 0);
  }

  // `open` is the running row sum (0 before a +1 is placed, 1 after).
  void fill(int r, int j, int open) {
    if (j == n) {
      if (open == 1) row(r + 1);
      return;
    }
    fill(r, j + 1, open);
    if (open == 0 && col_sum[j] == 0) {
      col_sum[j] = 1;
      fill(r, j + 1, 1);
      col_sum[j] = 0;
    }
    if (open == 1 && col_sum[j] == 1) {
      col_sum[j] = 0;
      fill(r, j + 1, 0);
      col_sum[j] = 1;
    }
  }
};

}  // namespace

std::uint64_t count_asms(int n) {
  if (n < 1 || n > kMaxAsmOrder)
    throw Error(ErrorKind::OutOfRange, "count_asms supports 1 <= n <= 5");
  AsmCounter counter{n, std::vector<int>(n, 0)};
  counter.row(0);
  return counter.count;
}

}  // namespace asbg
