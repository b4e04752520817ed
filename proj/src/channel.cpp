#include "chanspace/channel.hpp"

#include "chanspace/errors.hpp"
#include "chanspace/ranking.hpp"

namespace chanspace {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw Error(ErrorKind::domain, "matrix dimensions must be positive");
    cells_.resize(static_cast<size_t>(rows) * cols);
}

Matrix Matrix::from_rows(std::vector<std::vector<Rat>> rows) {
    if (rows.empty() || rows.front().empty())
        throw Error(ErrorKind::domain, "matrix must be nonempty");
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw Error(ErrorKind::domain, "matrix rows have unequal lengths");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

const Rat& Matrix::at(int row, int col) const {
    if (row < 0 || row >= rows_) throw IndexOutOfRange("row", row);
    if (col < 0 || col >= cols_) throw IndexOutOfRange("column", col);
    return cells_[static_cast<size_t>(row) * cols_ + col];
}

Rat& Matrix::at(int row, int col) {
    return const_cast<Rat&>(static_cast<const Matrix&>(*this).at(row, col));
}

std::vector<Rat> Matrix::column(int col) const {
    std::vector<Rat> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, col);
    return out;
}

Rat Matrix::column_sum(int col) const {
    Rat sum = 0;
    for (int i = 0; i < rows_; ++i) sum += at(i, col);
    return sum;
}

Rat Matrix::row_sum(int row) const {
    Rat sum = 0;
    for (int j = 0; j < cols_; ++j) sum += at(row, j);
    return sum;
}

void require_non_negative(const Matrix& grid) {
    for (int i = 0; i < grid.rows(); ++i)
        for (int j = 0; j < grid.cols(); ++j)
            if (grid.at(i, j) < 0) throw NegativeEntry(i, j);
}

Channel Channel::validated(Matrix entries, const ChannelOptions& options) {
    require_non_negative(entries);
    for (int i = 0; i < entries.rows(); ++i) {
        Rat sum = entries.row_sum(i);
        if (options.normalize_rows && sum > 0 && sum != 1) {
            for (int j = 0; j < entries.cols(); ++j) entries.at(i, j) /= sum;
            sum = 1;
        }
        Rat off = sum - 1;
        if (off < 0) off = -off;
        if (off > options.row_sum_tolerance) throw RowSumViolation(i, fraction_string(sum));
    }
    return Channel(std::move(entries));
}

WeakOrderMatrix::WeakOrderMatrix(std::vector<WeakOrder> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw Error(ErrorKind::domain, "weak order matrix must be nonempty");
    for (const auto& col : columns_)
        if (col.size() != columns_.front().size())
            throw DimensionMismatch("weak order columns have unequal sizes");
}

const WeakOrder& WeakOrderMatrix::column(int output) const {
    if (output < 0 || output >= outputs()) throw IndexOutOfRange("column", output);
    return columns_[output];
}

WeakOrderMatrix weak_order_matrix(const Matrix& grid, const TieRule& tie) {
    std::vector<WeakOrder> columns;
    columns.reserve(grid.cols());
    for (int j = 0; j < grid.cols(); ++j) columns.push_back(weak_order_of(grid.column(j), tie));
    return WeakOrderMatrix(std::move(columns));
}

WeakOrderMatrix weak_order_matrix(const Channel& channel, const TieRule& tie) {
    return weak_order_matrix(channel.entries(), tie);
}

bool decoding_equivalent(const Matrix& p, const Matrix& q, const TieRule& tie) {
    if (p.rows() != q.rows() || p.cols() != q.cols())
        throw DimensionMismatch(std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
                                " vs " + std::to_string(q.rows()) + "x" + std::to_string(q.cols()));
    return weak_order_matrix(p, tie) == weak_order_matrix(q, tie);
}

bool decoding_equivalent(const Channel& p, const Channel& q, const TieRule& tie) {
    return decoding_equivalent(p.entries(), q.entries(), tie);
}

bool is_stable(const Matrix& grid, const TieRule& tie) {
    for (int j = 0; j < grid.cols(); ++j)
        if (!weak_order_of(grid.column(j), tie).tie_free()) return false;
    return true;
}

bool is_stable(const Channel& channel, const TieRule& tie) {
    return is_stable(channel.entries(), tie);
}

Ranking column_ranking(const Matrix& grid, int output, const TieRule& tie) {
    if (output < 0 || output >= grid.cols()) throw IndexOutOfRange("column", output);
    WeakOrder order = weak_order_of(grid.column(output), tie);
    if (!order.tie_free()) throw UnstableColumn(output);
    return order.to_ranking();
}

Ranking column_ranking(const Channel& channel, int output, const TieRule& tie) {
    return column_ranking(channel.entries(), output, tie);
}

}  // namespace chanspace
