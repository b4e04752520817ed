#pragma once

#include "chanspace/rational.hpp"
#include "chanspace/weak_order.hpp"

#include <vector>

namespace chanspace {

class Ranking;

// Dense rational grid, row-major. Rows index inputs, columns outputs.
class Matrix {
public:
    Matrix(int rows, int cols);
    static Matrix from_rows(std::vector<std::vector<Rat>> rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    const Rat& at(int row, int col) const;
    Rat& at(int row, int col);

    std::vector<Rat> column(int col) const;
    Rat column_sum(int col) const;
    Rat row_sum(int row) const;

    bool operator==(const Matrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> cells_;
};

// Throws NegativeEntry on the first entry below zero.
void require_non_negative(const Matrix& grid);

struct ChannelOptions {
    Rat row_sum_tolerance{0};
    bool normalize_rows = false;
};

// Row-stochastic matrix of conditional probabilities
// entries(i, j) = Pr(output j received | input i sent).
class Channel {
public:
    // Validates non-negativity and unit row sums (within the tolerance;
    // exact by default). With normalize_rows, rows with positive sums are
    // rescaled to sum exactly 1 before the check.
    static Channel validated(Matrix entries, const ChannelOptions& options = {});

    int inputs() const noexcept { return entries_.rows(); }
    int outputs() const noexcept { return entries_.cols(); }

    const Matrix& entries() const noexcept { return entries_; }
    const Rat& probability(int input, int output) const { return entries_.at(input, output); }

    std::vector<Rat> column(int output) const { return entries_.column(output); }
    Rat column_norm(int output) const { return entries_.column_sum(output); }

    bool operator==(const Channel& other) const = default;

private:
    explicit Channel(Matrix entries) : entries_(std::move(entries)) {}
    Matrix entries_;
};

// One weak order per output column; the combinatorial identity of a
// decoding cone in channel space.
class WeakOrderMatrix {
public:
    explicit WeakOrderMatrix(std::vector<WeakOrder> columns);

    int inputs() const noexcept { return columns_.front().size(); }
    int outputs() const noexcept { return static_cast<int>(columns_.size()); }

    const WeakOrder& column(int output) const;
    const std::vector<WeakOrder>& columns() const noexcept { return columns_; }

    bool operator==(const WeakOrderMatrix& other) const = default;

private:
    std::vector<WeakOrder> columns_;
};

WeakOrderMatrix weak_order_matrix(const Matrix& grid, const TieRule& tie = TieRule());
WeakOrderMatrix weak_order_matrix(const Channel& channel, const TieRule& tie = TieRule());

// Two channels share every maximum-likelihood decoder exactly when their
// weak order matrices coincide.
bool decoding_equivalent(const Matrix& p, const Matrix& q, const TieRule& tie = TieRule());
bool decoding_equivalent(const Channel& p, const Channel& q, const TieRule& tie = TieRule());

// Stable: every column tie-free, so the channel's cone is full-dimensional
// and small perturbations leave all decoding decisions unchanged.
bool is_stable(const Matrix& grid, const TieRule& tie = TieRule());
bool is_stable(const Channel& channel, const TieRule& tie = TieRule());

// Ranking of a tie-free column; throws UnstableColumn otherwise.
Ranking column_ranking(const Matrix& grid, int output, const TieRule& tie = TieRule());
Ranking column_ranking(const Channel& channel, int output, const TieRule& tie = TieRule());

}  // namespace chanspace
