#pragma once

#include "chipres/numeric.hpp"

#include <optional>
#include <vector>

namespace chipres {

/// Dense matrix over the rationals. Small sizes only; everything here is
/// exact, no floating point anywhere.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix transposed() const;
    RatMatrix operator*(const RatMatrix& other) const;
    bool operator==(const RatMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

/// Dense integer matrix; used for Laplacians and Smith normal form.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix to_rational() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent;
/// for underdetermined systems an arbitrary (deterministic) solution is
/// returned. Throws on dimension mismatch.
std::optional<std::vector<Rat>> rat_solve(const RatMatrix& A, const std::vector<Rat>& b);

struct RankDet {
    int rank = 0;
    Rat det;  // only meaningful for square inputs
};

/// Rank, and determinant when square, via Bareiss fraction-free elimination.
RankDet rank_det(const RatMatrix& A);

inline int rank_of(const RatMatrix& A) { return rank_det(A).rank; }

struct SmithResult {
    std::vector<Int> factors;  // d_1 | d_2 | ... (nonzero invariant factors)
    IntMatrix U, V;            // unimodular; U * A * V = diag(factors)
};

/// Smith normal form of an integer matrix, with transform matrices kept so
/// tests can certify the reduction.
SmithResult smith_normal_form(const IntMatrix& A);

/// A chain complex of finite-dimensional Q-vector spaces, given by boundary
/// maps D_1..D_k where D_i : C_i -> C_{i-1}. dims() recovers the ranks.
class ChainComplexQ {
public:
    /// d0 = dim C_0; boundaries[i] = D_{i+1}.
    ChainComplexQ(int dim0, std::vector<RatMatrix> boundaries);

    int length() const { return static_cast<int>(boundaries_.size()); }
    int dim(int i) const { return dims_[i]; }
    const RatMatrix& boundary(int i) const { return boundaries_[i - 1]; }

    /// Throws unless D_i * D_{i+1} = 0 for all i.
    void check_composition() const;

    /// rank H_i = dim C_i - rank D_i - rank D_{i+1}.
    std::vector<int> homology_ranks() const;

private:
    std::vector<int> dims_;
    std::vector<RatMatrix> boundaries_;
};

}  // namespace chipres
