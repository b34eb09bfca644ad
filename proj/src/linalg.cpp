#include "chipres/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace chipres {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
    RatMatrix out(rows_, other.cols());
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < other.cols(); ++c)
                if (other.at(k, c) != 0) out.at(r, c) += a * other.at(k, c);
        }
    return out;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix IntMatrix::to_rational() const {
    RatMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = Rat(at(r, c));
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, other.cols());
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < other.cols(); ++c) out.at(r, c) += a * other.at(k, c);
        }
    return out;
}

std::optional<std::vector<Rat>> rat_solve(const RatMatrix& A, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("rat_solve: rhs length mismatch");
    const int nr = A.rows(), nc = A.cols();
    RatMatrix M(nr, nc + 1);
    for (int r = 0; r < nr; ++r) {
        for (int c = 0; c < nc; ++c) M.at(r, c) = A.at(r, c);
        M.at(r, nc) = b[r];
    }
    // Fraction-free forward elimination with implicit row swaps.
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (M.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = col; c <= nc; ++c) std::swap(M.at(piv, c), M.at(row, c));
        for (int r = row + 1; r < nr; ++r) {
            if (M.at(r, col) == 0) continue;
            Rat f = M.at(r, col) / M.at(row, col);
            for (int c = col; c <= nc; ++c) M.at(r, c) -= f * M.at(row, c);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < nr; ++r)
        if (M.at(r, nc) != 0) return std::nullopt;  // inconsistent
    std::vector<Rat> x(nc);
    for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
        int pc = pivot_col[i];
        Rat acc = M.at(i, nc);
        for (int c = pc + 1; c < nc; ++c)
            if (M.at(i, c) != 0) acc -= M.at(i, c) * x[c];
        x[pc] = acc / M.at(i, pc);
    }
    return x;
}

RankDet rank_det(const RatMatrix& A) {
    const int nr = A.rows(), nc = A.cols();
    // Clear denominators row by row, then run Bareiss on the integer matrix.
    IntMatrix M(nr, nc);
    Rat det_scale = 1;
    for (int r = 0; r < nr; ++r) {
        Int lcm = 1;
        for (int c = 0; c < nc; ++c) lcm = boost::multiprecision::lcm(lcm, den(A.at(r, c)));
        det_scale *= Rat(lcm);
        for (int c = 0; c < nc; ++c) {
            Rat v = A.at(r, c) * Rat(lcm);
            M.at(r, c) = num(v);
        }
    }
    Int prev = 1;
    int rank = 0, swaps = 0;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (M.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) {
            ++swaps;
            for (int c = 0; c < nc; ++c) std::swap(M.at(piv, c), M.at(row, c));
        }
        for (int r = row + 1; r < nr; ++r) {
            for (int c = col + 1; c < nc; ++c)
                M.at(r, c) = (M.at(row, col) * M.at(r, c) - M.at(r, col) * M.at(row, c)) / prev;
            M.at(r, col) = 0;
        }
        prev = M.at(row, col);
        ++rank;
        ++row;
    }
    RankDet out;
    out.rank = rank;
    if (nr == nc) {
        if (rank < nr)
            out.det = 0;
        else {
            Rat d = Rat(M.at(nr - 1, nr - 1)) / det_scale;
            out.det = (swaps % 2 == 0) ? d : -d;
        }
    }
    return out;
}

namespace {

// Applies the row operation rows (i, j) <- (a i + b j, c i + d j) to M, and
// mirrors it on the transform matrix U.
void row_op(IntMatrix& M, IntMatrix& U, int i, int j, const Int& a, const Int& b, const Int& c, const Int& d) {
    for (int k = 0; k < M.cols(); ++k) {
        Int mi = M.at(i, k), mj = M.at(j, k);
        M.at(i, k) = a * mi + b * mj;
        M.at(j, k) = c * mi + d * mj;
    }
    for (int k = 0; k < U.cols(); ++k) {
        Int ui = U.at(i, k), uj = U.at(j, k);
        U.at(i, k) = a * ui + b * uj;
        U.at(j, k) = c * ui + d * uj;
    }
}

void col_op(IntMatrix& M, IntMatrix& V, int i, int j, const Int& a, const Int& b, const Int& c, const Int& d) {
    for (int k = 0; k < M.rows(); ++k) {
        Int mi = M.at(k, i), mj = M.at(k, j);
        M.at(k, i) = a * mi + b * mj;
        M.at(k, j) = c * mi + d * mj;
    }
    for (int k = 0; k < V.rows(); ++k) {
        Int vi = V.at(k, i), vj = V.at(k, j);
        V.at(k, i) = a * vi + b * vj;
        V.at(k, j) = c * vi + d * vj;
    }
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A) {
    IntMatrix M = A;
    const int nr = M.rows(), nc = M.cols();
    SmithResult res;
    res.U = IntMatrix::identity(nr);
    res.V = IntMatrix::identity(nc);

    int t = 0;
    while (t < nr && t < nc) {
        // Find a nonzero pivot of minimal absolute value in the trailing block.
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < nr; ++r)
            for (int c = t; c < nc; ++c) {
                if (M.at(r, c) == 0) continue;
                Int a = abs(M.at(r, c));
                if (pr < 0 || a < best) { best = a; pr = r; pc = c; }
            }
        if (pr < 0) break;
        if (pr != t) row_op(M, res.U, t, pr, 0, 1, 1, 0);
        if (pc != t) col_op(M, res.V, t, pc, 0, 1, 1, 0);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < nr; ++r) {
                if (M.at(r, t) == 0) continue;
                Int q = M.at(r, t) / M.at(t, t);
                row_op(M, res.U, r, t, 1, -q, 0, 1);
                if (M.at(r, t) != 0) {
                    row_op(M, res.U, t, r, 0, 1, 1, 0);
                    clean = false;
                }
            }
            for (int c = t + 1; c < nc; ++c) {
                if (M.at(t, c) == 0) continue;
                Int q = M.at(t, c) / M.at(t, t);
                col_op(M, res.V, c, t, 1, -q, 0, 1);
                if (M.at(t, c) != 0) {
                    col_op(M, res.V, t, c, 0, 1, 1, 0);
                    clean = false;
                }
            }
        }
        // Enforce divisibility: fold any bad entry into the pivot's row.
        bool redo = false;
        for (int r = t + 1; r < nr && !redo; ++r)
            for (int c = t + 1; c < nc && !redo; ++c)
                if (M.at(r, c) % M.at(t, t) != 0) {
                    row_op(M, res.U, t, r, 1, 1, 0, 1);
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }
    for (int i = 0; i < t; ++i)
        if (M.at(i, i) < 0) {
            for (int k = 0; k < nc; ++k) M.at(i, k) = -M.at(i, k);
            for (int k = 0; k < res.U.cols(); ++k) res.U.at(i, k) = -res.U.at(i, k);
        }
    for (int i = 0; i < t; ++i) res.factors.push_back(M.at(i, i));
    return res;
}

ChainComplexQ::ChainComplexQ(int dim0, std::vector<RatMatrix> boundaries) : boundaries_(std::move(boundaries)) {
    dims_.push_back(dim0);
    for (size_t i = 0; i < boundaries_.size(); ++i) {
        if (boundaries_[i].rows() != dims_.back())
            throw std::invalid_argument("ChainComplexQ: boundary row count does not match previous rank");
        dims_.push_back(boundaries_[i].cols());
    }
}

void ChainComplexQ::check_composition() const {
    for (size_t i = 0; i + 1 < boundaries_.size(); ++i) {
        RatMatrix prod = boundaries_[i] * boundaries_[i + 1];
        for (int r = 0; r < prod.rows(); ++r)
            for (int c = 0; c < prod.cols(); ++c)
                if (prod.at(r, c) != 0) throw std::invalid_argument("ChainComplexQ: D_i * D_{i+1} != 0");
    }
}

std::vector<int> ChainComplexQ::homology_ranks() const {
    check_composition();
    const int k = length();
    std::vector<int> ranks(k + 1, 0);
    std::vector<int> brank(k + 2, 0);
    for (int i = 1; i <= k; ++i) brank[i] = rank_of(boundaries_[i - 1]);
    for (int i = 0; i <= k; ++i) ranks[i] = dims_[i] - brank[i] - brank[i + 1];
    return ranks;
}

}  // namespace chipres
