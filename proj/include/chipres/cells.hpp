#pragma once

#include "chipres/divisor.hpp"
#include "chipres/graph.hpp"
#include "chipres/ideals.hpp"
#include "chipres/monomial.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chipres {

/// Acyclic partial orientation: a connected partition of the vertices with
/// an acyclic orientation of the quotient. The stored direction of a
/// crossing edge is "uphill" (toward the larger value of a realizing
/// function), so a source block is a local minimum.
struct APOrientation {
    int nblocks = 0;
    std::vector<int> block_of;       // vertex -> block id (blocks ordered by least member)
    std::vector<int> active;         // uphill-active oriented edge ids, sorted
    std::uint64_t active_mask = 0;   // bit o set iff oriented edge o is active
    std::uint32_t crossing_mask = 0; // bit k set iff edge k crosses blocks
    bool sourced = false;            // unique source block containing q

    int dim_bounded() const { return nblocks - 2; }
    int dim_central() const { return nblocks - 1; }
};

enum class CellMode { Sourced, Central };

/// All acyclic partial orientations of the requested mode, grouped by block
/// count in a deterministic order.
std::vector<APOrientation> enumerate_cells(const Multigraph& g, int q, CellMode mode);

enum class ComplexKind { Bounded, Torus };

struct FacetRef {
    int cell = -1;        // index into the (dim-1) layer
    int sign = 0;         // incidence sign
    Monomial face_label;  // label of the actual facet occurrence (Laurent for torus translates)
};

struct Cell {
    APOrientation apo;
    int dim = 0;
    Monomial label;                        // monomial label of the (canonical) cell
    std::vector<int> vertex_ids;           // bounded: indices into CellComplex::bonds
    std::vector<std::vector<Rat>> verts;   // vertex coordinates (ambient Q^n or Q^m)
    std::vector<std::vector<Rat>> frame;   // reference orientation frame (dim vectors)
    std::vector<FacetRef> facets;
};

/// The bounded complex B_G^{q,c} of the graphic arrangement, or the
/// origin-star/torus quotient complex of the cut-lattice tiling.
struct CellComplex {
    ComplexKind kind = ComplexKind::Bounded;
    int n = 0, m = 0, q = 0;
    Rat c;                               // slice parameter (bounded)
    std::vector<std::vector<Cell>> cells;  // cells[d]
    std::vector<VertexSet> bonds;          // bounded: bond registry (order of enumerate_bonds)

    int top_dim() const { return static_cast<int>(cells.size()) - 1; }
    int f_number(int d) const {
        return (d >= 0 && d < static_cast<int>(cells.size())) ? static_cast<int>(cells[d].size()) : 0;
    }
};

/// Builds the labeled complex; c must lie in (0,1) and defaults to 1/2.
CellComplex build_complex(const Multigraph& g, int q, ComplexKind kind, const Rat& c = Rat(1, 2));

/// Sparse polynomial with unit coefficients arising from homogenized
/// differentials: a signed sum of monomials.
struct PolyTerm {
    Monomial mono;
    int coeff = 0;
};
using Poly = std::vector<PolyTerm>;

void poly_add(Poly& p, const Monomial& m, int coeff);
bool poly_zero(const Poly& p);

/// Free resolution data read off a labeled cell complex: F_i has the listed
/// label shifts, diff[i] maps F_i to F_{i-1} (i >= 1), and the augmentation
/// row maps F_0 into the ring (its entries generate the ideal).
struct LabeledChainComplex {
    IdealKind ideal;
    Ring ring;
    std::vector<std::vector<Monomial>> labels;
    std::vector<std::vector<std::vector<Poly>>> diff;  // diff[i][row][col]
    std::vector<Poly> augmentation;

    int length() const { return static_cast<int>(labels.size()); }
};

/// Minimal free resolution of the chosen ideal: bounded complex for OG/MG,
/// torus complex for JG/IG; MG and IG are produced by relabeling through
/// specialize_phi.
LabeledChainComplex resolution(const Multigraph& g, int q, IdealKind ideal, const Rat& c = Rat(1, 2));

struct BettiTable {
    std::map<std::pair<int, int>, Int> graded;          // (i, total degree) -> count
    std::vector<Int> totals;                            // totals[i]
    std::map<std::pair<int, std::string>, Int> fine;    // (i, divisor-class key) -> count
};

/// Z-graded Betti table shared by the four ideals (counted on the bounded
/// complex), with the fine grading keyed by q-reduced divisor classes.
BettiTable betti_table(const Multigraph& g, int q);
BettiTable betti_from_resolution(const LabeledChainComplex& res);

enum class VerifyCheck { D2Zero, SubcomplexAcyclic, Minimal, BettiEqual, Window };

struct VerifyReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        pass = false;
        failures.push_back(std::move(msg));
    }
    void merge(const VerifyReport& other) {
        pass = pass && other.pass;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

std::string verify_check_name(VerifyCheck check);
VerifyReport verify_check(const Multigraph& g, int q, VerifyCheck check);
VerifyReport verify_all_cell_checks(const Multigraph& g, int q);

// Lower-level entry points used by tests and the CLI.
VerifyReport check_d2zero(const LabeledChainComplex& res);
VerifyReport check_minimal(const LabeledChainComplex& res);
VerifyReport check_subcomplex_acyclic(const Multigraph& g, const CellComplex& bounded, bool phi_labels);
VerifyReport check_window(const Multigraph& g, const CellComplex& complex);
VerifyReport check_betti_equal(const Multigraph& g, int q);

/// Worker cap honoring the CHIPRES_THREADS environment variable.
int worker_count();

/// Dimension of the affine hull of a point set (-1 when empty).
int affine_rank(const std::vector<std::vector<Rat>>& pts);

}  // namespace chipres
