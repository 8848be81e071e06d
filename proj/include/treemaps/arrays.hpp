#ifndef TREEMAPS_ARRAYS_HPP
#define TREEMAPS_ARRAYS_HPP

// Paired arrays: n x K grids of cells holding ordered vertices, with marked
// cells and a (possibly partial) matching on the vertices.  Provides the
// balance and forest conditions, the row labelling / extraction / insertion
// procedures, the leaf-row decomposition of proper vertical arrays, and
// brute-force enumerators for vertical and canonical arrays.
//
// Array identity is positional: two arrays are equal when their cell
// occupancies, marks, arrows and the matching expressed in cell positions
// all coincide.  Vertex ids are internal handles and survive copies.

#include "treemaps/core.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace treemaps {

class PairedArray {
public:
    PairedArray(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // --- structure edits (rows/cols are 1-based) ---
    int add_vertex(int row, int col);                    // appended rightmost
    int insert_vertex_at(int row, int col, int index);   // 0-based slot in the cell
    void remove_vertex(int id);
    void set_pair(int u, int v);
    void unpair(int id);                                 // no-op when already unpaired
    void set_mark(int row, int col, bool marked);
    void erase_row(int row);
    void insert_empty_row(int row);                      // new row takes this index

    // --- queries ---
    const std::vector<int>& cell(int row, int col) const;
    bool marked(int row, int col) const;
    int vertex_row(int id) const;
    int vertex_col(int id) const;
    int partner(int id) const;  // -1 when unpaired
    bool is_paired(int id) const { return partner(id) >= 0; }
    int rightmost_vertex(int row, int col) const;  // -1 when the cell has no vertex

    int row_vertex_count(int row) const;
    int mark_count(int row) const;
    std::vector<int> marked_columns(int row) const;    // R_row, sorted
    std::vector<int> occupied_columns(int row) const;  // F_row, sorted
    std::vector<int> cell_counts(int row) const;       // w_{row,1..K}
    std::vector<int> row_vertices(int row) const;      // ids, left to right
    std::vector<int> unpaired_vertices(int row) const;

    bool fully_paired() const;
    bool is_vertical() const;  // every pair joins two different rows

    // #vertices in cell (row,col) paired into row k.
    int mixed_into(int row, int k, int col) const;
    // Mixed-pair counts derived from the matching.
    MixedCounts derived_mixed_counts() const;

    // Rightmost vertex of an unmarked cell; arrow-tail columns (row 1 of an
    // arrowed array) are excluded via `tails`.
    bool is_critical(int id, const std::set<int>& tails = {}) const;

    std::string canonical_key() const;
    bool operator==(const PairedArray& o) const { return canonical_key() == o.canonical_key(); }

    // Debug view: one text line per row, cells as [...], vertices as • with
    // the positional index of their partner, marks as ▣.
    std::string render() const;

private:
    struct VertexInfo {
        int row = 0;  // 0 = removed
        int col = 0;
        int partner = -1;
    };
    void check_cell(int row, int col) const;
    const VertexInfo& info(int id) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<std::vector<int>>> cells_;  // [row-1][col-1] -> ids
    std::vector<std::vector<char>> marked_;
    std::vector<VertexInfo> verts_;
};

// --- conditions -----------------------------------------------------------

// Per cell (i,j): the number of mixed vertices in the cell equals the number
// of mixed pairs {u,v} with u in row i and v in column j but another row.
bool check_balance(const PairedArray& a);

// Tree-shaped shortcut: mixed_into(i,k,j) == mixed_into(k,i,j) for all i != k.
// Throws std::invalid_argument when the derived support graph is not a tree.
bool check_tree_balance(const PairedArray& a);

// psi_row: for each unmarked vertex-bearing column, the column of the
// rightmost vertex's partner.  `phi` (arrow map, row 1 of arrowed arrays)
// overrides and extends the domain.
std::map<int, int> forest_function(const PairedArray& a, int row,
                                   const std::map<int, int>* phi = nullptr);

// Every column of the domain must reach a marked column under iteration.
bool check_forest_row(const PairedArray& a, int row, const std::map<int, int>* phi = nullptr);
bool check_forest(const PairedArray& a);
bool is_proper(const PairedArray& a);

// Partially-paired arrays may hold unpaired vertices, but the rightmost
// vertex of an unmarked cell must stay paired.
bool unmarked_rightmost_paired(const PairedArray& a);

// Graph description of the functional digraph behind the forest condition.
std::string forest_digraph_description(const PairedArray& a, int row,
                                       const std::map<int, int>* phi = nullptr);

// --- arrowed arrays ---------------------------------------------------------

// Two-row vertical array plus arrows above row 1: a partial column map phi
// whose tails may not sit in row-1 marked columns.
struct ArrowedArray {
    PairedArray grid;
    std::map<int, int> phi;

    ArrowedArray() : grid(2, 1) {}
    ArrowedArray(PairedArray g, std::map<int, int> arrows);

    std::set<int> tails() const;
    bool check_balance() const;  // per column, equal cell sizes in both rows
    bool check_forest() const;
    bool check_full() const;      // every cell holds a vertex, a box or a tail
    bool check_nonempty() const;  // every column holds some object

    bool operator==(const ArrowedArray& o) const {
        return phi == o.phi && grid == o.grid;
    }
    std::string render() const;
};

// --- labelling, extraction, insertion ---------------------------------------

struct RowObject {
    int col = 0;
    int vertex = -1;  // -1 denotes the cell's box
    auto operator<=>(const RowObject&) const = default;
};

// Objects of a row, left to right; the box counts as rightmost in its cell.
std::vector<RowObject> row_objects(const PairedArray& a, int row);

// Assigns the labels (sorted ascending) to the objects left to right.
// |labels| must equal the number of objects.
std::vector<std::pair<int, RowObject>> label_row(const PairedArray& a, int row,
                                                 const std::set<int>& labels);

struct ExtractResult {
    PairedArray array;
    std::set<int> labels;  // W, subset of [p_i + R_i - 1]
};

// Deletes the given unpaired vertices of the row and reports their labels
// under the canonical labelling by [p_i + R_i].
ExtractResult extract(const PairedArray& a, int row, const std::set<int>& vertex_ids);

struct InsertResult {
    PairedArray array;
    std::vector<int> inserted;  // new vertex ids (V), unpaired and non-critical
};

// Inserts |W| unpaired vertices into the row so that relabelling recovers W;
// inverse of extract.  W must be a subset of [p_i + R_i + |W| - 1].
InsertResult insert(const PairedArray& a, int row, const std::set<int>& W);

// --- leaf-row decomposition --------------------------------------------------

struct Decomposition {
    PairedArray beta;    // the array with the leaf row removed
    std::set<int> W;     // positions of the removed non-critical partners
    ArrowedArray sigma;  // the removed pairs with arrows for foreign partners
    int P = 0;           // marks in row `adjacent_row` of beta
    int leaf_row = 0;        // row index removed from the input
    int adjacent_row = 0;    // index of the neighbour row within beta
};

// Splits a proper tree-shaped vertical array at a support-graph leaf row.
// Bijective; inverse is recompose_row.
Decomposition decompose_row(const PairedArray& alpha, int leaf_row);

PairedArray recompose_row(const PairedArray& beta, const std::set<int>& W,
                          const ArrowedArray& sigma, int leaf_row, int adjacent_row);

// --- enumerations ------------------------------------------------------------

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& f);
void for_each_subset(int universe, int size, const std::function<void(const std::vector<int>&)>& f);

// All proper vertical arrays with the given marks-per-row vector R and
// mixed-pair profile s, each exactly once.
void for_each_proper_vertical_array(int K, const std::vector<int>& R, const MixedCounts& s,
                                    const std::function<void(const PairedArray&)>& visit);

BigInt brute_vertical_count(int K, const std::vector<int>& R, const MixedCounts& s);

// Number of proper paired arrays with one mark per row (brute force).
BigInt enumerate_canonical_arrays(const MapParameters& params, int K);

}  // namespace treemaps

#endif
