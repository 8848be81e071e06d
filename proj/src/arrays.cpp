#include "treemaps/arrays.hpp"

#include "treemaps/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace treemaps {

PairedArray::PairedArray(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("PairedArray: empty grid");
    cells_.assign(static_cast<size_t>(rows), std::vector<std::vector<int>>(static_cast<size_t>(cols)));
    marked_.assign(static_cast<size_t>(rows), std::vector<char>(static_cast<size_t>(cols), 0));
}

void PairedArray::check_cell(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw std::out_of_range("PairedArray: cell out of range");
}

const PairedArray::VertexInfo& PairedArray::info(int id) const {
    if (id < 0 || id >= static_cast<int>(verts_.size()) || verts_[static_cast<size_t>(id)].row == 0)
        throw std::out_of_range("PairedArray: unknown vertex id");
    return verts_[static_cast<size_t>(id)];
}

int PairedArray::add_vertex(int row, int col) {
    check_cell(row, col);
    const int id = static_cast<int>(verts_.size());
    verts_.push_back({row, col, -1});
    cells_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)].push_back(id);
    return id;
}

int PairedArray::insert_vertex_at(int row, int col, int index) {
    check_cell(row, col);
    auto& c = cells_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)];
    if (index < 0 || index > static_cast<int>(c.size()))
        throw std::out_of_range("PairedArray: bad in-cell index");
    const int id = static_cast<int>(verts_.size());
    verts_.push_back({row, col, -1});
    c.insert(c.begin() + index, id);
    return id;
}

void PairedArray::remove_vertex(int id) {
    const VertexInfo v = info(id);
    unpair(id);
    auto& c = cells_[static_cast<size_t>(v.row - 1)][static_cast<size_t>(v.col - 1)];
    c.erase(std::find(c.begin(), c.end(), id));
    verts_[static_cast<size_t>(id)] = {0, 0, -1};
}

void PairedArray::set_pair(int u, int v) {
    info(u);
    info(v);
    if (u == v) throw std::invalid_argument("PairedArray: vertex paired with itself");
    if (partner(u) != -1 || partner(v) != -1)
        throw std::invalid_argument("PairedArray: vertex already paired");
    verts_[static_cast<size_t>(u)].partner = v;
    verts_[static_cast<size_t>(v)].partner = u;
}

void PairedArray::unpair(int id) {
    const int p = info(id).partner;
    if (p == -1) return;
    verts_[static_cast<size_t>(id)].partner = -1;
    verts_[static_cast<size_t>(p)].partner = -1;
}

void PairedArray::set_mark(int row, int col, bool marked) {
    check_cell(row, col);
    marked_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] = marked ? 1 : 0;
}

void PairedArray::erase_row(int row) {
    check_cell(row, 1);
    for (auto& c : cells_[static_cast<size_t>(row - 1)])
        for (int id : std::vector<int>(c))  // copy: remove_vertex edits the cell
            remove_vertex(id);
    cells_.erase(cells_.begin() + (row - 1));
    marked_.erase(marked_.begin() + (row - 1));
    --rows_;
    for (auto& v : verts_)
        if (v.row > row) --v.row;
}

void PairedArray::insert_empty_row(int row) {
    if (row < 1 || row > rows_ + 1) throw std::out_of_range("PairedArray: bad row index");
    cells_.insert(cells_.begin() + (row - 1),
                  std::vector<std::vector<int>>(static_cast<size_t>(cols_)));
    marked_.insert(marked_.begin() + (row - 1), std::vector<char>(static_cast<size_t>(cols_), 0));
    ++rows_;
    for (auto& v : verts_)
        if (v.row >= row) ++v.row;
}

const std::vector<int>& PairedArray::cell(int row, int col) const {
    check_cell(row, col);
    return cells_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)];
}

bool PairedArray::marked(int row, int col) const {
    check_cell(row, col);
    return marked_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] != 0;
}

int PairedArray::vertex_row(int id) const { return info(id).row; }
int PairedArray::vertex_col(int id) const { return info(id).col; }
int PairedArray::partner(int id) const { return info(id).partner; }

int PairedArray::rightmost_vertex(int row, int col) const {
    const auto& c = cell(row, col);
    return c.empty() ? -1 : c.back();
}

int PairedArray::row_vertex_count(int row) const {
    int t = 0;
    for (int j = 1; j <= cols_; ++j) t += static_cast<int>(cell(row, j).size());
    return t;
}

int PairedArray::mark_count(int row) const {
    int t = 0;
    for (int j = 1; j <= cols_; ++j) t += marked(row, j) ? 1 : 0;
    return t;
}

std::vector<int> PairedArray::marked_columns(int row) const {
    std::vector<int> r;
    for (int j = 1; j <= cols_; ++j)
        if (marked(row, j)) r.push_back(j);
    return r;
}

std::vector<int> PairedArray::occupied_columns(int row) const {
    std::vector<int> r;
    for (int j = 1; j <= cols_; ++j)
        if (!cell(row, j).empty()) r.push_back(j);
    return r;
}

std::vector<int> PairedArray::cell_counts(int row) const {
    std::vector<int> w;
    for (int j = 1; j <= cols_; ++j) w.push_back(static_cast<int>(cell(row, j).size()));
    return w;
}

std::vector<int> PairedArray::row_vertices(int row) const {
    std::vector<int> r;
    for (int j = 1; j <= cols_; ++j)
        for (int id : cell(row, j)) r.push_back(id);
    return r;
}

std::vector<int> PairedArray::unpaired_vertices(int row) const {
    std::vector<int> r;
    for (int id : row_vertices(row))
        if (!is_paired(id)) r.push_back(id);
    return r;
}

bool PairedArray::fully_paired() const {
    for (const auto& v : verts_)
        if (v.row != 0 && v.partner == -1) return false;
    return true;
}

bool PairedArray::is_vertical() const {
    for (const auto& v : verts_)
        if (v.row != 0 && v.partner != -1 &&
            verts_[static_cast<size_t>(v.partner)].row == v.row)
            return false;
    return true;
}

int PairedArray::mixed_into(int row, int k, int col) const {
    int t = 0;
    for (int id : cell(row, col)) {
        const int p = partner(id);
        if (p != -1 && vertex_row(p) == k && k != row) ++t;
    }
    return t;
}

MixedCounts PairedArray::derived_mixed_counts() const {
    MixedCounts s(rows_);
    for (const auto& v : verts_) {
        if (v.row == 0 || v.partner == -1) continue;
        const auto& u = verts_[static_cast<size_t>(v.partner)];
        if (u.row != v.row && v.partner > (&v - verts_.data()))
            s.set(v.row, u.row, s.at(v.row, u.row) + 1);
    }
    return s;
}

bool PairedArray::is_critical(int id, const std::set<int>& tails) const {
    const auto& v = info(id);
    if (marked(v.row, v.col)) return false;
    if (v.row == 1 && tails.count(v.col)) return false;
    return rightmost_vertex(v.row, v.col) == id;
}

std::string PairedArray::canonical_key() const {
    // Positional rank per live vertex id.
    std::vector<int> rank(verts_.size(), -1);
    int next = 0;
    std::ostringstream os;
    os << rows_ << "x" << cols_ << "|";
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            os << cell(i, j).size() << (marked(i, j) ? "m" : ".");
            for (int id : cell(i, j)) rank[static_cast<size_t>(id)] = next++;
        }
        os << "/";
    }
    os << "|";
    std::vector<std::pair<int, int>> pairs;
    for (size_t id = 0; id < verts_.size(); ++id) {
        const auto& v = verts_[id];
        if (v.row == 0 || v.partner < 0 || static_cast<size_t>(v.partner) < id) continue;
        int a = rank[id], b = rank[static_cast<size_t>(v.partner)];
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [a, b] : pairs) os << a << "-" << b << ";";
    return os.str();
}

std::string PairedArray::render() const {
    // One text row per array row; cells as [.. .. ▣]; vertices shown with the
    // positional index of their partner (or "u" when unpaired).
    std::vector<int> rank(verts_.size(), -1);
    int next = 0;
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            for (int id : cell(i, j)) rank[static_cast<size_t>(id)] = next++;
    std::ostringstream os;
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            os << "[";
            bool first = true;
            for (int id : cell(i, j)) {
                if (!first) os << " ";
                first = false;
                const int p = partner(id);
                os << "•" << rank[static_cast<size_t>(id)];
                if (p >= 0)
                    os << "~" << rank[static_cast<size_t>(p)];
                else
                    os << "u";
            }
            if (marked(i, j)) os << (first ? "" : " ") << "▣";
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

// --- conditions -------------------------------------------------------------

bool check_balance(const PairedArray& a) {
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) {
            int mixed_here = 0;
            for (int id : a.cell(i, j)) {
                const int p = a.partner(id);
                if (p != -1 && a.vertex_row(p) != i) ++mixed_here;
            }
            // mixed pairs {u,v}: u anywhere in row i, v in column j of another row
            int incoming = 0;
            for (int r = 1; r <= a.rows(); ++r) {
                if (r == i) continue;
                for (int id : a.cell(r, j)) {
                    const int p = a.partner(id);
                    if (p != -1 && a.vertex_row(p) == i) ++incoming;
                }
            }
            if (mixed_here != incoming) return false;
        }
    return true;
}

bool check_tree_balance(const PairedArray& a) {
    const MixedCounts s = a.derived_mixed_counts();
    if (!is_tree(support_graph(s)))
        throw std::invalid_argument("check_tree_balance: support graph is not a tree");
    for (int i = 1; i <= a.rows(); ++i)
        for (int k = 1; k <= a.rows(); ++k) {
            if (i == k) continue;
            for (int j = 1; j <= a.cols(); ++j)
                if (a.mixed_into(i, k, j) != a.mixed_into(k, i, j)) return false;
        }
    return true;
}

std::map<int, int> forest_function(const PairedArray& a, int row, const std::map<int, int>* phi) {
    std::map<int, int> psi;
    if (phi)
        for (const auto& [j, t] : *phi) psi[j] = t;
    for (int j = 1; j <= a.cols(); ++j) {
        if (a.marked(row, j)) continue;
        if (psi.count(j)) continue;  // arrow overrides the rightmost vertex
        const int v = a.rightmost_vertex(row, j);
        if (v == -1) continue;
        const int p = a.partner(v);
        if (p == -1) continue;  // unpaired rightmost vertices have no edge
        psi[j] = a.vertex_col(p);
    }
    return psi;
}

bool check_forest_row(const PairedArray& a, int row, const std::map<int, int>* phi) {
    const auto psi = forest_function(a, row, phi);
    std::vector<char> mark(static_cast<size_t>(a.cols()) + 1, 0);
    for (int j : a.marked_columns(row)) mark[static_cast<size_t>(j)] = 1;
    for (const auto& [start, first] : psi) {
        if (mark[static_cast<size_t>(start)]) continue;  // tails never sit on marks anyway
        int cur = first;
        int steps = 0;
        while (!mark[static_cast<size_t>(cur)]) {
            auto it = psi.find(cur);
            if (it == psi.end()) return false;  // dead end off the root set
            cur = it->second;
            if (++steps > a.cols()) return false;  // cycle
        }
    }
    return true;
}

bool check_forest(const PairedArray& a) {
    for (int i = 1; i <= a.rows(); ++i)
        if (!check_forest_row(a, i)) return false;
    return true;
}

bool is_proper(const PairedArray& a) { return check_balance(a) && check_forest(a); }

bool unmarked_rightmost_paired(const PairedArray& a) {
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) {
            if (a.marked(i, j)) continue;
            const int v = a.rightmost_vertex(i, j);
            if (v != -1 && !a.is_paired(v)) return false;
        }
    return true;
}

std::string forest_digraph_description(const PairedArray& a, int row,
                                       const std::map<int, int>* phi) {
    const auto psi = forest_function(a, row, phi);
    std::ostringstream os;
    os << "digraph row" << row << " { roots:";
    for (int j : a.marked_columns(row)) os << " " << j;
    os << ";";
    for (const auto& [j, t] : psi) os << " " << j << "->" << t << ";";
    os << " }";
    return os.str();
}

// --- arrowed arrays -----------------------------------------------------------

ArrowedArray::ArrowedArray(PairedArray g, std::map<int, int> arrows)
    : grid(std::move(g)), phi(std::move(arrows)) {
    if (grid.rows() != 2) throw std::invalid_argument("ArrowedArray: needs exactly 2 rows");
    if (!grid.is_vertical()) throw std::invalid_argument("ArrowedArray: pairing must be vertical");
    for (const auto& [j, t] : phi) {
        if (j < 1 || j > grid.cols() || t < 1 || t > grid.cols())
            throw std::invalid_argument("ArrowedArray: arrow outside the grid");
        if (grid.marked(1, j))
            throw std::invalid_argument("ArrowedArray: arrow-tail in a marked cell");
    }
}

std::set<int> ArrowedArray::tails() const {
    std::set<int> t;
    for (const auto& [j, _] : phi) t.insert(j);
    return t;
}

bool ArrowedArray::check_balance() const {
    for (int j = 1; j <= grid.cols(); ++j)
        if (grid.cell(1, j).size() != grid.cell(2, j).size()) return false;
    return true;
}

bool ArrowedArray::check_forest() const {
    return check_forest_row(grid, 1, &phi) && check_forest_row(grid, 2);
}

bool ArrowedArray::check_full() const {
    const auto t = tails();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= grid.cols(); ++j) {
            if (!grid.cell(i, j).empty() || grid.marked(i, j)) continue;
            if (i == 1 && t.count(j)) continue;
            return false;
        }
    return true;
}

bool ArrowedArray::check_nonempty() const {
    const auto t = tails();
    for (int j = 1; j <= grid.cols(); ++j) {
        bool has = t.count(j) > 0;
        for (int i = 1; i <= 2 && !has; ++i)
            has = !grid.cell(i, j).empty() || grid.marked(i, j);
        if (!has) return false;
    }
    return true;
}

std::string ArrowedArray::render() const {
    std::ostringstream os;
    os << grid.render() << "arrows:";
    for (const auto& [j, t] : phi) os << " " << j << "→" << t;
    os << "\n";
    return os.str();
}

// --- labelling procedures ------------------------------------------------------

std::vector<RowObject> row_objects(const PairedArray& a, int row) {
    std::vector<RowObject> objs;
    for (int j = 1; j <= a.cols(); ++j) {
        for (int id : a.cell(row, j)) objs.push_back({j, id});
        if (a.marked(row, j)) objs.push_back({j, -1});
    }
    return objs;
}

std::vector<std::pair<int, RowObject>> label_row(const PairedArray& a, int row,
                                                 const std::set<int>& labels) {
    const auto objs = row_objects(a, row);
    if (labels.size() != objs.size())
        throw std::invalid_argument("label_row: label count must match object count");
    std::vector<std::pair<int, RowObject>> out;
    auto it = labels.begin();
    for (const auto& o : objs) out.emplace_back(*it++, o);
    return out;
}

ExtractResult extract(const PairedArray& a, int row, const std::set<int>& vertex_ids) {
    for (int id : vertex_ids) {
        if (a.vertex_row(id) != row)
            throw std::invalid_argument("extract: vertex not in the requested row");
        if (a.is_paired(id)) throw std::invalid_argument("extract: vertex is paired");
    }
    const int total = a.row_vertex_count(row) + a.mark_count(row);
    std::set<int> all;
    for (int l = 1; l <= total; ++l) all.insert(l);
    ExtractResult res{a, {}};
    for (const auto& [label, obj] : label_row(a, row, all))
        if (obj.vertex != -1 && vertex_ids.count(obj.vertex)) res.labels.insert(label);
    for (int id : vertex_ids) res.array.remove_vertex(id);
    return res;
}

InsertResult insert(const PairedArray& a, int row, const std::set<int>& W) {
    const int y = static_cast<int>(W.size());
    const int total = a.row_vertex_count(row) + a.mark_count(row) + y;
    for (int w : W)
        if (w < 1 || w > total - 1)
            throw std::invalid_argument("insert: label outside [p_i + R_i + y - 1]");

    std::set<int> remaining;
    for (int l = 1; l <= total; ++l)
        if (!W.count(l)) remaining.insert(l);

    InsertResult res{a, {}};
    const auto labelled = label_row(a, row, remaining);
    for (int w : W) {  // ascending
        // target: smallest labelled object with label > w
        const RowObject* target = nullptr;
        for (const auto& [label, obj] : labelled)
            if (label > w) {
                target = &obj;
                break;
            }
        if (!target) throw std::logic_error("insert: no object to the right of a label");
        const auto& cellv = res.array.cell(row, target->col);
        int index;
        if (target->vertex == -1) {
            index = static_cast<int>(cellv.size());  // before the box = after all vertices
        } else {
            index = static_cast<int>(std::find(cellv.begin(), cellv.end(), target->vertex) -
                                     cellv.begin());
        }
        res.inserted.push_back(res.array.insert_vertex_at(row, target->col, index));
    }
    return res;
}

// --- decomposition ---------------------------------------------------------------

Decomposition decompose_row(const PairedArray& alpha, int leaf_row) {
    if (!alpha.fully_paired() || !alpha.is_vertical())
        throw std::invalid_argument("decompose_row: input must be a fully paired vertical array");
    if (!is_proper(alpha)) throw std::invalid_argument("decompose_row: input must be proper");
    const MixedCounts s = alpha.derived_mixed_counts();
    const SupportGraph g = support_graph(s);
    if (!is_tree(g)) throw std::invalid_argument("decompose_row: support graph must be a tree");
    int adjacent = 0;
    for (auto [i, k] : g.edges) {
        if (i == leaf_row) {
            if (adjacent) throw std::invalid_argument("decompose_row: row is not a leaf");
            adjacent = k;
        } else if (k == leaf_row) {
            if (adjacent) throw std::invalid_argument("decompose_row: row is not a leaf");
            adjacent = i;
        }
    }
    if (!adjacent) throw std::invalid_argument("decompose_row: leaf row has no support edge");

    const int m = adjacent;
    const int K = alpha.cols();

    // Split the row-m partners of the leaf row by criticality.
    std::vector<int> U, V;
    for (int id : alpha.row_vertices(m)) {
        const int p = alpha.partner(id);
        if (alpha.vertex_row(p) != leaf_row) continue;
        if (alpha.is_critical(id))
            U.push_back(id);
        else
            V.push_back(id);
    }
    const int P = alpha.mark_count(m) + static_cast<int>(U.size());

    // Arrowed array sigma: rows m and leaf of alpha restricted to the removed
    // pairs, with arrows standing in for the critical pairs kept in beta.
    PairedArray sg(2, K);
    std::map<int, int> sid;  // alpha vertex id -> sigma vertex id
    for (int j = 1; j <= K; ++j) {
        for (int id : alpha.cell(m, j)) {
            if (alpha.vertex_row(alpha.partner(id)) != leaf_row) continue;
            sid[id] = sg.add_vertex(1, j);
        }
        for (int id : alpha.cell(leaf_row, j)) sid[id] = sg.add_vertex(2, j);
        sg.set_mark(1, j, alpha.marked(m, j));
        sg.set_mark(2, j, alpha.marked(leaf_row, j));
    }
    for (int id : U) sg.set_pair(sid[id], sid[alpha.partner(id)]);
    for (int id : V) sg.set_pair(sid[id], sid[alpha.partner(id)]);
    std::map<int, int> phi;
    for (int j = 1; j <= K; ++j) {
        const int rv = alpha.rightmost_vertex(m, j);
        if (rv == -1 || !alpha.is_critical(rv)) continue;
        const int p = alpha.partner(rv);
        if (alpha.vertex_row(p) == leaf_row) continue;  // removed pair, not an arrow
        phi[j] = alpha.vertex_col(p);
    }

    // beta: mark the cells of U, strip the leaf row and U, extract V.
    PairedArray work = alpha;
    for (int id : U) work.set_mark(m, work.vertex_col(id), true);
    for (int id : U) work.unpair(id);
    for (int id : V) work.unpair(id);
    work.erase_row(leaf_row);
    const int m_in_beta = m > leaf_row ? m - 1 : m;
    for (int id : U) work.remove_vertex(id);
    std::set<int> vset(V.begin(), V.end());
    ExtractResult ex = extract(work, m_in_beta, vset);

    return {std::move(ex.array), std::move(ex.labels), ArrowedArray(std::move(sg), std::move(phi)),
            P, leaf_row, m_in_beta};
}

PairedArray recompose_row(const PairedArray& beta, const std::set<int>& W,
                          const ArrowedArray& sigma, int leaf_row, int adjacent_row) {
    const int K = beta.cols();
    const int m = adjacent_row;
    if (sigma.grid.cols() != K)
        throw std::invalid_argument("recompose_row: column count mismatch");
    if (!beta.fully_paired() || !beta.is_vertical())
        throw std::invalid_argument("recompose_row: beta must be a fully paired vertical array");
    if (!sigma.grid.fully_paired())
        throw std::invalid_argument("recompose_row: sigma must be fully paired");
    if (!sigma.check_balance() || !sigma.check_forest())
        throw std::invalid_argument("recompose_row: arrowed array is not proper");

    // Lambda-compatibility: the arrows must be the forest function of row m,
    // and row-1 marks of sigma must sit on marked cells of row m.
    if (sigma.phi != forest_function(beta, m))
        throw std::invalid_argument("recompose_row: arrows do not match the row's forest function");
    for (int j = 1; j <= K; ++j)
        if (sigma.grid.marked(1, j) && !beta.marked(m, j))
            throw std::invalid_argument("recompose_row: sigma row-1 mark off the marked columns");

    InsertResult ins = insert(beta, m, W);
    PairedArray arr = std::move(ins.array);
    std::set<int> inserted(ins.inserted.begin(), ins.inserted.end());

    // Occupancy check: inserted vertices per column = non-critical row-1
    // vertices of sigma per column; critical cells of sigma demand a marked
    // cell of row m where the removed critical vertex is re-added rightmost.
    const auto tails = sigma.tails();
    std::vector<int> U;
    for (int j = 1; j <= K; ++j) {
        int noncrit = 0;
        bool has_critical = false;
        for (int sv : sigma.grid.cell(1, j)) {
            if (sigma.grid.is_critical(sv, tails))
                has_critical = true;
            else
                ++noncrit;
        }
        int ins_here = 0;
        for (int id : arr.cell(m, j))
            if (inserted.count(id)) ++ins_here;
        if (ins_here != noncrit)
            throw std::invalid_argument("recompose_row: inserted positions do not match sigma");
        if (has_critical) {
            if (!arr.marked(m, j))
                throw std::invalid_argument("recompose_row: critical column must be marked");
            U.push_back(arr.add_vertex(m, j));
        }
        // every marked cell of row m must be accounted for by a sigma mark or
        // a removed critical vertex, or the marks cannot be restored
        if (arr.marked(m, j) && !sigma.grid.marked(1, j) && !has_critical)
            throw std::invalid_argument("recompose_row: unexplained mark in the adjacent row");
    }

    // Column-wise correspondence between sigma row 1 and the unpaired
    // vertices of row m (original order was preserved by insertion).
    std::map<int, int> from_sigma;  // sigma id -> arr id
    for (int j = 1; j <= K; ++j) {
        std::vector<int> unpaired_here;
        for (int id : arr.cell(m, j))
            if (!arr.is_paired(id)) unpaired_here.push_back(id);
        const auto& scell = sigma.grid.cell(1, j);
        if (scell.size() != unpaired_here.size())
            throw std::invalid_argument("recompose_row: row-1 occupancy mismatch");
        for (size_t t = 0; t < scell.size(); ++t) from_sigma[scell[t]] = unpaired_here[t];
    }

    // New leaf row from sigma row 2.
    arr.insert_empty_row(leaf_row);
    const int m_final = m >= leaf_row ? m + 1 : m;
    for (int j = 1; j <= K; ++j) {
        for (int sv : sigma.grid.cell(2, j)) from_sigma[sv] = arr.add_vertex(leaf_row, j);
        arr.set_mark(leaf_row, j, sigma.grid.marked(2, j));
    }
    for (int j = 1; j <= K; ++j)
        for (int sv : sigma.grid.cell(1, j)) {
            const int sp = sigma.grid.partner(sv);
            if (sp == -1)
                throw std::invalid_argument("recompose_row: unpaired sigma vertex");
            arr.set_pair(from_sigma[sv], from_sigma[sp]);
        }
    for (int id : U) arr.set_mark(m_final, arr.vertex_col(id), false);

    if (!is_proper(arr)) throw std::invalid_argument("recompose_row: result is not proper");
    return arr;
}

// --- enumerations ------------------------------------------------------------------

void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& f) {
    if (parts <= 0) {
        if (total == 0) f({});
        return;
    }
    std::vector<int> v(static_cast<size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int idx, int rest) {
        if (idx == parts - 1) {
            v[static_cast<size_t>(idx)] = rest;
            f(v);
            return;
        }
        for (int t = 0; t <= rest; ++t) {
            v[static_cast<size_t>(idx)] = t;
            rec(idx + 1, rest - t);
        }
    };
    rec(0, total);
}

void for_each_subset(int universe, int size,
                     const std::function<void(const std::vector<int>&)>& f) {
    if (size < 0 || size > universe) return;
    std::vector<int> pick(static_cast<size_t>(size));
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (remaining == 0) {
            f(pick);
            return;
        }
        for (int v = start; v <= universe - remaining + 1; ++v) {
            pick[static_cast<size_t>(size - remaining)] = v;
            rec(v + 1, remaining - 1);
        }
    };
    rec(1, size);
}

namespace {

// Shared core of the vertical and canonical array enumerations: occupancies
// per row, then pairings with the (q; s) profile, then marks.
void for_each_proper_array(const MapParameters& params, int K, const std::vector<int>& R,
                           const std::function<void(const PairedArray&)>& visit) {
    const int n = params.n();
    const auto p = params.row_sizes();

    // occupancy[i-1] = cell counts of row i
    std::vector<std::vector<int>> occupancy(static_cast<size_t>(n));
    std::function<void(int)> pick_row = [&](int i) {
        if (i == n) {
            // Build the skeleton once per occupancy; ids are row-major.
            PairedArray base(n, K);
            std::vector<std::vector<int>> slot_ids(static_cast<size_t>(n));
            for (int r = 1; r <= n; ++r)
                for (int j = 1; j <= K; ++j)
                    for (int t = 0; t < occupancy[static_cast<size_t>(r - 1)][static_cast<size_t>(j - 1)]; ++t)
                        slot_ids[static_cast<size_t>(r - 1)].push_back(base.add_vertex(r, j));

            for_each_pairing(params, [&](const Pairing& mu) {
                PairedArray arr = base;
                for (const auto& [u, v] : mu.pairs())
                    arr.set_pair(slot_ids[static_cast<size_t>(u.row - 1)][static_cast<size_t>(u.pos - 1)],
                                 slot_ids[static_cast<size_t>(v.row - 1)][static_cast<size_t>(v.pos - 1)]);
                if (!check_balance(arr)) return;
                // marks: R_i-subsets per row
                std::function<void(int)> pick_marks = [&](int r) {
                    if (r > n) {
                        if (check_forest(arr)) visit(arr);
                        return;
                    }
                    for_each_subset(K, R[static_cast<size_t>(r - 1)], [&](const std::vector<int>& cols) {
                        for (int j : cols) arr.set_mark(r, j, true);
                        pick_marks(r + 1);
                        for (int j : cols) arr.set_mark(r, j, false);
                    });
                };
                pick_marks(1);
            });
            return;
        }
        for_each_composition(p[static_cast<size_t>(i)], K, [&](const std::vector<int>& w) {
            occupancy[static_cast<size_t>(i)] = w;
            pick_row(i + 1);
        });
    };
    pick_row(0);
}

}  // namespace

void for_each_proper_vertical_array(int K, const std::vector<int>& R, const MixedCounts& s,
                                    const std::function<void(const PairedArray&)>& visit) {
    const int n = s.n();
    if (static_cast<int>(R.size()) != n)
        throw std::invalid_argument("for_each_proper_vertical_array: R size mismatch");
    for (int r : R)
        if (r < 1) throw std::invalid_argument("for_each_proper_vertical_array: R must be >= 1");
    MapParameters params(std::vector<int>(static_cast<size_t>(n), 0), s);
    for_each_proper_array(params, K, R, visit);
}

BigInt brute_vertical_count(int K, const std::vector<int>& R, const MixedCounts& s) {
    BigInt c = 0;
    for_each_proper_vertical_array(K, R, s, [&](const PairedArray&) { ++c; });
    return c;
}

BigInt enumerate_canonical_arrays(const MapParameters& params, int K) {
    BigInt c = 0;
    const std::vector<int> ones(static_cast<size_t>(params.n()), 1);
    for_each_proper_array(params, K, ones, [&](const PairedArray&) { ++c; });
    return c;
}

}  // namespace treemaps
