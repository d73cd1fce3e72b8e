/**
 * Exact reduced simplicial homology over the rationals and prime fields.
 *
 * The reduced chain complex uses the ascending wedge basis: an i-face
 * {j_0 < ... < j_i} maps to sum_s (-1)^s (face with j_s dropped), and every
 * vertex maps to the empty face with coefficient +1.  Ranks are computed by
 * sparse Gaussian elimination with Markowitz pivoting (ties broken by the
 * lowest (row, col)); over Q the rows are kept integral and primitive, so
 * no fractions ever appear.
 */

#ifndef GORENSTEIN_HOMOLOGY_HPP
#define GORENSTEIN_HOMOLOGY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "complex.hpp"

namespace gorenstein {

/**
 * Coefficient field: Q, or F_p for a prime p.
 */
class FieldSpec
{
    public:
        static FieldSpec rationals() { return FieldSpec(0); }

        static FieldSpec prime(std::uint32_t p)
        {
            if (!is_prime(p))
                throw std::invalid_argument(std::to_string(p) + " is not prime");
            if (p > (1u << 30))
                throw std::invalid_argument("prime field characteristic too large");
            return FieldSpec(p);
        }

        /// "q" or "f<p>", e.g. "f2".
        static FieldSpec parse(std::string_view name)
        {
            if (name == "q" || name == "Q")
                return rationals();
            if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F'))
            {
                std::uint64_t p = 0;
                for (char ch : name.substr(1))
                {
                    if (ch < '0' || ch > '9' || p > (1u << 30))
                        throw std::invalid_argument("unknown field '" + std::string(name) + "'");
                    p = p * 10 + static_cast<std::uint64_t>(ch - '0');
                }
                return prime(static_cast<std::uint32_t>(p));
            }
            throw std::invalid_argument("unknown field '" + std::string(name) + "'");
        }

        bool is_rational() const { return p_ == 0; }

        /// 0 for Q.
        std::uint32_t characteristic() const { return p_; }

        std::string name() const
        {
            return is_rational() ? std::string("q") : "f" + std::to_string(p_);
        }

        friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    private:
        explicit FieldSpec(std::uint32_t p) : p_(p) {}

        std::uint32_t p_;

        static bool is_prime(std::uint32_t p)
        {
            if (p < 2)
                return false;
            for (std::uint32_t d = 2; d * d <= p; ++d)
                if (p % d == 0)
                    return false;
            return true;
        }
};

/**
 * Sparse matrix with integer entries.  Over F_p an entry stands for its
 * residue, so "nonzero" is relative to the field the matrix is used with;
 * boundary_matrix always stores canonical representatives.
 */
class SparseMatrix
{
    public:
        struct Entry
        {
            std::size_t row;
            std::size_t col;
            std::int64_t value;

            friend bool operator==(const Entry&, const Entry&) = default;
        };

        SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

        /// Throws on an out-of-range index, a stored zero or a duplicate position.
        SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
            : rows_(rows), cols_(cols), entries_(std::move(entries))
        {
            std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
                return std::tie(a.row, a.col) < std::tie(b.row, b.col);
            });
            for (std::size_t i = 0; i < entries_.size(); ++i)
            {
                const auto& e = entries_[i];
                if (e.row >= rows_ || e.col >= cols_)
                    throw std::out_of_range("matrix entry index out of range");
                if (e.value == 0)
                    throw std::invalid_argument("stored zero in sparse matrix");
                if (i > 0 && entries_[i - 1].row == e.row && entries_[i - 1].col == e.col)
                    throw std::invalid_argument("duplicate entry in sparse matrix");
            }
        }

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        /// Entries sorted by (row, col).
        const std::vector<Entry>& entries() const { return entries_; }

        std::int64_t at(std::size_t r, std::size_t c) const
        {
            auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                                       [](const Entry& e, const std::pair<std::size_t, std::size_t>& k) {
                                           return std::tie(e.row, e.col) < std::tie(k.first, k.second);
                                       });
            return (it != entries_.end() && it->row == r && it->col == c) ? it->value : 0;
        }

    private:
        std::size_t rows_;
        std::size_t cols_;
        std::vector<Entry> entries_;
};

/**
 * Reduced Betti numbers: dims()[i + 1] = dim H~_i for i = -1..dim.
 */
class BettiTable
{
    public:
        BettiTable() = default;
        explicit BettiTable(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

        /// 0 outside the stored range.
        std::size_t at(int degree) const
        {
            auto i = static_cast<std::size_t>(degree + 1);
            return (degree >= -1 && i < dims_.size()) ? dims_[i] : 0;
        }

        int max_degree() const { return static_cast<int>(dims_.size()) - 2; }
        const std::vector<std::size_t>& dims() const { return dims_; }

        bool all_zero() const
        {
            return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
        }

        friend bool operator==(const BettiTable&, const BettiTable&) = default;

    private:
        std::vector<std::size_t> dims_;
};

// ------------------------------------------------------------------------
//                              Exact rank
// ------------------------------------------------------------------------

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

template <typename Value>
using SparseRow = std::vector<std::pair<std::size_t, Value>>;

/// Rows stay integral; each elimination step is followed by content removal.
struct RationalRowOps
{
    using Value = BigInt;

    Value from_int(std::int64_t v) const { return Value(v); }

    void prepare_pivot(SparseRow<Value>&, std::size_t) const {}

    SparseRow<Value> eliminate(const SparseRow<Value>& target, const SparseRow<Value>& pivot,
                               std::size_t col) const
    {
        const Value& a = value_at(pivot, col);
        const Value& b = value_at(target, col);
        Value g = boost::multiprecision::gcd(a, b);
        Value ma = a / g;
        Value mb = b / g;
        SparseRow<Value> out;
        out.reserve(target.size() + pivot.size());
        auto i = target.begin();
        auto j = pivot.begin();
        while (i != target.end() || j != pivot.end())
        {
            if (j == pivot.end() || (i != target.end() && i->first < j->first))
            {
                out.emplace_back(i->first, ma * i->second);
                ++i;
            }
            else if (i == target.end() || j->first < i->first)
            {
                out.emplace_back(j->first, -mb * j->second);
                ++j;
            }
            else
            {
                Value v = ma * i->second - mb * j->second;
                if (v != 0)
                    out.emplace_back(i->first, std::move(v));
                ++i;
                ++j;
            }
        }
        Value content = 0;
        for (const auto& e : out)
        {
            content = boost::multiprecision::gcd(content, e.second);
            if (content == 1)
                break;
        }
        if (content > 1)
            for (auto& e : out)
                e.second /= content;
        return out;
    }

    static const Value& value_at(const SparseRow<Value>& row, std::size_t col)
    {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        return it->second;
    }
};

/// Residues in [0, p); pivot rows are scaled to a unit pivot.
struct PrimeRowOps
{
    using Value = std::uint64_t;

    std::uint64_t p;

    Value from_int(std::int64_t v) const
    {
        auto m = static_cast<std::int64_t>(p);
        return static_cast<Value>(((v % m) + m) % m);
    }

    Value inverse(Value a) const
    {
        // a^(p-2) by square-and-multiply.
        Value result = 1, base = a % p;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1)
        {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
        }
        return result;
    }

    void prepare_pivot(SparseRow<Value>& row, std::size_t col) const
    {
        Value inv = inverse(value_at(row, col));
        for (auto& e : row)
            e.second = e.second * inv % p;
    }

    SparseRow<Value> eliminate(const SparseRow<Value>& target, const SparseRow<Value>& pivot,
                               std::size_t col) const
    {
        const Value factor = value_at(target, col);
        SparseRow<Value> out;
        out.reserve(target.size() + pivot.size());
        auto i = target.begin();
        auto j = pivot.begin();
        while (i != target.end() || j != pivot.end())
        {
            if (j == pivot.end() || (i != target.end() && i->first < j->first))
            {
                out.push_back(*i);
                ++i;
            }
            else if (i == target.end() || j->first < i->first)
            {
                out.emplace_back(j->first, (p - factor * j->second % p) % p);
                ++j;
            }
            else
            {
                Value v = (i->second + p - factor * j->second % p) % p;
                if (v != 0)
                    out.emplace_back(i->first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    static Value value_at(const SparseRow<Value>& row, std::size_t col)
    {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        return it->second;
    }
};

template <typename Ops>
std::size_t sparse_rank(const SparseMatrix& m, const Ops& ops)
{
    using Value = typename Ops::Value;
    std::vector<SparseRow<Value>> rows(m.rows());
    for (const auto& e : m.entries())
    {
        Value v = ops.from_int(e.value);
        if (v != 0)
            rows[e.row].emplace_back(e.col, std::move(v));
    }

    std::vector<std::set<std::size_t>> col_rows(m.cols());
    std::vector<bool> active(m.rows(), true);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& e : rows[r])
            col_rows[e.first].insert(r);

    std::size_t rank = 0;
    while (true)
    {
        // Markowitz choice; scanning in (row, col) order breaks ties lowest-first.
        constexpr auto none = std::numeric_limits<std::size_t>::max();
        std::size_t best_cost = none, best_row = none, best_col = none;
        for (std::size_t r = 0; r < rows.size() && best_cost != 0; ++r)
        {
            if (!active[r])
                continue;
            if (rows[r].empty())
            {
                active[r] = false;
                continue;
            }
            const std::size_t row_cost = rows[r].size() - 1;
            for (const auto& e : rows[r])
            {
                std::size_t cost = row_cost * (col_rows[e.first].size() - 1);
                if (cost < best_cost)
                {
                    best_cost = cost;
                    best_row = r;
                    best_col = e.first;
                    if (cost == 0)
                        break;
                }
            }
        }
        if (best_row == none)
            break;

        ++rank;
        active[best_row] = false;
        for (const auto& e : rows[best_row])
            col_rows[e.first].erase(best_row);
        ops.prepare_pivot(rows[best_row], best_col);

        const std::vector<std::size_t> targets(col_rows[best_col].begin(),
                                               col_rows[best_col].end());
        for (std::size_t t : targets)
        {
            for (const auto& e : rows[t])
                col_rows[e.first].erase(t);
            rows[t] = ops.eliminate(rows[t], rows[best_row], best_col);
            for (const auto& e : rows[t])
                col_rows[e.first].insert(t);
            if (rows[t].empty())
                active[t] = false;
        }
        rows[best_row].clear();
    }
    return rank;
}

}   // namespace detail

inline std::size_t matrix_rank(const SparseMatrix& m, const FieldSpec& field)
{
    if (field.is_rational())
        return detail::sparse_rank(m, detail::RationalRowOps{});
    return detail::sparse_rank(m, detail::PrimeRowOps{field.characteristic()});
}

// ------------------------------------------------------------------------
//                          Boundary matrices
// ------------------------------------------------------------------------

namespace detail {

/// Faces of c grouped by dimension: by_dim[i + 1] holds the i-faces in order.
inline std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& c)
{
    std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(c.dimension() + 2));
    for (const auto& f : c.faces())
        by_dim[f.size()].push_back(f);
    return by_dim;
}

inline std::size_t face_index(const std::vector<Face>& sorted, const Face& f)
{
    return static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), f) - sorted.begin());
}

inline SparseMatrix boundary_from_faces(const std::vector<std::vector<Face>>& by_dim, int i,
                                        const FieldSpec& field)
{
    const int dim = static_cast<int>(by_dim.size()) - 2;
    if (i < -1 || i > dim + 1)
        throw std::out_of_range("boundary degree " + std::to_string(i) + " outside -1.."
                                + std::to_string(dim + 1));
    if (i == -1)
        return SparseMatrix(0, 1);
    const auto& rows = by_dim[static_cast<std::size_t>(i)];
    if (i == dim + 1)
        return SparseMatrix(rows.size(), 0);
    const auto& cols = by_dim[static_cast<std::size_t>(i + 1)];

    const std::int64_t p = field.characteristic();
    auto reduce = [&](std::int64_t v) { return p == 0 ? v : ((v % p) + p) % p; };

    std::vector<SparseMatrix::Entry> entries;
    entries.reserve(cols.size() * static_cast<std::size_t>(i + 1));
    for (std::size_t col = 0; col < cols.size(); ++col)
    {
        const Face& f = cols[col];
        for (std::size_t s = 0; s < f.size(); ++s)
        {
            Face facet_of(f);
            facet_of.erase(facet_of.begin() + static_cast<std::ptrdiff_t>(s));
            std::int64_t v = reduce(s % 2 == 0 ? 1 : -1);
            if (v != 0)
                entries.push_back({face_index(rows, facet_of), col, v});
        }
    }
    return SparseMatrix(rows.size(), cols.size(), std::move(entries));
}

}   // namespace detail

/**
 * Matrix of the boundary map from i-faces (columns) to (i-1)-faces (rows),
 * both in sorted face order, with entries reduced into the given field.
 * Valid for -1 <= i <= dim(c) + 1; d_{-1} is the 0x1 zero map and d_{dim+1}
 * has no columns.
 */
inline SparseMatrix boundary_matrix(const SimplicialComplex& c, int i, const FieldSpec& field)
{
    c.require_nonvoid("boundary matrix");
    return detail::boundary_from_faces(detail::faces_by_dimension(c), i, field);
}

/**
 * dim H~_i = f_i - rank(d_i) - rank(d_{i+1}) for -1 <= i <= max_degree
 * (defaults to the full range up to dim c).
 */
inline BettiTable reduced_betti(const SimplicialComplex& c, const FieldSpec& field,
                                int max_degree = std::numeric_limits<int>::max())
{
    c.require_nonvoid("reduced homology");
    const auto by_dim = detail::faces_by_dimension(c);
    const int dim = c.dimension();
    const int top = std::min(dim, max_degree);
    if (top < -1)
        return BettiTable();

    // rank_of[i + 1] = rank d_i, for i = -1..top+1.
    std::vector<std::size_t> rank_of(static_cast<std::size_t>(top + 3), 0);
    for (int i = 0; i <= top + 1; ++i)
        rank_of[static_cast<std::size_t>(i + 1)] =
            matrix_rank(detail::boundary_from_faces(by_dim, i, field), field);

    std::vector<std::size_t> dims;
    for (int i = -1; i <= top; ++i)
    {
        const std::size_t faces_i = by_dim[static_cast<std::size_t>(i + 1)].size();
        dims.push_back(faces_i - rank_of[static_cast<std::size_t>(i + 1)]
                       - rank_of[static_cast<std::size_t>(i + 2)]);
    }
    return BettiTable(std::move(dims));
}

/// Every reduced Betti number vanishes.  Note that {∅} is not acyclic.
inline bool is_k_acyclic(const SimplicialComplex& c, const FieldSpec& field)
{
    return reduced_betti(c, field).all_zero();
}

}   // namespace gorenstein

#endif
