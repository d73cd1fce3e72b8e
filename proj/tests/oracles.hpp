/**
 * Independent reference computations used only by the tests.  Nothing here
 * calls into the library beyond reading plain data (adjacency and facets),
 * so agreement with the library is a genuine cross-check.
 */

#ifndef GORENSTEIN_TESTS_ORACLES_HPP
#define GORENSTEIN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// ------------------------------------------------------------------------
//                    Graphs as adjacency bitmasks (n <= 20)
// ------------------------------------------------------------------------

struct MaskGraph
{
    int n = 0;
    std::vector<std::uint32_t> adj;   // adj[v] = bitmask of neighbours

    bool independent(std::uint32_t s) const
    {
        for (int v = 0; v < n; ++v)
            if (((s >> v) & 1) && (adj[v] & s))
                return false;
        return true;
    }
};

inline MaskGraph mask_graph(int n, const std::vector<std::pair<int, int>>& edges)
{
    MaskGraph g{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
    for (auto [u, v] : edges)
    {
        g.adj[u] |= 1u << v;
        g.adj[v] |= 1u << u;
    }
    return g;
}

inline std::vector<int> bits(std::uint32_t s)
{
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if ((s >> v) & 1)
            out.push_back(v);
    return out;
}

/// Every independent set, by subset enumeration.
inline std::vector<std::uint32_t> independent_sets(const MaskGraph& g)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << g.n); ++s)
        if (g.independent(s))
            out.push_back(s);
    return out;
}

inline std::vector<std::vector<int>> maximal_independent_sets(const MaskGraph& g)
{
    std::vector<std::vector<int>> out;
    for (std::uint32_t s : independent_sets(g))
    {
        bool maximal = true;
        for (int v = 0; v < g.n && maximal; ++v)
            if (!((s >> v) & 1) && g.independent(s | (1u << v)))
                maximal = false;
        if (maximal)
            out.push_back(bits(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int alpha(const MaskGraph& g)
{
    int best = 0;
    for (std::uint32_t s : independent_sets(g))
        best = std::max(best, __builtin_popcount(s));
    return best;
}

/// Shortest cycle by trying every cyclic vertex sequence; 0 for forests.
inline int girth(const MaskGraph& g)
{
    int best = 0;
    std::vector<int> path;
    auto dfs = [&](auto&& self, std::uint32_t used) -> void {
        const int len = static_cast<int>(path.size());
        if (best && len >= best)
            return;
        const int last = path.back();
        if (len >= 3 && ((g.adj[last] >> path.front()) & 1))
            best = best ? std::min(best, len) : len;
        for (int w = path.front() + 1; w < g.n; ++w)
            if (!((used >> w) & 1) && ((g.adj[last] >> w) & 1))
            {
                path.push_back(w);
                self(self, used | (1u << w));
                path.pop_back();
            }
    };
    for (int s = 0; s < g.n; ++s)
    {
        path = {s};
        dfs(dfs, 1u << s);
    }
    return best;
}

// ------------------------------------------------------------------------
//                  Complexes given by facets (<= 20 vertices)
// ------------------------------------------------------------------------

/**
 * Faces of the complex generated by `facets`, as bitmasks over compacted
 * labels, grouped by size.  by_size[k] is sorted.
 */
inline std::vector<std::vector<std::uint32_t>> faces_by_size(
    const std::vector<std::vector<int>>& facets)
{
    std::map<int, int> compact;
    for (const auto& f : facets)
        for (int v : f)
            compact.emplace(v, 0);
    int next = 0;
    for (auto& [label, idx] : compact)
        idx = next++;
    std::set<std::uint32_t> all;
    for (const auto& f : facets)
    {
        std::uint32_t m = 0;
        for (int v : f)
            m |= 1u << compact[v];
        for (std::uint32_t s = m;; s = (s - 1) & m)
        {
            all.insert(s);
            if (s == 0)
                break;
        }
    }
    if (all.empty())
        all.insert(0);
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(next) + 1);
    for (std::uint32_t s : all)
        by_size[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
    while (by_size.size() > 1 && by_size.back().empty())
        by_size.pop_back();
    return by_size;
}

/// Integer matrix of the boundary from size-k faces to size-(k-1) faces.
inline std::vector<std::vector<Integer>> boundary(
    const std::vector<std::vector<std::uint32_t>>& by_size, std::size_t k)
{
    const auto& cols = by_size[k];
    const auto& rows = by_size[k - 1];
    std::vector<std::vector<Integer>> m(rows.size(), std::vector<Integer>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
    {
        int position = 0;
        for (int v = 0; v < 32; ++v)
        {
            if (!((cols[c] >> v) & 1))
                continue;
            std::uint32_t smaller = cols[c] & ~(1u << v);
            auto r = static_cast<std::size_t>(
                std::find(rows.begin(), rows.end(), smaller) - rows.begin());
            m[r][c] = (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    return m;
}

/// Plain dense Gaussian elimination over Q.
inline std::size_t rank_rational(std::vector<std::vector<Integer>> in)
{
    if (in.empty())
        return 0;
    std::vector<std::vector<Rational>> a(in.size());
    for (std::size_t r = 0; r < in.size(); ++r)
        for (const auto& x : in[r])
            a[r].emplace_back(x);
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r)
        {
            if (a[r][c] == 0)
                continue;
            Rational factor = a[r][c] / a[rank][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                a[r][cc] -= factor * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

/// Nonzero diagonal of the Smith normal form of an integer matrix.
inline std::vector<Integer> elementary_divisors(std::vector<std::vector<Integer>> a)
{
    std::vector<Integer> diag;
    if (a.empty() || a[0].empty())
        return diag;
    const std::size_t rows = a.size(), cols = a[0].size();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    {
        // Bring a smallest nonzero entry of the remaining block to (t, t).
        while (true)
        {
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc])))
                    {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows)
                goto done;
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r)
            {
                Integer q = a[r][t] / a[t][t];
                if (q != 0)
                    for (std::size_t c = t; c < cols; ++c)
                        a[r][c] -= q * a[t][c];
                if (a[r][t] != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c)
            {
                Integer q = a[t][c] / a[t][t];
                if (q != 0)
                    for (std::size_t r = t; r < rows; ++r)
                        a[r][c] -= q * a[r][t];
                if (a[t][c] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Divisibility of the rest of the block by the pivot.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols && divides; ++c)
                    if (a[r][c] % a[t][t] != 0)
                    {
                        for (std::size_t cc = t; cc < cols; ++cc)
                            a[t][cc] += a[r][cc];
                        divides = false;
                    }
            if (divides)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
done:
    return diag;
}

/// Rank over F_p (p > 0) or Q (p == 0) read off the Smith normal form.
inline std::size_t rank_from_divisors(const std::vector<Integer>& divisors, unsigned p)
{
    if (p == 0)
        return divisors.size();
    return static_cast<std::size_t>(std::count_if(divisors.begin(), divisors.end(),
                                                  [&](const Integer& d) { return d % p != 0; }));
}

/**
 * Reduced Betti numbers, degrees -1..dim, from a rank function applied to
 * the integer boundary matrices.
 */
template <typename RankFn>
std::vector<std::size_t> reduced_betti(const std::vector<std::vector<int>>& facets, RankFn rank)
{
    auto by_size = faces_by_size(facets);
    const std::size_t top = by_size.size();   // sizes 0..top-1
    std::vector<std::size_t> ranks(top + 1, 0);   // ranks[k] = rank of d from size k
    for (std::size_t k = 1; k < top; ++k)
        ranks[k] = rank(boundary(by_size, k));
    std::vector<std::size_t> betti;
    for (std::size_t k = 0; k < top; ++k)
        betti.push_back(by_size[k].size() - ranks[k] - ranks[k + 1]);
    return betti;
}

inline std::vector<std::size_t> betti_rational(const std::vector<std::vector<int>>& facets)
{
    return reduced_betti(facets, [](auto m) { return rank_rational(std::move(m)); });
}

inline std::vector<std::size_t> betti_snf(const std::vector<std::vector<int>>& facets, unsigned p)
{
    return reduced_betti(facets, [p](auto m) {
        return rank_from_divisors(elementary_divisors(std::move(m)), p);
    });
}

/// Random facet list on `n` vertices: `count` random subsets of bounded size.
inline std::vector<std::vector<int>> random_facets(std::mt19937& rng, int n, int count,
                                                   int max_size)
{
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[i] = i;
    std::vector<std::vector<int>> out;
    for (int i = 0; i < count; ++i)
    {
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<int> f(labels.begin(), labels.begin() + size_dist(rng));
        std::sort(f.begin(), f.end());
        out.push_back(f);
    }
    return out;
}

/// Erdos-Renyi graph edge list.
inline std::vector<std::pair<int, int>> random_edges(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return edges;
}

}   // namespace oracle

#endif
