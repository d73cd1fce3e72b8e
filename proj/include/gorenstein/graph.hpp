/**
 * Finite simple graphs and their independence combinatorics.
 *
 * Vertices are labelled 0, ..., n-1.  Every operation here is a pure
 * function of its (immutable) arguments.
 */

#ifndef GORENSTEIN_GRAPH_HPP
#define GORENSTEIN_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gorenstein {

using Vertex = int;

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

class Graph
{
    public:
        Graph() = default;

        /// Edgeless graph on n vertices.
        explicit Graph(int n) : adj_(checked_order(n)) {}

        /**
         * Graph on n vertices with exactly the given edges.  Duplicate edges
         * (in either orientation) are collapsed.
         *
         * Throws GraphError on an out-of-range label or a loop.
         */
        static Graph from_edge_list(int n, const std::vector<Edge>& edges)
        {
            Graph g(n);
            for (auto [u, v] : edges)
            {
                if (u < 0 || v < 0 || u >= n || v >= n)
                    throw GraphError(
                        "edge (" + std::to_string(u) + "," + std::to_string(v)
                        + ") has a label outside 0.." + std::to_string(n - 1)
                    );
                if (u == v)
                    throw GraphError("loop at vertex " + std::to_string(u));
                g.adj_[u].push_back(v);
                g.adj_[v].push_back(u);
            }
            for (auto& nbrs : g.adj_)
            {
                std::sort(nbrs.begin(), nbrs.end());
                nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            }
            return g;
        }

        int order() const { return static_cast<int>(adj_.size()); }

        std::size_t edge_count() const
        {
            std::size_t twice = 0;
            for (const auto& nbrs : adj_)
                twice += nbrs.size();
            return twice / 2;
        }

        const VertexSet& neighbors(Vertex v) const
        {
            check_vertex(v);
            return adj_[v];
        }

        bool adjacent(Vertex u, Vertex v) const
        {
            check_vertex(u);
            check_vertex(v);
            return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
        }

        /// All edges as (u, v) with u < v, in lexicographic order.
        std::vector<Edge> edges() const
        {
            std::vector<Edge> out;
            for (Vertex u = 0; u < order(); ++u)
                for (Vertex v : adj_[u])
                    if (u < v)
                        out.emplace_back(u, v);
            return out;
        }

        void check_vertex(Vertex v) const
        {
            if (v < 0 || v >= order())
                throw GraphError(
                    "vertex " + std::to_string(v) + " outside 0.."
                    + std::to_string(order() - 1)
                );
        }

        friend bool operator==(const Graph&, const Graph&) = default;

    private:
        std::vector<VertexSet> adj_;

        static std::size_t checked_order(int n)
        {
            if (n < 0)
                throw GraphError("negative vertex count");
            return static_cast<std::size_t>(n);
        }
};

/**
 * An induced subgraph together with the label map back to the host graph:
 * vertex i of `graph` is vertex `labels[i]` of the host.
 */
struct LabeledSubgraph
{
    Graph graph;
    VertexSet labels;
};

/**
 * Girth extended by infinity: either the length of a shortest cycle (>= 3)
 * or infinite for forests.
 */
class ExtendedGirth
{
    public:
        static ExtendedGirth infinite() { return ExtendedGirth(); }

        static ExtendedGirth finite(int length)
        {
            if (length < 3)
                throw std::invalid_argument("cycle length below 3");
            return ExtendedGirth(length);
        }

        bool is_infinite() const { return !length_.has_value(); }
        int length() const { return length_.value(); }

        bool at_least(int k) const { return is_infinite() || *length_ >= k; }

        friend bool operator==(const ExtendedGirth&, const ExtendedGirth&) = default;

    private:
        ExtendedGirth() = default;
        explicit ExtendedGirth(int length) : length_(length) {}

        std::optional<int> length_;
};

// ------------------------------------------------------------------------
//                              Families
// ------------------------------------------------------------------------

enum class Family
{
    Path,
    Cycle,
    Complete,
    PaperGn
};

namespace detail {

inline Graph paper_gn(int n)
{
    // Edge list in 1-based labels x_1..x_{3n-1}; shifted to 0-based at the end.
    std::vector<Edge> e{{1, 2}};
    for (int k = 1; k <= n - 1; ++k)
    {
        e.emplace_back(3 * k - 1, 3 * k);
        e.emplace_back(3 * k, 3 * k + 1);
        e.emplace_back(3 * k + 1, 3 * k + 2);
        e.emplace_back(3 * k + 2, 3 * k - 2);
    }
    for (int l = 2; l <= n - 1; ++l)
        e.emplace_back(3 * l - 3, 3 * l);
    for (auto& [u, v] : e)
    {
        --u;
        --v;
    }
    return Graph::from_edge_list(3 * n - 1, e);
}

}   // namespace detail

/**
 * Build a member of a named family.
 *
 * PaperGn(n), n >= 3, is the planar girth-4 Gorenstein graph on 3n-1
 * vertices.  Vertex i here is x_{i+1} in the usual 1-based labelling, with
 * edges x1x2; x_{3k-1}x_{3k}, x_{3k}x_{3k+1}, x_{3k+1}x_{3k+2},
 * x_{3k+2}x_{3k-2} for k = 1..n-1; and x_{3l-3}x_{3l} for l = 2..n-1.
 */
inline Graph generate(Family family, int n)
{
    auto require = [&](int minimum, const char* name) {
        if (n < minimum)
            throw GraphError(
                std::string(name) + " needs n >= " + std::to_string(minimum)
                + ", got " + std::to_string(n)
            );
    };
    std::vector<Edge> edges;
    switch (family)
    {
        case Family::Path:
            require(1, "path");
            for (int i = 0; i + 1 < n; ++i)
                edges.emplace_back(i, i + 1);
            return Graph::from_edge_list(n, edges);
        case Family::Cycle:
            require(3, "cycle");
            for (int i = 0; i < n; ++i)
                edges.emplace_back(i, (i + 1) % n);
            return Graph::from_edge_list(n, edges);
        case Family::Complete:
            require(1, "complete graph");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    edges.emplace_back(i, j);
            return Graph::from_edge_list(n, edges);
        case Family::PaperGn:
            require(3, "PaperGn");
            return detail::paper_gn(n);
    }
    throw GraphError("unknown family");
}

inline std::optional<Family> parse_family(std::string_view name)
{
    if (name == "path")
        return Family::Path;
    if (name == "cycle")
        return Family::Cycle;
    if (name == "complete")
        return Family::Complete;
    if (name == "paper-gn" || name == "PaperGn")
        return Family::PaperGn;
    return std::nullopt;
}

/// Vertex labels of h are shifted by g.order(); no edges between the parts.
inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    std::vector<Edge> edges = g.edges();
    const int shift = g.order();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph::from_edge_list(g.order() + h.order(), edges);
}

// ------------------------------------------------------------------------
//                         Structural queries
// ------------------------------------------------------------------------

inline ExtendedGirth girth(const Graph& g)
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root)
    {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<Vertex> queue{root};
        dist[root] = 0;
        parent[root] = -1;
        while (!queue.empty())
        {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u))
            {
                if (dist[w] < 0)
                {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != w)
                {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return ExtendedGirth::infinite();
    return ExtendedGirth::finite(best);
}

inline bool is_triangle_free(const Graph& g)
{
    for (auto [u, v] : g.edges())
    {
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end())
        {
            if (*i == *j)
                return false;
            if (*i < *j)
                ++i;
            else
                ++j;
        }
    }
    return true;
}

/// Connected components, each sorted, listed by smallest member.
inline std::vector<VertexSet> components(const Graph& g)
{
    const int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < n; ++s)
    {
        if (seen[s])
            continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty())
        {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[w])
                {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g)
{
    return components(g).size() <= 1;
}

inline bool has_isolated_vertices(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.neighbors(v).empty())
            return true;
    return false;
}

// ------------------------------------------------------------------------
//                    Subgraphs, deletions, localizations
// ------------------------------------------------------------------------

inline LabeledSubgraph induced_subgraph(const Graph& g, VertexSet s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        g.check_vertex(s[i]);
        index[s[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            edges.emplace_back(index[u], index[v]);
    return {Graph::from_edge_list(static_cast<int>(s.size()), edges), std::move(s)};
}

/// Induced subgraph on V(g) minus the given set.
inline LabeledSubgraph delete_vertices(const Graph& g, const VertexSet& removed)
{
    std::vector<bool> gone(g.order(), false);
    for (Vertex v : removed)
    {
        g.check_vertex(v);
        gone[v] = true;
    }
    VertexSet keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[v])
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline Graph delete_edge(const Graph& g, Edge e)
{
    auto [a, b] = e;
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b))
        throw GraphError(
            "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge"
        );
    if (a > b)
        std::swap(a, b);
    std::vector<Edge> edges;
    for (auto uv : g.edges())
        if (uv != Edge{a, b})
            edges.push_back(uv);
    return Graph::from_edge_list(g.order(), edges);
}

inline bool is_independent(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

/// G_S: delete an independent set S together with all of its neighbours.
inline LabeledSubgraph localize(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        g.check_vertex(v);
    if (!is_independent(g, s))
        throw GraphError("localization requires an independent set");
    VertexSet removed = s;
    for (Vertex v : s)
        removed.insert(removed.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    return delete_vertices(g, removed);
}

/// G_ab = G minus (N(a) + N(b)) for an edge ab; a and b go too.
inline LabeledSubgraph edge_localize(const Graph& g, Vertex a, Vertex b)
{
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b))
        throw GraphError(
            "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge"
        );
    VertexSet removed = g.neighbors(a);
    removed.insert(removed.end(), g.neighbors(b).begin(), g.neighbors(b).end());
    return delete_vertices(g, removed);
}

// ------------------------------------------------------------------------
//                         Independent sets
// ------------------------------------------------------------------------

namespace detail {

using Bits = boost::dynamic_bitset<>;

/**
 * Bron-Kerbosch with pivoting, run on the complement of g: a clique of the
 * complement is an independent set of g.  `closed[v]` is N_G[v].
 */
inline void enumerate_mis(const std::vector<Bits>& closed, VertexSet& current,
                          Bits candidates, Bits excluded,
                          std::vector<VertexSet>& out)
{
    if (candidates.none())
    {
        if (excluded.none())
            out.push_back(current);
        return;
    }
    // Pivot minimizing the number of branches |P ∩ N[u]|.
    Bits pool = candidates | excluded;
    std::size_t pivot = pool.find_first();
    std::size_t fewest = (candidates & closed[pivot]).count();
    for (std::size_t u = pool.find_next(pivot); u != Bits::npos; u = pool.find_next(u))
    {
        std::size_t c = (candidates & closed[u]).count();
        if (c < fewest)
        {
            fewest = c;
            pivot = u;
        }
    }
    Bits branch = candidates & closed[pivot];
    for (std::size_t v = branch.find_first(); v != Bits::npos; v = branch.find_next(v))
    {
        current.push_back(static_cast<Vertex>(v));
        enumerate_mis(closed, current, candidates - closed[v], excluded - closed[v], out);
        current.pop_back();
        candidates.reset(v);
        excluded.set(v);
    }
}

}   // namespace detail

/**
 * All inclusion-maximal independent sets, each sorted, in lexicographic
 * order.  The empty graph has exactly one, the empty set.
 */
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<detail::Bits> closed(n, detail::Bits(n));
    for (std::size_t v = 0; v < n; ++v)
    {
        closed[v].set(v);
        for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
            closed[v].set(static_cast<std::size_t>(w));
    }
    detail::Bits all(n);
    all.set();
    std::vector<VertexSet> out;
    VertexSet current;
    detail::enumerate_mis(closed, current, all, detail::Bits(n), out);
    for (auto& s : out)
        std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline int independence_number(const Graph& g)
{
    std::size_t best = 0;
    for (const auto& s : maximal_independent_sets(g))
        best = std::max(best, s.size());
    return static_cast<int>(best);
}

inline bool is_well_covered(const Graph& g)
{
    auto sets = maximal_independent_sets(g);
    return std::all_of(sets.begin(), sets.end(),
                       [&](const VertexSet& s) { return s.size() == sets.front().size(); });
}

/**
 * W2 membership: g is well-covered, and every vertex deletion g\x is
 * well-covered with the same independence number.  Any graph with an
 * isolated vertex fails (deleting it lowers alpha); in particular K1 is not
 * in W2.  The empty graph satisfies the definition vacuously.
 */
inline bool is_in_w2(const Graph& g)
{
    if (!is_well_covered(g))
        return false;
    const int alpha = independence_number(g);
    for (Vertex x = 0; x < g.order(); ++x)
    {
        Graph h = delete_vertices(g, {x}).graph;
        if (independence_number(h) != alpha || !is_well_covered(h))
            return false;
    }
    return true;
}

/// Every edge e has alpha(g \ e) > alpha(g).  Vacuously true without edges.
inline bool is_alpha_critical(const Graph& g)
{
    const int alpha = independence_number(g);
    for (const auto& e : g.edges())
        if (independence_number(delete_edge(g, e)) <= alpha)
            return false;
    return true;
}

// ------------------------------------------------------------------------
//                           Text formats
// ------------------------------------------------------------------------

namespace detail {

inline void graph6_fail(const std::string& why)
{
    throw GraphError("graph6: " + why);
}

}   // namespace detail

/**
 * Decode a single graph6 string.  An optional ">>graph6<<" header and
 * trailing whitespace are accepted.
 */
inline Graph parse_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'
                             || text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    for (char ch : text)
        if (ch < 63 || ch > 126)
            detail::graph6_fail(
                "illegal character (code " + std::to_string(static_cast<int>(
                    static_cast<unsigned char>(ch))) + ")"
            );
    if (text.empty())
        detail::graph6_fail("empty input");

    auto take6 = [&](std::size_t count) {
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < count; ++i)
            value = (value << 6) | static_cast<std::uint64_t>(text[i] - 63);
        text.remove_prefix(count);
        return value;
    };

    std::uint64_t n;
    if (text[0] != 126)
    {
        n = take6(1);
    }
    else if (text.size() >= 2 && text[1] != 126)
    {
        text.remove_prefix(1);
        if (text.size() < 3)
            detail::graph6_fail("malformed length prefix");
        n = take6(3);
        if (n < 63)
            detail::graph6_fail("malformed length prefix");
    }
    else
    {
        if (text.size() < 8)
            detail::graph6_fail("malformed length prefix");
        text.remove_prefix(2);
        n = take6(6);
        if (n < 258048)
            detail::graph6_fail("malformed length prefix");
    }
    if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        detail::graph6_fail("vertex count too large");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() != bytes)
        detail::graph6_fail(
            "expected " + std::to_string(bytes) + " adjacency bytes, got "
            + std::to_string(text.size())
        );

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++k)
        {
            int byte = text[k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    for (; k < bytes * 6; ++k)
        if (((text[k / 6] - 63) >> (5 - k % 6)) & 1)
            detail::graph6_fail("nonzero padding bits");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline std::string to_graph6(const Graph& g)
{
    std::string out;
    const auto n = static_cast<std::uint64_t>(g.order());
    auto put6 = [&](std::uint64_t value, int groups) {
        for (int i = groups - 1; i >= 0; --i)
            out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
    };
    if (n <= 62)
    {
        put6(n, 1);
    }
    else if (n <= 258047)
    {
        out.push_back(126);
        put6(n, 3);
    }
    else
    {
        out.push_back(126);
        out.push_back(126);
        put6(n, 6);
    }
    int acc = 0, filled = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i)
        {
            acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++filled == 6)
            {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/**
 * Edge-list text: first line "n m", then m lines "u v" (0-based).  Blank
 * lines and lines starting with '#' are skipped.
 */
inline Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
    {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        lines.push_back(line);
    }
    if (lines.empty())
        throw GraphError("edge list: missing header line");

    auto read_pair = [](const std::string& l, std::size_t lineno) {
        std::istringstream ls(l);
        long long a, b;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest))
            throw GraphError("edge list: malformed line " + std::to_string(lineno));
        if (a < 0 || b < 0 || a > std::numeric_limits<int>::max()
            || b > std::numeric_limits<int>::max())
            throw GraphError("edge list: bad value on line " + std::to_string(lineno));
        return Edge{static_cast<int>(a), static_cast<int>(b)};
    };

    auto [n, m] = read_pair(lines[0], 1);
    if (lines.size() - 1 != static_cast<std::size_t>(m))
        throw GraphError(
            "edge list: header announces " + std::to_string(m) + " edges, found "
            + std::to_string(lines.size() - 1)
        );
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i)
        edges.push_back(read_pair(lines[i], i + 1));
    return Graph::from_edge_list(n, edges);
}

inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

}   // namespace gorenstein

#endif
