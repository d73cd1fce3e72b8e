/**
 * Simplicial complexes stored by their facets, with the constructions
 * needed for Stanley-Reisner style arguments: independence complexes,
 * links, stars, cores, joins, restrictions and deletions, f-vectors and
 * reduced Euler characteristics.
 *
 * A complex carries an explicit ground set, which may contain vertices that
 * lie in no face.  The complex {∅} (no vertices, one empty face) is an
 * ordinary value; the void complex (no faces at all) exists only as a
 * flagged special case.
 */

#ifndef GORENSTEIN_COMPLEX_HPP
#define GORENSTEIN_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace gorenstein {

/// Strictly increasing vertex labels; the empty face is valid.
using Face = std::vector<Vertex>;

class ComplexError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// Order faces by dimension, then lexicographically.
struct FaceOrder
{
    bool operator()(const Face& a, const Face& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/**
 * Face counts by dimension: counts[0] is f_{-1}, counts[1] is f_0, ...
 */
struct FVector
{
    std::vector<std::size_t> counts;

    std::size_t at(int dim) const
    {
        auto i = static_cast<std::size_t>(dim + 1);
        return (dim >= -1 && i < counts.size()) ? counts[i] : 0;
    }

    /// Largest dimension with a face, -1 for {∅}.
    int top_dimension() const { return static_cast<int>(counts.size()) - 2; }

    friend bool operator==(const FVector&, const FVector&) = default;
};

namespace detail {

inline bool is_subset(const Face& a, const Face& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct FaceCache
{
    std::once_flag once;
    std::vector<Face> faces;
};

}   // namespace detail

class SimplicialComplex
{
    public:
        /// The complex {∅} on an empty ground set.
        SimplicialComplex() : facets_{Face{}} {}

        /**
         * Complex generated by the given faces on the given ground set.
         * Non-maximal generators are absorbed.  With no generators the
         * result is {∅}.
         */
        static SimplicialComplex from_generators(VertexSet ground, std::vector<Face> gens)
        {
            normalize_set(ground, "ground set");
            for (auto& f : gens)
            {
                normalize_face(f);
                for (Vertex v : f)
                    if (!std::binary_search(ground.begin(), ground.end(), v))
                        throw ComplexError(
                            "face vertex " + std::to_string(v) + " outside the ground set"
                        );
            }
            SimplicialComplex c;
            c.ground_ = std::move(ground);
            c.facets_ = maximal_elements(std::move(gens));
            return c;
        }

        /// The full simplex on the given vertices.
        static SimplicialComplex simplex(VertexSet vertices)
        {
            normalize_set(vertices, "simplex");
            return from_generators(vertices, {vertices});
        }

        /// The void complex: no faces at all, not even ∅.
        static SimplicialComplex void_complex(VertexSet ground = {})
        {
            normalize_set(ground, "ground set");
            SimplicialComplex c;
            c.ground_ = std::move(ground);
            c.facets_.clear();
            c.void_ = true;
            return c;
        }

        bool is_void() const { return void_; }
        const VertexSet& ground_set() const { return ground_; }

        /// Facets in lexicographic order.
        const std::vector<Face>& facets() const { return facets_; }

        /// Maximum face dimension; -1 for {∅}.  Throws on the void complex.
        int dimension() const
        {
            require_nonvoid("dimension");
            std::size_t top = 0;
            for (const auto& f : facets_)
                top = std::max(top, f.size());
            return static_cast<int>(top) - 1;
        }

        bool contains(const Face& f) const
        {
            for (const auto& facet : facets_)
                if (detail::is_subset(f, facet))
                    return true;
            return false;
        }

        bool has_vertex(Vertex v) const
        {
            return std::binary_search(ground_.begin(), ground_.end(), v);
        }

        /// All faces, including ∅, sorted by (dimension, lexicographic).
        const std::vector<Face>& faces() const
        {
            std::call_once(cache_->once, [this] { cache_->faces = enumerate_faces(); });
            return cache_->faces;
        }

        void require_nonvoid(const char* what) const
        {
            if (void_)
                throw ComplexError(std::string(what) + " is undefined on the void complex");
        }

        friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
        {
            return a.void_ == b.void_ && a.ground_ == b.ground_ && a.facets_ == b.facets_;
        }

        static void normalize_face(Face& f)
        {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw ComplexError("duplicate vertex in face");
            if (!f.empty() && f.front() < 0)
                throw ComplexError("negative vertex label");
        }

    private:
        VertexSet ground_;
        std::vector<Face> facets_;
        bool void_ = false;
        // Shared between copies; a complex never changes after construction.
        std::shared_ptr<detail::FaceCache> cache_ = std::make_shared<detail::FaceCache>();

        static void normalize_set(VertexSet& s, const char* what)
        {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (!s.empty() && s.front() < 0)
                throw ComplexError(std::string("negative label in ") + what);
        }

        static std::vector<Face> maximal_elements(std::vector<Face> gens)
        {
            std::sort(gens.begin(), gens.end(), [](const Face& a, const Face& b) {
                if (a.size() != b.size())
                    return a.size() > b.size();
                return a < b;
            });
            gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
            std::vector<Face> kept;
            for (auto& g : gens)
            {
                bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Face& k) {
                    return detail::is_subset(g, k);
                });
                if (!absorbed)
                    kept.push_back(std::move(g));
            }
            if (kept.empty())
                kept.push_back(Face{});
            std::sort(kept.begin(), kept.end());
            return kept;
        }

        std::vector<Face> enumerate_faces() const
        {
            std::set<Face, FaceOrder> all;
            for (const auto& facet : facets_)
            {
                if (facet.size() >= 63)
                    throw ComplexError("facet too large to enumerate its faces");
                const std::uint64_t subsets = std::uint64_t{1} << facet.size();
                for (std::uint64_t mask = 0; mask < subsets; ++mask)
                {
                    Face f;
                    for (std::size_t i = 0; i < facet.size(); ++i)
                        if ((mask >> i) & 1)
                            f.push_back(facet[i]);
                    all.insert(std::move(f));
                }
            }
            return {all.begin(), all.end()};
        }
};

// ------------------------------------------------------------------------
//                             Constructions
// ------------------------------------------------------------------------

/// Faces are the independent sets of g; facets are its maximal ones.
inline SimplicialComplex independence_complex(const Graph& g)
{
    VertexSet ground(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        ground[v] = v;
    return SimplicialComplex::from_generators(std::move(ground), maximal_independent_sets(g));
}

/// Independence complex of an induced subgraph, on the host graph's labels.
inline SimplicialComplex independence_complex_on(const LabeledSubgraph& sub)
{
    std::vector<Face> gens = maximal_independent_sets(sub.graph);
    for (auto& f : gens)
        for (auto& v : f)
            v = sub.labels[static_cast<std::size_t>(v)];
    return SimplicialComplex::from_generators(sub.labels, std::move(gens));
}

inline const std::vector<Face>& faces(const SimplicialComplex& c)
{
    return c.faces();
}

inline FVector f_vector(const SimplicialComplex& c)
{
    if (c.is_void())
        return FVector{{0}};
    FVector f;
    f.counts.assign(static_cast<std::size_t>(c.dimension() + 2), 0);
    for (const auto& face : c.faces())
        ++f.counts[face.size()];
    return f;
}

/// lk(F) = {H : H ∩ F = ∅, H ∪ F ∈ c}, on ground set V(c) \ F.
inline SimplicialComplex link(const SimplicialComplex& c, Face f)
{
    c.require_nonvoid("link");
    SimplicialComplex::normalize_face(f);
    if (!c.contains(f))
        throw ComplexError("link of a non-face");
    std::vector<Face> gens;
    for (const auto& facet : c.facets())
        if (detail::is_subset(f, facet))
        {
            Face rest;
            std::set_difference(facet.begin(), facet.end(), f.begin(), f.end(),
                                std::back_inserter(rest));
            gens.push_back(std::move(rest));
        }
    VertexSet ground;
    std::set_difference(c.ground_set().begin(), c.ground_set().end(), f.begin(), f.end(),
                        std::back_inserter(ground));
    return SimplicialComplex::from_generators(std::move(ground), std::move(gens));
}

namespace detail {

inline VertexSet checked_subset(const SimplicialComplex& c, VertexSet s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s)
        if (!c.has_vertex(v))
            throw ComplexError("vertex " + std::to_string(v) + " not in the ground set");
    return s;
}

}   // namespace detail

/// c \ S: faces avoiding S, on ground set V(c) \ S.
inline SimplicialComplex delete_set(const SimplicialComplex& c, VertexSet s)
{
    s = detail::checked_subset(c, std::move(s));
    VertexSet ground;
    std::set_difference(c.ground_set().begin(), c.ground_set().end(), s.begin(), s.end(),
                        std::back_inserter(ground));
    if (c.is_void())
        return SimplicialComplex::void_complex(ground);
    std::vector<Face> gens;
    for (const auto& facet : c.facets())
    {
        Face rest;
        std::set_difference(facet.begin(), facet.end(), s.begin(), s.end(),
                            std::back_inserter(rest));
        gens.push_back(std::move(rest));
    }
    return SimplicialComplex::from_generators(std::move(ground), std::move(gens));
}

/// c_S: faces inside S, on ground set S.
inline SimplicialComplex restrict(const SimplicialComplex& c, VertexSet s)
{
    s = detail::checked_subset(c, std::move(s));
    if (c.is_void())
        return SimplicialComplex::void_complex(s);
    std::vector<Face> gens;
    for (const auto& facet : c.facets())
    {
        Face inside;
        std::set_intersection(facet.begin(), facet.end(), s.begin(), s.end(),
                              std::back_inserter(inside));
        gens.push_back(std::move(inside));
    }
    return SimplicialComplex::from_generators(std::move(s), std::move(gens));
}

/**
 * st(v) = {F : F ∪ {v} ∈ c}, kept on the ground set of c.  Void when v is
 * a ground-set vertex that lies in no face.
 */
inline SimplicialComplex star(const SimplicialComplex& c, Vertex v)
{
    if (!c.has_vertex(v))
        throw ComplexError("vertex " + std::to_string(v) + " not in the ground set");
    std::vector<Face> gens;
    for (const auto& facet : c.facets())
        if (std::binary_search(facet.begin(), facet.end(), v))
            gens.push_back(facet);
    if (gens.empty())
        return SimplicialComplex::void_complex(c.ground_set());
    return SimplicialComplex::from_generators(c.ground_set(), std::move(gens));
}

/**
 * The core of a complex, together with the cone apexes that were removed
 * (vertices lying in every facet).
 */
struct Core
{
    SimplicialComplex complex;
    VertexSet apexes;

    bool is_cone() const { return !apexes.empty(); }
};

inline Core core_of(const SimplicialComplex& c)
{
    c.require_nonvoid("core");
    VertexSet keep, apexes;
    for (Vertex v : c.ground_set())
    {
        bool everywhere = std::all_of(c.facets().begin(), c.facets().end(), [&](const Face& f) {
            return std::binary_search(f.begin(), f.end(), v);
        });
        (everywhere ? apexes : keep).push_back(v);
    }
    return {restrict(c, keep), apexes};
}

inline bool is_cone(const SimplicialComplex& c)
{
    return core_of(c).is_cone();
}

/**
 * Join c * d.  The labels of d are shifted past the largest ground-set
 * label of c (by 0 when c has an empty ground set), matching
 * disjoint_union on independence complexes.
 */
inline SimplicialComplex join(const SimplicialComplex& c, const SimplicialComplex& d)
{
    const Vertex shift = c.ground_set().empty() ? 0 : c.ground_set().back() + 1;
    VertexSet ground = c.ground_set();
    for (Vertex v : d.ground_set())
        ground.push_back(v + shift);
    if (c.is_void() || d.is_void())
        return SimplicialComplex::void_complex(ground);
    std::vector<Face> gens;
    for (const auto& f : c.facets())
        for (const auto& h : d.facets())
        {
            Face u = f;
            for (Vertex v : h)
                u.push_back(v + shift);
            gens.push_back(std::move(u));
        }
    return SimplicialComplex::from_generators(std::move(ground), std::move(gens));
}

/// Sum over faces of (-1)^(|F|-1).
inline long long reduced_euler_characteristic(const SimplicialComplex& c)
{
    c.require_nonvoid("reduced Euler characteristic");
    long long chi = 0;
    for (const auto& f : c.faces())
        chi += (f.size() % 2 == 1) ? 1 : -1;
    return chi;
}

inline bool is_pure(const SimplicialComplex& c)
{
    const auto& fs = c.facets();
    return std::all_of(fs.begin(), fs.end(),
                       [&](const Face& f) { return f.size() == fs.front().size(); });
}

/**
 * Facet-list text: one face per line, whitespace-separated nonnegative
 * labels; lines starting with '#' and blank lines are ignored.  The ground
 * set is the union of all listed labels.
 */
inline SimplicialComplex parse_facets(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    VertexSet ground;
    std::vector<Face> gens;
    while (std::getline(in, line))
    {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::string token;
        Face f;
        while (ls >> token)
        {
            std::size_t used = 0;
            long long value = -1;
            try
            {
                value = std::stoll(token, &used);
            }
            catch (const std::exception&)
            {
                used = 0;
            }
            if (used != token.size() || value < 0 || value > 1'000'000'000)
                throw ComplexError(
                    "facets: malformed label '" + token + "' on line " + std::to_string(lineno)
                );
            f.push_back(static_cast<Vertex>(value));
        }
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw ComplexError("facets: duplicate vertex on line " + std::to_string(lineno));
        ground.insert(ground.end(), f.begin(), f.end());
        gens.push_back(std::move(f));
    }
    return SimplicialComplex::from_generators(std::move(ground), std::move(gens));
}

inline std::string to_facet_text(const SimplicialComplex& c)
{
    std::ostringstream out;
    for (const auto& f : c.facets())
    {
        for (std::size_t i = 0; i < f.size(); ++i)
            out << (i ? " " : "") << f[i];
        out << '\n';
    }
    return out.str();
}

}   // namespace gorenstein

#endif
