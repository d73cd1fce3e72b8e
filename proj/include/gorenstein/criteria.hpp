/**
 * Decision procedures for Cohen-Macaulay, Eulerian, Gorenstein and doubly
 * Cohen-Macaulay complexes, their graph-level counterparts, and the check
 * that triangle-free Gorenstein, triangle-free W2 and Cohen-Macaulayness of
 * I(G)^2 coincide.
 *
 * Every verdict that depends on homology is relative to a coefficient field.
 *
 * Cohen-Macaulayness of I(G)^2 is never computed from a resolution.  It is
 * decided by the combinatorial criterion: G is triangle-free (so that I(G)^2
 * equals the symbolic square), G is Cohen-Macaulay, and for every edge ab
 * the edge localization G_ab is Cohen-Macaulay with alpha(G_ab) =
 * alpha(G) - 1.
 */

#ifndef GORENSTEIN_CRITERIA_HPP
#define GORENSTEIN_CRITERIA_HPP

#include "complex.hpp"
#include "graph.hpp"
#include "homology.hpp"

namespace gorenstein {

/**
 * Reisner's criterion: H~_i(lk F) = 0 for every face F (∅ included) and
 * every i < dim lk F.
 */
inline bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field)
{
    c.require_nonvoid("Cohen-Macaulay test");
    // Reisner forces purity; reject early.
    if (!is_pure(c))
        return false;
    for (const auto& f : c.faces())
    {
        SimplicialComplex lk = link(c, f);
        const int d = lk.dimension();
        // Only H~_{-1} is below a 0-dimensional link, and it vanishes there.
        if (d <= 0)
            continue;
        BettiTable betti = reduced_betti(lk, field, d - 1);
        if (!betti.all_zero())
            return false;
    }
    return true;
}

/// Pure, and every link (∅ included) has reduced Euler characteristic (-1)^dim.
inline bool is_eulerian(const SimplicialComplex& c)
{
    c.require_nonvoid("Eulerian test");
    if (!is_pure(c))
        return false;
    for (const auto& f : c.faces())
    {
        SimplicialComplex lk = link(c, f);
        const long long expected = (lk.dimension() % 2 == 0) ? 1 : -1;
        if (reduced_euler_characteristic(lk) != expected)
            return false;
    }
    return true;
}

/// Stanley's criterion: the core is Eulerian and Cohen-Macaulay.
inline bool is_gorenstein(const SimplicialComplex& c, const FieldSpec& field)
{
    c.require_nonvoid("Gorenstein test");
    SimplicialComplex core = core_of(c).complex;
    return is_eulerian(core) && is_cohen_macaulay(core, field);
}

/// CM, and every vertex deletion stays CM without losing dimension.
inline bool is_doubly_cm(const SimplicialComplex& c, const FieldSpec& field)
{
    if (!is_cohen_macaulay(c, field))
        return false;
    const int dim = c.dimension();
    for (Vertex x : c.ground_set())
    {
        SimplicialComplex rest = delete_set(c, {x});
        if (rest.dimension() != dim || !is_cohen_macaulay(rest, field))
            return false;
    }
    return true;
}

inline bool is_cm_graph(const Graph& g, const FieldSpec& field)
{
    return is_cohen_macaulay(independence_complex(g), field);
}

inline bool is_gorenstein_graph(const Graph& g, const FieldSpec& field)
{
    return is_gorenstein(independence_complex(g), field);
}

/// Combinatorial stand-in for "I(G)^2 is Cohen-Macaulay"; see the file comment.
inline bool is_second_power_cm(const Graph& g, const FieldSpec& field)
{
    if (!is_triangle_free(g) || !is_cm_graph(g, field))
        return false;
    const int alpha = independence_number(g);
    for (auto [a, b] : g.edges())
    {
        Graph local = edge_localize(g, a, b).graph;
        if (independence_number(local) != alpha - 1 || !is_cm_graph(local, field))
            return false;
    }
    return true;
}

/**
 * Outcome of checking the equivalence of
 *   (1) triangle-free and Gorenstein,
 *   (2) triangle-free and in W2,
 *   (3) I(G)^2 Cohen-Macaulay
 * on one graph over one field.
 */
struct TheoremVerdict
{
    bool triangle_free = false;
    bool no_isolated = false;
    bool is_w2 = false;
    bool gorenstein = false;
    bool second_power_cm = false;
    /// triangle_free and no_isolated.
    bool in_hypothesis = false;
    bool consistent = false;

    /**
     * Graphs with isolated vertices fall outside the equivalence and are
     * never counted as inconsistent.  Otherwise the three conditions must
     * coincide; with a triangle present that means (3) must fail.
     */
    static bool consistency(bool triangle_free, bool no_isolated, bool is_w2, bool gorenstein,
                            bool second_power_cm)
    {
        if (!no_isolated)
            return true;
        const bool cond1 = triangle_free && gorenstein;
        const bool cond2 = triangle_free && is_w2;
        return cond1 == cond2 && cond2 == second_power_cm;
    }

    friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

inline TheoremVerdict check_theorem(const Graph& g, const FieldSpec& field)
{
    TheoremVerdict v;
    v.triangle_free = is_triangle_free(g);
    v.no_isolated = !has_isolated_vertices(g);
    v.is_w2 = is_in_w2(g);
    v.gorenstein = is_gorenstein_graph(g, field);
    v.second_power_cm = is_second_power_cm(g, field);
    v.in_hypothesis = v.triangle_free && v.no_isolated;
    v.consistent = TheoremVerdict::consistency(v.triangle_free, v.no_isolated, v.is_w2,
                                               v.gorenstein, v.second_power_cm);
    return v;
}

}   // namespace gorenstein

#endif
