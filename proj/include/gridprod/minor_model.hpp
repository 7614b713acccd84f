#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridprod/graph.hpp"

namespace gridprod {

/// Branch-set assignment witnessing pattern <= host in the minor order.
/// branch_sets[x] is the sorted list of host vertices for pattern
/// vertex x.
struct MinorModel {
    Graph pattern;
    Graph host;
    std::vector<std::vector<Vertex>> branch_sets;

    bool operator==(const MinorModel&) const = default;
};

struct ValidationReport {
    enum class Kind {
        Ok,
        Malformed,      // bad references, not a clause failure
        NotDisjoint,    // clause (i)
        NotConnected,   // clause (ii)
        EdgeUncovered,  // clause (iii)
    };
    Kind kind = Kind::Ok;
    std::string message;

    bool ok() const { return kind == Kind::Ok; }
    static ValidationReport good() { return {}; }
};

const char* clause_name(ValidationReport::Kind k);

/// Checks the three model clauses, reporting the first violation with a
/// concrete witness. Malformed branch-set references (out-of-range or
/// empty sets, wrong set count) are a distinct error kind.
ValidationReport validate_model(const MinorModel& m);

/// Identity model of g in g: each branch set is a singleton.
MinorModel identity_model(const Graph& g);

/// Model of sub.graph in g where branch set i = {sub.original[i]}.
/// Every edge of sub.graph must be an edge of g.
MinorModel subgraph_model(const Graph& g, const InducedSubgraph& sub);

/// Transitivity: from H-in-G and G-in-G' models, an H-in-G' model.
/// inner.host and outer.pattern must be the same graph.
MinorModel compose_models(const MinorModel& inner, const MinorModel& outer);

/// From a G1-in-G2 model, a (G1 box H)-in-(G2 box H) model with branch
/// set of (x, w) equal to B_x x {w}.
MinorModel lift_model_through_product(const MinorModel& m, const Graph& h);

/// From H1-in-G1 and H2-in-G2 models, an (H1 box H2)-in-(G1 box G2)
/// model with branch set of (x, w) equal to A_x x B_w.
MinorModel product_of_models(const MinorModel& m1, const MinorModel& m2);

/// Transport a model whose host is g2 box g1 to the coordinate-swapped
/// host g1 box g2 (and likewise swap a product-structured pattern when
/// pattern_n2 > 0).
MinorModel swap_product_model(const MinorModel& m, const Graph& host_g1, const Graph& host_g2);

/// From a K_q model, a grid model of side floor(sqrt(q)) using the
/// row-major injection of grid ids into the first floor(sqrt(q))^2
/// clique vertices.
MinorModel clique_minor_to_grid_model(const MinorModel& m);

/// Family of connected, pairwise-touching vertex sets.
struct Bramble {
    Graph host;
    std::vector<std::vector<Vertex>> sets;
};

ValidationReport validate_bramble(const Bramble& b);

/// The spanning-tree-leaf bramble of order >= min order + 1 in g1 box g2.
Bramble product_bramble(const Graph& g1, const Graph& g2);

/// Edge-density sanity predicate for models in star-lex hosts: true iff
/// |E(pattern)| < t|V(pattern)| + (delta - t)|V(h)|. The host must be
/// exactly make_star(star_leaves) lex h under the canonical encoding.
bool minor_edge_density_check(const MinorModel& m, int t, int delta, const Graph& h,
                              int star_leaves);

}  // namespace gridprod
