#pragma once

#include <map>
#include <string>
#include <vector>

#include "gridprod/graph.hpp"
#include "gridprod/minor_model.hpp"
#include "gridprod/tree_analysis.hpp"

namespace gridprod {

/// A grid model plus the branch and parameters that produced it.
struct GridModelCertificate {
    int k = 0;
    MinorModel model;  // pattern == make_grid(k)
    std::string provenance;
    std::map<std::string, int> parameters;
};

/// Injective, edge-preserving vertex map.
struct SubgraphEmbedding {
    Graph pattern;
    Graph host;
    std::vector<Vertex> map;  // pattern vertex -> host vertex
};

ValidationReport validate_embedding(const SubgraphEmbedding& e);

/// K_n in G box S_n for connected n-vertex G: branch set i is the whole
/// copy of G at leaf i plus (v_i, root).
MinorModel clique_in_product(const Graph& g);

/// Grid of side s*p in T box S_{5s^2, 2p}, built from s^2 disjoint
/// vertical paths of order >= 6p that are pairwise completely related
/// or completely unrelated. Each p x p subgrid lives in one arm block;
/// boundary branch sets escape through the hub row and are stitched
/// through reserved arm blocks.
GridModelCertificate grid_in_tree_star_product(const RootedTree& t, const VerticalPathSet& paths,
                                               int s, int p);

/// Grid of side Omega(sqrt(n)) in g1 box g2 (n = smaller order), via
/// pruned spanning trees and either the clique route (dense height
/// class) or the vertical-paths route; returns the best certificate.
GridModelCertificate omega_sqrt_n_grid(const Graph& g1, const Graph& g2);

/// A bipartite graph with parts (a, b) as a minor of star box tree:
/// part-a vertices get whole tree copies at distinct leaves, part-b
/// vertices get distinct root-copy singletons.
MinorModel bipartite_in_star_tree(const Graph& gbip, const std::vector<Vertex>& a,
                                  const std::vector<Vertex>& b, const Graph& star,
                                  const Graph& tree);

/// Grid of side floor(sqrt(2n)) in star box n-vertex tree, by splitting
/// the grid into its two parity classes.
GridModelCertificate grid_in_star_tree_cartesian(const Graph& tree, const Graph& star);

/// Grid of side floor(sqrt(5(n-2)/2)) in S_{2k+1} strong-product P_n,
/// by slicing the grid into diagonal strips of five diagonals each.
GridModelCertificate grid_in_star_path_strong(int n);

/// Grid of side floor(sqrt(3n-2)) as a subgraph of P_3 lex P_n, by
/// splitting the diagonals into three classes mod 3.
SubgraphEmbedding grid_subgraph_in_P3_lex_path(int n);

}  // namespace gridprod
