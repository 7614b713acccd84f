#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridprod/graph.hpp"
#include "gridprod/minor_model.hpp"

namespace gridprod {

/// Resource caps for the exact solvers. Exceeding any cap yields an
/// explicit budget-exhausted outcome, never a wrong answer.
struct SearchBudget {
    int max_host_vertices = 64;
    long long max_nodes = 200'000'000;
    double time_limit_s = 600.0;
};

enum class Answer { Yes, No, BudgetExhausted };

struct MinorResult {
    Answer answer = Answer::BudgetExhausted;
    std::optional<MinorModel> model;  // present iff answer == Yes
    long long nodes = 0;
    double elapsed_s = 0.0;
};

/// Exact minor containment by branch-and-bound search over branch-set
/// assignments. "Yes" carries a model that validates; "No" means the
/// search space was exhausted.
MinorResult has_minor(const Graph& host, const Graph& pattern, const SearchBudget& budget = {});

struct GmResult {
    int lower = 0;  // largest k with a certified grid model
    int upper = 0;  // best known upper bound on gm(host)
    bool exact = false;
    std::optional<MinorModel> witness;  // model of make_grid(lower)
    long long nodes = 0;
    double elapsed_s = 0.0;
};

/// gm(host) by monotone search k = 1, 2, ... On budget exhaustion the
/// result is a bracket [lower, upper] with exact == false.
GmResult gm_exact(const Graph& host, const SearchBudget& budget = {});

struct TreeDecomposition {
    Graph tree;  // one node per bag
    std::vector<std::vector<Vertex>> bags;
};

struct TreewidthResult {
    Answer answer = Answer::BudgetExhausted;
    int width = -1;
    std::vector<Vertex> elimination_order;
    TreeDecomposition decomposition;
};

/// Exact treewidth via dynamic programming over vertex subsets in the
/// elimination-order formulation. Caps at 18 vertices (or fewer, via
/// the budget). The returned order reconstructs the decomposition.
TreewidthResult treewidth_exact(const Graph& g, const SearchBudget& budget = {});

/// Builds the tree-decomposition induced by an elimination order via
/// fill-in; bag of v is {v} plus its later neighbors in the fill graph.
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order);

int decomposition_width(const TreeDecomposition& td);

/// Checks the two decomposition clauses: (a) every vertex and every
/// edge appear together in some bag, (b) for each vertex the bags
/// containing it induce a (connected) subtree.
ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

struct FvsResult {
    Answer answer = Answer::BudgetExhausted;
    int size = -1;
    std::vector<Vertex> witness;
};

/// Exact minimum feedback vertex set by exhaustive search over subset
/// sizes 0, 1, ...
FvsResult min_fvs(const Graph& g, const SearchBudget& budget = {});

struct BrambleOrderResult {
    Answer answer = Answer::BudgetExhausted;
    int order = -1;
    std::vector<Vertex> hitting_set;
};

/// Exact minimum hitting set over the bramble's sets.
BrambleOrderResult bramble_order(const Bramble& b, const SearchBudget& budget = {});

}  // namespace gridprod
