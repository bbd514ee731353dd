#ifndef VEDOM_ORACLES_HPP
#define VEDOM_ORACLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "vedom/graph.hpp"

namespace vedom {

enum class Variant { ve, independent_ve, optional_ve, weighted_distance3 };
std::string variant_name(Variant v);

struct SolveResult {
    Variant variant;
    std::vector<int> set; // sorted
    long long objective = 0;

    int cardinality() const { return static_cast<int>(set.size()); }
    std::string to_json() const;
};

struct OracleOptions {
    int vertex_cap = 20;
};

// Edges with at least one endpoint in the closed neighborhood of u.
std::vector<std::pair<int, int>> ve_dominated_edges(const Graph& g, int u);

bool is_ve_dominating(const Graph& g, const std::vector<int>& set);
bool is_independent_set(const Graph& g, const std::vector<int>& set);

// Exact minimum by ascending-cardinality subset search; the witness is the
// lexicographically smallest among minimum sets.
SolveResult gamma_ve_bruteforce(const Graph& g, const OracleOptions& opts = {});
SolveResult i_ve_bruteforce(const Graph& g, const OracleOptions& opts = {});

// Bounded variant: nullopt means every set of size <= max_cardinality fails,
// i.e. the optimum exceeds the bound.
std::optional<SolveResult> gamma_ve_bruteforce_bounded(const Graph& g, int max_cardinality,
                                                       const OracleOptions& opts = {});

// Minimum set containing every forced vertex and covering every required
// edge. forced is per-vertex, required per edge (indexed like Graph::edges).
SolveResult gamma_opve_bruteforce(const Graph& g, const std::vector<char>& forced,
                                  const std::vector<char>& required, const OracleOptions& opts = {});

constexpr long long kForbiddenWeight = -1;

struct WeightedInstance {
    Graph graph;
    std::vector<long long> weight; // positive, or kForbiddenWeight
};

// Minimum-total-weight set of non-forbidden vertices with every target
// within distance 3. Throws errc::infeasible when no such set exists.
SolveResult weighted_d3dom_bruteforce(const WeightedInstance& inst, const std::vector<int>& targets,
                                      const OracleOptions& opts = {});

} // namespace vedom

#endif
