#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racgk/graph.hpp"

// The acceptance suite: eight end-to-end checks, each comparing library
// output against brute-force oracles or closed-form values.

namespace racgk::acceptance {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Edgeless graphs on 1..6 vertices, paths on 2..6, cycles on 3..6, complete
/// graphs on 1..5, and the two four-vertex graphs with seven cliques (a path
/// a-b-c plus an isolated d, and two disjoint edges).
std::vector<NamedGraph> named_corpus();

/// Erdos-Renyi graphs with 1..max_vertices vertices and a random edge
/// density, reproducible from the seed.
std::vector<Graph> random_graphs(std::size_t count, std::size_t max_vertices, std::uint64_t seed);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;   // first failure, or a summary of what was checked
};

CriterionResult clique_rank_agreement();
CriterionResult trace_pairing_exact();
CriterionResult oracle_formula_agreement();
CriterionResult relation_residuals();
CriterionResult free_product_traces();
CriterionResult classification_procedure();
CriterionResult subgroup_criteria();
CriterionResult word_engine();

/// All eight criteria in order. A criterion that throws is reported as failed
/// with the exception message.
std::vector<CriterionResult> run_all();

}  // namespace racgk::acceptance
