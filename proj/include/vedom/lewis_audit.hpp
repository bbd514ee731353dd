#ifndef VEDOM_LEWIS_AUDIT_HPP
#define VEDOM_LEWIS_AUDIT_HPP

#include <string>
#include <vector>

#include "vedom/graph.hpp"
#include "vedom/oracles.hpp"

namespace vedom {

// Tree with every edge subdivided once. Original vertices keep their ids;
// subdivision vertices are appended in edge order.
struct SubdividedTree {
    Graph tree;
    std::vector<char> original;               // per vertex of tree
    std::vector<std::pair<int, int>> sub_of;  // per subdivision vertex, the split edge
};

SubdividedTree subdivide(const Graph& t);

struct AuditOptions {
    OracleOptions oracle;
};

// Subdivide-and-weight transform: unit weight on original vertices, the rest
// excluded; minimum distance-3 dominating set over ALL subdivided vertices.
int lewis_value(const Graph& t, const AuditOptions& opts = {});

// Repaired transform: only the subdivision vertices must be within distance 3.
int corrected_value(const Graph& t, const AuditOptions& opts = {});

struct AuditReport {
    Graph tree;
    std::string canonical;
    int gamma_ve = 0;
    int lewis = 0;
    int corrected = 0;
    bool mismatch = false; // gamma_ve != lewis
    std::string to_json() const;
};

AuditReport audit(const Graph& t, const AuditOptions& opts = {});

// Audits every canonical tree with 3 <= n <= n_max and returns the
// mismatching ones, smallest trees first.
std::vector<AuditReport> search_counterexamples(int n_max, const AuditOptions& opts = {});

} // namespace vedom

#endif
