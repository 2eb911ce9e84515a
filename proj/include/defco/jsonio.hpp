#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "defco/coloring.hpp"
#include "defco/discharge.hpp"
#include "defco/embedding.hpp"
#include "defco/solve.hpp"

namespace defco {

/// Embedding schema: {"n": int, "rotations": [[neighbor, ...], ...]} with
/// rotations in embedding order.
nlohmann::json embedding_to_json(const PlanarEmbedding& emb);
PlanarEmbedding embedding_from_json(const nlohmann::json& doc);

/// Coloring schema: [{"vertex": v, "color": 3|4}, ...].
nlohmann::json coloring_to_json(const std::vector<Color>& phi);
std::vector<Color> coloring_from_json(const nlohmann::json& doc, int n);

nlohmann::json trace_to_json(const ReductionTrace& trace);
nlohmann::json solve_report_to_json(const SolveReport& report);
nlohmann::json audit_report_to_json(const AuditReport& report);
nlohmann::json lemma_violations_to_json(const std::vector<LemmaViolation>& violations);

/// Graphviz text; with annotate set, vertices carry classification and
/// final-charge labels and heavy edges are bold.
std::string to_dot(const PlanarEmbedding& emb, const AuditReport* report = nullptr);

}  // namespace defco
