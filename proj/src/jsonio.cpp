#include "defco/jsonio.hpp"

#include <sstream>

#include "defco/errors.hpp"

namespace defco {

using nlohmann::json;

json embedding_to_json(const PlanarEmbedding& emb) {
    return json{{"n", emb.vertex_count()}, {"rotations", emb.rotations()}};
}

PlanarEmbedding embedding_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rotations"))
        throw ContractError("embedding json: need {\"n\": int, \"rotations\": [[...]]}");
    int n = doc.at("n").get<int>();
    auto rot = doc.at("rotations").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rot.size()) != n)
        throw ContractError("embedding json: rotations size differs from n");
    return PlanarEmbedding::build(std::move(rot));
}

json coloring_to_json(const std::vector<Color>& phi) {
    json arr = json::array();
    for (int v = 0; v < static_cast<int>(phi.size()); ++v) {
        if (phi[v] == Color::None) continue;
        arr.push_back({{"vertex", v}, {"color", color_value(phi[v])}});
    }
    return arr;
}

std::vector<Color> coloring_from_json(const json& doc, int n) {
    if (!doc.is_array()) throw ContractError("coloring json: expected an array");
    std::vector<Color> phi(n, Color::None);
    for (const auto& item : doc) {
        int v = item.at("vertex").get<int>();
        if (v < 0 || v >= n) throw ContractError("coloring json: vertex out of range");
        phi[v] = color_from_value(item.at("color").get<int>());
    }
    return phi;
}

static const char* kind_str(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::EdgeRemoval: return "edge-removal";
        case ReductionKind::ThreeVertexGadget: return "three-vertex-gadget";
        case ReductionKind::VertexRemoval: return "vertex-removal";
    }
    return "?";
}

json trace_to_json(const ReductionTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json js{{"kind", kind_str(s.kind)},
                {"measure_before", {s.measure_before.plus3, s.measure_before.size}},
                {"measure_after", {s.measure_after.plus3, s.measure_after.size}}};
        switch (s.kind) {
            case ReductionKind::VertexRemoval:
                js["vertex"] = s.removed_vertex;
                js["neighbors"] = s.vertex_neighbors;
                break;
            case ReductionKind::EdgeRemoval:
                js["edge"] = {s.removed_edge.first, s.removed_edge.second};
                break;
            case ReductionKind::ThreeVertexGadget:
                js["vertex"] = s.removed_vertex;
                js["neighbors"] = s.gadget_neighbors;
                js["midpoints"] = s.gadget_midpoints;
                break;
        }
        steps.push_back(std::move(js));
    }
    json base_edges = json::array();
    for (auto [u, v] : trace.base_edges) base_edges.push_back({u, v});
    return json{{"steps", std::move(steps)},
                {"base", {{"vertices", trace.base_vertices}, {"edges", std::move(base_edges)}}}};
}

json solve_report_to_json(const SolveReport& report) {
    json hist = json::object();
    for (auto [depth, count] : report.stats.depth_histogram)
        hist[std::to_string(depth)] = count;
    json doc{{"outcome", report.feasible ? "feasible" : "infeasible"},
             {"stats",
              {{"nodes", report.stats.nodes},
               {"forced", report.stats.forced},
               {"fallbacks", report.stats.fallbacks},
               {"depth_histogram", std::move(hist)},
               {"millis", report.stats.millis}}}};
    if (report.feasible) doc["coloring"] = coloring_to_json(report.coloring);
    if (report.trace) doc["trace"] = trace_to_json(*report.trace);
    return doc;
}

json lemma_violations_to_json(const std::vector<LemmaViolation>& violations) {
    json arr = json::array();
    for (const auto& v : violations)
        arr.push_back({{"lemma", v.lemma}, {"witnesses", v.witnesses}, {"licenses", v.licenses}});
    return arr;
}

json audit_report_to_json(const AuditReport& report) {
    json doc;
    doc["totals"] = {{"initial", to_fraction_string(report.initial_total)},
                     {"final", to_fraction_string(report.final_total)}};

    json elements = json::array();
    const ChargeLedger& led = report.ledger;
    for (int v = 0; v < led.vertex_count(); ++v)
        elements.push_back({{"id", v},
                            {"kind", "vertex"},
                            {"initial", to_fraction_string(report.initial_vertex[v])},
                            {"final", to_fraction_string(led.charge(vertex_id(v)))}});
    for (int e = 0; e < led.edge_count(); ++e)
        elements.push_back({{"id", e},
                            {"kind", "edge"},
                            {"initial", "0/1"},
                            {"final", to_fraction_string(led.charge(edge_id_of(e)))}});
    for (int f = 0; f < led.face_count(); ++f)
        elements.push_back({{"id", f},
                            {"kind", "face"},
                            {"initial", to_fraction_string(report.initial_face[f])},
                            {"final", to_fraction_string(led.charge(face_id(f)))}});
    doc["elements"] = std::move(elements);

    json transfers = json::array();
    for (const auto& t : led.transfers()) {
        json jt{{"rule", rule_name(t.rule)},
                {"src", element_str(t.src)},
                {"dst", element_str(t.dst)},
                {"amount", to_fraction_string(t.amount)}};
        if (t.encounter >= 0) jt["encounter"] = t.encounter;
        transfers.push_back(std::move(jt));
    }
    doc["transfers"] = std::move(transfers);

    json anomalies = json::array();
    for (const auto& a : report.anomalies)
        anomalies.push_back({{"kind", anomaly_name(a.kind)},
                             {"element", element_str(a.element)},
                             {"amount", to_fraction_string(a.amount)}});
    doc["anomalies"] = std::move(anomalies);

    json specials = json::object();
    for (const auto& [f, name] : report.special_faces) specials[std::to_string(f)] = name;
    doc["special_faces"] = std::move(specials);

    json negatives = json::array();
    for (const auto& id : report.negative_elements) negatives.push_back(element_str(id));
    doc["negative_elements"] = std::move(negatives);

    doc["lemma_violations"] = lemma_violations_to_json(report.lemma_violations);
    return doc;
}

std::string to_dot(const PlanarEmbedding& emb, const AuditReport* report) {
    auto classes = classify_vertices(emb);
    auto heavy = heavy_edges(emb);
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < emb.vertex_count(); ++v) {
        out << "  v" << v << " [label=\"v" << v << " d=" << emb.degree(v) << " "
            << tag_name(classes[v].tag);
        if (report) out << " mu*=" << to_fraction_string(report->ledger.charge(vertex_id(v)));
        out << "\"];\n";
    }
    for (int e = 0; e < emb.edge_count(); ++e) {
        auto [u, v] = emb.edge(e);
        bool is_heavy = std::find(heavy.begin(), heavy.end(), e) != heavy.end();
        out << "  v" << u << " -- v" << v;
        if (is_heavy) out << " [style=bold,label=\"heavy\"]";
        out << ";\n";
    }
    if (report) {
        for (int f = 0; f < emb.face_count(); ++f) {
            out << "  // f" << f << " degree=" << emb.faces()[f].degree()
                << " mu*=" << to_fraction_string(report->ledger.charge(face_id(f)));
            auto it = report->special_faces.find(f);
            if (it != report->special_faces.end()) out << " " << it->second;
            out << "\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace defco
