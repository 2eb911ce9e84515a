#pragma once

#include <map>
#include <string>
#include <vector>

#include "defco/classify.hpp"
#include "defco/embedding.hpp"
#include "defco/rational.hpp"

namespace defco {

/// R1/R3 are the flat per-2-vertex payments; the lettered rules are the
/// degree-specific clauses.
enum class Rule { R1, R1a, R1b, R1c, R2, R3, R3a, R3b, R3c, R3d };
const char* rule_name(Rule rule);

struct ElementId {
    enum class Kind { Vertex, Edge, Face };
    Kind kind = Kind::Vertex;
    int id = -1;
    bool operator==(const ElementId&) const = default;
};

inline ElementId vertex_id(int v) { return {ElementId::Kind::Vertex, v}; }
inline ElementId edge_id_of(int e) { return {ElementId::Kind::Edge, e}; }
inline ElementId face_id(int f) { return {ElementId::Kind::Face, f}; }

/// "v3", "e7", "f0".
std::string element_str(ElementId id);

struct TransferRecord {
    Rule rule;
    ElementId src, dst;
    Rational amount;      // negative only for flagged anomalous shares
    int encounter = -1;   // boundary-walk position for face payments
};

struct Anomaly {
    enum class Kind {
        NegativeShare,              // a distributor split a negative remainder
        RetainedRemainder,          // an even split had no recipients; charge kept
        UnclassifiedPoorRecipient,  // a 4+-vertex with no 3+-neighbor was paid as poor
        HeavyBridge                 // a heavy bridge paid its unique face in full
    };
    Kind kind;
    ElementId element;
    Rational amount;
};
const char* anomaly_name(Anomaly::Kind kind);

/// Exact rational charge account for every vertex, edge, and face, plus an
/// append-only transfer log. The sum over all elements is invariant under
/// transfers; for a connected planar embedding it equals -8.
class ChargeLedger {
public:
    ChargeLedger(int vertices, int edges, int faces)
        : vertex_(vertices), edge_(edges), face_(faces) {}

    Rational& charge(ElementId id);
    const Rational& charge(ElementId id) const;

    void transfer(Rule rule, ElementId src, ElementId dst, const Rational& amount,
                  int encounter = -1);

    const std::vector<TransferRecord>& transfers() const { return transfers_; }
    Rational total() const;

    int vertex_count() const { return static_cast<int>(vertex_.size()); }
    int edge_count() const { return static_cast<int>(edge_.size()); }
    int face_count() const { return static_cast<int>(face_.size()); }

private:
    std::vector<Rational> vertex_, edge_, face_;
    std::vector<TransferRecord> transfers_;
};

/// mu(x) = d(x) - 4 on vertices and faces, 0 on edges. Total is exactly -8
/// by Euler's formula; init throws InternalError if not.
ChargeLedger init_charges(const PlanarEmbedding& emb);

/// One slot of a face template: the class constraint a boundary vertex must
/// satisfy, as a union of (degree, 3+-neighbor-count) ranges. hi < 0 means
/// unbounded. A slot not pinned by the derivation is marked open; open slots
/// are the configurable part of the table.
struct ClassAtom {
    int deg_lo = 0, deg_hi = -1;
    int plus_lo = 0, plus_hi = -1;
    bool matches(const VertexClass& c) const;
};

struct SlotConstraint {
    std::vector<ClassAtom> atoms;  // match if any atom matches
    bool open = false;
    bool matches(const VertexClass& c) const;
};

struct SpecialFacePattern {
    std::string name;  // F5a..F5d, F6a, F6b, F7
    std::vector<SlotConstraint> slots;
    int length() const { return static_cast<int>(slots.size()); }
};

/// The built-in template table. Matching is up to rotation and reflection of
/// the boundary walk; the table is mutually exclusive by construction.
const std::vector<SpecialFacePattern>& default_face_templates();

/// Template table override parsed from JSON (see README for the schema).
std::vector<SpecialFacePattern> parse_face_templates(const std::string& json_text);

/// face -> template name for every face matching some template. Two distinct
/// templates matching one face is a table bug and throws InternalError.
std::map<int, std::string> match_special_faces(
    const PlanarEmbedding& emb, const std::vector<VertexClass>& classes,
    const std::vector<SpecialFacePattern>& templates = default_face_templates());

/// A structural fact that cannot hold in a minimal counterexample, found in
/// this graph: names the violated rule, the witnesses, and the reduction the
/// violation licenses.
struct LemmaViolation {
    std::string lemma;
    std::vector<std::string> witnesses;
    std::string licenses;
};

std::vector<LemmaViolation> check_lemmas(
    const PlanarEmbedding& emb,
    const std::vector<SpecialFacePattern>& templates = default_face_templates());

/// Runs the three discharging phases in order on a freshly initialized
/// ledger. Each phase reads the balances the previous phase left: a heavy
/// edge forwards in R2 exactly what R1 gave it, and a face's distributable
/// remainder in R3 includes its R2 income. Within a phase every distributor
/// works from the phase-start snapshot minus its own earlier fixed payments,
/// so results are independent of iteration order. Anomalies (negative
/// shares, remainders with no recipients, unclassified-poor recipients,
/// heavy bridges) are recorded, never raised; conservation breakage throws
/// InternalError.
std::vector<Anomaly> apply_rules(const PlanarEmbedding& emb,
                                 const std::vector<VertexClass>& classes,
                                 const std::vector<int>& heavy,
                                 const std::map<int, std::string>& specials,
                                 ChargeLedger& ledger);

/// Convenience overload computing classes, heavy edges, and special faces.
std::vector<Anomaly> apply_rules(const PlanarEmbedding& emb, ChargeLedger& ledger);

struct AuditReport {
    Rational initial_total, final_total;
    std::vector<Rational> initial_vertex, initial_face;
    ChargeLedger ledger;  // final balances + transfer log
    std::map<int, std::string> special_faces;
    std::vector<Anomaly> anomalies;
    std::vector<ElementId> negative_elements;
    std::vector<LemmaViolation> lemma_violations;
};

AuditReport audit(const PlanarEmbedding& emb,
                  const std::vector<SpecialFacePattern>& templates = default_face_templates());

}  // namespace defco
