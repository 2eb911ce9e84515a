#include "defco/discharge.hpp"

#include <algorithm>
#include <set>

#include "defco/errors.hpp"

#include "json.hpp"

namespace defco {

const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::R1: return "R1";
        case Rule::R1a: return "R1a";
        case Rule::R1b: return "R1b";
        case Rule::R1c: return "R1c";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
        case Rule::R3a: return "R3a";
        case Rule::R3b: return "R3b";
        case Rule::R3c: return "R3c";
        case Rule::R3d: return "R3d";
    }
    return "?";
}

const char* anomaly_name(Anomaly::Kind kind) {
    switch (kind) {
        case Anomaly::Kind::NegativeShare: return "negative-share";
        case Anomaly::Kind::RetainedRemainder: return "retained-remainder";
        case Anomaly::Kind::UnclassifiedPoorRecipient: return "unclassified-poor-recipient";
        case Anomaly::Kind::HeavyBridge: return "heavy-bridge";
    }
    return "?";
}

std::string element_str(ElementId id) {
    const char* k = id.kind == ElementId::Kind::Vertex ? "v"
                    : id.kind == ElementId::Kind::Edge ? "e"
                                                       : "f";
    return k + std::to_string(id.id);
}

Rational& ChargeLedger::charge(ElementId id) {
    switch (id.kind) {
        case ElementId::Kind::Vertex: return vertex_.at(id.id);
        case ElementId::Kind::Edge: return edge_.at(id.id);
        case ElementId::Kind::Face: return face_.at(id.id);
    }
    throw InternalError("ChargeLedger::charge: bad element kind");
}

const Rational& ChargeLedger::charge(ElementId id) const {
    return const_cast<ChargeLedger*>(this)->charge(id);
}

void ChargeLedger::transfer(Rule rule, ElementId src, ElementId dst, const Rational& amount,
                            int encounter) {
    if (amount == 0) return;
    charge(src) -= amount;
    charge(dst) += amount;
    transfers_.push_back({rule, src, dst, amount, encounter});
}

Rational ChargeLedger::total() const {
    Rational sum = 0;
    for (const auto& c : vertex_) sum += c;
    for (const auto& c : edge_) sum += c;
    for (const auto& c : face_) sum += c;
    return sum;
}

ChargeLedger init_charges(const PlanarEmbedding& emb) {
    ChargeLedger ledger(emb.vertex_count(), emb.edge_count(), emb.face_count());
    for (int v = 0; v < emb.vertex_count(); ++v)
        ledger.charge(vertex_id(v)) = emb.degree(v) - 4;
    for (int f = 0; f < emb.face_count(); ++f)
        ledger.charge(face_id(f)) = emb.faces()[f].degree() - 4;
    if (ledger.total() != -8)
        throw InternalError("init_charges: total " + to_fraction_string(ledger.total()) +
                            " instead of -8/1");
    return ledger;
}

bool ClassAtom::matches(const VertexClass& c) const {
    if (c.degree < deg_lo || (deg_hi >= 0 && c.degree > deg_hi)) return false;
    if (c.plus_neighbors < plus_lo || (plus_hi >= 0 && c.plus_neighbors > plus_hi)) return false;
    return true;
}

bool SlotConstraint::matches(const VertexClass& c) const {
    return std::any_of(atoms.begin(), atoms.end(),
                       [&](const ClassAtom& a) { return a.matches(c); });
}

namespace {

// Slot shorthands. Poor slots use plus <= 1 so that unclassified-poor
// vertices are treated as poor here too (the payments get flagged).
const ClassAtom kTwo{2, 2, 0, -1};
const ClassAtom k5p{5, 5, 0, 1};
const ClassAtom k5s{5, 5, 2, 2};
const ClassAtom k6p{6, 6, 0, 1};
const ClassAtom k6sPlus{6, -1, 2, -1};
const ClassAtom k7sPlus{7, -1, 2, -1};
const ClassAtom k9sPlus{9, -1, 2, -1};
const ClassAtom kRich78{7, 8, 3, -1};

SlotConstraint slot(ClassAtom a, bool open = false) { return {{a}, open}; }

std::vector<SpecialFacePattern> build_default_templates() {
    std::vector<SpecialFacePattern> t;
    t.push_back({"F7",
                 {slot(k5s), slot(kTwo), slot(k6p), slot(kTwo), slot(k6p), slot(kTwo),
                  slot(k6p)}});
    t.push_back({"F6a",
                 {slot(k5p), slot(k7sPlus, true), slot(k5p), slot(kTwo), slot(k6p),
                  slot(kTwo)}});
    t.push_back({"F6b",
                 {slot(k6p), slot(kTwo), slot(k6p), slot(kTwo), slot(k6p), slot(kTwo)}});
    t.push_back({"F5a",
                 {slot(k5s), slot(kTwo), slot(k6p), slot(k6sPlus, true), slot(k7sPlus)}});
    // F5b is not pinned anywhere in the derivation; this default satisfies
    // every use site (one 5s with no 2-vertex beside it, one 6p, a 7+-vertex)
    // and stays disjoint from the other four 5-face templates.
    t.push_back({"F5b",
                 {slot(k5s, true), slot(k7sPlus, true), slot(k6p, true), slot(kTwo, true),
                  slot(k6sPlus, true)}});
    t.push_back({"F5c",
                 {slot(kTwo), slot(k6p), slot(k5s), slot(k9sPlus, true),
                  SlotConstraint{{k5p, k5s, k6p}, true}}});
    t.push_back({"F5d",
                 {slot(kTwo), slot(k6p), slot(k5s), slot(kRich78, true), slot(k5s)}});
    return t;
}

bool matches_aligned(const SpecialFacePattern& tpl, const std::vector<VertexClass>& seq,
                     int shift, bool reflect) {
    int k = tpl.length();
    for (int i = 0; i < k; ++i) {
        int pos = reflect ? ((shift - i) % k + k) % k : (shift + i) % k;
        if (!tpl.slots[i].matches(seq[pos])) return false;
    }
    return true;
}

bool matches_cyclic(const SpecialFacePattern& tpl, const std::vector<VertexClass>& seq) {
    if (tpl.length() != static_cast<int>(seq.size())) return false;
    for (int shift = 0; shift < tpl.length(); ++shift)
        for (bool reflect : {false, true})
            if (matches_aligned(tpl, seq, shift, reflect)) return true;
    return false;
}

}  // namespace

const std::vector<SpecialFacePattern>& default_face_templates() {
    static const std::vector<SpecialFacePattern> table = build_default_templates();
    return table;
}

std::vector<SpecialFacePattern> parse_face_templates(const std::string& json_text) {
    auto doc = nlohmann::json::parse(json_text);
    std::vector<SpecialFacePattern> out;
    for (const auto& jt : doc.at("templates")) {
        SpecialFacePattern tpl;
        tpl.name = jt.at("name").get<std::string>();
        for (const auto& js : jt.at("slots")) {
            SlotConstraint sc;
            sc.open = js.value("open", false);
            for (const auto& ja : js.at("atoms")) {
                ClassAtom a;
                a.deg_lo = ja.value("deg_lo", 0);
                a.deg_hi = ja.value("deg_hi", -1);
                a.plus_lo = ja.value("plus_lo", 0);
                a.plus_hi = ja.value("plus_hi", -1);
                sc.atoms.push_back(a);
            }
            tpl.slots.push_back(std::move(sc));
        }
        out.push_back(std::move(tpl));
    }
    return out;
}

std::map<int, std::string> match_special_faces(const PlanarEmbedding& emb,
                                               const std::vector<VertexClass>& classes,
                                               const std::vector<SpecialFacePattern>& templates) {
    std::map<int, std::string> out;
    for (int f = 0; f < emb.face_count(); ++f) {
        const auto& walk = emb.faces()[f].walk;
        if (walk.size() < 5 || walk.size() > 7) continue;
        std::vector<VertexClass> seq;
        seq.reserve(walk.size());
        for (int v : walk) seq.push_back(classes[v]);
        const SpecialFacePattern* hit = nullptr;
        for (const auto& tpl : templates) {
            if (!matches_cyclic(tpl, seq)) continue;
            if (hit)
                throw InternalError("match_special_faces: face f" + std::to_string(f) +
                                    " matches both " + hit->name + " and " + tpl.name +
                                    " (template table bug)");
            hit = &tpl;
        }
        if (hit) out[f] = hit->name;
    }
    return out;
}

namespace {

struct Payer {
    ChargeLedger& ledger;
    std::vector<Anomaly>& anomalies;
    const std::vector<VertexClass>& classes;
    Rational paid = 0;

    void fixed(Rule rule, ElementId src, ElementId dst, const Rational& amount,
               int encounter = -1) {
        ledger.transfer(rule, src, dst, amount, encounter);
        paid += amount;
        flag_poor(dst);
    }

    void split(Rule rule, ElementId src, const Rational& remainder,
               const std::vector<std::pair<ElementId, int>>& recipients) {
        if (recipients.empty()) {
            if (remainder != 0)
                anomalies.push_back({Anomaly::Kind::RetainedRemainder, src, remainder});
            return;
        }
        if (remainder == 0) return;
        if (remainder < 0) anomalies.push_back({Anomaly::Kind::NegativeShare, src, remainder});
        Rational share = remainder / static_cast<int>(recipients.size());
        for (auto [dst, encounter] : recipients) {
            ledger.transfer(rule, src, dst, share, encounter);
            flag_poor(dst);
        }
        paid += remainder;
    }

    void flag_poor(ElementId dst) {
        if (dst.kind != ElementId::Kind::Vertex) return;
        const auto& c = classes[dst.id];
        if (c.degree >= 4 && c.plus_neighbors == 0)
            anomalies.push_back(
                {Anomaly::Kind::UnclassifiedPoorRecipient, dst, Rational(0)});
    }
};

void check_total(const ChargeLedger& ledger, const char* phase) {
    if (ledger.total() != -8)
        throw InternalError(std::string("apply_rules: conservation broken after ") + phase +
                            ": total " + to_fraction_string(ledger.total()));
}

}  // namespace

std::vector<Anomaly> apply_rules(const PlanarEmbedding& emb,
                                 const std::vector<VertexClass>& classes,
                                 const std::vector<int>& heavy,
                                 const std::map<int, std::string>& specials,
                                 ChargeLedger& ledger) {
    std::vector<Anomaly> anomalies;
    const SimpleGraph& g = emb.graph();

    auto is2 = [&](int v) { return classes[v].degree == 2; };
    auto is5p = [&](int v) { return is_poor_of(classes[v], 5); };
    auto is5s = [&](int v) { return is_semipoor_of(classes[v], 5); };
    auto is6p = [&](int v) { return is_poor_of(classes[v], 6); };
    auto is_recipient = [&](int v) { return is_charge_recipient(classes[v]); };

    std::vector<std::vector<int>> heavy_at(emb.vertex_count());
    for (int e : heavy) {
        auto [u, v] = emb.edge(e);
        heavy_at[u].push_back(e);
        heavy_at[v].push_back(e);
    }

    // R1: every 5+-vertex pays its 2-neighbors, then its degree clause.
    {
        std::vector<Rational> snapshot(emb.vertex_count());
        for (int v = 0; v < emb.vertex_count(); ++v) snapshot[v] = ledger.charge(vertex_id(v));

        for (int v = 0; v < emb.vertex_count(); ++v) {
            int d = emb.degree(v);
            if (d < 5) continue;
            Payer pay{ledger, anomalies, classes};
            const Rational half(1, 2);
            for (int w : g.neighbors(v))
                if (is2(w)) pay.fixed(Rule::R1, vertex_id(v), vertex_id(w), half);

            if (d >= 8) {
                for (int w : g.neighbors(v))
                    if (is_recipient(w)) pay.fixed(Rule::R1a, vertex_id(v), vertex_id(w), half);
                for (int e : heavy_at[v]) pay.fixed(Rule::R1a, vertex_id(v), edge_id_of(e), half);
            } else if (d == 7) {
                for (int w : g.neighbors(v))
                    if (is5p(w) || is6p(w)) pay.fixed(Rule::R1b, vertex_id(v), vertex_id(w), half);
                std::vector<std::pair<ElementId, int>> recipients;
                for (int w : g.neighbors(v))
                    if (is5s(w)) recipients.push_back({vertex_id(w), -1});
                for (int e : heavy_at[v]) recipients.push_back({edge_id_of(e), -1});
                pay.split(Rule::R1b, vertex_id(v), snapshot[v] - pay.paid, recipients);
            } else {
                std::vector<std::pair<ElementId, int>> recipients;
                for (int w : g.neighbors(v))
                    if (is5p(w)) recipients.push_back({vertex_id(w), -1});
                for (int e : heavy_at[v]) recipients.push_back({edge_id_of(e), -1});
                pay.split(Rule::R1c, vertex_id(v), snapshot[v] - pay.paid, recipients);
            }
        }
        check_total(ledger, "R1");
    }

    // R2: heavy edges forward their accumulated charge to the incident faces.
    {
        for (int e = 0; e < emb.edge_count(); ++e) {
            const Rational balance = ledger.charge(edge_id_of(e));
            if (balance == 0) continue;
            if (std::find(heavy.begin(), heavy.end(), e) == heavy.end())
                throw InternalError("apply_rules: non-heavy edge e" + std::to_string(e) +
                                    " holds charge");
            if (balance < 0)
                anomalies.push_back({Anomaly::Kind::NegativeShare, edge_id_of(e), balance});
            auto [f1, f2] = emb.faces_of_edge(e);
            if (f1 == f2) {
                // A bridge has one incident face; it gets the full amount.
                anomalies.push_back({Anomaly::Kind::HeavyBridge, edge_id_of(e), balance});
                ledger.transfer(Rule::R2, edge_id_of(e), face_id(f1), balance);
            } else {
                ledger.transfer(Rule::R2, edge_id_of(e), face_id(f1), balance / 2);
                ledger.transfer(Rule::R2, edge_id_of(e), face_id(f2), balance / 2);
            }
        }
        check_total(ledger, "R2");
    }

    // R3: 5+-faces pay per encounter on their boundary walk.
    {
        std::vector<Rational> snapshot(emb.face_count());
        for (int f = 0; f < emb.face_count(); ++f) snapshot[f] = ledger.charge(face_id(f));

        const Rational half(1, 2), quarter(1, 4), three_eighths(3, 8), sixth(1, 6);
        for (int f = 0; f < emb.face_count(); ++f) {
            const auto& walk = emb.faces()[f].walk;
            int d = static_cast<int>(walk.size());
            if (d < 5) continue;
            Payer pay{ledger, anomalies, classes};

            auto encounters = [&](auto&& pred) {
                std::vector<std::pair<ElementId, int>> out;
                for (int i = 0; i < d; ++i)
                    if (pred(walk[i])) out.push_back({vertex_id(walk[i]), i});
                return out;
            };
            auto pay_each = [&](Rule rule, auto&& pred, const Rational& amount) {
                for (auto [dst, pos] : encounters(pred)) pay.fixed(rule, face_id(f), dst, amount, pos);
            };

            auto two_positions = encounters(is2);
            for (auto [dst, pos] : two_positions) pay.fixed(Rule::R3, face_id(f), dst, half, pos);

            auto it = specials.find(f);
            const std::string name = it == specials.end() ? "" : it->second;
            auto remainder = [&] { return snapshot[f] - pay.paid; };

            if (d >= 8) {
                pay_each(Rule::R3a, is_recipient, half);
            } else if (d == 7) {
                if (name == "F7") {
                    pay_each(Rule::R3b, [&](int v) { return is5s(v) || is6p(v); }, three_eighths);
                } else {
                    pay_each(Rule::R3b, [&](int v) { return is5p(v) || is6p(v); }, half);
                    pay.split(Rule::R3b, face_id(f), remainder(), encounters(is5s));
                }
            } else if (d == 6) {
                if (name == "F6a") {
                    pay_each(Rule::R3c, is5p, three_eighths);
                    pay_each(Rule::R3c, is6p, quarter);
                } else if (name == "F6b") {
                    pay_each(Rule::R3c, is6p, sixth);
                } else {
                    pay_each(Rule::R3c, is5p, half);
                    pay_each(Rule::R3c, [&](int v) { return is5s(v) || is6p(v); }, quarter);
                    pay.split(Rule::R3c, face_id(f), remainder(),
                              encounters([&](int v) { return is5s(v) || is6p(v); }));
                }
            } else {
                if (two_positions.size() >= 2) {
                    // Whatever survives the 2-vertex payments is split evenly.
                    pay.split(Rule::R3d, face_id(f), remainder(), encounters(is_recipient));
                } else if (name == "F5a" || name == "F5b") {
                    pay_each(Rule::R3d, is6p, half);
                    pay.split(Rule::R3d, face_id(f), remainder(), encounters(is5s));
                } else if (name == "F5c" || name == "F5d") {
                    pay_each(Rule::R3d, [&](int v) { return is5p(v) || is6p(v); }, quarter);
                    pay.split(Rule::R3d, face_id(f), remainder(), encounters(is5s));
                } else {
                    pay_each(Rule::R3d, is_recipient, quarter);
                    pay.split(Rule::R3d, face_id(f), remainder(), encounters(is_recipient));
                }
            }
        }
        check_total(ledger, "R3");
    }

    return anomalies;
}

std::vector<Anomaly> apply_rules(const PlanarEmbedding& emb, ChargeLedger& ledger) {
    auto classes = classify_vertices(emb);
    auto heavy = heavy_edges(emb);
    auto specials = match_special_faces(emb, classes);
    return apply_rules(emb, classes, heavy, specials, ledger);
}

namespace {

struct FaceProfile {
    std::vector<int> distinct;
    int n2 = 0, n5p = 0, n5s = 0, n6p = 0;
    bool has_repeat = false;
};

FaceProfile profile_face(const Face& face, const std::vector<VertexClass>& classes) {
    FaceProfile p;
    std::set<int> seen;
    for (int v : face.walk) {
        if (!seen.insert(v).second) {
            p.has_repeat = true;
            continue;
        }
        p.distinct.push_back(v);
        const auto& c = classes[v];
        if (c.degree == 2) ++p.n2;
        if (is_poor_of(c, 5)) ++p.n5p;
        if (is_semipoor_of(c, 5)) ++p.n5s;
        if (is_poor_of(c, 6)) ++p.n6p;
    }
    return p;
}

}  // namespace

std::vector<LemmaViolation> check_lemmas(const PlanarEmbedding& emb,
                                         const std::vector<SpecialFacePattern>& templates) {
    const SimpleGraph& g = emb.graph();
    auto classes = classify_vertices(g);
    auto specials = match_special_faces(emb, classes, templates);
    std::vector<LemmaViolation> out;

    auto special_name = [&](int f) {
        auto it = specials.find(f);
        return it == specials.end() ? std::string() : it->second;
    };

    for (int e = 0; e < emb.edge_count(); ++e) {
        auto [u, v] = emb.edge(e);
        if (g.degree(u) <= 4 && g.degree(v) <= 4)
            out.push_back({"edge-endpoint-degree",
                           {element_str(edge_id_of(e)), element_str(vertex_id(u)),
                            element_str(vertex_id(v))},
                           "remove-edge"});
    }

    for (int v = 0; v < emb.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 3)
            out.push_back({"three-vertex", {element_str(vertex_id(v))}, "replace-with-gadget"});
        if (d == 2) {
            int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
            int da = g.degree(a), db = g.degree(b);
            bool ok = (da >= 5 && db >= 6) || (da >= 6 && db >= 5);
            if (!ok)
                out.push_back({"two-vertex-support", {element_str(vertex_id(v))},
                               "remove-vertex-and-recolor"});
        }
        // A 9+-neighbor always counts as support; otherwise a semi-poor-or-
        // richer neighbor of degree >= alt_deg is needed.
        auto has_support = [&](int alt_deg) {
            for (int w : g.neighbors(v)) {
                if (g.degree(w) >= 9) return true;
                if (g.degree(w) >= alt_deg && classes[w].plus_neighbors >= 2) return true;
            }
            return false;
        };
        if ((d == 4 || d == 5) && !has_support(6))
            out.push_back({"low-vertex-support", {element_str(vertex_id(v))},
                           "remove-vertex-and-recolor"});
        if (d >= 6 && d <= 8 && !has_support(5))
            out.push_back({"mid-vertex-support", {element_str(vertex_id(v))},
                           "remove-vertex-and-recolor"});
    }

    for (int f = 0; f < emb.face_count(); ++f) {
        const Face& face = emb.faces()[f];
        int d = face.degree();
        if (d < 5 || d > 7) continue;
        auto p = profile_face(face, classes);
        if (p.has_repeat) continue;  // composition rules assume a simple boundary cycle
        auto witness = [&](std::string sub) {
            return LemmaViolation{std::move(sub), {element_str(face_id(f))},
                                  "remove-vertex-and-recolor"};
        };

        if (d == 6) {
            int poorish = p.n5s + p.n6p;
            if (p.n2 == 3) {
                std::vector<int> others;
                for (int v : p.distinct)
                    if (classes[v].degree != 2) others.push_back(v);
                int fives = 0, low = 0;
                for (int v : others) {
                    if (classes[v].degree == 5) ++fives;
                    else if (classes[v].degree < 7) ++low;
                }
                if (fives >= 1 && (fives >= 2 || low > 0))
                    out.push_back(witness("six-face-a"));
            } else if (p.n2 == 2) {
                if (p.n5p >= 3)
                    out.push_back(witness("six-face-b"));
                else if (p.n5p == 1 && poorish >= 3)
                    out.push_back(witness("six-face-b1"));
                else if (p.n5p == 2 && poorish >= 1 && special_name(f) != "F6a")
                    out.push_back(witness("six-face-b2"));
            } else if (p.n2 == 1) {
                if (p.n5p >= 2)
                    out.push_back(witness("six-face-c"));
                else if (p.n5p == 1 && poorish >= 3)
                    out.push_back(witness("six-face-c1"));
                else if (p.n5p == 0 && poorish >= 5)
                    out.push_back(witness("six-face-c2"));
            } else {
                bool any_poor = false;
                for (int v : p.distinct)
                    any_poor = any_poor || classes[v].tag == VertexTag::Poor ||
                               classes[v].tag == VertexTag::UnclassifiedPoor;
                if (any_poor || p.n5s >= 5) out.push_back(witness("six-face-d"));
            }
            if (special_name(f) == "F6b") {
                for (int i = 0; i < d; ++i) {
                    int u = face.walk[i], v = face.walk[(i + 1) % d];
                    auto [f1, f2] = emb.faces_of_edge(emb.edge_id(u, v));
                    int g2 = f1 == f ? f2 : f1;
                    if (g2 == f) continue;
                    const Face& nb = emb.faces()[g2];
                    if (nb.degree() != 5) continue;
                    int twos = 0;
                    for (int w : nb.walk)
                        if (classes[w].degree == 2) ++twos;
                    if (twos == 2)
                        out.push_back({"f6b-five-face-contact",
                                       {element_str(face_id(f)), element_str(face_id(g2))},
                                       "remove-vertex-and-recolor"});
                }
            }
        } else if (d == 5) {
            if (p.n2 == 1 && p.n5p + p.n5s + p.n6p >= 3) {
                auto name = special_name(f);
                if (name != "F5c" && name != "F5d")
                    out.push_back(witness("five-face-composition"));
            }
        } else {
            if (p.n2 + p.n5p + p.n5s + p.n6p >= 7 && p.n5s <= 1 && special_name(f) != "F7")
                out.push_back(witness("seven-face-composition"));
        }
    }
    return out;
}

AuditReport audit(const PlanarEmbedding& emb, const std::vector<SpecialFacePattern>& templates) {
    auto classes = classify_vertices(emb);
    auto heavy = heavy_edges(emb);
    auto specials = match_special_faces(emb, classes, templates);

    AuditReport report{.initial_total = 0,
                       .final_total = 0,
                       .initial_vertex = {},
                       .initial_face = {},
                       .ledger = init_charges(emb),
                       .special_faces = specials,
                       .anomalies = {},
                       .negative_elements = {},
                       .lemma_violations = {}};
    report.initial_total = report.ledger.total();
    for (int v = 0; v < emb.vertex_count(); ++v)
        report.initial_vertex.push_back(report.ledger.charge(vertex_id(v)));
    for (int f = 0; f < emb.face_count(); ++f)
        report.initial_face.push_back(report.ledger.charge(face_id(f)));

    report.anomalies = apply_rules(emb, classes, heavy, specials, report.ledger);
    report.final_total = report.ledger.total();
    if (report.final_total != report.initial_total)
        throw InternalError("audit: conservation broken");

    for (int v = 0; v < emb.vertex_count(); ++v)
        if (report.ledger.charge(vertex_id(v)) < 0) report.negative_elements.push_back(vertex_id(v));
    for (int e = 0; e < emb.edge_count(); ++e)
        if (report.ledger.charge(edge_id_of(e)) < 0) report.negative_elements.push_back(edge_id_of(e));
    for (int f = 0; f < emb.face_count(); ++f)
        if (report.ledger.charge(face_id(f)) < 0) report.negative_elements.push_back(face_id(f));

    report.lemma_violations = check_lemmas(emb, templates);
    return report;
}

}  // namespace defco
