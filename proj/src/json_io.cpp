#include "mbal/json_io.hpp"

#include <fstream>
#include <set>

#include "mbal/errors.hpp"

namespace mbal {

namespace {

const Json& require_field(const Json& j, const char* key, const char* what)
{
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string{what} + " needs a \"" + key + "\" entry");
    }
    return j.at(key);
}

std::string require_string(const Json& j, const char* what)
{
    if (!j.is_string()) {
        throw InputError(std::string{what} + " must be a string, got " + j.dump());
    }
    return j.get<std::string>();
}

} // namespace

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Rational{j.get<std::int64_t>()};
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    throw InputError("expected a rational string or integer, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return r.str(); }

Frame frame_from_json(const Json& j)
{
    const Json& pts = require_field(j, "points", "frame");
    const Json& edges = require_field(j, "edges", "frame");
    if (!pts.is_array() || !edges.is_array()) {
        throw InputError("frame \"points\" and \"edges\" must be arrays");
    }
    std::vector<std::string> names;
    for (const Json& p : pts) {
        names.push_back(require_string(p, "point name"));
    }
    std::vector<std::pair<PointIndex, PointIndex>> pairs;
    auto lookup = [&](const std::string& name) -> PointIndex {
        for (PointIndex i = 0; i < names.size(); ++i) {
            if (names[i] == name) {
                return i;
            }
        }
        throw InputError("edge endpoint '" + name + "' is not a point");
    };
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() != 2) {
            throw InputError("edge must be a [from, to] pair, got " + e.dump());
        }
        pairs.emplace_back(lookup(require_string(e[0], "edge endpoint")), lookup(require_string(e[1], "edge endpoint")));
    }
    return Frame{std::move(names), pairs};
}

Json frame_to_json(const Frame& f)
{
    Json edges = Json::array();
    for (const auto& [x, y] : f.edges()) {
        edges.push_back(Json::array({f.name(x), f.name(y)}));
    }
    return Json{{"points", f.points()}, {"edges", std::move(edges)}};
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Frame load_frame(const std::filesystem::path& path) { return frame_from_json(read_json_file(path)); }

Func func_from_json(const Json& j, const std::filesystem::path& base_dir, const FramePtr& frame)
{
    FramePtr fr = frame;
    if (j.is_object() && j.contains("frame")) {
        const Json& spec = j.at("frame");
        Frame own = spec.is_string() ? load_frame(base_dir / spec.get<std::string>()) : frame_from_json(spec);
        if (fr && *fr != own) {
            throw InputError("function file describes a different frame");
        }
        if (!fr) {
            fr = share(std::move(own));
        }
    }
    if (!fr) {
        throw InputError("function file has no frame and none was supplied");
    }
    const Json& vals = require_field(j, "values", "function");
    if (!vals.is_object()) {
        throw InputError("function \"values\" must be an object keyed by point");
    }
    std::vector<std::optional<Rational>> slots(fr->size());
    for (const auto& [key, value] : vals.items()) {
        const PointIndex i = fr->index_of(key);
        if (slots[i]) {
            throw InputError("point '" + key + "' has two values");
        }
        slots[i] = rational_from_json(value);
    }
    Values v;
    for (PointIndex i = 0; i < slots.size(); ++i) {
        if (!slots[i]) {
            throw InputError("point '" + fr->name(i) + "' has no value");
        }
        v.push_back(*slots[i]);
    }
    return Func{fr, std::move(v)};
}

Func load_func(const std::filesystem::path& path, const FramePtr& frame)
{
    return func_from_json(read_json_file(path), path.parent_path(), frame);
}

Json values_to_json(const Func& f)
{
    Json out = Json::object();
    for (PointIndex i = 0; i < f.size(); ++i) {
        out[f.frame()->name(i)] = f[i].str();
    }
    return out;
}

Json func_to_json(const Func& f) { return Json{{"frame", frame_to_json(*f.frame())}, {"values", values_to_json(f)}}; }

Json point_set_to_json(const Frame& frame, PointSet s)
{
    Json out = Json::array();
    for (PointIndex i : s.indices()) {
        out.push_back(frame.name(i));
    }
    return out;
}

Json pairs_to_json(const Frame& frame, const std::vector<std::pair<PointIndex, PointIndex>>& pairs)
{
    Json out = Json::array();
    for (const auto& [x, y] : pairs) {
        out.push_back(Json::array({frame.name(x), frame.name(y)}));
    }
    return out;
}

Json law_evaluation_to_json(const LawEvaluation& ev)
{
    return Json{{"law", law_id(ev.law)},
                {"a", values_to_json(ev.input.a)},
                {"b", values_to_json(ev.input.b)},
                {"lambda", ev.input.lambda.str()},
                {"premise", ev.premise},
                {"comparison", ev.comparison == Comparison::equal ? "=" : "<="},
                {"lhs", values_to_json(ev.lhs)},
                {"rhs", values_to_json(ev.rhs)},
                {"holds", ev.holds}};
}

Json verdict_to_json(const Verdict& v)
{
    Json out{{"law", law_id(v.law)}, {"verdict", v.label()}, {"checked", v.checked}};
    if (v.violation) {
        out["witness"] = law_evaluation_to_json(*v.violation);
    }
    return out;
}

Json scheme_evaluation_to_json(const SchemeEvaluation& ev)
{
    return Json{{"scheme", scheme_id(ev.scheme)},
                {"form", form_id(ev.form)},
                {"a", values_to_json(ev.a)},
                {"lhs", values_to_json(ev.lhs)},
                {"rhs", values_to_json(ev.rhs)},
                {"holds", ev.holds}};
}

Json scheme_verdict_to_json(const SchemeVerdict& v)
{
    Json out{{"scheme", scheme_id(v.scheme)},
             {"verdict", v.label()},
             {"checked", v.checked},
             {"forms_agree", v.forms_agree()}};
    if (v.box_violation) {
        out["witness"] = scheme_evaluation_to_json(*v.box_violation);
    }
    if (v.diamond_violation) {
        out["diamond_witness"] = scheme_evaluation_to_json(*v.diamond_violation);
    }
    return out;
}

Json witness_to_json(const Witness& w)
{
    return Json{{"stage", stage_id(w.stage)}, {"evaluation", scheme_evaluation_to_json(w.evaluation)}};
}

Json class_set_to_json(const ClassSet& c) { return c.ids(); }

Json agreement_to_json(const AgreementResult& r)
{
    Json schemes = Json::array();
    for (const SchemeAgreement& s : r.schemes) {
        Json e{{"scheme", scheme_id(s.scheme)},
               {"frame_has", s.frame_has},
               {"algebra", s.algebra.label()},
               {"agree", s.agree()}};
        if (s.witness) {
            e["witness"] = witness_to_json(*s.witness);
        }
        schemes.push_back(std::move(e));
    }
    return Json{{"frame_classes", class_set_to_json(r.frame_classes)}, {"schemes", std::move(schemes)}, {"agree", r.agree()}};
}

Json operator_roundtrip_to_json(const OperatorRoundtrip& r)
{
    Json out{{"status", status_label(r.status)}, {"compared", r.compared}};
    if (r.reconstructed) {
        out["reconstructed"] = frame_to_json(*r.reconstructed);
    }
    if (r.failed_axiom) {
        out["failed_axiom"] = verdict_to_json(*r.failed_axiom);
    }
    if (r.witness) {
        out["witness"] = values_to_json(*r.witness);
        out["original"] = values_to_json(*r.original_value);
        out["reconstructed_value"] = values_to_json(*r.reconstructed_value);
    }
    return out;
}

Json frame_roundtrip_to_json(const Frame& frame, const FrameRoundtrip& r)
{
    return Json{{"status", r.equal() ? "equal" : "mismatch"},
                {"missing", pairs_to_json(frame, r.missing)},
                {"extra", pairs_to_json(frame, r.extra)}};
}

Json diagram_to_json(const Frame& frame, const ModalAlgebraFin& algebra, const DiagramVerdict& v)
{
    Json table = Json::array();
    for (std::uint64_t u = 0; u < algebra.table().size(); ++u) {
        const PointSet us{u};
        table.push_back(Json{{"U", point_set_to_json(frame, us)},
                             {"box", point_set_to_json(frame, algebra.box(us))},
                             {"classical", point_set_to_json(frame, classical_box(frame, us))}});
    }
    Json out{{"commutes", v.commutes()}, {"subsets", v.subsets}, {"table", std::move(table)}};
    if (v.box_mismatch) {
        out["box_mismatch"] = point_set_to_json(frame, *v.box_mismatch);
    }
    if (v.boolean_mismatch) {
        out["boolean_mismatch"] = Json::array(
            {point_set_to_json(frame, v.boolean_mismatch->first), point_set_to_json(frame, v.boolean_mismatch->second)});
    }
    return out;
}

} // namespace mbal
