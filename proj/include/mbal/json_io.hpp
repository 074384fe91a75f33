#pragma once

#include <filesystem>

#include <json.hpp>

#include "mbal/boolcore.hpp"
#include "mbal/correspondence.hpp"
#include "mbal/duality.hpp"
#include "mbal/frame.hpp"
#include "mbal/func.hpp"
#include "mbal/modal.hpp"
#include "mbal/rational.hpp"

namespace mbal {

/// Insertion-ordered, so reports keep frame order and dump reproducibly.
using Json = nlohmann::ordered_json;

/// Accepts a canonical string ("3", "-1/2") or a JSON integer.
[[nodiscard]] Rational rational_from_json(const Json& j);
[[nodiscard]] Json rational_to_json(const Rational& r);

/// {"points": [name...], "edges": [[from, to]...]}. Throws InputError on a
/// malformed document, duplicate edge, or unknown endpoint.
[[nodiscard]] Frame frame_from_json(const Json& j);
[[nodiscard]] Json frame_to_json(const Frame& f);

/// Reads and parses a JSON file; I/O and syntax problems become InputError.
[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
[[nodiscard]] Frame load_frame(const std::filesystem::path& path);

/// {"frame": <frame object or path>, "values": {"<point>": "<rational>"}}.
/// A relative frame path is resolved against `base_dir`. If `frame` is given
/// the "frame" entry may be omitted; when both are present they must describe
/// the same frame. Every point needs exactly one value.
[[nodiscard]] Func func_from_json(const Json& j, const std::filesystem::path& base_dir, const FramePtr& frame = nullptr);
[[nodiscard]] Func load_func(const std::filesystem::path& path, const FramePtr& frame = nullptr);

/// {"<point>": "<rational>", ...} in frame order.
[[nodiscard]] Json values_to_json(const Func& f);
/// {"frame": ..., "values": ...}
[[nodiscard]] Json func_to_json(const Func& f);
[[nodiscard]] Json point_set_to_json(const Frame& frame, PointSet s);
[[nodiscard]] Json pairs_to_json(const Frame& frame, const std::vector<std::pair<PointIndex, PointIndex>>& pairs);

[[nodiscard]] Json law_evaluation_to_json(const LawEvaluation& ev);
[[nodiscard]] Json verdict_to_json(const Verdict& v);
[[nodiscard]] Json scheme_evaluation_to_json(const SchemeEvaluation& ev);
[[nodiscard]] Json scheme_verdict_to_json(const SchemeVerdict& v);
[[nodiscard]] Json witness_to_json(const Witness& w);
[[nodiscard]] Json class_set_to_json(const ClassSet& c);
[[nodiscard]] Json agreement_to_json(const AgreementResult& r);
[[nodiscard]] Json operator_roundtrip_to_json(const OperatorRoundtrip& r);
[[nodiscard]] Json frame_roundtrip_to_json(const Frame& frame, const FrameRoundtrip& r);
[[nodiscard]] Json diagram_to_json(const Frame& frame, const ModalAlgebraFin& algebra, const DiagramVerdict& v);

} // namespace mbal
