#pragma once

// JSON documents and LaTeX/plain-text renderings of the library's objects.
// Object keys are sorted (nlohmann::json default), so equal inputs dump to equal bytes.

#include <string>
#include <vector>

#include "gaudin/gluing.hpp"
#include "gaudin/lax.hpp"
#include "gaudin/manin.hpp"
#include "gaudin/report.hpp"

namespace gaudin {

enum class Format { Json, Latex, Text };

Format parse_format(const std::string& name);
std::string to_string(Format f);

std::string latex(const Rational& q);
std::string latex(const NCPoly& p);
std::string latex(const RatFun& f);
std::string latex(const LaxEntry& e);
std::string latex(const LaxMatrix& L);

/// {"text", "latex"}
Json to_json(const NCPoly& p);
Json to_json(const LaxEntry& e);
Json to_json(const Provenance& p);
Json to_json(const LaxMatrix& L);
Json to_json(const InvariantFamily& fam);
Json to_json(const std::vector<NamedPoly>& gens);
/// Matrices, collision nodes and per-member provenance of the invariants (classical).
Json to_json(const LimitFamily& fam);
/// QH_i as rational functions of z and their values at `points`; QTr^k_j likewise.
Json to_json(const TalalaevOutput& out, const std::vector<Rational>& points);

/// Renders a build document or a report document.
std::string render(const Json& doc, Format format);

std::string report_text(const Json& report, int indent = 0);
std::string report_latex(const Json& report);

}  // namespace gaudin
