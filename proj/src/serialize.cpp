#include "gaudin/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace gaudin {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, latex or text)");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json:
      return "json";
    case Format::Latex:
      return "latex";
    case Format::Text:
      return "text";
  }
  return "";
}

std::string latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  const std::string sign = q < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

namespace {

// Appends "c·body" to a running sum, handling signs and unit coefficients.
void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& body) {
  const Rational mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  first = false;
  if (body.empty()) {
    os << latex(mag);
    return;
  }
  if (mag != 1) os << latex(mag) << " ";
  os << body;
}

std::string monomial_latex(const AlgebraPtr& alg, const Monomial& m) {
  const char* symbol = alg->quantum() ? "e" : "x";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    const Generator g = alg->generator(m[i]);
    if (i > 0) os << " ";
    os << symbol << "^{(" << g.site << ")}_{" << g.row << g.col << "}";
    if (j - i > 1) os << "^{" << j - i << "}";
    i = j;
  }
  return os.str();
}

std::string upoly_latex(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coefficient(k);
    if (c == 0) continue;
    std::string body;
    if (k == 1) body = "z";
    if (k > 1) body = "z^{" + std::to_string(k) + "}";
    append_term(os, first, c, body);
  }
  return os.str();
}

}  // namespace

std::string latex(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(os, first, it->second, monomial_latex(p.algebra(), it->first));
  }
  return os.str();
}

std::string latex(const RatFun& f) {
  if (f.is_polynomial()) return upoly_latex(f.numerator());
  return "\\frac{" + upoly_latex(f.numerator()) + "}{" + upoly_latex(f.denominator()) + "}";
}

std::string latex(const LaxEntry& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const std::string mono = monomial_latex(e.algebra(), it->first);
    const RatFun& f = it->second;
    if (f.is_constant()) {
      append_term(os, first, f.numerator().coefficient(0), mono);
      continue;
    }
    if (!first) os << " + ";
    first = false;
    os << latex(f);
    if (!mono.empty()) os << " " << mono;
  }
  return os.str();
}

std::string latex(const LaxMatrix& L) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (int a = 0; a < L.size(); ++a) {
    for (int b = 0; b < L.size(); ++b) os << (b > 0 ? " & " : "  ") << latex(L(a, b));
    os << (a + 1 < L.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}";
  return os.str();
}

Json to_json(const NCPoly& p) { return {{"text", p.to_string()}, {"latex", latex(p)}}; }

Json to_json(const LaxEntry& e) { return {{"text", e.to_string()}, {"latex", latex(e)}}; }

Json to_json(const Provenance& p) {
  Json j{{"matrix", p.matrix}, {"power", p.power}, {"order", p.order}};
  j["pole"] = p.pole ? Json(p.pole->get_str()) : Json(nullptr);
  return j;
}

Json to_json(const LaxMatrix& L) {
  Json entries = Json::array();
  for (int a = 0; a < L.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < L.size(); ++b) row.push_back(to_json(L(a, b)));
    entries.push_back(row);
  }
  Json poles = Json::array();
  for (const auto& p : L.poles()) poles.push_back({{"point", p.point.get_str()}, {"order", p.order}});
  return {{"id", L.id()},
          {"signature", to_string(L.algebra()->signature())},
          {"polynomial", L.polynomial()},
          {"poles", poles},
          {"entries", entries},
          {"latex", latex(L)}};
}

Json to_json(const InvariantFamily& fam) {
  Json arr = Json::array();
  for (const auto& m : fam.members) {
    Json j = to_json(m.value);
    j["provenance"] = to_json(m.provenance);
    j["label"] = m.provenance.to_string();
    arr.push_back(std::move(j));
  }
  return arr;
}

Json to_json(const std::vector<NamedPoly>& gens) {
  Json arr = Json::array();
  for (const auto& g : gens) {
    Json j = to_json(g.value);
    j["label"] = g.label;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json to_json(const LimitFamily& fam) {
  Json matrices = Json::array();
  for (std::size_t i = 0; i < fam.matrices.size(); ++i) {
    Json m = to_json(fam.matrices[i]);
    const auto& node = fam.nodes[i];
    Json positions = Json::array();
    for (const auto& p : node.positions) positions.push_back(p.get_str());
    m["node"] = {{"label", node.label}, {"child_sites", node.child_sites}, {"positions", positions}};
    matrices.push_back(std::move(m));
  }
  Json j{{"matrices", matrices}};
  if (!fam.matrices.empty() && !fam.matrices.front().algebra()->quantum()) j["invariants"] = to_json(fam.invariants());
  return j;
}

Json to_json(const TalalaevOutput& out, const std::vector<Rational>& points) {
  auto entry = [&](const LaxEntry& e) {
    Json j = to_json(e);
    Json at = Json::object();
    for (const auto& u : points) {
      try {
        at[u.get_str()] = to_json(e.eval_z(u));
      } catch (const PoleError&) {
        at[u.get_str()] = nullptr;
      }
    }
    j["at"] = at;
    return j;
  };
  Json qh = Json::object();
  for (std::size_t i = 0; i < out.qh.size(); ++i) qh["QH_" + std::to_string(i)] = entry(out.qh[i]);
  Json qtr = Json::object();
  for (std::size_t k = 0; k < out.qtr.size(); ++k) {
    for (std::size_t j = 0; j < out.qtr[k].size(); ++j) {
      qtr["QTr^" + std::to_string(k + 1) + "_" + std::to_string(j)] = entry(out.qtr[k][j]);
    }
  }
  Json pts = Json::array();
  for (const auto& u : points) pts.push_back(u.get_str());
  return {{"signature", to_string(out.algebra->signature())}, {"QH", qh}, {"QTr", qtr}, {"points", pts}};
}

std::string report_text(const Json& report, int indent) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const bool skipped = report.value("skipped", false);
  os << pad << (skipped ? "SKIP" : (report.at("pass").get<bool>() ? "PASS" : "FAIL")) << "  "
     << report.at("check").get<std::string>();
  const std::string spec = report.value("spec", "");
  if (!spec.empty()) os << " [" << spec << "]";
  os << "  trials=" << report.value("trials", 0) << "\n";
  if (skipped) os << pad << "  reason: " << report.at("details").value("skipped", "") << "\n";
  const auto& witnesses = report.at("witnesses");
  if (!witnesses.empty()) {
    os << pad << "  witness: " << witnesses.front().dump() << "\n";
    const int total = report.value("failures", static_cast<int>(witnesses.size()));
    if (total > 1) os << pad << "  (" << total << " failures)\n";
  }
  if (report.contains("parts")) {
    for (const auto& p : report.at("parts")) os << report_text(p, indent + 2);
  }
  return os.str();
}

namespace {

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_':
      case '&':
      case '%':
      case '#':
      case '$':
      case '{':
      case '}':
        out += '\\';
        out += c;
        break;
      case '^':
        out += "\\^{}";
        break;
      case '\\':
        out += "\\textbackslash{}";
        break;
      default:
        out += c;
    }
  }
  return out;
}

void report_rows(const Json& report, int depth, std::ostringstream& os) {
  const bool skipped = report.value("skipped", false);
  const std::string status = skipped ? "SKIP" : (report.at("pass").get<bool>() ? "PASS" : "FAIL");
  os << "\\hspace{" << depth << "em}" << latex_escape(report.at("check").get<std::string>()) << " & "
     << latex_escape(report.value("spec", "")) << " & " << report.value("trials", 0) << " & " << status << " \\\\\n";
  if (report.contains("parts")) {
    for (const auto& p : report.at("parts")) report_rows(p, depth + 1, os);
  }
}

// Commutation matrices as 0 / \ast patterns.
void matrices(const Json& report, std::ostringstream& os) {
  const auto& details = report.at("details");
  if (details.contains("matrix") && !details.at("matrix").empty()) {
    const auto& m = details.at("matrix");
    os << "\n% " << latex_escape(report.at("check").get<std::string>()) << "\n\\[\n\\begin{array}{"
       << std::string(m.size(), 'c') << "}\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        os << (j > 0 ? " & " : "  ") << (m[i][j].get<std::string>() == "0" ? "0" : "\\ast");
      }
      os << (i + 1 < m.size() ? " \\\\\n" : "\n");
    }
    os << "\\end{array}\n\\]\n";
  }
  if (report.contains("parts")) {
    for (const auto& p : report.at("parts")) matrices(p, os);
  }
}

}  // namespace

std::string report_latex(const Json& report) {
  std::ostringstream os;
  os << "\\begin{tabular}{llrl}\n\\hline\ncheck & spec & trials & result \\\\\n\\hline\n";
  report_rows(report, 0, os);
  os << "\\hline\n\\end{tabular}\n";
  matrices(report, os);
  return os.str();
}

std::string render(const Json& doc, Format format) {
  if (format == Format::Json) return doc.dump(2) + "\n";
  if (doc.contains("check")) return format == Format::Text ? report_text(doc) : report_latex(doc);
  std::ostringstream os;
  const Json& objects = doc.at("objects");
  if (format == Format::Text) {
    for (const auto& o : objects) os << o.at("label").get<std::string>() << ": " << o.at("text").get<std::string>() << "\n";
    if (doc.contains("notes")) {
      for (const auto& n : doc.at("notes")) os << "note: " << n.get<std::string>() << "\n";
    }
    return os.str();
  }
  os << "\\begin{align*}\n";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    os << "  \\text{" << latex_escape(objects[i].at("label").get<std::string>()) << "} &= "
       << objects[i].at("latex").get<std::string>() << (i + 1 < objects.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{align*}\n";
  return os.str();
}

}  // namespace gaudin
