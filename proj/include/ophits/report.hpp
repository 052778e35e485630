#pragma once

// JSON and Graphviz DOT export of hub/authority structure.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ophits/hits.hpp"

namespace ophits {

inline nlohmann::json label_json(GoldLabel l) {
  switch (l) {
    case GoldLabel::Opinionated: return "opinion";
    case GoldLabel::Factual: return "fact";
    case GoldLabel::Unlabeled: break;
  }
  return nullptr;
}

inline nlohmann::json to_json(const HubAuthorityReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& h : report.hubs) {
    nlohmann::json auths = nlohmann::json::array();
    for (const auto& a : h.authorities)
      auths.push_back({{"position", a.position},
                       {"text", a.text},
                       {"label", label_json(a.label)},
                       {"auth_score", a.auth_score},
                       {"edge_weight", a.edge_weight}});
    out.push_back({{"hub",
                    {{"position", h.position},
                     {"text", h.text},
                     {"label", label_json(h.label)},
                     {"hub_score", h.hub_score}}},
                   {"authorities", auths}});
  }
  return out;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n' || c == '\r') {
      out += ' ';
      continue;
    }
    out += c;
  }
  return out;
}

inline std::string dot_label(std::size_t pos, const std::string& text, GoldLabel label, const char* score_name,
                             double score) {
  constexpr std::size_t kMaxText = 60;
  std::string shown = text.size() > kMaxText ? text.substr(0, kMaxText) + "..." : text;
  std::ostringstream os;
  os << "S" << pos;
  if (label == GoldLabel::Opinionated) os << " [opinion]";
  else if (label == GoldLabel::Factual) os << " [fact]";
  os << "\\n" << dot_escape(shown) << "\\n" << score_name << "=" << std::setprecision(4) << score;
  return os.str();
}

}  // namespace detail

/// Hubs are drawn as bold ellipses, authorities as boxes; each edge carries W[hub][auth].
inline void write_dot(std::ostream& out, const HubAuthorityReport& report) {
  out << "digraph \"" << detail::dot_escape(report.document_id) << "\" {\n";
  out << "  rankdir=LR;\n";
  std::vector<bool> declared;
  auto declare = [&](std::size_t pos, const std::string& attrs) {
    if (pos >= declared.size()) declared.resize(pos + 1, false);
    if (declared[pos]) return;
    declared[pos] = true;
    out << "  s" << pos << " [" << attrs << "];\n";
  };
  for (const auto& h : report.hubs)
    declare(h.position, "shape=ellipse, style=bold, label=\"" +
                            detail::dot_label(h.position, h.text, h.label, "hub", h.hub_score) + "\"");
  for (const auto& h : report.hubs)
    for (const auto& a : h.authorities)
      declare(a.position,
              "shape=box, label=\"" + detail::dot_label(a.position, a.text, a.label, "auth", a.auth_score) + "\"");
  for (const auto& h : report.hubs)
    for (const auto& a : h.authorities) {
      std::ostringstream w;
      w << std::setprecision(4) << a.edge_weight;
      out << "  s" << h.position << " -> s" << a.position << " [label=\"" << w.str() << "\"];\n";
    }
  out << "}\n";
}

inline std::string to_dot(const HubAuthorityReport& report) {
  std::ostringstream os;
  write_dot(os, report);
  return os.str();
}

}  // namespace ophits
