#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "tvg/static_graph.hpp"

namespace tvg {

namespace detail {

inline std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// Static, undirected GEXF 1.2 document. Node ids are dense indices, labels carry
/// the node id, and edge strength goes to the weight attribute. Nothing
/// time-dependent is embedded, so equal graphs give identical files.
inline void write_gexf(std::ostream& out, const StaticGraph& g) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
      << "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n"
      << "    <nodes>\n";
  for (std::size_t i = 0; i < g.node_count(); ++i)
    out << "      <node id=\"" << i << "\" label=\"" << detail::xml_escape(g.name(i)) << "\"/>\n";
  out << "    </nodes>\n"
      << "    <edges>\n";
  std::size_t id = 0;
  for (const auto& e : g.edges())
    out << "      <edge id=\"" << id++ << "\" source=\"" << e.u << "\" target=\"" << e.v
        << "\" weight=\"" << e.weight << "\"/>\n";
  out << "    </edges>\n"
      << "  </graph>\n"
      << "</gexf>\n";
}

inline std::string to_gexf(const StaticGraph& g) {
  std::ostringstream out;
  write_gexf(out, g);
  return out.str();
}

}  // namespace tvg
