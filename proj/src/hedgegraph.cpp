#include "hedgegraph/hedgegraph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hedgegraph/disjoint_sets.hpp"

namespace hedge {

bool Hyperedge::contains(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

Hedge normalize_hedge(const Hedge& hedge) {
  const std::size_t count = hedge.hyperedges.size();
  DisjointSets groups(count);
  std::map<VertexId, std::size_t> first_owner;
  for (std::size_t i = 0; i < count; ++i) {
    for (VertexId v : hedge.hyperedges[i].vertices) {
      auto [it, inserted] = first_owner.emplace(v, i);
      if (!inserted) groups.unite(it->second, i);
    }
  }

  // Groups appear in the order of their first member hyperedge.
  std::vector<std::size_t> slot(count, count);
  Hedge out{hedge.id, {}, hedge.weight};
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t root = groups.find(i);
    if (slot[root] == count) {
      slot[root] = out.hyperedges.size();
      out.hyperedges.emplace_back();
    }
    auto& merged = out.hyperedges[slot[root]].vertices;
    merged.insert(merged.end(), hedge.hyperedges[i].vertices.begin(), hedge.hyperedges[i].vertices.end());
  }
  for (auto& h : out.hyperedges) {
    std::sort(h.vertices.begin(), h.vertices.end());
    h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
  }
  return out;
}

Hedgegraph::Hedgegraph(std::vector<std::string> vertex_names, std::vector<Hedge> hedges)
    : vertex_names_(std::move(vertex_names)) {
  if (vertex_names_.empty()) throw InvalidArgument("a hedgegraph needs at least one vertex");
  for (std::size_t v = 0; v < vertex_names_.size(); ++v) {
    if (!vertex_index_.emplace(vertex_names_[v], static_cast<VertexId>(v)).second)
      throw InvalidArgument("duplicate vertex name '" + vertex_names_[v] + "'");
  }
  hedges_.reserve(hedges.size());
  for (auto& hedge : hedges) {
    if (hedge.hyperedges.empty()) throw InvalidArgument("hedge '" + hedge.id + "' has no hyperedges");
    if (hedge.weight < Rational(0)) throw InvalidArgument("hedge '" + hedge.id + "' has a negative weight");
    for (const auto& h : hedge.hyperedges) {
      if (h.vertices.empty()) throw InvalidArgument("hedge '" + hedge.id + "' has an empty hyperedge");
      for (VertexId v : h.vertices)
        if (v >= vertex_names_.size()) throw InvalidArgument("hedge '" + hedge.id + "' references an unknown vertex");
    }
    if (!hedge_index_.emplace(hedge.id, static_cast<HedgeIndex>(hedges_.size())).second)
      throw InvalidArgument("duplicate hedge id '" + hedge.id + "'");
    hedges_.push_back(normalize_hedge(hedge));
    for (const auto& h : hedges_.back().hyperedges) representation_size_ += h.size();
  }
}

Hedgegraph Hedgegraph::from_hyperedges(std::size_t n, std::vector<std::vector<std::vector<VertexId>>> hedges) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t v = 0; v < n; ++v) names.push_back(std::to_string(v));
  std::vector<Hedge> list;
  list.reserve(hedges.size());
  for (std::size_t i = 0; i < hedges.size(); ++i) {
    Hedge h{"e" + std::to_string(i), {}, Rational(1)};
    for (auto& vertices : hedges[i]) {
      std::sort(vertices.begin(), vertices.end());
      vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
      h.hyperedges.push_back(Hyperedge{std::move(vertices)});
    }
    list.push_back(std::move(h));
  }
  return Hedgegraph(std::move(names), std::move(list));
}

const Hedge& Hedgegraph::hedge(HedgeIndex e) const {
  if (e >= hedges_.size()) throw InvalidArgument("unknown hedge index " + std::to_string(e));
  return hedges_[e];
}

std::optional<VertexId> Hedgegraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<HedgeIndex> Hedgegraph::find_hedge(std::string_view id) const {
  auto it = hedge_index_.find(std::string(id));
  if (it == hedge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rational> Hedgegraph::weights() const {
  std::vector<Rational> w;
  w.reserve(hedges_.size());
  for (const auto& h : hedges_) w.push_back(h.weight);
  return w;
}

Hedgegraph Hedgegraph::restrict_to(const HedgeSet& set) const {
  check(set);
  std::vector<Hedge> kept;
  set.for_each([&](HedgeIndex e) { kept.push_back(hedges_[e]); });
  return Hedgegraph(vertex_names_, std::move(kept));
}

void Hedgegraph::check(const HedgeSet& set) const {
  if (set.universe() != hedges_.size())
    throw InvalidArgument("hedge set over " + std::to_string(set.universe()) + " hedges used with a hedgegraph of " +
                          std::to_string(hedges_.size()));
}

void Hedgegraph::check(VertexId v) const {
  if (v >= vertex_names_.size()) throw InvalidArgument("unknown vertex " + std::to_string(v));
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

namespace {

// Splits on whitespace; ':' and ';' are always tokens of their own.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == ':' || c == ';') {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

}  // namespace

Hedgegraph parse_hedgegraph(std::string_view text, std::vector<ParseWarning>* warnings) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> vertex_ids;
  std::vector<Hedge> hedges;
  std::unordered_map<std::string, std::size_t> hedge_lines;
  bool have_vertices = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (tokens.front() == "vertices") {
      if (have_vertices) throw ParseError(ParseErrorKind::kSyntax, line_no, "second 'vertices' line");
      if (tokens.size() < 2) throw ParseError(ParseErrorKind::kSyntax, line_no, "'vertices' needs at least one name");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& name = tokens[i];
        if (name == ":" || name == ";") throw ParseError(ParseErrorKind::kSyntax, line_no, "unexpected '" + name + "'");
        if (!vertex_ids.emplace(name, static_cast<VertexId>(names.size())).second)
          throw ParseError(ParseErrorKind::kDuplicateVertex, line_no, "duplicate vertex '" + name + "'");
        names.push_back(name);
      }
      have_vertices = true;
    } else if (tokens.front() == "hedge") {
      if (!have_vertices)
        throw ParseError(ParseErrorKind::kMissingVertices, line_no, "the first line must declare 'vertices'");
      if (tokens.size() < 3 || tokens[1] == ":" || tokens[1] == ";")
        throw ParseError(ParseErrorKind::kSyntax, line_no, "expected 'hedge <name> [weight <w>] : ...'");
      Hedge hedge{tokens[1], {}, Rational(1)};
      std::size_t pos = 2;
      if (tokens[pos] == "weight") {
        if (pos + 1 >= tokens.size()) throw ParseError(ParseErrorKind::kSyntax, line_no, "missing weight value");
        try {
          hedge.weight = parse_decimal(tokens[pos + 1]);
        } catch (const std::invalid_argument& err) {
          throw ParseError(ParseErrorKind::kSyntax, line_no, err.what());
        }
        if (hedge.weight < Rational(0))
          throw ParseError(ParseErrorKind::kNegativeWeight, line_no, "negative weight for hedge '" + hedge.id + "'");
        pos += 2;
      }
      if (pos >= tokens.size() || tokens[pos] != ":")
        throw ParseError(ParseErrorKind::kSyntax, line_no, "expected ':' after hedge name");
      ++pos;
      if (pos == tokens.size())
        throw ParseError(ParseErrorKind::kEmptyHedge, line_no, "hedge '" + hedge.id + "' has no hyperedges");

      Hyperedge current;
      auto close = [&] {
        if (current.vertices.empty())
          throw ParseError(ParseErrorKind::kSyntax, line_no, "empty hyperedge in hedge '" + hedge.id + "'");
        std::sort(current.vertices.begin(), current.vertices.end());
        current.vertices.erase(std::unique(current.vertices.begin(), current.vertices.end()), current.vertices.end());
        hedge.hyperedges.push_back(std::move(current));
        current = {};
      };
      for (; pos < tokens.size(); ++pos) {
        const auto& tok = tokens[pos];
        if (tok == ";") {
          close();
        } else if (tok == ":") {
          throw ParseError(ParseErrorKind::kSyntax, line_no, "unexpected ':'");
        } else {
          auto it = vertex_ids.find(tok);
          if (it == vertex_ids.end())
            throw ParseError(ParseErrorKind::kUnknownVertex, line_no, "unknown vertex '" + tok + "'");
          current.vertices.push_back(it->second);
        }
      }
      close();

      if (!hedge_lines.emplace(hedge.id, line_no).second)
        throw ParseError(ParseErrorKind::kDuplicateHedge, line_no, "duplicate hedge '" + hedge.id + "'");
      if (warnings) {
        for (const auto& h : normalize_hedge(hedge).hyperedges)
          if (h.size() == 1)
            warnings->push_back({line_no, "hedge '" + hedge.id + "' has a singleton hyperedge {" +
                                              names[h.vertices.front()] + "}"});
      }
      hedges.push_back(std::move(hedge));
    } else if (!have_vertices) {
      throw ParseError(ParseErrorKind::kMissingVertices, line_no, "the first line must declare 'vertices'");
    } else {
      throw ParseError(ParseErrorKind::kSyntax, line_no, "unknown directive '" + tokens.front() + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_vertices) throw ParseError(ParseErrorKind::kMissingVertices, line_no, "no 'vertices' line");
  return Hedgegraph(std::move(names), std::move(hedges));
}

std::string serialize_hedgegraph(const Hedgegraph& graph) {
  std::ostringstream out;
  out << "vertices";
  for (const auto& name : graph.vertex_names()) out << ' ' << name;
  out << '\n';
  for (const auto& hedge : graph.hedges()) {
    out << "hedge " << hedge.id;
    if (hedge.weight != Rational(1)) out << " weight " << to_string(hedge.weight);
    out << " :";
    for (std::size_t i = 0; i < hedge.hyperedges.size(); ++i) {
      if (i > 0) out << " ;";
      for (VertexId v : hedge.hyperedges[i].vertices) out << ' ' << graph.vertex_name(v);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hedge
