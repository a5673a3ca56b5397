#ifndef HEDGEGRAPH_HEDGEGRAPH_HPP
#define HEDGEGRAPH_HEDGEGRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hedgegraph/types.hpp"

namespace hedge {

/// Sorted, duplicate-free, nonempty vertex set.
struct Hyperedge {
  std::vector<VertexId> vertices;

  std::size_t size() const { return vertices.size(); }
  bool contains(VertexId v) const;
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// A group of hyperedges that is present or absent as one unit.
struct Hedge {
  std::string id;
  std::vector<Hyperedge> hyperedges;
  Rational weight{1};

  friend bool operator==(const Hedge&, const Hedge&) = default;
};

/// Merges intersecting hyperedges until they are pairwise vertex-disjoint.
/// The result lists each merged hyperedge at the position of its first
/// contributing input hyperedge, with sorted vertices.
Hedge normalize_hedge(const Hedge& hedge);

/// Immutable hedgegraph over vertices 0..n-1. Hedges are normalized on
/// construction.
class Hedgegraph {
 public:
  Hedgegraph(std::vector<std::string> vertex_names, std::vector<Hedge> hedges);

  /// Unnamed vertices "0".."n-1"; hedges named "e0".."e{m-1}" when ids are empty.
  static Hedgegraph from_hyperedges(std::size_t n, std::vector<std::vector<std::vector<VertexId>>> hedges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t hedge_count() const { return hedges_.size(); }
  /// Sum over hedges and hyperedges of hyperedge sizes.
  std::size_t representation_size() const { return representation_size_; }

  const std::vector<Hedge>& hedges() const { return hedges_; }
  const Hedge& hedge(HedgeIndex e) const;
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<HedgeIndex> find_hedge(std::string_view id) const;

  std::vector<Rational> weights() const;
  HedgeSet all_hedges() const { return HedgeSet::full(hedges_.size()); }
  HedgeSet no_hedges() const { return HedgeSet(hedges_.size()); }

  /// Same vertices, keeping only the hedges in `set` (in order).
  Hedgegraph restrict_to(const HedgeSet& set) const;

  /// Throws InvalidArgument unless `set` ranges over this hedgegraph's hedges.
  void check(const HedgeSet& set) const;
  void check(VertexId v) const;

  friend bool operator==(const Hedgegraph& a, const Hedgegraph& b) {
    return a.vertex_names_ == b.vertex_names_ && a.hedges_ == b.hedges_;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Hedge> hedges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, HedgeIndex> hedge_index_;
  std::size_t representation_size_ = 0;
};

enum class ParseErrorKind {
  kSyntax,
  kMissingVertices,
  kDuplicateVertex,
  kDuplicateHedge,
  kUnknownVertex,
  kEmptyHedge,
  kNegativeWeight,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

struct ParseWarning {
  std::size_t line;
  std::string message;
};

/// Reads the `.hg` text format:
///
///   # comment
///   vertices A B C
///   hedge red weight 2.5 : A B ; C
///
/// The first non-comment line declares the vertices. Each hedge line lists
/// hyperedges separated by ';'. Singleton hyperedges are accepted with a
/// warning.
Hedgegraph parse_hedgegraph(std::string_view text, std::vector<ParseWarning>* warnings = nullptr);

/// Writes the canonical `.hg` form: normalized hedges in input order, a weight
/// clause only for weights other than 1.
std::string serialize_hedgegraph(const Hedgegraph& graph);

}  // namespace hedge

#endif  // HEDGEGRAPH_HEDGEGRAPH_HPP
