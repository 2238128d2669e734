#ifndef ARCFILT_DUAL_GRAPH_HPP
#define ARCFILT_DUAL_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcfilt {

// One exceptional component of a resolution: a curve with a self-intersection
// number and a genus.
struct Vertex {
  std::string id;
  int selfIntersection = -2;
  int genus = 0;

  bool operator==(const Vertex&) const = default;
};

// Symmetric integer matrix E_i . E_j: diagonal entries are the
// self-intersections, off-diagonal entries count intersection points.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;
  explicit IntersectionMatrix(int size) : size_(size), entries_(size * size, 0) {}

  static IntersectionMatrix fromRows(const std::vector<std::vector<long long>>& rows);

  int size() const { return size_; }
  long long at(int i, int j) const { return entries_[static_cast<size_t>(i) * size_ + j]; }
  void set(int i, int j, long long value) {
    entries_[static_cast<size_t>(i) * size_ + j] = value;
  }
  bool isSymmetric() const;

 private:
  int size_ = 0;
  std::vector<long long> entries_;
};

// Dual graph of a resolution of a normal surface singularity.  Vertices are
// exceptional components, edges are intersection points (multi-edges allowed,
// self-loops are not).  Construction validates connectedness and negative
// definiteness of the intersection matrix; invalid graphs are rejected.
class DualGraph {
 public:
  static DualGraph fromParts(std::vector<Vertex> vertices,
                             std::vector<std::pair<int, int>> edges,
                             std::string label = "");

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int vertexCount() const { return static_cast<int>(vertices_.size()); }
  // Edges as index pairs (lower index first), in insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const IntersectionMatrix& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }
  // Non-fatal observations made during construction (e.g. a (-1)-vertex,
  // which signals a non-minimal resolution).
  const std::vector<std::string>& warnings() const { return warnings_; }

  int indexOf(std::string_view id) const;  // -1 if absent

  bool operator==(const DualGraph& other) const;

 private:
  DualGraph() = default;

  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  IntersectionMatrix matrix_;
  std::string label_;
  std::vector<std::string> warnings_;
};

enum class AdeFamily { A, D, E };

// Dynkin diagram of the named type, every self-intersection -2 and genus 0.
// A_k needs k >= 1, D_k needs k >= 4, E_k needs k in {6,7,8}.
DualGraph buildAde(AdeFamily family, int k);

AdeFamily adeFamilyFromChar(char c);  // throws InvalidParameterError
std::string adeLabel(AdeFamily family, int k);

// Parses the line-oriented graph format:
//   vertex <id> self=<int> [genus=<uint>]
//   edge <id> <id>
// '#' starts a comment; duplicate edge lines accumulate multiplicity.
DualGraph parseDualGraph(std::string_view text, std::string label = "");

// Inverse of parseDualGraph up to comment/whitespace normalization.
std::string renderDualGraph(const DualGraph& graph);

IntersectionMatrix intersectionMatrix(const DualGraph& graph);

// Sylvester test with exact integer minors: true iff the k-th leading
// principal minor has sign (-1)^k for every k.
bool isNegativeDefinite(const IntersectionMatrix& matrix);

// Adjunction degrees K.E_i = -E_i.E_i - 2 + 2 genus_i, one entry per vertex.
std::vector<long long> canonicalDegree(const DualGraph& graph);

}  // namespace arcfilt

#endif  // ARCFILT_DUAL_GRAPH_HPP
