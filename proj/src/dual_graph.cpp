#include "arcfilt/dual_graph.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "arcfilt/errors.hpp"

namespace arcfilt {

namespace {

// Exact determinant of the leading k x k block via fraction-free (Bareiss)
// elimination with row pivoting.  Returns the sign only (-1, 0, +1); that is
// all the definiteness test needs and it avoids exposing mpz in the header.
int leadingMinorSign(const IntersectionMatrix& m, int k) {
  std::vector<mpz_class> a(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[static_cast<size_t>(i) * k + j] = static_cast<long>(m.at(i, j));

  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * k + j]; };

  mpz_class prev = 1;
  int sign = 1;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row) {
      if (at(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < k; ++j) std::swap(at(pivot, j), at(col, j));
      sign = -sign;
    }
    for (int row = col + 1; row < k; ++row) {
      for (int j = col + 1; j < k; ++j) {
        mpz_class t = at(row, j) * at(col, col) - at(row, col) * at(col, j);
        mpz_divexact(at(row, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(row, col) = 0;
    }
    prev = at(col, col);
  }
  int s = sgn(at(k - 1, k - 1));
  return sign * s;
}

bool isConnected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

long long parseInteger(std::string_view token, std::string_view what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("expected an integer for " + std::string(what) + ", got '" +
                     std::string(token) + "'");
  return value;
}

std::vector<std::string> splitTokens(std::string_view line) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.emplace_back(line.substr(start, pos - start));
  }
  return tokens;
}

}  // namespace

IntersectionMatrix IntersectionMatrix::fromRows(const std::vector<std::vector<long long>>& rows) {
  IntersectionMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.size())
      throw InvalidParameterError("matrix rows must all have the same length");
    for (int j = 0; j < m.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

bool IntersectionMatrix::isSymmetric() const {
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

DualGraph DualGraph::fromParts(std::vector<Vertex> vertices,
                               std::vector<std::pair<int, int>> edges, std::string label) {
  if (vertices.empty()) throw InvalidParameterError("a dual graph needs at least one vertex");
  const int n = static_cast<int>(vertices.size());

  std::map<std::string_view, int> seen;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = seen.emplace(vertices[i].id, i);
    if (!inserted) throw InvalidParameterError("duplicate vertex id '" + vertices[i].id + "'");
    if (vertices[i].id.empty()) throw InvalidParameterError("empty vertex id");
    if (vertices[i].genus < 0) throw InvalidParameterError("negative genus");
  }
  for (auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InvalidParameterError("edge endpoint out of range");
    if (i == j)
      throw InvalidParameterError("self-loop on vertex '" + vertices[i].id + "'");
    if (i > j) std::swap(i, j);
  }

  if (!isConnected(n, edges)) throw InvalidParameterError("graph is not connected");

  DualGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.label_ = std::move(label);

  g.matrix_ = IntersectionMatrix(n);
  for (int i = 0; i < n; ++i) g.matrix_.set(i, i, g.vertices_[i].selfIntersection);
  for (auto [i, j] : g.edges_) {
    g.matrix_.set(i, j, g.matrix_.at(i, j) + 1);
    g.matrix_.set(j, i, g.matrix_.at(j, i) + 1);
  }

  if (!isNegativeDefinite(g.matrix_))
    throw InvalidParameterError("intersection matrix is not negative definite");

  for (const auto& v : g.vertices_) {
    if (v.selfIntersection == -1)
      g.warnings_.push_back("vertex '" + v.id +
                            "' has self-intersection -1; the resolution is not minimal");
  }
  return g;
}

int DualGraph::indexOf(std::string_view id) const {
  for (int i = 0; i < vertexCount(); ++i)
    if (vertices_[i].id == id) return i;
  return -1;
}

bool DualGraph::operator==(const DualGraph& other) const {
  if (vertices_ != other.vertices_) return false;
  auto a = edges_;
  auto b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

AdeFamily adeFamilyFromChar(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return AdeFamily::A;
    case 'D':
    case 'd':
      return AdeFamily::D;
    case 'E':
    case 'e':
      return AdeFamily::E;
    default:
      throw InvalidParameterError(std::string("unknown family '") + c + "'; expected A, D or E");
  }
}

std::string adeLabel(AdeFamily family, int k) {
  const char* f = family == AdeFamily::A ? "A" : family == AdeFamily::D ? "D" : "E";
  return f + std::to_string(k);
}

DualGraph buildAde(AdeFamily family, int k) {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  auto addVertex = [&] {
    vertices.push_back({"e" + std::to_string(vertices.size() + 1), -2, 0});
  };

  switch (family) {
    case AdeFamily::A: {
      if (k < 1) throw InvalidParameterError("A_k requires k >= 1");
      for (int i = 0; i < k; ++i) addVertex();
      for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
      break;
    }
    case AdeFamily::D: {
      if (k < 4) throw InvalidParameterError("D_k requires k >= 4");
      // Vertex 0 is the branch vertex; 1..k-3 continue the long arm, and the
      // last two vertices are the short arms.
      for (int i = 0; i < k; ++i) addVertex();
      for (int i = 0; i + 1 <= k - 3; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, k - 2);
      edges.emplace_back(0, k - 1);
      break;
    }
    case AdeFamily::E: {
      if (k < 6 || k > 8) throw InvalidParameterError("E_k requires k in {6,7,8}");
      // Chain of k-1 vertices plus a branch vertex attached to the third one.
      for (int i = 0; i < k; ++i) addVertex();
      for (int i = 0; i + 1 < k - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, k - 1);
      break;
    }
  }
  return DualGraph::fromParts(std::move(vertices), std::move(edges), adeLabel(family, k));
}

DualGraph parseDualGraph(std::string_view text, std::string label) {
  std::vector<Vertex> vertices;
  std::map<std::string, int> index;
  std::vector<std::pair<std::string, std::string>> edgeIds;

  size_t lineStart = 0;
  int lineNumber = 0;
  while (lineStart <= text.size()) {
    size_t lineEnd = text.find('\n', lineStart);
    if (lineEnd == std::string_view::npos) lineEnd = text.size();
    std::string_view line = text.substr(lineStart, lineEnd - lineStart);
    lineStart = lineEnd + 1;
    ++lineNumber;

    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = splitTokens(line);
    if (tokens.empty()) continue;

    auto fail = [&](const std::string& msg) -> void {
      throw ParseError("line " + std::to_string(lineNumber) + ": " + msg);
    };

    if (tokens[0] == "vertex") {
      if (tokens.size() < 2) fail("vertex line needs an id");
      Vertex v;
      v.id = tokens[1];
      bool haveSelf = false;
      for (size_t t = 2; t < tokens.size(); ++t) {
        const std::string& tok = tokens[t];
        if (tok.rfind("self=", 0) == 0) {
          v.selfIntersection = static_cast<int>(parseInteger(tok.substr(5), "self"));
          haveSelf = true;
        } else if (tok.rfind("genus=", 0) == 0) {
          long long g = parseInteger(tok.substr(6), "genus");
          if (g < 0) fail("genus must be nonnegative");
          v.genus = static_cast<int>(g);
        } else {
          fail("unrecognized vertex attribute '" + tok + "'");
        }
      }
      if (!haveSelf) fail("vertex '" + v.id + "' is missing its self-intersection");
      if (index.count(v.id)) fail("duplicate vertex id '" + v.id + "'");
      index[v.id] = static_cast<int>(vertices.size());
      vertices.push_back(std::move(v));
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3) fail("edge line needs exactly two vertex ids");
      edgeIds.emplace_back(tokens[1], tokens[2]);
    } else {
      fail("unrecognized directive '" + tokens[0] + "'");
    }
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(edgeIds.size());
  for (const auto& [a, b] : edgeIds) {
    auto ia = index.find(a);
    if (ia == index.end()) throw ParseError("edge references unknown vertex '" + a + "'");
    auto ib = index.find(b);
    if (ib == index.end()) throw ParseError("edge references unknown vertex '" + b + "'");
    edges.emplace_back(ia->second, ib->second);
  }

  try {
    return DualGraph::fromParts(std::move(vertices), std::move(edges), std::move(label));
  } catch (const InvalidParameterError& e) {
    throw ParseError(e.what());
  }
}

std::string renderDualGraph(const DualGraph& graph) {
  std::ostringstream out;
  for (const auto& v : graph.vertices()) {
    out << "vertex " << v.id << " self=" << v.selfIntersection;
    if (v.genus != 0) out << " genus=" << v.genus;
    out << '\n';
  }
  for (auto [i, j] : graph.edges())
    out << "edge " << graph.vertices()[i].id << ' ' << graph.vertices()[j].id << '\n';
  return out.str();
}

IntersectionMatrix intersectionMatrix(const DualGraph& graph) { return graph.matrix(); }

bool isNegativeDefinite(const IntersectionMatrix& matrix) {
  if (!matrix.isSymmetric())
    throw InvalidParameterError("definiteness test requires a symmetric matrix");
  for (int k = 1; k <= matrix.size(); ++k) {
    int expected = (k % 2 == 1) ? -1 : 1;
    if (leadingMinorSign(matrix, k) != expected) return false;
  }
  return matrix.size() > 0;
}

std::vector<long long> canonicalDegree(const DualGraph& graph) {
  std::vector<long long> degrees;
  degrees.reserve(graph.vertexCount());
  for (const auto& v : graph.vertices())
    degrees.push_back(-static_cast<long long>(v.selfIntersection) - 2 + 2LL * v.genus);
  return degrees;
}

}  // namespace arcfilt
