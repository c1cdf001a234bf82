#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

class GraphError : public std::invalid_argument {
 public:
  explicit GraphError(const std::string& what) : std::invalid_argument(what) {}
};

class SelfLoopError : public GraphError {
 public:
  explicit SelfLoopError(int v)
      : GraphError("self-loop at vertex " + std::to_string(v)) {}
};

class VertexRangeError : public GraphError {
 public:
  VertexRangeError(int v, int n)
      : GraphError("vertex " + std::to_string(v) + " out of range [1," +
                   std::to_string(n) + "]") {}
};

class DuplicateEdgeError : public GraphError {
 public:
  DuplicateEdgeError(int u, int v)
      : GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") already present") {}
};

class EdgeNotFoundError : public GraphError {
 public:
  EdgeNotFoundError(int u, int v)
      : GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") not present") {}
};

class HararyParamError : public std::invalid_argument {
 public:
  HararyParamError(int k, int n, const std::string& why)
      : std::invalid_argument("invalid Harary parameters (k=" +
                              std::to_string(k) + ", n=" + std::to_string(n) +
                              "): " + why) {}
};

// Raised when no documented closed-form regime covers (k, n).
class UncoveredRegimeError : public std::domain_error {
 public:
  UncoveredRegimeError(int k, int n)
      : std::domain_error("no closed-form regime covers (k=" +
                          std::to_string(k) + ", n=" + std::to_string(n) + ")"),
        k_(k),
        n_(n) {}
  int k() const { return k_; }
  int n() const { return n_; }

 private:
  int k_;
  int n_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& why)
      : std::runtime_error("edge list, line " + std::to_string(line) + ": " +
                           why) {}
};

}  // namespace lrc
