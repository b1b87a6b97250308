#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ihc/ring.hpp"

namespace ihc {

using Vertex = int;
// Vertex ids in increasing order; ids already follow the weight-compatible order.
using Simplex = std::vector<Vertex>;
using SimplexChain = std::map<Simplex, Integer>;

struct FilteredSimplex {
  std::vector<std::vector<Vertex>> blocks;  // blocks[i] = vertices of weight i

  int n() const { return static_cast<int>(blocks.size()) - 1; }
  int dim() const;
  bool regular() const { return !blocks.back().empty(); }
  Simplex vertices() const { return prefix(n()); }
  // join of blocks 0..i
  Simplex prefix(int i) const;
  static int block_dim(const std::vector<Vertex>& b) { return static_cast<int>(b.size()) - 1; }
};

struct Stratum {
  std::size_t id = 0;
  int index = 0;
  int codim = 0;
  std::vector<Vertex> vertices;
  std::vector<Simplex> simplices;
  std::uint64_t owner = 0;
  bool singular() const { return codim > 0; }
};

struct VertexSpec {
  std::string name;
  int weight = 0;
};

class WeightedComplex {
 public:
  // facets index into `vertices` (declaration order); vertices are reindexed so weights are
  // non-decreasing, ties kept in declaration order.
  static WeightedComplex build(int n, const std::vector<VertexSpec>& vertices,
                               const std::vector<std::vector<int>>& facets);

  int n() const;
  std::size_t vertex_count() const;
  int weight(Vertex v) const;
  const std::string& name(Vertex v) const;
  std::optional<Vertex> find(std::string_view name) const;
  // declaration index -> vertex id
  const std::vector<Vertex>& permutation() const;

  const std::vector<Simplex>& facets() const;
  int top_dimension() const;
  const std::vector<Simplex>& simplices(int dim) const;
  std::vector<Simplex> all_simplices() const;
  bool contains(const Simplex& s) const;
  // position of s within simplices(dim s)
  std::optional<std::size_t> index(const Simplex& s) const;

  FilteredSimplex decompose(const Simplex& s) const;
  bool regular(const Simplex& s) const;
  std::vector<Simplex> regular_simplices(int dim) const;
  std::vector<Simplex> maximal_regular_simplices() const;

  const std::vector<Stratum>& strata() const;
  const Stratum& stratum_of(const Simplex& s) const;
  bool meets(const Simplex& s, const Stratum& st) const;

  std::uint64_t fingerprint() const;
  std::string simplex_name(const Simplex& s) const;

  // weights and n padded by m
  WeightedComplex shifted(int m) const;
  // weights replaced by phi(weight), formal dimension n_new
  WeightedComplex recoded(const std::vector<int>& phi, int n_new) const;
  // subcomplex generated by the given faces, weights and n kept
  WeightedComplex subcomplex(const std::vector<Simplex>& generators) const;
  // closed star of a vertex
  std::vector<Simplex> star_facets(Vertex v) const;

  std::string to_text() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct SpaceDocument {
  WeightedComplex complex;
  std::optional<std::string> perversity;
};

SpaceDocument load_space(std::string_view text);
SpaceDocument load_space_file(const std::string& path);

SimplexChain boundary(const Simplex& s);
SimplexChain boundary(const SimplexChain& c);

// Sign of the permutation sorting `list`; 0 on a repeated entry. Sorts in place.
int normalize(std::vector<Vertex>& list);

}  // namespace ihc
