#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihc/matrix.hpp"

namespace ihc {

enum class Direction { Cochain, Chain };

// Graded free module with differential. d[k] maps degree k to k+1 (cochain) or k-1 (chain) and
// has shape dim(target) x dim(k). A subcomplex also carries its inclusion into an ambient basis
// and a retraction with retraction * inclusion = I.
struct Presentation {
  Ring ring = Ring::integers();
  Direction direction = Direction::Cochain;
  std::vector<std::vector<std::string>> labels;
  std::vector<Matrix> d;
  std::vector<Matrix> inclusion;
  std::vector<Matrix> retraction;

  int top() const { return static_cast<int>(labels.size()) - 1; }
  std::size_t dim(int k) const;
  int next(int k) const { return direction == Direction::Cochain ? k + 1 : k - 1; }
  int prev(int k) const { return direction == Direction::Cochain ? k - 1 : k + 1; }
  Matrix outgoing(int k) const;
  Matrix incoming(int k) const;
  bool is_subcomplex() const { return !inclusion.empty(); }

  // Throws PropertyError if some d o d is nonzero.
  void validate() const;
  // Transpose with the sign (df)(v) = -(-1)^{|f|} f(dv).
  Presentation dual() const;
};

struct HomologyGroup {
  int degree = 0;
  Ring ring = Ring::integers();
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  // Torsion generators first (in the order of `torsion`), then free generators.
  std::vector<Vector> generators;

  std::size_t coordinate_count() const { return torsion.size() + free_rank; }
  // Coordinates of the class of a cycle in the generator basis; torsion entries reduced.
  Vector classify(const Vector& cycle) const;
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }

  // classifier data
  Matrix kernel_left_inverse;
  Matrix u;
  std::vector<std::size_t> torsion_rows;
  std::vector<std::size_t> free_rows;
};

HomologyGroup homology(const Presentation& p, int k);
std::vector<HomologyGroup> homology_all(const Presentation& p);

// {x in A_k : d x in A_next}; selectors index the ambient basis per degree.
Presentation preimage_subcomplex(const Presentation& ambient, const std::vector<std::vector<bool>>& selectors);

// Degree-k component of an ambient map between two subcomplexes, in subcomplex coordinates.
// Throws PropertyError when the image leaves the target subcomplex.
Matrix restrict_map(const Presentation& src, const Presentation& dst, const Matrix& ambient, int k);

// Throws PropertyError unless f[next(k)] d_src = d_dst f[k] for all k.
void check_chain_map(const Presentation& src, const Presentation& dst, const std::vector<Matrix>& f);

struct InducedMap {
  int degree = 0;
  Matrix matrix;  // rows: target classes, cols: source generators
  std::size_t rank = 0;  // over a field, or of the free part over Z
  bool iso = false;
};

InducedMap induced_map(const Presentation& src, const Presentation& dst, const Matrix& f_k, int k,
                       const HomologyGroup& hs, const HomologyGroup& hd);
InducedMap induced_map(const Presentation& src, const Presentation& dst, const Matrix& f_k, int k);

// x with d x = scale * v in degree k (scale = 1 except over Q).
struct Witness {
  Vector x;
  Integer scale;
};
std::optional<Witness> coboundary_witness(const Presentation& p, int k, const Vector& v);

}  // namespace ihc
