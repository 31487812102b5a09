#pragma once

#include <cstdint>
#include <vector>

#include "morrey/ext_scalar.hpp"

namespace morrey {

/// Dyadic cube Q_{level,offset} = prod_i [offset_i / 2^level, (offset_i+1) / 2^level).
///
/// The side length is 2^{-level}; negative levels are the big reference cubes
/// (Q_{-j,0} has side 2^j). Levels are bounded so that 2^{level*d} fits a
/// 64-bit integer: |level * d| <= 60 (desk scale).
struct DyadicCube {
  int level = 0;
  std::vector<long long> offset;  // length = dimension

  int dim() const { return static_cast<int>(offset.size()); }

  /// Exact volume 2^{-level*d} as a rational.
  ExtScalar volume() const;
};

/// Exact integer containment test: Q_child subset of Q_parent.
/// Requires matching dimensions; decidable from integers alone.
bool contains(const DyadicCube& parent, const DyadicCube& child);

/// All subcubes of `parent` at the given finer (or equal) level, in
/// lexicographic offset order. Exactly 2^{(level - parent.level)*d} cubes.
std::vector<DyadicCube> subcubes(const DyadicCube& parent, int level);

/// K_j = {k : Q_{0,k} subset of Q_{-j,0}} = {0,...,2^j-1}^d with the canonical
/// lexicographic enumeration (first coordinate most significant).
class CubeIndexSet {
 public:
  CubeIndexSet(int j, int d);

  int j() const { return j_; }
  int d() const { return d_; }
  long long size() const { return size_; }

  /// Lexicographic rank -> offset vector.
  std::vector<long long> member(long long rank) const;

  /// Offset vector -> lexicographic rank.
  long long rank(const std::vector<long long>& offset) const;

 private:
  int j_;
  int d_;
  long long size_;
};

/// Index layout for the coefficients of a Morrey vector.
///
/// Coefficients are stored publicly in lexicographic K_j order. Internally the
/// norm evaluation walks dyadic blocks; in the bit-interleaved (Morton) order
/// every dyadic block is a contiguous range, which lets the reductions run on
/// flat spans. For d = 1 the two orders coincide and no permutation is done.
class DyadicLayout {
 public:
  DyadicLayout(int j, int d);

  long long size() const { return size_; }
  bool is_identity() const { return perm_.empty(); }

  /// Permutes lexicographically ordered values into Morton order.
  void to_morton(const double* lex, double* morton) const;

  /// Number of blocks at spread level nu in [0, j]: 2^{(j-nu)*d}.
  long long block_count(int nu) const;
  /// Length of each block at spread level nu: 2^{nu*d}.
  long long block_size(int nu) const;

  /// Morton index of the lexicographic rank (identity when d == 1).
  long long morton_of_lex(long long lex_rank) const;

  /// Lexicographic rank of a Morton index.
  long long lex_of_morton(long long morton_rank) const;

 private:
  int j_;
  int d_;
  long long size_;
  std::vector<int32_t> perm_;      // empty when identity (d == 1 or j == 0)
  std::vector<int32_t> inv_perm_;  // inverse of perm_
};

}  // namespace morrey
