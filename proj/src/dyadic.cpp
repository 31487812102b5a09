#include "morrey/dyadic.hpp"

#include <stdexcept>

namespace morrey {

namespace {

void check_scale(int level, int d) {
  const long long bits = static_cast<long long>(level) * d;
  if (bits > 60 || bits < -60) {
    throw std::domain_error("dyadic: |level*d| must be <= 60");
  }
}

}  // namespace

ExtScalar DyadicCube::volume() const {
  check_scale(level, dim());
  const long long bits = static_cast<long long>(level) * dim();
  if (bits >= 0) return ExtScalar(1, 1LL << bits);
  return ExtScalar(1LL << (-bits));
}

bool contains(const DyadicCube& parent, const DyadicCube& child) {
  if (parent.dim() != child.dim()) {
    throw std::invalid_argument("dyadic: dimension mismatch in containment test");
  }
  if (parent.level > child.level) return false;
  const int shift = child.level - parent.level;
  check_scale(shift, 1);
  for (int i = 0; i < parent.dim(); ++i) {
    // floor division: child offsets may be negative
    long long q = child.offset[i] >> shift;
    if (q != parent.offset[i]) return false;
  }
  return true;
}

std::vector<DyadicCube> subcubes(const DyadicCube& parent, int level) {
  if (level < parent.level) {
    throw std::invalid_argument("dyadic: subcube level must be >= parent level");
  }
  const int d = parent.dim();
  const int shift = level - parent.level;
  check_scale(shift, d);
  const long long per_axis = 1LL << shift;
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= per_axis;

  std::vector<DyadicCube> cubes;
  cubes.reserve(static_cast<size_t>(total));
  std::vector<long long> rel(d, 0);
  for (long long n = 0; n < total; ++n) {
    DyadicCube c;
    c.level = level;
    c.offset.resize(d);
    for (int i = 0; i < d; ++i) c.offset[i] = (parent.offset[i] << shift) + rel[i];
    cubes.push_back(std::move(c));
    for (int i = d - 1; i >= 0; --i) {  // lexicographic increment
      if (++rel[i] < per_axis) break;
      rel[i] = 0;
    }
  }
  return cubes;
}

CubeIndexSet::CubeIndexSet(int j, int d) : j_(j), d_(d) {
  if (j < 0 || d < 1) throw std::invalid_argument("CubeIndexSet: need j >= 0, d >= 1");
  check_scale(j, d);
  size_ = 1LL << (static_cast<long long>(j) * d);
}

std::vector<long long> CubeIndexSet::member(long long rank) const {
  if (rank < 0 || rank >= size_) throw std::out_of_range("CubeIndexSet: rank out of range");
  const long long per_axis = 1LL << j_;
  std::vector<long long> offset(d_);
  for (int i = d_ - 1; i >= 0; --i) {
    offset[i] = rank % per_axis;
    rank /= per_axis;
  }
  return offset;
}

long long CubeIndexSet::rank(const std::vector<long long>& offset) const {
  if (static_cast<int>(offset.size()) != d_) {
    throw std::invalid_argument("CubeIndexSet: offset dimension mismatch");
  }
  const long long per_axis = 1LL << j_;
  long long r = 0;
  for (int i = 0; i < d_; ++i) {
    if (offset[i] < 0 || offset[i] >= per_axis) {
      throw std::out_of_range("CubeIndexSet: offset outside Q_{-j,0}");
    }
    r = r * per_axis + offset[i];
  }
  return r;
}

DyadicLayout::DyadicLayout(int j, int d) : j_(j), d_(d) {
  if (j < 0 || d < 1) throw std::invalid_argument("DyadicLayout: need j >= 0, d >= 1");
  check_scale(j, d);
  size_ = 1LL << (static_cast<long long>(j) * d);
  if (d == 1 || j == 0) return;  // identity layout

  perm_.resize(static_cast<size_t>(size_));
  inv_perm_.resize(static_cast<size_t>(size_));
  CubeIndexSet idx(j, d);
  for (long long lex = 0; lex < size_; ++lex) {
    const auto offset = idx.member(lex);
    // Interleave bits, most significant first: bit t of axis i lands at
    // position (j-1-t)*d + i from the top, so the leading (j-nu)*d bits
    // identify the level-nu block.
    long long code = 0;
    for (int t = j - 1; t >= 0; --t) {
      for (int i = 0; i < d; ++i) {
        code = (code << 1) | ((offset[i] >> t) & 1LL);
      }
    }
    perm_[static_cast<size_t>(lex)] = static_cast<int32_t>(code);
    inv_perm_[static_cast<size_t>(code)] = static_cast<int32_t>(lex);
  }
}

void DyadicLayout::to_morton(const double* lex, double* morton) const {
  if (perm_.empty()) {
    for (long long i = 0; i < size_; ++i) morton[i] = lex[i];
    return;
  }
  for (long long i = 0; i < size_; ++i) morton[perm_[static_cast<size_t>(i)]] = lex[i];
}

long long DyadicLayout::block_count(int nu) const {
  if (nu < 0 || nu > j_) throw std::out_of_range("DyadicLayout: spread level out of range");
  return 1LL << (static_cast<long long>(j_ - nu) * d_);
}

long long DyadicLayout::block_size(int nu) const {
  if (nu < 0 || nu > j_) throw std::out_of_range("DyadicLayout: spread level out of range");
  return 1LL << (static_cast<long long>(nu) * d_);
}

long long DyadicLayout::morton_of_lex(long long lex_rank) const {
  if (perm_.empty()) return lex_rank;
  return perm_[static_cast<size_t>(lex_rank)];
}

long long DyadicLayout::lex_of_morton(long long morton_rank) const {
  if (inv_perm_.empty()) return morton_rank;
  return inv_perm_[static_cast<size_t>(morton_rank)];
}

}  // namespace morrey
