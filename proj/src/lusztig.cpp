#include "surfalg/lusztig.hpp"

#include <algorithm>
#include <numeric>

#include "surfalg/common.hpp"

namespace surfalg::lusztig {

using grassmann::LatticeBasis;
using laurent::LaurentMatrix;
using laurent::TruncatedLaurent;

LaurentMatrix to_laurent(const RationalMatrix& m, long precision) {
  LaurentMatrix out(m.rows(), m.cols(), precision);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) out.set(r, c, TruncatedLaurent::constant(m.at(r, c), precision));
  return out;
}

bool is_nilpotent_matrix(const RationalMatrix& n) {
  if (n.rows() != n.cols()) return false;
  return n.pow(n.rows()).is_zero();
}

LatticeBasis phi_nilpotent(const RationalMatrix& n, long precision) {
  if (!is_nilpotent_matrix(n)) throw DomainError("matrix is not nilpotent");
  int size = n.rows();
  LaurentMatrix sum(size, size, precision);
  RationalMatrix power = RationalMatrix::identity(size);
  for (int k = 1; k <= size; ++k) {
    sum = sum + to_laurent(power, precision).shifted(size - k);
    power = n * power;
  }
  return LatticeBasis(std::move(sum));
}

bool check_equivariance(const RationalMatrix& g, const RationalMatrix& n, long precision) {
  RationalMatrix conjugated = g * n * g.inverse();
  // Both sides are polynomial matrices, so a window just past the worst
  // pivot decay of the equality test decides it outright; `precision` only
  // ever widens that window.
  const long size = g.rows();
  const long working = std::max(precision, 4 * size * size + 8);
  LatticeBasis lhs = phi_nilpotent(conjugated, working);
  LatticeBasis rhs(to_laurent(g, working) * phi_nilpotent(n, working).matrix());
  return grassmann::lattice_equal(lhs, rhs);
}

CyclicQuiverRep::CyclicQuiverRep(std::vector<int> dims, std::vector<RationalMatrix> maps)
    : dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.empty()) throw DomainError("dimension vector is empty");
  bool positive = false;
  for (int d : dims_) {
    if (d < 0) throw DomainError("negative dimension");
    if (d > 0) positive = true;
  }
  if (!positive) throw DomainError("dimension vector is zero");
  if (maps_.size() != dims_.size()) throw DomainError("need one map per vertex");
  for (int i = 1; i <= vertices(); ++i)
    if (map(i).rows() != dim(i - 1) || map(i).cols() != dim(i))
      throw DomainError("map shape does not chain");
}

CyclicQuiverRep CyclicQuiverRep::zero(std::vector<int> dims) {
  int n = static_cast<int>(dims.size());
  std::vector<RationalMatrix> maps;
  for (int i = 1; i <= n; ++i)
    maps.emplace_back(dims[static_cast<size_t>(floor_mod(i - 2, n))],
                      dims[static_cast<size_t>(i - 1)]);
  return CyclicQuiverRep(std::move(dims), std::move(maps));
}

int CyclicQuiverRep::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), 0);
}

int CyclicQuiverRep::dim(int i) const {
  return dims_[static_cast<size_t>(floor_mod(i - 1, vertices()))];
}

const RationalMatrix& CyclicQuiverRep::map(int i) const {
  return maps_[static_cast<size_t>(floor_mod(i - 1, vertices()))];
}

RationalMatrix chain_product(const CyclicQuiverRep& rep, int j, int k) {
  if (k < 0) throw DomainError("negative chain length");
  RationalMatrix out = RationalMatrix::identity(rep.dim(j));
  for (int s = 0; s < k; ++s) out = rep.map(j - s) * out;
  return out;
}

bool is_nilpotent_rep(const CyclicQuiverRep& rep, NilpotencyMode mode) {
  int n = rep.vertices();
  for (int j = 1; j <= n; ++j) {
    if (mode == NilpotencyMode::SingleRotation && j != n) continue;
    if (!is_nilpotent_matrix(chain_product(rep, j, n))) return false;
  }
  return true;
}

namespace {

std::vector<int> block_offsets(const CyclicQuiverRep& rep) {
  std::vector<int> off(static_cast<size_t>(rep.vertices()) + 1, 0);
  for (int i = 1; i <= rep.vertices(); ++i)
    off[static_cast<size_t>(i)] = off[static_cast<size_t>(i - 1)] + rep.dim(i);
  return off;
}

void put_block(LaurentMatrix& m, int row0, int col0, const RationalMatrix& block, long shift,
               long precision) {
  for (int r = 0; r < block.rows(); ++r)
    for (int c = 0; c < block.cols(); ++c)
      if (block.at(r, c) != 0)
        m.set(row0 + r, col0 + c,
              m.at(row0 + r, col0 + c) +
                  TruncatedLaurent::monomial(shift, block.at(r, c), precision));
}

}  // namespace

LaurentMatrix big_matrix(const CyclicQuiverRep& rep, long precision) {
  int n = rep.vertices();
  auto off = block_offsets(rep);
  LaurentMatrix m(rep.total_dim(), rep.total_dim(), precision);
  for (int i = 1; i <= n; ++i) {
    int block_row = floor_mod(i - 2, n) + 1;  // vertex i - 1
    put_block(m, off[static_cast<size_t>(block_row - 1)], off[static_cast<size_t>(i - 1)],
              rep.map(i), i == n ? -1 : 0, precision);
  }
  return m;
}

std::vector<LatticeBasis> lambda_lattices(const CyclicQuiverRep& rep, long precision) {
  if (!is_nilpotent_rep(rep)) throw DomainError("representation is not nilpotent");
  int n = rep.vertices();
  auto off = block_offsets(rep);
  int total = rep.total_dim();
  long bound = static_cast<long>(n) * total + n;

  std::vector<LatticeBasis> out;
  for (int j = 1; j <= n; ++j) {
    LaurentMatrix m = LaurentMatrix::identity(total, precision);
    if (rep.dim(j) > 0) {
      for (int c = 0; c < rep.dim(j); ++c) m.set(off[static_cast<size_t>(j - 1)] + c,
                                                 off[static_cast<size_t>(j - 1)] + c,
                                                 TruncatedLaurent::zero(precision));
      for (long k = 0;; ++k) {
        if (k > bound) throw DomainError("chain products fail to terminate");
        RationalMatrix block = chain_product(rep, j, static_cast<int>(k));
        if (k > 0 && block.is_zero()) break;
        int vertex = floor_mod(j - k - 1, n) + 1;  // block position j - k folds here
        long shift = floor_div(j - k - 1, n);
        put_block(m, off[static_cast<size_t>(vertex - 1)], off[static_cast<size_t>(j - 1)],
                  block, shift, precision);
      }
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

order::ValuationPattern partial_flag_type(int n, const std::vector<int>& composition) {
  if (n < 1) throw DomainError("size must be positive");
  int sum = 0;
  for (int part : composition) {
    if (part < 1) throw DomainError("composition parts must be positive");
    sum += part;
  }
  if (sum != n) throw DomainError("composition must sum to the size");

  std::vector<int> block_of(static_cast<size_t>(n), 0);
  int row = 0, block = 0;
  for (int part : composition) {
    for (int s = 0; s < part; ++s) block_of[static_cast<size_t>(row++)] = block;
    ++block;
  }
  order::ValuationPattern v{n, n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (block_of[static_cast<size_t>(p)] < block_of[static_cast<size_t>(q)])
        v.min_val[static_cast<size_t>(p) * n + q] = 1;
  return v;
}

CyclicQuiverRep base_change(const CyclicQuiverRep& rep, const std::vector<RationalMatrix>& g) {
  if (static_cast<int>(g.size()) != rep.vertices())
    throw DomainError("need one change of basis per vertex");
  int n = rep.vertices();
  auto g_at = [&](int i) -> const RationalMatrix& {
    return g[static_cast<size_t>(floor_mod(i - 1, n))];
  };
  for (int i = 1; i <= n; ++i)
    if (g_at(i).rows() != rep.dim(i) || g_at(i).cols() != rep.dim(i))
      throw DomainError("change of basis has wrong shape");
  std::vector<RationalMatrix> maps;
  for (int i = 1; i <= n; ++i) maps.push_back(g_at(i - 1) * rep.map(i) * g_at(i).inverse());
  return CyclicQuiverRep(rep.dims(), std::move(maps));
}

void to_json(nlohmann::json& j, const CyclicQuiverRep& rep) {
  nlohmann::json maps = nlohmann::json::array();
  for (int i = 1; i <= rep.vertices(); ++i) {
    nlohmann::json m;
    to_json(m, rep.map(i));
    maps.push_back(std::move(m));
  }
  j = nlohmann::json{{"dims", rep.dims()}, {"maps", maps}};
}

CyclicQuiverRep rep_from_json(const nlohmann::json& j) {
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  int n = static_cast<int>(dims.size());
  if (n == 0) throw DomainError("dimension vector is empty");
  const auto& maps_json = j.at("maps");
  if (static_cast<int>(maps_json.size()) != n) throw DomainError("need one map per vertex");
  std::vector<RationalMatrix> maps;
  for (int i = 1; i <= n; ++i) {
    int rows = dims[static_cast<size_t>(floor_mod(i - 2, n))];
    int cols = dims[static_cast<size_t>(i - 1)];
    const auto& entry = maps_json.at(static_cast<size_t>(i - 1));
    if (entry.empty() && rows == 0) {
      maps.emplace_back(rows, cols);
    } else {
      RationalMatrix m(0, 0);
      from_json(entry, m);
      maps.push_back(std::move(m));
    }
  }
  return CyclicQuiverRep(std::move(dims), std::move(maps));
}

}  // namespace surfalg::lusztig
