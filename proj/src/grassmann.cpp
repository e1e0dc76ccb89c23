#include "surfalg/grassmann.hpp"

#include "surfalg/common.hpp"
#include "surfalg/order.hpp"

namespace surfalg::grassmann {

using laurent::LaurentMatrix;
using laurent::TruncatedLaurent;

LatticeBasis::LatticeBasis(LaurentMatrix m) : matrix_(std::move(m)), det_ord_(0) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw DomainError("lattice basis must be square and nonempty");
  auto d = matrix_.det_ord();
  if (!d) throw PrecisionError("basis determinant vanishes to working precision");
  det_ord_ = *d;
}

LatticeBasis standard_lattice(int n, long i, int j, long precision) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (j < 1 || j > n) throw DomainError("basis start out of range");
  return LatticeBasis(order::shift_matrix(n, precision).pow(n * i + j - 1));
}

namespace {

// A truncated series lies in R when its order is visibly >= 0, or when it
// vanishes to a precision already inside R.
bool entry_in_R(const TruncatedLaurent& f) {
  if (auto o = f.ord()) return *o >= 0;
  if (f.precision() >= 0) return true;
  throw PrecisionError("entry order undecidable at this precision");
}

bool transition_in_R(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.n() != b.n()) throw DomainError("lattices of different dimension");
  LaurentMatrix t = a.matrix().inverse() * b.matrix();
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.cols(); ++c)
      if (!entry_in_R(t.at(r, c))) return false;
  return true;
}

}  // namespace

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
  return a.det_ord() == b.det_ord() && transition_in_R(a, b);
}

bool contains(const LatticeBasis& outer, const LatticeBasis& inner) {
  return transition_in_R(outer, inner);
}

long component_index(const LatticeBasis& l) { return l.det_ord(); }

FlagReport validate_flag(const std::vector<LatticeBasis>& chain) {
  if (chain.empty()) throw DomainError("empty flag");
  int n = chain.front().n();
  if (static_cast<int>(chain.size()) != n) throw DomainError("flag must have n members");
  for (const auto& l : chain)
    if (l.n() != n) throw DomainError("flag members of different dimension");

  FlagReport r;
  r.chain_contained = true;
  r.unit_steps = true;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!contains(chain[i + 1], chain[i])) r.chain_contained = false;
    if (component_index(chain[i]) - component_index(chain[i + 1]) != 1) r.unit_steps = false;
  }
  LatticeBasis twisted(chain.back().matrix().shifted(1));
  r.x_twist = contains(chain.front(), twisted);
  if (n == 1) r.unit_steps = true;  // nothing to step over
  return r;
}

std::vector<LatticeBasis> standard_flag(int n, long precision) {
  if (n < 1) throw DomainError("dimension must be positive");
  std::vector<LatticeBasis> chain;
  for (int k = 1; k <= n; ++k) {
    LaurentMatrix m(n, n, precision);
    for (int i = 0; i < n; ++i)
      m.set(i, i,
            i < k ? TruncatedLaurent::constant(1, precision)
                  : TruncatedLaurent::monomial(1, 1, precision));
    chain.emplace_back(std::move(m));
  }
  return chain;
}

}  // namespace surfalg::grassmann
