#pragma once

#include <vector>

#include "surfalg/laurent_matrix.hpp"

namespace surfalg::grassmann {

// Columns form an F-basis whose R-span is the lattice, R = power series.
// Construction insists on a determinate determinant order.
class LatticeBasis {
 public:
  explicit LatticeBasis(laurent::LaurentMatrix m);

  const laurent::LaurentMatrix& matrix() const { return matrix_; }
  long det_ord() const { return det_ord_; }
  int n() const { return matrix_.rows(); }

 private:
  laurent::LaurentMatrix matrix_;
  long det_ord_;
};

// Shift-matrix power n*i + j - 1: the lattice spanned by the shifted basis
// starting at e_j, twisted i times.
LatticeBasis standard_lattice(int n, long i, int j,
                              long precision = laurent::kDefaultPrecision);

// Equality and containment decide GL_n(R)-membership of the transition
// matrix; they throw PrecisionError only when an entry sign is undecidable.
bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);
bool contains(const LatticeBasis& outer, const LatticeBasis& inner);

long component_index(const LatticeBasis& l);

struct FlagReport {
  bool chain_contained = false;  // each member inside the next
  bool x_twist = false;          // x times the last member inside the first
  bool unit_steps = false;       // component index drops by one along the chain
  bool ok() const { return chain_contained && x_twist && unit_steps; }
};

FlagReport validate_flag(const std::vector<LatticeBasis>& chain);

// The chain diag(1,..,1,x,..,x) with k leading ones at position k.
std::vector<LatticeBasis> standard_flag(int n, long precision = laurent::kDefaultPrecision);

}  // namespace surfalg::grassmann
