#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "surfalg/grassmann.hpp"
#include "surfalg/order.hpp"
#include "surfalg/ratmat.hpp"

namespace surfalg::lusztig {

laurent::LaurentMatrix to_laurent(const RationalMatrix& m,
                                  long precision = laurent::kDefaultPrecision);

// Square with N^n = 0.
bool is_nilpotent_matrix(const RationalMatrix& n);

// Column j spans sum_{k=1..n} x^{n-k} N^{k-1} e_j; the folded form of the
// block column (N^{n-1}; ...; N; I; 0; ...).
grassmann::LatticeBasis phi_nilpotent(const RationalMatrix& n,
                                      long precision = laurent::kDefaultPrecision);

// Decides lattice equality of the embedding of gNg^-1 against g times the
// embedding of N.
bool check_equivariance(const RationalMatrix& g, const RationalMatrix& n,
                        long precision = laurent::kDefaultPrecision);

// Representation of the cyclic quiver on n vertices: maps[i-1] is A_i of
// shape d_{i-1} x d_i (indices mod n), a map from vertex i to vertex i-1.
class CyclicQuiverRep {
 public:
  CyclicQuiverRep(std::vector<int> dims, std::vector<RationalMatrix> maps);
  static CyclicQuiverRep zero(std::vector<int> dims);

  int vertices() const { return static_cast<int>(dims_.size()); }
  int total_dim() const;
  const std::vector<int>& dims() const { return dims_; }
  int dim(int i) const;                 // 1-based, wraps mod n
  const RationalMatrix& map(int i) const;  // 1-based, wraps mod n

 private:
  std::vector<int> dims_;
  std::vector<RationalMatrix> maps_;
};

// The composite A_{j-k+1} ... A_{j-1} A_j of k maps ending at vertex j;
// k = 0 gives the identity on vertex j.
RationalMatrix chain_product(const CyclicQuiverRep& rep, int j, int k);

enum class NilpotencyMode { AllRotations, SingleRotation };

// True when the full-rotation composites are nilpotent square matrices —
// equivalently, when big_matrix is nilpotent.
bool is_nilpotent_rep(const CyclicQuiverRep& rep,
                      NilpotencyMode mode = NilpotencyMode::AllRotations);

// Block matrix with A_i in block (i-1, i) (block row n for i = 1) and the
// x^-1 twist riding on A_n.
laurent::LaurentMatrix big_matrix(const CyclicQuiverRep& rep,
                                  long precision = laurent::kDefaultPrecision);

// For each vertex j: the lattice spanned by the folded block column
// stacking the chain products over I_j, plus identity blocks elsewhere.
std::vector<grassmann::LatticeBasis> lambda_lattices(
    const CyclicQuiverRep& rep, long precision = laurent::kDefaultPrecision);

// Block-Iwahori pattern of the composition: 1 strictly above the block
// diagonal, 0 on and below it.
order::ValuationPattern partial_flag_type(int n, const std::vector<int>& composition);

// Conjugates the rep by one invertible matrix per vertex.
CyclicQuiverRep base_change(const CyclicQuiverRep& rep, const std::vector<RationalMatrix>& g);

void to_json(nlohmann::json& j, const CyclicQuiverRep& rep);
CyclicQuiverRep rep_from_json(const nlohmann::json& j);

}  // namespace surfalg::lusztig
