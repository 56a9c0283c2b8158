#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "framespace/equivalence.hpp"

namespace framespace {

// Square rational matrix acting on columns: column j is the image of basis
// vector j.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::vector<std::string> basis);

  size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const mpq_class& at(size_t row, size_t col) const { return entries_.at(row * dim() + col); }
  mpq_class& at(size_t row, size_t col) { return entries_.at(row * dim() + col); }

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

 private:
  std::vector<std::string> basis_;
  std::vector<mpq_class> entries_;
};

// (U, T) pairs: U is an immediate substructure of T. Indices into the
// system's tunnels.
struct SubstructureRelation {
  std::vector<std::pair<size_t, size_t>> pairs;
};

// Basis in tunnel order; entry (U, T) = Λ(T) − Λ(U) for each pair.
OperatorMatrix tunnelLaplacian(const TunnelSystem& system, const SubstructureRelation& sub);

// Basis sorted by (cost, id); entry (e, d) = C(d) − C(e) for each e ≺ d.
OperatorMatrix prolifLaplacian(const ProliferativeBase& base);

SubstructureRelation deriveSubstructureFromBase(const ProliferativeBase& base,
                                                const Correspondence& corr);

// Basis permutation: image[i] is the target-basis index of source basis i.
struct PermutationUnitary {
  std::vector<size_t> image;
};

PermutationUnitary unitaryFromCorrespondence(const OperatorMatrix& tunnelSide,
                                             const OperatorMatrix& prolifSide,
                                             const Carrier& tunnels, const Carrier& distinctions,
                                             const Correspondence& corr);

struct ConjugationResult {
  bool ok = true;
  mpq_class maxDiscrepancy;
  std::string report;  // first unequal entry
};

// Exact test of U · dT · Uᵀ = dP.
ConjugationResult conjugationCheck(const PermutationUnitary& u, const OperatorMatrix& dT,
                                   const OperatorMatrix& dP);

// True iff m^dim is the zero matrix, in exact arithmetic.
bool nilpotencyCheck(const OperatorMatrix& m);

constexpr size_t kDefaultSpectralDim = 128;

// Reads FRAMESPACE_MAX_DIM, falling back to kDefaultSpectralDim.
size_t spectralDimBound();

using Spectrum = std::vector<std::complex<double>>;

// Eigenvalues with algebraic multiplicity, sorted by real then imaginary
// part. Throws NumericalFailure (with the converged part) when the QR
// iteration cap of 100·dim is exhausted.
Spectrum spectrum(const OperatorMatrix& m, size_t maxDim = spectralDimBound());

// Dense real eigenvalue kernel behind spectrum(): permutation isolation,
// diagonal balancing, Householder reduction to Hessenberg form and
// Francis double-shift QR. `a` is row-major n×n.
Spectrum realEigenvalues(std::vector<double> a, size_t n);

// Largest distance between matched eigenvalues (greedy nearest matching);
// infinity when the multisets differ in size.
double spectrumDeviation(const Spectrum& a, const Spectrum& b);

}  // namespace framespace
