#pragma once

#include "kfuzzy/numerics/matrix.hpp"

namespace kfuzzy::representation {

using numerics::CMatrix;
using numerics::Complex;

// Harmonic-oscillator basis |0⟩ … |N−1⟩ cut off at dimension N.
// a|n⟩ = √n |n−1⟩, Q = (a + a†)/√2, P = −i(a − a†)/√2.
class OscillatorTruncation {
 public:
  explicit OscillatorTruncation(std::size_t n);

  std::size_t n() const { return n_; }
  const CMatrix& a() const { return a_; }
  const CMatrix& adag() const { return adag_; }
  const CMatrix& q() const { return q_; }
  const CMatrix& p() const { return p_; }

  // Frobenius norm of [Q, P] − i·I on the first N−1 basis states (the last one feels the cutoff).
  double ccr_deviation() const;

 private:
  std::size_t n_;
  CMatrix a_, adag_, q_, p_;
};

// Leading N×N block of the untruncated operator e^Q, from
//   ⟨m|e^Q|n⟩ = e^{1/4} Σ_k α^{m+n−2k} √(m! n!) / ((m−k)! (n−k)! k!),  α = 1/√2.
CMatrix exact_exp_q_block(std::size_t n);

}  // namespace kfuzzy::representation
