// Copyright 2026 The chronoflip developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "chronoflip/linalg.hpp"

namespace chronoflip {

/// The referee's promise on a gate pair (U, V):
///   Plus:  UVᵀ = UᵀV,   Minus: UVᵀ = −UᵀV.
enum class PromiseClass { Plus, Minus, None };

struct GamePair {
  ComplexMatrix u;
  ComplexMatrix v;
  PromiseClass declared_class = PromiseClass::None;
};

/// Classify by Frobenius residual of the two promise conditions; None when
/// neither holds within tol.
PromiseClass classify_pair(const ComplexMatrix& u, const ComplexMatrix& v,
                           double tol = kDefaultTol);

/// S_U·S_V·(|ψ⟩⊗|+⟩) with S_U = U⊗|0⟩⟨0| + Uᵀ⊗|1⟩⟨1| and
/// S_V = Vᵀ⊗|0⟩⟨0| + V⊗|1⟩⟨1|, on target ⊗ control. The |−⟩ control
/// component vanishes on Plus pairs, the |+⟩ component on Minus pairs.
ComplexVector strategy_output(const ComplexMatrix& u, const ComplexMatrix& v,
                              const ComplexVector& psi, double tol = kDefaultTol);

/// Probabilities of the {|+⟩, |−⟩} control measurement after the strategy.
struct GameOutcome {
  double p_plus = 0.0;
  double p_minus = 0.0;
};
GameOutcome strategy_probabilities(const ComplexMatrix& u, const ComplexMatrix& v,
                                   const ComplexVector& psi, double tol = kDefaultTol);

/// Play the game on a promised pair; returns the certain outcome.
/// Throws std::invalid_argument when the promise is violated.
PromiseClass play_game(const ComplexMatrix& u, const ComplexMatrix& v,
                       double tol = kDefaultTol);

/// The two fixed qubit gate sets used by the error-bound program:
/// 13 Plus pairs and 8 Minus pairs, stored as exact constants.
struct BuiltinSets {
  std::vector<GamePair> plus_set;   // 13 pairs, declared Plus
  std::vector<GamePair> minus_set;  // 8 pairs, declared Minus
};
BuiltinSets builtin_sets();

}  // namespace chronoflip
