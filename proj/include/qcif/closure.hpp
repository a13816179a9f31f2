#pragma once

#include <vector>

#include "qcif/subspace.hpp"
#include "qcif/types.hpp"

namespace qcif {

struct ClosureReport {
  OperatorSubspace result;
  int generations = 0;  // sweep rounds until fixpoint
  bool saturated = false;
};

// Smallest real span containing the (traceless Hermitian) generators and
// closed under (X,Y) -> i[X,Y]. Sweeps FIFO over newly accepted elements;
// early exit at dim^2-1 (full special-unitary algebra).
ClosureReport lie_closure(const std::vector<Matrix>& generators, const RunConfig& cfg = {});

// Hermitian part of the unital complex *-algebra generated: the real span of
// {1} ∪ generators closed under the Jordan product (XY+YX)/2 and i[X,Y].
ClosureReport star_closure_report(const std::vector<Matrix>& generators,
                                  const RunConfig& cfg = {});
OperatorSubspace star_closure(const std::vector<Matrix>& generators, const RunConfig& cfg = {});

// Real span of { i[X,Y] : X in a, Y in b }.
OperatorSubspace commutator_span(const OperatorSubspace& a, const OperatorSubspace& b,
                                 const RunConfig& cfg = {});

// Membership verdict of x in span(space) at cfg.member_tol.
OperatorSubspace::Membership member(const Matrix& x, const OperatorSubspace& space,
                                    const RunConfig& cfg = {});

}  // namespace qcif
