#pragma once

#include <cstddef>
#include <vector>

#include "bidio/exactmath.hpp"

// Generalized Pell equation x^2 - d*y^2 = n for the handful of (d, n) pairs
// the family enumeration needs, plus the Brahmagupta composition identity.
// Deliberately not a general continued-fraction engine: only parameter pairs
// that are anchored by brute-force tests are accepted.

namespace bidio::pell {

class PellSolution {
 public:
    // Validates x^2 - d*y^2 == n exactly at construction; d must be a
    // nonsquare >= 2, n nonzero, x and y nonnegative. The streams only ever
    // emit positive components, but difference-composition can legitimately
    // produce the trivial (1, 0) solution of n = 1, so zero is allowed here.
    PellSolution(Int x, Int y, Int d, Int n);

    const Int& x() const { return x_; }
    const Int& y() const { return y_; }
    const Int& d() const { return d_; }
    const Int& n() const { return n_; }

    friend bool operator==(const PellSolution& a, const PellSolution& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.d_ == b.d_ && a.n_ == b.n_;
    }

 private:
    Int x_, y_, d_, n_;
};

enum class Compose { sum, difference };

// (xs*xu + d*ys*yu, xs*yu + ys*xu) for the sum form, absolute differences for
// the other; the result satisfies x^2 - d*y^2 = ns * nu. Mismatched d throws
// std::invalid_argument.
PellSolution compose(const PellSolution& s, const PellSolution& u,
                     Compose how = Compose::sum);

// Least-positive-x solution for the supported pairs
// (2,-1) -> (1,1), (2,+1) -> (3,2), (3,+1) -> (2,1), (3,-3) -> (3,2).
// Anything else throws std::invalid_argument.
PellSolution fundamental_solution(const Int& d, const Int& n);

bool supported_parameters(const Int& d, const Int& n);

// Lazy ascending stream: starts at the fundamental solution and steps by
// composing with the d-unit. Each emission is re-validated and checked to be
// strictly larger than the previous one.
class SolutionStream {
 public:
    SolutionStream(Int d, Int n);
    PellSolution next();

 private:
    PellSolution unit_;
    PellSolution cur_;
    bool started_ = false;
};

// First `count` solutions in strictly increasing x. count >= 1.
std::vector<PellSolution> generate(const Int& d, const Int& n, std::size_t count);

}  // namespace bidio::pell
