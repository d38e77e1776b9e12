#pragma once

#include <array>
#include <memory>
#include <vector>

#include "bidio/exactmath.hpp"
#include "bidio/geometry.hpp"
#include "bidio/pell.hpp"

// The parametric families of bidiophantine triangles over an axis-parallel
// segment of length k in {3, 4}. A foot offset b is admissible when the
// squared height 8(b+1)(b+2) (k=3) resp. 3(b+1)(b+3) (k=4) is a perfect
// square; admissible b are enumerated either by brute-force square tests or
// through the Pell reductions
//   k=3, even b = 2(m^2-1):  n^2 - 2m^2 = -1
//   k=3, odd  b = 2m^2-1:    n^2 - 2m^2 = +1
//   k=4,      b = x - 2:     x^2 - 3y^2 = +1.

namespace bidio::families {

struct FamilyMember {
    int k;           // 3 or 4
    Int b;           // foot offset of the apex beyond the far base vertex
    Int height;      // full apex height h, h^2 = height_squared(k, b)
    Int side_short;  // 3b+4 (k=3) or 2b+3 (k=4)
    Int side_long;   // 3b+5 (k=3) or 2b+5 (k=4)
    Int foot;        // = b
};

struct ApexCosines {
    Rational at_far_vertex;   // (b+k)/side_long
    Rational at_near_vertex;  // -b/side_short
};

// 8(b+1)(b+2) for k=3, 3(b+1)(b+3) for k=4; defined for any b >= 0.
Int height_squared(int k, const Int& b);

bool is_admissible(int k, const Int& b);

// Inadmissible b throws std::domain_error naming the non-square radicand.
FamilyMember member(int k, const Int& b);

// Maps a Pell solution from the matching stream to its b, verifying that the
// result is admissible. Mismatched stream/family combinations throw
// std::invalid_argument.
Int from_pell(int k, const pell::PellSolution& s);

// Ascending admissible b, merged across branches for k=3. Backed by the Pell
// streams; tests compare against a brute-force square scan.
class AdmissibleStream {
 public:
    explicit AdmissibleStream(int k);
    AdmissibleStream(const AdmissibleStream&) = delete;
    AdmissibleStream& operator=(const AdmissibleStream&) = delete;
    Int next();

 private:
    int k_;
    std::unique_ptr<pell::SolutionStream> even_;  // k=3: (2,-1); k=4: (3,+1)
    std::unique_ptr<pell::SolutionStream> odd_;   // k=3 only: (2,+1)
    Int next_even_;
    Int next_odd_;
};

// All admissible b <= limit, ascending.
std::vector<Int> admissible_b_values(int k, const Int& limit);

// base_start, base_start + (k, 0), base_start + (k + b, side * h).
std::array<geometry::LatticePoint, 3> realize(const FamilyMember& m,
                                              const geometry::LatticePoint& base_start,
                                              int side);

// Exact cosines at the two base vertices; defined for any b >= 0 (the lattice
// realization needs admissibility, the formulas do not).
ApexCosines apex_cosines(int k, const Int& b);

}  // namespace bidio::families
