#include "bidio/families.hpp"

#include <stdexcept>

namespace bidio::families {

namespace {

void check_k(int k) {
    if (k != 3 && k != 4) {
        throw std::invalid_argument("family parameter k must be 3 or 4, got " +
                                    std::to_string(k));
    }
}

// b for one Pell solution on the given branch.
Int branch_b(int k, const pell::PellSolution& s) {
    if (k == 3 && s.d() == 2 && s.n() == -1) return 2 * (s.y() * s.y() - 1);
    if (k == 3 && s.d() == 2 && s.n() == 1) return 2 * s.y() * s.y() - 1;
    if (k == 4 && s.d() == 3 && s.n() == 1) return s.x() - 2;
    throw std::invalid_argument(
        "pell solution with (d, n) = (" + s.d().get_str() + ", " + s.n().get_str() +
        ") does not feed the k = " + std::to_string(k) + " family");
}

}  // namespace

Int height_squared(int k, const Int& b) {
    check_k(k);
    if (b < 0) throw std::domain_error("family foot offset b must be >= 0");
    if (k == 3) return 8 * (b + 1) * (b + 2);
    return 3 * (b + 1) * (b + 3);
}

bool is_admissible(int k, const Int& b) {
    return is_perfect_square(height_squared(k, b));
}

FamilyMember member(int k, const Int& b) {
    const Int h2 = height_squared(k, b);
    const auto h = exact_sqrt(h2);
    if (!h) {
        throw std::domain_error("b = " + b.get_str() + " is not admissible for k = " +
                                std::to_string(k) + ": the squared height " +
                                h2.get_str() + " is not a perfect square");
    }
    FamilyMember m;
    m.k = k;
    m.b = b;
    m.height = *h;
    m.side_short = (k == 3) ? Int(3 * b + 4) : Int(2 * b + 3);
    m.side_long = (k == 3) ? Int(3 * b + 5) : Int(2 * b + 5);
    m.foot = b;
    // Pythagoras on the two right sub-triangles; holds identically, kept as a
    // cheap self-check.
    if (m.side_short * m.side_short != b * b + h2 ||
        m.side_long * m.side_long != (b + k) * (b + k) + h2) {
        throw std::logic_error("family member failed its side identities");
    }
    return m;
}

Int from_pell(int k, const pell::PellSolution& s) {
    check_k(k);
    Int b = branch_b(k, s);
    member(k, b);  // admissibility check; throws if the mapping ever broke
    return b;
}

AdmissibleStream::AdmissibleStream(int k) : k_(k) {
    check_k(k);
    if (k == 3) {
        even_ = std::make_unique<pell::SolutionStream>(2, -1);
        odd_ = std::make_unique<pell::SolutionStream>(2, 1);
        next_even_ = branch_b(3, even_->next());
        next_odd_ = branch_b(3, odd_->next());
    } else {
        even_ = std::make_unique<pell::SolutionStream>(3, 1);
        next_even_ = branch_b(4, even_->next());
    }
}

Int AdmissibleStream::next() {
    if (k_ == 4) {
        Int out = next_even_;
        next_even_ = branch_b(4, even_->next());
        return out;
    }
    // k=3: even-branch values are even, odd-branch odd, so never equal.
    if (next_even_ < next_odd_) {
        Int out = next_even_;
        next_even_ = branch_b(3, even_->next());
        return out;
    }
    Int out = next_odd_;
    next_odd_ = branch_b(3, odd_->next());
    return out;
}

std::vector<Int> admissible_b_values(int k, const Int& limit) {
    check_k(k);
    if (limit < 0) throw std::invalid_argument("admissible_b_values: limit must be >= 0");
    std::vector<Int> out;
    AdmissibleStream stream(k);
    for (Int b = stream.next(); b <= limit; b = stream.next()) out.push_back(b);
    return out;
}

std::array<geometry::LatticePoint, 3> realize(const FamilyMember& m,
                                              const geometry::LatticePoint& base_start,
                                              int side) {
    if (side != 1 && side != -1) {
        throw std::invalid_argument("realize: side must be +1 or -1");
    }
    const Int& x0 = base_start.x;
    const Int& y0 = base_start.y;
    return {geometry::LatticePoint{x0, y0},
            geometry::LatticePoint{x0 + m.k, y0},
            geometry::LatticePoint{x0 + m.k + m.b, y0 + side * m.height}};
}

ApexCosines apex_cosines(int k, const Int& b) {
    check_k(k);
    if (b < 0) throw std::domain_error("apex_cosines: b must be >= 0");
    if (k == 3) return {Rational(b + 3, 3 * b + 5), Rational(-b, 3 * b + 4)};
    return {Rational(b + 4, 2 * b + 5), Rational(-b, 2 * b + 3)};
}

}  // namespace bidio::families
