#include "bidio/pell.hpp"

#include <stdexcept>
#include <utility>

namespace bidio::pell {

PellSolution::PellSolution(Int x, Int y, Int d, Int n)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)), n_(std::move(n)) {
    if (d_ < 2 || is_perfect_square(d_)) {
        throw std::domain_error("pell: d must be a nonsquare integer >= 2, got " +
                                d_.get_str());
    }
    if (n_ == 0) throw std::domain_error("pell: n must be nonzero");
    if (x_ < 0 || y_ < 0) {
        throw std::domain_error("pell: solution components must be nonnegative");
    }
    if (x_ * x_ - d_ * y_ * y_ != n_) {
        throw std::domain_error("pell: (" + x_.get_str() + ", " + y_.get_str() +
                                ") does not satisfy x^2 - " + d_.get_str() +
                                "*y^2 = " + n_.get_str());
    }
}

PellSolution compose(const PellSolution& s, const PellSolution& u, Compose how) {
    if (s.d() != u.d()) {
        throw std::invalid_argument("pell compose: mismatched d parameters " +
                                    s.d().get_str() + " and " + u.d().get_str());
    }
    Int x, y;
    if (how == Compose::sum) {
        x = s.x() * u.x() + s.d() * s.y() * u.y();
        y = s.x() * u.y() + s.y() * u.x();
    } else {
        x = abs(s.x() * u.x() - s.d() * s.y() * u.y());
        y = abs(s.x() * u.y() - s.y() * u.x());
    }
    return PellSolution(std::move(x), std::move(y), s.d(), s.n() * u.n());
}

bool supported_parameters(const Int& d, const Int& n) {
    return (d == 2 && (n == -1 || n == 1)) || (d == 3 && (n == 1 || n == -3));
}

PellSolution fundamental_solution(const Int& d, const Int& n) {
    if (d == 2 && n == -1) return PellSolution(1, 1, 2, -1);
    if (d == 2 && n == 1) return PellSolution(3, 2, 2, 1);
    if (d == 3 && n == 1) return PellSolution(2, 1, 3, 1);
    if (d == 3 && n == -3) return PellSolution(3, 2, 3, -3);
    throw std::invalid_argument(
        "pell: unsupported parameters (d, n) = (" + d.get_str() + ", " +
        n.get_str() + "); supported: (2,-1), (2,+1), (3,+1), (3,-3)");
}

SolutionStream::SolutionStream(Int d, Int n)
    : unit_(fundamental_solution(d, 1)), cur_(fundamental_solution(d, n)) {}

PellSolution SolutionStream::next() {
    if (!started_) {
        started_ = true;
        return cur_;
    }
    PellSolution nxt = compose(cur_, unit_, Compose::sum);
    if (!(nxt.x() > cur_.x())) {
        throw std::logic_error("pell stream: emission not strictly increasing");
    }
    cur_ = nxt;
    return cur_;
}

std::vector<PellSolution> generate(const Int& d, const Int& n, std::size_t count) {
    if (count < 1) throw std::invalid_argument("pell generate: count must be >= 1");
    SolutionStream stream(d, n);
    std::vector<PellSolution> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
    return out;
}

}  // namespace bidio::pell
