#include "pxp/hilbert.hpp"

#include <algorithm>
#include <bit>

#include "pxp/error.hpp"

namespace pxp {

std::string_view to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Periodic ? "pbc" : "obc";
}

std::optional<BoundaryCondition> parse_boundary(std::string_view token) {
  if (token == "pbc" || token == "periodic") return BoundaryCondition::Periodic;
  if (token == "obc" || token == "open") return BoundaryCondition::Open;
  return std::nullopt;
}

namespace {

// Grow admissible strings site by site; `first_up` remembers site 0 so the
// wraparound bond can be closed at the last site.
void grow(int site, int length, bool periodic, bool prev_up, bool first_up, Bitmask mask,
          std::vector<Bitmask>& out) {
  if (site == length) {
    out.push_back(mask);
    return;
  }
  grow(site + 1, length, periodic, false, first_up, mask, out);
  const bool closes_ring = periodic && site == length - 1 && first_up;
  if (!prev_up && !closes_ring) {
    grow(site + 1, length, periodic, true, site == 0 ? true : first_up, mask | (Bitmask{1} << site),
         out);
  }
}

}  // namespace

FockBasis::FockBasis(int length, BoundaryCondition bc) : length_(length), bc_(bc) {
  if (length < kMinChainLength || length > kMaxChainLength) {
    throw SizeError("chain length L=" + std::to_string(length) + " outside [" +
                    std::to_string(kMinChainLength) + ", " + std::to_string(kMaxChainLength) + "]");
  }
  grow(0, length, bc == BoundaryCondition::Periodic, false, false, 0, states_);
  std::sort(states_.begin(), states_.end());
}

std::optional<std::size_t> FockBasis::index_of(Bitmask mask) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), mask);
  if (it == states_.end() || *it != mask) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

int FockBasis::left_of(int site) const {
  if (site > 0) return site - 1;
  return bc_ == BoundaryCondition::Periodic ? length_ - 1 : -1;
}

int FockBasis::right_of(int site) const {
  if (site < length_ - 1) return site + 1;
  return bc_ == BoundaryCondition::Periodic ? 0 : -1;
}

bool FockBasis::neighbours(int i, int j) const {
  return i != j && (left_of(i) == j || right_of(i) == j);
}

double FockBasis::sz_total(std::size_t index) const {
  return 2.0 * std::popcount(states_[index]) - length_;
}

std::string FockBasis::label(std::size_t index) const {
  std::string s(static_cast<std::size_t>(length_), '0');
  const Bitmask m = states_.at(index);
  for (int j = 0; j < length_; ++j) {
    if (m & (Bitmask{1} << j)) s[static_cast<std::size_t>(length_ - 1 - j)] = '1';
  }
  return s;
}

FockBasis enumerate_basis(int length, BoundaryCondition bc) { return FockBasis(length, bc); }

bool is_admissible(Bitmask mask, int length, BoundaryCondition bc) {
  if (length < 1 || length > 31 || (mask >> length) != 0) return false;
  if (mask & (mask >> 1)) return false;
  if (bc == BoundaryCondition::Periodic && length > 1) {
    if ((mask & 1u) && (mask & (Bitmask{1} << (length - 1)))) return false;
  }
  return true;
}

StateVector all_down_state(const FockBasis& basis) {
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  v(static_cast<Eigen::Index>(*basis.index_of(0))) = 1.0;
  return v;
}

}  // namespace pxp
