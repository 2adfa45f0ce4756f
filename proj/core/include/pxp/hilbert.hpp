#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pxp/linalg.hpp"

namespace pxp {

enum class BoundaryCondition { Periodic, Open };

std::string_view to_string(BoundaryCondition bc);
std::optional<BoundaryCondition> parse_boundary(std::string_view token);

using Bitmask = std::uint32_t;

inline constexpr int kMinChainLength = 2;
inline constexpr int kMaxChainLength = 24;

// Blockade-constrained Fock space of a length-L chain: no two adjacent sites
// are up, with site L-1 adjacent to site 0 iff the chain is periodic.
class FockBasis {
 public:
  FockBasis(int length, BoundaryCondition bc);

  int length() const { return length_; }
  BoundaryCondition boundary() const { return bc_; }
  std::size_t dimension() const { return states_.size(); }

  const std::vector<Bitmask>& states() const { return states_; }
  Bitmask state(std::size_t index) const { return states_.at(index); }
  std::optional<std::size_t> index_of(Bitmask mask) const;

  bool neighbours(int i, int j) const;
  int left_of(int site) const;   // -1 when the site is an open edge
  int right_of(int site) const;  // -1 when the site is an open edge

  // Diagonal of the total sigma^z: 2 popcount - L.
  double sz_total(std::size_t index) const;

  std::string label(std::size_t index) const;  // site L-1 leftmost

 private:
  int length_;
  BoundaryCondition bc_;
  std::vector<Bitmask> states_;
};

FockBasis enumerate_basis(int length, BoundaryCondition bc = BoundaryCondition::Periodic);

bool is_admissible(Bitmask mask, int length, BoundaryCondition bc);

StateVector all_down_state(const FockBasis& basis);

}  // namespace pxp
