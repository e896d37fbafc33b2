#pragma once

// Finite meet-semilattices with zero and top, their filters, covers and
// zero-glued products.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lcm {

class FiniteSemilattice {
 public:
  FiniteSemilattice() = default;
  FiniteSemilattice(std::vector<std::string> labels,
                    std::vector<std::vector<std::size_t>> meet,
                    std::size_t zero,
                    std::size_t top);

  std::size_t size() const noexcept { return _labels.size(); }
  std::size_t zero() const noexcept { return _zero; }
  std::size_t top() const noexcept { return _top; }
  std::string const& label(std::size_t i) const { return _labels[i]; }
  std::vector<std::string> const& labels() const noexcept { return _labels; }
  std::vector<std::vector<std::size_t>> const& table() const noexcept { return _meet; }

  std::size_t meet(std::size_t a, std::size_t b) const { return _meet[a][b]; }
  bool leq(std::size_t a, std::size_t b) const { return _meet[a][b] == a; }

  // Commutative, associative, idempotent, zero absorbing, top neutral.
  // Returns a description of the first violation.
  std::optional<std::string> validate() const;

 private:
  std::vector<std::string> _labels;
  std::vector<std::vector<std::size_t>> _meet;
  std::size_t _zero = 0;
  std::size_t _top = 0;
};

// A filter of a finite semilattice is ↑e for its least element e, so it is
// stored as that generator.
struct Filter {
  std::size_t generator;
  bool operator==(Filter const&) const = default;
  auto operator<=>(Filter const&) const = default;
};

struct FilterSets {
  std::vector<Filter> filters;
  std::vector<Filter> ultrafilters;
};

std::vector<std::size_t> members(FiniteSemilattice const& l, Filter f);
bool is_filter(FiniteSemilattice const& l, std::vector<bool> const& subset);
FilterSets enumerate_filters(FiniteSemilattice const& l);

// Nonzero f <= e that meets no member of `cover`, if one exists.
std::optional<std::size_t> cover_counterexample(FiniteSemilattice const& l,
                                                std::vector<std::size_t> const& cover,
                                                std::size_t e);
bool is_cover(FiniteSemilattice const& l,
              std::vector<std::size_t> const& cover,
              std::size_t e);

// E ×₀ F: the nonzero pairs plus one zero. `pair_index[i][j]` is the index of
// (i, j) for nonzero i, j.
struct ProductSemilattice {
  FiniteSemilattice lattice;
  std::vector<std::vector<std::size_t>> pair_index;
  std::vector<std::pair<std::size_t, std::size_t>> components;  // zero maps to (zeroE, zeroF)
};

ProductSemilattice product_semilattice(FiniteSemilattice const& e,
                                       FiniteSemilattice const& f);

// The filter correspondence filters(E ×₀ F) → filters(E) × filters(F),
// ξ ↦ (ξ_l, ξ_r), checked for bijectivity and for matching ultrafilters.
struct ProductCorrespondence {
  std::size_t product_filters = 0;
  std::size_t left_filters = 0;
  std::size_t right_filters = 0;
  std::size_t product_ultrafilters = 0;
  std::size_t left_ultrafilters = 0;
  std::size_t right_ultrafilters = 0;
  bool bijective = false;
  bool ultrafilters_preserved = false;
};

ProductCorrespondence check_product_correspondence(FiniteSemilattice const& e,
                                                   FiniteSemilattice const& f);

}  // namespace lcm
