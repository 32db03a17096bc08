#pragma once

// Tensor products of catalog modules and their Θ-components.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "thetagr/gmodule.hpp"

namespace thetagr {

/// Θ_n⁺ constituents (canonical labels) plus the total dimension of everything else.
struct ThetaMultiset {
  std::map<ThetaLabel, std::size_t> mult;
  std::size_t remainder_dim = 0;

  std::size_t count(ThetaLabel l) const;
  /// Σ mult·dim(label) + remainder_dim.
  std::size_t total_dim(int n) const;
  /// "g+g+T" style, "0" when empty; labels in report order.
  std::string to_string(int n) const;
  bool same_labels(const ThetaMultiset& o) const { return mult == o.mult; }
  bool operator==(const ThetaMultiset&) const = default;
};

/// x.(u⊗v) = x.u⊗v + u⊗x.v; basis index i*dim(Y) + j.
GModule tensor(const GModule& x, const GModule& y);

/// Θ-part of a completely reducible module with a weight basis.
ThetaMultiset theta_component(const GModule& m);
ThetaMultiset theta_component(ThetaLabel x, ThetaLabel y, int n);

/// Parses "g+g+T", "S+Lam", "0"; labels are canonicalized for n.
ThetaMultiset parse_theta_sum(std::string_view s, int n);

/// Row/column labels of the tensor table for n.
std::vector<ThetaLabel> table_labels(int n);
/// Transcribed table cell; remainder filled by dimension bookkeeping.
ThetaMultiset golden_cell(int n, ThetaLabel row, ThetaLabel col);

struct TableCell {
  ThetaLabel row;
  ThetaLabel col;
  ThetaMultiset expected;
  ThetaMultiset computed;
  bool pass = false;
};

struct TableReport {
  int n = 0;
  std::vector<TableCell> cells;
  bool all_pass() const;
};

TableReport verify_tables(int n);

}  // namespace thetagr
