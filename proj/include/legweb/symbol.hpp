#pragma once

#include <vector>

#include "legweb/abelian.hpp"

namespace legweb {

// I! / (2^J (I-2J)! J!) for 0 <= J <= I/2, else 0. Throws for I < 0.
Integer c_coeff(int I, int J);

// The same coefficients built from the recursion
// c^I_0 = 1, c^I_J = (I-2J+1) c^{I-1}_{J-1} + c^{I-1}_J.
class CCoeffTable {
 public:
  explicit CCoeffTable(int max_I);
  int max_I() const { return static_cast<int>(rows_.size()) - 1; }
  Integer at(int I, int J) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

struct SymbolVar {
  int a = 0, i = 0, j = 0;  // f^a_{ij}, leaf index a is 0-based
  bool operator==(const SymbolVar&) const = default;
};

struct SymbolEq {
  int I = 0, i = 0, j = 0;  // E^I_{ij}
  bool operator==(const SymbolEq&) const = default;
};

// Model-case compatibility equations of one depth i + 2j = depth.
// Variables sorted by i descending then a ascending; equations by i
// descending then I ascending.
struct DepthBlock {
  int d = 0;
  int depth = 0;
  std::vector<SymbolVar> vars;
  std::vector<SymbolEq> eqs;
  ExactMatrix matrix;  // eqs.size() x vars.size()
};

// Throws std::invalid_argument for depth < 1.
DepthBlock depth_block(const WebSpec& web, int depth);
bool check_full_rank(const WebSpec& web, int depth, Exec exec = Exec::parallel);

struct SymbolRow {
  int depth = 0;
  long vars = 0;
  long eqs = 0;
  long rank = -1;  // -1 when not computed
};

// Closed-form counts: depth 1 -> (d, 2), depth 2k-2 -> (kd, k^2),
// depth 2k-1 -> (kd, k(k+1)).
SymbolRow closed_form_counts(int d, int depth);
// Variable/equation counts for depth 1..2d-3, by enumeration.
std::vector<SymbolRow> counting_table(int d);
// Counts plus exact block ranks; blocks are ranked concurrently.
std::vector<SymbolRow> symbol_table(const WebSpec& web,
                                    Exec exec = Exec::parallel);
// (sum of variables) - (sum of equations) over depth 1..2d-3 equals rho(d).
bool total_sum_check(int d);

// Every equation E^I_{ij} of depth <= depth_max holds exactly on every
// relation, with f^a_{ij} = d_p^i d_y^j h^a.
bool relations_satisfy_symbol(const WebSpec& web,
                              const std::vector<AbelianRelation>& rels,
                              int depth_max, Exec exec = Exec::parallel);

}  // namespace legweb
