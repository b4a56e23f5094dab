#pragma once

// JSON, CSV and SVG renderings of library values.
//
// Characters serialize as [r, c, chi], surfaces as {"h_squared": n}.
// Rationals are strings "p/q" (or "p"); integers are JSON numbers when they
// fit in 64 bits and decimal strings otherwise. nlohmann::json keeps keys
// sorted, so documents are canonical.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abn/bncore.hpp"
#include "abn/stability.hpp"

namespace abn {

using json = nlohmann::json;

json to_json(const Integer& n);
json to_json(const Rational& q);
json to_json(const Character& v);
json to_json(const Surface& s);
json to_json(const Wall& w);
json to_json(const WallRecord& rec);
json to_json(const BNVerdict& v);
json to_json(const ModuliVerdict& v);
json to_json(const StratumDescriptor& d);

// Throws std::invalid_argument on malformed input.
Character character_from_json(const json& j);
Surface surface_from_json(const json& j);

// A grid of cell labels for fixed g; rows are degrees, columns are r.
struct LabelGrid {
  Integer g;
  std::vector<Integer> degrees;
  std::vector<Integer> ranks;
  std::vector<std::vector<std::string>> labels;  // labels[row][col]; "-" when chi = 0

  friend bool operator==(const LabelGrid&, const LabelGrid&) = default;
};

LabelGrid compute_grid(const Integer& g, const Integer& d_lo, const Integer& d_hi,
                       const Integer& r_lo, const Integer& r_hi);

std::string grid_to_csv(const LabelGrid& grid);
// Throws std::invalid_argument on malformed CSV.
LabelGrid grid_from_csv(const std::string& text, const Integer& g);

std::string grid_to_text(const LabelGrid& grid);
json grid_to_json(const LabelGrid& grid);

// The published g = 28 table (d in [20, 26], r in [1, 7]) with its labels
// verbatim: BN, KLM, phi, Delta, Thm1.1.
struct ReferenceCell {
  int d;
  int r;
  const char* label;
};
const std::vector<ReferenceCell>& reference_table_g28();

// Published label translated to the computed vocabulary.
std::string reference_to_computed(const std::string& published);

struct TableDiff {
  int d;
  int r;
  std::string published;
  std::string computed;
  bool expected;  // the documented discrepancy at (d, r) = (20, 3)
};
std::vector<TableDiff> compare_with_reference(const LabelGrid& grid);

// SVG renderings. Coordinates are exact until this point; rounding happens
// only when emitting text.
struct WallPlotOptions {
  Region region;
  std::optional<Wall> highlight;   // drawn emphasized (the first wall)
  bool gieseker_ray = false;       // draw the ray beta = 0
  std::string title;
};
std::string walls_to_svg(const std::vector<WallRecord>& walls, const WallPlotOptions& options);
std::string grid_to_svg(const LabelGrid& grid);

}  // namespace abn
