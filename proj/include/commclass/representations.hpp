#pragma once

// Pictures of a commutation class: heap (lattice squares), wiring diagram /
// ladder lottery, and rhombic tiling of the regular 2n-gon. Geometry is only
// used for drawing; every combinatorial decision is made on integers.

#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "commclass/coxeter.hpp"
#include "commclass/heap.hpp"

namespace commclass {

struct Rung {
  int column;       // 1-based
  Generator index;  // joins wire positions index and index+1

  friend auto operator<=>(const Rung&, const Rung&) = default;
};

struct WiringDiagram {
  Rank n = 1;
  std::vector<Rung> rungs;  // in word order

  int width() const;
  /// Wire labels at each position after running the swaps on (1, ..., n).
  std::vector<int> route() const;
  /// Rungs sorted by (column, index); the diagram as a drawn object.
  std::vector<Rung> layout() const;

  friend bool operator==(const WiringDiagram& a, const WiringDiagram& b) {
    return a.n == b.n && a.layout() == b.layout();
  }
};

/// Each swap goes in the first column after the last one touching either of
/// its two wire positions.
WiringDiagram wiring_diagram(const Word& word);

struct Point {
  double x = 0;
  double y = 0;
};

struct Rhombus {
  int low_wire;   // a
  int high_wire;  // b > a
  std::uint64_t below_mask;  // bit c set for each wire c below the crossing
  Point anchor;

  friend bool operator==(const Rhombus& a, const Rhombus& b) {
    return a.low_wire == b.low_wire && a.high_wire == b.high_wire && a.below_mask == b.below_mask;
  }
};

struct Tiling {
  Rank n = 1;
  double angle_offset = -std::numbers::pi / 2;
  std::vector<Rhombus> rhombi;  // in crossing order

  /// u_k = (cos t_k, sin t_k), t_k = pi (k-1) / n + angle_offset.
  Point edge_vector(int wire) const;
  /// anchor, anchor+u_a, anchor+u_a+u_b, anchor+u_b.
  std::vector<Point> corners(const Rhombus& r) const;
  double rhombus_area(const Rhombus& r) const;
  double total_area() const;
  /// Vertices of the regular 2n-gon, counterclockwise from the origin.
  std::vector<Point> polygon() const;
  double polygon_area() const;

  /// Combinatorial identity: same (pair, wires-below) set.
  bool same_tiles(const Tiling& other) const;
};

/// Throws std::invalid_argument unless the word is a reduced word of w0.
Tiling rhombic_tiling(const Word& word, double angle_offset = -std::numbers::pi / 2);

enum class HeapOrientation { rows_down, rows_up, columns };

struct SvgOptions {
  double scale = 20.0;
  double margin = 10.0;
  HeapOrientation heap_orientation = HeapOrientation::rows_down;
};

std::string render_svg(const Heap& heap, const SvgOptions& options = {});
std::string render_svg(const WiringDiagram& diagram, const SvgOptions& options = {});
std::string render_svg(const Tiling& tiling, const SvgOptions& options = {});

/// Geometry as JSON, for the --coords output.
nlohmann::ordered_json to_coords(const Heap& heap);
nlohmann::ordered_json to_coords(const WiringDiagram& diagram);
nlohmann::ordered_json to_coords(const Tiling& tiling);

} // namespace commclass
