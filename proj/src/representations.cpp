#include "commclass/representations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace commclass {

int WiringDiagram::width() const {
  int w = 0;
  for (const auto& r : rungs) w = std::max(w, r.column);
  return w;
}

std::vector<int> WiringDiagram::route() const {
  std::vector<int> wires(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) wires[static_cast<std::size_t>(k)] = k + 1;
  for (const auto& r : rungs)
    std::swap(wires[static_cast<std::size_t>(r.index - 1)], wires[static_cast<std::size_t>(r.index)]);
  return wires;
}

std::vector<Rung> WiringDiagram::layout() const {
  auto sorted = rungs;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

WiringDiagram wiring_diagram(const Word& word) {
  if (!is_reduced(word)) throw std::invalid_argument("wiring diagram requires a reduced word");
  WiringDiagram d;
  d.n = word.rank();
  std::vector<int> last_column(static_cast<std::size_t>(d.n) + 1, 0);
  for (auto x : word.letters()) {
    const auto a = static_cast<std::size_t>(x), b = a + 1;
    const int column = std::max(last_column[a], last_column[b]) + 1;
    last_column[a] = last_column[b] = column;
    d.rungs.push_back({column, x});
  }
  return d;
}

Point Tiling::edge_vector(int wire) const {
  const double theta = std::numbers::pi * (wire - 1) / n + angle_offset;
  return {std::cos(theta), std::sin(theta)};
}

std::vector<Point> Tiling::corners(const Rhombus& r) const {
  const auto ua = edge_vector(r.low_wire), ub = edge_vector(r.high_wire);
  const auto& p = r.anchor;
  return {p, {p.x + ua.x, p.y + ua.y}, {p.x + ua.x + ub.x, p.y + ua.y + ub.y}, {p.x + ub.x, p.y + ub.y}};
}

double Tiling::rhombus_area(const Rhombus& r) const {
  const auto ua = edge_vector(r.low_wire), ub = edge_vector(r.high_wire);
  return std::abs(ua.x * ub.y - ua.y * ub.x);
}

double Tiling::total_area() const {
  double sum = 0;
  for (const auto& r : rhombi) sum += rhombus_area(r);
  return sum;
}

std::vector<Point> Tiling::polygon() const {
  std::vector<Point> out;
  Point p;
  out.push_back(p);
  for (int k = 1; k <= n; ++k) {
    const auto u = edge_vector(k);
    p = {p.x + u.x, p.y + u.y};
    out.push_back(p);
  }
  for (int k = 1; k < n; ++k) {
    const auto u = edge_vector(k);
    p = {p.x - u.x, p.y - u.y};
    out.push_back(p);
  }
  return out;
}

double Tiling::polygon_area() const {
  const double sides = 2.0 * n;
  if (n == 1) return 0.0;
  return sides / (4.0 * std::tan(std::numbers::pi / sides));
}

bool Tiling::same_tiles(const Tiling& other) const {
  if (n != other.n || rhombi.size() != other.rhombi.size()) return false;
  auto key = [](const Rhombus& r) { return std::tuple(r.low_wire, r.high_wire, r.below_mask); };
  std::vector<std::tuple<int, int, std::uint64_t>> a, b;
  for (const auto& r : rhombi) a.push_back(key(r));
  for (const auto& r : other.rhombi) b.push_back(key(r));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Tiling rhombic_tiling(const Word& word, double angle_offset) {
  if (evaluate_word(word) != longest_element(word.rank()) || !is_reduced(word))
    throw std::invalid_argument("rhombic tiling requires a reduced word of the longest element");
  if (word.rank() > 64) throw std::invalid_argument("rhombic tiling supports at most 64 wires");
  Tiling t;
  t.n = word.rank();
  t.angle_offset = angle_offset;
  std::vector<int> wires(static_cast<std::size_t>(t.n));
  for (int k = 0; k < t.n; ++k) wires[static_cast<std::size_t>(k)] = k + 1;
  for (auto x : word.letters()) {
    const auto i = static_cast<std::size_t>(x - 1);
    int a = wires[i], b = wires[i + 1];
    Rhombus r{std::min(a, b), std::max(a, b), 0, {}};
    for (std::size_t c = 0; c < i; ++c) {
      r.below_mask |= std::uint64_t{1} << (wires[c] - 1);
      const auto u = t.edge_vector(wires[c]);
      r.anchor.x += u.x;
      r.anchor.y += u.y;
    }
    t.rhombi.push_back(r);
    std::swap(wires[i], wires[i + 1]);
  }
  return t;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string svg_open(double width, double height) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  return os.str();
}

} // namespace

std::string render_svg(const Heap& heap, const SvgOptions& options) {
  const double s = options.scale, m = options.margin;
  int max_col = 0;
  for (const auto& e : heap.elements) max_col = std::max(max_col, e.column);
  const int rows = std::max(heap.rank - 1, 1);
  const bool swap_axes = options.heap_orientation == HeapOrientation::columns;

  // Cell (column, row) in lattice units, row 1 first.
  auto place = [&](const HeapElement& e) {
    double gx = e.column;
    double gy = options.heap_orientation == HeapOrientation::rows_up ? rows - e.row : e.row - 1;
    if (swap_axes) std::swap(gx, gy);
    return Point{m + gx * s, m + gy * s};
  };
  const double w = (swap_axes ? rows : max_col + 1) * s + 2 * m;
  const double h = (swap_axes ? max_col + 1 : rows) * s + 2 * m;

  std::ostringstream os;
  os << svg_open(w, h);
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& e : heap.elements) {
    const auto p = place(e);
    os << "<rect x=\"" << num(p.x) << "\" y=\"" << num(p.y) << "\" width=\"" << num(s) << "\" height=\"" << num(s)
       << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"" << num(s * 0.6) << "\" text-anchor=\"middle\">\n";
  for (const auto& e : heap.elements) {
    const auto p = place(e);
    os << "<text x=\"" << num(p.x + s / 2) << "\" y=\"" << num(p.y + s * 0.72) << "\">" << e.label << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_svg(const WiringDiagram& diagram, const SvgOptions& options) {
  const double s = options.scale, m = options.margin;
  const int cols = diagram.width() + 1;
  const double w = cols * s + 2 * m;
  const double h = std::max(diagram.n - 1, 0) * s + 2 * m;
  auto wire_y = [&](int position) { return m + (diagram.n - position) * s; };

  std::ostringstream os;
  os << svg_open(w, h);
  os << "<g stroke=\"black\" stroke-width=\"2\">\n";
  for (int k = 1; k <= diagram.n; ++k)
    os << "<line x1=\"" << num(m) << "\" y1=\"" << num(wire_y(k)) << "\" x2=\"" << num(m + cols * s) << "\" y2=\""
       << num(wire_y(k)) << "\"/>\n";
  for (const auto& r : diagram.layout()) {
    const double x = m + r.column * s;
    os << "<line x1=\"" << num(x) << "\" y1=\"" << num(wire_y(r.index)) << "\" x2=\"" << num(x) << "\" y2=\""
       << num(wire_y(r.index + 1)) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_svg(const Tiling& tiling, const SvgOptions& options) {
  const double s = options.scale, m = options.margin;
  const auto outline = tiling.polygon();
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& p : outline) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  // SVG y grows downwards.
  auto map = [&](const Point& p) { return Point{m + (p.x - min_x) * s, m + (max_y - p.y) * s}; };
  auto path = [&](const std::vector<Point>& pts) {
    std::string d;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto q = map(pts[k]);
      d += (k ? " L " : "M ") + num(q.x) + ' ' + num(q.y);
    }
    return d + " Z";
  };

  std::ostringstream os;
  os << svg_open((max_x - min_x) * s + 2 * m, (max_y - min_y) * s + 2 * m);
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& r : tiling.rhombi) os << "<path d=\"" << path(tiling.corners(r)) << "\"/>\n";
  os << "<path stroke-width=\"2\" d=\"" << path(outline) << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

nlohmann::ordered_json to_coords(const Heap& heap) {
  nlohmann::ordered_json j;
  j["kind"] = "heap";
  j["rank"] = heap.rank;
  auto& elems = j["elements"] = nlohmann::ordered_json::array();
  for (const auto& e : heap.elements)
    elems.push_back({{"position", e.position}, {"label", e.label}, {"row", e.row}, {"column", e.column}});
  auto& covers = j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : heap.covers) covers.push_back({lo, hi});
  return j;
}

nlohmann::ordered_json to_coords(const WiringDiagram& diagram) {
  nlohmann::ordered_json j;
  j["kind"] = "network";
  j["wires"] = diagram.n;
  auto& rungs = j["rungs"] = nlohmann::ordered_json::array();
  for (const auto& r : diagram.rungs) rungs.push_back({{"column", r.column}, {"row", r.index}});
  return j;
}

nlohmann::ordered_json to_coords(const Tiling& tiling) {
  nlohmann::ordered_json j;
  j["kind"] = "tiling";
  j["n"] = tiling.n;
  auto& rhombi = j["rhombi"] = nlohmann::ordered_json::array();
  for (const auto& r : tiling.rhombi) {
    const auto ua = tiling.edge_vector(r.low_wire), ub = tiling.edge_vector(r.high_wire);
    rhombi.push_back({{"wires", {r.low_wire, r.high_wire}},
                      {"anchor", {r.anchor.x, r.anchor.y}},
                      {"edge_a", {ua.x, ua.y}},
                      {"edge_b", {ub.x, ub.y}}});
  }
  auto& outline = j["polygon"] = nlohmann::ordered_json::array();
  for (const auto& p : tiling.polygon()) outline.push_back({p.x, p.y});
  return j;
}

} // namespace commclass
