#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"

#include "commclass/engine.hpp"
#include "commclass/heap.hpp"
#include "commclass/representations.hpp"
#include "oracle.hpp"

using namespace commclass;

namespace {

Word w4(const char* digits) { return parse_word(digits, 4); }

std::vector<Word> canonical_words(Rank n) {
  ReducedWordStream stream(longest_element(n), true);
  std::vector<Word> out;
  while (auto w = stream.next()) out.push_back(*w);
  return out;
}

} // namespace

TEST_CASE("heap_of_word") {
  const auto heap = heap_of_word(w4("321323"));
  CHECK(heap.size() == 6);
  std::multiset<int> labels;
  for (const auto& e : heap.elements) labels.insert(e.label);
  CHECK(labels == std::multiset<int>{1, 2, 2, 3, 3, 3});

  const auto single = heap_of_word(parse_word("2", 3));
  CHECK(single.size() == 1);
  CHECK(single.covers.empty());

  const auto a = heap_of_word(w4("13")), b = heap_of_word(w4("31"));
  CHECK(a.covers.empty());
  CHECK(b.covers.empty());
  CHECK(heaps_isomorphic(a, b));

  CHECK_THROWS_AS(heap_of_word(parse_word("11")), std::invalid_argument);
}

TEST_CASE("heap covers are the transitive reduction; coords are lattice-adjacent") {
  for (const auto& word : canonical_words(5)) {
    const auto heap = heap_of_word(word);
    // Order by brute force: i below j iff a chain of non-commuting letters.
    const auto m = heap.size();
    std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = j; i-- > 0;)
        if (!generators_commute(word[i], word[j])) {
          less[i][j] = true;
          for (std::size_t k = 0; k < i; ++k)
            if (less[k][i]) less[k][j] = true;
        }
    std::set<std::pair<std::size_t, std::size_t>> reduction;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!less[i][j]) continue;
        bool direct = true;
        for (std::size_t k = i + 1; k < j; ++k)
          if (less[i][k] && less[k][j]) direct = false;
        if (direct) reduction.emplace(i, j);
      }
    CHECK(std::set<std::pair<std::size_t, std::size_t>>(heap.covers.begin(), heap.covers.end()) == reduction);

    std::set<std::pair<int, int>> cells;
    for (const auto& e : heap.elements) {
      CHECK(e.row == e.label);
      cells.emplace(e.row, e.column);
    }
    CHECK(cells.size() == m);
    for (const auto& [lo, hi] : heap.covers) {
      CHECK(std::abs(heap.elements[lo].row - heap.elements[hi].row) == 1);
      CHECK(heap.elements[hi].column >= heap.elements[lo].column + 1);
    }
  }
}

TEST_CASE("linear_extension_count") {
  CHECK(linear_extension_count(heap_of_word(w4("321323"))) == 2);
  CHECK(linear_extension_count(heap_of_word(w4("312312"))) == 4);
  CHECK(linear_extension_count(heap_of_word(w4("13"))) == 2);
  CHECK(linear_extension_count(heap_of_word(Word({}, 3))) == 1);
  // Four pairwise commuting letters: 4!.
  CHECK(linear_extension_count(heap_of_word(parse_word("1357"))) == 24);
}

TEST_CASE("class size equals the oracle class size at rank <= 6") {
  for (Rank n = 2; n <= 5; ++n)
    for (const auto& cls : partition_reduced_words(longest_element(n)))
      CHECK(linear_extension_count(heap_of_word(cls.front())) == BigCount(cls.size()));
  std::size_t checked = 0;
  for (const auto& cls : partition_reduced_words(longest_element(6))) {
    CHECK(linear_extension_count(heap_of_word(cls.front())) == BigCount(cls.size()));
    ++checked;
  }
  CHECK(checked == 908);
}

TEST_CASE("heaps are isomorphic exactly on commutation classes (rank <= 5)") {
  for (Rank n = 2; n <= 5; ++n) {
    const auto classes = partition_reduced_words(longest_element(n));
    std::vector<std::pair<std::size_t, Heap>> heaps;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& w : classes[c]) heaps.emplace_back(c, heap_of_word(w));
    // All pairs at rank <= 4; rank 5 against class representatives only.
    for (std::size_t i = 0; i < heaps.size(); ++i) {
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto rep = heap_of_word(classes[c].front());
        CHECK(heaps_isomorphic(heaps[i].second, rep) == (heaps[i].first == c));
      }
    }
  }
}

TEST_CASE("representation_roundtrip") {
  CHECK(representation_roundtrip(heap_of_word(w4("323123"))).to_string() == "321323");
  CHECK(representation_roundtrip(heap_of_word(parse_word("2", 3))).to_string() == "2");
  CHECK(representation_roundtrip(heap_of_word(w4("312312"))).to_string() == "132132");
}

TEST_CASE("wiring_diagram") {
  const auto d = wiring_diagram(w4("321323"));
  CHECK(d.rungs.size() == 6);
  CHECK(d.route() == std::vector<int>{4, 3, 2, 1});

  const auto empty = wiring_diagram(Word({}, 2));
  CHECK(empty.rungs.empty());
  CHECK(empty.route() == std::vector<int>{1, 2});

  // Greedy columns: 1 and 3 share the first column.
  const auto pair = wiring_diagram(w4("13"));
  CHECK(pair.rungs[0].column == 1);
  CHECK(pair.rungs[1].column == 1);

  std::vector<WiringDiagram> diagrams;
  for (const auto& w : canonical_words(4)) diagrams.push_back(wiring_diagram(w));
  CHECK(diagrams.size() == 8);
  for (std::size_t i = 0; i < diagrams.size(); ++i)
    for (std::size_t j = i + 1; j < diagrams.size(); ++j) CHECK_FALSE(diagrams[i] == diagrams[j]);

  // Rungs in one column touch disjoint wire pairs.
  for (const auto& word : canonical_words(6)) {
    const auto diagram = wiring_diagram(word);
    CHECK(diagram.rungs.size() == 15);
    CHECK(diagram.route() == oracle::reversal(6));
    std::set<std::pair<int, int>> used;
    for (const auto& r : diagram.rungs) {
      CHECK(used.emplace(r.column, r.index).second);
      CHECK(used.count({r.column, r.index - 1}) + used.count({r.column, r.index + 1}) == 0);
    }
  }
}

TEST_CASE("every pair of wires crosses exactly once in a network for w0") {
  for (const auto& word : canonical_words(5)) {
    std::vector<int> wires{1, 2, 3, 4, 5};
    std::set<std::pair<int, int>> crossed;
    for (auto x : word.letters()) {
      const auto i = static_cast<std::size_t>(x - 1);
      CHECK(crossed.emplace(std::min(wires[i], wires[i + 1]), std::max(wires[i], wires[i + 1])).second);
      std::swap(wires[i], wires[i + 1]);
    }
    CHECK(crossed.size() == 10);
  }
}

TEST_CASE("rhombic_tiling") {
  const auto t = rhombic_tiling(w4("321323"));
  CHECK(t.rhombi.size() == 6);
  std::set<std::pair<int, int>> pairs;
  for (const auto& r : t.rhombi) pairs.emplace(r.low_wire, r.high_wire);
  CHECK(pairs.size() == 6);

  const auto square = rhombic_tiling(parse_word("1", 2));
  REQUIRE(square.rhombi.size() == 1);
  CHECK(square.rhombus_area(square.rhombi[0]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(square.polygon_area() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(rhombic_tiling(w4("321")), std::invalid_argument);

  // Left edge of the polygon is vertical.
  const auto outline = t.polygon();
  CHECK(std::abs(outline[0].x - outline[1].x) < 1e-12);
  for (const auto& p : outline) CHECK(p.x >= -1e-12);

  std::vector<Tiling> tilings;
  for (const auto& w : canonical_words(4)) tilings.push_back(rhombic_tiling(w));
  for (std::size_t i = 0; i < tilings.size(); ++i)
    for (std::size_t j = i + 1; j < tilings.size(); ++j) CHECK_FALSE(tilings[i].same_tiles(tilings[j]));
  // Commutation-equivalent words give the same tiles.
  CHECK(rhombic_tiling(w4("323123")).same_tiles(rhombic_tiling(w4("321323"))));
}

TEST_CASE("tiling closure: boundary is the regular 2n-gon and areas add up") {
  for (Rank n = 2; n <= 7; ++n) {
    ReducedWordStream stream(longest_element(n), true);
    int sampled = 0;
    while (auto word = stream.next()) {
      if (++sampled > 50) break;
      const auto t = rhombic_tiling(*word);
      CHECK(t.rhombi.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(std::abs(t.total_area() - t.polygon_area()) <= 1e-9 * t.polygon_area());

      // Every polygon vertex is a rhombus corner.
      for (const auto& v : t.polygon()) {
        bool found = false;
        for (const auto& r : t.rhombi)
          for (const auto& c : t.corners(r))
            if (std::hypot(c.x - v.x, c.y - v.y) < 1e-9) found = true;
        CHECK(found);
      }
      // Sides of the polygon all have unit length.
      const auto poly = t.polygon();
      for (std::size_t k = 0; k < poly.size(); ++k) {
        const auto& p = poly[k];
        const auto& q = poly[(k + 1) % poly.size()];
        CHECK(std::hypot(p.x - q.x, p.y - q.y) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("render_svg is deterministic and well formed") {
  const auto heap = heap_of_word(w4("321323"));
  const auto svg = render_svg(heap);
  CHECK(svg == render_svg(heap));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t rects = 0;
  for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) ++rects;
  CHECK(rects == 6);

  const auto wires = render_svg(wiring_diagram(Word({}, 3)));
  std::size_t lines = 0;
  for (auto pos = wires.find("<line"); pos != std::string::npos; pos = wires.find("<line", pos + 1)) ++lines;
  CHECK(lines == 3);

  const auto tiling = render_svg(rhombic_tiling(w4("321323")));
  std::size_t paths = 0;
  for (auto pos = tiling.find("<path"); pos != std::string::npos; pos = tiling.find("<path", pos + 1)) ++paths;
  CHECK(paths == 7);  // six rhombi and the octagon

  SvgOptions rotated;
  rotated.heap_orientation = HeapOrientation::columns;
  CHECK(render_svg(heap, rotated) != svg);
}

TEST_CASE("coords JSON") {
  const auto t = to_coords(rhombic_tiling(w4("321323")));
  CHECK(t["rhombi"].size() == 6);
  CHECK(t["polygon"].size() == 8);
  const auto d = to_coords(wiring_diagram(w4("321323")));
  CHECK(d["rungs"].size() == 6);
  CHECK(d["rungs"][0]["column"] == 1);
  const auto h = to_coords(heap_of_word(w4("321323")));
  CHECK(h["elements"].size() == 6);
}
