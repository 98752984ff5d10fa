#include <doctest.h>

#include <cmath>
#include <set>

#include "chartgen/errors.hpp"
#include "chartgen/layout.hpp"
#include "oracles.hpp"

using namespace chartgen;
using namespace chartgen::layout;

namespace {

void check_tick_properties(const std::vector<double>& t, double vmin, double vmax) {
  REQUIRE(t.size() >= 2);
  const double step = t[1] - t[0];
  REQUIRE(step > 0);
  for (std::size_t i = 1; i < t.size(); ++i) {
    REQUIRE(t[i] > t[i - 1]);
    REQUIRE(t[i] - t[i - 1] == doctest::Approx(step).epsilon(1e-9));
  }
  const double tol = step * 1e-6;
  REQUIRE(t.front() <= vmin + tol);
  REQUIRE(t.back() >= vmax - tol);
}

Rect random_rect(Rng& rng, double field) {
  return {rng.uniform(0, field), rng.uniform(0, field), rng.uniform(1, field / 4), rng.uniform(1, field / 4)};
}

ChartSpec simple_vbar(std::size_t n) {
  ChartSpec s;
  s.plot_type = PlotType::vbar;
  for (std::size_t i = 0; i < n; ++i) {
    s.x_labels.push_back("c" + std::to_string(i));
    s.y_values.values.push_back(10.0 + static_cast<double>(i));
  }
  s.titles = {"alpha beta gamma", "delta epsilon zeta", "eta"};
  return s;
}

}  // namespace

TEST_SUITE("layout") {

TEST_CASE("nice_ticks reference cases") {
  CHECK(nice_ticks(0, 10, 5) == std::vector<double>{0, 2, 4, 6, 8, 10});
  const auto t = nice_ticks(0, 1, 5);
  const std::vector<double> want{0, 0.2, 0.4, 0.6, 0.8, 1.0};
  REQUIRE(t.size() == want.size());
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("degenerate range expands around the value") {
  const auto t = nice_ticks(5, 5, 5);
  check_tick_properties(t, 4, 6);
  CHECK(t.front() < 5);
  CHECK(t.back() > 5);
}

TEST_CASE("nice_ticks equals the exhaustive step enumeration") {
  Rng rng(12);
  for (int i = 0; i < 20'000; ++i) {
    const double scale = std::pow(10.0, rng.uniform(-6, 8));
    double a = rng.uniform(-1, 1) * scale;
    double b = a + rng.uniform(0.01, 3) * scale;
    const int target = static_cast<int>(rng.uniform_int(2, 8));
    const auto t = nice_ticks(a, b, target);
    const auto want = oracle::best_ticks(a, b, target);
    REQUIRE(t.size() == static_cast<std::size_t>(want.last - want.first + 1));
    for (std::size_t k = 0; k < t.size(); ++k) {
      REQUIRE(t[k] == doctest::Approx((want.first + static_cast<long long>(k)) * want.step).epsilon(1e-9).scale(want.step));
    }
    check_tick_properties(t, a, b);
  }
}

TEST_CASE("nice_ticks rejects bad ranges") {
  CHECK_THROWS_AS(nice_ticks(2, 1, 5), SpecError);
  CHECK_THROWS_AS(nice_ticks(NAN, 1, 5), SpecError);
}

TEST_CASE("text extent") {
  for (int f = 0; f < kFontCount; ++f) {
    CHECK(estimate_text_extent("", f, 10).width == 0);
    const double one = estimate_text_extent("abc", f, 11).width;
    CHECK(estimate_text_extent("abcabc", f, 11).width == doctest::Approx(2 * one));
    const auto raw = oracle::read_font(f);
    const double want = (raw.advances.at('a') + raw.advances.at('b') + raw.advances.at('c')) * 11 * (96.0 / 72.0) / 1000;
    CHECK(one == doctest::Approx(want).epsilon(1e-12));
    CHECK(estimate_text_extent("x", f, 11).height ==
          doctest::Approx((raw.ascent + raw.descent) * 11 * (96.0 / 72.0) / 1000));
  }
}

TEST_CASE("text extent is monotone in length") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int f = static_cast<int>(rng.uniform_int(0, kFontCount - 1));
    std::string s;
    double last = 0;
    for (int i = 0; i < 30; ++i) {
      s += static_cast<char>(rng.uniform_int(32, 126));
      const double w = estimate_text_extent(s, f, 9).width;
      REQUIRE(w >= last);
      last = w;
    }
  }
}

TEST_CASE("missing glyphs fall back to the average advance") {
  const std::size_t before = missing_glyph_count();
  const double w = estimate_text_extent("\xc3\xa9", 0, 10).width;
  CHECK(missing_glyph_count() == before + 1);
  CHECK(w == doctest::Approx(font(0).average_advance * 10 * kPxPerPt / 1000));
}

TEST_CASE("font metrics parser") {
  const auto m = parse_font_metrics("family Test\nweight bold\nascent 900\ndescent 200\nadvance 65 700\n");
  CHECK(m.family == "Test");
  CHECK(m.ascent == 900);
  CHECK(m.advances['A' - 32] == 700);
  CHECK(m.advances['B' - 32] == -1);
}

TEST_CASE("overlap basics") {
  const std::vector<Rect> disjoint{{0, 0, 10, 10}, {20, 0, 10, 10}};
  CHECK_FALSE(detect_label_overlap(disjoint));
  const std::vector<Rect> same{{5, 5, 10, 10}, {5, 5, 10, 10}};
  CHECK(detect_label_overlap(same));
  const std::vector<Rect> touching{{0, 0, 10, 10}, {10, 0, 10, 10}};
  CHECK_FALSE(detect_label_overlap(touching));
  CHECK_FALSE(detect_label_overlap(std::vector<Rect>{}));
}

TEST_CASE("overlap equals the pairwise scan and is order independent") {
  Rng rng(14);
  int positives = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t n = trial < 1000 ? 50 : 1 + rng.index(100);
    const double field = rng.uniform(50, 4000);
    std::vector<Rect> boxes;
    for (std::size_t i = 0; i < n; ++i) boxes.push_back(random_rect(rng, field));
    const bool want = oracle::any_overlap(boxes);
    REQUIRE(detect_label_overlap(boxes) == want);
    std::vector<Rect> reversed(boxes.rbegin(), boxes.rend());
    REQUIRE(detect_label_overlap(reversed) == want);
    positives += want;
  }
  CHECK(positives > 100);
  CHECK(positives < 4900);
}

TEST_CASE("10,000 sampled styles stay in range and cover every preset") {
  Rng rng(15);
  std::set<int> styles, fonts;
  for (int i = 0; i < 10'000; ++i) {
    const auto s = sample_style(rng);
    REQUIRE(s.in_range());
    for (int c : {s.color.r, s.color.g, s.color.b}) {
      REQUIRE(c >= 40);
      REQUIRE(c <= 200);
    }
    styles.insert(s.style_id);
    fonts.insert(s.font_id);
  }
  CHECK(styles.size() == 8);
  CHECK(fonts.size() == 9);
  CHECK(themes().size() == 8);
  Rng a(16), b(16);
  CHECK(sample_style(a) == sample_style(b));
}

TEST_CASE("style digest is stable and sensitive") {
  Rng rng(17);
  auto s = sample_style(rng);
  const auto d = style_digest(s);
  CHECK(d.size() == 8);
  CHECK(style_digest(s) == d);
  s.color.r = s.color.r == 40 ? 41 : 40;
  CHECK(style_digest(s) != d);
}

TEST_CASE("transform contract") {
  const DataWindow w{-3, 7, 100, 600};
  const Rect r{50, 30, 400, 300};
  const Transform tf(w, r);
  CHECK(tf.to_px({w.xmin, w.ymin}) == Point{r.x, r.bottom()});
  CHECK(tf.to_px({w.xmax, w.ymax}) == Point{r.right(), r.y});
  const Point mid = tf.to_px({(w.xmin + w.xmax) / 2, (w.ymin + w.ymax) / 2});
  CHECK(mid.x == doctest::Approx(r.x + r.width / 2));
  CHECK(mid.y == doctest::Approx(r.y + r.height / 2));
  Rng rng(18);
  for (int i = 0; i < 1000; ++i) {
    const Point p{rng.uniform(0, 800), rng.uniform(0, 800)};
    const Point back = tf.to_px(tf.to_data(p));
    REQUIRE(std::fabs(back.x - p.x) <= 1e-9);
    REQUIRE(std::fabs(back.y - p.y) <= 1e-9);
  }
}

TEST_CASE("text boxes") {
  TextItem t{"hello", TextRole::tick_x, {100, 50}, Anchor::start, 10, 0, 0};
  const Rect flat = text_box(t);
  CHECK(flat.x == doctest::Approx(100));
  CHECK(flat.width == doctest::Approx(estimate_text_extent("hello", 0, 10).width));
  t.align = Anchor::middle;
  CHECK(text_box(t).x == doctest::Approx(100 - flat.width / 2));
  t.align = Anchor::end;
  CHECK(text_box(t).right() == doctest::Approx(100));
  t.rotation_deg = 90;
  const Rect up = text_box(t);
  CHECK(up.width == doctest::Approx(flat.height));
  CHECK(up.height == doctest::Approx(flat.width));
}

TEST_CASE("bar data window") {
  const auto spec = simple_vbar(4);
  CHECK(data_window_for(spec) == DataWindow{-0.5, 3.5, 0, 13 * 1.05});
}

TEST_CASE("geometry keeps every label inside the figure and apart") {
  Rng rng(19);
  int built = 0;
  for (int i = 0; i < 300; ++i) {
    const auto style = sample_style(rng);
    const auto spec = simple_vbar(2 + rng.index(10));
    try {
      const Geometry g = compute_geometry(spec, style);
      ++built;
      std::vector<Rect> boxes;
      for (const auto& t : g.texts) {
        const Rect b = text_box(t);
        REQUIRE(g.figure.contains(b));
        boxes.push_back(b);
      }
      REQUIRE_FALSE(oracle::any_overlap(boxes));
      REQUIRE(g.figure.contains(g.axes_rect));
      REQUIRE(g.transform.to_px_x(g.data_window.xmin) == doctest::Approx(g.axes_rect.x));
    } catch (const LayoutError&) {
    }
  }
  CHECK(built > 250);
}

}
