#include <doctest.h>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "tricontour/svg.hpp"

using namespace tricontour;
using testutil::error_code_of;
using testutil::error_message_of;

TEST_SUITE("svg") {

TEST_CASE("absolute polyline subpath") {
  const auto contours = parse_svg_path("M 0 0 L 1 0 L 1 1 Z");
  REQUIRE(contours.size() == 1);
  REQUIRE(contours[0].vertices.size() == 3);
  CHECK(contours[0].vertices[0] == cplx(0, 0));
  CHECK(contours[0].vertices[1] == cplx(1, 0));
  CHECK(contours[0].vertices[2] == cplx(1, 1));
}

TEST_CASE("relative commands and lowercase close") {
  const auto contours = parse_svg_path("m 1 1 l 2 0 l 0 2 z");
  REQUIRE(contours.size() == 1);
  const auto& v = contours[0].vertices;
  REQUIRE(v.size() == 3);
  CHECK(v[0] == cplx(1, 1));
  CHECK(v[1] == cplx(3, 1));
  CHECK(v[2] == cplx(3, 3));
}

TEST_CASE("horizontal and vertical lines") {
  const auto contours = parse_svg_path("M 0 0 H 2 V 2 h -2 v -1 Z");
  REQUIRE(contours.size() == 1);
  const auto& v = contours[0].vertices;
  REQUIRE(v.size() == 5);
  CHECK(v[1] == cplx(2, 0));
  CHECK(v[2] == cplx(2, 2));
  CHECK(v[3] == cplx(0, 2));
  CHECK(v[4] == cplx(0, 1));
}

TEST_CASE("implicit command repetition") {
  const auto a = parse_svg_path("M 0 0 L 1 0 1 1 Z");
  REQUIRE(a.size() == 1);
  CHECK(a[0].vertices.size() == 3);

  // after M, bare pairs continue as lines
  const auto b = parse_svg_path("M 0 0 1 0 1 1 Z");
  REQUIRE(b.size() == 1);
  CHECK(b[0].vertices == a[0].vertices);

  const auto c = parse_svg_path("m 0 0 1 0 0 1 z");
  REQUIRE(c.size() == 1);
  CHECK(c[0].vertices[2] == cplx(1, 1));
}

TEST_CASE("number formats") {
  const auto contours = parse_svg_path("M 0,0 L 1e1,+.5 L -2,4 Z");
  REQUIRE(contours.size() == 1);
  const auto& v = contours[0].vertices;
  CHECK(v[1] == cplx(10, 0.5));
  CHECK(v[2] == cplx(-2, 4));
}

TEST_CASE("two subpaths give two contours") {
  const auto contours =
      parse_svg_path("M 0 0 L 1 0 L 0 1 Z M 5 5 L 6 5 L 5 6 Z");
  REQUIRE(contours.size() == 2);
  CHECK(contours[1].vertices[0] == cplx(5, 5));
}

TEST_CASE("relative move after close starts from the subpath origin") {
  const auto contours =
      parse_svg_path("M 0 0 L 2 0 L 0 2 Z m 1 1 l 1 0 l 0 1 z");
  REQUIRE(contours.size() == 2);
  CHECK(contours[1].vertices[0] == cplx(1, 1));
  CHECK(contours[1].vertices[1] == cplx(2, 1));
  CHECK(contours[1].vertices[2] == cplx(2, 2));
}

TEST_CASE("cubic segments flatten into 16 chords") {
  const cplx p0(0, 0), p1(0, 1), p2(1, 1), p3(1, 0);
  const auto contours = parse_svg_path("M 0 0 C 0 1 1 1 1 0 Z");
  REQUIRE(contours.size() == 1);
  const auto& v = contours[0].vertices;
  REQUIRE(v.size() == 17);  // start + 16 chord ends
  CHECK(v.back() == p3);
  // the midpoint chord must agree with de Casteljau evaluation
  CHECK(std::abs(v[8] - testutil::de_casteljau_cubic(p0, p1, p2, p3, 0.5)) <= 1e-9);
  CHECK(std::abs(v[4] - testutil::de_casteljau_cubic(p0, p1, p2, p3, 0.25)) <= 1e-9);

  // relative form lands on the same points
  const auto rel = parse_svg_path("M 0 0 c 0 1 1 1 1 0 Z");
  REQUIRE(rel[0].vertices.size() == 17);
  for (std::size_t i = 0; i < 17; ++i) {
    CHECK(std::abs(rel[0].vertices[i] - v[i]) <= 1e-12);
  }
}

TEST_CASE("quadratic segments flatten into 16 chords") {
  const cplx p0(0, 0), p1(1, 2), p2(2, 0);
  const auto contours = parse_svg_path("M 0 0 Q 1 2 2 0 Z");
  REQUIRE(contours.size() == 1);
  const auto& v = contours[0].vertices;
  REQUIRE(v.size() == 17);
  CHECK(v.back() == p2);
  CHECK(std::abs(v[8] - testutil::de_casteljau_quadratic(p0, p1, p2, 0.5)) <= 1e-9);
}

TEST_CASE("a duplicated closing point is dropped") {
  const auto contours = parse_svg_path("M 0 0 L 1 0 L 1 1 L 0 0 Z");
  REQUIRE(contours.size() == 1);
  CHECK(contours[0].vertices.size() == 3);
}

TEST_CASE("parse errors carry codes and byte offsets") {
  CHECK(error_code_of([] { parse_svg_path("M 0 0 L 1 0 A 1 1 0 0 0 2 2 Z"); }) ==
        errc::unsupported_command);
  const std::string msg =
      error_message_of([] { parse_svg_path("M 0 0 L 1 0 A 1 1 0 0 0 2 2 Z"); });
  CHECK(msg.find("at byte 12") != std::string::npos);

  CHECK(error_code_of([] { parse_svg_path("M 0 0 S 1 1 2 2 Z"); }) ==
        errc::unsupported_command);
  CHECK(error_code_of([] { parse_svg_path("M 0 0 T 1 1 Z"); }) ==
        errc::unsupported_command);
  CHECK(error_code_of([] { parse_svg_path("M 0 0 L abc def Z"); }) ==
        errc::unsupported_command);

  CHECK(error_code_of([] { parse_svg_path("M 0 0 L 1 0 L 1 1"); }) ==
        errc::unclosed_subpath);
  CHECK(error_code_of([] { parse_svg_path("M 0 0 L 1 0 M 5 5 L 6 6 Z"); }) ==
        errc::unclosed_subpath);

  CHECK(error_code_of([] { parse_svg_path(""); }) == errc::empty_path);
  CHECK(error_code_of([] { parse_svg_path("   \n  "); }) == errc::empty_path);

  CHECK(error_code_of([] { parse_svg_path("L 1 1 Z"); }) ==
        errc::unsupported_command);
  CHECK(error_code_of([] { parse_svg_path("M 0 0 Z"); }) ==
        errc::degenerate_contour);
}

TEST_CASE("extract path data from a document") {
  const std::string doc =
      "<svg xmlns=\"http://www.w3.org/2000/svg\">\n"
      "<rect width=\"10\" height=\"10\"/>\n"
      "<path fill=\"none\" d=\"M 0 0 L 1 0 L 0 1 Z\"/>\n"
      "<path d='M 2 2 L 3 2 L 2 3 Z' stroke=\"red\"/>\n"
      "</svg>\n";
  const auto data = extract_path_data(doc);
  REQUIRE(data.size() == 2);
  CHECK(data[0] == "M 0 0 L 1 0 L 0 1 Z");
  CHECK(data[1] == "M 2 2 L 3 2 L 2 3 Z");
  CHECK(extract_path_data("<svg></svg>").empty());
}

TEST_CASE("emitted documents are deterministic and well formed") {
  SampledLoop square;
  square.samples = {cplx(0, 0), cplx(1, 0), cplx(1, 1), cplx(0, 1)};
  RenderOptions opts;
  const std::string svg = emit_svg({square}, opts);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<path d=\"M ") != std::string::npos);
  CHECK(svg.find(" Z\"/>") != std::string::npos);
  CHECK(svg.find("matrix(1 0 0 -1 0 800)") != std::string::npos);
  CHECK(svg == emit_svg({square}, opts));  // byte-identical

  SampledLoop other;
  other.samples = {cplx(2, 0), cplx(3, 0), cplx(2, 1), cplx(2.5, 0.5)};
  const std::string two = emit_svg({square, other}, opts);
  std::size_t count = 0;
  for (std::size_t p = two.find("<path"); p != std::string::npos;
       p = two.find("<path", p + 1)) {
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("fit centers and preserves aspect") {
  SampledLoop wide;  // bbox 4 x 2
  wide.samples = {cplx(0, 0), cplx(4, 0), cplx(4, 2), cplx(0, 2)};
  RenderOptions opts;
  opts.canvas_width = 100;
  opts.canvas_height = 100;
  opts.margin = 10;
  const FitTransform fit = compute_fit({wide}, opts);
  CHECK(fit.scale == doctest::Approx(20.0).epsilon(1e-12));  // 80 / 4
  const cplx center = fit.apply(cplx(2, 1));
  CHECK(std::abs(center - cplx(50, 50)) <= 1e-12);
  // corners stay inside the canvas
  const cplx corner = fit.apply(cplx(4, 2));
  CHECK(corner.real() <= 100.0);
  CHECK(corner.imag() <= 100.0 - 10.0 + 1e-9);
}

TEST_CASE("emit then parse is the identity on canvas-sized input") {
  SampledLoop loop;
  loop.samples = {cplx(0, 0), cplx(800, 0), cplx(800, 800), cplx(0, 800)};
  RenderOptions opts;
  opts.margin = 0.0;
  const std::string svg = emit_svg({loop}, opts);

  const auto data = extract_path_data(svg);
  REQUIRE(data.size() == 1);
  const auto contours = parse_svg_path(data[0]);
  REQUIRE(contours.size() == 1);
  REQUIRE(contours[0].vertices.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(contours[0].vertices[i] - loop.samples[i]) <= 1e-6);
  }

  // and a second emission of the re-parsed loop is byte-identical
  SampledLoop back;
  back.samples = contours[0].vertices;
  CHECK(emit_svg({back}, opts) == svg);
}

TEST_CASE("render option validation") {
  SampledLoop dot;
  dot.samples = {cplx(1, 1), cplx(2, 2), cplx(3, 1)};
  RenderOptions bad;
  bad.margin = 500;
  CHECK(error_code_of([&] { emit_svg({dot}, bad); }) == errc::invalid_parameter);
  bad = RenderOptions{};
  bad.samples_out = 32;
  CHECK(error_code_of([&] { emit_svg({dot}, bad); }) == errc::invalid_parameter);
  bad = RenderOptions{};
  bad.canvas_width = -1;
  CHECK(error_code_of([&] { emit_svg({dot}, bad); }) == errc::invalid_parameter);

  CHECK(error_code_of([&] { emit_svg({}, RenderOptions{}); }) == errc::empty_input);
  SampledLoop empty;
  CHECK(error_code_of([&] { emit_svg({empty}, RenderOptions{}); }) ==
        errc::empty_input);
}

}  // TEST_SUITE
