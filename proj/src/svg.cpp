#include "demyanov/svg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace demyanov {

namespace {

struct Style {
  const char* fill;
  const char* stroke;
};

constexpr std::array<Style, 6> kPalette{{
    {"#9ecae1", "#3182bd"},
    {"#fdae6b", "#e6550d"},
    {"#a1d99b", "#31a354"},
    {"#bcbddc", "#756bb1"},
    {"#fc9272", "#de2d26"},
    {"#d9d9d9", "#636363"},
}};

// Exact rounding to the nearest 1/1000 (ties up), printed without exponent.
std::string fixed3(const Rational& v) {
  const Integer num = v.numerator() * 2000 + v.denominator();
  const Integer den = v.denominator() * 2;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  const bool negative = q < 0;
  const Integer mag = negative ? Integer(-q) : q;
  const Integer whole = mag / 1000;
  const Integer frac = mag % 1000;
  std::string out = (negative ? "-" : "") + whole.get_str();
  if (frac != 0) {
    std::string digits = frac.get_str();
    digits.insert(0, 3 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

struct Frame {
  Rational min_x, max_y, scale, offset_x, offset_y;

  Rational px(const Point& p) const { return offset_x + (p.x - min_x) * scale; }
  Rational py(const Point& p) const { return offset_y + (max_y - p.y) * scale; }
};

Frame make_frame(const Collection& omega, const RenderSpec& spec) {
  Rational min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const Polytope& p : omega) {
    for (const Point& v : p.vertices()) {
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
  }
  const Rational width = max_x - min_x;
  const Rational height = max_y - min_y;
  Rational span = std::max(width, height);
  if (span.sign() == 0) span = 1;
  const Rational inner = spec.panel_size - 2 * spec.margin;
  const Rational scale = inner / span;
  const Rational half(1, 2);
  return Frame{min_x, max_y, scale, spec.margin + (span - width) * scale * half,
               spec.margin + (span - height) * scale * half};
}

}  // namespace

std::string render_svg(const Collection& omega, const RenderSpec& spec) {
  if (spec.panel_size <= 2 * spec.margin || spec.margin < 0 || spec.columns < 1) {
    throw std::invalid_argument("render spec needs panel_size > 2 * margin >= 0 and columns >= 1");
  }
  const std::size_t n = omega.size();
  const std::size_t columns = std::min<std::size_t>(spec.columns, n);
  const std::size_t rows = (n + columns - 1) / columns;
  const std::size_t width = columns * spec.panel_size;
  const std::size_t height = rows * spec.panel_size;
  const Frame frame = make_frame(omega, spec);
  const Point origin{0, 0};

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  out += "<rect width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"white\"/>\n";

  const std::string ox = fixed3(frame.px(origin));
  const std::string oy = fixed3(frame.py(origin));
  const std::string edge = std::to_string(spec.panel_size);

  for (std::size_t i = 0; i < n; ++i) {
    const Polytope& p = omega.members()[i];
    const long palette = static_cast<long>(kPalette.size());
    const long slot = ((static_cast<long>(i) + spec.style_offset) % palette + palette) % palette;
    const Style& style = kPalette[static_cast<std::size_t>(slot)];
    const std::size_t col = i % columns;
    const std::size_t row = i / columns;

    out += "<g id=\"member-" + std::to_string(i) + "\" transform=\"translate(" +
           std::to_string(col * spec.panel_size) + "," + std::to_string(row * spec.panel_size) +
           ")\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + edge + "\" height=\"" + edge +
           "\" fill=\"none\" stroke=\"#bdbdbd\" stroke-width=\"1\"/>\n";
    out += "  <line x1=\"0\" y1=\"" + oy + "\" x2=\"" + edge + "\" y2=\"" + oy +
           "\" stroke=\"#d9d9d9\" stroke-width=\"0.5\"/>\n";
    out += "  <line x1=\"" + ox + "\" y1=\"0\" x2=\"" + ox + "\" y2=\"" + edge +
           "\" stroke=\"#d9d9d9\" stroke-width=\"0.5\"/>\n";

    const auto& vs = p.vertices();
    if (p.is_point()) {
      out += "  <circle cx=\"" + fixed3(frame.px(vs[0])) + "\" cy=\"" + fixed3(frame.py(vs[0])) +
             "\" r=\"3\" fill=\"" + style.stroke + "\"/>\n";
    } else if (p.is_segment()) {
      out += "  <line x1=\"" + fixed3(frame.px(vs[0])) + "\" y1=\"" + fixed3(frame.py(vs[0])) +
             "\" x2=\"" + fixed3(frame.px(vs[1])) + "\" y2=\"" + fixed3(frame.py(vs[1])) +
             "\" stroke=\"" + style.stroke + "\" stroke-width=\"2\"/>\n";
    } else {
      out += "  <path d=\"";
      for (std::size_t j = 0; j < vs.size(); ++j) {
        out += (j ? " L " : "M ") + fixed3(frame.px(vs[j])) + " " + fixed3(frame.py(vs[j]));
      }
      out += " Z\" fill=\"" + std::string(style.fill) + "\" stroke=\"" + style.stroke +
             "\" stroke-width=\"1.5\"/>\n";
    }
    out += "  <text x=\"4\" y=\"12\" font-family=\"monospace\" font-size=\"10\">" +
           std::to_string(i + 1) + "</text>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace demyanov
