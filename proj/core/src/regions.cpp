#include "sextic/regions.hpp"

#include <sstream>
#include <stdexcept>

#include "sextic/cohomology.hpp"

namespace sextic {

namespace {

struct RegionStyle {
    RegionLabel label;
    char glyph;
    const char* color;
    const char* caption;
};

constexpr RegionStyle kStyles[] = {
    {RegionLabel::H0, '0', "#4daf4a", "h^0 != 0"},
    {RegionLabel::H1_upper, '1', "#377eb8", "h^1 != 0 (upper)"},
    {RegionLabel::H1_lower, 'i', "#a6cee3", "h^1 != 0 (lower)"},
    {RegionLabel::H2_upper, '2', "#e41a1c", "h^2 != 0 (upper)"},
    {RegionLabel::H2_lower, 'z', "#fb9a99", "h^2 != 0 (lower)"},
    {RegionLabel::H3, '3', "#984ea3", "h^3 != 0"},
    {RegionLabel::Zero, '.', "#e8e8e8", "all zero"},
};

const RegionStyle& style_of(RegionLabel r) {
    for (const auto& s : kStyles)
        if (s.label == r) return s;
    throw std::logic_error("regions: unknown label");
}

std::string render_ascii(long long bound) {
    std::ostringstream os;
    os << "cohomology regions of O(x1, x2) on [" << -bound << "," << bound << "]^2"
       << " (x1 right, x2 up)\n\n";
    for (long long x2 = bound; x2 >= -bound; --x2) {
        std::string num = std::to_string(x2);
        os << std::string(5 - num.size(), ' ') << num << " ";
        for (long long x1 = -bound; x1 <= bound; ++x1)
            os << style_of(figure1_region(x1, x2)).glyph;
        os << "\n";
    }
    os << "\nlegend:\n";
    for (const auto& s : kStyles) os << "  " << s.glyph << "  " << s.caption << "\n";
    os << "boundary lines: x1+x2+1=0, x1=-2, x2=-2, x1+x2+3=0\n";
    return os.str();
}

std::string render_svg(long long bound) {
    const long long B = bound;
    const long long cell = 16;
    const long long margin = 48;
    const long long grid = (2 * B + 1) * cell;
    const long long legend_w = 220;
    const long long width = 2 * margin + grid + legend_w;
    const long long height = 2 * margin + grid;

    // pixel of the center of lattice point (x1, x2)
    auto px = [&](long long x1) { return margin + (x1 + B) * cell + cell / 2; };
    auto py = [&](long long x2) { return margin + (B - x2) * cell + cell / 2; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    os << "<g>\n";
    for (long long x2 = B; x2 >= -B; --x2)
        for (long long x1 = -B; x1 <= B; ++x1) {
            const auto& s = style_of(figure1_region(x1, x2));
            os << "<rect x=\"" << px(x1) - cell / 2 + 1 << "\" y=\"" << py(x2) - cell / 2 + 1
               << "\" width=\"" << cell - 2 << "\" height=\"" << cell - 2 << "\" fill=\""
               << s.color << "\"/>\n";
        }
    os << "</g>\n";

    auto line = [&](long long x1a, long long x2a, long long x1b, long long x2b) {
        os << "<line x1=\"" << px(x1a) << "\" y1=\"" << py(x2a) << "\" x2=\"" << px(x1b)
           << "\" y2=\"" << py(x2b) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    };
    auto text = [&](long long x, long long y, const char* t) {
        os << "<text x=\"" << x << "\" y=\"" << y
           << "\" font-family=\"monospace\" font-size=\"12\">" << t << "</text>\n";
    };

    // positive half-axes bounding the h^0 quadrant, then the labeled lines
    line(0, 0, B, 0);
    line(0, 0, 0, B);
    line(-2, -B, -2, B);
    line(-B, -2, B, -2);
    line(-B, -1 + B, -1 + B, -B);  // x1 + x2 + 1 = 0
    line(-B, -3 + B, -3 + B, -B);  // x1 + x2 + 3 = 0

    text(px(B) + 6, py(0) + 4, "x1");
    text(px(0) - 4, py(B) - 8, "x2");
    text(px(-2) - 20, py(B) - 8, "x1=-2");
    text(px(-B) - 40, py(-2) + 16, "x2=-2");
    text(px(-B), py(-1 + B) - 10, "x1+x2+1=0");
    text(px(-3 + B) - 36, py(-B) + 22, "x1+x2+3=0");

    long long ly = margin;
    const long long lx = 2 * margin + grid - cell;
    for (const auto& s : kStyles) {
        os << "<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"12\" height=\"12\" fill=\""
           << s.color << "\" stroke=\"black\"/>\n";
        text(lx + 18, ly + 11, s.caption);
        ly += 22;
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_regions(long long bound, Format f) {
    if (bound < 1 || bound > 100)
        throw std::invalid_argument("render_regions: bound must be between 1 and 100");
    switch (f) {
        case Format::Ascii: return render_ascii(bound);
        case Format::Svg: return render_svg(bound);
        default: throw std::invalid_argument("regions format must be svg or ascii");
    }
}

}  // namespace sextic
