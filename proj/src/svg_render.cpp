#include "circlefft/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace circlefft {
namespace {

// Fixed-precision, trailing zeros trimmed, -0 normalized: the same value
// always serializes to the same bytes, which is what makes golden-file
// comparison of whole documents workable.
std::string format_number(double value) {
    if (value == 0.0) {
        value = 0.0;  // flatten -0
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    std::string text(buffer);
    const std::size_t dot = text.find('.');
    if (dot != std::string::npos) {
        std::size_t last = text.find_last_not_of('0');
        if (last == dot) {
            --last;  // drop the dot too
        }
        text.erase(last + 1);
    }
    return text;
}

std::string xml_escape(const std::string& raw) {
    std::string escaped;
    escaped.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': escaped += "&amp;"; break;
            case '<': escaped += "&lt;"; break;
            case '>': escaped += "&gt;"; break;
            case '"': escaped += "&quot;"; break;
            case '\'': escaped += "&apos;"; break;
            default: escaped += c;
        }
    }
    return escaped;
}

std::size_t codepoint_count(const std::string& utf8) {
    std::size_t count = 0;
    for (unsigned char c : utf8) {
        if ((c & 0xc0) != 0x80) {
            ++count;
        }
    }
    return count;
}

void check_style(const RenderStyle& style) {
    if (style.circle_radius <= 0.0 || style.panel_gap <= 0.0 || style.font_size <= 0.0 ||
        style.dot_radius <= 0.0) {
        throw std::invalid_argument("render: style dimensions must be positive");
    }
}

void emit_text(std::ostringstream& out, double x, double y, double font_size,
               const std::string& content, const char* css_class) {
    out << "  <text class=\"" << css_class << "\" x=\"" << format_number(x) << "\" y=\""
        << format_number(y) << "\" text-anchor=\"middle\" font-size=\""
        << format_number(font_size) << "\">" << xml_escape(content) << "</text>\n";
}

// One panel: outlined circle plus the placements' dots and labels. Points
// whose formatted coordinates agree share a dot and stack their labels
// upward, first placement closest to the dot.
void emit_panel(std::ostringstream& out, const std::vector<CirclePlacement>& placements,
                double cx, double cy, const RenderStyle& style) {
    out << "  <circle class=\"ring\" cx=\"" << format_number(cx) << "\" cy=\""
        << format_number(cy) << "\" r=\"" << format_number(style.circle_radius)
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    struct DotGroup {
        std::string x;
        std::string y;
        std::vector<std::string> labels;
    };
    std::vector<DotGroup> groups;
    std::map<std::pair<std::string, std::string>, std::size_t> group_index;

    for (const CirclePlacement& placement : placements) {
        const double display_angle = -placement.angle;
        const double distance = style.circle_radius * placement.radius;
        const double px = cx + distance * std::cos(display_angle);
        const double py = cy - distance * std::sin(display_angle);
        std::pair<std::string, std::string> key{format_number(px), format_number(py)};
        const auto found = group_index.find(key);
        if (found == group_index.end()) {
            group_index.emplace(key, groups.size());
            groups.push_back({key.first, key.second, {placement.label}});
        } else {
            groups[found->second].labels.push_back(placement.label);
        }
    }

    for (const DotGroup& group : groups) {
        out << "  <circle class=\"dot\" cx=\"" << group.x << "\" cy=\"" << group.y
            << "\" r=\"" << format_number(style.dot_radius) << "\"/>\n";
    }
    for (const DotGroup& group : groups) {
        const double base_y = std::strtod(group.y.c_str(), nullptr);
        const double base_x = std::strtod(group.x.c_str(), nullptr);
        for (std::size_t i = 0; i < group.labels.size(); ++i) {
            const double label_y = base_y - (style.dot_radius + 4.0) -
                                   static_cast<double>(i) * style.font_size;
            emit_text(out, base_x, label_y, style.font_size, group.labels[i], "label");
        }
    }
}

std::string document(double width, double height, const std::string& body) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(width)
        << "\" height=\"" << format_number(height) << "\" viewBox=\"0 0 "
        << format_number(width) << ' ' << format_number(height)
        << "\" font-family=\"sans-serif\">\n"
        << body << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_circle(const std::vector<CirclePlacement>& placements,
                          const RenderStyle& style) {
    if (placements.empty()) {
        throw std::invalid_argument("render_circle: placements must be nonempty");
    }
    check_style(style);

    // Panels in declaration order, left to right, one circle each.
    std::vector<std::vector<CirclePlacement>> panels;
    for (Panel panel : {Panel::full, Panel::even, Panel::odd}) {
        std::vector<CirclePlacement> members;
        for (const CirclePlacement& placement : placements) {
            if (placement.panel == panel) {
                members.push_back(placement);
            }
        }
        if (!members.empty()) {
            panels.push_back(std::move(members));
        }
    }

    const double radius = style.circle_radius;
    const double margin = radius / 2.0;
    const double width = 2.0 * margin +
                         static_cast<double>(panels.size()) * 2.0 * radius +
                         static_cast<double>(panels.size() - 1) * style.panel_gap;
    const double height = 2.0 * margin + 2.0 * radius;
    const double cy = margin + radius;

    std::ostringstream body;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const double cx = margin + radius + static_cast<double>(i) * (2.0 * radius + style.panel_gap);
        emit_panel(body, panels[i], cx, cy, style);
    }
    return document(width, height, body.str());
}

std::string render_decomposition(const DecompositionFigure& fig, const RenderStyle& style) {
    if (fig.n == 0 || fig.lhs.empty() || fig.even_panel.empty() || fig.odd_panel.empty()) {
        throw std::invalid_argument("render_decomposition: figure has empty panels");
    }
    check_style(style);

    const double radius = style.circle_radius;
    const double margin = radius / 2.0;
    const double conn_font = 1.2 * style.font_size;
    const double glyph_width = 0.62 * conn_font;

    const std::string title = "A_" + std::to_string(fig.k);
    const std::string sign = fig.combine_sign == CombineSign::plus ? "+" : "−";
    const std::string sign_text = sign + " " + fig.odd_factor_label;

    const double title_width = static_cast<double>(codepoint_count(title)) * glyph_width;
    const double eq_width = glyph_width;
    const double sign_width = static_cast<double>(codepoint_count(sign_text)) * glyph_width;

    const double cy = margin + radius;
    const double text_y = cy + 0.35 * conn_font;  // rough vertical centering

    std::ostringstream body;
    double cursor = margin;

    emit_text(body, cursor + title_width / 2.0, text_y, conn_font, title, "connector");
    cursor += title_width + style.panel_gap;

    emit_panel(body, fig.lhs, cursor + radius, cy, style);
    cursor += 2.0 * radius + style.panel_gap;

    emit_text(body, cursor + eq_width / 2.0, text_y, conn_font, "=", "connector");
    cursor += eq_width + style.panel_gap;

    emit_panel(body, fig.even_panel, cursor + radius, cy, style);
    cursor += 2.0 * radius + style.panel_gap;

    emit_text(body, cursor + sign_width / 2.0, text_y, conn_font, sign_text, "connector");
    cursor += sign_width + style.panel_gap;

    emit_panel(body, fig.odd_panel, cursor + radius, cy, style);
    cursor += 2.0 * radius + margin;

    return document(cursor, 2.0 * margin + 2.0 * radius, body.str());
}

}  // namespace circlefft
