#pragma once

// Command-line front end for the edgetess library.
//
// Exit codes: 0 success / accepted / pass, 2 classify rejected,
// 3 verify failed, 64 invalid usage, 65 malformed input, 66 missing file.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "edgetess/edgetess.hpp"

namespace edgetess::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;

namespace detail {

inline ExtScalar parse_ratio(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.size() == 1) return ExtScalar::from_tokens(toks[0], "0", "0", "0");
  if (toks.size() == 4) return ExtScalar::from_tokens(toks[0], toks[1], toks[2], toks[3]);
  throw parse_error(0, "ratio must be one rational or four coefficients");
}

// A family name (Rectangle takes --ratio) or a polygon file path.
inline Polygon resolve_polygon(const std::string& what, const std::string& ratio) {
  if (auto tag = parse_tag(what)) {
    std::optional<ExtScalar> r;
    if (*tag == FamilyTag::Rectangle) r = parse_ratio(ratio);
    return canonical_polygon(*tag, r);
  }
  return load_polygon(what);
}

inline std::string catalog_file_name(FamilyTag t) {
  std::string name(tag_name(t));
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return name + ".svg";
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polygons that generate edge tessellations: enumerate, classify, tile, verify, render.", "edgetess"};
  app.require_subcommand(1);

  int e = 0;
  auto* solve = app.add_subcommand("solve", "Nonnegative (a,b,c,d) counts of 30/45/60/90 angles for an e-gon");
  solve->add_option("e", e, "edge count, 3..6")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Angle multisets over {30,45,60,90,120} for an e-gon");
  enumerate->add_option("e", e, "edge count, 3..6")->required();

  std::string file;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the polygon in a file");
  classify_cmd->add_option("file", file, "polygon file")->required();

  std::string target;
  std::string ratio = "1";
  int generations = 4;
  std::string out_path;
  RenderStyle style;
  auto* tile = app.add_subcommand("tile", "Expand a family or polygon file by edge reflections and render SVG");
  tile->add_option("target", target, "family name or polygon file")->required();
  tile->add_option("--generations", generations, "reflection depth")->capture_default_str();
  tile->add_option("--ratio", ratio, "Rectangle aspect ratio")->capture_default_str();
  tile->add_option("--out", out_path, "output SVG path")->required();
  tile->add_option("--scale", style.scale, "pixels per unit")->capture_default_str();
  tile->add_option("--stroke-width", style.stroke_width, "stroke width in pixels")->capture_default_str();
  tile->add_flag("--labels", style.label_vertices, "label seed vertices with their angles");

  bool list_defects = false;
  auto* verify_cmd = app.add_subcommand("verify", "Expand and verify the patch is locally an edge tiling");
  verify_cmd->add_option("target", target, "family name or polygon file")->required();
  verify_cmd->add_option("--generations", generations, "reflection depth")->capture_default_str();
  verify_cmd->add_option("--ratio", ratio, "Rectangle aspect ratio")->capture_default_str();
  verify_cmd->add_flag("--defects", list_defects, "list each defect, one per line");

  std::string out_dir;
  auto* catalog = app.add_subcommand("catalog", "Render all eight families to SVG");
  catalog->add_option("--out-dir", out_dir, "directory for the SVG files")->required();
  catalog->add_option("--generations", generations, "reflection depth")->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("edgetess");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*solve) {
      for (const auto& s : solve_system(e)) out << s.a << " " << s.b << " " << s.c << " " << s.d << "\n";
      return kExitOk;
    }
    if (*enumerate) {
      for (const auto& m : enumerate_multisets(e)) {
        const auto angles = m.sorted_angles();
        for (std::size_t i = 0; i < angles.size(); ++i) out << (i ? " " : "") << angles[i];
        out << "\n";
      }
      return kExitOk;
    }
    if (*classify_cmd) {
      const auto result = classify(load_polygon(file));
      out << to_string(result) << "\n";
      return accepted(result) ? kExitOk : kExitRejected;
    }
    if (*tile) {
      const Patch patch = expand(detail::resolve_polygon(target, ratio), generations);
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw file_not_found(out_path);
      f << render_svg(patch, style);
      out << "wrote " << out_path << " (" << patch.tiles.size() << " tiles, " << generations << " generations)\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      const auto report = verify(expand(detail::resolve_polygon(target, ratio), generations));
      out << format_summary(report);
      if (list_defects) out << format_defects(report);
      return report.pass ? kExitOk : kExitVerifyFailed;
    }
    if (*catalog) {
      std::filesystem::create_directories(out_dir);
      for (FamilyTag t : kAllFamilyTags) {
        std::optional<ExtScalar> r;
        if (t == FamilyTag::Rectangle) r = ExtScalar(Rational(1, 2));
        const Patch patch = expand(canonical_polygon(t, r), generations);
        const auto path = std::filesystem::path(out_dir) / detail::catalog_file_name(t);
        std::ofstream f(path, std::ios::binary);
        if (!f) throw file_not_found(path.string());
        f << render_svg(patch, style);
        out << path.string() << " " << patch.tiles.size() << " tiles\n";
      }
      return kExitOk;
    }
  } catch (const argument_out_of_range& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const file_not_found& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitNoInput;
  } catch (const parse_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDataError;
  } catch (const missing_parameter& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDataError;
  } catch (const std::filesystem::filesystem_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitNoInput;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace edgetess::cli
