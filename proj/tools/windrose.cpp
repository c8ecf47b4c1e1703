// windrose: command line front end.
//
//   windrose test <instance.json>
//   windrose draw <instance.json> [--format json|svg] [--style one-bend|straight] [--out path]
//   windrose generate <kind> [param] [--seed s] [--out path]
//   windrose verify <instance.json> <drawing.json>
//
// Exit codes: 0 yes / pass, 1 no / fail, 2 invalid input, 3 style unavailable,
// 4 internal error.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#ifdef WINDROSE_VENDORED_JSON
#include <json.hpp>
#else
#include <nlohmann/json.hpp>
#endif

#include "windrose/draw.hpp"
#include "windrose/error.hpp"
#include "windrose/generate.hpp"
#include "windrose/io.hpp"
#include "windrose/verify.hpp"

namespace {

using namespace windrose;
using json = nlohmann::ordered_json;

enum Exit : int { yes = 0, no = 1, invalid = 2, unavailable = 3, internal = 4 };

struct StyleUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<Instance> load_components(const std::string& path) {
  InstanceDocument doc = parse_instance(read_file(path));
  std::vector<Instance> out;
  for (const auto& part : split_components(doc)) out.push_back(to_instance(part));
  return out;
}

json certificate_json(const PlaneGraph& g, const Certificate& c) {
  json j;
  j["reason"] = std::string(c.reason());
  j["kind"] = std::string(to_string(c.kind));
  j["detail"] = c.detail;
  json vs = json::array();
  for (VertexId v : c.vertices) vs.push_back(g.name(v));
  j["vertices"] = vs;
  return j;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("WINDROSE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw error(errc::bad_params, "WINDROSE_SEED is not an unsigned integer");
    }
  }
  return 1;
}

int cmd_test(const std::string& input) {
  auto parts = load_components(input);
  json out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto r = windrose_pipeline(parts[i].graph, parts[i].q);
    if (!r.windrose_planar) {
      out["windrose_planar"] = false;
      out["certificate"] = certificate_json(parts[i].graph, *r.certificate);
      if (parts.size() > 1) out["component"] = i;
      std::cout << out.dump(2) << "\n";
      return no;
    }
  }
  out["windrose_planar"] = true;
  std::cout << out.dump(2) << "\n";
  return yes;
}

using AnyDrawing = std::variant<GridDrawing, RationalDrawing>;

AnyDrawing straight_drawing(const Instance& in) {
  const PlaneGraph& g = in.graph;
  AnyDrawing d;
  if (is_quasi_triangulated(g, in.q))
    d = quasi_triangulated_drawing(g, in.q);
  else if (has_three_tree_blocks(g))
    d = three_tree_block_drawing(g, in.q);
  else
    throw StyleUnavailable(
        "straight-line style needs a quasi-triangulated instance or blocks that are edges or "
        "planar 3-trees");
  bool ok = std::visit([&](const auto& dd) { return verify_drawing(g, in.q, dd).ok(); }, d);
  if (!ok) throw std::logic_error("straight-line drawing failed verification");
  return d;
}

int cmd_draw(const std::string& input, const std::string& format, const std::string& style,
             const std::string& out_path) {
  auto parts = load_components(input);
  std::vector<AnyDrawing> drawings;
  for (const auto& p : parts) {
    auto r = windrose_pipeline(p.graph, p.q);  // self-verifies
    if (!r.windrose_planar) {
      json out;
      out["windrose_planar"] = false;
      out["certificate"] = certificate_json(p.graph, *r.certificate);
      std::cerr << out.dump(2) << "\n";
      return no;
    }
    drawings.push_back(std::move(*r.drawing));
  }
  if (style == "straight")
    for (std::size_t i = 0; i < parts.size(); ++i) drawings[i] = straight_drawing(parts[i]);
  std::vector<std::string> rendered;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    rendered.push_back(std::visit(
        [&](const auto& dd) {
          return format == "svg" ? drawing_to_svg(p.graph, p.q, dd) : drawing_to_json(p.graph, dd);
        },
        drawings[i]));
  }
  if (rendered.size() == 1) {
    write_output(out_path, rendered[0]);
    return yes;
  }
  if (format == "svg") {
    // Components side by side, each in its own nested viewport.
    std::ostringstream svg;
    std::vector<std::pair<double, double>> sizes;
    double width = 0, height = 0;
    for (const auto& s : rendered) {
      auto attr = [&](const char* name) {
        auto at = s.find(std::string(name) + "=\"");
        return at == std::string::npos ? 0.0 : std::stod(s.substr(at + std::strlen(name) + 2));
      };
      sizes.emplace_back(attr("width"), attr("height"));
      width += sizes.back().first;
      height = std::max(height, sizes.back().second);
    }
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    double x = 0;
    for (std::size_t i = 0; i < rendered.size(); ++i) {
      std::string s = rendered[i];
      s.replace(0, 4, "<svg x=\"" + std::to_string(static_cast<long>(x)) + "\"");
      svg << s;
      x += sizes[i].first;
    }
    svg << "</svg>\n";
    write_output(out_path, svg.str());
    return yes;
  }
  json all;
  all["components"] = json::array();
  for (const auto& s : rendered) all["components"].push_back(json::parse(s));
  write_output(out_path, all.dump(2) + "\n");
  return yes;
}

int cmd_verify(const std::string& input, const std::string& drawing_path) {
  auto parts = load_components(input);
  json doc = json::parse(read_file(drawing_path), nullptr, false);
  if (doc.is_discarded()) throw error(errc::parse_error, "drawing is not valid JSON");
  std::vector<std::string> texts;
  if (doc.is_object() && doc.contains("components")) {
    for (const auto& c : doc["components"]) texts.push_back(c.dump());
  } else {
    texts.push_back(doc.dump());
  }
  if (texts.size() != parts.size())
    throw error(errc::missing_geometry, "drawing has " + std::to_string(texts.size()) +
                                           " components, instance has " + std::to_string(parts.size()));
  json out;
  out["ok"] = true;
  out["reports"] = json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    RationalDrawing d = drawing_from_json(parts[i].graph, texts[i]);
    VerificationReport rep = verify_drawing(parts[i].graph, parts[i].q, d);
    json r;
    r["planarity_ok"] = rep.planarity_ok;
    r["monotonicity_ok"] = rep.monotonicity_ok;
    r["quadrants_ok"] = rep.quadrants_ok;
    r["embedding_ok"] = rep.embedding_ok;
    json vs = json::array();
    for (const auto& v : rep.violations) {
      json jv;
      jv["kind"] = to_string(v.kind);
      jv["detail"] = v.detail;
      vs.push_back(jv);
    }
    r["violations"] = vs;
    out["reports"].push_back(r);
    if (!rep.ok()) out["ok"] = false;
  }
  std::cout << out.dump(2) << "\n";
  return out["ok"].get<bool>() ? yes : no;
}

int cmd_generate(const std::string& kind, const std::vector<std::string>& params,
                 std::optional<std::uint64_t> seed_flag, double keep, double relabel,
                 const std::string& out_path) {
  auto param = [&](const char* what) {
    if (params.size() != 1) throw error(errc::bad_params, kind + " needs one parameter: " + what);
    try {
      std::size_t used = 0;
      int v = std::stoi(params[0], &used);
      if (used != params[0].size()) throw std::invalid_argument(params[0]);
      return v;
    } catch (const std::exception&) {
      throw error(errc::bad_params, std::string(what) + " must be an integer");
    }
  };
  GeneratedInstance gi;
  if (kind == "delaunay") {
    gi = generate_delaunay(param("n"), resolve_seed(seed_flag));
  } else if (kind == "nested-triangles") {
    gi = generate_nested_triangles(param("k"));
  } else if (kind == "apollonian") {
    gi = generate_apollonian(param("n"), resolve_seed(seed_flag));
  } else if (kind == "random-small") {
    gi = generate_random_small(param("n"), resolve_seed(seed_flag), keep, relabel);
  } else {
    if (!params.empty()) throw error(errc::bad_params, kind + " takes no parameters");
    gi = generate_fixture(kind);
  }
  write_output(out_path, serialize_instance(to_document(gi.graph, gi.q)));
  return yes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Windrose planarity testing and drawing"};
  app.require_subcommand(1);

  std::string input, drawing_path, format = "json", style = "one-bend", out_path, kind;
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed;
  double keep = 0.5, relabel = 0.0;

  auto* test = app.add_subcommand("test", "Decide windrose planarity; prints a JSON verdict");
  test->add_option("input", input, "Instance JSON")->required();

  auto* draw = app.add_subcommand("draw", "Draw a windrose-planar instance");
  draw->add_option("input", input, "Instance JSON")->required();
  draw->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "svg"}));
  draw->add_option("--style", style, "Drawing style")->check(CLI::IsMember({"one-bend", "straight"}));
  draw->add_option("--out", out_path, "Output file (default stdout)");

  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  std::string kinds = "delaunay n | nested-triangles k | apollonian n | random-small n";
  for (const auto& f : fixture_names()) kinds += " | " + f;
  gen->add_option("kind", kind, kinds)->required();
  gen->add_option("params", params, "Size parameter");
  gen->add_option("--seed", seed, "Random seed (falls back to WINDROSE_SEED, then 1)");
  gen->add_option("--keep", keep, "random-small: probability of keeping a non-tree edge")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--relabel", relabel, "random-small: probability of relabeling an edge")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Check a drawing against an instance");
  ver->add_option("input", input, "Instance JSON")->required();
  ver->add_option("drawing", drawing_path, "Drawing JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : invalid;
  }

  try {
    if (*test) return cmd_test(input);
    if (*draw) return cmd_draw(input, format, style, out_path);
    if (*gen) return cmd_generate(kind, params, seed, keep, relabel, out_path);
    if (*ver) return cmd_verify(input, drawing_path);
  } catch (const StyleUnavailable& e) {
    std::cerr << "windrose: " << e.what() << "\n";
    return unavailable;
  } catch (const error& e) {
    if (e.code() == errc::block_structure_unsupported) {
      std::cerr << "windrose: " << e.what() << "\n";
      return unavailable;
    }
    json j;
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    std::cerr << j.dump(2) << "\n";
    return invalid;
  } catch (const std::logic_error& e) {
    std::cerr << "windrose: internal error: " << e.what() << "\n";
    return internal;
  } catch (const std::exception& e) {
    std::cerr << "windrose: " << e.what() << "\n";
    return invalid;
  }
  return invalid;
}
