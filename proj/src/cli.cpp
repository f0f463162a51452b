#include "especial/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "especial/generators.hpp"
#include "especial/json_io.hpp"
#include "especial/render.hpp"

namespace especial {

namespace {

enum Exit { kOk = 0, kFailed = 1, kMalformed = 2 };

// Unreadable files are malformed input for the exit-code contract.
class UnreadableFile : public Error {
 public:
  explicit UnreadableFile(const std::string& path)
      : Error("UnreadableFile", "cannot read " + path) {}
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnreadableFile(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

FamilyPair load_family_pair(const std::string& path) {
  return family_pair_from_json(parse_json_text(read_source(path)));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json violations_report(const ValidationError& e) {
  Json list = Json::array();
  for (const auto& v : e.violations()) list.push_back(to_json(v));
  return {{"valid", false}, {"violations", std::move(list)}};
}

struct Options {
  std::string file;
  std::string point;
  std::string out_prefix;
  std::string map_file;
  std::string map_out;
  std::string json_out;
  std::string kind = "grid";
  std::size_t n = 2;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool layout = false;
  RenderOptions render;
  bool no_hulls = false, no_cells = false, no_leaves = false, no_labels = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const FamilyPair fp = load_family_pair(o.file);
  emit(out, {{"valid", true},
             {"plus", fp.plus().size()},
             {"minus", fp.minus().size()},
             {"nesting", to_json(nesting_report(fp))}});
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  emit(out, classification_table(load_family_pair(o.file)));
  return kOk;
}

int cmd_disc(const Options& o, std::ostream& out) {
  const FamilyPair fp = load_family_pair(o.file);
  if (o.layout) {
    emit(out, to_json(layout(fp, o.threads)));
  } else {
    emit(out, to_json(especial_disc(fp, o.threads)));
  }
  return kOk;
}

int cmd_straighten(const Options& o, std::ostream& out, std::ostream& err) {
  const FamilyPair fp = load_family_pair(o.file);
  PlanePoint p;
  try {
    p = parse_plane_point(o.point);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    emit(out, {{"error", "MalformedInput"}, {"message", e.what()}});
    return kMalformed;
  }
  emit(out, to_json(Straightener(fp, o.threads)(p)));
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const FamilyPair fp = load_family_pair(o.file);
  RenderOptions ro = o.render;
  ro.hulls = !o.no_hulls;
  ro.cells = ro.linked_region = !o.no_cells;
  ro.leaves = !o.no_leaves;
  ro.labels = !o.no_labels;
  const StraightenedDisc sd = layout(fp, o.threads);
  const std::string input_path = o.out_prefix + "-input.svg";
  const std::string straight_path = o.out_prefix + "-straightened.svg";
  write_file_atomically(input_path, render_input_svg(fp, linked_cells(fp, sd.disc, o.threads), ro));
  write_file_atomically(straight_path, render_straightened_svg(sd, ro));
  if (!o.json_out.empty()) write_file_atomically(o.json_out, to_json(sd).dump(2) + "\n");
  emit(out, {{"input", input_path}, {"straightened", straight_path}});
  return kOk;
}

int cmd_equivariance(const Options& o, std::ostream& out) {
  const FamilyPair fp = load_family_pair(o.file);
  const Json map_json = parse_json_text(read_source(o.map_file));
  std::optional<CircleMap> g;
  try {
    g = circle_map_from_json(map_json);
  } catch (const std::invalid_argument& e) {
    emit(out, {{"error", "InvalidMap"}, {"message", e.what()}});
    return kFailed;
  }
  const EquivarianceReport report = check_equivariance(fp, *g);
  emit(out, to_json(report));
  return report.passed() ? kOk : kFailed;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const auto kind = parse_gen_kind(o.kind);
  if (!kind) {
    err << "error: unknown generator kind \"" << o.kind << "\"\n";
    return kMalformed;
  }
  std::optional<Generated> g;
  try {
    g = generate({*kind, o.n, o.seed});
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }
  if (!o.map_out.empty()) {
    if (!g->map) {
      err << "error: generator \"" << o.kind << "\" has no associated map\n";
      return kMalformed;
    }
    write_file_atomically(o.map_out, to_json(*g->map).dump(2) + "\n");
  }
  emit(out, to_json(g->pair));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact especial family pairs on the circle", "especial"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a family pair and report nesting");
  validate->add_option("file", o.file, "FamilyPair JSON ('-' for stdin)")->required();

  auto* classify = app.add_subcommand("classify", "Classify every cross pair");
  classify->add_option("file", o.file)->required();

  auto* disc = app.add_subcommand("disc", "Compute the especial disc");
  disc->add_option("file", o.file)->required();
  disc->add_flag("--layout", o.layout, "Emit the straightened disc (layout and leaf graphs)");

  auto* straighten = app.add_subcommand("straighten", "Straighten one point of the closed disc");
  straighten->add_option("file", o.file)->required();
  straighten->add_option("--point", o.point, "\"x,y\" with rational coordinates")->required();

  auto* render = app.add_subcommand("render", "Write input and straightened SVG figures");
  render->add_option("file", o.file)->required();
  render->add_option("--out", o.out_prefix, "Output prefix")->required();
  render->add_option("--json", o.json_out, "Also write the straightened disc JSON here");
  render->add_option("--width", o.render.width)->check(CLI::PositiveNumber);
  render->add_option("--height", o.render.height)->check(CLI::PositiveNumber);
  render->add_flag("--no-hulls", o.no_hulls);
  render->add_flag("--no-cells", o.no_cells);
  render->add_flag("--no-leaves", o.no_leaves);
  render->add_flag("--no-labels", o.no_labels);

  auto* equivariance = app.add_subcommand("equivariance", "Check equivariance under a circle map");
  equivariance->add_option("file", o.file)->required();
  equivariance->add_option("--map", o.map_file, "CircleMap JSON")->required();

  auto* gen = app.add_subcommand("gen", "Generate a family pair");
  gen->add_option("--kind", o.kind, "grid|star|tripod|nested|symmetric|figure|random");
  gen->add_option("--n", o.n, "Size: grid n, star arity, nesting depth, random point count");
  gen->add_option("--seed", o.seed);
  gen->add_option("--map-out", o.map_out, "Write the symmetry of the symmetric fixture here");

  for (auto* sub : {disc, straighten, render}) {
    sub->add_option("--threads", o.threads)->check(CLI::Range(1u, 256u));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*disc) return cmd_disc(o, out);
    if (*straighten) return cmd_straighten(o, out, err);
    if (*render) return cmd_render(o, out);
    if (*equivariance) return cmd_equivariance(o, out);
    if (*gen) return cmd_gen(o, out, err);
  } catch (const Json::parse_error& e) {
    err << "error: malformed JSON at byte " << e.byte << '\n';
    emit(out, {{"error", "MalformedJson"}, {"position", e.byte}, {"message", e.what()}});
    return kMalformed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    emit(out, {{"error", e.kind()}, {"path", e.path}, {"message", e.what()}});
    return kMalformed;
  } catch (const UnreadableFile& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    emit(out, violations_report(e));
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    emit(out, {{"error", e.kind()}, {"message", e.what()}});
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    emit(out, {{"error", "Internal"}, {"message", e.what()}});
    return kFailed;
  }
  return kMalformed;
}

}  // namespace especial
